"""
Class defines Waters, the full-domain commutative-blinding scheme in
Naccache's compact variant: the hashed identity is cut into n words of
w bits, and V(ID) = u' + sum v_i u_i needs only n public points.
"""
# == Local imports ==
from arithmetic import pair, pairing_ratio
from utils.errors import ParameterError
from utils.hashing import hash_bytes
from .scheme_base import (GT, POINT, Ciphertext, IbeScheme, MasterSecret,
                          ParamsBundle, UserKey, sample_point)

DEFAULT_WORDS = 4
DEFAULT_WORD_BITS = 32


def identity_words(identity: bytes, n_words: int, word_bits: int) -> list[int]:
    """
    Function hashes an identity to n_words * word_bits bits and splits the
    digest into big-endian words.
    """
    total = n_words * word_bits
    digest = int.from_bytes(hash_bytes("H1|waters", [identity], (total + 7) // 8),
                            "big") >> (-total % 8)
    mask = (1 << word_bits) - 1
    return [(digest >> (word_bits * (n_words - 1 - i))) & mask
            for i in range(n_words)]


class Waters(IbeScheme):
    """
    Class for Waters-IBE: d = (a g2 + r V(ID), r g), C = (z^t M, t g, t V(ID)).
    """
    scheme_id = "waters"
    title = "Waters (Naccache)"
    message_domain = GT
    ciphertext_layout = (("c1", GT), ("c2", POINT), ("c3", POINT))
    identity_dependent_parts = ("c3",)

    def _setup(self, curve, rng, msg_bits, **options):
        n_words = options.get("n_words", DEFAULT_WORDS)
        word_bits = options.get("word_bits", DEFAULT_WORD_BITS)
        if n_words < 1 or word_bits < 1:
            raise ParameterError("waters needs at least one word of one bit")
        alpha = rng.nonzero_below(curve.r)
        g = curve.generator
        g1 = alpha * g
        g2 = sample_point(curve, rng)
        public = {"g": g, "g1": g1, "g2": g2, "u'": sample_point(curve, rng)}
        for i in range(n_words):
            public[f"u{i + 1}"] = sample_point(curve, rng)
        public["z"] = pair(g1, g2)
        params = ParamsBundle(self.scheme_id, curve, public, msg_bits,
                              {"n_words": n_words, "word_bits": word_bits})
        return params, MasterSecret(self.scheme_id, {"alpha_g2": alpha * g2})

    def identity_point(self, params: ParamsBundle, identity: bytes):
        """
        Method computes V(ID) = u' + sum v_i u_i.
        """
        words = identity_words(identity, params.options["n_words"],
                               params.options["word_bits"])
        V = params["u'"]
        for i, word in enumerate(words):
            V = V + word * params[f"u{i + 1}"]
        return V

    def _extract(self, params, msk, identity, rng):
        r = rng.nonzero_below(params.curve.r)
        V = self.identity_point(params, identity)
        return UserKey(self.scheme_id, identity,
                       {"d1": msk["alpha_g2"] + r * V, "d2": r * params["g"]})

    def _encrypt(self, params, identity, message, rng):
        t = rng.nonzero_below(params.curve.r)
        V = self.identity_point(params, identity)
        return Ciphertext(self.scheme_id, {"c1": params["z"] ** t * message,
                                           "c2": t * params["g"],
                                           "c3": t * V})

    def _decrypt(self, params, key, ciphertext):
        # M = c1 e(d2, c3) / e(d1, c2)
        ratio = pairing_ratio(key["d2"], ciphertext["c3"], key["d1"],
                              ciphertext["c2"])
        return ciphertext["c1"] * ratio

    def key_is_valid(self, params, key):
        # e(g, d1) = z e(d2, V(ID))
        V = self.identity_point(params, key.identity)
        return pair(params["g"], key["d1"]) == \
            params["z"] * pair(key["d2"], V)
