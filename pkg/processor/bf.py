"""
Class defines BonehFranklin, the full (CCA) Boneh-Franklin scheme with the
Fujisaki-Okamoto transform: a random sigma masks the message, and the
encryption randomness r = H3(sigma, M) is re-derived and checked on
decryption.
"""
# == Local imports ==
from arithmetic import map_to_point, pair
from utils.errors import CiphertextRejected
from utils.hashing import xor_bytes
from .scheme_base import (BYTES, POINT, Ciphertext, IbeScheme, MasterSecret,
                          ParamsBundle, UserKey)


class BonehFranklin(IbeScheme):
    """
    Class for BF-IBE in the Galindo form: H1 = MapToPoint, H2 and H4 are
    n-bit masks, H3 maps (sigma, M) into Z_r^*.
    """
    scheme_id = "bf"
    title = "Boneh-Franklin (Galindo)"
    message_domain = BYTES
    ciphertext_layout = (("U", POINT), ("V", BYTES), ("W", BYTES))
    rejects_invalid = True

    def _setup(self, curve, rng, msg_bits, **options):
        s = rng.nonzero_below(curve.r)
        P1 = curve.generator
        Ppub = s * P1
        # symmetric setting: P2 = P1 and Q_pub = psi^{-1}(P_pub) = P_pub
        public = {"P1": P1, "P2": P1, "Ppub": Ppub, "Qpub": Ppub}
        return (ParamsBundle(self.scheme_id, curve, public, msg_bits),
                MasterSecret(self.scheme_id, {"s": s}))

    def _extract(self, params, msk, identity, rng):
        Q_id = map_to_point(identity, params.curve)
        return UserKey(self.scheme_id, identity, {"d": msk["s"] * Q_id})

    def _encrypt(self, params, identity, message, rng):
        H = params.hashes
        Q_id = map_to_point(identity, params.curve)
        sigma = rng.random_bytes(params.msg_bytes)
        r = H.h3_star(sigma, message)
        U = r * params["P1"]
        g_id = pair(params["Ppub"], Q_id)
        V = xor_bytes(sigma, H.h2(g_id ** r))
        W = xor_bytes(message, H.h4(sigma))
        return Ciphertext(self.scheme_id, {"U": U, "V": V, "W": W})

    def _decrypt(self, params, key, ciphertext):
        H = params.hashes
        U = ciphertext["U"]
        sigma = xor_bytes(ciphertext["V"], H.h2(pair(U, key["d"])))
        message = xor_bytes(ciphertext["W"], H.h4(sigma))
        r = H.h3_star(sigma, message)
        if r * params["P1"] != U:
            raise CiphertextRejected(self.scheme_id)
        return message

    def key_is_valid(self, params, key):
        # e(d, P1) = e(Q_ID, P_pub)
        Q_id = map_to_point(key.identity, params.curve)
        return pair(key["d"], params["P1"]) == pair(Q_id, params["Ppub"])
