"""
Class defines BonehBoyen1, the commutative-blinding scheme BB1 with the
hash-based CCA check: t = s + H3(k, c, c0, c1) lets the recipient recover
s and re-encrypt.

In the symmetric setting the G2 generator P-hat is the G1 generator P.
"""
# == Local imports ==
from arithmetic import pair, pairing_ratio
from utils.errors import CiphertextRejected
from utils.hashing import xor_bytes
from .scheme_base import (BYTES, INT, POINT, Ciphertext, IbeScheme,
                          MasterSecret, ParamsBundle, UserKey)


class BonehBoyen1(IbeScheme):
    """
    Class for BB1-IBE: d0 = (w + (a H1(ID) + b) r) P-hat, d1 = r P-hat.
    """
    scheme_id = "bb1"
    title = "Boneh-Boyen 1"
    message_domain = BYTES
    ciphertext_layout = (("c", BYTES), ("c0", POINT), ("c1", POINT),
                         ("t", INT))
    identity_dependent_parts = ("c1",)
    rejects_invalid = True

    def _setup(self, curve, rng, msg_bits, **options):
        r = curve.r
        omega, alpha, beta = (rng.nonzero_below(r) for _ in range(3))
        P = P_hat = curve.generator
        public = {"P": P, "P1": alpha * P, "P2": beta * P,
                  "v0": pair(P, P_hat) ** omega}
        secrets = {"P_hat": P_hat, "omega": omega, "alpha": alpha,
                   "beta": beta}
        return (ParamsBundle(self.scheme_id, curve, public, msg_bits),
                MasterSecret(self.scheme_id, secrets))

    def _extract(self, params, msk, identity, rng):
        zr = params.zr
        r = zr(rng.nonzero_below(params.curve.r))
        h = params.hashes.h1(identity)
        exponent = (zr(msk["alpha"]) * zr(h) + msk["beta"]) * r + msk["omega"]
        P_hat = msk["P_hat"]
        return UserKey(self.scheme_id, identity,
                       {"d0": int(exponent) * P_hat, "d1": int(r) * P_hat})

    def _c1(self, params, h, s):
        # c1 = H1(ID) s P1 + s P2
        hs = params.zr(h) * params.zr(s)
        return int(hs) * params["P1"] + s * params["P2"]

    def _encrypt(self, params, identity, message, rng):
        H = params.hashes
        s = rng.nonzero_below(params.curve.r)
        k = params["v0"] ** s
        c = xor_bytes(message, H.h2(k))
        c0 = s * params["P"]
        c1 = self._c1(params, H.h1(identity), s)
        t = (s + H.h3(k, c, c0, c1)) % params.curve.r
        return Ciphertext(self.scheme_id, {"c": c, "c0": c0, "c1": c1, "t": t})

    def _decrypt(self, params, key, ciphertext):
        H = params.hashes
        c, c0, c1, t = (ciphertext[name] for name in ("c", "c0", "c1", "t"))
        k = pairing_ratio(c0, key["d0"], c1, key["d1"])
        s = (t - H.h3(k, c, c0, c1)) % params.curve.r
        if k != params["v0"] ** s or c0 != s * params["P"]:
            raise CiphertextRejected(self.scheme_id)
        return xor_bytes(c, H.h2(k))

    def key_is_valid(self, params, key):
        # e(P, d0) = v0 e(H1(ID) P1 + P2, d1)
        h = params.hashes.h1(key.identity)
        lhs = pair(params["P"], key["d0"])
        return lhs == params["v0"] * pair(h * params["P1"] + params["P2"],
                                          key["d1"])
