"""
Class defines BonehBoyen2, the exponent-inversion scheme BB2 (CPA). The
identity is hashed into Z_r; messages live in G_T.
"""
# == Local imports ==
from arithmetic import pair
from .scheme_base import (GT, POINT, Ciphertext, IbeScheme, MasterSecret,
                          ParamsBundle, UserKey)


class BonehBoyen2(IbeScheme):
    """
    Class for BB2-IBE: key (r, d = -1/(a + Id + b r) P-hat) and ciphertext
    (Msg v^s, s Pa + s Id P, s Pb).
    """
    scheme_id = "bb2"
    title = "Boneh-Boyen 2"
    message_domain = GT
    ciphertext_layout = (("c0", GT), ("c1", POINT), ("c2", POINT))
    identity_dependent_parts = ("c1",)

    def _setup(self, curve, rng, msg_bits, **options):
        a, b = rng.nonzero_below(curve.r), rng.nonzero_below(curve.r)
        P = P_hat = curve.generator
        public = {"P": P, "Pa": a * P, "Pb": b * P, "v": pair(P, P_hat)}
        return (ParamsBundle(self.scheme_id, curve, public, msg_bits),
                MasterSecret(self.scheme_id, {"a": a, "b": b, "P_hat": P_hat}))

    def _extract(self, params, msk, identity, rng):
        zr = params.zr
        id_ = params.hashes.h1(identity)
        while True:
            r = rng.nonzero_below(params.curve.r)
            denominator = zr(msk["b"]) * zr(r) + msk["a"] + id_
            if not denominator.is_zero():
                break
        d = int(-denominator.inverse()) * msk["P_hat"]
        return UserKey(self.scheme_id, identity, {"r": r, "d": d})

    def _encrypt(self, params, identity, message, rng):
        s = rng.nonzero_below(params.curve.r)
        id_ = params.hashes.h1(identity)
        c0 = message * params["v"] ** s
        s_id = params.zr(s) * params.zr(id_)
        c1 = s * params["Pa"] + int(s_id) * params["P"]
        c2 = s * params["Pb"]
        return Ciphertext(self.scheme_id, {"c0": c0, "c1": c1, "c2": c2})

    def _decrypt(self, params, key, ciphertext):
        point = ciphertext["c1"] + key["r"] * ciphertext["c2"]
        return ciphertext["c0"] * pair(point, key["d"])

    def key_is_valid(self, params, key):
        # e(Pa + Id P + r Pb, d) v = 1
        id_ = params.hashes.h1(key.identity)
        point = params["Pa"] + id_ * params["P"] + key["r"] * params["Pb"]
        return (pair(point, key["d"]) * params["v"]).is_one()
