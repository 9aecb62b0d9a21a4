"""
Class defines SakaiKasahara, the exponent-inversion scheme with keys
d_ID = 1/(s + H1(ID)) P2, in its Fujisaki-Okamoto (CCA) form.
"""
# == Local imports ==
from arithmetic import pair
from utils.errors import CiphertextRejected, PkgAbort
from utils.hashing import xor_bytes
from .scheme_base import (BYTES, POINT, Ciphertext, IbeScheme, MasterSecret,
                          ParamsBundle, UserKey)


class SakaiKasahara(IbeScheme):
    """
    Class for SK-IBE. The pairing value g = e(P1, P2) is published so that
    encryption needs no pairing.
    """
    scheme_id = "sk"
    title = "Sakai-Kasahara"
    message_domain = BYTES
    ciphertext_layout = (("U", POINT), ("V", BYTES), ("W", BYTES))
    identity_dependent_parts = ("U",)
    rejects_invalid = True

    def _setup(self, curve, rng, msg_bits, **options):
        s = rng.nonzero_below(curve.r)
        P1 = curve.generator
        public = {"P1": P1, "P2": P1, "Ppub": s * P1, "g": pair(P1, P1)}
        return (ParamsBundle(self.scheme_id, curve, public, msg_bits),
                MasterSecret(self.scheme_id, {"s": s}))

    def _extract(self, params, msk, identity, rng):
        t = params.zr(msk["s"]) + params.hashes.h1(identity)
        if t.is_zero():
            raise PkgAbort(f"sk: s + H1(ID) = 0 for {identity!r}, rerun setup")
        return UserKey(self.scheme_id, identity,
                       {"d": int(t.inverse()) * params["P2"]})

    def _q_a(self, params, identity):
        # Q_A = H1(ID) P1 + P_pub
        return params.hashes.h1(identity) * params["P1"] + params["Ppub"]

    def _encrypt(self, params, identity, message, rng):
        H = params.hashes
        sigma = rng.random_bytes(params.msg_bytes)
        r = H.h3_star(sigma, message)
        U = r * self._q_a(params, identity)
        V = xor_bytes(sigma, H.h2(params["g"] ** r))
        W = xor_bytes(message, H.h4(sigma))
        return Ciphertext(self.scheme_id, {"U": U, "V": V, "W": W})

    def _decrypt(self, params, key, ciphertext):
        H = params.hashes
        U = ciphertext["U"]
        sigma = xor_bytes(ciphertext["V"], H.h2(pair(U, key["d"])))
        message = xor_bytes(ciphertext["W"], H.h4(sigma))
        r = H.h3_star(sigma, message)
        if r * self._q_a(params, key.identity) != U:
            raise CiphertextRejected(self.scheme_id)
        return message

    def key_is_valid(self, params, key):
        # e(Q_A, d) = g
        return pair(self._q_a(params, key.identity), key["d"]) == params["g"]
