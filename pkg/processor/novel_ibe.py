"""
Class defines NovelIbe, the exponent-inversion IBE derived from BB2 whose
decryption needs a single pairing. Public key {P_pub1 = l g, x = e(g, g),
y = x^a}; the key of ID is (r_ID, D = ((a + ID) / (r_ID l)) g) and a
ciphertext is (u = s P_pub1, c = m (x^ID y)^s).

Also defines the functional entry points our_setup / our_extract /
our_encrypt / our_decrypt.
"""
# == Local imports ==
from arithmetic import CurveParams, GtElement, pair
from utils.errors import PkgAbort
from .scheme_base import (DEFAULT_MSG_BITS, GT, POINT, Ciphertext, IbeScheme,
                          MasterSecret, ParamsBundle, Seed, UserKey)


class NovelIbe(IbeScheme):
    """
    Class for the single-pairing IBE. Messages are elements of G_T; byte
    strings go through the KEM wrapper.
    """
    scheme_id = "our-ibe"
    title = "Our IBE"
    message_domain = GT
    ciphertext_layout = (("u", POINT), ("c", GT))

    def _setup(self, curve, rng, msg_bits, **options):
        l, a = rng.nonzero_below(curve.r), rng.nonzero_below(curve.r)
        g = curve.generator
        x = pair(g, g)
        public = {"g": g, "Ppub1": l * g, "x": x, "y": x ** a}
        return (ParamsBundle(self.scheme_id, curve, public, msg_bits),
                MasterSecret(self.scheme_id, {"l": l, "a": a}))

    def _extract(self, params, msk, identity, rng):
        zr = params.zr
        numerator = zr(msk["a"]) + params.hashes.h1(identity)
        if numerator.is_zero():
            raise PkgAbort(f"our-ibe: a + H1(ID) = 0 for {identity!r}, "
                           f"rerun setup")
        r_id = zr(rng.nonzero_below(params.curve.r))
        exponent = numerator * (r_id * zr(msk["l"])).inverse()
        return UserKey(self.scheme_id, identity,
                       {"r_id": int(r_id), "D": int(exponent) * params["g"]})

    def _encrypt(self, params, identity, message, rng):
        s = rng.nonzero_below(params.curve.r)
        mask = params["x"] ** params.hashes.h1(identity) * params["y"]
        return Ciphertext(self.scheme_id, {"u": s * params["Ppub1"],
                                           "c": message * mask ** s})

    def _decrypt(self, params, key, ciphertext):
        # m = c / e(u^r_ID, D)
        shared = pair(key["r_id"] * ciphertext["u"], key["D"])
        return ciphertext["c"] / shared

    def key_is_valid(self, params, key):
        # e(r_ID P_pub1, D) = x^ID y
        lhs = pair(key["r_id"] * params["Ppub1"], key["D"])
        return lhs == params["x"] ** params.hashes.h1(key.identity) * \
            params["y"]


def our_setup(profile: CurveParams, seed: Seed,
              msg_bits: int = DEFAULT_MSG_BITS) -> tuple[ParamsBundle,
                                                         MasterSecret]:
    return NovelIbe().setup(profile, seed, msg_bits)


def our_extract(params: ParamsBundle, msk: MasterSecret,
                identity: bytes | str, seed: Seed = 0) -> UserKey:
    return NovelIbe().extract(params, msk, identity, seed)


def our_encrypt(params: ParamsBundle, identity: bytes | str, m: GtElement,
                seed: Seed) -> Ciphertext:
    return NovelIbe().encrypt(params, identity, m, seed)


def our_decrypt(params: ParamsBundle, key: UserKey,
                ciphertext: Ciphertext) -> GtElement:
    return NovelIbe().decrypt(params, key, ciphertext)
