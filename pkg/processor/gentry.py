"""
Class defines Gentry, the exponent-inversion scheme with a tight reduction
and ciphertext validity check. Keys are h_ID,i = 1/(a - ID) (h_i - r_i g)
for i = 1, 2, 3; the four pairings e(g, g), e(g, h_i) are computed once at
setup and published.
"""
# == Local imports ==
from arithmetic import pair
from utils.errors import CiphertextRejected, PkgAbort
from .scheme_base import (GT, POINT, Ciphertext, IbeScheme, MasterSecret,
                          ParamsBundle, UserKey)


class Gentry(IbeScheme):
    """
    Class for Gentry-IBE (CCA). Ciphertext (u, v, w, y) with
    beta = H(u, v, w) binding the validity tag y.
    """
    scheme_id = "gentry"
    title = "Gentry"
    message_domain = GT
    ciphertext_layout = (("u", POINT), ("v", GT), ("w", GT), ("y", GT))
    rejects_invalid = True

    def _setup(self, curve, rng, msg_bits, **options):
        r = curve.r
        alpha = rng.nonzero_below(r)
        etas = [rng.nonzero_below(r) for _ in range(3)]
        g = curve.generator
        public = {"g": g, "g1": alpha * g}
        for i, eta in enumerate(etas, start=1):
            public[f"h{i}"] = eta * g
        public["e(g,g)"] = pair(g, g)
        for i in range(1, 4):
            public[f"e(g,h{i})"] = pair(g, public[f"h{i}"])
        secrets = {"alpha": alpha, "eta1": etas[0], "eta2": etas[1],
                   "eta3": etas[2]}
        return (ParamsBundle(self.scheme_id, curve, public, msg_bits),
                MasterSecret(self.scheme_id, secrets))

    def _extract(self, params, msk, identity, rng):
        zr = params.zr
        id_ = params.hashes.h1(identity)
        if id_ == msk["alpha"]:
            raise PkgAbort(f"gentry: H1(ID) equals the master secret for "
                           f"{identity!r}, rerun setup")
        inv = zr(msk["alpha"] - id_).inverse()
        components = {}
        for i in range(1, 4):
            r_i = rng.randbelow(params.curve.r)
            components[f"r{i}"] = r_i
            # h_ID,i = ((eta_i - r_i) / (a - ID)) g
            components[f"h{i}"] = int(inv * zr(msk[f"eta{i}"] - r_i)) \
                * params["g"]
        return UserKey(self.scheme_id, identity, components)

    def _beta(self, params, u, v, w) -> int:
        return params.hashes.h3(u, v, w)

    def _encrypt(self, params, identity, message, rng):
        zr = params.zr
        s = rng.nonzero_below(params.curve.r)
        id_ = params.hashes.h1(identity)
        # u = s g1 - s ID g
        u = s * params["g1"] + int(-(zr(s) * zr(id_))) * params["g"]
        v = params["e(g,g)"] ** s
        w = message * (params["e(g,h1)"] ** s).inverse()
        beta = self._beta(params, u, v, w)
        y = params["e(g,h2)"] ** s * \
            params["e(g,h3)"] ** int(zr(s) * zr(beta))
        return Ciphertext(self.scheme_id, {"u": u, "v": v, "w": w, "y": y})

    def _decrypt(self, params, key, ciphertext):
        zr = params.zr
        u, v, w, y = (ciphertext[name] for name in ("u", "v", "w", "y"))
        beta = self._beta(params, u, v, w)
        check = pair(u, key["h2"] + beta * key["h3"]) * \
            v ** int(zr(key["r3"]) * zr(beta) + key["r2"])
        if check != y:
            raise CiphertextRejected(self.scheme_id)
        return w * pair(u, key["h1"]) * v ** key["r1"]

    def key_is_valid(self, params, key):
        # e(h_ID,i, g1 - ID g) = e(h_i, g) e(g, g)^(-r_i)
        id_ = params.hashes.h1(key.identity)
        base = params["g1"] - id_ * params["g"]
        return all(
            pair(key[f"h{i}"], base) ==
            params[f"e(g,h{i})"] * params["e(g,g)"] ** (-key[f"r{i}"])
            for i in range(1, 4))
