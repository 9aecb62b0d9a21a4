"""
Class defines NovelHibe, the hierarchical extension of the single-pairing
IBE with identity components in Z_r (zero allowed) and constant-size
ciphertexts (u1 = s P_pub1, u2 = s g, c).

A level-j key for (I_1..I_j) holds
  d0    = (sum_m (I_m + s_m a_m) / l) g
  K     = (sum_{m<j} (s_m - 1) a_m) g      (corrections of the ancestors)
  c     = s_j - 1                          (correction of the own level)
  g^1/l and the delegation tail (a_m / l) g for m > j.
The user correction element is K + c (a_j g); decryption forms it with one
scalar multiplication. A child key is computed from the parent's d0, K, c,
g^1/l and tail alone.
"""
# == Standard Library imports ==
import logging
from dataclasses import dataclass
from typing import Any

# == Local imports ==
from arithmetic import CurveParams, CurvePoint, GtElement, pair, pairing_ratio
from utils.errors import DelegationError, DepthError, ParameterError
from utils.hashing import hash_to_int
from .scheme_base import (DEFAULT_MSG_BITS, GT, POINT, Ciphertext, IbeScheme,
                          MasterSecret, ParamsBundle, Seed, UserKey, as_rng)

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 3


def identity_component(value: Any, order: int) -> int:
    """
    Function maps one identity component into Z_r: integers are reduced
    (zero is a valid component), bytes and str are hashed.
    """
    if isinstance(value, bool):
        raise ParameterError("identity components must be int, bytes or str")
    if isinstance(value, int):
        return value % order
    if isinstance(value, str):
        value = value.encode("utf-8")
    if isinstance(value, (bytes, bytearray)) and value:
        return hash_to_int("H1|hibe", [bytes(value)], order)
    raise ParameterError(f"unusable identity component {value!r}")


def identity_tuple(identity: Any, order: int) -> tuple[int, ...]:
    if not isinstance(identity, (tuple, list)):
        identity = (identity,)
    if not identity:
        raise ParameterError("identity tuple must have at least one component")
    return tuple(identity_component(part, order) for part in identity)


@dataclass
class HibeKey(UserKey):
    """
    Dataclass for a HIBE private key; ``identity`` is the tuple of Z_r
    components and the level is its length.
    """

    @property
    def level(self) -> int:
        return len(self.identity)

    @property
    def tail(self) -> list[CurvePoint]:
        return self.components["tail"]


class NovelHibe(IbeScheme):
    """
    Class for the HIBE. ``extract`` accepts either the master secret or a
    parent HibeKey one level above the requested tuple.
    """
    scheme_id = "our-hibe"
    title = "Our HIBE"
    message_domain = GT
    ciphertext_layout = (("u1", POINT), ("u2", POINT), ("c", GT))

    def _setup(self, curve, rng, msg_bits, **options):
        depth = options.get("depth", DEFAULT_DEPTH)
        if depth < 1:
            raise DepthError(f"hierarchy depth must be >= 1, got {depth}")
        r = curve.r
        l = rng.nonzero_below(r)
        exponents = [rng.nonzero_below(r) for _ in range(depth)]
        g = curve.generator
        x = pair(g, g)
        public = {"g": g, "Ppub1": l * g, "x": x}
        for i, a in enumerate(exponents, start=1):
            public[f"y{i}"] = x ** a
            public[f"ga{i}"] = a * g
        secrets = {"l": l, **{f"a{i}": a
                              for i, a in enumerate(exponents, start=1)}}
        return (ParamsBundle(self.scheme_id, curve, public, msg_bits,
                             {"depth": depth}),
                MasterSecret(self.scheme_id, secrets))

    def normalize_identity(self, params, identity):
        ids = identity_tuple(identity, params.curve.r)
        if len(ids) > params.options["depth"]:
            raise DepthError(f"identity depth {len(ids)} exceeds the "
                             f"hierarchy depth {params.options['depth']}")
        return ids

    def key_from_master(self, params: ParamsBundle, msk: MasterSecret,
                        ids: tuple[int, ...], s: int) -> HibeKey:
        """
        Method builds a key directly from the master secret with a chosen
        randomizer s for the deepest level (s = 1 gives c = 0).
        """
        zr, g, j = params.zr, params["g"], len(ids)
        l_inv = zr(msk["l"]).inverse()
        a = [zr(msk[f"a{m}"]) for m in range(1, params.options["depth"] + 1)]
        exponent = sum((a[m] for m in range(j - 1)), zr(sum(ids))) + \
            a[j - 1] * zr(s)
        components = {
            "d0": int(exponent * l_inv) * g,
            "K": g.curve.infinity,
            "c": (s - 1) % params.curve.r,
            "g^1/l": int(l_inv) * g,
            "tail": [int(a[m] * l_inv) * g for m in range(j, len(a))],
        }
        return HibeKey(self.scheme_id, ids, components)

    def _extract(self, params, parent_or_msk, ids, rng):
        if isinstance(parent_or_msk, MasterSecret):
            while True:
                s = rng.nonzero_below(params.curve.r)
                key = self.key_from_master(params, parent_or_msk, ids, s)
                if not key["d0"].is_infinity:
                    return key
                logger.debug("our-hibe: degenerate d0 exponent, resampling")
        return self._delegate(params, parent_or_msk, ids, rng)

    def _delegate(self, params, parent: HibeKey, ids, rng) -> HibeKey:
        j = parent.level
        if len(ids) != j + 1 or ids[:j] != parent.identity:
            raise DelegationError(
                f"key for {parent.identity} cannot derive a key for {ids}")
        if not parent.tail:
            raise DelegationError("parent key has no delegation tail left")
        T_next, *rest = parent.tail
        G_l = parent["g^1/l"]
        while True:
            s = rng.nonzero_below(params.curve.r)
            d0 = parent["d0"] + ids[j] * G_l + s * T_next
            if not d0.is_infinity:
                break
            logger.debug("our-hibe: degenerate child exponent, resampling")
        # the parent's own correction joins the ancestors'
        K = self._add_nonzero(parent["K"], parent["c"] * params[f"ga{j}"])
        return HibeKey(self.scheme_id, ids,
                       {"d0": d0, "K": K, "c": (s - 1) % params.curve.r,
                        "g^1/l": G_l, "tail": rest})

    @staticmethod
    def _add_nonzero(P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        return P + Q

    def correction(self, params: ParamsBundle, key: HibeKey) -> CurvePoint:
        """
        Method forms the user correction element (sum_m (s_m - 1) a_m) g
        with one scalar multiplication.
        """
        own = key["c"] * params[f"ga{key.level}"]
        return self._add_nonzero(key["K"], own)

    def mask(self, params: ParamsBundle, ids: tuple[int, ...]) -> GtElement:
        """
        Method computes x^(sum I_m) y_1 ... y_j.
        """
        mask = params["x"] ** sum(ids)
        for m in range(1, len(ids) + 1):
            mask = mask * params[f"y{m}"]
        return mask

    def _encrypt(self, params, ids, message, rng):
        s = rng.nonzero_below(params.curve.r)
        # (x^(sum I) y_1..y_j)^s as j + 2 exponentiations in G_T
        blind = (params["x"] ** sum(ids)) ** s
        for m in range(1, len(ids) + 1):
            blind = blind * params[f"y{m}"] ** s
        parts = {"u1": s * params["Ppub1"], "u2": s * params["g"],
                 "c": message * blind}
        return Ciphertext(self.scheme_id, parts, {"depth": len(ids)})

    def _decrypt(self, params, key, ciphertext):
        depth = ciphertext.header.get("depth")
        if depth != key.level:
            raise DepthError(f"ciphertext for depth {depth} given to a "
                             f"level-{key.level} key")
        # m = c e(u2, K + c_j a_j g) / e(u1, d0), both pairings in one loop
        ratio = pairing_ratio(ciphertext["u2"], self.correction(params, key),
                              ciphertext["u1"], key["d0"])
        return ciphertext["c"] * ratio

    def key_is_valid(self, params, key):
        # e(P_pub1, d0) = x^(sum I) y_1..y_j e(g, K + c a_j g)
        rhs = self.mask(params, key.identity) * \
            pair(params["g"], self.correction(params, key))
        return pair(params["Ppub1"], key["d0"]) == rhs


def hibe_setup(profile: CurveParams, v: int, seed: Seed,
               msg_bits: int = DEFAULT_MSG_BITS) -> tuple[ParamsBundle,
                                                          MasterSecret]:
    return NovelHibe().setup(profile, seed, msg_bits, depth=v)


def hibe_extract(params: ParamsBundle, parent_or_msk: MasterSecret | HibeKey,
                 identity: Any, seed: Seed = 0) -> HibeKey:
    return NovelHibe().extract(params, parent_or_msk, identity, as_rng(seed))


def hibe_encrypt(params: ParamsBundle, identity: Any, m: GtElement,
                 seed: Seed) -> Ciphertext:
    return NovelHibe().encrypt(params, identity, m, seed)


def hibe_decrypt(params: ParamsBundle, key: HibeKey,
                 ciphertext: Ciphertext) -> GtElement:
    return NovelHibe().decrypt(params, key, ciphertext)
