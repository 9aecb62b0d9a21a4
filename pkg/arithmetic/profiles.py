"""
Module defines the built-in curve profiles and their parameter files.

Every profile is the supersingular curve y^2 = x^3 + 1 over F_p with
p = cof * r - 1, cof a multiple of 12 (so p = 11 mod 12) and k = 2:
  tiny   p = 11, r = 3        brute-force oracles
  mini   p = 59, r = 5        smallest prime with a non-degenerate
                              symmetric pairing, exhaustive checks
  small  96-bit p, 64-bit r   fast randomized tests
  bench  256-bit p, 160-bit r benchmark profile
Every profile ships as <data>/curves/<name>.param. The files are
deterministic functions of the recipes below; a data directory without them
gets the curve generated in memory, and written back only when pinning is
switched on.
"""
# == Standard Library imports ==
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

# == Third party imports ==
import gmpy2

# == Local imports ==
from utils.config import load_settings
from utils.errors import ProfileError
from utils.hashing import hash_to_int
from utils.param_file import PARAM_SUFFIX, ParamFile
from .curve import CurveParams

logger = logging.getLogger(__name__)

PARAM_KEYS = ["p", "a4", "a6", "r", "cof", "k", "gx", "gy"]


@dataclass(frozen=True)
class ProfileRecipe:
    """
    Dataclass for how a profile is obtained: fixed (p, r, cof) or sizes.
    """
    name: str
    p_bits: int = 0
    r_bits: int = 0
    p: int = 0
    r: int = 0
    cof: int = 0


RECIPES: dict[str, ProfileRecipe] = {
    "tiny": ProfileRecipe("tiny", p=11, r=3, cof=4),
    "mini": ProfileRecipe("mini", p=59, r=5, cof=12),
    "small": ProfileRecipe("small", p_bits=96, r_bits=64),
    "bench": ProfileRecipe("bench", p_bits=256, r_bits=160),
}


def read_param_file(path: str | Path) -> CurveParams:
    """
    Function reads a key=value curve file into validated CurveParams.
    :param path: Path to a .param file.
    :return: CurveParams.
    """
    pf = ParamFile(path)
    raw = pf.load()
    values = pf.load_ints(PARAM_KEYS)
    return CurveParams(name=raw.get("name", pf.filepath.stem), **values)


def write_param_file(curve: CurveParams, path: str | Path) -> None:
    values: dict[str, int | str] = {"name": curve.name}
    values.update({key: getattr(curve, key) for key in PARAM_KEYS})
    ParamFile(path).write(
        values, header=f"y^2 = x^3 + {curve.a4}x + {curve.a6}; "
                       f"{curve.p.bit_length()}-bit p, "
                       f"{curve.r.bit_length()}-bit r")


def _seeded_prime(label: str, bits: int) -> int:
    top = 1 << (bits - 1)
    start = hash_to_int(f"profile|{label}", [bits], top) | top
    return int(gmpy2.next_prime(start))


def _affine_raw_mul(d: int, point: tuple[int, int] | None, p: int):
    # uncounted double-and-add on y^2 = x^3 + 1; None is infinity
    def add(P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        if P[0] == Q[0]:
            if (P[1] + Q[1]) % p == 0:
                return None
            lam = 3 * P[0] * P[0] * pow(2 * P[1], -1, p) % p
        else:
            lam = (Q[1] - P[1]) * pow(Q[0] - P[0], -1, p) % p
        x3 = (lam * lam - P[0] - Q[0]) % p
        return x3, (lam * (P[0] - x3) - P[1]) % p

    result = None
    while d:
        if d & 1:
            result = add(result, point)
        point = add(point, point)
        d >>= 1
    return result


def find_generator(p: int, r: int, cof: int) -> tuple[int, int]:
    """
    Function returns the first [cof](x, y), y = 0, 1, ..., that is not
    infinity; x is the unique cube root of y^2 - 1.
    """
    for y in range(p):
        x = pow((y * y - 1) % p, (2 * p - 1) // 3, p)
        G = _affine_raw_mul(cof, (x, y), p)
        if G is not None:
            return G
    raise ProfileError(f"no generator of order {r} over F_{p}")


def generate_profile(recipe: ProfileRecipe) -> CurveParams:
    """
    Function builds the curve a recipe describes, deterministically.
    """
    if recipe.p:
        p, r, cof = recipe.p, recipe.r, recipe.cof
    else:
        r = _seeded_prime(recipe.name, recipe.r_bits)
        cof = 12 * max(1, (1 << (recipe.p_bits - recipe.r_bits)) // 12)
        while True:
            p = cof * r - 1
            if cof % r and gmpy2.mpz(p).is_prime(30):
                break
            cof += 12
        logger.debug("profile %s: r=%d bits, p=%d bits, cof=%d",
                     recipe.name, r.bit_length(), p.bit_length(), cof)
    gx, gy = find_generator(p, r, cof)
    return CurveParams(name=recipe.name, p=p, a4=0, a6=1, r=r, cof=cof, k=2,
                       gx=gx, gy=gy)


@lru_cache(maxsize=None)
def _load_cached(key: str, curves_dir: str, pin: bool) -> CurveParams:
    if key in RECIPES:
        path = Path(curves_dir) / f"{key}{PARAM_SUFFIX}"
        if path.exists():
            return read_param_file(path)
        curve = generate_profile(RECIPES[key])
        if not pin:
            logger.info("profile %s generated in memory; not pinned to %s",
                        key, path)
            return curve
        try:
            write_param_file(curve, path)
        except OSError as exc:
            raise ProfileError(f"could not pin profile {key} to {path}: "
                               f"{exc}") from exc
        logger.info("profile %s pinned to %s", key, path)
        return curve
    path = Path(key)
    if not path.exists():
        raise ProfileError(
            f"unknown profile {key!r}: expected one of {sorted(RECIPES)} "
            f"or a {PARAM_SUFFIX} file")
    return read_param_file(path)


def load_profile(name_or_path: str, data_dir: str | Path | None = None,
                 pin: bool | None = None) -> CurveParams:
    """
    Function resolves a profile name or a parameter file path. A built-in
    profile without a parameter file is generated; it is written to the
    curves directory only when pinning is switched on.
    :param name_or_path: tiny | mini | small | bench, or a .param path.
    :param data_dir: Data directory override (default from settings).
    :param pin: Pinning override (default from settings).
    :return: CurveParams, cached per process.
    :raises ProfileError: Unknown profile, or a pin that cannot be written.
    """
    settings = load_settings(data_dir=data_dir, pin_profiles=pin)
    return _load_cached(str(name_or_path), str(settings.curves_dir),
                        settings.pin_profiles)
