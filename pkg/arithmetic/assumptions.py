"""
Module defines AssumptionInstance and the generators for the bilinear
Diffie-Hellman family of problems the schemes reduce to. Instances carry
their hidden solution for test oracles only.

The pairing is symmetric, so P1 = psi(P2) = P2 = g; tuples still list both
slots so their shape matches the problem statements.
"""
# == Standard Library imports ==
from dataclasses import dataclass, field
from typing import Any

# == Local imports ==
from utils.drbg import Drbg
from utils.errors import UnsupportedKindError
from .curve import CurveParams
from .ledger import OpLedger
from .pairing import GtElement, gt_random, pair

ASSUMPTION_KINDS = ("BDHP", "k-BDHIP", "k-BCAA1", "q-ABDHP", "k-wBDHI*")


@dataclass(frozen=True)
class AssumptionInstance:
    """
    Dataclass for a problem instance: the public tuple with labels, the
    hidden answer, and for decisional instances the challenge T and bit
    (1 when T is the real answer).
    """
    kind: str
    k: int
    labels: tuple[str, ...]
    public: tuple[Any, ...]
    answer: GtElement
    secrets: dict[str, Any] = field(default_factory=dict)
    challenge: GtElement | None = None
    bit: int | None = None

    def __len__(self) -> int:
        return len(self.public)


def _bdhp(curve: CurveParams, rng: Drbg, k: int):
    g = curve.generator
    a, b, c = (rng.nonzero_below(curve.r) for _ in range(3))
    public = (g, a * g, b * g, c * g)
    answer = pair(g, g) ** (a * b * c)
    return ("P", "aP", "bP", "cP"), public, answer, {"a": a, "b": b, "c": c}


def _bdhip(curve: CurveParams, rng: Drbg, k: int):
    g = curve.generator
    x = rng.nonzero_below(curve.r)
    powers = [pow(x, i, curve.r) * g for i in range(1, k + 1)]
    labels = ("P1", "P2") + tuple(f"x^{i}P2" for i in range(1, k + 1))
    answer = pair(g, g) ** pow(x, -1, curve.r)
    return labels, (g, g, *powers), answer, {"x": x}


def _bcaa1(curve: CurveParams, rng: Drbg, k: int):
    g, r = curve.generator, curve.r
    if k + 1 > r - 1:
        raise ValueError(f"k-BCAA1 needs k + 1 < r distinct h values, r = {r}")
    x = rng.nonzero_below(r)
    hs: list[int] = []
    while len(hs) < k + 1:
        h = rng.randbelow(r)
        if (h + x) % r and h not in hs:
            hs.append(h)
    h0, *rest = hs
    pairs = [(h, pow(h + x, -1, r) * g) for h in rest]
    labels = ("P1", "P2", "xP2", "h0") + tuple(
        f"(h{i}, 1/(h{i}+x)P2)" for i in range(1, k + 1))
    answer = pair(g, g) ** pow(x + h0, -1, r)
    public = (g, g, x * g, h0, *pairs)
    return labels, public, answer, {"x": x, "h": [h0, *rest]}


def _abdhp(curve: CurveParams, rng: Drbg, k: int):
    g, r = curve.generator, curve.r
    x = rng.nonzero_below(r)
    # x^{k+1} P2 is withheld; with it the problem is a single pairing
    exps = [i for i in range(1, 2 * k + 1) if i != k + 1]
    labels = ("P1", f"x^{k + 2}P1", "P2") + tuple(f"x^{i}P2" for i in exps)
    public = (g, pow(x, k + 2, r) * g, g) + tuple(pow(x, i, r) * g
                                                   for i in exps)
    answer = pair(g, g) ** pow(x, k + 1, r)
    return labels, public, answer, {"x": x}


def _wbdhi(curve: CurveParams, rng: Drbg, k: int):
    g, r = curve.generator, curve.r
    x = rng.nonzero_below(r)
    h = rng.nonzero_below(r) * g
    labels = ("g", "h") + tuple(f"g^(x^{i})" for i in range(1, k + 1))
    public = (g, h) + tuple(pow(x, i, r) * g for i in range(1, k + 1))
    answer = pair(g, h) ** pow(x, k + 1, r)
    return labels, public, answer, {"x": x}


_GENERATORS = {
    "BDHP": _bdhp,
    "k-BDHIP": _bdhip,
    "k-BCAA1": _bcaa1,
    "q-ABDHP": _abdhp,
    "k-wBDHI*": _wbdhi,
}


def assumption_instance(kind: str, curve: CurveParams, seed: int | bytes,
                        k: int = 1, decisional: bool = False) -> AssumptionInstance:
    """
    Function emits a problem instance exactly as the problem lists it.
    :param kind: One of ASSUMPTION_KINDS.
    :param curve: Curve profile.
    :param seed: Seed of the instance randomness.
    :param k: Size parameter, k >= 1 (ignored by BDHP).
    :param decisional: Also draw a challenge T, real with probability 1/2.
    :return: AssumptionInstance.
    """
    if kind not in _GENERATORS:
        raise UnsupportedKindError(
            f"unsupported assumption {kind!r}; expected one of {ASSUMPTION_KINDS}")
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = Drbg(seed)
    with OpLedger():
        labels, public, answer, secrets = _GENERATORS[kind](curve, rng, k)
        challenge = bit = None
        if decisional:
            bit = rng.randbits(1)
            challenge = answer if bit else gt_random(curve, rng)
    return AssumptionInstance(kind=kind, k=k, labels=labels, public=public,
                              answer=answer, secrets=secrets,
                              challenge=challenge, bit=bit)
