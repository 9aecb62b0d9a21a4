"""
Module defines GtElement and the pairing engine: Miller's algorithm over
the divisor D_Q = [Q + S] - [S], the Tate pairing with its final
exponentiation, the shared-loop quotient of two pairings and the
pairing-based DDH decider.

Denominator elimination is not applied: every line and vertical is
evaluated at both support points of D_Q.
"""
# == Standard Library imports ==
import logging
from dataclasses import dataclass, field

# == Local imports ==
from utils.drbg import Drbg
from utils.errors import PairingError
from utils.hashing import hash_bytes
from .curve import CurveParams, CurvePoint, distortion, ec_add, lift
from .curve import random_point
from .field import ExtElement, ext_inv, ext_mul, ext_pow_uncounted_exp
from .ledger import OpLedger, composite, current_ledger, tick

logger = logging.getLogger(__name__)

# fresh auxiliary points tried before a pairing input is declared degenerate
AUX_POINT_RETRIES = 16


class GtElement:
    """
    Class for an element of the order-r subgroup of F_{p^k}^*.
    """
    __slots__ = ("value", "order")

    def __init__(self, value: ExtElement, order: int):
        self.value = value
        self.order = order

    @classmethod
    def identity(cls, curve: CurveParams) -> "GtElement":
        return cls(curve.ext.one(), curve.r)

    def __mul__(self, other: "GtElement") -> "GtElement":
        return GtElement(ext_mul(self.value, other.value), self.order)

    def __truediv__(self, other: "GtElement") -> "GtElement":
        return GtElement(ext_mul(self.value, ext_inv(other.value)), self.order)

    def __pow__(self, e: int) -> "GtElement":
        return GtElement(self.value ** (e % self.order), self.order)

    def inverse(self) -> "GtElement":
        return GtElement(ext_inv(self.value), self.order)

    def is_one(self) -> bool:
        return self.value.is_one()

    def in_subgroup(self) -> bool:
        with OpLedger():
            return ext_pow_uncounted_exp(self.value, self.order).is_one()

    def to_bytes(self) -> bytes:
        return self.value.to_bytes()

    @classmethod
    def from_bytes(cls, curve: CurveParams, data: bytes) -> "GtElement":
        width = curve.field.byte_length
        if len(data) != curve.k * width:
            raise PairingError("bad GT element length")
        coeffs = [int.from_bytes(data[i * width:(i + 1) * width], "big")
                  for i in range(curve.k)]
        return cls(ExtElement(curve.ext, coeffs), curve.r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GtElement):
            return NotImplemented
        return self.value == other.value

    def __hash__(self) -> int:
        return hash(("GT", self.value))

    def __repr__(self) -> str:
        return f"GtElement{self.value.coeffs}"


@dataclass
class MillerTrace:
    """
    Dataclass for one Miller iteration: accumulator halves, running point
    and the operations the iteration issued directly (a composite such as
    MulK counts once, without its constituents).
    """
    iteration: int
    bit: int
    f_num: ExtElement
    f_den: ExtElement
    T: CurvePoint
    ops: dict[str, int] = field(default_factory=dict)


class _ZeroEvaluation(Exception):
    pass


class _LineState:
    """
    Class holds one running point T = (X : Y : Z) in Jacobian coordinates
    (x = X/Z^2, y = Y/Z^3) and the two support points of D_Q. Lines and
    verticals are scaled by F_p factors, which the final exponentiation
    removes.
    """

    def __init__(self, P: CurvePoint, Q: CurvePoint, S: CurvePoint):
        self.P = P
        self.X, self.Y, self.Z = P.x, P.y, P.x * 0 + 1
        self.S = S
        self.QS = ec_add(Q, S)
        if self.QS.is_infinity:
            raise _ZeroEvaluation()

    @property
    def at_infinity(self) -> bool:
        return self.Z == 0

    def affine(self) -> CurvePoint:
        with OpLedger():
            if self.at_infinity:
                return self.P.curve.infinity
            z_inv = self.Z.inverse()
            zz_inv = z_inv.square()
            return CurvePoint(self.P.curve, self.X * zz_inv,
                              self.Y * zz_inv * z_inv)

    def _combine(self, line, vert):
        # f *= l(Q + S) v(S) / (v(Q + S) l(S))
        factors = []
        for X in (self.QS, self.S):
            l_val, v_val = line(X), vert(X)
            if l_val.is_zero() or v_val.is_zero():
                raise _ZeroEvaluation()
            factors.append((l_val, v_val))
        (l_qs, v_qs), (l_s, v_s) = factors
        return ext_mul(l_qs, v_s), ext_mul(v_qs, l_s)

    def _vertical(self, ZZ):
        # l = Z^2 x - X through T and -T; T becomes infinity
        X = self.X
        values = [pt.x * ZZ - X for pt in (self.QS, self.S)]
        if any(v.is_zero() for v in values):
            raise _ZeroEvaluation()
        self.Z = self.Z * 0
        return values[0], values[1]

    def double(self):
        """
        Method doubles T and evaluates the tangent and the vertical at both
        support points: 7 Mul + 7 Sq, plus 3k Mul per support point.
        """
        X, Y, Z = self.X, self.Y, self.Z
        if Y == 0:
            return self._vertical(Z.square())
        XX, YY, ZZ = X.square(), Y.square(), Z.square()
        YYYY = YY.square()
        a4 = Z * 0 + self.P.curve.a4
        M = 3 * XX + a4 * ZZ.square()
        S = 4 * (X * YY)
        X3 = M.square() - 2 * S
        Y3 = M * (S - X3) - 8 * YYYY
        Z3 = 2 * (Y * Z)
        Z3ZZ, MZZ, c = Z3 * ZZ, M * ZZ, M * X - 2 * YY
        Z3Z3 = Z3.square()
        num, den = self._combine(
            lambda pt: pt.y * Z3ZZ - pt.x * MZZ + c,
            lambda pt: pt.x * Z3Z3 - X3)
        self.X, self.Y, self.Z = X3, Y3, Z3
        return num, den

    def add(self):
        """
        Method adds the affine P to T (mixed addition) and evaluates the
        chord and the vertical at both support points.
        """
        X, Y, Z = self.X, self.Y, self.Z
        xp, yp = self.P.x, self.P.y
        ZZ = Z.square()
        H = xp * ZZ - X
        R = yp * (Z * ZZ) - Y
        if H == 0:
            if R == 0:
                return self.double()
            return self._vertical(ZZ)
        HH = H.square()
        HHH, V = H * HH, X * HH
        X3 = R.square() - HHH - 2 * V
        Y3 = R * (V - X3) - Y * HHH
        Z3 = Z * H
        c = R * xp - Z3 * yp
        Z3Z3 = Z3.square()
        num, den = self._combine(
            lambda pt: pt.y * Z3 - pt.x * R + c,
            lambda pt: pt.x * Z3Z3 - X3)
        self.X, self.Y, self.Z = X3, Y3, Z3
        return num, den


def _aux_point(curve: CurveParams, rng) -> CurvePoint:
    R = random_point(curve, rng)
    if curve.is_supersingular_form and curve.k == 2 and curve.p % 12 == 11:
        return distortion(R)
    return lift(R)


def _default_rng(*points: CurvePoint) -> Drbg:
    return Drbg(hash_bytes("pairing-aux", points, 32))


def _miller_step(states, num, den, bit):
    num, den = num.square(), den.square()
    for state in states:
        n, d = state.double()
        num, den = ext_mul(num, n), ext_mul(den, d)
    if bit == "1":
        for state in states:
            n, d = state.add()
            num, den = ext_mul(num, n), ext_mul(den, d)
    return num, den


def _run_miller(pairs: list[tuple[CurvePoint, CurvePoint]], r: int, rng,
                trace: list | None) -> tuple[ExtElement, ExtElement]:
    curve = pairs[0][0].curve
    one = curve.ext.one()
    for attempt in range(AUX_POINT_RETRIES):
        try:
            states = [_LineState(P, Q, _aux_point(curve, rng))
                      for P, Q in pairs]
            num, den = one, one
            for i, bit in enumerate(bin(r)[3:]):
                if trace is None:
                    num, den = _miller_step(states, num, den, bit)
                    continue
                # the iteration's own operations, composites counted once
                with OpLedger() as step:
                    num, den = _miller_step(states, num, den, bit)
                current_ledger().absorb(step)
                trace.append(MillerTrace(
                    iteration=i, bit=int(bit), f_num=num, f_den=den,
                    T=states[0].affine(), ops=step.snapshot().top_level()))
            if r > 1 and not all(s.at_infinity for s in states):
                raise PairingError("first pairing argument is not of order r")
            return num, den
        except _ZeroEvaluation:
            logger.debug("Miller loop hit a zero evaluation, attempt %d",
                         attempt + 1)
            if trace is not None:
                trace.clear()
    raise PairingError(
        f"no usable auxiliary point after {AUX_POINT_RETRIES} attempts")


def _check_inputs(P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    if P.over_extension:
        raise PairingError("first pairing argument must be an F_p point")
    return Q if Q.over_extension else lift(Q)


def miller_loop(P: CurvePoint, Q: CurvePoint, r: int | None = None,
                rng=None, trace: list | None = None) -> ExtElement:
    """
    Function evaluates f_{r,P} at D_Q = [Q + S] - [S] for a random
    auxiliary S, retrying a fresh S on any zero evaluation.
    :param P: Point of order r over F_p.
    :param Q: Point over F_{p^k} (F_p points are lifted unchanged).
    :param r: Loop length; defaults to the curve order r.
    :param rng: Generator for S; defaults to one derived from the inputs.
    :param trace: Optional list that receives a MillerTrace per iteration.
    :return: f_{r,P}(D_Q) in F_{p^k}.
    """
    r = P.curve.r if r is None else r
    Q = _check_inputs(P, Q)
    rng = rng or _default_rng(P, Q)
    with composite("MillerLoop"):
        num, den = _run_miller([(P, Q)], r, rng, trace)
        return ext_mul(num, ext_inv(den))


def final_exponentiation(f: ExtElement, curve: CurveParams) -> ExtElement:
    """
    Function raises f to (p^k - 1) / r. For k = 2 the (p - 1) part is a
    Frobenius over f, then the remaining power is (p + 1) / r.
    """
    p, k, r = curve.p, curve.k, curve.r
    with composite("FinalExp"):
        if k == 2:
            conj = ExtElement(f.ctx, (f.coeffs[0], -f.coeffs[1]))
            g = ext_mul(conj, ext_inv(f))
            return ext_pow_uncounted_exp(g, (p + 1) // r)
        return ext_pow_uncounted_exp(f, (p ** k - 1) // r)


def tate_pairing(P: CurvePoint, Q: CurvePoint, rng=None) -> GtElement:
    """
    Function computes t_r(P, Q) = f_{r,P}(D_Q)^((p^k - 1) / r) without any
    distortion; use pair() for the symmetric pairing.
    :param P: Point of order r over F_p.
    :param Q: Point over F_{p^k}.
    :return: GtElement.
    """
    curve = P.curve
    with composite("Pairing"):
        if P.is_infinity or Q.is_infinity:
            return GtElement.identity(curve)
        Q = _check_inputs(P, Q)
        rng = rng or _default_rng(P, Q)
        with composite("MillerLoop"):
            num, den = _run_miller([(P, Q)], curve.r, rng, None)
            f = ext_mul(num, ext_inv(den))
        return GtElement(final_exponentiation(f, curve), curve.r)


def pair(P: CurvePoint, Q: CurvePoint, rng=None) -> GtElement:
    """
    Function computes the symmetric pairing e(P, Q) = t_r(P, phi(Q)).
    """
    if Q.is_infinity or P.is_infinity:
        with composite("Pairing"):
            return GtElement.identity(P.curve)
    return tate_pairing(P, distortion(Q), rng)


def pairing_ratio(P1: CurvePoint, Q1: CurvePoint, P2: CurvePoint,
                  Q2: CurvePoint, rng=None) -> GtElement:
    """
    Function computes e(P1, Q1) / e(P2, Q2) as e(P1, Q1) * e(P2, -Q2) with
    one shared Miller loop and one final exponentiation. F_p points in the
    second slots are distorted (symmetric pairing); F_{p^k} points are used
    as given.
    :return: GtElement quotient.
    """
    curve = P1.curve
    if P1.curve.r != P2.curve.r:
        raise PairingError("pairing ratio operands of different orders")

    def second(Q):
        if Q.is_infinity or Q.over_extension:
            return Q
        return distortion(Q)

    with composite("PairingRatio"):
        pairs = [(P, second(Q)) for P, Q in ((P1, Q1), (P2, Q2))]
        pairs[1] = (pairs[1][0], -pairs[1][1])
        live = [(P, Q) for P, Q in pairs
                if not (P.is_infinity or Q.is_infinity)]
        if not live:
            return GtElement.identity(curve)
        rng = rng or _default_rng(*[pt for pq in live for pt in pq])
        tick("MillerLoop", len(live))
        num, den = _run_miller(live, curve.r, rng, None)
        f = ext_mul(num, ext_inv(den))
        return GtElement(final_exponentiation(f, curve), curve.r)


def ddh_decide(P: CurvePoint, A: CurvePoint, B: CurvePoint,
               C: CurvePoint) -> bool:
    """
    Function decides whether (P, aP, bP, cP) has c = ab, via
    e(P, C) = e(A, B) computed as one pairing ratio.
    """
    return pairing_ratio(P, C, A, B).is_one()


def gt_random(curve: CurveParams, rng) -> GtElement:
    """
    Function draws a uniform non-identity element of G_T (uncounted).
    """
    with OpLedger():
        while True:
            candidate = curve.ext.random(rng)
            if candidate.is_zero():
                continue
            value = ext_pow_uncounted_exp(candidate,
                                          (curve.p ** curve.k - 1) // curve.r)
            if not value.is_one():
                return GtElement(value, curve.r)
