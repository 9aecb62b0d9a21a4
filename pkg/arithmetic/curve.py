"""
Module defines CurveParams and CurvePoint for short Weierstrass curves
y^2 = x^3 + a4*x + a6, the projective group law with NAF scalar
multiplication, the distortion map of the supersingular family and the
MapToPoint identity hash.

Points carry F_p coordinates (group G1) or F_{p^k} coordinates (images of
the distortion map); both run through the same formulas.
"""
# == Standard Library imports ==
import logging
from dataclasses import dataclass, field
from functools import cached_property

# == Third party imports ==
import gmpy2

# == Local imports ==
from utils.errors import CurveMismatchError, MapToPointError, NotOnCurveError
from utils.errors import ProfileError
from utils.hashing import hash_to_int
from .field import ExtContext, ExtElement, FieldContext, FieldElement
from .ledger import OpLedger, composite

logger = logging.getLogger(__name__)

# admissible-encoding retry cap for MapToPoint
MAP_TO_POINT_RETRIES = 256

# point counting by enumeration is only attempted below this prime
ENUMERATION_LIMIT = 1 << 20


@dataclass(frozen=True)
class CurveParams:
    """
    Dataclass for curve parameters. Group order is cof * r; r is the prime
    order of the pairing subgroup and k its embedding degree.
    """
    name: str
    p: int
    a4: int
    a6: int
    r: int
    cof: int
    k: int
    gx: int
    gy: int
    field: FieldContext = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not gmpy2.mpz(self.p).is_prime(30):
            raise ProfileError(f"{self.name}: p = {self.p} is not prime")
        if not gmpy2.mpz(self.r).is_prime(30):
            raise ProfileError(f"{self.name}: r = {self.r} is not prime")
        if (4 * self.a4 ** 3 + 27 * self.a6 ** 2) % self.p == 0:
            raise ProfileError(f"{self.name}: singular curve")
        if (self.p ** self.k - 1) % self.r != 0:
            raise ProfileError(f"{self.name}: r does not divide p^k - 1")
        for j in range(1, self.k):
            if (self.p ** j - 1) % self.r == 0:
                raise ProfileError(
                    f"{self.name}: embedding degree is {j}, not {self.k}")
        object.__setattr__(self, "field",
                           FieldContext(self.p, self.name, check_prime=False))
        order = self.group_order()
        if order is not None and order != self.cof * self.r:
            raise ProfileError(
                f"{self.name}: #E = {order} but cof * r = {self.cof * self.r}")
        x, y = self.gx % self.p, self.gy % self.p
        if (y * y - x ** 3 - self.a4 * x - self.a6) % self.p:
            raise ProfileError(f"{self.name}: generator is not on the curve")
        with OpLedger():
            if not ec_scalar_mul(self.r, self.generator).is_infinity:
                raise ProfileError(f"{self.name}: generator order is not r")
            if self.generator.is_infinity:
                raise ProfileError(f"{self.name}: generator is infinity")

    @property
    def is_supersingular_form(self) -> bool:
        """
        True for y^2 = x^3 + 1 with p = 2 mod 3, where #E = p + 1.
        """
        return self.a4 % self.p == 0 and self.a6 % self.p == 1 \
            and self.p % 3 == 2

    def group_order(self) -> int | None:
        if self.is_supersingular_form:
            return self.p + 1
        if self.p < ENUMERATION_LIMIT:
            return len(enumerate_points(self))
        return None

    @property
    def a4_elem(self) -> FieldElement:
        return self.field(self.a4)

    @property
    def a6_elem(self) -> FieldElement:
        return self.field(self.a6)

    @cached_property
    def ext(self) -> ExtContext:
        return ExtContext(self.field, self.k)

    @cached_property
    def scalars(self) -> FieldContext:
        """
        Counted Z_r arithmetic for scheme exponents.
        """
        return FieldContext(self.r, f"Z_r({self.name})", check_prime=False)

    @cached_property
    def zeta(self) -> ExtElement:
        """
        Primitive cube root of unity (-1 + sqrt(-3)) / 2 in F_{p^2}.
        """
        if not (self.is_supersingular_form and self.k == 2
                and self.p % 12 == 11):
            raise ProfileError(
                f"{self.name}: distortion map needs y^2 = x^3 + 1, p = 11 mod 12")
        p = self.p
        sqrt3 = pow(3, (p + 1) // 4, p)
        half = pow(2, -1, p)
        # sqrt(-3) = sqrt(3) * i since i^2 = -1
        return ExtElement(self.ext, ((-half) % p, sqrt3 * half % p))

    @cached_property
    def generator(self) -> "CurvePoint":
        return CurvePoint(self, self.field(self.gx), self.field(self.gy))

    @cached_property
    def infinity(self) -> "CurvePoint":
        return CurvePoint(self, None, None)

    def point(self, x, y) -> "CurvePoint":
        """
        Method builds a point and checks the curve equation.
        """
        if isinstance(x, int):
            x = self.field(x)
        if isinstance(y, int):
            y = self.field(y)
        pt = CurvePoint(self, x, y)
        if not pt.on_curve():
            raise NotOnCurveError(f"({x}, {y}) is not on {self.name}")
        return pt

    def __hash__(self) -> int:
        return hash((self.name, self.p, self.a4, self.a6, self.r))


class CurvePoint:
    """
    Class for an affine point; x = y = None encodes the point at infinity.
    """
    __slots__ = ("curve", "x", "y")

    def __init__(self, curve: CurveParams, x, y):
        self.curve = curve
        self.x = x
        self.y = y

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def over_extension(self) -> bool:
        return isinstance(self.x, ExtElement)

    def on_curve(self) -> bool:
        if self.is_infinity:
            return True
        with OpLedger():
            lhs = self.y * self.y
            rhs = self.x * self.x * self.x + self.x * self.curve.a4 \
                + self.curve.a6
        return lhs == rhs

    def __add__(self, other: "CurvePoint") -> "CurvePoint":
        return ec_add(self, other)

    def __neg__(self) -> "CurvePoint":
        if self.is_infinity:
            return self
        return CurvePoint(self.curve, self.x, -self.y)

    def __sub__(self, other: "CurvePoint") -> "CurvePoint":
        return ec_add(self, -other)

    def __mul__(self, d: int) -> "CurvePoint":
        return ec_scalar_mul(d, self)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        if self.is_infinity:
            return hash("O")
        return hash((self.x, self.y))

    def to_bytes(self) -> bytes:
        if self.is_infinity:
            return b"\x00"
        tag = b"\x05" if self.over_extension else b"\x04"
        return tag + self.x.to_bytes() + self.y.to_bytes()

    @classmethod
    def from_bytes(cls, curve: CurveParams, data: bytes) -> "CurvePoint":
        if data == b"\x00":
            return curve.infinity
        if not data or data[0] not in (4, 5):
            raise NotOnCurveError("unknown point encoding")
        body = data[1:]
        if data[0] == 4:
            width = curve.field.byte_length
            if len(body) != 2 * width:
                raise NotOnCurveError("bad point length")
            return curve.point(curve.field.from_bytes(body[:width]),
                               curve.field.from_bytes(body[width:]))
        width = curve.field.byte_length
        k = curve.k
        if len(body) != 2 * k * width:
            raise NotOnCurveError("bad extension point length")
        coords = [int.from_bytes(body[i * width:(i + 1) * width], "big")
                  for i in range(2 * k)]
        return curve.point(ExtElement(curve.ext, coords[:k]),
                           ExtElement(curve.ext, coords[k:]))

    def __repr__(self) -> str:
        if self.is_infinity:
            return "CurvePoint(O)"
        return f"CurvePoint({self.x!r}, {self.y!r})"


@dataclass
class ProjectivePoint:
    """
    Dataclass for (X : Y : Z) with x = X/Z, y = Y/Z; Z = 0 is infinity.
    """
    curve: CurveParams
    X: object
    Y: object
    Z: object

    @property
    def is_infinity(self) -> bool:
        return self.Z == 0

    @classmethod
    def from_affine(cls, P: CurvePoint) -> "ProjectivePoint":
        if P.is_infinity:
            one = P.curve.field.one()
            return cls(P.curve, P.curve.field.zero(), one, P.curve.field.zero())
        return cls(P.curve, P.x, P.y, P.x * 0 + 1)

    def to_affine(self) -> CurvePoint:
        if self.is_infinity:
            return self.curve.infinity
        z_inv = self.Z.inverse()
        return CurvePoint(self.curve, self.X * z_inv, self.Y * z_inv)

    def at_infinity(self) -> "ProjectivePoint":
        return ProjectivePoint(self.curve, self.Z * 0, self.Z * 0 + 1,
                               self.Z * 0)


def _check_curves(P, Q) -> None:
    if P.curve is not Q.curve and P.curve != Q.curve:
        raise CurveMismatchError(
            f"points on {P.curve.name} and {Q.curve.name}")


def projective_double(P: ProjectivePoint) -> ProjectivePoint:
    """
    Function doubles in homogeneous projective coordinates with the general
    a4 formula: 7 Mul + 5 Sq, a4 * Z^2 included even when a4 = 0.
    """
    with composite("ECDBL"):
        if P.is_infinity or P.Y == 0:
            return P.at_infinity()
        a4 = P.Z * 0 + P.curve.a4
        XX = P.X.square()
        ZZ = P.Z.square()
        w = a4 * ZZ + 3 * XX
        s = 2 * (P.Y * P.Z)
        ss = s.square()
        sss = s * ss
        R = P.Y * s
        RR = R.square()
        B = 2 * (P.X * R)
        h = w.square() - 2 * B
        X3 = h * s
        Y3 = w * (B - h) - 2 * RR
        return ProjectivePoint(P.curve, X3, Y3, sss)


def projective_add(P: ProjectivePoint, Q: ProjectivePoint) -> ProjectivePoint:
    """
    Function adds two projective points: 12 Mul + 2 Sq.
    """
    _check_curves(P, Q)
    with composite("ECADD"):
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        Y1Z2 = P.Y * Q.Z
        X1Z2 = P.X * Q.Z
        Z1Z2 = P.Z * Q.Z
        u = Q.Y * P.Z - Y1Z2
        v = Q.X * P.Z - X1Z2
        if v == 0:
            if u == 0:
                return projective_double(P)
            return P.at_infinity()
        uu = u.square()
        vv = v.square()
        vvv = v * vv
        R = vv * X1Z2
        A = uu * Z1Z2 - vvv - 2 * R
        X3 = v * A
        Y3 = u * (R - A) - vvv * Y1Z2
        Z3 = vvv * Z1Z2
        return ProjectivePoint(P.curve, X3, Y3, Z3)


def ec_add(P, Q):
    """
    Function returns P + Q. Affine inputs use the affine chord rule (one
    inversion); projective inputs use the projective formula.
    :param P: Left point.
    :param Q: Right point on the same curve.
    :return: Sum, in the representation of the inputs.
    """
    if isinstance(P, ProjectivePoint) and isinstance(Q, ProjectivePoint):
        return projective_add(P, Q)
    _check_curves(P, Q)
    with composite("ECADD"):
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        if P.x == Q.x:
            if P.y == Q.y and not P.y == 0:
                return ec_double(P)
            return P.curve.infinity
        lam = (Q.y - P.y) * (Q.x - P.x).inverse()
        x3 = lam.square() - P.x - Q.x
        y3 = lam * (P.x - x3) - P.y
        return CurvePoint(P.curve, x3, y3)


def ec_double(P):
    """
    Function returns [2]P; affine tangent rule or projective doubling.
    """
    if isinstance(P, ProjectivePoint):
        return projective_double(P)
    with composite("ECDBL"):
        if P.is_infinity or P.y == 0:
            return P.curve.infinity
        lam = (3 * P.x.square() + P.curve.a4) * (2 * P.y).inverse()
        x3 = lam.square() - 2 * P.x
        y3 = lam * (P.x - x3) - P.y
        return CurvePoint(P.curve, x3, y3)


def naf(d: int) -> list[int]:
    """
    Function returns the non-adjacent form of d >= 0, least significant
    digit first, digits in {-1, 0, 1}.
    """
    digits = []
    while d > 0:
        if d & 1:
            digit = 2 - (d % 4)
            d -= digit
        else:
            digit = 0
        digits.append(digit)
        d >>= 1
    return digits


def ec_scalar_mul(d: int, P: CurvePoint) -> CurvePoint:
    """
    Function computes [d]P with plain NAF, left to right, in projective
    coordinates. Records one ScalarMul with len(NAF) - 1 ECDBL and
    weight(NAF) - 1 ECADD nested inside, plus one Inv and 2 Mul to return
    to affine coordinates.
    :param d: Integer scalar (negative scalars negate P).
    :param P: Affine point.
    :return: Affine result.
    """
    with composite("ScalarMul"):
        d = int(d)
        if d < 0:
            d, P = -d, -P
        if d == 0 or P.is_infinity:
            return P.curve.infinity
        digits = naf(d)
        base = ProjectivePoint.from_affine(P)
        neg_base = ProjectivePoint.from_affine(-P)
        acc = base
        for digit in reversed(digits[:-1]):
            acc = projective_double(acc)
            if digit == 1:
                acc = projective_add(acc, base)
            elif digit == -1:
                acc = projective_add(acc, neg_base)
        return acc.to_affine()


def double_and_add(d: int, P: CurvePoint) -> CurvePoint:
    """
    Function computes [d]P by affine double-and-add; test oracle.
    """
    if d < 0:
        d, P = -d, -P
    result = P.curve.infinity
    addend = P
    while d:
        if d & 1:
            result = ec_add(result, addend)
        addend = ec_double(addend)
        d >>= 1
    return result


def in_subgroup(P: CurvePoint) -> bool:
    return ec_scalar_mul(P.curve.r, P).is_infinity


def distortion(P: CurvePoint) -> CurvePoint:
    """
    Function applies phi(x, y) = (zeta * x, y), moving a point of E(F_p)
    into E(F_{p^2}) outside the base-field subgroup.
    """
    if P.is_infinity:
        return P
    if P.over_extension:
        raise CurveMismatchError("distortion expects an F_p point")
    curve = P.curve
    return CurvePoint(curve, curve.zeta * P.x, curve.ext.embed(P.y))


def lift(P: CurvePoint) -> CurvePoint:
    """
    Function embeds an F_p point into E(F_{p^k}) unchanged.
    """
    if P.is_infinity or P.over_extension:
        return P
    ext = P.curve.ext
    return CurvePoint(P.curve, ext.embed(P.x), ext.embed(P.y))


def cube_root_x(curve: CurveParams, y: int) -> int:
    """
    Function solves x^3 = y^2 - 1 on y^2 = x^3 + 1; unique since p = 2 mod 3.
    Uncounted helper.
    """
    p = curve.p
    return pow((y * y - 1) % p, (2 * p - 1) // 3, p)


def random_point(curve: CurveParams, rng) -> CurvePoint:
    """
    Function draws a uniform point of E(F_p) \\ {O} (uncounted). Uses the
    cube-root parametrization on the supersingular family and rejection
    sampling elsewhere.
    """
    p = curve.p
    if curve.is_supersingular_form:
        y = rng.randbelow(p)
        return CurvePoint(curve, curve.field(cube_root_x(curve, y)),
                          curve.field(y))
    while True:
        x = rng.randbelow(p)
        rhs = (x ** 3 + curve.a4 * x + curve.a6) % p
        if rhs == 0:
            return CurvePoint(curve, curve.field(x), curve.field(0))
        if pow(rhs, (p - 1) // 2, p) != 1:
            continue
        y = _sqrt_mod(rhs, p)
        if rng.randbits(1):
            y = p - y
        return CurvePoint(curve, curve.field(x), curve.field(y))


def _sqrt_mod(a: int, p: int) -> int:
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # tonelli-shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def enumerate_points(curve: CurveParams) -> list[CurvePoint]:
    """
    Function lists every point of E(F_p), infinity first. Small p only.
    """
    p = curve.p
    if p >= ENUMERATION_LIMIT:
        raise ValueError(f"refusing to enumerate a curve over a {p.bit_length()}-bit field")
    roots: dict[int, list[int]] = {}
    for y in range(p):
        roots.setdefault(y * y % p, []).append(y)
    points = [CurvePoint(curve, None, None)]
    for x in range(p):
        rhs = (x ** 3 + curve.a4 * x + curve.a6) % p
        for y in roots.get(rhs, []):
            points.append(CurvePoint(curve, curve.field(x), curve.field(y)))
    return points


def map_to_point(identity: bytes, curve: CurveParams) -> CurvePoint:
    """
    Function hashes an identity to a point of order dividing r:
    y0 = H1(id), x0 = (y0^2 - 1)^((2p - 1) / 3), Q_ID = [cof](x0, y0).
    A fresh counter is hashed in whenever Q_ID is the point at infinity.
    The ledger records one MapToPoint holding 1 Exp and 1 ScalarMul.
    :param identity: Identity bytes, nonempty.
    :param curve: Curve of the form y^2 = x^3 + 1 with p = 2 mod 3.
    :return: Q_ID.
    """
    if not identity:
        raise MapToPointError("identity must be nonempty")
    if not curve.is_supersingular_form:
        raise MapToPointError(
            f"{curve.name}: MapToPoint needs y^2 = x^3 + 1 with p = 2 mod 3")
    F = curve.field
    with composite("MapToPoint"):
        for attempt in range(MAP_TO_POINT_RETRIES):
            y0 = F(hash_to_int("MapToPoint|H1", [identity, attempt], curve.p))
            x0 = (y0.square() - 1) ** ((2 * curve.p - 1) // 3)
            q_id = ec_scalar_mul(curve.cof, CurvePoint(curve, x0, y0))
            if not q_id.is_infinity:
                return q_id
            logger.debug("MapToPoint retry %d for %r", attempt + 1, identity)
    raise MapToPointError(
        f"no point after {MAP_TO_POINT_RETRIES} attempts for {identity!r}")
