"""
Module defines prime-field and extension-field arithmetic. FieldContext and
ExtContext are explicit handles so several primes can coexist; every
multiplication, squaring, inversion and exponentiation reports to the
active OpLedger.

Additions, subtractions, negations and multiplication by a small integer
constant are not priced and are not counted.
"""
# == Standard Library imports ==
from typing import Iterable

# == Third party imports ==
import gmpy2

# == Local imports ==
from utils.errors import FieldMismatchError, ZeroInversionError
from .ledger import composite, tick


class FieldContext:
    """
    Class for the prime field F_p. Primality is checked once, here.
    """

    def __init__(self, p: int, label: str = "", check_prime: bool = True):
        if p < 2:
            raise ValueError(f"field modulus must be >= 2, got {p}")
        if check_prime and not gmpy2.mpz(p).is_prime(30):
            raise ValueError(f"field modulus {p} is not prime")
        self.p = p
        self.label = label or f"F_{p}"
        self.byte_length = (p.bit_length() + 7) // 8

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldContext) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("F", self.p))

    def __repr__(self) -> str:
        return f"FieldContext({self.label})"

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def random(self, rng) -> "FieldElement":
        return FieldElement(self, rng.randbelow(self.p))

    def from_bytes(self, data: bytes) -> "FieldElement":
        return FieldElement(self, int.from_bytes(data, "big"))


class FieldElement:
    """
    Class for an immutable residue of F_p.
    """
    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldContext, value: int):
        self.ctx = ctx
        self.value = int(value) % ctx.p

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx.p != self.ctx.p:
                raise FieldMismatchError(
                    f"operands from {self.ctx.label} and {other.ctx.label}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, ExtElement):
            return other + self
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.ctx, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, ExtElement):
            return (-other) + self
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.ctx, self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.ctx, v - self.value)

    def __neg__(self):
        return FieldElement(self.ctx, -self.value)

    def __mul__(self, other):
        if isinstance(other, ExtElement):
            return other * self
        if isinstance(other, int):
            return FieldElement(self.ctx, self.value * other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return fp_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return FieldElement(self.ctx, self.value * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, int):
            other = FieldElement(self.ctx, other)
        return fp_mul(self, fp_inv(other))

    def __pow__(self, e: int):
        if e < 0:
            return fp_exp(fp_inv(self), -e)
        return fp_exp(self, e)

    def square(self) -> "FieldElement":
        tick("Sq")
        return FieldElement(self.ctx, self.value * self.value)

    def inverse(self) -> "FieldElement":
        return fp_inv(self)

    def sqrt(self) -> "FieldElement":
        """
        Method returns a square root for p = 3 mod 4.
        :return: Root r with r^2 = self.
        """
        if self.ctx.p % 4 != 3:
            raise NotImplementedError("square roots only for p = 3 mod 4")
        root = fp_exp(self, (self.ctx.p + 1) // 4)
        if root.value * root.value % self.ctx.p != self.value:
            raise ValueError(f"{self.value} is not a square mod {self.ctx.p}")
        return root

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def to_bytes(self) -> bytes:
        return self.value.to_bytes(self.ctx.byte_length, "big")

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return other.ctx.p == self.ctx.p and other.value == self.value
        if isinstance(other, int):
            return self.value == other % self.ctx.p
        if isinstance(other, ExtElement):
            return other == self
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.value))

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.ctx.p})"


def _check_same(a: FieldElement, b: FieldElement) -> None:
    if a.ctx.p != b.ctx.p:
        raise FieldMismatchError(
            f"operands from {a.ctx.label} and {b.ctx.label}")


def fp_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """
    Function multiplies two residues; counts Sq when the operands are equal.
    :param a: Left operand.
    :param b: Right operand, same field.
    :return: a * b mod p.
    """
    _check_same(a, b)
    tick("Sq" if a.value == b.value else "Mul")
    return FieldElement(a.ctx, a.value * b.value)


def fp_inv(a: FieldElement) -> FieldElement:
    """
    Function inverts a nonzero residue with the extended gcd.
    :param a: Element to invert.
    :return: a^-1 mod p.
    """
    if a.value == 0:
        raise ZeroInversionError(f"inverse of zero in {a.ctx.label}")
    tick("Inv")
    return FieldElement(a.ctx, int(gmpy2.invert(a.value, a.ctx.p)))


def fp_exp(a: FieldElement, e: int) -> FieldElement:
    """
    Function raises a residue to a non-negative power, right-to-left binary.
    The ledger records one Exp, bit_length(e) - 1 Sq and popcount(e) Mul.
    :param a: Base.
    :param e: Exponent, e >= 0.
    :return: a^e mod p.
    """
    if e < 0:
        raise ValueError("exponent must be non-negative")
    p = a.ctx.p
    with composite("Exp"):
        result, base = 1, a.value
        nbits = e.bit_length()
        for i in range(nbits):
            if (e >> i) & 1:
                tick("Mul")
                result = result * base % p
            if i < nbits - 1:
                tick("Sq")
                base = base * base % p
    return FieldElement(a.ctx, result)


def fermat_inverse(a: FieldElement) -> FieldElement:
    """
    Function inverts through a^(p-2); kept as an independent oracle.
    """
    if a.value == 0:
        raise ZeroInversionError(f"inverse of zero in {a.ctx.label}")
    return FieldElement(a.ctx, pow(a.value, a.ctx.p - 2, a.ctx.p))


class ExtContext:
    """
    Class for F_{p^k} = F_p[x] / (x^k - beta), beta a non-residue of
    suitable order so the binomial is irreducible.
    """

    def __init__(self, base: FieldContext, k: int = 2, beta: int | None = None):
        if k < 2:
            raise ValueError("extension degree must be >= 2")
        if beta is None:
            if k == 2 and base.p % 4 == 3:
                beta = -1
            else:
                beta = _find_binomial_beta(base.p, k)
        self.base = base
        self.k = k
        self.beta = beta % base.p
        self.signed_beta = beta
        self.label = f"F_{base.p}^{k}"

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ExtContext) and other.base.p == self.base.p
                and other.k == self.k and other.beta == self.beta)

    def __hash__(self) -> int:
        return hash(("E", self.base.p, self.k, self.beta))

    def __repr__(self) -> str:
        return f"ExtContext({self.label}, beta={self.signed_beta})"

    def __call__(self, coeffs: Iterable[int]) -> "ExtElement":
        return ExtElement(self, coeffs)

    @property
    def order(self) -> int:
        return self.base.p ** self.k

    def zero(self) -> "ExtElement":
        return ExtElement(self, (0,) * self.k)

    def one(self) -> "ExtElement":
        return ExtElement(self, (1,) + (0,) * (self.k - 1))

    def embed(self, a: FieldElement | int) -> "ExtElement":
        return ExtElement(self, (int(a),) + (0,) * (self.k - 1))

    def random(self, rng) -> "ExtElement":
        return ExtElement(self, [rng.randbelow(self.base.p)
                                 for _ in range(self.k)])

    @property
    def byte_length(self) -> int:
        return self.k * self.base.byte_length


def _find_binomial_beta(p: int, k: int) -> int:
    # x^k - beta is irreducible when beta is not an l-th power for every
    # prime l | k (and k % 4 == 0 needs p = 1 mod 4); k = 2 covers our use
    if k != 2:
        raise NotImplementedError("only quadratic extensions are supported")
    for beta in range(-1, -p, -1):
        if pow(beta % p, (p - 1) // 2, p) == p - 1:
            return beta
    raise ValueError(f"no quadratic non-residue mod {p}")


class ExtElement:
    """
    Class for an immutable element of F_{p^k} in the polynomial basis.
    """
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: ExtContext, coeffs: Iterable[int]):
        values = tuple(int(c) % ctx.base.p for c in coeffs)
        if len(values) != ctx.k:
            raise ValueError(f"expected {ctx.k} coefficients, got {len(values)}")
        self.ctx = ctx
        self.coeffs = values

    def _check(self, other: "ExtElement") -> None:
        if other.ctx != self.ctx:
            raise FieldMismatchError(
                f"operands from {self.ctx.label} and {other.ctx.label}")

    def __add__(self, other):
        p = self.ctx.base.p
        if isinstance(other, ExtElement):
            self._check(other)
            return ExtElement(self.ctx, [(a + b) % p for a, b in
                                         zip(self.coeffs, other.coeffs)])
        if isinstance(other, (FieldElement, int)):
            c = list(self.coeffs)
            c[0] += int(other)
            return ExtElement(self.ctx, c)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return ExtElement(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (ExtElement, FieldElement, int)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ExtElement):
            return ext_mul(self, other)
        if isinstance(other, int):
            return ExtElement(self.ctx, [c * other for c in self.coeffs])
        if isinstance(other, FieldElement):
            # scaling by a base element costs k base multiplications
            tick("Mul", self.ctx.k)
            return ExtElement(self.ctx, [c * other.value for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ExtElement):
            return ext_mul(self, ext_inv(other))
        if isinstance(other, FieldElement):
            return self * fp_inv(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return ext_exp(ext_inv(self), -e)
        return ext_exp(self, e)

    def square(self) -> "ExtElement":
        return ext_sq(self)

    def inverse(self) -> "ExtElement":
        return ext_inv(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def in_base_field(self) -> bool:
        return not any(self.coeffs[1:])

    def to_bytes(self) -> bytes:
        width = self.ctx.base.byte_length
        return b"".join(c.to_bytes(width, "big") for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtElement):
            return other.ctx == self.ctx and other.coeffs == self.coeffs
        if isinstance(other, FieldElement):
            return (other.ctx.p == self.ctx.base.p and self.in_base_field()
                    and self.coeffs[0] == other.value)
        if isinstance(other, int):
            return self.in_base_field() and \
                self.coeffs[0] == other % self.ctx.base.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.base.p, self.coeffs))

    def __repr__(self) -> str:
        return f"ExtElement{self.coeffs} (mod {self.ctx.base.p})"


def _raw_mul(ctx: ExtContext, a: tuple, b: tuple) -> tuple:
    p, beta, k = ctx.base.p, ctx.beta, ctx.k
    if k == 2:
        # Karatsuba: three base multiplications
        tick("Mul", 3)
        v0 = a[0] * b[0]
        v1 = a[1] * b[1]
        mid = (a[0] + a[1]) * (b[0] + b[1]) - v0 - v1
        return ((v0 + beta * v1) % p, mid % p)
    tick("Mul", k * k)
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] += ai * bj
    for i in range(2 * k - 2, k - 1, -1):
        prod[i - k] += beta * prod[i]
    return tuple(c % p for c in prod[:k])


def _raw_sq(ctx: ExtContext, a: tuple) -> tuple:
    p, beta = ctx.base.p, ctx.beta
    if ctx.k == 2:
        # complex squaring: two base multiplications
        tick("Mul", 2)
        v = a[0] * a[1]
        c0 = (a[0] + a[1]) * (a[0] + beta * a[1]) - (1 + beta) * v
        return (c0 % p, (2 * v) % p)
    return _raw_mul(ctx, a, a)


def ext_mul(a: ExtElement, b: ExtElement) -> ExtElement:
    """
    Function multiplies two extension elements; records one MulK (and its
    base multiplications in the inclusive view). Equal operands are squared.
    :param a: Left operand.
    :param b: Right operand, same extension.
    :return: Reduced product.
    """
    a._check(b)
    if a.coeffs == b.coeffs:
        return ext_sq(a)
    with composite("MulK"):
        return ExtElement(a.ctx, _raw_mul(a.ctx, a.coeffs, b.coeffs))


def ext_sq(a: ExtElement) -> ExtElement:
    with composite("SqK"):
        return ExtElement(a.ctx, _raw_sq(a.ctx, a.coeffs))


def ext_inv(a: ExtElement) -> ExtElement:
    """
    Function inverts a nonzero extension element through its norm.
    """
    if a.is_zero():
        raise ZeroInversionError(f"inverse of zero in {a.ctx.label}")
    ctx = a.ctx
    p = ctx.base.p
    with composite("InvK"):
        if ctx.k == 2:
            a0, a1 = a.coeffs
            tick("Sq", 2)
            norm = (a0 * a0 - ctx.beta * a1 * a1) % p
            tick("Inv")
            inv = int(gmpy2.invert(norm, p))
            tick("Mul", 2)
            return ExtElement(ctx, (a0 * inv, -a1 * inv))
        return ExtElement(ctx, _raw_pow(ctx, a.coeffs, ctx.order - 2))


def _raw_pow(ctx: ExtContext, base: tuple, e: int) -> tuple:
    result = None
    nbits = e.bit_length()
    for i in range(nbits):
        if (e >> i) & 1:
            if result is None:
                result = base
            else:
                with composite("MulK"):
                    result = _raw_mul(ctx, result, base)
        if i < nbits - 1:
            with composite("SqK"):
                base = _raw_sq(ctx, base)
    return result if result is not None else ctx.one().coeffs


def ext_exp(a: ExtElement, e: int) -> ExtElement:
    """
    Function raises an extension element to e >= 0; records one Exp.
    """
    if e < 0:
        raise ValueError("exponent must be non-negative")
    with composite("Exp"):
        return ExtElement(a.ctx, _raw_pow(a.ctx, a.coeffs, e))


def ext_pow_uncounted_exp(a: ExtElement, e: int) -> ExtElement:
    """
    Function powers without the Exp tag; used inside the final
    exponentiation so only FinalExp shows at that level.
    """
    return ExtElement(a.ctx, _raw_pow(a.ctx, a.coeffs, e))


def schoolbook_ext_mul(a: ExtElement, b: ExtElement) -> ExtElement:
    """
    Function multiplies coefficient-wise then reduces; uncounted oracle.
    """
    ctx = a.ctx
    k, p = ctx.k, ctx.base.p
    prod = [0] * (2 * k - 1)
    for i in range(k):
        for j in range(k):
            prod[i + j] += a.coeffs[i] * b.coeffs[j]
    for i in range(2 * k - 2, k - 1, -1):
        prod[i - k] += ctx.beta * prod[i]
    return ExtElement(ctx, [c % p for c in prod[:k]])
