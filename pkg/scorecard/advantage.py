"""
Module defines AdvantageInputs and the closed-form adversary advantages of
the six compared schemes, evaluated in gmpy2 multiple precision so that
factors such as (1 - 2/p)^q_D with p ~ 2^256 are not rounded to one.
"""
# == Standard Library imports ==
from dataclasses import dataclass

# == Third party imports ==
import gmpy2

# == Local imports ==
from processor.registry import BENCHMARK_SCHEMES, SchemeId
from utils.drbg import Drbg
from utils.errors import ParameterError, UnsupportedKindError, ZeroInversionError

PRECISION_BITS = 1024

# expected ordering, smallest advantage first
ADVANTAGE_ORDER = (SchemeId.WATERS_NACCACHE, SchemeId.BF_GALINDO,
                   SchemeId.SAKAI_KASAHARA, SchemeId.GENTRY, SchemeId.BB1,
                   SchemeId.BB2)

FORMS = ("simplified", "full")


@dataclass(frozen=True)
class AdvantageInputs:
    """
    Dataclass for the reduction parameters. The per-oracle hash query
    counts q_h2, q_h3, q_h4 and q_h1 default to q_h.
    """
    eps: float
    q_h: int
    q_s: int
    q_d: int
    n: int
    p: int
    q_e: int = 0
    q_1: int = 0
    q_c: int = 0
    q: int = 1
    q_h1: int | None = None
    q_h2: int | None = None
    q_h3: int | None = None
    q_h4: int | None = None

    def __post_init__(self):
        if self.p <= 2:
            raise ParameterError(f"group order must exceed 2, got {self.p}")
        for name in ("q_h1", "q_h2", "q_h3", "q_h4"):
            if getattr(self, name) is None:
                object.__setattr__(self, name, self.q_h)

    def satisfies_ordering_constraint(self) -> bool:
        # q_S, q_D < q_H < 2^n and q_H << p
        return max(self.q_s, self.q_d) < self.q_h < 2 ** self.n < self.p


def _ctx():
    return gmpy2.local_context(gmpy2.context(), precision=PRECISION_BITS)


def _div(num, den, what: str):
    if den == 0:
        raise ZeroInversionError(f"advantage undefined: {what} is zero")
    return num / den


def _bf(x: AdvantageInputs, eps, form: str):
    survive = (1 - gmpy2.mpfr(2) / x.p) ** x.q_d
    if form == "simplified":
        return _div(eps, x.q_h3, "q_H3") * survive
    # full form, including the unexplained -3/6 term as printed
    inner = (_div(eps, x.q_h2, "q_H2") *
             (1 - _div(gmpy2.mpfr(x.q_e), x.q_h1, "q_H1")) + 1) * survive - 1
    return _div(inner, (x.q_h3 + x.q_h4) * x.q_h2,
                "(q_H3 + q_H4) q_H2") - gmpy2.mpfr(3) / 6


def _sk(x: AdvantageInputs, eps):
    return eps / (x.q_1 + 1) * (1 - gmpy2.mpfr(2) / x.p) ** x.q_d


def _bb1(x: AdvantageInputs, eps):
    two_n = gmpy2.mpfr(2) ** x.n
    return eps * two_n * _div(gmpy2.mpfr(x.q_h), two_n - x.q_s, "2^n - q_S")


def _bb2(x: AdvantageInputs, eps):
    return eps * gmpy2.mpfr(2) ** x.n


def _waters(x: AdvantageInputs, eps):
    return _div(eps, 32 * (x.n + 1) * x.q, "32 (n + 1) q")


def _gentry(x: AdvantageInputs, eps):
    return eps + gmpy2.mpfr(4 * x.q_c) / x.p


def advantage_eval(scheme: SchemeId | str, inputs: AdvantageInputs,
                   form: str = "simplified"):
    """
    Function evaluates the advantage bound of one scheme.
    :param scheme: One of the six compared schemes.
    :param inputs: Reduction parameters.
    :param form: "simplified" or, for BF only, "full".
    :return: gmpy2.mpfr value.
    :raises ZeroInversionError: A denominator vanishes (q_H3 = 0, 2^n = q_S).
    """
    if form not in FORMS:
        raise ParameterError(f"unknown advantage form {form!r}")
    try:
        scheme = SchemeId(scheme)
    except ValueError:
        raise UnsupportedKindError(f"no advantage formula for {scheme!r}") from None
    with _ctx():
        eps = gmpy2.mpfr(inputs.eps)
        if scheme is SchemeId.BF_GALINDO:
            return _bf(inputs, eps, form)
        if form == "full":
            raise ParameterError("only BF has a full advantage form")
        formulas = {SchemeId.SAKAI_KASAHARA: _sk, SchemeId.BB1: _bb1,
                    SchemeId.BB2: _bb2, SchemeId.WATERS_NACCACHE: _waters,
                    SchemeId.GENTRY: _gentry}
        if scheme not in formulas:
            raise UnsupportedKindError(f"no advantage formula for {scheme.value!r}")
        return formulas[scheme](inputs, eps)


def advantage_table(inputs: AdvantageInputs) -> dict[str, object]:
    return {s.value: advantage_eval(s, inputs) for s in BENCHMARK_SCHEMES}


def advantage_ranking(inputs: AdvantageInputs) -> list[str]:
    """
    Function returns the scheme names sorted by increasing advantage.
    """
    table = advantage_table(inputs)
    return sorted(table, key=table.__getitem__)


def advantage_sample(rng: Drbg) -> AdvantageInputs:
    """
    Function draws inputs satisfying q_S, q_D <= 2^10 < q_H <= 2^15,
    16 <= n <= 64, eps in [2^-40, 2^-10], p = 2^256.
    """
    q_s = rng.randrange(1, 2 ** 10 + 1)
    q_d = rng.randrange(1, 2 ** 10 + 1)
    q_h = rng.randrange(2 ** 11, 2 ** 15 + 1)
    n = rng.randrange(16, 65)
    eps = 2.0 ** -rng.randrange(10, 41)
    return AdvantageInputs(eps=eps, q_h=q_h, q_s=q_s, q_d=q_d, n=n,
                           p=2 ** 256, q_1=q_s, q_c=q_d, q=q_h, q_e=q_s)
