"""
Module defines UnitCosts and CostExpr, the symbolic cost model the
complexity tables are priced with, and the closed forms for scalar
multiplication, the Miller loop, the pairing and the pairing ratio.

All prices are exact rationals in units of one base-field multiplication
at security level n (an O((log n)^2) unit). A CostExpr is a multiset of
(term, count), parsed from strings such as "2ScalarMul+1Pair+1Exp_GT".
"""
# == Standard Library imports ==
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

# == Local imports ==
from utils.errors import ParameterError, UnpricedTermError

# aliases the complexity tables use, mapped to priced term names
TERM_ALIASES: dict[str, str] = {
    "Mu": "Mu", "Mul_Zq": "Mu", "Sq": "Sq",
    "Inv": "Inv", "Inv_Zq": "Inv",
    "Exp": "Exp", "Exp_GT": "Exp",
    "MulK": "MulK", "Mul_GT": "MulK", "SqK": "SqK",
    "InvK": "InvK", "Div_GT": "Div_GT",
    "ECADD": "ECADD", "Mul_G1": "ECADD", "ECDBL": "ECDBL",
    "ScalarMul": "ScalarMul", "Exp_G1": "ScalarMul",
    "MapToPoint": "MapToPoint",
    "Miller": "Miller", "FinalExp": "FinalExp",
    "Pair": "Pair", "Pairing": "Pair",
    "PairRatio": "PairRatio", "PairingRatio": "PairRatio",
}

_TERM_RE = re.compile(r"^\s*(\d+(?:[./]\d+)?)?\s*([A-Za-z][A-Za-z0-9_]*)\s*$")


def factor_embedding_degree(k: int) -> tuple[int, int]:
    """
    Function writes k as 2^i 3^j.
    :raises ParameterError: k has a prime factor other than 2 or 3.
    """
    if k < 1:
        raise ParameterError(f"embedding degree must be positive, got {k}")
    i = j = 0
    rest = k
    while rest % 2 == 0:
        rest, i = rest // 2, i + 1
    while rest % 3 == 0:
        rest, j = rest // 3, j + 1
    if rest != 1:
        raise ParameterError(f"embedding degree {k} is not of the form 2^i 3^j")
    return i, j


@dataclass(frozen=True)
class UnitCosts:
    """
    Dataclass for the unit prices of one calibration.

    ``n`` is the security level in bits (the exponent and scalar length),
    ``k`` the embedding degree. ``overrides`` replaces any derived price,
    which is how fitted calibrations (e.g. per curve family) are expressed.
    """
    n: int = 80
    k: int = 12
    mu: Fraction = Fraction(1)
    sq: Fraction = Fraction(1)
    overrides: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 2:
            raise ParameterError(f"security level must be >= 2 bits, got {self.n}")
        factor_embedding_degree(self.k)
        object.__setattr__(self, "mu", Fraction(self.mu))
        object.__setattr__(self, "sq", Fraction(self.sq))
        object.__setattr__(self, "overrides",
                           {k: Fraction(v) for k, v in self.overrides.items()})

    @property
    def ext_factor(self) -> int:
        # Mu_k = 3^i 5^j Mu for k = 2^i 3^j
        i, j = factor_embedding_degree(self.k)
        return 3 ** i * 5 ** j

    @property
    def prices(self) -> dict[str, Fraction]:
        """
        Property returns every priced term; overrides win over formulas.
        """
        n, k, mu, sq = self.n, self.k, self.mu, self.sq
        mul_k = self.ext_factor * mu
        exp = Fraction(3, 2) * n * mu
        ecadd = 12 * mu + 2 * sq
        ecdbl = 7 * mu + 5 * sq
        scalar_mul = (n - 1) * ecdbl + Fraction(n - 1, 3) * ecadd
        miller = n * (4 * mul_k + 2 * mul_k + (6 * k + 7) * mu + 7 * sq)
        ratio_loop = n * (2 * (4 * mu + 6 * sq) + 2 * (3 * mu + sq) +
                          4 * (3 * k * mu) + 4 * mul_k + 2 * mul_k)
        table = {
            "Mu": mu, "Sq": sq,
            "Inv": n * mu,
            "Exp": exp,
            "MulK": mul_k, "SqK": mul_k, "InvK": 4 * mul_k,
            "Div_GT": 5 * mul_k,
            "ECADD": ecadd, "ECDBL": ecdbl,
            "ScalarMul": scalar_mul,
            "MapToPoint": sq + scalar_mul,
            "Miller": miller, "FinalExp": exp,
            "Pair": miller + exp,
            "PairRatio": ratio_loop + exp,
        }
        table.update({TERM_ALIASES.get(term, term): price
                      for term, price in self.overrides.items()})
        return table

    def price(self, term: str) -> Fraction:
        """
        Method returns the price of one term or alias.
        :raises UnpricedTermError: Unknown term.
        """
        name = TERM_ALIASES.get(term, term)
        try:
            return self.prices[name]
        except KeyError:
            raise UnpricedTermError(f"no unit price for {term!r}") from None


@dataclass(frozen=True)
class CostExpr:
    """
    Dataclass for a symbolic cost row: a multiset of term counts.
    """
    terms: tuple[tuple[str, Fraction], ...] = ()

    @classmethod
    def of(cls, counts: Mapping[str, int | Fraction] | Iterable[tuple[str, int]]
           ) -> "CostExpr":
        items = counts.items() if isinstance(counts, Mapping) else counts
        merged: Counter = Counter()
        for term, count in items:
            merged[term] += Fraction(count)
        return cls(tuple(sorted((t, c) for t, c in merged.items() if c)))

    @classmethod
    def parse(cls, text: str) -> "CostExpr":
        """
        Method parses "2ScalarMul+1Pair+1Exp_GT"; a missing count means 1
        and "0" or an empty string is the empty expression.
        :raises ValueError: A term does not read as <count><name>.
        """
        text = (text or "").strip()
        if text in ("", "0"):
            return cls()
        counts = []
        for chunk in text.split("+"):
            match = _TERM_RE.match(chunk)
            if not match:
                raise ValueError(f"cannot parse cost term {chunk!r} in {text!r}")
            count, term = match.groups()
            counts.append((term, Fraction(count) if count else Fraction(1)))
        return cls.of(counts)

    def counts(self) -> dict[str, Fraction]:
        return dict(self.terms)

    def __add__(self, other: "CostExpr") -> "CostExpr":
        return CostExpr.of(list(self.terms) + list(other.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(f"{c}{t}" for t, c in self.terms)


def cost_eval(expr: CostExpr | str, costs: UnitCosts) -> Fraction:
    """
    Function prices an expression as the linear combination of its terms.
    :param expr: CostExpr or its string form.
    :param costs: Unit prices.
    :return: Exact rational cost.
    :raises UnpricedTermError: A term has no price.
    """
    if isinstance(expr, str):
        expr = CostExpr.parse(expr)
    return sum((count * costs.price(term) for term, count in expr.terms),
               Fraction(0))


def scalar_mul_cost(n: int, costs: UnitCosts | None = None) -> Fraction:
    """
    Function returns (n - 1) ECDBL + ((n - 1) / 3) ECADD, the NAF cost.
    """
    base = costs or UnitCosts()
    return UnitCosts(n=n, k=base.k, mu=base.mu, sq=base.sq).price("ScalarMul")


def miller_cost(n: int, k: int, costs: UnitCosts | None = None) -> Fraction:
    """
    Function returns n (4 Mu_k + 2 Sq_k + (6k + 7) Mu + 7 Sq).
    """
    base = costs or UnitCosts()
    return UnitCosts(n=n, k=k, mu=base.mu, sq=base.sq).price("Miller")


def pairing_cost(n: int, k: int, costs: UnitCosts | None = None) -> Fraction:
    base = costs or UnitCosts()
    return UnitCosts(n=n, k=k, mu=base.mu, sq=base.sq).price("Pair")


def ratio_pairing_cost(n: int, k: int,
                       costs: UnitCosts | None = None) -> Fraction:
    """
    Function returns the cost of e(P1, Q1) / e(P2, Q2) with a shared loop:
    n (28 + 12k + 6 3^i 5^j) Mu (at Mu = Sq) plus one final exponentiation.
    """
    base = costs or UnitCosts()
    return UnitCosts(n=n, k=k, mu=base.mu, sq=base.sq).price("PairRatio")
