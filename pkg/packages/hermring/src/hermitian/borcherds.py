"""Divisor and weight bookkeeping for Borcherds products

Only the principal part of the input matters: the product Psi_F has order
sum_{r >= 1} c(-r^2 D/p, r gamma_D) along the Heegner divisor H_D, where
gamma_D^2 = D mod p, and weight c(0, 0)/2. Product expansions are not built.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Dict, Mapping, Tuple

from src.errors import HermringError
from src.weilrep.fqm import FQM


@dataclass
class PrincipalPart:
    """Negative-exponent coefficients and constant term of a nearly-holomorphic input

    Attributes:
        fqm: Field discriminant form
        coeffs: Map (gamma, n) -> c(n, gamma) for rational n < 0
        constant: c(0, 0)

    Raises:
        HermringError: If an exponent is nonnegative or in the wrong residue class
    """

    fqm: FQM
    coeffs: Dict[Tuple[int, Fraction], int] = field(default_factory=dict)
    constant: int = 0

    def __post_init__(self):
        normalized = {}
        for (gamma, n), c in self.coeffs.items():
            n = Fraction(n)
            gamma %= self.fqm.order
            if n >= 0:
                raise HermringError(f"Principal part exponent {n} is not negative")
            if (n + self.fqm.q(gamma)).denominator != 1:
                raise HermringError(f"Exponent {n} is not in Z - Q({gamma})")
            if c:
                normalized[(gamma, n)] = c
        self.coeffs = normalized

    def coefficient(self, n: Fraction, gamma: int) -> int:
        return self.coeffs.get((gamma % self.fqm.order, Fraction(n)), 0)

    def depth(self) -> Fraction:
        """Largest |n| among the stored exponents"""
        return max((-n for _, n in self.coeffs), default=Fraction(0))


@dataclass
class DivisorSum:
    """Formal sum of Heegner divisors sum_D mult_D H_D"""

    terms: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {D: m for D, m in sorted(self.terms.items()) if m}

    @classmethod
    def parse(cls, text: str) -> 'DivisorSum':
        """Parse '3H1 + H2' or '7H_1 + H_7'"""
        terms: Dict[int, int] = {}
        for part in text.replace(' ', '').split('+'):
            if not part:
                continue
            mult, sep, disc = part.replace('_', '').partition('H')
            if not sep:
                raise HermringError(f"Cannot parse divisor term '{part}'")
            terms[int(disc)] = terms.get(int(disc), 0) + (int(mult) if mult else 1)
        return cls(terms)

    def multiplicity(self, D: int) -> int:
        return self.terms.get(D, 0)

    def is_effective(self) -> bool:
        return all(m >= 0 for m in self.terms.values())

    def __add__(self, other: 'DivisorSum') -> 'DivisorSum':
        terms = dict(self.terms)
        for D, m in other.terms.items():
            terms[D] = terms.get(D, 0) + m
        return DivisorSum(terms)

    def __str__(self) -> str:
        parts = [f"{'' if m == 1 else m}H{D}" for D, m in self.terms.items()]
        return ' + '.join(parts) or '0'


@dataclass
class BorcherdsData:
    divisor: DivisorSum
    weight: Fraction
    holomorphic: bool

    @property
    def cusp(self) -> bool:
        """Holomorphic Borcherds products of nonzero weight here are cusp forms"""
        return self.holomorphic


def heegner_class(D: int, p: int) -> int:
    """The class gamma_D with gamma_D^2 = D mod p and gamma_D <= p/2 (0 when p | D)

    Raises:
        HermringError: If D is not a square mod p, so H_D is empty
    """
    for gamma in range(p // 2 + 1):
        if (gamma * gamma - D) % p == 0:
            return gamma
    raise HermringError(f"No Heegner divisor H_{D}: {D} is not a square mod {p}")


def borcherds_divisor_weight(pp: PrincipalPart) -> BorcherdsData:
    """Divisor and weight of the Borcherds product of a principal part

    Returns:
        BorcherdsData with the order on every H_D reached by the principal
        part, the weight c(0, 0)/2 and the holomorphy flag

    Example usage:
        pp = PrincipalPart(fqm_for_field(-7), {(1, Fraction(-1, 7)): 3, (6, Fraction(-1, 7)): 3,
                                               (3, Fraction(-2, 7)): 1, (4, Fraction(-2, 7)): 1}, 14)
        str(borcherds_divisor_weight(pp).divisor)      # '3H1 + H2'
    """
    p = pp.fqm.order
    top = int(pp.depth() * p)
    terms: Dict[int, int] = {}
    for D in range(1, top + 1):
        try:
            gamma = heegner_class(D, p)
        except HermringError:
            continue
        order = 0
        for r in range(1, isqrt(top // D) + 1):
            order += pp.coefficient(Fraction(-r * r * D, p), r * gamma)
        if order:
            terms[D] = order
    divisor = DivisorSum(terms)
    return BorcherdsData(divisor, Fraction(pp.constant, 2), divisor.is_effective())


def divisor_from_records(records: Mapping[str, str]) -> Dict[str, DivisorSum]:
    """Parse a name -> divisor-string table"""
    return {name: DivisorSum.parse(text) for name, text in records.items()}
