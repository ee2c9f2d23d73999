"""Hilbert series as exact rational functions N(t) / prod (1 - t^d)"""

from collections import Counter
from typing import Iterable, Mapping, Union

from sympy import Poly, ZZ, symbols

t = symbols('t')

Numerator = Union[Poly, Mapping[int, int]]


def _poly(terms: Numerator) -> Poly:
    if isinstance(terms, Poly):
        return terms
    nonzero = {(e,): int(c) for e, c in terms.items() if c}
    if not nonzero:
        return Poly(0, t, domain=ZZ)
    return Poly.from_dict(nonzero, t, domain=ZZ)


class HilbSeries:
    """Rational function with integer polynomial numerator and (1 - t^d) factors

    The denominator is a multiset of degrees d >= 1, stored as given; no
    cancellation is attempted. Equality is decided by cross-multiplication,
    so two representations of the same function compare equal.

    Example usage:
        sp4 = HilbSeries({0: 1, 35: 1}, [4, 6, 10, 12])
        sp4.expand(12)      # [1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0, 3]
        (sp4 - sp4).is_zero()
    """

    def __init__(self, numerator: Numerator, denominator: Iterable[int] = ()):
        """Initialize HilbSeries

        Args:
            numerator: sympy Poly in t or a map exponent -> integer coefficient
            denominator: Degrees d_i of the factors (1 - t^{d_i}), repeats allowed

        Raises:
            ValueError: If a denominator degree is not positive
        """
        self.numerator = _poly(numerator)
        degrees = Counter(denominator)
        bad = [d for d in degrees if d < 1]
        if bad:
            raise ValueError(f"Denominator degrees must be positive, got {bad}")
        self.denominator = degrees

    @classmethod
    def monomial(cls, n: int) -> 'HilbSeries':
        return cls({n: 1})

    def denominator_degrees(self) -> list[int]:
        return sorted(self.denominator.elements())

    def denominator_poly(self) -> Poly:
        result = Poly(1, t, domain=ZZ)
        for d in self.denominator.elements():
            result = result * Poly(1 - t ** d, t, domain=ZZ)
        return result

    def _lift(self, common: Counter) -> Poly:
        """Numerator rewritten over a larger denominator"""
        extra = common - self.denominator
        numerator = self.numerator
        for d in extra.elements():
            numerator = numerator * Poly(1 - t ** d, t, domain=ZZ)
        return numerator

    def __add__(self, other: 'HilbSeries') -> 'HilbSeries':
        common = self.denominator | other.denominator
        return HilbSeries(self._lift(common) + other._lift(common), common.elements())

    def __neg__(self) -> 'HilbSeries':
        return HilbSeries(-self.numerator, self.denominator.elements())

    def __sub__(self, other: 'HilbSeries') -> 'HilbSeries':
        return self + (-other)

    def __mul__(self, other: 'HilbSeries') -> 'HilbSeries':
        return HilbSeries(
            self.numerator * other.numerator,
            (self.denominator + other.denominator).elements(),
        )

    def shift(self, n: int) -> 'HilbSeries':
        """Multiply by t^n"""
        return HilbSeries(self.numerator * Poly(t ** n, t, domain=ZZ), self.denominator.elements())

    def over(self, d: int) -> 'HilbSeries':
        """Divide by the factor (1 - t^d)"""
        return HilbSeries(self.numerator, (self.denominator + Counter([d])).elements())

    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, HilbSeries):
            return NotImplemented
        return self.numerator * other.denominator_poly() == other.numerator * self.denominator_poly()

    __hash__ = None

    def expand(self, kmax: int) -> list[int]:
        """Taylor coefficients of degrees 0..kmax"""
        coeffs = [0] * (kmax + 1)
        for (e,), c in self.numerator.as_dict().items():
            if e <= kmax:
                coeffs[e] += int(c)
        for d in self.denominator.elements():
            for n in range(d, kmax + 1):
                coeffs[n] += coeffs[n - d]
        return coeffs

    def __repr__(self) -> str:
        denominator = ''.join(f"(1-t^{d})" for d in self.denominator_degrees())
        return f"HilbSeries(({self.numerator.as_expr()}) / {denominator or '1'})"


def hilb_expand(h: HilbSeries, kmax: int) -> list[int]:
    """dim_0 .. dim_kmax of a Hilbert series"""
    if kmax < 0:
        raise ValueError(f"kmax must be nonnegative, got {kmax}")
    return h.expand(kmax)


def hilb_add(a: HilbSeries, b: HilbSeries) -> HilbSeries:
    return a + b


def hilb_sub(a: HilbSeries, b: HilbSeries) -> HilbSeries:
    return a - b


def hilb_mul(a: HilbSeries, b: HilbSeries) -> HilbSeries:
    return a * b


def hilb_shift(a: HilbSeries, n: int) -> HilbSeries:
    return a.shift(n)
