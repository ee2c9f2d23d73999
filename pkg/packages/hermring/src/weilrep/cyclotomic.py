"""Exact arithmetic in the cyclotomic field Q(zeta_L)

Elements are coefficient vectors of polynomials in zeta reduced modulo the
L-th cyclotomic polynomial, so equality is coefficient equality.
"""

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Sequence

from sympy import Poly, cyclotomic_poly, symbols

from src.errors import HermringError

_x = symbols('x')


@lru_cache(maxsize=None)
def _modulus(order: int) -> tuple[int, ...]:
    """Ascending integer coefficients of Phi_order (monic)"""
    poly = Poly(cyclotomic_poly(order, _x), _x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _reduce(coeffs: list[Fraction], order: int) -> tuple[Fraction, ...]:
    modulus = _modulus(order)
    degree = len(modulus) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, degree - 1, -1):
        lead = coeffs[i]
        if lead:
            shift = i - degree
            for j, m in enumerate(modulus):
                coeffs[shift + j] -= lead * m
    coeffs = coeffs[:degree] + [Fraction(0)] * max(0, degree - len(coeffs))
    return tuple(coeffs)


class Cyclotomic:
    """Element of Q(zeta_L)

    Example usage:
        z8 = Cyclotomic.zeta(8, 1)
        sqrt2 = z8 + Cyclotomic.zeta(8, 7)
        sqrt2 * sqrt2 == Cyclotomic.rational(8, 2)   # True
    """

    __slots__ = ('order', 'coeffs')

    def __init__(self, order: int, coeffs: Sequence):
        self.order = order
        self.coeffs = _reduce([Fraction(c) for c in coeffs], order)

    @classmethod
    def zeta(cls, order: int, k: int) -> 'Cyclotomic':
        """zeta_order^k"""
        k %= order
        return cls(order, [0] * k + [1])

    @classmethod
    def rational(cls, order: int, value) -> 'Cyclotomic':
        return cls(order, [value])

    @classmethod
    def root_of_unity(cls, order: int, value: Fraction) -> 'Cyclotomic':
        """e^{2 pi i value} for a rational value whose denominator divides order"""
        value = Fraction(value) * order
        if value.denominator != 1:
            raise HermringError(
                f"e({value / order}) does not lie in Q(zeta_{order})"
            )
        return cls.zeta(order, int(value))

    def _coerce(self, other) -> 'Cyclotomic':
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise HermringError(
                    f"Cyclotomic order mismatch: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, Rational):
            return Cyclotomic.rational(self.order, other)
        raise TypeError(f"Cannot combine Cyclotomic with {type(other).__name__}")

    def __add__(self, other) -> 'Cyclotomic':
        other = self._coerce(other)
        return Cyclotomic(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> 'Cyclotomic':
        return Cyclotomic(self.order, [-a for a in self.coeffs])

    def __sub__(self, other) -> 'Cyclotomic':
        return self + (-self._coerce(other))

    def __mul__(self, other) -> 'Cyclotomic':
        if isinstance(other, Rational):
            return Cyclotomic(self.order, [a * other for a in self.coeffs])
        other = self._coerce(other)
        product = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    product[i + j] += a * b
        return Cyclotomic(self.order, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Cyclotomic':
        if exponent < 0:
            raise HermringError("Negative powers of cyclotomic numbers are not supported")
        result = Cyclotomic.rational(self.order, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except (HermringError, TypeError):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def rational_value(self) -> Fraction:
        """The value as a rational, if the element is rational

        Raises:
            HermringError: If the element is irrational
        """
        if any(self.coeffs[1:]):
            raise HermringError(f"{self} is not rational")
        return self.coeffs[0]

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"Cyclotomic[{self.order}]({' + '.join(terms) or '0'})"
