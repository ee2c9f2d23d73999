"""Sparse truncated Fourier series with exact rational coefficients"""

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from src.errors import HermringError, InexactDivisionError

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def _add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


class QSeries:
    """Truncated one- or two-variable series sum c(e) x^e

    The first exponent coordinate is the truncation coordinate: every stored
    exponent has e[0] < prec. A second coordinate, when present, is a Laurent
    coordinate (negative values allowed, finite support per slice). Zero
    coefficients are never stored and instances are treated as immutable.

    Example usage:
        theta = QSeries({0: 1, 1: 2, 4: 2, 9: 2}, prec=10)
        square = theta * theta
        square[2]          # Fraction(4)
        inverse = QSeries.one(10) / theta
    """

    __slots__ = ('_coeffs', 'prec', 'nvars')

    def __init__(self, coeffs: Mapping, prec: int, nvars: int = 1):
        """Initialize QSeries

        Args:
            coeffs: Map from exponent (int for one variable, tuple otherwise)
                to a rational coefficient
            prec: Truncation bound on the first exponent coordinate
            nvars: Number of variables (1 or 2)

        Raises:
            HermringError: If an exponent has the wrong arity
        """
        if nvars not in (1, 2):
            raise HermringError(f"QSeries supports 1 or 2 variables, got {nvars}")
        self.prec = prec
        self.nvars = nvars
        stored: Dict[Exponent, Fraction] = {}
        for key, value in coeffs.items():
            exponent = (key,) if isinstance(key, int) else tuple(key)
            if len(exponent) != nvars:
                raise HermringError(
                    f"Exponent {exponent} does not match var-count {nvars}"
                )
            if exponent[0] >= prec:
                continue
            value = Fraction(value)
            if value:
                stored[exponent] = value
        self._coeffs = stored

    @classmethod
    def one(cls, prec: int, nvars: int = 1) -> 'QSeries':
        return cls({(0,) * nvars: 1}, prec, nvars)

    @classmethod
    def zero(cls, prec: int, nvars: int = 1) -> 'QSeries':
        return cls({}, prec, nvars)

    @classmethod
    def from_list(cls, values: Iterable[Scalar], prec: Optional[int] = None) -> 'QSeries':
        """Build a one-variable series from its coefficient list c(0), c(1), ..."""
        values = list(values)
        return cls(dict(enumerate(values)), len(values) if prec is None else prec)

    def __getitem__(self, exponent) -> Fraction:
        key = (exponent,) if isinstance(exponent, int) else tuple(exponent)
        if key[0] >= self.prec:
            raise HermringError(
                f"Exponent {key} is beyond the precision {self.prec}"
            )
        return self._coeffs.get(key, Fraction(0))

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Nonzero coefficients sorted by exponent"""
        return iter(sorted(self._coeffs.items()))

    def support(self) -> list[Exponent]:
        return sorted(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def valuation(self) -> Optional[int]:
        """Lowest first-coordinate exponent, or None for the zero series"""
        if not self._coeffs:
            return None
        return min(e[0] for e in self._coeffs)

    def slice(self, n: int) -> Dict[Exponent, Fraction]:
        """Coefficients with first coordinate n, keyed by the remaining coordinates"""
        return {e[1:]: c for e, c in self._coeffs.items() if e[0] == n}

    def to_list(self, length: Optional[int] = None) -> list[Fraction]:
        """Coefficient list of a one-variable series starting at exponent 0"""
        if self.nvars != 1:
            raise HermringError("to_list needs a one-variable series")
        length = self.prec if length is None else length
        return [self._coeffs.get((n,), Fraction(0)) for n in range(length)]

    def truncate(self, prec: int) -> 'QSeries':
        return QSeries(self._coeffs, min(prec, self.prec), self.nvars)

    def _check(self, other: 'QSeries') -> None:
        if self.nvars != other.nvars:
            raise HermringError(
                f"Var-count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other) -> 'QSeries':
        if isinstance(other, Rational):
            other = QSeries.one(self.prec, self.nvars) * other
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check(other)
        total = dict(self._coeffs)
        for e, c in other._coeffs.items():
            total[e] = total.get(e, Fraction(0)) + c
        return QSeries(total, min(self.prec, other.prec), self.nvars)

    __radd__ = __add__

    def __neg__(self) -> 'QSeries':
        return QSeries({e: -c for e, c in self._coeffs.items()}, self.prec, self.nvars)

    def __sub__(self, other) -> 'QSeries':
        return self + (-other)

    def __rsub__(self, other) -> 'QSeries':
        return (-self) + other

    def __mul__(self, other) -> 'QSeries':
        if isinstance(other, Rational):
            c = Fraction(other)
            return QSeries({e: c * v for e, v in self._coeffs.items()}, self.prec, self.nvars)
        if not isinstance(other, QSeries):
            return NotImplemented
        return ps_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'QSeries':
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        if not isinstance(other, QSeries):
            return NotImplemented
        return ps_div(self, other)

    def __pow__(self, exponent: int) -> 'QSeries':
        if exponent < 0:
            return QSeries.one(self.prec, self.nvars) / self ** (-exponent)
        result = QSeries.one(self.prec, self.nvars)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        """Equality of coefficients below the common precision"""
        if not isinstance(other, QSeries) or self.nvars != other.nvars:
            return NotImplemented
        prec = min(self.prec, other.prec)
        mine = {e: c for e, c in self._coeffs.items() if e[0] < prec}
        theirs = {e: c for e, c in other._coeffs.items() if e[0] < prec}
        return mine == theirs

    __hash__ = None

    def derivative(self) -> 'QSeries':
        """(2 pi i)^{-1} d/dtau, i.e. multiply each coefficient by its exponent"""
        return QSeries(
            {e: e[0] * c for e, c in self._coeffs.items()}, self.prec, self.nvars
        )

    def laurent_derivative(self) -> 'QSeries':
        """Multiply each coefficient by its second exponent coordinate"""
        if self.nvars != 2:
            raise HermringError("laurent_derivative needs a two-variable series")
        return QSeries({e: e[1] * c for e, c in self._coeffs.items()}, self.prec, 2)

    def rescale(self, m: int) -> 'QSeries':
        """Substitute tau -> m tau"""
        return QSeries(
            {(m * e[0],) + e[1:]: c for e, c in self._coeffs.items()},
            self.prec * m,
            self.nvars,
        )

    def shift(self, n: int) -> 'QSeries':
        """Multiply by q^n"""
        return QSeries(
            {(e[0] + n,) + e[1:]: c for e, c in self._coeffs.items()},
            self.prec + n,
            self.nvars,
        )

    def __repr__(self) -> str:
        terms = []
        for e, c in list(self.items())[:8]:
            terms.append(f"{c}*q^{e[0]}" if self.nvars == 1 else f"{c}*q^{e[0]}z^{e[1]}")
        tail = " + ..." if len(self._coeffs) > 8 else ""
        return f"QSeries({' + '.join(terms) or '0'}{tail}, prec={self.prec})"


def ps_add(a: QSeries, b: QSeries) -> QSeries:
    """Coefficient-wise sum truncated to the smaller precision"""
    return a + b


def ps_mul(a: QSeries, b: QSeries) -> QSeries:
    """Truncated convolution product

    Raises:
        HermringError: On var-count mismatch
    """
    a._check(b)
    prec = min(a.prec, b.prec)
    va, vb = a.valuation(), b.valuation()
    if va is None or vb is None:
        return QSeries.zero(prec, a.nvars)
    prec = min(a.prec + vb, b.prec + va)
    product: Dict[Exponent, Fraction] = {}
    right = sorted(b._coeffs.items())
    for ea, ca in a._coeffs.items():
        limit = prec - ea[0]
        for eb, cb in right:
            if eb[0] >= limit:
                break
            e = _add_exponents(ea, eb)
            product[e] = product.get(e, 0) + ca * cb
    return QSeries(product, prec, a.nvars)


def _slice_mul(x: Dict[Exponent, Fraction], y: Dict[Exponent, Fraction]) -> Dict[Exponent, Fraction]:
    out: Dict[Exponent, Fraction] = {}
    for ex, cx in x.items():
        for ey, cy in y.items():
            e = _add_exponents(ex, ey)
            out[e] = out.get(e, 0) + cx * cy
    return out


def ps_div(a: QSeries, b: QSeries) -> QSeries:
    """Quotient a / b with Laurent shift in the truncation coordinate

    The lowest slice of b must be a unit: a nonzero rational for one variable,
    a single monomial for two variables.

    Args:
        a: Dividend
        b: Divisor

    Returns:
        Series r with ps_mul(r, b) = a up to truncation; r may start at a
        negative exponent (e.g. 1/Delta = q^{-1} + 24 + ...)

    Raises:
        InexactDivisionError: If b is zero or its leading slice is not a unit
    """
    a._check(b)
    eb = b.valuation()
    if eb is None:
        raise InexactDivisionError("Division by the zero series")
    lead = b.slice(eb)
    if len(lead) != 1:
        raise InexactDivisionError(
            f"Leading slice of the divisor at exponent {eb} is not a unit: {lead}"
        )
    (lead_rest, lead_c), = lead.items()
    ea = a.valuation()
    if ea is None:
        return QSeries.zero(a.prec - eb, a.nvars)
    prec = min(a.prec, ea + b.prec - eb) - eb
    b_slices = {n: b.slice(n) for n in range(eb + 1, b.prec)}
    result: Dict[int, Dict[Exponent, Fraction]] = {}
    start = ea - eb
    for n in range(start, prec):
        target = dict(a.slice(n + eb))
        for j in range(1, n - start + 1):
            bj = b_slices.get(eb + j)
            rj = result.get(n - j)
            if not bj or not rj:
                continue
            for e, c in _slice_mul(bj, rj).items():
                target[e] = target.get(e, 0) - c
        result[n] = {
            tuple(x - y for x, y in zip(e, lead_rest)): c / lead_c
            for e, c in target.items() if c
        }
    coeffs = {
        (n,) + rest: c for n, slice_ in result.items() for rest, c in slice_.items()
    }
    return QSeries(coeffs, prec, a.nvars)
