"""Truncated Fourier expansions of Hermitian modular forms

The coefficient c(a, t, b) belongs to the Hermitian matrix [[a, t], [t', b]]
with t = (x + y*omega)/sqrt(d) in the codifferent, stored under the key
(a, x, y, b). The trace a + b is the truncation grade.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Optional, Tuple

from src.errors import HermringError, InexactDivisionError, PrecisionError, UnsupportedCaseError
from src.series.sparse import graded_product, graded_sum
from src.weilrep.fqm import SUPPORTED_DISCRIMINANTS, norm
from src.weilrep.theta import lattice_points

HermIndex = Tuple[int, int, int, int]


class Symmetry(str, Enum):
    SYMMETRIC = "symmetric"
    SKEW = "skew"
    NEITHER = "neither"


def trace(index: HermIndex) -> int:
    return index[0] + index[3]


def conjugate(x: int, y: int) -> Tuple[int, int]:
    """Field conjugate of t = (x + y*omega)/sqrt(d) in the same coordinates"""
    return -x - y, y


def is_semipositive(index: HermIndex, p: int) -> bool:
    a, x, y, b = index
    return a >= 0 and b >= 0 and p * a * b - norm(x, y, p) >= 0


@lru_cache(maxsize=None)
def herm_indices(p: int, prec: int) -> Tuple[HermIndex, ...]:
    """Every semi-positive index with a + b <= prec, sorted"""
    top = (prec // 2) * (prec - prec // 2)
    points = sorted(lattice_points(p, p * top + 1), key=lambda xy: norm(xy[0], xy[1], p))
    indices = []
    for a in range(prec + 1):
        for b in range(prec + 1 - a):
            bound = p * a * b
            for x, y in points:
                if norm(x, y, p) > bound:
                    break
                indices.append((a, x, y, b))
    return tuple(sorted(indices))


@dataclass
class HermExp:
    """Truncated Hermitian modular form over Q(sqrt d)

    Attributes:
        disc: Field discriminant, -7 or -11
        weight: Weight k
        coeffs: Map (a, x, y, b) -> coefficient; zeros are not stored
        prec: Trace bound; every index with a + b <= prec is known
        name: Optional generator name

    Raises:
        UnsupportedCaseError: For other discriminants
        HermringError: If a stored index is not semi-positive

    Example usage:
        E4 = maass_lift(vv_eisenstein(fqm_for_field(-7), 3, prec=26), 4, prec=10)
        E4.coefficient(1, 0, 0, 0)      # Fraction(1) after normalization
        symmetry_type(E4)               # Symmetry.SYMMETRIC
    """

    disc: int
    weight: int
    coeffs: Dict[HermIndex, Fraction] = field(default_factory=dict)
    prec: int = 0
    name: str = ''

    def __post_init__(self):
        if self.disc not in SUPPORTED_DISCRIMINANTS:
            raise UnsupportedCaseError(
                f"Unsupported field discriminant: {self.disc}. "
                f"Available: {', '.join(str(d) for d in SUPPORTED_DISCRIMINANTS)}"
            )
        p = self.p
        kept = {}
        for index, c in self.coeffs.items():
            if trace(index) > self.prec or not c:
                continue
            if not is_semipositive(index, p):
                raise HermringError(f"Index {index} is not semi-positive for d = {self.disc}")
            kept[tuple(index)] = Fraction(c)
        self.coeffs = kept

    @property
    def p(self) -> int:
        return -self.disc

    @classmethod
    def zero(cls, disc: int, weight: int, prec: int) -> 'HermExp':
        return cls(disc, weight, {}, prec)

    @classmethod
    def one(cls, disc: int, prec: int) -> 'HermExp':
        return cls(disc, 0, {(0, 0, 0, 0): Fraction(1)}, prec)

    def coefficient(self, a: int, x: int, y: int, b: int) -> Fraction:
        if a + b > self.prec:
            raise PrecisionError(f"Index {(a, x, y, b)} is beyond the trace bound {self.prec}")
        return self.coeffs.get((a, x, y, b), Fraction(0))

    def items(self) -> Iterator[Tuple[HermIndex, Fraction]]:
        return iter(sorted(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_cusp(self) -> bool:
        """All coefficients sit on positive-definite indices"""
        return all(self.p * a * b - norm(x, y, self.p) > 0 for a, x, y, b in self.coeffs)

    def trace_slice(self, n: int) -> Dict[HermIndex, Fraction]:
        return {e: c for e, c in self.coeffs.items() if trace(e) == n}

    def valuation(self) -> Optional[int]:
        """Lowest trace with a nonzero coefficient"""
        if not self.coeffs:
            return None
        return min(trace(e) for e in self.coeffs)

    def truncate(self, prec: int) -> 'HermExp':
        return HermExp(self.disc, self.weight, self.coeffs, min(prec, self.prec), self.name)

    def renamed(self, name: str) -> 'HermExp':
        return HermExp(self.disc, self.weight, self.coeffs, self.prec, name)

    def _check(self, other: 'HermExp') -> None:
        if other.disc != self.disc:
            raise HermringError(f"Field mismatch: d = {self.disc} vs d = {other.disc}")

    def __add__(self, other: 'HermExp') -> 'HermExp':
        return herm_add(self, other)

    def __sub__(self, other: 'HermExp') -> 'HermExp':
        return herm_add(self, other, Fraction(-1))

    def __neg__(self) -> 'HermExp':
        return herm_scale(self, -1)

    def __mul__(self, other) -> 'HermExp':
        if isinstance(other, HermExp):
            return herm_mul(self, other)
        return herm_scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: 'HermExp') -> 'HermExp':
        return herm_divide(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermExp) or other.disc != self.disc:
            return NotImplemented
        prec = min(self.prec, other.prec)
        return self.truncate(prec).coeffs == other.truncate(prec).coeffs

    __hash__ = None


def herm_add(a: HermExp, b: HermExp, scale: Fraction = Fraction(1)) -> HermExp:
    """a + scale * b truncated to the smaller trace bound

    Raises:
        HermringError: On field mismatch, or different weights of nonzero summands
    """
    a._check(b)
    if a.weight != b.weight and not (a.is_zero() or b.is_zero()):
        raise HermringError(f"Cannot add weights {a.weight} and {b.weight}")
    weight = b.weight if a.is_zero() else a.weight
    return HermExp(a.disc, weight, graded_sum(a.coeffs, b.coeffs, Fraction(scale)), min(a.prec, b.prec))


def herm_scale(a: HermExp, c) -> HermExp:
    c = Fraction(c)
    return HermExp(a.disc, a.weight, {e: c * v for e, v in a.coeffs.items()}, a.prec, a.name)


def herm_mul(a: HermExp, b: HermExp) -> HermExp:
    """Product of expansions; weights add"""
    a._check(b)
    prec = min(a.prec, b.prec)
    return HermExp(a.disc, a.weight + b.weight, graded_product(a.coeffs, b.coeffs, trace, prec), prec)


def herm_pow(a: HermExp, exponent: int) -> HermExp:
    result = HermExp.one(a.disc, a.prec)
    for _ in range(exponent):
        result = herm_mul(result, a)
    return result


def _slice_divide(
    target: Dict[Tuple[int, int, int], Fraction],
    divisor: Dict[Tuple[int, int, int], Fraction],
    quotient_trace: int,
    p: int,
) -> Dict[Tuple[int, int, int], Fraction]:
    """Exact division of trace slices keyed by (a, x, y), lex order

    Raises:
        InexactDivisionError: If a quotient term is not semi-positive, which
            means the division leaves a remainder
    """
    lead_key = max(divisor)
    lead = divisor[lead_key]
    remainder = {e: c for e, c in target.items() if c}
    quotient: Dict[Tuple[int, int, int], Fraction] = {}
    while remainder:
        key = max(remainder)
        q_key = tuple(u - v for u, v in zip(key, lead_key))
        a, x, y = q_key
        if not is_semipositive((a, x, y, quotient_trace - a), p):
            raise InexactDivisionError(
                f"Remainder term at {(a, x, y, quotient_trace - a)} cannot be cancelled"
            )
        c = remainder[key] / lead
        quotient[q_key] = c
        for e, v in divisor.items():
            shifted = tuple(u + w for u, w in zip(q_key, e))
            value = remainder.get(shifted, Fraction(0)) - c * v
            if value:
                remainder[shifted] = value
            else:
                remainder.pop(shifted, None)
    return quotient


def herm_divide(f: HermExp, g: HermExp) -> HermExp:
    """Exact quotient h with h * g = f up to the trace bound

    Trace-graded long division; within each trace slice the division is an
    exact division of Laurent polynomials in lexicographic order.

    Raises:
        InexactDivisionError: If f is not divisible by g within the precision
        HermringError: If g vanishes or the fields differ
    """
    f._check(g)
    tg = g.valuation()
    if tg is None:
        raise HermringError("Division by the zero expansion")
    prec = min(f.prec, g.prec) - tg
    if prec < 0:
        raise PrecisionError(f"Divisor starts at trace {tg}, beyond the dividend's bound {f.prec}")
    p = f.p

    def keyed(slice_: Dict[HermIndex, Fraction]) -> Dict[Tuple[int, int, int], Fraction]:
        return {(a, x, y): c for (a, x, y, _b), c in slice_.items()}

    g_slices = {t: keyed(g.trace_slice(t)) for t in range(tg, g.prec + 1)}
    lowest = f.valuation()
    if lowest is not None and lowest < tg:
        raise InexactDivisionError(f"Dividend starts at trace {lowest}, below the divisor's {tg}")
    h_slices: Dict[int, Dict[Tuple[int, int, int], Fraction]] = {}
    for n in range(prec + 1):
        target = keyed(f.trace_slice(n + tg))
        for s, h_slice in h_slices.items():
            g_slice = g_slices.get(n + tg - s)
            if not g_slice or not h_slice:
                continue
            for e1, c1 in h_slice.items():
                for e2, c2 in g_slice.items():
                    e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                    target[e] = target.get(e, Fraction(0)) - c1 * c2
        h_slices[n] = _slice_divide(target, g_slices[tg], n, p)
    coeffs = {
        (a, x, y, n - a): c
        for n, slice_ in h_slices.items()
        for (a, x, y), c in slice_.items()
    }
    return HermExp(f.disc, f.weight - g.weight, coeffs, prec)


def symmetry_type(f: HermExp) -> Symmetry:
    """Classify under the transpose involution z -> z^T

    Symmetric means c(a, conj t, b) = (-1)^k c(a, t, b), skew means the law
    with the opposite sign; the zero expansion counts as symmetric.
    """
    sign = -1 if f.weight % 2 else 1
    holds = {1: True, -1: True}
    for (a, x, y, b), c in f.coeffs.items():
        cx, cy = conjugate(x, y)
        mirrored = f.coeffs.get((a, cx, cy, b), Fraction(0))
        if mirrored != sign * c:
            holds[1] = False
        if mirrored != -sign * c:
            holds[-1] = False
        if not (holds[1] or holds[-1]):
            return Symmetry.NEITHER
    return Symmetry.SYMMETRIC if holds[1] else Symmetry.SKEW


def exchange_symmetric(f: HermExp) -> bool:
    """c(a, t, b) = c(b, t, a) on every stored coefficient"""
    return all(f.coeffs.get((b, x, y, a), Fraction(0)) == c for (a, x, y, b), c in f.coeffs.items())
