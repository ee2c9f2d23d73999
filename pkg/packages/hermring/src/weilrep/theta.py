"""Theta contractions: vector-valued forms from triple products of O_K theta series

Each factor is a theta series of (O_K, norm) with a harmonic polynomial,
    theta_gamma(tau) = sum_{mu in O_K, class(mu) = gamma} P(mu) q^{N(mu)/p},
of weight 1 + deg P for the Weil representation of O_K. The tensor cube
lives on (Z/p)^3 with Q(v) = (v.v)/p. For an isotropic vector w and a vector
u in w-perp with u.u = -1, the quotient w-perp / <w> is identified with Z/p via
a*w + s*u -> s and carries Q(s) = -s^2/p, so summing over each coset gives a
form for the dual representation of O_K's discriminant form.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, isqrt
from typing import Iterator, Sequence

from src.errors import HermringError, UnsupportedCaseError
from src.series.qseries import QSeries
from src.weilrep.fqm import FQM, codifferent_class, norm
from src.weilrep.vvform import VVForm


@dataclass(frozen=True)
class Harmonic:
    """Harmonic polynomial A or B of (2x + y + y sqrt d)^degree = A + B sqrt d"""

    degree: int
    part: str = 'A'

    def __post_init__(self):
        if self.part not in ('A', 'B'):
            raise HermringError(f"Harmonic part must be 'A' or 'B', got {self.part!r}")
        if self.degree < 0:
            raise HermringError(f"Harmonic degree must be nonnegative, got {self.degree}")

    def evaluate(self, x: int, y: int, d: int) -> int:
        u = 2 * x + y
        total = 0
        for j in range(self.degree + 1):
            even = j % 2 == 0
            if even != (self.part == 'A'):
                continue
            total += comb(self.degree, j) * u ** (self.degree - j) * y ** j * d ** (j // 2)
        return total


def lattice_points(p: int, bound: int) -> Iterator[tuple[int, int]]:
    """All (x, y) with N(x + y*omega) < bound"""
    ymax = isqrt(4 * bound // p) + 1
    for y in range(-ymax, ymax + 1):
        xmax = isqrt(bound) + abs(y) + 1
        for x in range(-xmax, xmax + 1):
            if norm(x, y, p) < bound:
                yield x, y


@lru_cache(maxsize=None)
def _harmonic_theta(p: int, harmonic: Harmonic, scaled_prec: int) -> tuple[QSeries, ...]:
    d = -p
    buckets = [dict() for _ in range(p)]
    for x, y in lattice_points(p, scaled_prec):
        value = harmonic.evaluate(x, y, d)
        if value:
            bucket = buckets[codifferent_class(x, y, p)]
            n = norm(x, y, p)
            bucket[n] = bucket.get(n, 0) + value
    return tuple(QSeries(b, scaled_prec) for b in buckets)


def isotropic_lines(p: int) -> list[tuple[int, int, int]]:
    """Isotropic lines of (Z/p)^3 under the sum of squares, first nonzero coordinate 1"""
    lines = []
    for w in product(range(p), repeat=3):
        if not any(w):
            continue
        lead = next(c for c in w if c)
        if lead != 1:
            continue
        if sum(c * c for c in w) % p == 0:
            lines.append(w)
    return lines


def _complement(w: Sequence[int], p: int) -> tuple[int, int, int]:
    for u in product(range(p), repeat=3):
        if sum(a * b for a, b in zip(u, w)) % p == 0 and sum(c * c for c in u) % p == p - 1:
            return u
    raise HermringError(f"No vector u with u.w = 0 and u.u = -1 for w = {tuple(w)}")


def theta_contraction(
    fqm: FQM,
    harmonics: Sequence[Harmonic],
    line: Sequence[int],
    prec: int,
) -> VVForm:
    """Contract the tensor cube of harmonic O_K theta series along an isotropic line

    Args:
        fqm: Field discriminant form (O_K for d = -p)
        harmonics: Three Harmonic polynomials, one per factor
        line: Isotropic vector w of (Z/p)^3
        prec: Coefficients c(n, s) with n < prec are computed

    Returns:
        VVForm of weight 3 + sum of degrees; antisymmetric when that sum is odd

    Raises:
        UnsupportedCaseError: If fqm is not a field discriminant form
        HermringError: If line is not isotropic or three harmonics are not given
    """
    if not fqm.is_field:
        raise UnsupportedCaseError(f"Theta contractions need a field form, got {fqm.describe()}")
    if len(harmonics) != 3 or len(line) != 3:
        raise HermringError("Theta contractions take three harmonics and a vector in (Z/p)^3")
    p = fqm.order
    w = tuple(c % p for c in line)
    if not any(w) or sum(c * c for c in w) % p:
        raise HermringError(f"Line {tuple(line)} is not isotropic mod {p}")
    u = _complement(w, p)
    scaled_prec = fqm.scale * prec
    thetas = [_harmonic_theta(p, h, scaled_prec) for h in harmonics]
    components = {}
    for s in range(p):
        total = QSeries.zero(scaled_prec)
        for a in range(p):
            v = [(a * wi + s * ui) % p for wi, ui in zip(w, u)]
            factors = [thetas[i][v[i]] for i in range(3)]
            if any(f.is_zero() for f in factors):
                continue
            total = total + factors[0] * factors[1] * factors[2]
        components[s] = total
    weight = 3 + sum(h.degree for h in harmonics)
    return VVForm(fqm, Fraction(weight), components, scaled_prec)


def harmonic_triples(total_degree: int) -> Iterator[tuple[Harmonic, Harmonic, Harmonic]]:
    """Deterministic enumeration of harmonic triples of the given total degree"""
    for degrees in product(range(total_degree + 1), repeat=3):
        if sum(degrees) != total_degree:
            continue
        options = [('A',) if nu == 0 else ('A', 'B') for nu in degrees]
        for parts in product(*options):
            yield tuple(Harmonic(nu, part) for nu, part in zip(degrees, parts))
