"""Jacobi forms as two-variable series in q (truncated) and zeta (Laurent)

Index 0 forms are ordinary level-one modular forms, so products such as
E_4 * E_{6,1} are plain jacobi_mul calls.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from src.errors import HermringError, InexactDivisionError, ParityError
from src.series.arith import divisors
from src.series.classical import delta_series
from src.series.qseries import QSeries
from src.weilrep.eisenstein import vv_eisenstein
from src.weilrep.fqm import fqm_for_jacobi_index
from src.weilrep.vvform import VVForm


@dataclass
class JacobiForm:
    """Weight-k index-m Jacobi form sum c(n, r) q^n zeta^r, known for n < prec

    Example usage:
        e41 = jacobi_eisenstein(4, 1, prec=5)
        e41.coefficient(1, 1)    # Fraction(56)
    """

    weight: int
    index: int
    series: QSeries
    name: str = ''

    @property
    def prec(self) -> int:
        return self.series.prec

    def coefficient(self, n: int, r: int) -> Fraction:
        return self.series[(n, r)]

    def items(self):
        """((n, r), c) for every stored nonzero coefficient, sorted"""
        return self.series.items()

    def is_zero(self) -> bool:
        return self.series.is_zero()

    def is_holomorphic(self) -> bool:
        return all(4 * n * self.index - r * r >= 0 for (n, r), _ in self.items())

    def is_cusp(self) -> bool:
        return all(4 * n * self.index - r * r > 0 for (n, r), _ in self.items())

    def __add__(self, other: 'JacobiForm') -> 'JacobiForm':
        return jacobi_add(self, other)

    def __sub__(self, other: 'JacobiForm') -> 'JacobiForm':
        return jacobi_add(self, jacobi_scale(other, -1))

    def __mul__(self, other: 'JacobiForm') -> 'JacobiForm':
        return jacobi_mul(self, other)


def scalar_form(f: QSeries, weight: int, name: str = '') -> JacobiForm:
    """A level-one modular form viewed as a Jacobi form of index 0"""
    return JacobiForm(weight, 0, QSeries({(n, 0): c for (n,), c in f.items()}, f.prec, nvars=2), name)


def from_vvform(f: VVForm, weight: int, prec: Optional[int] = None) -> JacobiForm:
    """Jacobi form with theta decomposition f

    c(n, r) = c_f((4nm - r^2)/4m, r mod 2m).
    """
    m = f.fqm.jacobi_index
    if m is None:
        raise HermringError(f"{f.fqm.describe()} is not a Jacobi discriminant form")
    if prec is None:
        prec = f.prec // (4 * m)
    coeffs = {}
    rmax = isqrt(4 * m * max(prec - 1, 0))
    for n in range(prec):
        for r in range(-rmax, rmax + 1):
            D = 4 * n * m - r * r
            if D >= f.prec:
                continue
            c = f.components[r % (2 * m)][D]
            if c:
                coeffs[(n, r)] = c
    return JacobiForm(weight, m, QSeries(coeffs, prec, nvars=2))


def theta_decomposition(phi: JacobiForm) -> VVForm:
    """Vector-valued form (h_mu) with h_mu = sum_D c(n, r) q^{D/4m}, r = mu mod 2m"""
    m = phi.index
    fqm = fqm_for_jacobi_index(m)
    scaled_prec = 4 * m * phi.prec - m * m
    components: dict[int, dict[int, Fraction]] = {}
    for (n, r), c in phi.items():
        D = 4 * n * m - r * r
        if D < scaled_prec and -m < r <= m:
            components.setdefault(r % (2 * m), {})[D] = c
    return VVForm(
        fqm, Fraction(2 * phi.weight - 1, 2),
        {mu: QSeries(v, scaled_prec) for mu, v in components.items()},
        scaled_prec,
    )


def jacobi_eisenstein(k: int, m: int, prec: int) -> JacobiForm:
    """Normalized Jacobi Eisenstein series E_{k,m}, c(0,0) = 1

    Raises:
        ParityError: If k is odd or smaller than 4
    """
    if k < 4 or k % 2:
        raise ParityError(f"E_{{k,m}} needs an even weight k >= 4, got {k}")
    vv = vv_eisenstein(fqm_for_jacobi_index(m), Fraction(2 * k - 1, 2), prec)
    form = from_vvform(vv, k, prec)
    form.name = f"E{k},{m}"
    return form


def jacobi_add(a: JacobiForm, b: JacobiForm) -> JacobiForm:
    if (a.weight, a.index) != (b.weight, b.index):
        raise HermringError(
            f"Cannot add Jacobi forms of weight/index {a.weight}/{a.index} and {b.weight}/{b.index}"
        )
    return JacobiForm(a.weight, a.index, a.series + b.series)


def jacobi_scale(a: JacobiForm, c) -> JacobiForm:
    return JacobiForm(a.weight, a.index, a.series * Fraction(c), a.name)


def jacobi_mul(a: JacobiForm, b: JacobiForm) -> JacobiForm:
    """Product; weights and indices add"""
    return JacobiForm(a.weight + b.weight, a.index + b.index, a.series * b.series)


def jacobi_div_delta(a: JacobiForm) -> JacobiForm:
    """a / Delta, weight drops by 12

    Raises:
        InexactDivisionError: If the quotient has a pole or singular support
    """
    delta = scalar_form(delta_series(a.prec + 1), 12).series
    quotient = JacobiForm(a.weight - 12, a.index, a.series / delta)
    lowest = quotient.series.valuation()
    if lowest is not None and lowest < 0:
        raise InexactDivisionError(f"Quotient by Delta has a pole of order {-lowest}")
    if not quotient.is_holomorphic():
        raise InexactDivisionError("Quotient by Delta is not a holomorphic Jacobi form")
    return quotient


def jacobi_zderiv(a: JacobiForm) -> JacobiForm:
    """(2 pi i)^{-1} d/dz: c(n, r) -> r c(n, r), weight + 1 (quasi-modular)"""
    return JacobiForm(a.weight + 1, a.index, a.series.laurent_derivative())


def jacobi_hecke_v(phi: JacobiForm, l: int) -> JacobiForm:
    """Index-raising operator V_l: c(n, r) = sum_{a | (n, r, l)} a^{k-1} c_phi(nl/a^2, r/a)"""
    if l < 1:
        raise HermringError(f"V_l needs l >= 1, got {l}")
    m = phi.index * l
    prec = (phi.prec - 1) // l + 1
    coeffs = {}
    for n in range(prec):
        rmax = isqrt(4 * n * m)
        for r in range(-rmax, rmax + 1):
            total = Fraction(0)
            for a in divisors(l):
                if n % a or r % a:
                    continue
                total += a ** (phi.weight - 1) * phi.coefficient(n * l // (a * a), r // a)
            if total:
                coeffs[(n, r)] = total
    return JacobiForm(phi.weight, m, QSeries(coeffs, prec, nvars=2))


def coefficient_law_holds(phi: JacobiForm) -> bool:
    """c(n, r) depends only on (4nm - r^2, r mod 2m) on the stored range"""
    m = phi.index
    seen: dict[tuple[int, int], Fraction] = {}
    rmax = isqrt(4 * m * max(phi.prec - 1, 0))
    for n in range(phi.prec):
        for r in range(-rmax, rmax + 1):
            key = (4 * n * m - r * r, r % (2 * m)) if m else (n, r)
            value = phi.coefficient(n, r)
            if key in seen and seen[key] != value:
                return False
            seen.setdefault(key, value)
    return True
