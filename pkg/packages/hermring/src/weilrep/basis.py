"""Bases of vector-valued modular forms and pinning of printed input forms

A basis of M_kappa(rho*) is assembled from candidates in a fixed order:
the Eisenstein series, E_4, E_6 and Delta times lower bases, Serre
derivatives of the basis two weights lower, and finally theta contractions.
A candidate is kept when it raises the rank. The construction stops at the
expected dimension and fails loudly below it.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Optional, Sequence, Union

from src.errors import (
    InconsistentSystemError,
    RankDeficiencyError,
    UnsupportedCaseError,
)
from src.series.classical import delta_series, dim_cusp_forms, dim_modular_forms, eisenstein_series
from src.series.linalg import rank, solve_combination
from src.series.qseries import QSeries
from src.weilrep.dimension import vv_dimension_formula
from src.weilrep.eisenstein import vv_eisenstein
from src.weilrep.fqm import FQM
from src.weilrep.theta import harmonic_triples, isotropic_lines, theta_contraction
from src.weilrep.vvform import TwistedSeries, VVForm, bb_map, serre_derivative, twisted_map

Seed = Union[QSeries, TwistedSeries]


def jacobi_dimension(k: int, m: int) -> int:
    """dim J_{k,m} of holomorphic Jacobi forms (Eichler-Zagier formula)"""
    if k < 4:
        if m > 36:
            raise UnsupportedCaseError(f"Low-weight dimension of J_{{{k},{m}}} is not tabulated")
        return 0
    if k % 2 == 0:
        return sum(
            dim_modular_forms(k + 2 * j) - (-(-j * j // (4 * m)))
            for j in range(m + 1)
        )
    return sum(dim_cusp_forms(k + 2 * j - 1) - j * j // (4 * m) for j in range(1, m))


def vv_dimension_expected(fqm: FQM, weight) -> int:
    """Dimension of M_kappa(rho*)

    Field cases use the Riemann-Roch formula of vv_dimension_formula; Jacobi
    cases use dim J_{k,m} with k = kappa + 1/2.
    """
    weight = Fraction(weight)
    if fqm.is_field:
        if weight.denominator != 1:
            return 0
        kappa = int(weight)
        if kappa <= 0:
            return 0
        return vv_dimension_formula(fqm, kappa)
    k = weight + Fraction(1, 2)
    if k.denominator != 1 or k < 0:
        return 0
    return jacobi_dimension(int(k), fqm.jacobi_index)


def _eisenstein_admissible(fqm: FQM, weight: Fraction) -> bool:
    if fqm.is_field:
        return weight.denominator == 1 and weight >= 3 and weight.numerator % 2 == 1
    k = weight + Fraction(1, 2)
    return k.denominator == 1 and k >= 4 and k.numerator % 2 == 0


def _candidates(
    fqm: FQM, weight: Fraction, prec: int, lines: Sequence[tuple[int, int, int]]
) -> Iterator[VVForm]:
    if _eisenstein_admissible(fqm, weight):
        yield vv_eisenstein(fqm, weight, prec)
    for shift, series in (
        (4, eisenstein_series(4, prec)),
        (6, eisenstein_series(6, prec)),
        (12, delta_series(prec)),
    ):
        for f in _holomorphic_basis(fqm, weight - shift, prec, tuple(lines)):
            yield f.times_scalar(series, shift)
    for f in _holomorphic_basis(fqm, weight - 2, prec, tuple(lines)):
        yield serre_derivative(f)
    if fqm.is_field and weight >= 3 and weight.denominator == 1:
        for triple in harmonic_triples(int(weight) - 3):
            for line in lines:
                yield theta_contraction(fqm, triple, line, prec)


@lru_cache(maxsize=None)
def _holomorphic_basis(
    fqm: FQM, weight: Fraction, prec: int, lines: tuple[tuple[int, int, int], ...]
) -> tuple[VVForm, ...]:
    expected = vv_dimension_expected(fqm, weight)
    if expected == 0:
        return ()
    scaled_prec = fqm.scale * prec
    chosen: list[VVForm] = []
    rows: list[list[Fraction]] = []
    for candidate in _candidates(fqm, weight, prec, lines):
        vector = candidate.flatten(scaled_prec)
        if not any(vector) or rank(rows + [vector]) == len(rows):
            continue
        rows.append(vector)
        chosen.append(candidate.truncate(scaled_prec))
        if len(chosen) == expected:
            return tuple(chosen)
    raise RankDeficiencyError(
        f"Found only {len(chosen)} of {expected} independent forms of weight {weight} "
        f"for {fqm.describe()}"
    )


def vv_basis(
    fqm: FQM,
    weight,
    prec: int,
    pole_order: int = 0,
    lines: Optional[Sequence[Sequence[int]]] = None,
) -> list[VVForm]:
    """Basis of holomorphic (pole_order = 0) or nearly-holomorphic vector-valued forms

    Args:
        fqm: Discriminant form
        weight: kappa
        prec: Coefficients c(n, gamma) with n < prec are computed
        pole_order: P > 0 returns M_{kappa + 12P}(rho*) / Delta^P, the forms
            with poles of order at most P at the cusp
        lines: Isotropic lines tried by theta contractions (default: all)

    Returns:
        Linearly independent list of length equal to the expected dimension

    Raises:
        RankDeficiencyError: If the candidates span less than the expected dimension

    Example usage:
        basis = vv_basis(fqm_for_field(-7), 9, prec=26)
        len(basis)   # 3
    """
    weight = Fraction(weight)
    if lines is None:
        lines = isotropic_lines(fqm.order) if fqm.is_field else []
    lines = tuple(tuple(line) for line in lines)
    if pole_order == 0:
        return list(_holomorphic_basis(fqm, weight, prec, lines))
    lifted = _holomorphic_basis(fqm, weight + 12 * pole_order, prec + 2 * pole_order, lines)
    delta_power = delta_series(prec + 2 * pole_order) ** pole_order
    return [
        f.divide_scalar(delta_power, 12 * pole_order).truncate(fqm.scale * prec)
        for f in lifted
    ]


def _seed_vector(seed: Seed, prec: int, labels: Optional[Mapping[int, int]], p: int) -> list[Fraction]:
    if isinstance(seed, QSeries):
        return [seed[m] for m in range(prec)]
    vector = []
    for m in range(prec):
        label, c = seed.coefficient(m)
        if label is None or labels is None:
            vector.append(c)
            continue
        expected = labels[m % p]
        vector.append(c if label == expected else -c)
    return vector


def vv_pin(
    seed: Seed,
    basis: Sequence[VVForm],
    labels: Optional[Mapping[int, int]] = None,
) -> VVForm:
    """The unique combination of basis forms whose scalar image matches the seed

    Even seeds are compared with bb_map, twisted seeds with twisted_map
    under the given labels. Every printed coefficient must match.

    Raises:
        InconsistentSystemError: If no combination matches, or the seed is too
            short to single one out
    """
    if not basis:
        raise InconsistentSystemError("Cannot pin a seed against an empty basis")
    fqm = basis[0].fqm
    prec = min(seed.prec, basis[0].prec)
    if isinstance(seed, QSeries):
        images = [bb_map(f) for f in basis]
        rows = [[image[m] for m in range(prec)] for image in images]
    else:
        if labels is None:
            raise InconsistentSystemError("Twisted seeds need the twisted label convention")
        images = [twisted_map(f, labels) for f in basis]
        rows = [_seed_vector(image, prec, labels, fqm.order) for image in images]
    target = _seed_vector(seed, prec, labels, fqm.order)
    coefficients, unique = solve_combination(rows, target)
    if not unique:
        raise InconsistentSystemError(
            f"Seed with {prec} coefficients does not single out one of {len(basis)} basis forms"
        )
    result = basis[0] * coefficients[0]
    for c, f in zip(coefficients[1:], basis[1:]):
        result = result + f * c
    return result
