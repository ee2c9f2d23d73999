"""Dimensions of spaces of vector-valued modular forms by Riemann-Roch

On the (-1)^k eigenspace V of rho*(S^2), of dimension d,

    dim M_k(rho*) - dim S_{2-k}(rho) = d + dk/12 - alpha(e(k/4) rho*(S))
                                       - alpha((e(k/6) rho*(ST))^-1) - alpha(rho*(T))

where alpha(A) sums the arguments beta in [0, 1) of the eigenvalues e(beta)
of A on V. Eigenvalue multiplicities come from traces of powers, computed
once per discriminant form in exact cyclotomic arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from src.errors import HermringError, UnsupportedCaseError
from src.weilrep.cyclotomic import Cyclotomic
from src.weilrep.fqm import FQM
from src.weilrep.weil import CycMatrix, mat_identity, mat_mul, weil_matrices


def embed(x: Cyclotomic, order: int) -> Cyclotomic:
    """Image of x under Q(zeta_m) -> Q(zeta_order), zeta_m -> zeta_order^(order/m)"""
    if order % x.order:
        raise HermringError(f"Q(zeta_{x.order}) does not embed in Q(zeta_{order})")
    step = order // x.order
    coeffs = [Fraction(0)] * (step * len(x.coeffs))
    for i, c in enumerate(x.coeffs):
        coeffs[step * i] = c
    return Cyclotomic(order, coeffs)


@dataclass(frozen=True)
class _PowerTraces:
    """tr(A^m) and tr(A^m Z) for A = S (m < 4) and A = ST (m < 6), Z: gamma -> -gamma"""

    order: int
    s2_sign: int
    s: tuple
    st: tuple


def _traces(matrix: CycMatrix, fqm: FQM, order: int) -> tuple[Cyclotomic, Cyclotomic]:
    n = fqm.order
    plain = sum((matrix[i][i] for i in range(n)), Cyclotomic.rational(matrix[0][0].order, 0))
    twisted = sum((matrix[i][fqm.neg(i)] for i in range(n)), Cyclotomic.rational(matrix[0][0].order, 0))
    return embed(plain, order), embed(twisted, order)


@lru_cache(maxsize=None)
def _power_traces(fqm: FQM) -> _PowerTraces:
    w = weil_matrices(fqm)
    n = fqm.order
    base = w.order
    order = lcm(base, 12)
    st = [[w.S[i][j] * w.T[j][j] for j in range(n)] for i in range(n)]
    s_powers = [mat_identity(n, base), w.S]
    s_powers.append(mat_mul(w.S, w.S))
    s_powers.append(mat_mul(s_powers[2], w.S))
    st_powers = [mat_identity(n, base), st]
    for _ in range(4):
        st_powers.append(mat_mul(st_powers[-1], st))
    # S^2 = c Z with c = +-1 for even signature
    s2_sign = int(s_powers[2][fqm.neg(0)][0].rational_value())
    return _PowerTraces(
        order=order,
        s2_sign=s2_sign,
        s=tuple(_traces(m, fqm, order) for m in s_powers),
        st=tuple(_traces(m, fqm, order) for m in st_powers),
    )


def _alpha(traces: list[Cyclotomic], scalar_powers: list[Cyclotomic], order: int) -> Fraction:
    """Sum of eigenvalue arguments of a finite-order operator from its power traces on V"""
    N = len(traces)
    total = Fraction(0)
    for j in range(N):
        mult = Cyclotomic.rational(order, 0)
        for m in range(N):
            mult = mult + scalar_powers[m] * traces[m] * Cyclotomic.root_of_unity(order, Fraction(-j * m, N))
        count = mult.rational_value() / N
        if count.denominator != 1 or count < 0:
            raise HermringError(f"Eigenvalue multiplicity {count} is not a nonnegative integer")
        total += count * Fraction(j, N)
    return total


def vv_dimension_formula(fqm: FQM, weight: int) -> int:
    """dim M_k(rho*) for an integral weight k >= 0 and even signature

    Exact for k >= 2. For k = 1 it uses that weight one cusp forms for the
    dual representation vanish, which holds for the class number one fields
    here; for k = 0 it counts invariant vectors.

    Raises:
        UnsupportedCaseError: For odd signature (half-integral weights)

    Example usage:
        vv_dimension_formula(fqm_for_field(-7), 9)     # 3
    """
    if fqm.signature % 2:
        raise UnsupportedCaseError(
            f"The formula here covers integral weights only, not {fqm.describe()}"
        )
    if weight < 0:
        return 0
    if weight == 0:
        # invariants lie in the T-fixed span of the isotropic classes
        isotropic = [g for g in range(fqm.order) if fqm.q(g) == 0]
        if isotropic == [0] and fqm.order > 1:
            return 0
        raise UnsupportedCaseError(f"Weight 0 invariants are not computed for {fqm.describe()}")
    data = _power_traces(fqm)
    order = data.order
    sign = data.s2_sign * (-1) ** weight
    on_v = [(t + z * sign) * Fraction(1, 2) for t, z in data.s]
    d = (fqm.order + sign) // 2
    alpha_s = _alpha(on_v, [Cyclotomic.root_of_unity(order, Fraction(weight * m, 4)) for m in range(4)], order)
    st_on_v = [(t + z * sign) * Fraction(1, 2) for t, z in data.st]
    inverse = [st_on_v[(-m) % 6] for m in range(6)]
    alpha_st = _alpha(inverse, [Cyclotomic.root_of_unity(order, Fraction(-weight * m, 6)) for m in range(6)], order)
    alpha_t = Fraction(0)
    for gamma in fqm.representatives():
        if gamma == fqm.neg(gamma) and sign < 0:
            continue
        beta = -fqm.q(gamma)
        alpha_t += beta - (beta.numerator // beta.denominator)
    value = d + Fraction(d * weight, 12) - alpha_s - alpha_st - alpha_t
    if value.denominator != 1:
        raise HermringError(f"Dimension formula gave the non-integer {value} for {fqm.describe()}")
    return max(int(value), 0)
