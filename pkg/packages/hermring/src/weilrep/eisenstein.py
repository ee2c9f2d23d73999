"""Vector-valued Eisenstein series in closed form

Field cases (kappa odd): the plus-space Eisenstein series of level p and
character chi_{-p},
    1 + A sum_n (sigma^{chi,1}_{kappa-1}(n) - sigma^{1,chi}_{kappa-1}(n)) q^n,
    A = -2 kappa / B_{kappa, chi},
pulled back through bb_invert.

Jacobi cases (kappa = k - 1/2): theta decomposition of
E_{k,m} = E_{k,1} | V_m / sigma_{k-1}(m) with E_{k,1}(n, r) given by Cohen's
function, H(k-1, 4n - r^2) / zeta(3 - 2k).
"""

from fractions import Fraction
from functools import lru_cache

from src.errors import ParityError
from src.series.arith import cohen_h, divisors, generalized_bernoulli, sigma, twisted_sigma
from src.series.qseries import QSeries
from src.weilrep.fqm import FQM
from src.weilrep.vvform import VVForm, bb_invert


def field_eisenstein_scalar(p: int, kappa: int, prec: int) -> QSeries:
    """Scalar plus-space Eisenstein series of weight kappa, level p, below q^prec"""
    D = -p
    factor = -Fraction(2 * kappa) / generalized_bernoulli(kappa, D)
    coeffs = {0: Fraction(1)}
    for n in range(1, prec):
        value = (
            twisted_sigma(kappa - 1, n, D, twist_divisor=True)
            - twisted_sigma(kappa - 1, n, D, twist_divisor=False)
        )
        if value:
            coeffs[n] = factor * value
    return QSeries(coeffs, prec)


@lru_cache(maxsize=None)
def jacobi_eisenstein_coefficient(k: int, m: int, n: int, r: int) -> Fraction:
    """Coefficient c(n, r) of the normalized Jacobi Eisenstein series E_{k,m}"""
    total = Fraction(0)
    for a in divisors(m):
        if n % a or r % a:
            continue
        nn, rr = n * m // (a * a), r // a
        total += a ** (k - 1) * cohen_h(k - 1, 4 * nn - rr * rr)
    return total / (cohen_h(k - 1, 0) * sigma(k - 1, m))


def vv_eisenstein(fqm: FQM, weight, prec: int) -> VVForm:
    """Eisenstein series with constant term e_0 for the dual Weil representation

    Args:
        fqm: Field or Jacobi discriminant form
        weight: kappa; odd integer >= 3 for fields, k - 1/2 with k >= 4 even for Jacobi
        prec: Coefficients c(n, gamma) with n < prec are computed

    Returns:
        VVForm with rational coefficients

    Raises:
        ParityError: If the weight is inadmissible for the form

    Example usage:
        E = vv_eisenstein(fqm_for_field(-11), 3, prec=2)
        bb_map(E)    # 1 + 2q^2 + 20q^6 + 32q^7 + 34q^8 + 52q^10 + ...
    """
    weight = Fraction(weight)
    if fqm.is_field:
        if weight.denominator != 1 or weight < 3 or weight.numerator % 2 == 0:
            raise ParityError(
                f"Field Eisenstein series need an odd weight >= 3, got {weight}"
            )
        scalar = field_eisenstein_scalar(fqm.order, int(weight), fqm.scale * prec)
        return bb_invert(scalar, fqm, weight)

    k = weight + Fraction(1, 2)
    if k.denominator != 1 or k < 4 or k.numerator % 2:
        raise ParityError(
            f"Jacobi Eisenstein series need weight k - 1/2 with k >= 4 even, got {weight}"
        )
    k = int(k)
    m = fqm.jacobi_index
    scaled_prec = fqm.scale * prec
    components = {}
    for mu in range(fqm.order):
        coeffs = {}
        for D in range(fqm.exponent_residue(mu), scaled_prec, fqm.scale):
            n = (D + mu * mu) // (4 * m)
            coeffs[D] = jacobi_eisenstein_coefficient(k, m, n, mu)
        components[mu] = QSeries(coeffs, scaled_prec)
    return VVForm(fqm, weight, components, scaled_prec)
