"""The Maass lift from vector-valued forms for O_K to Hermitian modular forms"""

from fractions import Fraction
from math import gcd

from src.errors import HermringError, ParityError, PrecisionError
from src.hermitian.expansion import HermExp, herm_indices
from src.series.arith import bernoulli, divisors
from src.weilrep.fqm import codifferent_class, norm
from src.weilrep.vvform import Holomorphy, VVForm


def maass_lift(f: VVForm, k: int, prec: int, name: str = '') -> HermExp:
    """Additive lift of a weight k - 1 form for the dual Weil representation of O_K

    c(a, t, b) = sum_{n | (a, b, t)} n^(k-1) c_f((ab - N(t))/n^2, t/n), with the
    boundary terms -B_k/2k c_f(0, 0) (E_k(tau) + E_k(w) - 1). Summing over all
    common divisors of the full index avoids choosing a positive cone.

    Args:
        f: Holomorphic VVForm over fqm_for_field(d) of weight k - 1
        k: Weight of the lift
        prec: Trace bound a + b <= prec
        name: Optional name carried by the output

    Returns:
        HermExp of weight k

    Raises:
        HermringError: If f is not holomorphic or has the wrong weight
        ParityError: If k is odd and c_f(0, 0) is nonzero
        PrecisionError: If f is too short for the trace bound

    Example usage:
        fqm = fqm_for_field(-7)
        E = maass_lift(vv_eisenstein(fqm, 3, prec=26), 4, prec=10)
        E.coefficient(0, 0, 0, 0)     # -B_4/8 = 1/240
    """
    fqm = f.fqm
    if not fqm.is_field:
        raise HermringError(f"The Maass lift needs a field discriminant form, got {fqm.describe()}")
    if f.weight != k - 1:
        raise HermringError(f"Input of weight {f.weight} cannot lift to weight {k}")
    if f.holomorphy == Holomorphy.NEARLY_HOLOMORPHIC:
        raise HermringError("The Maass lift needs a holomorphic input")
    p = fqm.order
    constant = f.components[0][0]
    if k % 2 and constant:
        raise ParityError(f"Odd weight {k} needs c(0, 0) = 0, got {constant}")
    top = (prec // 2) * (prec - prec // 2)
    if f.prec <= p * top:
        raise PrecisionError(
            f"Trace bound {prec} needs input coefficients below q^{top + 1}, "
            f"have q^{Fraction(f.prec, p)}"
        )
    coeffs = {}
    if constant:
        coeffs[(0, 0, 0, 0)] = -bernoulli(k) / (2 * k) * constant
    for index in herm_indices(p, prec):
        a, x, y, b = index
        if a == 0 and b == 0:
            continue
        content = gcd(gcd(a, b), gcd(x, y))
        discriminant = p * a * b - norm(x, y, p)
        total = Fraction(0)
        for n in divisors(content):
            gamma = codifferent_class(x // n, y // n, p)
            total += n ** (k - 1) * f.components[gamma][discriminant // (n * n)]
        if total:
            coeffs[index] = total
    return HermExp(-p, k, coeffs, prec, name)
