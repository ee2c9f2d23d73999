"""Classical level-one q-expansions used as building blocks everywhere else"""

from fractions import Fraction
from math import isqrt

from src.errors import HermringError, ParityError
from src.series.arith import bernoulli, sigma
from src.series.qseries import QSeries

CLASSICAL_NAMES = ('E2', 'E4', 'E6', 'Ek', 'Delta', 'Theta')


def eisenstein_series(k: int, prec: int) -> QSeries:
    """Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n

    Raises:
        ParityError: If k is odd or smaller than 2
    """
    if k < 2 or k % 2:
        raise ParityError(f"E_k needs an even weight k >= 2, got {k}")
    factor = -Fraction(2 * k) / bernoulli(k)
    coeffs = {0: 1}
    coeffs.update({n: factor * sigma(k - 1, n) for n in range(1, prec)})
    return QSeries(coeffs, prec)


def euler_product(prec: int) -> list[int]:
    """Coefficients of prod_{n>=1} (1 - q^n) below q^prec (pentagonal numbers)"""
    values = [0] * prec
    j = 0
    while True:
        sign = -1 if j % 2 else 1
        hit = False
        for g in {j * (3 * j - 1) // 2, j * (3 * j + 1) // 2}:
            if g < prec:
                values[g] = sign
                hit = True
        if not hit:
            break
        j += 1
    return values


def delta_series(prec: int) -> QSeries:
    """Discriminant function Delta = q prod (1 - q^n)^24"""
    base = euler_product(prec)
    power = [1] + [0] * (prec - 1)
    for _ in range(24):
        power = [
            sum(power[i] * base[n - i] for i in range(n + 1))
            for n in range(prec)
        ]
    return QSeries({n + 1: c for n, c in enumerate(power)}, prec)


def theta_series(prec: int) -> QSeries:
    """Jacobi theta function sum_{n in Z} q^{n^2}"""
    coeffs = {0: 1}
    coeffs.update({n * n: 2 for n in range(1, isqrt(max(prec - 1, 0)) + 1)})
    return QSeries(coeffs, prec)


def classical_series(name: str, prec: int, k: int | None = None) -> QSeries:
    """Look up a classical q-expansion by name

    Args:
        name: One of E2, E4, E6, Ek, Delta, Theta
        prec: Truncation bound (number of coefficients), at least 1
        k: Weight, required for Ek

    Returns:
        The truncated series

    Raises:
        HermringError: If the name is unknown or prec < 1
        ParityError: If Ek is requested with an odd weight

    Example usage:
        classical_series('E4', 5)[1]      # Fraction(240)
        classical_series('Theta', 10)     # 1 + 2q + 2q^4 + 2q^9
    """
    if prec < 1:
        raise HermringError(f"Precision must be at least 1, got {prec}")
    if name == 'E2':
        return eisenstein_series(2, prec)
    if name == 'E4':
        return eisenstein_series(4, prec)
    if name == 'E6':
        return eisenstein_series(6, prec)
    if name == 'Ek':
        if k is None:
            raise HermringError("Ek needs a weight k")
        return eisenstein_series(k, prec)
    if name == 'Delta':
        return delta_series(prec)
    if name == 'Theta':
        return theta_series(prec)
    raise HermringError(
        f"Unknown classical series: {name}. Available: {', '.join(CLASSICAL_NAMES)}"
    )


def dim_modular_forms(k: int) -> int:
    """dim M_k(SL_2(Z))"""
    if k < 0 or k % 2 or k == 2:
        return 0
    return k // 12 if k % 12 == 2 else k // 12 + 1


def dim_cusp_forms(k: int) -> int:
    """dim S_k(SL_2(Z))"""
    if k < 12:
        return 0
    return dim_modular_forms(k) - 1


def five_halves_identity(m: int, prec: int) -> QSeries:
    """The weight 5/2 combination (6/m) theta' - E_2(4m tau) theta

    For m = 1, 2, 3 these are the intersection generating series of the
    Heegner divisors, e.g. m = 1 gives -1 + 10q + 70q^4 + 48q^5 + ...
    """
    if m < 1:
        raise HermringError(f"m must be positive, got {m}")
    theta = theta_series(prec)
    e2 = eisenstein_series(2, -(-prec // (4 * m))).rescale(4 * m).truncate(prec)
    return theta.derivative() * Fraction(6, m) - e2 * theta
