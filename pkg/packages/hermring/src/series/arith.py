"""Arithmetic helpers: Bernoulli numbers, divisor sums, quadratic characters

All values are exact. sympy supplies factorization, divisors, the Mobius
function and Jacobi symbols; the Bernoulli numbers use their own memoized
recurrence so the B_1 = -1/2 convention is explicit.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from sympy import divisors as _divisors
from sympy import factorint, jacobi_symbol

from src.errors import HermringError


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """n-th Bernoulli number with B_1 = -1/2

    Uses the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0.

    Args:
        n: Index, n >= 0

    Returns:
        B_n as an exact fraction

    Example usage:
        bernoulli(4)   # Fraction(-1, 30)
        bernoulli(12)  # Fraction(-691, 2730)
    """
    if n < 0:
        raise HermringError(f"Bernoulli index must be nonnegative, got {n}")
    if n == 0:
        return Fraction(1)
    total = sum(comb(n + 1, j) * bernoulli(j) for j in range(n))
    return -total / (n + 1)


def bernoulli_polynomial(k: int, x: Fraction) -> Fraction:
    """Evaluate the Bernoulli polynomial B_k at a rational point"""
    x = Fraction(x)
    return sum(comb(k, j) * bernoulli(j) * x ** (k - j) for j in range(k + 1))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n in increasing order"""
    return tuple(int(d) for d in _divisors(n))


@lru_cache(maxsize=None)
def sigma(k: int, n: int) -> int:
    """Divisor power sum sigma_k(n)"""
    return sum(d ** k for d in divisors(n))


def mobius(n: int) -> int:
    factors = factorint(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for n >= 0

    Args:
        D: Discriminant (upper argument)
        n: Nonnegative lower argument

    Returns:
        -1, 0 or 1
    """
    if n == 0:
        return 1 if abs(D) == 1 else 0
    result = 1
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        result *= 1 if D % 8 in (1, 7) else -1
    if n == 1:
        return result
    return result * int(jacobi_symbol(D % n, n))


def is_discriminant(D: int) -> bool:
    return D % 4 in (0, 1)


def fundamental_split(D: int) -> tuple[int, int]:
    """Write a nonsquare discriminant as D = D0 * f^2 with D0 fundamental

    Args:
        D: Discriminant (D = 0, 1 mod 4), not a perfect square

    Returns:
        Tuple (D0, f)

    Raises:
        HermringError: If D is not a discriminant
    """
    if not is_discriminant(D) or D == 0:
        raise HermringError(f"{D} is not a nonzero discriminant")
    squarefree = 1
    for p, e in factorint(abs(D)).items():
        if e % 2:
            squarefree *= p
    d = squarefree if D > 0 else -squarefree
    D0 = d if d % 4 == 1 else 4 * d
    f = isqrt(D // D0)
    if D0 * f * f != D:
        raise HermringError(f"Could not split discriminant {D}")
    return D0, f


@lru_cache(maxsize=None)
def generalized_bernoulli(k: int, D: int) -> Fraction:
    """Generalized Bernoulli number B_{k, chi_D} for a fundamental discriminant D

    B_{k,chi} = f^{k-1} sum_{a=1}^{f} chi(a) B_k(a/f) with f = |D|.
    For D = 1 the ordinary Bernoulli number is returned.

    Example usage:
        generalized_bernoulli(3, -4)  # Fraction(3, 2)
    """
    if D == 1:
        return bernoulli(k)
    f = abs(D)
    total = sum(
        kronecker(D, a) * bernoulli_polynomial(k, Fraction(a, f))
        for a in range(1, f + 1)
    )
    return f ** (k - 1) * total


@lru_cache(maxsize=None)
def cohen_h(r: int, N: int) -> Fraction:
    """Cohen's function H(r, N)

    H(r, 0) = zeta(1 - 2r); H(r, N) = 0 unless -N is a discriminant; otherwise,
    writing -N = D0 f^2,
        H(r, N) = L(1 - r, chi_D0) * sum_{d | f} mu(d) chi_D0(d) d^{r-1} sigma_{2r-1}(f/d)
    with L(1 - r, chi) = -B_{r,chi} / r.

    Args:
        r: Positive integer (the Jacobi Eisenstein series E_{k,1} uses r = k - 1)
        N: Nonnegative integer

    Returns:
        Exact value of H(r, N)
    """
    if N == 0:
        return -bernoulli(2 * r) / (2 * r)
    if not is_discriminant(-N):
        return Fraction(0)
    D0, f = fundamental_split(-N)
    l_value = -generalized_bernoulli(r, D0) / r
    correction = sum(
        mobius(d) * kronecker(D0, d) * d ** (r - 1) * sigma(2 * r - 1, f // d)
        for d in divisors(f)
    )
    return l_value * correction


def twisted_sigma(power: int, n: int, D: int, *, twist_divisor: bool) -> int:
    """Twisted divisor sum

    Args:
        power: Exponent applied to the divisor d
        n: Positive integer
        D: Discriminant of the quadratic character
        twist_divisor: If True computes sum chi(d) d^power, otherwise
            sum chi(n/d) d^power

    Returns:
        The integer divisor sum
    """
    if twist_divisor:
        return sum(kronecker(D, d) * d ** power for d in divisors(n))
    return sum(kronecker(D, n // d) * d ** power for d in divisors(n))
