"""Pullbacks of Hermitian forms to Heegner divisors

For lambda in O_K of norm l the divisor H_l carries the paramodular
threefold of level l, embedded by (tau, z, w) -> [[tau, lambda' z], [lambda z, l w]].
A Hermitian index (a, t, b) with t = mu/sqrt(d) lands on the paramodular
index (a, r, b) where nu = mu * conj(lambda) = X + Y*omega and r = Y. The
transverse coordinate iota = 2X + Y measures the distance from the divisor;
the N-th raw slice weights every coefficient by iota^N.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Dict, Optional, Tuple

from src.errors import HermringError, UnsupportedCaseError
from src.hermitian.expansion import HermExp
from src.jacobi.paramodular import ParamExp
from src.weilrep.fqm import norm

Element = Tuple[int, int]


def multiply(u: Element, v: Element, p: int) -> Element:
    """Product in O_K = Z + Z*omega with omega^2 = omega - (p+1)/4"""
    a, b = u
    c, d = v
    return a * c - b * d * (p + 1) // 4, a * d + b * c + b * d


def conjugate_element(u: Element) -> Element:
    """Galois conjugate of x + y*omega"""
    x, y = u
    return x + y, -y


def default_lambda(disc: int, level: int) -> Element:
    """A fixed primitive element of norm l: 1 for l = 1, omega when N(omega) = l, else the first found

    Raises:
        UnsupportedCaseError: If no primitive element of O_K has norm l
    """
    p = -disc
    if level == 1:
        return 1, 0
    if (p + 1) // 4 == level:
        return 0, 1
    bound = level + 1
    for y in range(0, bound + 1):
        for x in range(-bound, bound + 1):
            if norm(x, y, p) == level and gcd(x, y) == 1:
                return x, y
    raise UnsupportedCaseError(f"No primitive element of norm {level} in O_K for d = {disc}")


def gegenbauer_factor(k: int, N: int) -> Fraction:
    """Rising factorial (k - 3/2 + ceil(N/2))_{floor(N/2)}, equal to 1 for N <= 1"""
    start = Fraction(2 * k - 3, 2) + (N + 1) // 2
    return prod((start + j for j in range(N // 2)), start=Fraction(1))


def raw_pullback(f: HermExp, level: int, lam: Optional[Element] = None, N: int = 0) -> ParamExp:
    """Raw transverse Taylor slice of order N along H_l

    Args:
        f: Hermitian expansion
        level: Norm l of lambda
        lam: Element of norm l; defaults to default_lambda(d, l)
        N: Taylor order, N >= 0

    Returns:
        ParamExp of level l and weight k + N with c(a, r, b) = sum iota^N c(a, t, b)

    Raises:
        HermringError: If N(lambda) != l or N < 0
    """
    p = f.p
    lam = default_lambda(f.disc, level) if lam is None else tuple(lam)
    if norm(lam[0], lam[1], p) != level:
        raise HermringError(f"lambda = {lam} has norm {norm(lam[0], lam[1], p)}, expected {level}")
    if N < 0:
        raise HermringError(f"Pullback order must be nonnegative, got {N}")
    bar = conjugate_element(lam)
    coeffs: Dict[Tuple[int, int, int], Fraction] = {}
    for (a, x, y, b), c in f.coeffs.items():
        X, Y = multiply((x, y), bar, p)
        weight = (2 * X + Y) ** N
        if weight:
            key = (a, Y, b)
            coeffs[key] = coeffs.get(key, Fraction(0)) + weight * c
    return ParamExp(level, f.weight + N, coeffs, f.prec, f.name)


def pullback(f: HermExp, level: int, lam: Optional[Element] = None, N: int = 0) -> ParamExp:
    """The order-N pullback along H_l in the Gegenbauer normalization

    Equal to raw_pullback times gegenbauer_factor(k, N). For N = 0 it is the
    restriction to the divisor and a ring homomorphism.

    Example usage:
        pullback(E4, 1)                 # Siegel Eisenstein series of weight 4
        pullback(b7, 2, (0, 1))         # zero
    """
    raw = raw_pullback(f, level, lam, N)
    factor = gegenbauer_factor(f.weight, N)
    return ParamExp(level, raw.weight, {e: factor * c for e, c in raw.coeffs.items()}, raw.prec, raw.name)


def vanishing_order(
    f: HermExp, level: int, lam: Optional[Element] = None, max_order: int = 6
) -> Optional[int]:
    """Least N <= max_order with a nonzero raw slice along H_l

    Returns None when every slice through max_order vanishes at this precision,
    meaning the order is at least max_order + 1.
    """
    for N in range(max_order + 1):
        if not raw_pullback(f, level, lam, N).is_zero():
            return N
    return None


@dataclass
class QuasiPullback:
    """First non-vanishing pullback of a form along a divisor"""

    order: int
    form: ParamExp


def quasi_pullback(
    f: HermExp, level: int, lam: Optional[Element] = None, max_order: int = 6
) -> Optional[QuasiPullback]:
    """Normalized pullback of order vanishing_order(f), or None past max_order"""
    order = vanishing_order(f, level, lam, max_order)
    if order is None:
        return None
    return QuasiPullback(order, pullback(f, level, lam, order))
