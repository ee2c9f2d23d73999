"""Graded sparse convolution shared by the paramodular and Hermitian expansions

Coefficients are cleared of denominators once per operand so the inner loop
multiplies Python integers only.
"""

from collections import defaultdict
from fractions import Fraction
from math import lcm
from typing import Callable, Dict, Mapping, Tuple

Index = Tuple[int, ...]


def _integral(coeffs: Mapping[Index, Fraction]) -> tuple[int, Dict[Index, int]]:
    denominator = lcm(1, *(c.denominator for c in coeffs.values()))
    return denominator, {e: int(c * denominator) for e, c in coeffs.items()}


def _buckets(coeffs: Mapping[Index, int], grade: Callable[[Index], int]) -> Dict[int, list]:
    buckets: Dict[int, list] = defaultdict(list)
    for e, c in coeffs.items():
        buckets[grade(e)].append((e, c))
    return buckets


def graded_product(
    left: Mapping[Index, Fraction],
    right: Mapping[Index, Fraction],
    grade: Callable[[Index], int],
    bound: int,
) -> Dict[Index, Fraction]:
    """Product of two sparse series keeping exponents of grade at most bound

    Exponents add componentwise; grade must be additive and nonnegative.

    Example usage:
        trace = lambda e: e[0] + e[-1]
        graded_product(f.coeffs, g.coeffs, trace, 10)
    """
    if not left or not right:
        return {}
    lden, lint = _integral(left)
    rden, rint = _integral(right)
    lb, rb = _buckets(lint, grade), _buckets(rint, grade)
    out: Dict[Index, int] = defaultdict(int)
    for g1, bucket1 in lb.items():
        for g2, bucket2 in rb.items():
            if g1 + g2 > bound:
                continue
            for e1, c1 in bucket1:
                for e2, c2 in bucket2:
                    out[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    denominator = lden * rden
    return {e: Fraction(c, denominator) for e, c in out.items() if c}


def graded_sum(
    left: Mapping[Index, Fraction], right: Mapping[Index, Fraction], scale: Fraction = Fraction(1)
) -> Dict[Index, Fraction]:
    """left + scale * right with zeros removed"""
    total = dict(left)
    for e, c in right.items():
        total[e] = total.get(e, Fraction(0)) + scale * c
    return {e: c for e, c in total.items() if c}
