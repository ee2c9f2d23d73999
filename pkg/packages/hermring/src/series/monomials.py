"""Weighted monomials in named generators"""

from typing import Sequence

Monomial = tuple[int, ...]


def weighted_monomials(weights: Sequence[int], k: int) -> list[Monomial]:
    """All exponent vectors e with sum e_i * weights[i] = k

    Ordered lexicographically by exponent vector, largest first, so the
    output is deterministic and the first generator varies slowest.

    Example usage:
        weighted_monomials([4, 6], 12)   # [(3, 0), (0, 2)]
    """
    if k < 0:
        return []
    result: list[Monomial] = []

    def extend(i: int, remaining: int, prefix: list[int]) -> None:
        if i == len(weights):
            if remaining == 0:
                result.append(tuple(prefix))
            return
        w = weights[i]
        for e in range(remaining // w, -1, -1):
            prefix.append(e)
            extend(i + 1, remaining - e * w, prefix)
            prefix.pop()

    extend(0, k, [])
    return result


def monomial_label(names: Sequence[str], exponents: Monomial) -> str:
    """Human-readable product such as 'E4^2*b7'; '1' for the empty monomial"""
    parts = []
    for name, e in zip(names, exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return '*'.join(parts) or '1'


def parse_monomial(names: Sequence[str], label: str) -> Monomial:
    """Inverse of monomial_label; factors may also be separated by spaces

    Raises:
        KeyError: If a factor names an unknown generator
    """
    exponents = [0] * len(names)
    index = {name: i for i, name in enumerate(names)}
    for factor in label.replace('*', ' ').split():
        if factor == '1':
            continue
        name, _, power = factor.partition('^')
        if name not in index:
            raise KeyError(f"Unknown generator '{name}'. Available: {', '.join(names)}")
        exponents[index[name]] += int(power) if power else 1
    return tuple(exponents)
