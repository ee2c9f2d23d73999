"""Cyclic finite quadratic modules and the codifferent class map"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from src.errors import UnsupportedCaseError

SUPPORTED_DISCRIMINANTS = (-7, -11)


@dataclass(frozen=True)
class FQM:
    """Cyclic discriminant form Z/NZ with Q(gamma) = gamma^2 / scale mod 1

    Attributes:
        order: Group order N
        scale: Denominator D of the quadratic form; exponents of a
            vector-valued form are stored multiplied by D
        signature: Signature mod 8 of the underlying even lattice
        disc: Field discriminant for the Hermitian cases, else None
        jacobi_index: Jacobi index m for the Z/2mZ cases, else None
    """

    order: int
    scale: int
    signature: int
    disc: Optional[int] = None
    jacobi_index: Optional[int] = None

    def q(self, gamma: int) -> Fraction:
        """Q(gamma) mod 1 in [0, 1)"""
        value = Fraction(gamma * gamma, self.scale)
        return value - (value.numerator // value.denominator)

    def bilinear(self, beta: int, gamma: int) -> Fraction:
        """<beta, gamma> = Q(beta + gamma) - Q(beta) - Q(gamma) mod 1"""
        value = Fraction(2 * beta * gamma, self.scale)
        return value - (value.numerator // value.denominator)

    def neg(self, gamma: int) -> int:
        return (-gamma) % self.order

    def exponent_residue(self, gamma: int) -> int:
        """Residue mod scale of the scaled exponents D*n allowed in component gamma

        Vector-valued forms for the dual Weil representation have n = -Q(gamma) mod 1.
        """
        return (-gamma * gamma) % self.scale

    def components_for_residue(self, residue: int) -> list[int]:
        """All gamma whose component carries scaled exponents = residue mod scale"""
        return [g for g in range(self.order) if self.exponent_residue(g) == residue % self.scale]

    def representatives(self) -> list[int]:
        """One gamma from each pair {gamma, -gamma}"""
        return [g for g in range(self.order) if g <= self.neg(g)]

    @property
    def cyclotomic_order(self) -> int:
        return lcm(8, 4 * self.order, self.scale)

    @property
    def is_field(self) -> bool:
        return self.disc is not None

    def describe(self) -> str:
        if self.is_field:
            return f"O_K for d={self.disc}"
        return f"Jacobi index {self.jacobi_index}"


def fqm_for_field(d: int) -> FQM:
    """Discriminant form of (O_K, norm) for K = Q(sqrt d)

    The class of t = (x + y*omega)/sqrt(d) is x + y(p+1)/2 mod p, under which
    Q(gamma) = gamma^2 / p.

    Raises:
        UnsupportedCaseError: If d is not -7 or -11
    """
    if d not in SUPPORTED_DISCRIMINANTS:
        raise UnsupportedCaseError(
            f"Unsupported field discriminant: {d}. "
            f"Available: {', '.join(str(x) for x in SUPPORTED_DISCRIMINANTS)}"
        )
    p = -d
    return FQM(order=p, scale=p, signature=2, disc=d)


def fqm_for_jacobi_index(m: int) -> FQM:
    """Discriminant form Z/2mZ with Q(gamma) = gamma^2 / 4m"""
    if m < 1:
        raise UnsupportedCaseError(f"Jacobi index must be positive, got {m}")
    return FQM(order=2 * m, scale=4 * m, signature=1, jacobi_index=m)


def codifferent_class(x: int, y: int, p: int) -> int:
    """Class in O_K^#/O_K = Z/p of the codifferent element (x + y*omega)/sqrt(-p)"""
    return (x + y * (p + 1) // 2) % p


def norm(x: int, y: int, p: int) -> int:
    """Norm of x + y*omega in O_K for K = Q(sqrt -p)"""
    return x * x + x * y + (p + 1) // 4 * y * y
