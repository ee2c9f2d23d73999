"""Exact matrices of the dual Weil representation on the generators S and T"""

from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from src.errors import HermringError
from src.weilrep.cyclotomic import Cyclotomic
from src.weilrep.fqm import FQM

CycMatrix = list[list[Cyclotomic]]


def mat_mul(a: CycMatrix, b: CycMatrix) -> CycMatrix:
    n = len(a)
    order = a[0][0].order
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            total = Cyclotomic.rational(order, 0)
            for k in range(n):
                if not a[i][k].is_zero() and not b[k][j].is_zero():
                    total = total + a[i][k] * b[k][j]
            row.append(total)
        out.append(row)
    return out


def mat_identity(n: int, order: int) -> CycMatrix:
    return [[Cyclotomic.rational(order, int(i == j)) for j in range(n)] for i in range(n)]


def mat_scale(a: CycMatrix, c: Cyclotomic) -> CycMatrix:
    return [[c * x for x in row] for row in a]


def mat_equal(a: CycMatrix, b: CycMatrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_pow(a: CycMatrix, exponent: int) -> CycMatrix:
    result = mat_identity(len(a), a[0][0].order)
    for _ in range(exponent):
        result = mat_mul(result, a)
    return result


def sqrt_integer(n: int, order: int) -> Cyclotomic:
    """sqrt(n) inside Q(zeta_order) via Gauss sums

    sqrt(2) = zeta_8 + zeta_8^-1 and, for odd primes p, the quadratic Gauss sum
    g_p equals sqrt(p) or i*sqrt(p) according to p mod 4.

    Raises:
        HermringError: If a prime factor of odd exponent does not divide order
    """
    result = Cyclotomic.rational(order, 1)
    i = Cyclotomic.root_of_unity(order, Fraction(1, 4))
    for p, e in factorint(n).items():
        result = result * p ** (e // 2)
        if e % 2 == 0:
            continue
        if p == 2:
            root = Cyclotomic.root_of_unity(order, Fraction(1, 8)) + Cyclotomic.root_of_unity(order, Fraction(7, 8))
        else:
            if order % p:
                raise HermringError(f"sqrt({p}) needs zeta_{p} but order is {order}")
            gauss = Cyclotomic.rational(order, 0)
            for x in range(p):
                gauss = gauss + Cyclotomic.root_of_unity(order, Fraction(x * x, p))
            root = gauss if p % 4 == 1 else gauss * (-i)
        result = result * root
    return result


def gauss_sum(fqm: FQM) -> Cyclotomic:
    """sum_gamma e(Q(gamma))"""
    order = fqm.cyclotomic_order
    total = Cyclotomic.rational(order, 0)
    for g in range(fqm.order):
        total = total + Cyclotomic.root_of_unity(order, fqm.q(g))
    return total


def weil_signature(fqm: FQM) -> int:
    """Signature mod 8 from Milgram's formula sum e(Q) = sqrt|D| e(sig/8)

    Raises:
        HermringError: If no eighth root of unity matches (degenerate form)
    """
    order = fqm.cyclotomic_order
    total = gauss_sum(fqm)
    root = sqrt_integer(fqm.order, order)
    for sig in range(8):
        if total == root * Cyclotomic.root_of_unity(order, Fraction(sig, 8)):
            return sig
    raise HermringError(f"Gauss sum of {fqm.describe()} is not sqrt(N) times an eighth root of unity")


@dataclass
class WeilMatrices:
    """Matrices of rho* (S) and rho* (T) on the basis e_0, ..., e_{N-1}

    T e_gamma = e(-Q(gamma)) e_gamma and
    S e_gamma = e(sig/8) / sqrt(N) sum_beta e(<beta, gamma>) e_beta.
    S^2 acts as e(sig/4) times gamma -> -gamma.
    """

    fqm: FQM
    S: CycMatrix
    T: CycMatrix

    @property
    def order(self) -> int:
        return self.fqm.cyclotomic_order

    def z_matrix(self) -> CycMatrix:
        """Permutation matrix of gamma -> -gamma"""
        n = self.fqm.order
        return [
            [Cyclotomic.rational(self.order, int(i == self.fqm.neg(j))) for j in range(n)]
            for i in range(n)
        ]


def weil_matrices(fqm: FQM) -> WeilMatrices:
    """Exact cyclotomic S and T matrices of the dual Weil representation"""
    order = fqm.cyclotomic_order
    n = fqm.order
    signature = weil_signature(fqm)
    prefactor = (
        Cyclotomic.root_of_unity(order, Fraction(signature, 8))
        * sqrt_integer(n, order)
        * Fraction(1, n)
    )
    S = [
        [prefactor * Cyclotomic.root_of_unity(order, fqm.bilinear(b, g)) for g in range(n)]
        for b in range(n)
    ]
    zero = Cyclotomic.rational(order, 0)
    T = [
        [Cyclotomic.root_of_unity(order, -fqm.q(g)) if b == g else zero for g in range(n)]
        for b in range(n)
    ]
    return WeilMatrices(fqm=fqm, S=S, T=T)
