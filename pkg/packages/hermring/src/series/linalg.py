"""Exact linear algebra over Q on top of sympy's DomainMatrix

Every routine takes and returns plain lists of Fraction so callers never see
sympy types. Echelon forms are canonical (reduced row echelon), which makes
relation output reproducible.
"""

from fractions import Fraction
from typing import Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.errors import InconsistentSystemError

Vector = list[Fraction]
Matrix = list[list[Fraction]]


def _to_domain(matrix: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    rows = [[QQ(int(x.numerator), int(x.denominator)) for x in map(Fraction, row)] for row in matrix]
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def rref(matrix: Sequence[Sequence[Fraction]], ncols: Optional[int] = None) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns

    Zero rows are dropped from the returned matrix.
    """
    ncols = len(matrix[0]) if ncols is None and matrix else (ncols or 0)
    if not matrix or ncols == 0:
        return [], ()
    reduced, pivots = _to_domain(matrix, ncols).rref()
    sym = reduced.to_Matrix()
    rows = [
        [Fraction(int(sym[i, j].p), int(sym[i, j].q)) for j in range(ncols)]
        for i in range(len(pivots))
    ]
    return rows, tuple(pivots)


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Basis of {v : matrix . v = 0}, one vector per free column, in column order"""
    rows, pivots = rref(matrix, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def transpose(matrix: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    return [[row[j] for row in matrix] for j in range(ncols)]


def left_kernel(matrix: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Basis of {c : sum_i c_i matrix[i] = 0}, echelonized"""
    if not matrix:
        return []
    kernel = nullspace(transpose(matrix, ncols), len(matrix))
    if not kernel:
        return []
    return rref(kernel, len(matrix))[0]


def solve_combination(
    matrix: Sequence[Sequence[Fraction]], target: Sequence[Fraction]
) -> tuple[Vector, bool]:
    """Find c with sum_i c_i matrix[i] = target

    Returns:
        Tuple (c, unique): a particular solution with free coordinates set to
        zero, and whether that solution is the only one

    Raises:
        InconsistentSystemError: If target is not in the row span
    """
    nrows = len(matrix)
    ncols = len(target)
    augmented = [
        [matrix[i][j] for i in range(nrows)] + [Fraction(target[j])]
        for j in range(ncols)
    ]
    rows, pivots = rref(augmented, nrows + 1)
    if nrows in pivots:
        raise InconsistentSystemError("Target is not in the span of the given rows")
    solution = [Fraction(0)] * nrows
    for row, p in zip(rows, pivots):
        solution[p] = row[nrows]
    return solution, len(pivots) == nrows
