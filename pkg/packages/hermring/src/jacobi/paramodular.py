"""Paramodular Fourier expansions and the Gritsenko lift

A form F of level l has F(tau, z, w) = sum c(n, r, m) q^n zeta^r xi^(l m);
the third slot is stored already divided by l, so the m-th Fourier-Jacobi
coefficient is a Jacobi form of index l m. Coefficients are known for
n + m <= prec.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

from src.errors import HermringError, PrecisionError
from src.jacobi.forms import JacobiForm
from src.series.arith import bernoulli, divisors
from src.series.linalg import solve_combination
from src.series.monomials import monomial_label, parse_monomial, weighted_monomials
from src.series.qseries import QSeries
from src.series.sparse import graded_product, graded_sum

ParamIndex = Tuple[int, int, int]


def _trace(e: ParamIndex) -> int:
    return e[0] + e[2]


@dataclass
class ParamExp:
    """Truncated Fourier expansion of a paramodular form of level l

    Attributes:
        level: Paramodular level l
        weight: Weight k
        coeffs: Map (n, r, m) -> coefficient, zeros not stored
        prec: Trace bound; every index with n + m <= prec is known
        name: Optional generator name

    Raises:
        HermringError: If an index violates 4 n m l - r^2 >= 0

    Example usage:
        catalog = generator_catalog(1, prec=6)
        psi10 = catalog['psi10']
        psi10.coefficient(1, 1, 1)    # Fraction(1)
    """

    level: int
    weight: int
    coeffs: Dict[ParamIndex, Fraction] = field(default_factory=dict)
    prec: int = 0
    name: str = ''

    def __post_init__(self):
        kept = {}
        for (n, r, m), c in self.coeffs.items():
            if n + m > self.prec or not c:
                continue
            if n < 0 or m < 0 or 4 * n * m * self.level - r * r < 0:
                raise HermringError(
                    f"Index {(n, r, m)} is not semi-positive for level {self.level}"
                )
            kept[(n, r, m)] = Fraction(c)
        self.coeffs = kept

    @classmethod
    def zero(cls, level: int, weight: int, prec: int) -> 'ParamExp':
        return cls(level, weight, {}, prec)

    def coefficient(self, n: int, r: int, m: int) -> Fraction:
        if n + m > self.prec:
            raise PrecisionError(f"Index {(n, r, m)} is beyond the trace bound {self.prec}")
        return self.coeffs.get((n, r, m), Fraction(0))

    def items(self) -> Iterator[Tuple[ParamIndex, Fraction]]:
        return iter(sorted(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_cusp(self) -> bool:
        return all(4 * n * m * self.level - r * r > 0 for (n, r, m) in self.coeffs)

    def fricke_sign(self) -> Optional[int]:
        """+1 if c(m, r, n) = c(n, r, m), -1 if antisymmetric, None otherwise"""
        for sign in (1, -1):
            if all(self.coeffs.get((m, r, n), 0) == sign * c for (n, r, m), c in self.coeffs.items()):
                return sign
        return None

    def is_graded_symmetric(self) -> bool:
        return self.fricke_sign() == (-1) ** self.weight

    def fourier_jacobi(self, m: int) -> JacobiForm:
        """Coefficient of xi^(l m) as a Jacobi form of index l m, known for n <= prec - m"""
        coeffs = {(n, r): c for (n, r, mm), c in self.coeffs.items() if mm == m}
        return JacobiForm(self.weight, self.level * m, QSeries(coeffs, self.prec - m + 1, nvars=2))

    def truncate(self, prec: int) -> 'ParamExp':
        return ParamExp(self.level, self.weight, self.coeffs, min(prec, self.prec), self.name)

    def _check(self, other: 'ParamExp') -> None:
        if other.level != self.level:
            raise HermringError(f"Level mismatch: {self.level} vs {other.level}")

    def __add__(self, other: 'ParamExp') -> 'ParamExp':
        return param_add(self, other)

    def __sub__(self, other: 'ParamExp') -> 'ParamExp':
        return param_add(self, other, Fraction(-1))

    def __neg__(self) -> 'ParamExp':
        return param_scale(self, -1)

    def __mul__(self, other) -> 'ParamExp':
        if isinstance(other, ParamExp):
            return param_mul(self, other)
        return param_scale(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamExp) or other.level != self.level:
            return NotImplemented
        prec = min(self.prec, other.prec)
        return self.truncate(prec).coeffs == other.truncate(prec).coeffs

    __hash__ = None


def param_add(a: ParamExp, b: ParamExp, scale: Fraction = Fraction(1)) -> ParamExp:
    """a + scale * b; weights must agree unless one side is zero"""
    a._check(b)
    if a.weight != b.weight and not (a.is_zero() or b.is_zero()):
        raise HermringError(f"Cannot add weights {a.weight} and {b.weight}")
    prec = min(a.prec, b.prec)
    return ParamExp(a.level, a.weight, graded_sum(a.coeffs, b.coeffs, Fraction(scale)), prec)


def param_scale(a: ParamExp, c) -> ParamExp:
    c = Fraction(c)
    return ParamExp(a.level, a.weight, {e: c * v for e, v in a.coeffs.items()}, a.prec, a.name)


def param_mul(a: ParamExp, b: ParamExp) -> ParamExp:
    """Product; weights add and the trace bound is the smaller one"""
    a._check(b)
    prec = min(a.prec, b.prec)
    return ParamExp(a.level, a.weight + b.weight, graded_product(a.coeffs, b.coeffs, _trace, prec), prec)


def param_pow(a: ParamExp, exponent: int) -> ParamExp:
    result = ParamExp(a.level, 0, {(0, 0, 0): Fraction(1)}, a.prec)
    for _ in range(exponent):
        result = param_mul(result, a)
    return result


def gritsenko_lift(phi: JacobiForm, prec: int, name: str = '') -> ParamExp:
    """Arithmetic lift of a holomorphic Jacobi form of index l to level l

    c(n, r, m) = sum_{a | (n, r, m)} a^(k-1) c_phi(n m / a^2, r / a), and the
    boundary terms carry -B_k/2k c_phi(0, 0) (E_k(tau) + E_k(w) - 1).

    Args:
        phi: Holomorphic Jacobi form of weight k >= 2 and index l >= 1
        prec: Trace bound n + m <= prec of the output

    Raises:
        HermringError: If phi is not holomorphic
        PrecisionError: If phi is too short for the requested trace bound
    """
    if not phi.is_holomorphic():
        raise HermringError("The Gritsenko lift needs a holomorphic Jacobi form")
    if phi.index < 1:
        raise HermringError(f"The Gritsenko lift needs a positive index, got {phi.index}")
    needed = (prec // 2) * (prec - prec // 2)
    if phi.prec <= needed:
        raise PrecisionError(
            f"Lift to trace bound {prec} needs Jacobi coefficients below q^{needed + 1}, have {phi.prec}"
        )
    k, level = phi.weight, phi.index
    constant = phi.coefficient(0, 0)
    coeffs: Dict[ParamIndex, Fraction] = {}
    if constant:
        coeffs[(0, 0, 0)] = -bernoulli(k) / (2 * k) * constant
    for n in range(prec + 1):
        for m in range(prec + 1 - n):
            if n == 0 and m == 0:
                continue
            rmax = isqrt(4 * n * m * level)
            for r in range(-rmax, rmax + 1):
                total = Fraction(0)
                for a in divisors(gcd(gcd(n, r), m)):
                    total += a ** (k - 1) * phi.coefficient(n * m // (a * a), r // a)
                if total:
                    coeffs[(n, r, m)] = total
    return ParamExp(level, k, coeffs, prec, name)


def diagonal_taylor(f: ParamExp, N: int) -> QSeries:
    """Two-variable series (n, m) -> sum_r r^N c(n, r, m)

    N = 0 is the restriction to the diagonal z = 0; higher N are the
    transverse Taylor coefficients up to the factor (2 pi i)^N / N!. The
    slice at m is known for n <= prec - m.
    """
    if N < 0:
        raise HermringError(f"Taylor order must be nonnegative, got {N}")
    coeffs: Dict[Tuple[int, int], Fraction] = {}
    for (n, r, m), c in f.coeffs.items():
        coeffs[(n, m)] = coeffs.get((n, m), Fraction(0)) + r ** N * c
    return QSeries(coeffs, f.prec + 1, nvars=2)


def diagonal_order(f: ParamExp, max_order: int = 12) -> Optional[int]:
    """Least N with a nonzero diagonal Taylor slice, None if all vanish up to max_order"""
    for N in range(max_order + 1):
        if not diagonal_taylor(f, N).is_zero():
            return N
    return None


def param_proportionality(a: ParamExp, b: ParamExp) -> Optional[Fraction]:
    """The scalar c with a = c * b at the common precision, or None

    A zero a is proportional to anything with c = 0; a nonzero a is never a
    multiple of a zero b.
    """
    prec = min(a.prec, b.prec)
    a, b = a.truncate(prec), b.truncate(prec)
    if a.is_zero():
        return Fraction(0)
    if b.is_zero():
        return None
    index, lead = next(b.items())
    c = a.coeffs.get(index, Fraction(0)) / lead
    if c and a == param_scale(b, c):
        return c
    return None


def param_monomial(
    generators: Sequence[ParamExp], exponents: Sequence[int], cache: Optional[dict] = None
) -> ParamExp:
    """Product of generator powers; cache maps (generator index, power) to powers"""
    cache = {} if cache is None else cache
    level = generators[0].level
    prec = min(g.prec for g in generators)
    result = ParamExp(level, 0, {(0, 0, 0): Fraction(1)}, prec)
    for i, e in enumerate(exponents):
        if not e:
            continue
        key = (i, e)
        if key not in cache:
            cache[key] = param_pow(generators[i], e)
        result = param_mul(result, cache[key])
    return result


def param_linear_solve(
    target: ParamExp, generators: Mapping[str, ParamExp]
) -> tuple[Dict[str, Fraction], bool]:
    """Express target as a polynomial in the given generators

    Args:
        target: Form to express
        generators: Named paramodular forms of one level, in monomial order

    Returns:
        Tuple (combination, unique): map from monomial label (e.g. 'E4*psi10')
        to coefficient, with zero coefficients dropped, and whether the
        combination is forced at this precision

    Raises:
        InconsistentSystemError: If target is not in the span of the weight-k monomials
    """
    names = list(generators)
    forms = [generators[name] for name in names]
    prec = min([target.prec] + [g.prec for g in forms])
    monomials = weighted_monomials([g.weight for g in forms], target.weight)
    cache: dict = {}
    products = [param_monomial(forms, e, cache).truncate(prec) for e in monomials]
    columns = sorted(set(target.truncate(prec).coeffs).union(*(p.coeffs for p in products)))
    rows = [[p.coeffs.get(c, Fraction(0)) for c in columns] for p in products]
    vector = [target.coeffs.get(c, Fraction(0)) for c in columns]
    solution, unique = solve_combination(rows, vector)
    combination = {
        monomial_label(names, e): c for e, c in zip(monomials, solution) if c
    }
    return combination, unique


def param_evaluate(
    generators: Mapping[str, ParamExp], combination: Mapping[str, Fraction], weight: int
) -> ParamExp:
    """Evaluate a map monomial label -> coefficient over named generators"""
    names = list(generators)
    forms = [generators[name] for name in names]
    prec = min(g.prec for g in forms)
    result = ParamExp.zero(forms[0].level, weight, prec)
    cache: dict = {}
    for label, c in combination.items():
        exponents = parse_monomial(names, label)
        if sum(e * g.weight for e, g in zip(exponents, forms)) != weight:
            raise HermringError(f"Monomial {label} does not have weight {weight}")
        term = param_monomial(forms, exponents, cache)
        result = param_add(result, ParamExp(term.level, weight, term.coeffs, term.prec), Fraction(c))
    return result
