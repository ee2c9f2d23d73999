"""Monomial spans, relations and membership in the relation ideal

All linear algebra is exact over Q. Monomials of a weight are listed by
weighted_monomials in the generator order, which fixes the echelon forms
and makes discovered relations reproducible.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence

from src.errors import HermringError
from src.hermitian.expansion import HermExp, Symmetry, herm_indices, symmetry_type, trace
from src.ring.generators import GeneratorSet
from src.series.linalg import left_kernel, rank, rref, solve_combination
from src.series.monomials import Monomial, monomial_label, parse_monomial, weighted_monomials
from src.tables.loader import TableLoader, parse_rational


@dataclass
class Relation:
    """A weighted polynomial identity sum c_m * m = 0 in named generators

    Attributes:
        weight: Common weight of every monomial
        terms: Monomial label (e.g. 'b7*m10_1') -> coefficient
    """

    weight: int
    terms: Dict[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {label: Fraction(c) for label, c in self.terms.items() if c}

    @classmethod
    def from_record(cls, record: Mapping) -> 'Relation':
        """Relation from a table record {weight, terms: [[coefficient, monomial], ...]}"""
        terms: Dict[str, Fraction] = {}
        for c, label in record['terms']:
            terms[label] = terms.get(label, Fraction(0)) + parse_rational(c)
        return cls(int(record['weight']), terms)

    def is_zero(self) -> bool:
        return not self.terms

    def scaled(self, c) -> 'Relation':
        return Relation(self.weight, {label: c * v for label, v in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return '0 = 0'
        parts = []
        for i, (label, c) in enumerate(self.terms.items()):
            magnitude = '' if abs(c) == 1 else f"{abs(c)}*"
            if i == 0:
                prefix = '-' if c < 0 else ''
            else:
                prefix = '- ' if c < 0 else '+ '
            parts.append(f"{prefix}{magnitude}{label}")
        return ' '.join(parts) + ' = 0'


class MonomialEvaluator:
    """Expansions of monomials in a generator set, with shared partial products

    The product for an exponent vector e is the product for e minus one
    power of its last generator, times that generator.
    """

    def __init__(self, gens: GeneratorSet, prec: Optional[int] = None):
        self.gens = gens
        self.names = gens.names()
        self.forms = [gens[name] for name in self.names]
        self.weights = [f.weight for f in self.forms]
        self.prec = min(prec or gens.prec, gens.prec)
        self._cache: Dict[Monomial, HermExp] = {}

    def __call__(self, exponents: Monomial) -> HermExp:
        exponents = tuple(exponents)
        if exponents in self._cache:
            return self._cache[exponents]
        last = max((i for i, e in enumerate(exponents) if e), default=None)
        if last is None:
            result = HermExp.one(self.gens.disc, self.prec)
        else:
            smaller = list(exponents)
            smaller[last] -= 1
            result = (self(tuple(smaller)) * self.forms[last]).truncate(self.prec)
        self._cache[exponents] = result
        return result

    def label(self, exponents: Monomial) -> str:
        return monomial_label(self.names, exponents)

    def parse(self, label: str) -> Monomial:
        return parse_monomial(self.names, label)

    def weight(self, exponents: Monomial) -> int:
        return sum(e * w for e, w in zip(exponents, self.weights))


@dataclass
class MonomialSpan:
    """Coefficient matrix of all weight-k monomials

    Attributes:
        weight: k
        monomials: Exponent vectors in generator order
        labels: Matching monomial labels
        matrix: One row per monomial over the indices of trace <= prec
        rank: Exact rank over Q
    """

    weight: int
    monomials: List[Monomial]
    labels: List[str]
    matrix: List[List[Fraction]]
    rank: int

    @property
    def nullity(self) -> int:
        return len(self.monomials) - self.rank


def _row(f: HermExp, columns: Sequence) -> List[Fraction]:
    return [f.coeffs.get(index, Fraction(0)) for index in columns]


def _evaluator(gens: GeneratorSet, prec: Optional[int], evaluator: Optional[MonomialEvaluator]) -> MonomialEvaluator:
    if evaluator is not None:
        return evaluator
    return MonomialEvaluator(gens, prec)


def monomial_span(
    gens: GeneratorSet, k: int, prec: Optional[int] = None, evaluator: Optional[MonomialEvaluator] = None
) -> MonomialSpan:
    """All monomials of weight k with their coefficient matrix and rank

    Example usage:
        span = monomial_span(generator_set('d7'), 16)
        span.rank     # 8
    """
    if k < 0:
        raise HermringError(f"Weight must be nonnegative, got {k}")
    ev = _evaluator(gens, prec, evaluator)
    monomials = weighted_monomials(ev.weights, k)
    columns = herm_indices(-gens.disc, ev.prec)
    matrix = [_row(ev(e), columns) for e in monomials]
    return MonomialSpan(
        weight=k,
        monomials=monomials,
        labels=[ev.label(e) for e in monomials],
        matrix=matrix,
        rank=rank(matrix) if matrix else 0,
    )


def relation_discover(
    gens: GeneratorSet, k: int, prec: Optional[int] = None, evaluator: Optional[MonomialEvaluator] = None
) -> List[Relation]:
    """Echelonized basis of the linear relations among the weight-k monomials"""
    span = monomial_span(gens, k, prec, evaluator)
    if not span.matrix:
        return []
    kernel = left_kernel(span.matrix, len(span.matrix[0]))
    return [
        Relation(k, {label: c for label, c in zip(span.labels, vector)})
        for vector in kernel
    ]


def evaluate_relation(
    rel: Relation, gens: GeneratorSet, prec: Optional[int] = None, evaluator: Optional[MonomialEvaluator] = None
) -> HermExp:
    """The expansion of sum c_m * m

    Raises:
        HermringError: If a monomial has the wrong weight
        KeyError: If a monomial names an unknown generator
    """
    ev = _evaluator(gens, prec, evaluator)
    total = HermExp.zero(gens.disc, rel.weight, ev.prec)
    for label, c in rel.terms.items():
        exponents = ev.parse(label)
        if ev.weight(exponents) != rel.weight:
            raise HermringError(
                f"Monomial {label} has weight {ev.weight(exponents)}, not {rel.weight}"
            )
        total = total + ev(exponents) * c
    return total


def relation_verify(
    rel: Relation, gens: GeneratorSet, prec: Optional[int] = None, evaluator: Optional[MonomialEvaluator] = None
) -> bool:
    """Whether the relation holds exactly at the working precision"""
    return evaluate_relation(rel, gens, prec, evaluator).is_zero()


def express_in_generators(
    F: HermExp, gens: GeneratorSet, prec: Optional[int] = None, evaluator: Optional[MonomialEvaluator] = None
) -> tuple[Dict[str, Fraction], bool]:
    """A polynomial in the generators equal to F at the working precision

    Returns:
        Tuple (combination, unique): monomial label -> coefficient, and
        whether no relation of this weight leaves room for another answer

    Raises:
        HermringError: If F is not symmetric
        InconsistentSystemError: If F is not in the span of the weight-k monomials
    """
    if symmetry_type(F) != Symmetry.SYMMETRIC:
        raise HermringError(f"Only symmetric forms are expressible in the generators, got {F.name or 'a form'}")
    ev = _evaluator(gens, prec, evaluator)
    span = monomial_span(gens, F.weight, ev.prec, ev)
    columns = herm_indices(-gens.disc, ev.prec)
    keep = [i for i, index in enumerate(columns) if trace(index) <= F.prec]
    rows = [[row[i] for i in keep] for row in span.matrix]
    target = _row(F, [columns[i] for i in keep])
    solution, unique = solve_combination(rows, target)
    return {label: c for label, c in zip(span.labels, solution) if c}, unique


def _multiply_monomial(label: str, exponents: Monomial, names: Sequence[str]) -> str:
    base = parse_monomial(names, label)
    return monomial_label(names, tuple(a + b for a, b in zip(base, exponents)))


def ideal_reduce(
    relations: Sequence[Relation], polynomial: Relation, names: Sequence[str], weights: Sequence[int]
) -> Relation:
    """Remainder of a weight-k polynomial modulo the ideal of the given relations

    The weight-k part of the ideal is spanned by the products m * r with
    monomials m of weight k - weight(r). The remainder is reduced against
    the echelon form of that span, so it is zero exactly for members.
    """
    k = polynomial.weight
    monomials = weighted_monomials(weights, k)
    column = {monomial_label(names, e): i for i, e in enumerate(monomials)}
    multiples: List[List[Fraction]] = []
    for rel in relations:
        if rel.weight > k:
            continue
        for e in weighted_monomials(weights, k - rel.weight):
            row = [Fraction(0)] * len(monomials)
            for label, c in rel.terms.items():
                row[column[_multiply_monomial(label, e, names)]] += c
            multiples.append(row)
    remainder = [Fraction(0)] * len(monomials)
    for label, c in polynomial.terms.items():
        key = monomial_label(names, parse_monomial(names, label))
        if key not in column:
            raise HermringError(f"Monomial {label} does not have weight {k}")
        remainder[column[key]] += c
    if multiples and monomials:
        rows, pivots = rref(multiples, len(monomials))
        for row, p in zip(rows, pivots):
            if remainder[p]:
                factor = remainder[p]
                remainder = [r - factor * x for r, x in zip(remainder, row)]
    return Relation(k, {monomial_label(names, e): c for e, c in zip(monomials, remainder)})


def printed_relations(disc: int, loader: Optional[TableLoader] = None) -> List[Relation]:
    """The relations recorded in the golden tables (empty for d = -11)"""
    loader = loader or TableLoader()
    return [Relation.from_record(record) for record in loader.relations(disc)]
