"""The named generators of the symmetric Hermitian rings

Every generator is a Maass lift of a vector-valued input pinned from its
printed scalar seed. Eisenstein generators are normalized to constant term
one; cusp generators are twice the lift times the row factor of the table.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional

from src.errors import UnsupportedCaseError
from src.hermitian.expansion import HermExp
from src.hermitian.maass import maass_lift
from src.series.arith import bernoulli
from src.tables.loader import TableLoader, parse_rational, series_from_terms, twisted_from_terms
from src.weilrep.basis import vv_basis, vv_pin
from src.weilrep.fqm import fqm_for_field
from src.weilrep.vvform import VVForm

CASES = {'d7': -7, 'd7-sym': -7, 'd11': -11, 'd11-sym': -11}


def case_disc(case: str) -> int:
    """Field discriminant of a case name

    Raises:
        UnsupportedCaseError: If the case is unknown
    """
    if case not in CASES:
        raise UnsupportedCaseError(f"Unknown case: {case}. Available: {', '.join(CASES)}")
    return CASES[case]


@dataclass
class GeneratorSet:
    """Named generators of M_*^sym for one field, in the printed order

    Attributes:
        disc: Field discriminant
        prec: Trace bound of every expansion
        forms: Name -> HermExp
        inputs: Name -> the pinned vector-valued form that was lifted

    Example usage:
        gens = generator_set('d7', prec=10)
        gens.weights()['b7']          # 7
        gens['m8'].coefficient(1, 0, 0, 1)
    """

    disc: int
    prec: int
    forms: Dict[str, HermExp] = field(default_factory=dict)
    inputs: Dict[str, VVForm] = field(default_factory=dict)

    def __getitem__(self, name: str) -> HermExp:
        if name not in self.forms:
            raise KeyError(f"No generator '{name}' for d = {self.disc}. Available: {', '.join(self.forms)}")
        return self.forms[name]

    def __contains__(self, name: str) -> bool:
        return name in self.forms

    def __len__(self) -> int:
        return len(self.forms)

    def names(self) -> List[str]:
        return list(self.forms)

    def weights(self) -> Dict[str, int]:
        return {name: f.weight for name, f in self.forms.items()}

    def items(self) -> Iterator:
        return iter(self.forms.items())


def input_prec(prec: int) -> int:
    """Vector-valued precision needed for a Maass lift to trace bound prec"""
    return (prec // 2) * (prec - prec // 2) + 1


def pin_seed(
    record: Mapping, disc: int, vv_prec: int, labels: Optional[Mapping[int, int]] = None
) -> VVForm:
    """The vector-valued form of weight k - 1 matching one printed seed

    Args:
        record: Seed record with name, weight, terms, prec and optional twisted flag
        disc: Field discriminant
        vv_prec: Precision of the basis the seed is pinned against, raised to
            the seed length when shorter
        labels: Twisted-sum labels, required for odd weights

    Raises:
        InconsistentSystemError: If the printed coefficients fit no form
    """
    fqm = fqm_for_field(disc)
    if record.get('twisted'):
        seed = twisted_from_terms(record['terms'], record['prec'], fqm.order)
    else:
        seed = series_from_terms(record['terms'], record['prec'])
    basis = vv_basis(fqm, int(record['weight']) - 1, max(vv_prec, int(record['prec'])))
    return vv_pin(seed, basis, labels)


def _normalize(lift: HermExp, record: Mapping) -> HermExp:
    k = lift.weight
    if record['kind'] == 'eisenstein':
        return lift * (-Fraction(2 * k) / bernoulli(k))
    return lift * (2 * parse_rational(record.get('factor', 1)))


def _build(
    disc: int, prec: int, vv_prec: int, loader: TableLoader, labels: Optional[Mapping[int, int]]
) -> GeneratorSet:
    labels = dict(labels) if labels is not None else loader.twisted_labels(disc)
    gens = GeneratorSet(disc, prec)
    for record in loader.seeds(disc):
        name = record['name']
        pinned = pin_seed(record, disc, vv_prec, labels)
        lift = maass_lift(pinned, int(record['weight']), prec)
        gens.inputs[name] = pinned
        gens.forms[name] = _normalize(lift, record).renamed(name)
    order = loader.generator_names(disc)
    gens.forms = {name: gens.forms[name] for name in order}
    return gens


@lru_cache(maxsize=None)
def _default_set(disc: int, prec: int, vv_prec: int) -> GeneratorSet:
    return _build(disc, prec, vv_prec, TableLoader(), None)


def generator_set(
    case: str,
    prec: int = 10,
    vv_prec: Optional[int] = None,
    loader: Optional[TableLoader] = None,
    labels: Optional[Mapping[int, int]] = None,
) -> GeneratorSet:
    """Build the generators of a case from the printed seeds

    Args:
        case: 'd7' or 'd11' (the '-sym' spellings are accepted)
        prec: Trace bound a + b <= prec
        vv_prec: Input precision (default: just enough for prec)
        loader: Golden data source (default: the package tables)
        labels: Twisted-sum labels (default: the labels in the tables)

    Returns:
        GeneratorSet in the printed generator order

    Raises:
        UnsupportedCaseError: If the case is unknown
    """
    disc = case_disc(case)
    vv_prec = vv_prec or input_prec(prec)
    if loader is None and labels is None:
        return _default_set(disc, prec, vv_prec)
    return _build(disc, prec, vv_prec, loader or TableLoader(), labels)
