"""Reproduction of the printed pullback tables

A cell gives P_N of a generator along H_l as a polynomial in the
paramodular catalog of level l. The printed P_N equals s * g_N(k) * raw_N
for a sign s fixed per (l, N, parity of k); s is read off the anchor cell of
each group and then applied to every other cell of the group.

Only cells in the quasi regime are compared: all lower-order raw slices
along the same divisor must vanish. The remaining cells are listed as
excluded together with the first nonzero lower order.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from src.errors import InconsistentSystemError
from src.hermitian.pullback import Element, pullback, raw_pullback
from src.jacobi.catalog import GeneratorCatalog, generator_catalog
from src.jacobi.paramodular import ParamExp, param_evaluate, param_linear_solve, param_proportionality
from src.ring.generators import GeneratorSet, case_disc, generator_set
from src.tables.loader import TableLoader, parse_rational

GroupKey = Tuple[int, int, int]


class CellStatus(str, Enum):
    ANCHOR = "anchor"
    PASS = "pass"
    FAIL = "fail"
    EXCLUDED = "excluded"


@dataclass
class PullbackCell:
    """One printed cell P_N^{H_l}(form)"""

    form: str
    level: int
    order: int
    terms: Dict[str, Fraction] = field(default_factory=dict)
    anchor: bool = False
    modulo: List[str] = field(default_factory=list)

    @classmethod
    def from_record(cls, record: Mapping) -> 'PullbackCell':
        terms: Dict[str, Fraction] = {}
        for c, label in record['terms']:
            terms[label] = terms.get(label, Fraction(0)) + parse_rational(c)
        return cls(
            form=record['form'],
            level=int(record['level']),
            order=int(record['order']),
            terms=terms,
            anchor=bool(record.get('anchor', False)),
            modulo=list(record.get('modulo', [])),
        )

    def describe(self) -> str:
        return f"P{self.order}H{self.level}({self.form})"


@dataclass
class CellResult:
    cell: PullbackCell
    status: CellStatus
    scalar: Optional[Fraction] = None
    reason: str = ''


@dataclass
class PullbackReport:
    """Outcome of every cell of one field

    Attributes:
        disc: Field discriminant
        results: One result per printed cell, in table order
        scalars: Calibrated sign per (level, order, parity of weight)
    """

    disc: int
    results: List[CellResult] = field(default_factory=list)
    scalars: Dict[GroupKey, Fraction] = field(default_factory=dict)

    def with_status(self, *statuses: CellStatus) -> List[CellResult]:
        return [r for r in self.results if r.status in statuses]

    @property
    def all_passed(self) -> bool:
        return not self.with_status(CellStatus.FAIL)

    def summary(self) -> str:
        counts = {status: len(self.with_status(status)) for status in CellStatus}
        return (
            f"{counts[CellStatus.ANCHOR]} anchors, {counts[CellStatus.PASS]} passed, "
            f"{counts[CellStatus.FAIL]} failed, {counts[CellStatus.EXCLUDED]} excluded"
        )


def pullback_cells(disc: int, loader: Optional[TableLoader] = None) -> List[PullbackCell]:
    loader = loader or TableLoader()
    return [PullbackCell.from_record(record) for record in loader.pullback_cells(disc)]


@dataclass
class _Computed:
    cell: PullbackCell
    weight: int
    expected: Optional[ParamExp] = None
    normalized: Optional[ParamExp] = None
    excluded: str = ''


def _compute(
    cell: PullbackCell, gens: GeneratorSet, catalog: GeneratorCatalog, lam: Optional[Element]
) -> _Computed:
    F = gens[cell.form]
    computed = _Computed(cell, F.weight)
    for lower in range(cell.order):
        if not raw_pullback(F, cell.level, lam, lower).is_zero():
            computed.excluded = f"order {lower} pullback along H{cell.level} is nonzero"
            return computed
    try:
        computed.expected = param_evaluate(catalog.forms, cell.terms, F.weight + cell.order)
    except KeyError as e:
        computed.excluded = f"printed terms use a generator without expansion: {e}"
        return computed
    computed.normalized = pullback(F, cell.level, lam, cell.order)
    return computed


def _matches(computed: _Computed, scalar: Fraction, catalog: GeneratorCatalog) -> bool:
    difference = computed.expected - computed.normalized * scalar
    if not computed.cell.modulo:
        return difference.is_zero()
    try:
        param_linear_solve(difference, {name: catalog[name] for name in computed.cell.modulo})
    except InconsistentSystemError:
        return False
    return True


def pullback_table(
    case: str,
    prec: int = 10,
    lambdas: Optional[Mapping[int, Element]] = None,
    phi11_sign: int = 1,
    loader: Optional[TableLoader] = None,
    gens: Optional[GeneratorSet] = None,
    anchors: Optional[Iterable[str]] = None,
    jacobi_prec: Optional[int] = None,
) -> PullbackReport:
    """Compare every printed pullback cell of a case with the computed one

    Args:
        case: 'd7' or 'd11'
        prec: Trace bound of the generators and catalogs
        lambdas: Element of norm l per level (default: default_lambda)
        phi11_sign: Orientation of phi11 in the level 2 and 3 catalogs
        loader: Golden data source
        gens: Prebuilt generators (default: generator_set(case, prec))
        anchors: Anchor cells as 'P0H1(E4)' (default: the flags in the tables)
        jacobi_prec: Floor for the Jacobi precision of the catalogs

    Returns:
        PullbackReport; a group whose anchor is not a sign times the
        computed pullback fails as a whole

    Example usage:
        report = pullback_table('d7')
        report.all_passed
        [r.cell.describe() for r in report.with_status(CellStatus.EXCLUDED)]
    """
    disc = case_disc(case)
    loader = loader or TableLoader()
    gens = gens or generator_set(case, prec)
    lambdas = dict(lambdas or {})
    cells = pullback_cells(disc, loader)
    if anchors is not None:
        chosen = set(anchors)
        for cell in cells:
            cell.anchor = cell.describe() in chosen
    catalogs = {
        level: generator_catalog(level, prec, phi11_sign, jacobi_prec)
        for level in sorted({cell.level for cell in cells})
    }
    computed = [
        _compute(cell, gens, catalogs[cell.level], lambdas.get(cell.level))
        for cell in cells
    ]

    report = PullbackReport(disc)
    anchor_failures: Dict[GroupKey, str] = {}
    for item in computed:
        if not item.cell.anchor or item.excluded:
            continue
        key = (item.cell.level, item.cell.order, item.weight % 2)
        scalar = param_proportionality(item.expected, item.normalized)
        if scalar in (1, -1):
            report.scalars[key] = scalar
        else:
            anchor_failures[key] = f"anchor {item.cell.describe()} is not +-1 times the pullback"

    for item in computed:
        cell = item.cell
        key = (cell.level, cell.order, item.weight % 2)
        if item.excluded:
            report.results.append(CellResult(cell, CellStatus.EXCLUDED, reason=item.excluded))
            continue
        if key in anchor_failures:
            report.results.append(CellResult(cell, CellStatus.FAIL, reason=anchor_failures[key]))
            continue
        if cell.anchor:
            report.results.append(CellResult(cell, CellStatus.ANCHOR, report.scalars[key]))
            continue
        if item.expected.is_zero() and item.normalized.is_zero():
            report.results.append(CellResult(cell, CellStatus.PASS, report.scalars.get(key)))
            continue
        if key not in report.scalars:
            report.results.append(CellResult(cell, CellStatus.FAIL, reason="no anchor calibrates this group"))
            continue
        scalar = report.scalars[key]
        if _matches(item, scalar, catalogs[cell.level]):
            report.results.append(CellResult(cell, CellStatus.PASS, scalar))
        else:
            report.results.append(CellResult(cell, CellStatus.FAIL, scalar, "differs from the printed cell"))
    return report
