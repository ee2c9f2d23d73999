"""Hilbert series of the Hermitian rings from the pullback exact sequences

Restriction to H_1 and to the paramodular divisor H_l (l = 2 for d = -7,
l = 3 for d = -11) gives, in even and odd weight,

    0 -> b_a * M_{k-a} -> M_k -> image in M_k(Sp_4) + M_k(K(l))

where b_a is the generator vanishing on both divisors. Writing the image
series as I_even and J (with C the part of J already hit by t^a times even
forms) leads to the coupled equations

    H_even = t^a H_odd + I_even - t^a C,    H_odd = t^a H_even + J

for the symmetric ring. The skew part is the sum of printed skew cusp
summands and the multiples of the skew form of weight s.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from src.errors import UnsupportedCaseError
from src.ring.generators import case_disc
from src.series.hilbert import HilbSeries
from src.tables.loader import TableLoader, case_name
from src.weilrep.dimension import vv_dimension_formula
from src.weilrep.fqm import fqm_for_field

SP4 = (4, 6, 10, 12)
K2 = (4, 6, 8, 12)
K3 = (4, 6, 6, 12)


@dataclass(frozen=True)
class _Recipe:
    """Numerators of the building blocks; each entry is (terms, denominator)"""

    odd_weight: int
    skew_weight: int
    paramodular: tuple
    image_even: tuple
    correction: tuple
    image_odd: tuple
    skew_even: tuple
    skew_odd: tuple


def _sum(*parts) -> HilbSeries:
    total = HilbSeries({})
    for terms, denominator in parts:
        total = total + HilbSeries(dict(terms), denominator)
    return total


_RECIPES = {
    -7: _Recipe(
        odd_weight=7,
        skew_weight=28,
        paramodular=(((0, 1), (10, 1), (11, 1), (21, 1)), K2),
        image_even=(
            (((18, 1), (20, 1)), SP4),
            (((0, 1), (10, 2), (20, 1)), K2),
        ),
        correction=((((11, 1), (21, 1)), K2),),
        image_odd=(
            (((9, 1),), SP4),
            (((11, 1), (21, 1)), K2),
        ),
        skew_even=((((30, 1), (32, 1), (34, 1)), SP4),),
        skew_odd=(
            (((33, 1), (35, 1)), SP4),
            (((31, 1), (41, 1)), K2),
        ),
    ),
    -11: _Recipe(
        odd_weight=5,
        skew_weight=24,
        paramodular=(((0, 1), (8, 1), (9, 1), (10, 1), (11, 1), (19, 1)), K3),
        image_even=(
            (((16, 1), (18, 1), (20, 1)), SP4),
            (((0, 1), (8, 2), (10, 2), (18, 1)), K3),
        ),
        correction=((((9, 1), (11, 1), (19, 1)), K3),),
        image_odd=(
            (((7, 1), (9, 1)), SP4),
            (((9, 1), (11, 1), (19, 1)), K3),
        ),
        skew_even=((((26, 1), (28, 1), (30, 1), (32, 1), (34, 1)), SP4),),
        skew_odd=(
            (((31, 1), (33, 1), (35, 1)), SP4),
            (((27, 1), (29, 1), (37, 1)), K3),
        ),
    ),
}


def _recipe(disc: int) -> _Recipe:
    if disc not in _RECIPES:
        raise UnsupportedCaseError(f"No Hilbert series recipe for d = {disc}. Available: -7, -11")
    return _RECIPES[disc]


def hilb_component_series(case: str) -> Dict[str, HilbSeries]:
    """The building blocks of the derivation, by name

    Keys: 'sp4' (the full Siegel ring, psi35 included), 'paramodular' (the
    symmetric paramodular ring of level 2 or 3), 'image_even', 'correction',
    'image_odd', 'skew_even' and 'skew_odd'.
    """
    recipe = _recipe(case_disc(case))
    terms, denominator = recipe.paramodular
    return {
        'sp4': HilbSeries({0: 1, 35: 1}, SP4),
        'paramodular': HilbSeries(dict(terms), denominator),
        'image_even': _sum(*recipe.image_even),
        'correction': _sum(*recipe.correction),
        'image_odd': _sum(*recipe.image_odd),
        'skew_even': _sum(*recipe.skew_even),
        'skew_odd': _sum(*recipe.skew_odd),
    }


@dataclass
class HilbertParts:
    """Even and odd symmetric parts, skew parts and their sums"""

    sym_even: HilbSeries
    sym_odd: HilbSeries
    skew_even: HilbSeries
    skew_odd: HilbSeries

    @property
    def sym(self) -> HilbSeries:
        return self.sym_even + self.sym_odd

    @property
    def skew(self) -> HilbSeries:
        return self.skew_even + self.skew_odd

    @property
    def full(self) -> HilbSeries:
        return self.sym + self.skew


def hilb_derive_parts(case: str) -> HilbertParts:
    """Solve the coupled equations for the even and odd symmetric series

    Substituting the odd equation into the even one gives
    (1 - t^{2a}) H_even = I_even + t^a (J - C).
    """
    recipe = _recipe(case_disc(case))
    blocks = hilb_component_series(case)
    a = recipe.odd_weight
    even = (blocks['image_even'] + (blocks['image_odd'] - blocks['correction']).shift(a)).over(2 * a)
    odd = even.shift(a) + blocks['image_odd']
    skew_even = blocks['skew_even'] + even.shift(recipe.skew_weight)
    skew_odd = blocks['skew_odd'] + skew_even.shift(a)
    return HilbertParts(even, odd, skew_even, skew_odd)


def hilb_derive(case: str) -> tuple[HilbSeries, HilbSeries]:
    """(H_sym, H_full) as exact rational functions

    Example usage:
        sym, full = hilb_derive('d7')
        full.expand(28)[28], sym.expand(28)[28]     # (35, 34)
    """
    parts = hilb_derive_parts(case)
    return parts.sym, parts.full


def closed_form(record: Mapping) -> HilbSeries:
    """A printed closed form {numerator: [[degree, coefficient], ...], denominator: [...]}"""
    return HilbSeries({int(e): int(c) for e, c in record['numerator']}, [int(d) for d in record['denominator']])


def printed_closed_forms(case: str, loader: Optional[TableLoader] = None) -> Dict[str, HilbSeries]:
    """The printed 'sym', 'full' and 'even' closed forms of a case

    'even' is H_even - t^a H_odd, the left side of the even equation.
    """
    loader = loader or TableLoader()
    records = loader.hilbert_records(case_disc(case))
    return {name: closed_form(record) for name, record in records.items()}


def even_combination(case: str) -> HilbSeries:
    """H_even - t^a H_odd from the derived parts, for comparison with the printed 'even' form"""
    parts = hilb_derive_parts(case)
    return parts.sym_even - parts.sym_odd.shift(_recipe(case_disc(case)).odd_weight)


@dataclass
class DimensionTable:
    """Dimension rows for k = 1..kmax

    Attributes:
        case: 'd7' or 'd11'
        kmax: Largest weight
        rows: 'full', 'sym', 'skew' and 'maass' rows; index i holds k = i + 1
    """

    case: str
    kmax: int
    rows: Dict[str, List[int]] = field(default_factory=dict)

    def weights(self) -> range:
        return range(1, self.kmax + 1)

    def cell(self, row: str, k: int) -> int:
        return self.rows[row][k - 1]

    def render(self) -> str:
        """Aligned text table with one column per weight"""
        width = max(3, len(str(max(max(r, default=0) for r in self.rows.values()))) + 1)
        lines = ['k'.ljust(6) + ''.join(str(k).rjust(width) for k in self.weights())]
        for name in ('full', 'sym', 'skew', 'maass'):
            lines.append(name.ljust(6) + ''.join(str(v).rjust(width) for v in self.rows[name]))
        return '\n'.join(lines)


def dimension_table(case: str, kmax: int = 40) -> DimensionTable:
    """Full, symmetric, skew and Maass dimensions for 1 <= k <= kmax

    The Maass row is the dimension of the input space of weight k - 1.

    Example usage:
        table = dimension_table('d7', 20)
        table.cell('full', 20), table.cell('sym', 20), table.cell('maass', 20)   # (13, 13, 6)
    """
    disc = case_disc(case)
    sym, full = hilb_derive(case)
    sym_row = sym.expand(kmax)[1:]
    full_row = full.expand(kmax)[1:]
    fqm = fqm_for_field(disc)
    return DimensionTable(
        case=case_name(disc),
        kmax=kmax,
        rows={
            'full': full_row,
            'sym': sym_row,
            'skew': [f - s for f, s in zip(full_row, sym_row)],
            'maass': [vv_dimension_formula(fqm, k - 1) for k in range(1, kmax + 1)],
        },
    )
