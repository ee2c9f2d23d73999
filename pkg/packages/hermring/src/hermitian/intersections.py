"""Intersections of the Heegner divisors H_1, H_2 and H_3

The generating series Phi_m of intersection numbers with H_m are weight
three forms in the plus space of level p; they are stored as golden data.
The weights alpha_m(D) come from the weight 5/2 series
(6/m) theta' - E_2(4m tau) theta, whose q-coefficient alpha_m(1) is the
weight of the discriminant-one divisor. Dividing the q^D coefficient of
Phi_m by alpha_m(1) gives the multiplicity with which H_D meets H_m in the
diagonal H_1 of the paramodular threefold X_K(m).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from src.errors import UnsupportedCaseError
from src.series.classical import five_halves_identity
from src.series.qseries import QSeries
from src.tables.loader import TableLoader, series_from_terms

SUPPORTED_PAIRS = ((-7, 1), (-7, 2), (-11, 1), (-11, 3))


@dataclass
class IntersectionData:
    """Intersection series Phi_m and what follows from it

    Attributes:
        disc: Field discriminant
        m: Discriminant of the fixed divisor H_m
        phi: Printed series Phi_m
        five_halves: The weight 5/2 series computed from theta and E_2
        five_halves_matches: Whether it agrees with the printed weight 5/2 series
        plus_space: Whether Phi_m is supported on squares mod p
        partner: The divisor H_D met by H_m
        multiplicity: Multiplicity of H_1 in the intersection, inside X_K(m)
        statements: Printed conclusions
    """

    disc: int
    m: int
    phi: QSeries
    five_halves: QSeries
    five_halves_matches: bool
    plus_space: bool
    partner: int
    multiplicity: Fraction
    statements: List[str] = field(default_factory=list)


def is_plus_space(series: QSeries, p: int) -> bool:
    """Exponents are 0 or quadratic residues mod p"""
    squares = {(x * x) % p for x in range(p)}
    return all(e[0] % p in squares for e, _ in series.items())


def heegner_intersection_data(d: int, m: int, loader: Optional[TableLoader] = None) -> IntersectionData:
    """Intersection data for the divisor H_m over Q(sqrt d)

    Args:
        d: -7 or -11
        m: 1 or 2 for d = -7, 1 or 3 for d = -11
        loader: Golden data source (default: the package tables)

    Returns:
        IntersectionData with the printed Phi_m, the recomputed weight 5/2
        series and the derived multiplicity

    Raises:
        UnsupportedCaseError: For any other pair

    Example usage:
        data = heegner_intersection_data(-7, 1)
        data.phi[2]            # 20
        data.multiplicity      # Fraction(2): H_1 meets H_2 in 2H_1
    """
    if (d, m) not in SUPPORTED_PAIRS:
        pairs = ', '.join(f"({a}, {b})" for a, b in SUPPORTED_PAIRS)
        raise UnsupportedCaseError(f"No intersection data for (d, m) = ({d}, {m}). Available: {pairs}")
    loader = loader or TableLoader()
    record = loader.intersections(d)[str(m)]
    phi = series_from_terms(record['terms'], record['prec'])
    printed = loader.five_halves()[m]
    computed = five_halves_identity(m, printed.prec)
    partner = int(record['partner'])
    multiplicity = phi[partner] / computed[1]
    return IntersectionData(
        disc=d,
        m=m,
        phi=phi,
        five_halves=computed,
        five_halves_matches=computed == printed,
        plus_space=is_plus_space(phi, -d),
        partner=partner,
        multiplicity=multiplicity,
        statements=[record['statement']],
    )
