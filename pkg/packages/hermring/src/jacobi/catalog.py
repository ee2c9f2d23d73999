"""Named generators of the paramodular rings of level 1, 2 and 3

Every holomorphic generator is a Gritsenko lift of a Jacobi form built from
Jacobi Eisenstein series. The Borcherds-lift generators (psi35 in level 1,
f12 in levels 2 and 3) have nearly-holomorphic inputs; they are registered
by name and weight only.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Optional

from src.errors import UnsupportedCaseError
from src.jacobi.forms import (
    JacobiForm,
    jacobi_div_delta,
    jacobi_eisenstein,
    jacobi_scale,
    jacobi_zderiv,
    scalar_form,
)
from src.jacobi.paramodular import ParamExp, gritsenko_lift, param_scale
from src.series.arith import bernoulli
from src.series.classical import eisenstein_series

CATALOG_NAMES = {
    1: ('E4', 'E6', 'psi10', 'psi12'),
    2: ('E4', 'E6', 'phi8', 'phi10', 'phi11', 'phi12'),
    3: ('E4', 'E6', 'phi6', 'phi8', 'phi9', 'phi10', 'phi11', 'phi12'),
}

REGISTERED_ONLY = {
    1: {'psi35': 35},
    2: {'f12': 12},
    3: {'f12': 12},
}


@dataclass
class GeneratorCatalog:
    """Generators of M_*(K(l)) as truncated expansions

    Attributes:
        level: Paramodular level l in {1, 2, 3}
        prec: Trace bound of every expansion
        forms: Generator name -> ParamExp, in the canonical monomial order
        inputs: Generator name -> the Jacobi form that was lifted
        registered: Names and weights of generators without expansions

    Example usage:
        catalog = generator_catalog(2, prec=8)
        catalog['phi8'].weight          # 8
        list(catalog.names())           # ['E4', 'E6', 'phi8', ...]
    """

    level: int
    prec: int
    forms: Dict[str, ParamExp] = field(default_factory=dict)
    inputs: Dict[str, JacobiForm] = field(default_factory=dict)
    registered: Dict[str, int] = field(default_factory=dict)

    def __getitem__(self, name: str) -> ParamExp:
        if name not in self.forms:
            raise KeyError(
                f"No generator '{name}' in level {self.level}. Available: {', '.join(self.forms)}"
            )
        return self.forms[name]

    def __contains__(self, name: str) -> bool:
        return name in self.forms

    def names(self) -> Iterator[str]:
        return iter(self.forms)

    def weights(self) -> Dict[str, int]:
        weights = {name: f.weight for name, f in self.forms.items()}
        weights.update(self.registered)
        return weights


def jacobi_precision(prec: int, jacobi_prec: Optional[int] = None) -> int:
    """Jacobi coefficients c(n, r), n < result, computed for lifts to trace bound prec

    A configured jacobi_prec is a floor; it is raised when the lift needs more.
    """
    needed = (prec // 2) * (prec - prec // 2) + 3
    return max(needed, jacobi_prec or 0)


def _building_blocks(jp: int) -> Dict[str, JacobiForm]:
    blocks = {
        'E4': scalar_form(eisenstein_series(4, jp), 4),
        'E6': scalar_form(eisenstein_series(6, jp), 6),
    }
    for k in (4, 6):
        for m in (1, 2, 3):
            blocks[f"E{k},{m}"] = jacobi_eisenstein(k, m, jp)
    return blocks


def jacobi_inputs(
    level: int, prec: int, phi11_sign: int = 1, jacobi_prec: Optional[int] = None
) -> Dict[str, JacobiForm]:
    """Jacobi forms whose Gritsenko lifts are the cusp generators of level l

    Args:
        level: 1, 2 or 3
        prec: Trace bound the lifts will be computed to
        phi11_sign: Orientation of the weight-11 index-2 form, which is only
            fixed up to sign by its defining combination
        jacobi_prec: Floor for the Jacobi precision (see jacobi_precision)

    Raises:
        UnsupportedCaseError: For other levels
    """
    if level not in CATALOG_NAMES:
        raise UnsupportedCaseError(f"Unsupported level: {level}. Available: 1, 2, 3")
    b = _building_blocks(jacobi_precision(prec, jacobi_prec))
    phi10_1 = jacobi_scale(b['E4,1'] * b['E6'] - b['E4'] * b['E6,1'], Fraction(1, 144))
    phi12_1 = jacobi_scale(b['E4'] * b['E4'] * b['E4,1'] - b['E6'] * b['E6,1'], Fraction(1, 144))
    if level == 1:
        return {'psi10': phi10_1, 'psi12': phi12_1}

    phi8_2 = jacobi_scale(b['E4'] * b['E4,2'] - b['E4,1'] * b['E4,1'], Fraction(1, 12))
    phi10_2 = jacobi_scale(b['E4,2'] * b['E6'] - b['E4,1'] * b['E6,1'], Fraction(1, 12))
    phi11_2 = jacobi_scale(
        jacobi_zderiv(b['E4,1']) * b['E6,1'] - b['E4,1'] * jacobi_zderiv(b['E6,1']),
        Fraction(phi11_sign, 144),
    )
    phi12_2 = jacobi_scale(b['E4'] * b['E4'] * b['E4,2'] - b['E6'] * b['E6,2'], Fraction(1, 24))
    if level == 2:
        return {'phi8': phi8_2, 'phi10': phi10_2, 'phi11': phi11_2, 'phi12': phi12_2}

    phi12_3 = (
        jacobi_scale(b['E4'] * b['E4,1'] * b['E4,2'] + b['E4'] * b['E4'] * b['E4,3'], Fraction(1, 2))
        - b['E6,1'] * b['E6,2']
    )
    return {
        'phi6': jacobi_div_delta(phi10_1 * phi8_2),
        'phi8': jacobi_scale(b['E4'] * b['E4,3'] - b['E4,1'] * b['E4,2'], Fraction(1, 2)),
        'phi9': jacobi_div_delta(phi10_1 * phi11_2),
        'phi10': jacobi_div_delta(phi10_2 * phi12_1),
        'phi11': jacobi_div_delta(phi11_2 * phi12_1),
        'phi12': phi12_3,
    }


def paramodular_eisenstein(k: int, level: int, prec: int, jacobi_prec: Optional[int] = None) -> ParamExp:
    """Lift of E_{k,l} normalized to constant term 1"""
    phi = jacobi_eisenstein(k, level, jacobi_precision(prec, jacobi_prec))
    return param_scale(gritsenko_lift(phi, prec, f"E{k}"), -Fraction(2 * k) / bernoulli(k))


@lru_cache(maxsize=None)
def _catalog(level: int, prec: int, phi11_sign: int, jp: int) -> GeneratorCatalog:
    inputs = jacobi_inputs(level, prec, phi11_sign, jp)
    forms = {
        'E4': paramodular_eisenstein(4, level, prec, jp),
        'E6': paramodular_eisenstein(6, level, prec, jp),
    }
    for name, phi in inputs.items():
        phi.name = name
        forms[name] = gritsenko_lift(phi, prec, name)
    ordered = {name: forms[name] for name in CATALOG_NAMES[level]}
    return GeneratorCatalog(level, prec, ordered, inputs, dict(REGISTERED_ONLY[level]))


def generator_catalog(
    level: int, prec: int, phi11_sign: int = 1, jacobi_prec: Optional[int] = None
) -> GeneratorCatalog:
    """Catalog of named paramodular generators of level 1, 2 or 3

    Args:
        level: Paramodular level
        prec: Trace bound n + m <= prec
        phi11_sign: Orientation of phi11 (levels 2 and 3)
        jacobi_prec: Floor for the Jacobi precision of the inputs

    Returns:
        GeneratorCatalog; holomorphic generators carry expansions, Borcherds
        lifts are registered by weight

    Raises:
        UnsupportedCaseError: If level is not 1, 2 or 3
    """
    if level not in CATALOG_NAMES:
        raise UnsupportedCaseError(f"Unsupported level: {level}. Available: 1, 2, 3")
    return _catalog(level, prec, phi11_sign, jacobi_precision(prec, jacobi_prec))
