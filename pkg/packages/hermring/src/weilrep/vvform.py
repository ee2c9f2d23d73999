"""Vector-valued modular forms for the dual Weil representation

A VVForm stores one QSeries per coset gamma. Exponents are scaled by the
quadratic form's denominator: the coefficient c(n, gamma) lives at exponent
D*n of component gamma. For the field cases D = p, so component exponents
are literally the q-exponents of the scalar series of the
Bruinier-Bundschuh correspondence.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterator, Mapping, Optional, Tuple

from src.errors import HermringError, ParityError, UnsupportedCaseError
from src.series.classical import eisenstein_series
from src.series.qseries import QSeries
from src.weilrep.fqm import FQM


class Holomorphy(str, Enum):
    NEARLY_HOLOMORPHIC = "nearly-holomorphic"
    HOLOMORPHIC = "holomorphic"
    CUSP = "cusp"


@dataclass
class VVForm:
    """Truncated vector-valued modular form

    Attributes:
        fqm: Discriminant form
        weight: Weight kappa (integer or half-integer)
        components: Map gamma -> QSeries in q^{1/D}; missing gammas are zero
        prec: Scaled precision, i.e. coefficients with D*n < prec are known

    Example usage:
        F = vv_eisenstein(fqm_for_field(-7), 3, prec=10)
        F.coefficient(Fraction(3, 7), 2)   # 7
        bb_map(F)                          # 1 + 14q^3 + 42q^5 + ...
    """

    fqm: FQM
    weight: Fraction
    components: Dict[int, QSeries] = field(default_factory=dict)
    prec: int = 0

    def __post_init__(self):
        self.weight = Fraction(self.weight)
        self.components = dict(self.components)
        self.prec = min([self.prec] + [s.prec for s in self.components.values()])
        for g in range(self.fqm.order):
            series = self.components.get(g)
            if series is None:
                self.components[g] = QSeries.zero(self.prec)
            elif series.prec != self.prec:
                self.components[g] = series.truncate(self.prec)
        for g, series in self.components.items():
            residue = self.fqm.exponent_residue(g)
            bad = [e[0] for e, _ in series.items() if (e[0] - residue) % self.fqm.scale]
            if bad:
                raise HermringError(
                    f"Component {g} has exponents {bad[:3]} outside the residue class "
                    f"{residue} mod {self.fqm.scale}"
                )

    @classmethod
    def zero(cls, fqm: FQM, weight, prec: int) -> 'VVForm':
        return cls(fqm, weight, {}, prec)

    @classmethod
    def from_coefficients(cls, fqm: FQM, weight, coeffs: Mapping[Tuple[int, Fraction], Fraction], prec: Fraction) -> 'VVForm':
        """Build from a map (gamma, n) -> c(n, gamma) with rational n"""
        scaled: Dict[int, Dict[int, Fraction]] = {}
        for (g, n), c in coeffs.items():
            m = Fraction(n) * fqm.scale
            if m.denominator != 1:
                raise HermringError(f"Exponent {n} is not in (1/{fqm.scale})Z")
            scaled.setdefault(g % fqm.order, {})[int(m)] = c
        scaled_prec = Fraction(prec) * fqm.scale
        prec_int = -((-scaled_prec.numerator) // scaled_prec.denominator)
        return cls(fqm, weight, {g: QSeries(v, prec_int) for g, v in scaled.items()}, prec_int)

    def coefficient(self, n: Fraction, gamma: int) -> Fraction:
        m = Fraction(n) * self.fqm.scale
        if m.denominator != 1:
            return Fraction(0)
        series = self.components[gamma % self.fqm.order]
        if int(m) >= self.prec:
            raise HermringError(f"Exponent {n} is beyond the precision {Fraction(self.prec, self.fqm.scale)}")
        return series[int(m)]

    def items(self) -> Iterator[Tuple[int, Fraction, Fraction]]:
        """(gamma, n, c(n, gamma)) for every stored nonzero coefficient"""
        for g in range(self.fqm.order):
            for (m,), c in self.components[g].items():
                yield g, Fraction(m, self.fqm.scale), c

    def valuation(self) -> Optional[int]:
        values = [s.valuation() for s in self.components.values() if not s.is_zero()]
        return min(values) if values else None

    @property
    def holomorphy(self) -> Holomorphy:
        lowest = self.valuation()
        if lowest is not None and lowest < 0:
            return Holomorphy.NEARLY_HOLOMORPHIC
        if lowest is None or lowest > 0:
            return Holomorphy.CUSP
        return Holomorphy.HOLOMORPHIC

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.components.values())

    def symmetry_sign(self) -> Optional[int]:
        """+1 if c(n,-gamma) = c(n,gamma), -1 if antisymmetric, None otherwise"""
        signs = []
        for sign in (1, -1):
            if all(
                self.components[g] == self.components[self.fqm.neg(g)] * sign
                for g in range(self.fqm.order)
            ):
                signs.append(sign)
        return signs[0] if signs else None

    def _check(self, other: 'VVForm') -> None:
        if other.fqm != self.fqm:
            raise HermringError("VVForms over different discriminant forms")
        if other.weight != self.weight:
            raise HermringError(f"Weight mismatch: {self.weight} vs {other.weight}")

    def __add__(self, other: 'VVForm') -> 'VVForm':
        self._check(other)
        prec = min(self.prec, other.prec)
        return VVForm(
            self.fqm, self.weight,
            {g: self.components[g] + other.components[g] for g in range(self.fqm.order)},
            prec,
        )

    def __neg__(self) -> 'VVForm':
        return self * -1

    def __sub__(self, other: 'VVForm') -> 'VVForm':
        return self + (-other)

    def __mul__(self, c) -> 'VVForm':
        c = Fraction(c)
        return VVForm(
            self.fqm, self.weight,
            {g: s * c for g, s in self.components.items()},
            self.prec,
        )

    __rmul__ = __mul__

    def times_scalar(self, f: QSeries, weight: int) -> 'VVForm':
        """Product with a level-one scalar form f (given in q)"""
        scaled = f.rescale(self.fqm.scale)
        components = {g: s * scaled for g, s in self.components.items()}
        prec = min(s.prec for s in components.values())
        return VVForm(self.fqm, self.weight + weight, components, prec)

    def divide_scalar(self, f: QSeries, weight: int) -> 'VVForm':
        """Quotient by a level-one scalar form, e.g. Delta^P"""
        scaled = f.rescale(self.fqm.scale)
        components = {g: s / scaled for g, s in self.components.items()}
        prec = min(s.prec for s in components.values())
        return VVForm(self.fqm, self.weight - weight, components, prec)

    def truncate(self, prec: int) -> 'VVForm':
        return VVForm(self.fqm, self.weight, dict(self.components), min(prec, self.prec))

    def flatten(self, prec: Optional[int] = None, low: int = 0) -> list[Fraction]:
        """Coefficient vector over (representative gamma, scaled exponent) for linear algebra

        Forms compared in one matrix must be flattened with the same prec and low.
        """
        prec = self.prec if prec is None else prec
        vector = []
        for g in self.fqm.representatives():
            residue = self.fqm.exponent_residue(g)
            series = self.components[g]
            for m in range(low, prec):
                if (m - residue) % self.fqm.scale == 0:
                    vector.append(series[m] if m < series.prec else Fraction(0))
        return vector


def serre_derivative(f: VVForm) -> VVForm:
    """theta f = q df/dq - (kappa/12) E_2 f, weight kappa + 2

    Raises:
        HermringError: If f is not holomorphic
    """
    if f.holomorphy == Holomorphy.NEARLY_HOLOMORPHIC:
        raise HermringError("Serre derivative needs a holomorphic input")
    scale = f.fqm.scale
    e2 = eisenstein_series(2, -(-f.prec // scale)).rescale(scale)
    correction = f.weight / 12
    components = {
        g: s.derivative() * Fraction(1, scale) - (e2 * s) * correction
        for g, s in f.components.items()
    }
    return VVForm(f.fqm, f.weight + 2, components, f.prec)


def _require_prime_field(fqm: FQM) -> int:
    if not fqm.is_field:
        raise UnsupportedCaseError(
            f"The scalar correspondences need a prime-order field form, got {fqm.describe()}"
        )
    return fqm.order


def _symmetric_weight(fqm: FQM, weight: Fraction) -> bool:
    """True when kappa + dim/2 is even, i.e. components are symmetric in gamma"""
    value = Fraction(weight) + 1
    if value.denominator != 1:
        raise ParityError(f"Weight {weight} is not integral for {fqm.describe()}")
    return value.numerator % 2 == 0


def bb_map(f: VVForm) -> QSeries:
    """Scalar series sum_{gamma, n} c(n, gamma) q^{pn} in M_k(Gamma_0(p), chi_p)

    Raises:
        ParityError: If kappa + dim/2 is odd (the sum vanishes identically)
    """
    _require_prime_field(f.fqm)
    if not _symmetric_weight(f.fqm, f.weight):
        raise ParityError(
            f"bb_map needs kappa + 1 even, got kappa = {f.weight}; use twisted_map"
        )
    total = QSeries.zero(f.prec)
    for series in f.components.values():
        total = total + series
    return total


def bb_invert(g: QSeries, fqm: FQM, weight) -> VVForm:
    """Vector-valued form with bb_map equal to g

    Exponents divisible by p go to gamma = 0; every other exponent m is split
    evenly between the pair +-gamma with gamma^2 = -m mod p.

    Raises:
        ParityError: If kappa + 1 is odd
        HermringError: If g has a coefficient outside the admissible residues
    """
    p = _require_prime_field(fqm)
    if not _symmetric_weight(fqm, weight):
        raise ParityError(f"bb_invert needs kappa + 1 even, got kappa = {weight}")
    components: Dict[int, Dict[int, Fraction]] = {}
    for (m,), c in g.items():
        gammas = fqm.components_for_residue(m)
        if not gammas:
            raise HermringError(
                f"Coefficient at q^{m} lies outside the admissible residues mod {p}"
            )
        share = c / len(gammas)
        for gamma in gammas:
            components.setdefault(gamma, {})[m] = share
    return VVForm(fqm, weight, {k: QSeries(v, g.prec) for k, v in components.items()}, g.prec)


@dataclass
class TwistedSeries:
    """Formal twisted sum sum_m c_m chi(g_m) q^m

    Attributes:
        p: Prime level
        terms: Map exponent m -> (label g_m, coefficient c_m)
        prec: Exponents below prec are known
    """

    p: int
    terms: Dict[int, Tuple[int, Fraction]]
    prec: int

    def coefficient(self, m: int) -> Tuple[Optional[int], Fraction]:
        return self.terms.get(m, (None, Fraction(0)))

    def evaluate(self, chi: Callable[[int], object]) -> Dict[int, object]:
        """Substitute a concrete character; chi must be odd

        Raises:
            ParityError: If chi(-g) != -chi(g) for a label g in use
        """
        for _, (label, _c) in self.terms.items():
            if chi(self.p - label) != -chi(label):
                raise ParityError("twisted sums need an odd character")
        return {m: c * chi(label) for m, (label, c) in self.terms.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        mine = {m: v for m, v in self.terms.items() if m < prec}
        theirs = {m: v for m, v in other.terms.items() if m < prec}
        return mine == theirs

    __hash__ = None


def _label_for(fqm: FQM, m: int, labels: Mapping[int, int]) -> int:
    residue = m % fqm.order
    if residue not in labels:
        raise HermringError(f"No twisted label recorded for exponents = {residue} mod {fqm.order}")
    label = labels[residue]
    if fqm.exponent_residue(label) != residue:
        raise HermringError(
            f"Label {label} does not satisfy label^2 = -{residue} mod {fqm.order}"
        )
    return label


def twisted_map(f: VVForm, labels: Mapping[int, int]) -> TwistedSeries:
    """Twisted sum sum c(n, gamma) chi(gamma) q^{pn} as a formal chi-combination

    Because chi is odd, the pair +-g contributes (c(n, g) - c(n, -g)) chi(g).

    Args:
        f: Antisymmetric vector-valued form over a field discriminant form
        labels: Map residue (m mod p) -> chosen g with g^2 = -m mod p

    Raises:
        ParityError: If kappa + 1 is even
    """
    _require_prime_field(f.fqm)
    if _symmetric_weight(f.fqm, f.weight):
        raise ParityError(
            f"twisted_map needs kappa + 1 odd, got kappa = {f.weight}; use bb_map"
        )
    terms: Dict[int, Tuple[int, Fraction]] = {}
    exponents = sorted({m for s in f.components.values() for (m,), _ in s.items()})
    for m in exponents:
        if m % f.fqm.order == 0:
            continue
        g = _label_for(f.fqm, m, labels)
        value = f.components[g][m] - f.components[f.fqm.neg(g)][m]
        if value:
            terms[m] = (g, value)
    return TwistedSeries(f.fqm.order, terms, f.prec)


def twisted_invert(series: TwistedSeries, fqm: FQM, weight, labels: Mapping[int, int]) -> VVForm:
    """Antisymmetric form with the given twisted sum: c(m/p, g) = c/2 = -c(m/p, -g)"""
    _require_prime_field(fqm)
    if _symmetric_weight(fqm, weight):
        raise ParityError(f"twisted_invert needs kappa + 1 odd, got kappa = {weight}")
    components: Dict[int, Dict[int, Fraction]] = {}
    for m, (label, c) in series.terms.items():
        expected = _label_for(fqm, m, labels)
        if label == expected:
            value = Fraction(c) / 2
        elif label == fqm.neg(expected):
            value = -Fraction(c) / 2
        else:
            raise HermringError(f"Label {label} at q^{m} is not admissible")
        components.setdefault(expected, {})[m] = value
        components.setdefault(fqm.neg(expected), {})[m] = -value
    return VVForm(fqm, weight, {k: QSeries(v, series.prec) for k, v in components.items()}, series.prec)
