"""Unit tests for Jacobi forms, the Gritsenko lift and the paramodular catalogs"""

from fractions import Fraction

import pytest

from src.errors import (
    HermringError,
    InexactDivisionError,
    ParityError,
    PrecisionError,
    UnsupportedCaseError,
)
from src.jacobi.catalog import generator_catalog, jacobi_inputs, jacobi_precision, paramodular_eisenstein
from src.jacobi.forms import (
    JacobiForm,
    coefficient_law_holds,
    jacobi_div_delta,
    jacobi_eisenstein,
    jacobi_hecke_v,
    jacobi_zderiv,
    scalar_form,
    theta_decomposition,
)
from src.jacobi.paramodular import (
    ParamExp,
    diagonal_order,
    diagonal_taylor,
    gritsenko_lift,
    param_evaluate,
    param_linear_solve,
    param_monomial,
    param_proportionality,
)
from src.series.classical import eisenstein_series
from src.series.linalg import solve_combination
from src.series.monomials import parse_monomial, weighted_monomials
from src.series.qseries import QSeries
from src.tables.loader import TableLoader
from src.weilrep.eisenstein import vv_eisenstein
from src.weilrep.fqm import fqm_for_jacobi_index


def product(catalog, label: str) -> ParamExp:
    names = list(catalog.names())
    return param_monomial([catalog[n] for n in names], parse_monomial(names, label))


class TestJacobiForms:
    """Test Jacobi Eisenstein series and the basic operations"""

    def test_eisenstein_index_one(self):
        """Test E_{4,1} = 1 + (zeta^2 + 56 zeta + 126 + ...) q"""
        e41 = jacobi_eisenstein(4, 1, prec=4)
        assert e41.coefficient(0, 0) == 1
        assert e41.coefficient(1, 0) == 126
        assert e41.coefficient(1, 1) == 56
        assert e41.coefficient(1, -1) == 56
        assert e41.coefficient(1, 2) == 1
        assert e41.is_holomorphic()
        assert not e41.is_cusp()

    def test_eisenstein_odd_weight(self):
        """Test E_{k,m} needs even k"""
        with pytest.raises(ParityError):
            jacobi_eisenstein(5, 1, prec=3)

    def test_phi10_first_coefficients(self):
        """Test phi_{10,1} = (zeta - 2 + zeta^-1) q + ..."""
        phi = jacobi_inputs(1, prec=6)['psi10']
        assert (phi.weight, phi.index) == (10, 1)
        assert phi.coefficient(1, 1) == 1
        assert phi.coefficient(1, 0) == -2
        assert phi.coefficient(1, 2) == 0
        assert phi.is_cusp()

    def test_coefficient_law(self):
        """Test c(n, r) depends only on (4nm - r^2, r mod 2m)"""
        assert coefficient_law_holds(jacobi_eisenstein(4, 2, prec=6))
        assert coefficient_law_holds(jacobi_inputs(1, prec=6)['psi12'])

    def test_coefficient_law_violation(self):
        """Test a hand-made series that breaks the law"""
        broken = JacobiForm(4, 1, QSeries({(1, 0): 1, (2, 2): 5}, 3, nvars=2))
        assert not coefficient_law_holds(broken)

    def test_scalar_times_jacobi(self):
        """Test E4 * E_{4,1} has weight 8 and index 1"""
        e4 = scalar_form(eisenstein_series(4, 4), 4)
        product_form = e4 * jacobi_eisenstein(4, 1, prec=4)
        assert (product_form.weight, product_form.index) == (8, 1)
        assert product_form.coefficient(1, 0) == 126 + 240

    def test_add_mismatched_index(self):
        """Test adding forms of different index"""
        with pytest.raises(HermringError, match="Cannot add"):
            jacobi_eisenstein(4, 1, prec=3) + jacobi_eisenstein(4, 2, prec=3)

    def test_zderiv(self):
        """Test the z-derivative multiplies c(n, r) by r"""
        e41 = jacobi_eisenstein(4, 1, prec=3)
        derived = jacobi_zderiv(e41)
        assert derived.weight == 5
        assert derived.coefficient(1, 1) == 56
        assert derived.coefficient(1, -1) == -56
        assert derived.coefficient(1, 0) == 0

    def test_division_by_delta_not_holomorphic(self):
        """Test phi_{10,1} / Delta is the weak form phi_{-2,1}"""
        phi = jacobi_inputs(1, prec=6)['psi10']
        with pytest.raises(InexactDivisionError, match="not a holomorphic"):
            jacobi_div_delta(phi)

    def test_hecke_v1_is_identity(self):
        """Test V_1 leaves a form unchanged"""
        phi = jacobi_inputs(1, prec=6)['psi10']
        assert jacobi_hecke_v(phi, 1).series == phi.series

    def test_hecke_v_bad_index(self):
        """Test V_0 is rejected"""
        with pytest.raises(HermringError, match="l >= 1"):
            jacobi_hecke_v(jacobi_eisenstein(4, 1, prec=3), 0)

    @pytest.mark.parametrize("k,m", [(4, 1), (6, 1), (4, 2), (6, 3)])
    def test_theta_decomposition_of_eisenstein(self, k, m):
        """Test the theta components of E_{k,m} are the vector-valued Eisenstein series"""
        h = theta_decomposition(jacobi_eisenstein(k, m, prec=5))
        F = vv_eisenstein(fqm_for_jacobi_index(m), Fraction(2 * k - 1, 2), prec=5)
        assert h.weight == F.weight
        assert h.prec == 4 * m * 5 - m * m
        for mu in range(2 * m):
            assert h.components[mu] == F.components[mu], mu


class TestGritsenkoLift:
    """Test the arithmetic lift to paramodular forms"""

    def test_siegel_eisenstein(self):
        """Test the level one E4 against known Siegel Eisenstein coefficients"""
        e4 = paramodular_eisenstein(4, 1, prec=4)
        assert e4.coefficient(0, 0, 0) == 1
        assert e4.coefficient(1, 0, 0) == 240
        assert e4.coefficient(1, 1, 1) == 13440
        assert e4.coefficient(1, 0, 1) == 30240

    def test_igusa_cusp_form(self):
        """Test psi10 is a cusp form normalized by c(1, 1, 1) = 1"""
        psi10 = generator_catalog(1, prec=6)['psi10']
        assert psi10.coefficient(1, 1, 1) == 1
        assert psi10.coefficient(1, 0, 1) == -2
        assert psi10.is_cusp()

    def test_level_one_symmetry(self):
        """Test c(n, r, m) = c(m, r, n) for the level one generators"""
        catalog = generator_catalog(1, prec=6)
        for name in catalog.names():
            assert catalog[name].fricke_sign() == 1
            assert catalog[name].is_graded_symmetric()

    def test_short_input(self):
        """Test lifting with too few Jacobi coefficients"""
        phi = jacobi_eisenstein(4, 1, prec=4)
        with pytest.raises(PrecisionError, match="needs Jacobi coefficients"):
            gritsenko_lift(phi, prec=8)

    def test_non_holomorphic_input(self):
        """Test a weak Jacobi form is rejected"""
        weak = JacobiForm(4, 1, QSeries({(0, 1): 1, (0, -1): 1}, 5, nvars=2))
        with pytest.raises(HermringError, match="holomorphic"):
            gritsenko_lift(weak, prec=2)

    def test_semi_positivity_enforced(self):
        """Test ParamExp rejects indices with 4nml < r^2"""
        with pytest.raises(HermringError, match="not semi-positive"):
            ParamExp(1, 4, {(1, 3, 1): 1}, 4)

    def test_beyond_trace_bound(self):
        """Test reading an unknown coefficient"""
        with pytest.raises(PrecisionError):
            generator_catalog(1, prec=4)['E4'].coefficient(3, 0, 2)

    @pytest.mark.parametrize("level,name", [(1, 'psi10'), (1, 'psi12'), (2, 'phi8'), (2, 'phi11')])
    def test_first_fourier_jacobi_coefficient(self, level, name):
        """Test the xi^l coefficient of a lift is the lifted Jacobi form"""
        catalog = generator_catalog(level, prec=6)
        phi = catalog.inputs[name]
        fj = catalog[name].fourier_jacobi(1)
        assert (fj.weight, fj.index) == (phi.weight, level)
        assert fj.prec == 6
        assert fj.series == phi.series


class TestCatalog:
    """Test the generator catalogs of levels 1, 2 and 3"""

    def test_level_two_names(self):
        """Test canonical order and the registered Borcherds generator"""
        catalog = generator_catalog(2, prec=6)
        assert list(catalog.names()) == ['E4', 'E6', 'phi8', 'phi10', 'phi11', 'phi12']
        assert catalog.weights()['phi11'] == 11
        assert catalog.weights()['f12'] == 12
        assert 'f12' not in catalog

    def test_missing_generator(self):
        """Test error lists the available generators"""
        with pytest.raises(KeyError, match="Available: E4, E6, psi10, psi12"):
            generator_catalog(1, prec=4)['psi35']

    def test_unsupported_level(self):
        """Test level 4"""
        with pytest.raises(UnsupportedCaseError, match="Available: 1, 2, 3"):
            generator_catalog(4, prec=4)

    def test_jacobi_precision_floor(self):
        """Test a configured Jacobi precision is raised, never lowered below what the lift needs"""
        assert jacobi_precision(10) == 28
        assert jacobi_precision(10, 27) == 28
        assert jacobi_precision(10, 40) == 40
        assert jacobi_precision(4, None) == 7

    def test_catalog_honours_jacobi_prec(self):
        """Test a larger Jacobi precision reaches the lifted inputs"""
        catalog = generator_catalog(1, prec=4, jacobi_prec=12)
        assert catalog.inputs['psi10'].prec == 12
        assert generator_catalog(1, prec=4).inputs['psi10'].prec == 7
        assert catalog['psi10'] == generator_catalog(1, prec=4)['psi10']

    def test_phi11_orientation(self):
        """Test phi11_sign flips the weight 11 generator only"""
        plus = generator_catalog(2, prec=6, phi11_sign=1)
        minus = generator_catalog(2, prec=6, phi11_sign=-1)
        assert minus['phi11'] == -plus['phi11']
        assert minus['phi8'] == plus['phi8']

    @pytest.mark.parametrize("level,prec", [(1, 8), (2, 8), (3, 6)])
    def test_diagonal_orders(self, level, prec):
        """Test vanishing orders along z = 0 against the recorded facts"""
        orders = TableLoader().section('paramodular', 'diagonal_orders')[str(level)]
        catalog = generator_catalog(level, prec)
        for name, order in orders.items():
            assert diagonal_order(catalog[name]) == order, name

    def test_eisenstein_restricts_to_product(self):
        """Test E4 restricted to the diagonal is nonzero at order 0"""
        e4 = generator_catalog(2, prec=6)['E4']
        assert diagonal_order(e4) == 0
        assert diagonal_taylor(e4, 0)[(0, 0)] == 1

    def test_negative_taylor_order(self):
        """Test N < 0"""
        with pytest.raises(HermringError, match="nonnegative"):
            diagonal_taylor(generator_catalog(1, prec=4)['E4'], -1)

    @pytest.mark.slow
    def test_level_three_proportional_products(self):
        """Test every recorded proportionality between level three products"""
        catalog = generator_catalog(3, prec=10)
        for record in TableLoader().section('paramodular', 'proportional'):
            assert record['level'] == 3
            left, right = product(catalog, record['left']), product(catalog, record['right'])
            assert not right.is_zero()
            scalar = param_proportionality(left, right)
            assert scalar is not None and scalar != 0, record

    def test_level_two_ideal_member(self):
        """Test phi10^2 = phi8 * G for a weight 12 polynomial G"""
        catalog = generator_catalog(2, prec=6)
        names = list(catalog.names())
        forms = [catalog[n] for n in names]
        for record in TableLoader().section('paramodular', 'ideal_members'):
            target = product(catalog, record['form'])
            divisor = product(catalog, record['divisor'])
            cofactor_weight = target.weight - divisor.weight
            multiples = [
                param_monomial(forms, e) * divisor
                for e in weighted_monomials([f.weight for f in forms], cofactor_weight)
            ]
            columns = sorted(set(target.coeffs).union(*(m.coeffs for m in multiples)))
            rows = [[m.coeffs.get(c, Fraction(0)) for c in columns] for m in multiples]
            solution, _ = solve_combination(rows, [target.coeffs.get(c, Fraction(0)) for c in columns])
            assert any(solution)

    def test_not_proportional(self):
        """Test scalar recovery and the zero divisor case"""
        catalog = generator_catalog(1, prec=6)
        assert param_proportionality(catalog['E4'] * 2, catalog['E4']) == 2
        assert param_proportionality(catalog['E4'], catalog['E6'] * catalog['E4']) is None
        assert param_proportionality(catalog['psi10'], catalog['psi12'] - catalog['psi12']) is None


class TestLinearSolve:
    """Test expressing paramodular forms in generators"""

    def test_square_of_generator(self):
        """Test E4 * E4 = E4^2"""
        catalog = generator_catalog(1, prec=6)
        combination, unique = param_linear_solve(catalog['E4'] * catalog['E4'], catalog.forms)
        assert combination == {'E4^2': Fraction(1)}
        assert unique

    def test_evaluate_round_trip(self):
        """Test evaluating a solved combination gives back the target"""
        catalog = generator_catalog(2, prec=6)
        target = catalog['E4'] * catalog['phi8'] * 3 - catalog['phi12']
        combination, _ = param_linear_solve(target, catalog.forms)
        assert param_evaluate(catalog.forms, combination, 12) == target

    def test_evaluate_wrong_weight(self):
        """Test a monomial of the wrong weight"""
        catalog = generator_catalog(1, prec=4)
        with pytest.raises(HermringError, match="does not have weight"):
            param_evaluate(catalog.forms, {'E4': 1}, 6)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
