"""Unit tests for the exact series kernel, classical series and Hilbert series"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import HermringError, ParityError
from src.series.arith import bernoulli, sigma
from src.series.classical import (
    classical_series,
    delta_series,
    eisenstein_series,
    five_halves_identity,
    theta_series,
)
from src.series.hilbert import HilbSeries, hilb_expand
from src.series.linalg import left_kernel, rank, solve_combination
from src.series.monomials import monomial_label, parse_monomial, weighted_monomials
from src.series.qseries import QSeries, ps_add, ps_div, ps_mul
from src.errors import InconsistentSystemError
from src.tables.loader import TableLoader

PREC = 12

coefficient = st.integers(min_value=-5, max_value=5)
sparse_series = st.dictionaries(st.integers(min_value=0, max_value=PREC - 1), coefficient, max_size=6).map(
    lambda coeffs: QSeries(coeffs, PREC)
)
unit_series = st.tuples(st.integers(min_value=1, max_value=4), sparse_series).map(
    lambda pair: QSeries({0: pair[0]}, PREC) + QSeries({e[0]: c for e, c in pair[1].items() if e[0] > 0}, PREC)
)


class TestQSeries:
    """Test QSeries construction and arithmetic"""

    def test_zero_coefficients_not_stored(self):
        """Test that zero coefficients are dropped"""
        f = QSeries({0: 1, 1: 0, 2: 3}, 5)
        assert f.support() == [(0,), (2,)]
        assert len(f) == 2

    def test_truncation_on_construction(self):
        """Test that exponents beyond prec are discarded"""
        f = QSeries({0: 1, 7: 2}, 5)
        assert f.support() == [(0,)]

    def test_index_beyond_precision_raises(self):
        """Test reading an unrepresented coefficient"""
        with pytest.raises(HermringError, match="beyond the precision"):
            QSeries({0: 1}, 3)[3]

    def test_additive_inverse(self):
        """Test (1+q) + (-1-q) = 0"""
        assert ps_add(QSeries({0: 1, 1: 1}, 5), QSeries({0: -1, 1: -1}, 5)).is_zero()

    def test_theta_doubled(self):
        """Test theta + theta = 2 + 4q + 4q^4 + 4q^9"""
        theta = theta_series(10)
        assert theta + theta == QSeries({0: 2, 1: 4, 4: 4, 9: 4}, 10)

    def test_difference_of_squares(self):
        """Test (1+q)(1-q) = 1 - q^2"""
        assert ps_mul(QSeries({0: 1, 1: 1}, 6), QSeries({0: 1, 1: -1}, 6)) == QSeries({0: 1, 2: -1}, 6)

    def test_theta_squared_counts_sums_of_two_squares(self):
        """Test theta^2 coefficient of q^2 is r_2(2) = 4"""
        square = theta_series(10) * theta_series(10)
        assert square[2] == 4
        assert square[5] == 8

    def test_geometric_division(self):
        """Test (1 - q^2)/(1 - q) = 1 + q"""
        assert ps_div(QSeries({0: 1, 2: -1}, 8), QSeries({0: 1, 1: -1}, 8)) == QSeries({0: 1, 1: 1}, 8)

    def test_inverse_delta_is_laurent(self):
        """Test 1/Delta = q^-1 + 24 + 324q + ..."""
        inverse = QSeries.one(10) / delta_series(10)
        assert inverse.valuation() == -1
        assert inverse[-1] == 1
        assert inverse[0] == 24
        assert inverse[1] == 324

    def test_self_division(self):
        """Test E4 / E4 = 1"""
        E4 = eisenstein_series(4, 10)
        assert E4 / E4 == QSeries.one(10)

    def test_var_count_mismatch(self):
        """Test adding one- and two-variable series"""
        with pytest.raises(HermringError, match="Var-count mismatch"):
            QSeries({0: 1}, 4) + QSeries({(0, 0): 1}, 4, nvars=2)

    def test_wrong_arity_exponent(self):
        """Test constructing a two-variable series with scalar exponents"""
        with pytest.raises(HermringError, match="does not match var-count"):
            QSeries({0: 1}, 4, nvars=2)

    def test_two_variable_product(self):
        """Test (q z + q z^-1)^2 = q^2 z^2 + 2 q^2 + q^2 z^-2"""
        f = QSeries({(1, 1): 1, (1, -1): 1}, 4, nvars=2)
        assert f * f == QSeries({(2, 2): 1, (2, 0): 2, (2, -2): 1}, 4, nvars=2)

    @pytest.mark.slow
    @settings(max_examples=1000, deadline=None)
    @given(sparse_series, sparse_series, sparse_series)
    def test_ring_axioms(self, a, b, c):
        """Test associativity, commutativity and distributivity"""
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)

    @pytest.mark.slow
    @settings(max_examples=1000, deadline=None)
    @given(sparse_series, unit_series)
    def test_division_left_inverse(self, a, b):
        """Test (a / b) * b = a for b with a unit constant term"""
        assert ps_mul(ps_div(a, b), b) == a


class TestClassicalSeries:
    """Test level one q-expansions"""

    def test_theta(self):
        """Test theta = 1 + 2q + 2q^4 + 2q^9"""
        assert classical_series('Theta', 10) == QSeries({0: 1, 1: 2, 4: 2, 9: 2}, 10)

    def test_eisenstein_first_coefficients(self):
        """Test E2 and E4 linear coefficients"""
        assert classical_series('E2', 5)[1] == -24
        assert classical_series('E4', 5)[1] == 240
        assert classical_series('E6', 5)[1] == -504
        assert classical_series('Ek', 5, k=8)[1] == 480

    def test_delta(self):
        """Test Delta = q - 24q^2 + 252q^3 - 1472q^4"""
        assert delta_series(5) == QSeries({1: 1, 2: -24, 3: 252, 4: -1472}, 5)

    def test_discriminant_identity(self):
        """Test E4^3 - E6^2 = 1728 Delta"""
        prec = 20
        E4, E6 = eisenstein_series(4, prec), eisenstein_series(6, prec)
        assert E4 ** 3 - E6 ** 2 == delta_series(prec) * 1728

    def test_unknown_name(self):
        """Test unknown series name lists the available names"""
        with pytest.raises(HermringError, match="Available: E2, E4"):
            classical_series('E3', 5)

    def test_odd_weight(self):
        """Test E_k with odd k"""
        with pytest.raises(ParityError):
            classical_series('Ek', 5, k=5)


class TestArithmetic:
    """Test Bernoulli numbers and divisor sums"""

    @pytest.mark.parametrize("n,expected", [
        (0, Fraction(1)),
        (1, Fraction(-1, 2)),
        (4, Fraction(-1, 30)),
        (12, Fraction(-691, 2730)),
    ])
    def test_bernoulli(self, n, expected):
        """Test Bernoulli numbers against known values"""
        assert bernoulli(n) == expected

    def test_odd_bernoulli_vanish(self):
        """Test B_n = 0 for odd n > 1"""
        assert all(bernoulli(n) == 0 for n in range(3, 20, 2))

    def test_sigma(self):
        """Test divisor sums"""
        assert sigma(1, 6) == 12
        assert sigma(3, 2) == 9


class TestFiveHalvesIdentities:
    """Test the weight 5/2 combinations (6/m) theta' - E_2(4m tau) theta"""

    def test_first_identity(self):
        """Test m = 1 gives -1 + 10q + 70q^4 + 48q^5 + 120q^8 + 250q^9"""
        series = five_halves_identity(1, 10)
        assert series == QSeries({0: -1, 1: 10, 4: 70, 5: 48, 8: 120, 9: 250}, 10)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_against_tables(self, m):
        """Test every printed weight 5/2 series"""
        printed = TableLoader().five_halves()[m]
        assert five_halves_identity(m, printed.prec) == printed

    def test_nonpositive_m(self):
        """Test m = 0 is rejected"""
        with pytest.raises(HermringError, match="positive"):
            five_halves_identity(0, 5)


def count_monomials(weights, k):
    return len(weighted_monomials(weights, k))


class TestHilbSeries:
    """Test rational function arithmetic and expansion"""

    SP4 = HilbSeries({0: 1, 35: 1}, [4, 6, 10, 12])

    def test_geometric_series(self):
        """Test 1/(1-t) expands to all ones"""
        assert hilb_expand(HilbSeries({0: 1}, [1]), 5) == [1] * 6

    def test_siegel_weight_ten(self):
        """Test the Siegel ring has dimension 2 in weight 10"""
        assert hilb_expand(self.SP4, 10)[10] == 2

    def test_siegel_against_monomial_count(self):
        """Test expansion equals brute-force monomial counting through weight 40"""
        dims = hilb_expand(self.SP4, 40)
        for k in range(41):
            expected = count_monomials([4, 6, 10, 12], k) + count_monomials([4, 6, 10, 12], k - 35)
            assert dims[k] == expected
            assert dims[k] >= 0

    def test_subtraction_to_zero(self):
        """Test a - a = 0"""
        assert (self.SP4 - self.SP4).is_zero()

    def test_shift(self):
        """Test t^7 / (1 - t^4)"""
        shifted = HilbSeries({0: 1}, [4]).shift(7)
        assert shifted == HilbSeries({7: 1}, [4])
        assert hilb_expand(shifted, 15) == [0] * 7 + [1, 0, 0, 0, 1, 0, 0, 0, 1]

    def test_equality_by_cross_multiplication(self):
        """Test (1 + t^2)/(1 - t^4) equals 1/(1 - t^2)"""
        assert HilbSeries({0: 1, 2: 1}, [4]) == HilbSeries({0: 1}, [2])

    def test_product(self):
        """Test 1/(1-t) squared has coefficients k + 1"""
        square = HilbSeries({0: 1}, [1]) * HilbSeries({0: 1}, [1])
        assert hilb_expand(square, 4) == [1, 2, 3, 4, 5]

    def test_nonpositive_degree(self):
        """Test a (1 - t^0) factor is rejected"""
        with pytest.raises(ValueError, match="must be positive"):
            HilbSeries({0: 1}, [0])

    def test_negative_kmax(self):
        """Test negative kmax"""
        with pytest.raises(ValueError, match="nonnegative"):
            hilb_expand(self.SP4, -1)


class TestLinearAlgebra:
    """Test exact linear algebra helpers"""

    def test_rank(self):
        """Test rank of a dependent system"""
        assert rank([[1, 2], [2, 4], [0, 1]]) == 2

    def test_left_kernel_is_echelonized(self):
        """Test left kernel of rows with one dependency"""
        kernel = left_kernel([[1, 0], [0, 1], [1, 1]], 2)
        assert kernel == [[1, 1, -1]]

    def test_solve_combination(self):
        """Test a unique solution"""
        solution, unique = solve_combination([[1, 0, 1], [0, 1, 1]], [2, 3, 5])
        assert solution == [2, 3]
        assert unique

    def test_inconsistent(self):
        """Test a target outside the row span"""
        with pytest.raises(InconsistentSystemError):
            solve_combination([[1, 0, 1]], [1, 0, 0])


class TestMonomials:
    """Test weighted monomial enumeration"""

    def test_weight_twelve(self):
        """Test monomials in E4, E6 of weight 12"""
        assert weighted_monomials([4, 6], 12) == [(3, 0), (0, 2)]

    def test_negative_weight(self):
        """Test no monomials of negative weight"""
        assert weighted_monomials([4, 6], -2) == []

    def test_label_round_trip(self):
        """Test label and parse agree"""
        names = ['E4', 'E6', 'b7']
        assert monomial_label(names, (2, 0, 1)) == 'E4^2*b7'
        assert parse_monomial(names, 'E4^2*b7') == (2, 0, 1)
        assert monomial_label(names, (0, 0, 0)) == '1'

    def test_unknown_factor(self):
        """Test parsing an unknown generator"""
        with pytest.raises(KeyError, match="Unknown generator"):
            parse_monomial(['E4'], 'E6')


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
