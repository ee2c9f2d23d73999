"""Unit tests for generators, relations, Hilbert series and the pullback tables"""

from fractions import Fraction

import pytest

from src.errors import HermringError, InconsistentSystemError, UnsupportedCaseError
from src.hermitian.expansion import HermExp
from src.ring.generators import case_disc, generator_set
from src.ring.hilbert import (
    dimension_table,
    even_combination,
    hilb_derive,
    hilb_derive_parts,
    printed_closed_forms,
)
from src.ring.pullback_table import CellStatus, PullbackCell, pullback_table
from src.ring.relations import (
    MonomialEvaluator,
    Relation,
    evaluate_relation,
    express_in_generators,
    ideal_reduce,
    monomial_span,
    printed_relations,
    relation_discover,
    relation_verify,
)
from src.tables.loader import TableLoader

PREC = 10


@pytest.fixture(scope='module')
def d7():
    return generator_set('d7', PREC)


@pytest.fixture(scope='module')
def d7_evaluator(d7):
    return MonomialEvaluator(d7)


class TestGenerators:
    """Test the named generator sets"""

    def test_printed_order(self, d7):
        """Test generators come in the table order with their weights"""
        assert d7.names() == ['E4', 'E6', 'b7', 'm8', 'm9', 'm10_1', 'm10_2', 'm11', 'm12']
        assert d7.weights()['b7'] == 7
        assert len(d7) == 9

    def test_d11_order(self):
        """Test the thirteen generators over Q(sqrt -11)"""
        gens = generator_set('d11', PREC)
        assert gens.names()[:3] == ['E4', 'b5', 'E6']
        assert len(gens) == 13

    def test_sym_spelling(self):
        """Test 'd7-sym' names the same field"""
        assert case_disc('d7-sym') == -7

    def test_unknown_case(self):
        """Test an unknown case lists the available ones"""
        with pytest.raises(UnsupportedCaseError, match="Available: d7"):
            generator_set('d3', PREC)

    def test_missing_generator(self, d7):
        """Test error lists the available generators"""
        with pytest.raises(KeyError, match="Available: E4, E6, b7"):
            d7['b5']

    def test_pinned_inputs_kept(self, d7):
        """Test every generator keeps its pinned input of weight k - 1"""
        for name, f in d7.items():
            assert d7.inputs[name].weight == f.weight - 1


class TestMonomialSpan:
    """Test ranks of the weight-k monomial spans"""

    @pytest.mark.parametrize("k,expected", [(4, 1), (7, 1), (12, 4), (16, 8)])
    def test_d7_table_entries(self, k, expected):
        """Test the symmetric dimensions used below"""
        assert TableLoader().dimension_rows(-7)['sym'][k - 1] == expected

    @pytest.mark.parametrize("k", [k if k <= 16 else pytest.param(k, marks=pytest.mark.slow) for k in range(1, 21)])
    def test_d7_ranks(self, d7, d7_evaluator, k):
        """Test the rank of the weight-k monomials is the symmetric dimension for k <= 20"""
        span = monomial_span(d7, k, evaluator=d7_evaluator)
        assert span.rank == TableLoader().dimension_rows(-7)['sym'][k - 1]

    def test_d11_rank(self):
        """Test weight 12 over Q(sqrt -11) has rank 8"""
        assert monomial_span(generator_set('d11', PREC), 12).rank == 8

    def test_rank_nullity(self, d7, d7_evaluator):
        """Test rank + nullity = number of monomials"""
        span = monomial_span(d7, 17, evaluator=d7_evaluator)
        assert span.rank + span.nullity == len(span.monomials)
        assert span.nullity == 1

    def test_empty_weight(self, d7):
        """Test weight 5 has no monomials"""
        span = monomial_span(d7, 5)
        assert span.monomials == []
        assert span.rank == 0

    def test_negative_weight(self, d7):
        """Test k < 0"""
        with pytest.raises(HermringError, match="nonnegative"):
            monomial_span(d7, -1)


class TestRelations:
    """Test discovering and verifying relations"""

    def test_str(self):
        """Test the printed form of a relation"""
        relation = printed_relations(-7)[0]
        assert str(relation) == 'm8*m9 - b7*m10_1 - 12*b7*m10_2 = 0'
        assert str(Relation(4)) == '0 = 0'

    def test_printed_relations_count(self):
        """Test seven relations over Q(sqrt -7) and none over Q(sqrt -11)"""
        assert len(printed_relations(-7)) == 7
        assert printed_relations(-11) == []

    @pytest.mark.slow
    def test_printed_relations_hold(self, d7, d7_evaluator):
        """Test all seven printed relations vanish to the working precision"""
        for relation in printed_relations(-7):
            assert relation_verify(relation, d7, evaluator=d7_evaluator), str(relation)

    def test_perturbed_relation_fails(self, d7, d7_evaluator):
        """Test changing one coefficient breaks the weight 17 relation"""
        relation = printed_relations(-7)[0]
        perturbed = Relation(relation.weight, {**relation.terms, 'b7*m10_2': Fraction(-13)})
        assert not relation_verify(perturbed, d7, evaluator=d7_evaluator)

    def test_wrong_weight_monomial(self, d7):
        """Test a monomial of the wrong weight"""
        with pytest.raises(HermringError, match="has weight 11"):
            evaluate_relation(Relation(12, {'E4*b7': 1}), d7)

    @pytest.mark.parametrize("k", range(4, 14))
    def test_no_relations_below_fourteen(self, d7, d7_evaluator, k):
        """Test the symmetric ring is free in low weights"""
        assert relation_discover(d7, k, evaluator=d7_evaluator) == []

    def test_discover_weight_seventeen(self, d7, d7_evaluator):
        """Test the discovered weight 17 relation is the printed one"""
        found = relation_discover(d7, 17, evaluator=d7_evaluator)
        assert len(found) == 1
        printed = printed_relations(-7)[0]
        names, weights = d7.names(), list(d7.weights().values())
        assert ideal_reduce([printed], found[0], names, weights).is_zero()
        assert relation_verify(found[0], d7, evaluator=d7_evaluator)

    @pytest.mark.slow
    @pytest.mark.parametrize("k", range(14, 25))
    def test_relations_complete_through_24(self, d7, d7_evaluator, k):
        """Test every relation of weight k lies in the ideal of the printed ones"""
        printed = printed_relations(-7)
        names, weights = d7.names(), list(d7.weights().values())
        for relation in relation_discover(d7, k, evaluator=d7_evaluator):
            assert ideal_reduce(printed, relation, names, weights).is_zero(), str(relation)


class TestIdealReduce:
    """Test membership in the relation ideal"""

    def test_multiple_of_relation(self, d7):
        """Test E4 times the weight 17 relation reduces to zero"""
        relation = printed_relations(-7)[0]
        multiple = Relation(21, {'E4*m8*m9': 1, 'E4*b7*m10_1': -1, 'E4*b7*m10_2': -12})
        reduced = ideal_reduce([relation], multiple, d7.names(), list(d7.weights().values()))
        assert reduced.is_zero()

    def test_non_member(self, d7):
        """Test a single monomial is not in the ideal"""
        relation = printed_relations(-7)[0]
        reduced = ideal_reduce([relation], Relation(17, {'m8*m9': 1}), d7.names(), list(d7.weights().values()))
        assert not reduced.is_zero()

    def test_wrong_weight(self, d7):
        """Test a polynomial with a monomial of another weight"""
        with pytest.raises(HermringError, match="does not have weight"):
            ideal_reduce([], Relation(17, {'E4': 1}), d7.names(), list(d7.weights().values()))


class TestExpressInGenerators:
    """Test writing forms as polynomials in the generators"""

    def test_known_combination(self, d7, d7_evaluator):
        """Test 3 E4 m8 + m12 is recovered uniquely"""
        F = d7['E4'] * d7['m8'] * 3 + d7['m12']
        combination, unique = express_in_generators(F, d7, evaluator=d7_evaluator)
        assert combination == {'E4*m8': Fraction(3), 'm12': Fraction(1)}
        assert unique

    def test_skew_form_rejected(self, d7):
        """Test a skew expansion is not expressible"""
        skew = HermExp(-7, 4, {(1, 1, 0, 1): 1, (1, -1, 0, 1): -1}, 2)
        with pytest.raises(HermringError, match="Only symmetric forms"):
            express_in_generators(skew, d7)

    def test_outside_span(self, d7, d7_evaluator):
        """Test a symmetric expansion that is no modular form"""
        F = HermExp(-7, 4, {(1, 0, 0, 1): 1}, PREC)
        with pytest.raises(InconsistentSystemError):
            express_in_generators(F, d7, evaluator=d7_evaluator)


class TestHilbertSeries:
    """Test the derived Hilbert series against the printed closed forms"""

    @pytest.mark.parametrize("case", ['d7', 'd11'])
    def test_closed_forms(self, case):
        """Test derived H_sym and H_full equal the printed rational functions"""
        sym, full = hilb_derive(case)
        printed = printed_closed_forms(case)
        assert sym == printed['sym']
        assert full == printed['full']

    @pytest.mark.parametrize("case", ['d7', 'd11'])
    def test_even_combination(self, case):
        """Test H_even - t^a H_odd equals the printed form"""
        assert even_combination(case) == printed_closed_forms(case)['even']

    @pytest.mark.parametrize("case", ['d7', 'd11'])
    def test_nonnegative(self, case):
        """Test every part has nonnegative coefficients through t^60"""
        parts = hilb_derive_parts(case)
        for series in (parts.sym_even, parts.sym_odd, parts.skew_even, parts.skew_odd):
            assert all(c >= 0 for c in series.expand(60))

    @pytest.mark.parametrize("case,k,row,expected", [
        ('d7', 20, 'full', 13),
        ('d7', 20, 'sym', 13),
        ('d7', 20, 'maass', 6),
        ('d7', 28, 'full', 35),
        ('d7', 28, 'sym', 34),
        ('d7', 28, 'skew', 1),
        ('d11', 40, 'full', 260),
        ('d11', 40, 'sym', 236),
        ('d11', 40, 'maass', 19),
    ])
    def test_cells(self, case, k, row, expected):
        """Test individual table cells"""
        assert dimension_table(case).cell(row, k) == expected

    @pytest.mark.parametrize("case,disc", [('d7', -7), ('d11', -11)])
    def test_rows_match_tables(self, case, disc):
        """Test the full, sym and maass rows for k = 1..40"""
        table = dimension_table(case)
        for name, values in TableLoader().dimension_rows(disc).items():
            assert table.rows[name] == values, name

    def test_render(self):
        """Test the rendered table has a header and four rows"""
        lines = dimension_table('d7', 10).render().splitlines()
        assert len(lines) == 5
        assert lines[0].startswith('k')
        assert lines[1].startswith('full')


class TestPullbackTable:
    """Test the reproduction of the printed pullback cells"""

    def test_cell_from_record(self):
        """Test parsing a printed cell"""
        cell = PullbackCell.from_record(
            {'form': 'm8', 'level': 1, 'order': 2, 'anchor': True, 'terms': [['120', 'psi10']]}
        )
        assert cell.describe() == 'P2H1(m8)'
        assert cell.terms == {'psi10': Fraction(120)}
        assert cell.anchor

    @pytest.mark.slow
    @pytest.mark.parametrize("case", ['d7', 'd11'])
    def test_all_cells_pass(self, case):
        """Test every compared cell agrees after sign calibration"""
        report = pullback_table(case, PREC)
        assert report.all_passed, report.summary()
        assert report.with_status(CellStatus.ANCHOR)
        assert all(abs(s) == 1 for s in report.scalars.values())

    @pytest.mark.slow
    def test_uncalibrated_groups_fail(self):
        """Test cells without an anchor in their group fail"""
        report = pullback_table('d7', PREC, anchors=[])
        assert not report.all_passed
        failed = {r.cell.describe(): r.reason for r in report.with_status(CellStatus.FAIL)}
        assert failed['P0H1(E4)'] == "no anchor calibrates this group"
        excluded = {r.cell.describe() for r in report.with_status(CellStatus.EXCLUDED)}
        assert 'P1H2(E4)' in excluded


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
