from fractions import Fraction

import pytest

from necklace.component.calculus import predict
from necklace.component.series import SignedSeries, TriSeries
from necklace.exceptions import ExpressionEvaluationError
from necklace.expressions import available_functions, evaluate, evaluate_text, parse


def test_constant_arithmetic():
    assert evaluate_text('1+0*z', 4) == 1
    assert evaluate_text('2^3^2', 2) == 512
    assert evaluate_text('1 - 2 - 3', 2) == -4
    assert evaluate_text('3/6', 2) == SignedSeries.constant(Fraction(1, 2), 2)


def test_geometric_series():
    assert evaluate_text('1/(1 - 2*z + z^2)', 5) == SignedSeries(5, [1, 2, 3, 4, 5, 6])
    assert evaluate_text('(1 - z)^-2', 5) == SignedSeries(5, [1, 2, 3, 4, 5, 6])
    assert evaluate_text('inv(2 - z)', 2) == SignedSeries(2, [Fraction(1, 2), Fraction(1, 4),
                                                              Fraction(1, 8)])


def test_signs():
    assert evaluate_text('(1 + y*z)*(1 - y*z)', 4) == SignedSeries(4, [1, 0, -1])
    assert evaluate_text('y^2', 3) == 1


def test_promotion_to_three_variables():
    value = evaluate_text('x*y*z + 1', 3)
    assert isinstance(value, TriSeries)
    assert value.slots() == {(0, 0, 0): 1, (1, 1, 1): 1}


def test_functions():
    assert evaluate_text('hcfree(2*z)', 5) == SignedSeries(5, [0, 2, 3, 4, 6, 8])
    assert evaluate_text('lie(1/(1 - 2*z))', 5) == SignedSeries(5, [0, 2, 1, 2, 3, 6])
    assert evaluate_text('subst_2(1 + y*z)', 4) == SignedSeries(4, [1, 0, -1])
    assert evaluate_text('subst(1 + y*z, 3)', 4) == SignedSeries(4, [1], [0, 0, 0, 1])
    assert evaluate_text('S(y*z)', 3) == 1 + SignedSeries.monomial(1, 1, 1, 3)
    assert evaluate_text('exp(log(1 + z))', 4) == SignedSeries(4, [1, 1])
    assert evaluate_text('hh_from_hc(y*z)', 3).slots() == {
        (0, 0, 0): 1, (0, 1, 1): 1, (1, 1, 0): 1,
    }
    assert evaluate_text('koszul_hh(hkr(2))', 4) == evaluate_text('exterior(2)', 4)


def test_presets_are_functions():
    assert 'polynomial_generic' in available_functions
    assert (evaluate_text('polynomial_generic(7, 3, 1, 3)', 5) ==
            predict('polynomial_generic', [7, 3, 1, 3], 5))
    assert evaluate_text('hc_from_hh(hh_from_hc(generic_symmetric(3)))', 5) == \
        predict('generic_symmetric', [3], 5)


def test_symmetric_exponential_needs_integer_coefficients():
    with pytest.raises(ExpressionEvaluationError) as error:
        evaluate_text('S(z/2)', 3)
    assert error.value.span == (0, 6)
    assert evaluate_text('S_rational(z/2)', 3) == SignedSeries(
        3, [1, Fraction(1, 2), Fraction(3, 8), Fraction(5, 16)])
    assert evaluate_text('S_rational(y*z)', 3) == evaluate_text('S(y*z)', 3)


def test_three_variable_division_by_unit_constant():
    value = evaluate_text('1/(2 - x*z)', 2)
    assert value.slots() == {
        (0, 0, 0): Fraction(1, 2), (1, 1, 0): Fraction(1, 4), (2, 2, 0): Fraction(1, 8),
    }
    assert evaluate_text('inv(2 - x*z)', 2) == value
    assert evaluate_text('(2 - x*z)^-1', 2) == value


def test_final_example():
    assert evaluate_text('hcfree(7*y*z - 3*z^2)', 5) == SignedSeries(
        5, [0, 0, 18, 0, 465, 0], [0, 7, 0, 98, 0, 2401])


@pytest.mark.parametrize('text,span', [
    ('1/z', (0, 3)),
    ('1 + z/0', (4, 7)),
    ('z^(1/2)', (3, 6)),
    ('hcfree(1 + z)', (0, 13)),
    ('hcfree(z, z)', (0, 12)),
    ('hcfree(x*z)', (7, 10)),
    ('hkr(z)', (4, 5)),
    ('generic_symmetric(2)', (0, 20)),
])
def test_evaluation_errors(text, span):
    with pytest.raises(ExpressionEvaluationError) as error:
        evaluate_text(text, 4)
    assert error.value.span == span


def test_evaluate_parsed_tree():
    tree = parse('1 + z')
    assert evaluate(tree, 2) == SignedSeries(2, [1, 1])
    assert evaluate(tree, 4).trunc == 4
