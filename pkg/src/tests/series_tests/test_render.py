from fractions import Fraction

from necklace.component.series import (
    SignedSeries,
    TriSeries,
    render,
    render_coefficients,
    signed_from_dict,
    to_dict,
    tri_from_dict,
)


def test_render_signed():
    series = SignedSeries(3, [1, 2, 3, 0], [0, 0, 4, Fraction(-1, 2)])
    assert render(series) == '1 + 2*z + (3 + 4*y)*z^2 - 1/2*y*z^3'


def test_render_zero():
    assert render(SignedSeries.zero(3)) == '0'
    assert render(TriSeries.zero(3)) == '0'


def test_render_tri():
    series = TriSeries(4, {(0, 1, 0): 7, (1, 2, 1): 21, (2, 3, 0): -1})
    assert render(series) == '7*z + 21*y*x*z^2 - x^2*z^3'


def test_dicts():
    signed = SignedSeries(2, [1, Fraction(1, 3)], [0, 0, -2])
    assert to_dict(signed) == {
        'trunc': 2,
        'coefficients': [[0, 1, 0], [1, '1/3', 0], [2, 0, -2]],
    }
    assert signed_from_dict(to_dict(signed)) == signed

    tri = TriSeries(3, {(1, 2, 1): Fraction(5, 2)})
    assert to_dict(tri) == {'trunc': 3, 'coefficients': [[1, 2, 1, '5/2']]}
    assert tri_from_dict(to_dict(tri)) == tri


def test_render_coefficients():
    table = render_coefficients(SignedSeries(3, [1, 0, 12], [0, 0, 0, 1]))
    assert table.split('\n') == [
        'q  even  odd',
        '0     1    0',
        '2    12    0',
        '3     0    1',
    ]
    tri_table = render_coefficients(TriSeries(3, {(1, 2, 1): 21}))
    assert tri_table.split('\n') == [
        'n  q  e  coefficient',
        '1  2  1  ' + ' ' * 9 + '21',
    ]
