"""Closed-form cyclic homology series for named algebra families

Every preset is wrapped with @Preset, which records its parameter names and
the inequalities under which its formula holds. Presets take the truncation
bound as their last argument and return a cyclic series (TriSeries).

Presets defined here are looked up through ``available_presets``.
"""
import logging

from necklace.component.series import HC_SUPPORT, SignedSeries, TriSeries
from necklace.component.transforms import hcfree
from necklace.exceptions import PresetParameterError

from .strongly_free import freeset_hc


class Preset(object):
    """decorator for presets: result will be a callable preset carrying its
    ``parameters`` (names, in call order) and ``constraints``, a list of
    (description, predicate) pairs checked before the formula runs.
    """

    def __init__(self, parameters, constraints=()):
        self.parameters = tuple(parameters)
        self.constraints = tuple(constraints)

    def __call__(self, function):

        class DecoratedPreset(object):
            def __init__(self, parameters, constraints, function):
                self.parameters = parameters
                self.constraints = constraints
                self.function = function
                self.__name__ = function.__name__
                self.__doc__ = function.__doc__

            def check(self, *params):
                if len(params) != len(self.parameters):
                    raise PresetParameterError(
                        '{} takes parameters ({}), got {} values'
                        .format(self.__name__, ', '.join(self.parameters), len(params))
                    )
                for value, name in zip(params, self.parameters):
                    if not isinstance(value, int) or isinstance(value, bool):
                        raise PresetParameterError(
                            '{}: parameter {} must be an integer, got {!r}'
                            .format(self.__name__, name, value)
                        )
                values = dict(zip(self.parameters, params))
                for description, predicate in self.constraints:
                    if not predicate(**values):
                        raise PresetParameterError(
                            '{}: constraint {} violated by {}'
                            .format(self.__name__, description, values)
                        )

            def __call__(self, *params, trunc):
                self.check(*params)
                logging.debug('Predicting %s%s to weight %s', self.__name__, params, trunc)
                return self.function(*params, trunc=trunc).check_support(HC_SUPPORT)

        return DecoratedPreset(self.parameters, self.constraints, function)


def _yz(coefficient, trunc):
    return SignedSeries.monomial(1, 1, coefficient, trunc)


def _z2(coefficient, trunc):
    return SignedSeries.monomial(2, 0, coefficient, trunc)


@Preset(['n'], [('n >= 2', lambda n: n >= 2)])
def generic_quadratic(n, trunc):
    """k<T_1..T_n>/(omega), omega a generic quadratic form, T_i odd of weight one"""
    return freeset_hc(_yz(n, trunc), _z2(1, trunc), SignedSeries.zero(trunc))


@Preset(['n'], [('n >= 3', lambda n: n >= 3)])
def generic_symmetric(n, trunc):
    """k<a_1..a_n>/(omega), omega a generic symmetric quadratic form, a_i odd"""
    return freeset_hc(_yz(n, trunc), _z2(1, trunc), SignedSeries.monomial(2, 1, 1, trunc))


_MANY_CONSTRAINTS = [
    ('j >= 1', lambda n, r, j, k: j >= 1),
    ('k >= 1', lambda n, r, j, k: k >= 1),
    ('r >= 0', lambda n, r, j, k: r >= 0),
    ('r <= j*k', lambda n, r, j, k: r <= j * k),
    ('j + k + j*k <= n', lambda n, r, j, k: j + k + j * k <= n),
]


@Preset(['n', 'r', 'j', 'k'], _MANY_CONSTRAINTS)
def generic_symmetric_many(n, r, j, k, trunc):
    """r generic symmetric quadratic forms in n odd variables of weight one"""
    return freeset_hc(_yz(n, trunc), _z2(r, trunc), SignedSeries.monomial(2, 1, r, trunc))


@Preset(['n', 'r', 'j', 'k'], _MANY_CONSTRAINTS)
def polynomial_generic(n, r, j, k, trunc):
    """k[x_1..x_n] modulo binomial(n + 1, 2) - r generic quadratic relations.

    With hcfree(nzy - rz^2) = sum a_i z^i + y sum b_i z^i the series is
    rz^2 + rxyz^2 + sum b_i x^(i-1) z^i + y sum a_i x^(i-1) z^i.
    """
    free_part = hcfree(_yz(n, trunc) - _z2(r, trunc))
    coef = {(0, 2, 0): r, (1, 2, 1): r}
    for i in range(1, trunc + 1):
        a, b = free_part.coef(i)
        coef[(i - 1, i, 0)] = coef.get((i - 1, i, 0), 0) + b
        coef[(i - 1, i, 1)] = coef.get((i - 1, i, 1), 0) + a
    return TriSeries(trunc, coef)


def _geometric_tri(n, q, sign, trunc, power=1):
    """1 / (1 - x^n z^q y^sign)^power"""
    return (1 - TriSeries.monomial(n, q, sign, 1, trunc)) ** -power


@Preset(['n'], [('n >= 1', lambda n: n >= 1)])
def exceptional_A0(n, trunc):
    """k<T_1..T_n>/(T_1^2), T_i even: z/(1 - x^2 z^2) + hcfree((n-1)z + (n-1)z^2)"""
    head = TriSeries.monomial(0, 1, 0, 1, trunc) * _geometric_tri(2, 2, 0, trunc)
    tail = hcfree(SignedSeries(trunc, [0, n - 1, n - 1]))
    return head + tail


@Preset(['n'], [('n >= 1', lambda n: n >= 1)])
def exceptional_A1(n, trunc):
    """k<T_1..T_n>/(T_1^2), T_i odd: yz/(1 - xz) + hcfree((n-1)yz + (n-1)z^2)"""
    head = TriSeries.monomial(0, 1, 1, 1, trunc) * _geometric_tri(1, 1, 0, trunc)
    tail = hcfree(SignedSeries(trunc, [0, 0, n - 1], [0, n - 1]))
    return head + tail


@Preset(['n'], [('n >= 2', lambda n: n >= 2)])
def exceptional_B0(n, trunc):
    """k<T_1..T_n>/([T_1, T_2]), T_i even:
    z^2/(1 - z)^2 + yxz^2/(1 - z)^2 + hcfree(nz - z^2)
    """
    numerator = TriSeries.monomial(0, 2, 0, 1, trunc) + TriSeries.monomial(1, 2, 1, 1, trunc)
    head = numerator * _geometric_tri(0, 1, 0, trunc, power=2)
    return head + hcfree(SignedSeries(trunc, [0, n, -1]))


@Preset(['n'], [('n >= 2', lambda n: n >= 2)])
def exceptional_B1(n, trunc):
    """k<T_1..T_n>/([T_1, T_2]), T_i odd.

    The two-generator series z^2/(1 - z^2)^2 + 2yz/(1 - z^2) + yxz^2/(1 - z^2)^2
    already contains hcfree(2yz - z^2) = 2yz/(1 - z^2); the free product with
    the remaining generators replaces it by hcfree(nyz - z^2).
    """
    numerator = TriSeries.monomial(0, 2, 0, 1, trunc) + TriSeries.monomial(1, 2, 1, 1, trunc)
    two_generators = (numerator * _geometric_tri(0, 2, 0, trunc, power=2) +
                      TriSeries.monomial(0, 1, 1, 2, trunc) * _geometric_tri(0, 2, 0, trunc))
    return (two_generators +
            hcfree(SignedSeries(trunc, [0, 0, -1], [0, n])) -
            hcfree(SignedSeries(trunc, [0, 0, -1], [0, 2])))


available_presets = {
    'generic_quadratic': generic_quadratic,
    'generic_symmetric': generic_symmetric,
    'generic_symmetric_many': generic_symmetric_many,
    'polynomial_generic': polynomial_generic,
    'exceptional_A0': exceptional_A0,
    'exceptional_A1': exceptional_A1,
    'exceptional_B0': exceptional_B0,
    'exceptional_B1': exceptional_B1,
}


def predict(preset, parameters, trunc):
    """Cyclic series of a named preset

    Args:
        preset (str) a key of ``available_presets``; 'exceptional' with a
            first parameter in ('A0', 'A1', 'B0', 'B1') is also accepted
        parameters (sequence of int)
        trunc (int) weight bound
    """
    parameters = list(parameters)
    if preset == 'exceptional':
        if not parameters:
            raise PresetParameterError('exceptional needs a case name (A0, A1, B0, B1)')
        preset = 'exceptional_{}'.format(parameters.pop(0))
    if preset not in available_presets:
        raise PresetParameterError('Unknown preset {!r}, expected one of {}'
                                   .format(preset, ', '.join(sorted(available_presets))))
    return available_presets[preset](*parameters, trunc=trunc)


def list_presets():
    """[(name, parameter names, constraint descriptions)] in name order"""
    return [
        (name, list(preset.parameters), [description for description, _ in preset.constraints])
        for name, preset in sorted(available_presets.items())
    ]