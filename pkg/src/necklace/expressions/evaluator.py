"""Evaluation of parsed formulas to SignedSeries or TriSeries

Values are series in (z, y) until x or a homology function appears; mixed
arithmetic promotes to TriSeries. Integer arguments (exponents, preset
parameters, ``subst`` and ``hkr`` arguments) must evaluate to integer
constants.
"""
import logging
import re
from collections import namedtuple
from fractions import Fraction

from necklace.component.calculus import (
    HC_DUAL,
    HH_DUAL,
    available_presets,
    exterior_hh,
    hc_from_hh,
    hh_from_hc,
    hkr,
    koszul_dual,
)
from necklace.component.series import (
    SignedSeries,
    TriSeries,
    invert,
    invert_unit,
    substitute_power,
    tri_from_signed,
    tri_invert_unit,
)
from necklace.component.transforms import exp_P, hcfree, lie_log, log_series, sym_exp
from necklace.exceptions import ExpressionEvaluationError

from .parser import Binary, Call, Number, Symbol, Unary, parse

Function = namedtuple('Function', ['parameters', 'implementation'])

SERIES = 'series'
SIGNED = 'signed'
INTEGER = 'integer'

subst_pattern = re.compile(r'^subst_(\d+)$')


def _tri(value):
    if isinstance(value, SignedSeries):
        return tri_from_signed(value)
    return value


def _inverse(value):
    if isinstance(value, TriSeries):
        return tri_invert_unit(value)
    if value.has_unit_constant():
        return invert(value)
    return invert_unit(value)


available_functions = {
    'hcfree': Function([SIGNED], lambda V, trunc: hcfree(V)),
    'lie': Function([SIGNED], lambda X, trunc: lie_log(X)),
    'S': Function([SIGNED], lambda X, trunc: sym_exp(X)),
    'S_rational': Function([SIGNED], lambda X, trunc: sym_exp(X, allow_rational=True)),
    'log': Function([SIGNED], lambda X, trunc: log_series(X)),
    'exp': Function([SIGNED], lambda X, trunc: exp_P(X)),
    'inv': Function([SERIES], lambda f, trunc: _inverse(f)),
    'subst': Function([SIGNED, INTEGER], lambda f, k, trunc: substitute_power(f, k)),
    'hkr': Function([INTEGER], lambda n, trunc: hkr(n, trunc)),
    'exterior': Function([INTEGER], lambda n, trunc: exterior_hh(n, trunc)),
    'hh_from_hc': Function([SERIES], lambda hc, trunc: hh_from_hc(_tri(hc))),
    'hc_from_hh': Function([SERIES], lambda hh, trunc: hc_from_hh(_tri(hh))),
    'koszul_hh': Function([SERIES], lambda hh, trunc: koszul_dual(_tri(hh), HH_DUAL)),
    'koszul_hc': Function([SERIES], lambda hc, trunc: koszul_dual(_tri(hc), HC_DUAL)),
}
for _name, _preset in available_presets.items():
    available_functions[_name] = Function(
        [INTEGER] * len(_preset.parameters),
        (lambda preset: lambda *params, trunc: preset(*params, trunc=trunc))(_preset),
    )


class FunctionNames(object):
    """Membership test used by the parser: registered names plus subst_<k>"""

    def __contains__(self, name):
        return name in available_functions or bool(subst_pattern.match(name))


function_names = FunctionNames()


class Evaluator(object):

    def __init__(self, trunc):
        self.trunc = trunc

    def __call__(self, node):
        method = getattr(self, 'visit_{}'.format(type(node).__name__.lower()))
        return method(node)

    def visit_number(self, node):
        return SignedSeries.constant(node.value, self.trunc)

    def visit_symbol(self, node):
        if node.name == 'z':
            return SignedSeries.monomial(1, 0, 1, self.trunc)
        if node.name == 'y':
            return SignedSeries.monomial(0, 1, 1, self.trunc)
        return TriSeries.x(self.trunc)

    def visit_unary(self, node):
        return -self(node.operand)

    def visit_binary(self, node):
        left = self(node.left)
        if node.op == '^':
            exponent = self.integer(node.right)
            return self.guard(node, lambda: left ** exponent)
        right = self(node.right)
        if node.op == '+':
            return left + right
        if node.op == '-':
            return left - right
        if node.op == '*':
            return left * right
        return self.guard(node, lambda: left * self.divisor(right))

    def divisor(self, value):
        constant = self.constant(value)
        if constant is not None:
            if not constant:
                raise ZeroDivisionError('Division by zero')
            return Fraction(1) / constant
        return _inverse(value)

    def visit_call(self, node):
        name = node.name
        match = subst_pattern.match(name)
        if match and name not in available_functions:
            function = Function([SIGNED], (lambda k: lambda f, trunc: substitute_power(f, k))(
                int(match.group(1))))
        else:
            function = available_functions[name]
        if len(node.args) != len(function.parameters):
            raise ExpressionEvaluationError(
                '{} takes {} argument(s), got {}'.format(
                    name, len(function.parameters), len(node.args)),
                node.span)
        args = []
        for arg, kind in zip(node.args, function.parameters):
            if kind == INTEGER:
                args.append(self.integer(arg))
            elif kind == SIGNED:
                args.append(self.signed(arg))
            else:
                args.append(self(arg))
        return self.guard(node, lambda: function.implementation(*args, trunc=self.trunc))

    def constant(self, value):
        """The rational constant a value equals, or None"""
        if isinstance(value, SignedSeries):
            if all(not c for (q, sign), c in value.items() if (q, sign) != (0, 0)):
                return value.coef(0).even
            return None
        if all(not c for slot, c in value.items() if slot != (0, 0, 0)):
            return value.coef(0, 0, 0)
        return None

    def integer(self, node):
        constant = self.constant(self(node))
        if constant is None or constant.denominator != 1:
            raise ExpressionEvaluationError('Expected an integer constant', node.span)
        return int(constant)

    def signed(self, node):
        value = self(node)
        if isinstance(value, TriSeries):
            if any(n for (n, _, _), c in value.items() if c):
                raise ExpressionEvaluationError(
                    'Expected a series in z and y without x', node.span)
            value = value.slice(0)
        return value

    def guard(self, node, compute):
        try:
            return compute()
        except ExpressionEvaluationError:
            raise
        except (ArithmeticError, ValueError) as e:
            raise ExpressionEvaluationError('{}: {}'.format(type(e).__name__, e), node.span)


def evaluate(tree, trunc):
    """Value of a parsed formula up to weight ``trunc``"""
    result = Evaluator(trunc)(tree)
    logging.debug('Evaluated to %s', result)
    return result


def evaluate_text(text, trunc):
    return evaluate(parse(text, function_names), trunc)
