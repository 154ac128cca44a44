import re
import warnings
from fractions import Fraction

import yaml


def parse_rational_string(rational_string):
    """Given a rational literal such as '3', '-7/2' or '0.25', return it as
    an exact Fraction.

    Assumptions:
    - The string is an optionally signed integer, a fraction 'p/q' with
      integer p and nonzero q, or a terminating decimal. Decimals are
      converted exactly (0.1 becomes 1/10) with a RuntimeWarning, since
      presentation files are meant to carry exact values.

    :param rational_string: the literal to convert
    :type rational_string: str

    :return: the value
    :rtype: fractions.Fraction

    :raises: ValueError if the string is not a rational literal

    """
    text = rational_string.strip()
    if parse_rational_string.pattern.search(text):
        numerator, _, denominator = text.partition('/')
        if denominator and int(denominator) == 0:
            raise ValueError('Zero denominator in rational literal: {!r}'
                             .format(rational_string))
        return Fraction(int(numerator), int(denominator or 1))
    if parse_rational_string.pattern_decimal.search(text):
        warnings.warn(
            'Decimal literal "{}" converted to the exact fraction {}.'
            .format(text, Fraction(text)),
            RuntimeWarning
        )
        return Fraction(text)

    raise ValueError('Could not parse rational literal: {!r}'.format(rational_string))


parse_rational_string.pattern = re.compile(r'^[+-]?\d+( */ *\d+)?$')
parse_rational_string.pattern_decimal = re.compile(r'^[+-]?\d*\.\d+$')


def convert_to_rational(value):
    """Coefficient from a configuration value (int or rational string)"""
    if isinstance(value, bool):
        raise ValueError('Not a rational value: {!r}'.format(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational_string(value.replace(' ', ''))
    raise ValueError('Not a rational value: {!r}'.format(value))


def load_config(path):
    """Read a YAML (or JSON) configuration file into plain Python objects"""
    with open(path) as f:
        return yaml.safe_load(f)
