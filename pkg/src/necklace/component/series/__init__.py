from .signed import (
    CoefPair,
    SignedSeries,
    add,
    sub,
    mul,
    invert,
    invert_unit,
    power,
    compose,
    substitute_power,
    free_product_series,
)
from .tri import (
    TriSeries,
    HH_SUPPORT,
    HC_SUPPORT,
    tri_add,
    tri_sub,
    tri_mul,
    tri_scale,
    tri_invert,
    tri_invert_unit,
    tri_power,
    tri_from_signed,
)
from .render import (
    render,
    render_signed,
    render_tri,
    render_coefficients,
    to_dict,
    signed_to_dict,
    signed_from_dict,
    tri_to_dict,
    tri_from_dict,
    format_rational,
    parse_rational,
)

__all__ = (
    'CoefPair',
    'SignedSeries',
    'add',
    'sub',
    'mul',
    'invert',
    'invert_unit',
    'power',
    'compose',
    'substitute_power',
    'free_product_series',
    'TriSeries',
    'HH_SUPPORT',
    'HC_SUPPORT',
    'tri_add',
    'tri_sub',
    'tri_mul',
    'tri_scale',
    'tri_invert',
    'tri_invert_unit',
    'tri_power',
    'tri_from_signed',
    'render',
    'render_signed',
    'render_tri',
    'render_coefficients',
    'to_dict',
    'signed_to_dict',
    'signed_from_dict',
    'tri_to_dict',
    'tri_from_dict',
    'format_rational',
    'parse_rational',
)
