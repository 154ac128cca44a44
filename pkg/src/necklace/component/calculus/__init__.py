from .duality import (
    DualityRemap,
    HH_DUAL,
    HC_DUAL,
    hh_from_hc,
    hc_from_hh,
    koszul_dual,
    diag_hh,
)
from .commutative import hkr, exterior_hh, tensor_hh
from .strongly_free import (
    quotient_series_strongly_free,
    quotient_series_strongly_free_set,
    a_omega_series,
    freeset_hc,
    strong_quotient_hc_difference,
)
from .presets import Preset, available_presets, predict, list_presets

__all__ = (
    'DualityRemap',
    'HH_DUAL',
    'HC_DUAL',
    'hh_from_hc',
    'hc_from_hh',
    'koszul_dual',
    'diag_hh',
    'hkr',
    'exterior_hh',
    'tensor_hh',
    'quotient_series_strongly_free',
    'quotient_series_strongly_free_set',
    'a_omega_series',
    'freeset_hc',
    'strong_quotient_hc_difference',
    'Preset',
    'available_presets',
    'predict',
    'list_presets',
)
