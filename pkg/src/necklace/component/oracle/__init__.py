from .complexes import GradedBasis, ChainMaps, build_blocks, assemble_maps
from .homology import (
    BlockDims,
    block_dims,
    chain_maps,
    cyclic_orbits,
    hc_dims,
    norm_hc_dims,
    hh_dims,
    homology_table,
    table_from_blocks,
)
from .table import (
    HH,
    HC,
    HomologyTable,
    ComparisonReport,
    Discrepancy,
    verify_against,
    bookkeeping_report,
    render_table,
)
from .koszul import KoszulReport, koszul_check

__all__ = (
    'GradedBasis',
    'ChainMaps',
    'build_blocks',
    'assemble_maps',
    'BlockDims',
    'block_dims',
    'chain_maps',
    'cyclic_orbits',
    'hc_dims',
    'norm_hc_dims',
    'hh_dims',
    'homology_table',
    'table_from_blocks',
    'HH',
    'HC',
    'HomologyTable',
    'ComparisonReport',
    'Discrepancy',
    'verify_against',
    'bookkeeping_report',
    'render_table',
    'KoszulReport',
    'koszul_check',
)
