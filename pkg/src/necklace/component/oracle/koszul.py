"""Koszul duality on computed homology tables"""
from collections import namedtuple

from necklace.component.calculus import HC_DUAL, HH_DUAL, koszul_dual

from .homology import homology_table
from .table import HC, HH, verify_against

KoszulReport = namedtuple('KoszulReport', ['equal', 'hh', 'hc'])


def koszul_check(rs_a, rs_dual, trunc):
    """Compare the tables of a Koszul pair under the index remaps
    HH (n, q, e) -> (q - n, q, e) and HC (n, q, e) -> (q - n - 1, q, e + 1)
    """
    table = homology_table(rs_a, trunc, trunc)
    dual_table = homology_table(rs_dual, trunc, trunc)
    hh = verify_against(dual_table, koszul_dual(table.hh_series(), HH_DUAL), HH)
    hc = verify_against(dual_table, koszul_dual(table.hc_series(), HC_DUAL), HC)
    return KoszulReport(hh.equal and hc.equal, hh, hc)
