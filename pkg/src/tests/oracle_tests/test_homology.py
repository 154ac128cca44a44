import pytest

from necklace.component.calculus import exterior_hh, hh_from_hc, hkr, predict
from necklace.component.oracle import (
    HC,
    HH,
    BlockDims,
    bookkeeping_report,
    hc_dims,
    hh_dims,
    homology_table,
    koszul_check,
    norm_hc_dims,
    table_from_blocks,
    verify_against,
)
from necklace.component.rewriting import complete
from necklace.component.rewriting.witnesses import (
    dual_numbers,
    exterior_algebra,
    free_algebra,
    polynomial_ring,
    symmetric_witness,
)
from necklace.component.series import SignedSeries, tri_from_signed
from necklace.component.transforms import hcfree
from necklace.exceptions import OracleConsistencyError


def test_free_algebra_has_no_higher_cyclic_homology():
    rs = complete(free_algebra([('a', 1, 0), ('b', 1, 0)], trunc=4))
    table = homology_table(rs, 4, 2)
    hc = tri_from_signed(hcfree(SignedSeries(4, [0, 2])))
    assert table.hc_series() == hc
    assert verify_against(table, hh_from_hc(hc), HH).equal


def test_two_ways_to_cyclic_homology_agree():
    rs = complete(symmetric_witness(trunc=4))
    assert hc_dims(rs, 4, 2) == norm_hc_dims(rs, 4, 2)


def test_dual_numbers():
    rs = complete(dual_numbers(1, 0, trunc=5))
    table = homology_table(rs, 5, 4)
    assert table.hc == {(0, 1, 0): 1, (2, 3, 0): 1, (4, 5, 0): 1}
    assert verify_against(table, predict('exceptional_A0', [1], 5), HC).equal


def test_hkr():
    rs = complete(polynomial_ring(2, trunc=4))
    table = homology_table(rs, 4, 3)
    report = verify_against(table, hkr(2, 4), HH)
    assert report.equal
    assert report.compared == len(table.slots())


def test_exterior_algebra():
    rs = complete(exterior_algebra(2, trunc=4))
    assert verify_against(homology_table(rs, 4, 4), exterior_hh(2, 4), HH).equal


def test_hh_dims_include_unit():
    rs = complete(free_algebra([('a', 1, 1)], trunc=2))
    assert hh_dims(rs, 2, 2)[(0, 0, 0)] == 1


def test_koszul_pair():
    rs_polynomial = complete(polynomial_ring(2, trunc=4))
    rs_exterior = complete(exterior_algebra(2, trunc=4))
    report = koszul_check(rs_polynomial, rs_exterior, 4)
    assert report.equal
    assert report.hh.first_discrepancy is None
    assert report.hc.first_discrepancy is None


def test_mismatch_is_reported_at_first_slot():
    rs = complete(free_algebra([('a', 1, 0)], trunc=3))
    table = homology_table(rs, 3, 1)
    wrong = tri_from_signed(SignedSeries(3, [0, 1, 2, 1]))
    report = verify_against(table, wrong, HC)
    assert not report.equal
    assert report.first_discrepancy == ((0, 2, 0), 1, 2)


def test_bookkeeping_holds():
    rs = complete(dual_numbers(2, 1, trunc=4))
    assert bookkeeping_report(homology_table(rs, 4, 3)).equal


def test_consistency_errors():
    disagreeing = BlockDims({(0, 1, 0): 1}, {(0, 1, 0): 0}, {(0, 1, 0): 1, (1, 1, 1): 1})
    with pytest.raises(OracleConsistencyError) as error:
        table_from_blocks([disagreeing], None, 1, 1)
    assert error.value.slot == (0, 1, 0)

    unbalanced = BlockDims({(0, 1, 0): 1}, {(0, 1, 0): 1}, {(0, 1, 0): 1})
    with pytest.raises(OracleConsistencyError) as error:
        table_from_blocks([unbalanced], None, 1, 1)
    assert error.value.slot == (1, 1, 1)


@pytest.mark.slow
def test_symmetric_witness_cyclic_homology():
    rs = complete(symmetric_witness(trunc=6))
    table = homology_table(rs, 6, 6)
    report = verify_against(table, predict('generic_symmetric', [3], 6), HC)
    assert report.equal
    assert report.compared == 56
    assert {slot: dim for slot, dim in table.hc.items() if slot[0] >= 1} == {(1, 2, 1): 1}
