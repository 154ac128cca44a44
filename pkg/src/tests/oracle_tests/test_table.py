from necklace.component.oracle import HC, HH, HomologyTable, render_table


def make_table():
    return HomologyTable('abc', 2, 1, {(0, 1, 1): 1, (1, 1, 0): 1, (0, 2, 0): 1},
                         {(0, 1, 1): 1, (0, 2, 0): 1, (1, 2, 1): 0})


def test_zero_slots_dropped_and_unit_added():
    table = make_table()
    assert table.hc == {(0, 1, 1): 1, (0, 2, 0): 1}
    assert table.hh[(0, 0, 0)] == 1


def test_covers_and_slots():
    table = make_table()
    assert table.covers((1, 2, 0))
    assert not table.covers((2, 2, 0))
    assert not table.covers((0, 3, 0))
    assert table.slots()[:4] == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)]
    assert len(table.slots()) == 10


def test_dict_round_trip():
    table = make_table()
    config = table.to_dict()
    assert config['N'] == 2
    assert config['hc'] == [[0, 1, 1, 1], [0, 2, 0, 1]]
    assert HomologyTable.from_dict(config) == table


def test_series():
    table = make_table()
    assert table.series(HC).slots() == table.hc
    assert table.series(HH).coef(0, 0, 0) == 1


def test_render_table():
    lines = render_table(make_table()).split('\n')
    assert lines[0] == '# presentation abc, N=2, max_hdeg=1'
    assert lines[1].split() == ['q', 'e', 'HH_0', 'HH_1', 'HC_0', 'HC_1']
    assert lines[2].split() == ['1', '0', '0', '1', '0', '.']
    assert lines[3].split() == ['1', '1', '1', '0', '1', '.']
    assert len(lines) == 6
