import logging
from functools import partial

import pytest

from necklace.component.calculus import predict
from necklace.component.oracle import HC, verify_against
from necklace.component.series import SignedSeries, tri_from_signed
from necklace.component.transforms import hcfree
from necklace.exceptions import PresentationError
from necklace.oracles import (
    CONFIG_VERSION,
    MultiCoreOracleRun,
    SingleThreadedOracleRun,
)
from necklace.util.batch import Batch

from tests.utils import free_config, sample_config

parametrize_oracle_classes = pytest.mark.parametrize(('oracle_class',), [
    (SingleThreadedOracleRun,),
    (partial(MultiCoreOracleRun, n_processes=2),),
])


@parametrize_oracle_classes
def test_symmetric_witness(oracle_class):
    table = oracle_class(config=sample_config(), max_hdeg=2)()
    assert table.trunc == 4
    assert table.max_hdeg == 2
    assert verify_against(table, predict('generic_symmetric', [3], 4), HC).equal


@parametrize_oracle_classes
def test_free_algebra(oracle_class):
    table = oracle_class(config=free_config(['a', 'b']), trunc=3)()
    assert table.max_hdeg == 3
    assert table.hc_series() == tri_from_signed(hcfree(SignedSeries(3, [0, 2])))


def test_runs_agree():
    single = SingleThreadedOracleRun(config=sample_config(), max_hdeg=2)()
    multi = MultiCoreOracleRun(n_processes=3, config=sample_config(), max_hdeg=2)()
    assert single == multi
    assert single.presentation_hash == multi.presentation_hash


def test_block_tasks_heaviest_first():
    run = SingleThreadedOracleRun(config=sample_config(trunc=2))
    assert run.block_tasks == [
        {'weight': 2, 'parity': 0},
        {'weight': 2, 'parity': 1},
        {'weight': 1, 'parity': 0},
        {'weight': 1, 'parity': 1},
    ]


class RecordingOracleRun(MultiCoreOracleRun):
    """Runs the batches in this process and keeps them for inspection"""

    def parallelize(self, partially_bound_function, tasks, n_processes, chunksize=1):
        self.batches = [list(batch) for batch in Batch(tasks, chunksize)]
        for batch in self.batches:
            yield partially_bound_function(batch)


def test_multicore_batches_share_one_completion_per_worker():
    run = RecordingOracleRun(n_processes=3, config=sample_config(), max_hdeg=2)
    table = run()
    tasks = run.block_tasks
    assert len(tasks) == 8
    assert run.chunksize == 3
    assert run.batches == [
        [tasks[0], tasks[3], tasks[6]],
        [tasks[1], tasks[4], tasks[7]],
        [tasks[2], tasks[5]],
    ]
    assert table == SingleThreadedOracleRun(config=sample_config(), max_hdeg=2)()


def test_multicore_single_process_is_one_batch():
    run = RecordingOracleRun(n_processes=1, config=free_config(['a']), trunc=3)
    run()
    assert run.batches == [run.block_tasks]


def test_trunc_override():
    run = SingleThreadedOracleRun(config=sample_config(trunc=6), trunc=3)
    assert run.trunc == 3
    assert run.presentation.trunc == 3


def test_config_version_mismatch():
    config = sample_config()
    config['config_version'] = 'v0'
    with pytest.raises(ValueError):
        SingleThreadedOracleRun(config=config)


def test_config_version_missing(caplog):
    config = sample_config()
    del config['config_version']
    with caplog.at_level(logging.WARNING):
        run = SingleThreadedOracleRun(config=config, trunc=2)
    assert CONFIG_VERSION in caplog.text
    assert run.trunc == 2


def test_not_a_mapping():
    with pytest.raises(PresentationError):
        SingleThreadedOracleRun(config=['a', 'b'])
