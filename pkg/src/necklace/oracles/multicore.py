import logging
import traceback
from functools import partial
from multiprocessing import Pool

from necklace.component.oracle import block_dims
from necklace.exceptions import ChainComplexError, OracleConsistencyError
from necklace.util.batch import Batch

from necklace.oracles import OracleRunBase


class MultiCoreOracleRun(OracleRunBase):

    def __init__(self, n_processes=1, *args, **kwargs):
        super(MultiCoreOracleRun, self).__init__(*args, **kwargs)
        self.n_processes = n_processes

    def dealt_tasks(self):
        """Block tasks reordered so that consecutive chunks of ``chunksize``
        each take every n-th task, spreading the heavy blocks over the workers
        """
        n = self.n_processes
        tasks = self.block_tasks
        return [task for start in range(n) for task in tasks[start::n]]

    @property
    def chunksize(self):
        return max(1, -(-len(self.block_tasks) // self.n_processes))

    def compute_blocks(self):
        partial_compute = partial(
            compute_block_batch,
            rewriting_system_factory=self.rewriting_system_factory,
            chain_maps_factory=self.chain_maps_factory,
            max_hdeg=self.max_hdeg,
            check_identities=self.check_identities,
        )
        logging.info(
            'Starting parallel block computation: %s tasks in batches of %s, %s processes',
            len(self.block_tasks),
            self.chunksize,
            self.n_processes
        )
        blocks = []
        num_failures = 0
        for batch_blocks in self.parallelize(
            partial_compute,
            self.dealt_tasks(),
            self.n_processes,
            self.chunksize,
        ):
            if batch_blocks is None:
                num_failures += 1
            else:
                blocks += batch_blocks
        logging.info('Done. blocks: %s, failed batches: %s', len(blocks), num_failures)
        if num_failures:
            raise RuntimeError('{} block batches failed; see the child errors above'
                               .format(num_failures))
        return blocks

    def parallelize(
        self,
        partially_bound_function,
        tasks,
        n_processes,
        chunksize=1,
    ):
        with Pool(n_processes, maxtasksperchild=1) as pool:
            for result in pool.map(
                partially_bound_function,
                [list(task_batch) for task_batch in Batch(tasks, chunksize)]
            ):
                yield result


def compute_block_batch(
    block_tasks,
    rewriting_system_factory,
    chain_maps_factory,
    max_hdeg,
    check_identities,
):
    try:
        maps = chain_maps_factory(rewriting_system_factory())
        return [
            block_dims(maps, task['weight'], task['parity'], max_hdeg, check=check_identities)
            for task in block_tasks
        ]
    except (ChainComplexError, OracleConsistencyError):
        raise
    except Exception:
        logging.error('Child error: %s', traceback.format_exc())
        return None
