import logging

from necklace.component.oracle import block_dims

from necklace.oracles import OracleRunBase


class SingleThreadedOracleRun(OracleRunBase):
    def compute_blocks(self):
        maps = self.chain_maps_factory(self.rewriting_system)
        blocks = []
        for task in self.block_tasks:
            logging.info('Computing block weight %s parity %s', task['weight'], task['parity'])
            blocks.append(block_dims(
                maps,
                task['weight'],
                task['parity'],
                self.max_hdeg,
                check=self.check_identities,
            ))
        return blocks
