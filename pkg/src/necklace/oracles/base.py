import logging
from abc import ABCMeta, abstractmethod
from functools import partial

from descriptors import cachedproperty

from necklace.component.oracle import chain_maps, table_from_blocks
from necklace.component.rewriting import complete, presentation_from_dict

from necklace.oracles import CONFIG_VERSION
from necklace.oracles.validate import OracleRunValidator


class OracleRunBase(object, metaclass=ABCMeta):
    """The base class for all oracle runs.

    A run takes a presentation config (as read from a presentation file),
    completes it and computes the Hochschild and cyclic homology table up to
    weight ``trunc`` and homological degree ``max_hdeg``. Every (weight,
    parity) block is an independent task.
    """

    def __init__(self, config, trunc=None, max_hdeg=None, check_identities=True):
        self._check_config_version(config)
        self.config = config
        presentation = presentation_from_dict(config)
        if trunc is not None:
            presentation = presentation.with_trunc(trunc)
        self.presentation = presentation
        self.trunc = presentation.trunc
        self.max_hdeg = self.trunc if max_hdeg is None else max_hdeg
        self.check_identities = check_identities
        self.initialize_factories()

    def _check_config_version(self, config):
        if 'config_version' in config:
            config_version = config['config_version']
        else:
            logging.warning('config_version key not found in presentation config. '
                            'Assuming %s, which may not be correct', CONFIG_VERSION)
            config_version = CONFIG_VERSION
        if config_version != CONFIG_VERSION:
            raise ValueError(
                "Presentation config '{}' "
                "does not match current version '{}'. "
                "Will not run oracle."
                .format(config_version, CONFIG_VERSION)
            )

    def initialize_factories(self):
        self.rewriting_system_factory = partial(complete, self.presentation)
        self.chain_maps_factory = partial(
            chain_maps,
            trunc=self.trunc,
            max_hdeg=self.max_hdeg,
        )

    @cachedproperty
    def presentation_hash(self):
        return self.presentation.hash

    @cachedproperty
    def rewriting_system(self):
        rs = self.rewriting_system_factory()
        logging.info('Completed %s: %s rules', self.presentation.name, len(rs.rules))
        return rs

    @cachedproperty
    def block_tasks(self):
        """(weight, parity) blocks, heaviest first so the long tasks start early"""
        tasks = [
            {'weight': q, 'parity': parity}
            for q in range(self.trunc, 0, -1) for parity in (0, 1)
        ]
        logging.info('Computed %s block tasks', len(tasks))
        return tasks

    @abstractmethod
    def compute_blocks(self):
        """Homology dimensions of every block task"""
        pass

    def validate(self, echo=True):
        OracleRunValidator().run(self.config, self.trunc, self.max_hdeg, echo=echo)

    def _run(self):
        logging.info('Computing blocks of %s up to weight %s, degree %s',
                     self.presentation.name, self.trunc, self.max_hdeg)
        blocks = self.compute_blocks()
        return table_from_blocks(blocks, self.presentation_hash, self.trunc, self.max_hdeg)

    def run(self):
        try:
            return self._run()
        except Exception:
            logging.exception('Run interrupted by uncaught exception')
            raise

    __call__ = run
