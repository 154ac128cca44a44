import logging
from textwrap import dedent

from necklace.component.rewriting import (
    has_strongly_free_leading_monomials,
    presentation_from_dict,
)
from necklace.exceptions import PresentationError
from necklace.validation_primitives import (
    keys_should_be_known,
    section_should_be_list,
    value_should_be_in_range,
    value_should_be_positive_int,
)

PRESENTATION_KEYS = ('config_version', 'name', 'generators', 'relations', 'order', 'trunc')


class Validator(object):
    pass


class PresentationKeysValidator(Validator):
    def run(self, config):
        if not isinstance(config, dict):
            raise PresentationError(dedent('''Section: presentation -
            Expected a mapping at the top level, got {!r}'''.format(config)))
        try:
            keys_should_be_known(config, PRESENTATION_KEYS)
        except ValueError as e:
            raise PresentationError(dedent('''Section: presentation -
            {}'''.format(e)))


class PresentationValidator(Validator):
    def run(self, config):
        for section in ('generators', 'relations', 'order'):
            if config.get(section) is None:
                continue
            try:
                section_should_be_list(section, config[section])
            except ValueError as e:
                raise PresentationError(dedent('''Section: {} -
                {}'''.format(section, e)))
        presentation = presentation_from_dict(config)
        if not has_strongly_free_leading_monomials(presentation):
            logging.info('Leading words of %s are not strongly free; completion may add rules',
                         presentation.name)
        return presentation


class RunBoundsValidator(Validator):
    def run(self, presentation, trunc, max_hdeg):
        try:
            value_should_be_positive_int('trunc', trunc)
        except ValueError as e:
            raise ValueError(dedent('''Section: trunc -
            {}'''.format(e)))
        try:
            value_should_be_in_range('max_hdeg', max_hdeg, 0, trunc)
        except ValueError as e:
            raise ValueError(dedent('''Section: max_hdeg -
            {}'''.format(e)))
        heavy = [relation for relation in presentation.relations
                 if presentation.alphabet.weight(next(iter(relation))) > trunc]
        if heavy:
            logging.warning('%s relations are heavier than the weight bound %s and do not '
                            'affect the run', len(heavy), trunc)


class OracleRunValidator(Validator):
    def run(self, config, trunc=None, max_hdeg=None, echo=True):
        PresentationKeysValidator().run(config)
        presentation = PresentationValidator().run(config)
        trunc = presentation.trunc if trunc is None else trunc
        max_hdeg = trunc if max_hdeg is None else max_hdeg
        RunBoundsValidator().run(presentation, trunc, max_hdeg)

        # show the success message in the console as well as the logger
        # as we don't really know how they have configured logging
        success_message = 'Oracle run validation ran to completion with no errors'
        logging.info(success_message)
        if echo:
            print(success_message)
