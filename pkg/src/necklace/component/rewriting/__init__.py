from .words import Alphabet, Generator, MonomialSet, DegLex
from .automaton import FactorAutomaton
from .monomials import (
    StronglyFreeReport,
    is_strongly_free_monomials,
    count_normal_words,
    strongly_free_series_check,
)
from .completion import (
    RewritingSystem,
    complete,
    normal_form,
    normal_words,
    has_strongly_free_leading_monomials,
    render_combination,
)
from .cyclic import hc0_direct
from .presentation import (
    Presentation,
    relation,
    presentation_from_dict,
    presentation_to_dict,
    presentation_hash,
    load_presentation,
)

__all__ = (
    'Alphabet',
    'Generator',
    'MonomialSet',
    'DegLex',
    'FactorAutomaton',
    'StronglyFreeReport',
    'is_strongly_free_monomials',
    'count_normal_words',
    'strongly_free_series_check',
    'RewritingSystem',
    'complete',
    'normal_form',
    'normal_words',
    'has_strongly_free_leading_monomials',
    'render_combination',
    'hc0_direct',
    'Presentation',
    'relation',
    'presentation_from_dict',
    'presentation_to_dict',
    'presentation_hash',
    'load_presentation',
)
