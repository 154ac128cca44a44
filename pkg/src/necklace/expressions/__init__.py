from .parser import parse, unparse, strip_spans, tokenize
from .evaluator import available_functions, evaluate, evaluate_text

__all__ = (
    'parse',
    'unparse',
    'strip_spans',
    'tokenize',
    'available_functions',
    'evaluate',
    'evaluate_text',
)
