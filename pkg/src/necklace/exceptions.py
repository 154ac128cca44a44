"""Domain errors

Each error subclasses a built-in exception so that callers who do not care
about the distinction can keep catching ``ValueError``/``ArithmeticError``.
"""

__all__ = [
    'SeriesDomainError',
    'IntegralityError',
    'DivisibilityError',
    'SupportError',
    'PresetParameterError',
    'PresentationError',
    'IncompleteCompletionError',
    'ChainComplexError',
    'OracleConsistencyError',
    'ExpressionSyntaxError',
    'ExpressionEvaluationError',
    'UnknownCaseError',
]


class SeriesDomainError(ValueError):
    """A series operation was called outside its domain, e.g. inverting a
    series whose constant term is not one, or exponentiating a series with a
    nonzero constant term.
    """


class IntegralityError(ArithmeticError):
    """A transform that is known to produce integer (or nonnegative integer)
    coefficients did not. Raised instead of rounding.
    """

    def __init__(self, message, weight=None, sign=None):
        super(IntegralityError, self).__init__(message)
        self.weight = weight
        self.sign = sign


class DivisibilityError(ArithmeticError):
    """A Hochschild series is not of the form 1 + (1+xy)·HC.

    ``slot`` is the first (n, q, sign) slot where the recursion for HC leaves
    the support region with a nonzero value.
    """

    def __init__(self, message, slot=None):
        super(DivisibilityError, self).__init__(message)
        self.slot = slot


class SupportError(ValueError):
    """A homology series has a nonzero coefficient outside its support, or an
    index remap sends a slot outside the support region.
    """

    def __init__(self, message, slot=None):
        super(SupportError, self).__init__(message)
        self.slot = slot


class PresetParameterError(ValueError):
    """Preset parameters violate the constraints under which the closed
    formula holds.
    """


class PresentationError(ValueError):
    """A presentation is malformed: unknown generator, duplicate names,
    non-homogeneous relation, bad coefficient literal, ...
    """


class IncompleteCompletionError(RuntimeError):
    """A rewriting system was used above the weight it was completed to."""


class ChainComplexError(AssertionError):
    """One of the chain-map identities (b∘b = 0, b'∘b' = 0,
    b(1-t) = (1-t)b', t^L = id) fails on a block. This signals a sign
    convention bug, never a property of the algebra.
    """

    def __init__(self, message, block=None, identity=None):
        super(ChainComplexError, self).__init__(message)
        self.block = block
        self.identity = identity


class OracleConsistencyError(AssertionError):
    """Two independent oracle computations disagree (Connes complex vs norm
    map, or Hochschild dimensions vs the cyclic bookkeeping).
    """

    def __init__(self, message, slot=None):
        super(OracleConsistencyError, self).__init__(message)
        self.slot = slot


class ExpressionSyntaxError(SyntaxError):
    """Syntax error in a series expression, with a precise position."""

    def __init__(self, message, text='', offset=0):
        line = text.count('\n', 0, offset) + 1
        column = offset - (text.rfind('\n', 0, offset) + 1) + 1
        super(ExpressionSyntaxError, self).__init__(
            '{} (line {}, column {})'.format(message, line, column)
        )
        self.message = message
        self.text = text
        self.offset = offset
        self.lineno = line
        self.column = column


class ExpressionEvaluationError(ValueError):
    """Evaluation of a parsed expression failed; ``span`` is the
    (start, end) offset range of the failing node in the source text.
    """

    def __init__(self, message, span=None):
        if span is not None:
            message = '{} (at offset {}-{})'.format(message, span[0], span[1])
        super(ExpressionEvaluationError, self).__init__(message)
        self.span = span


class UnknownCaseError(ValueError):
    """Signifies that a verification case name was passed, but no matching
    case is registered
    """
