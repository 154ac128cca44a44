"""Tokenizer, Pratt parser and unparser for series formulas

    hcfree(7*y*z - 3*z^2)
    1/(1 - 2*z + z^2)
    hh_from_hc(polynomial_generic(7, 3, 1, 3))

Precedence, loosest first: + and -, then * and /, then unary minus, then ^
(right associative). Every node carries the (start, end) offsets of its
source text.
"""
import re
from collections import namedtuple

from necklace.exceptions import ExpressionSyntaxError

Token = namedtuple('Token', ['kind', 'text', 'start', 'end'])

Number = namedtuple('Number', ['value', 'span'])
Symbol = namedtuple('Symbol', ['name', 'span'])
Unary = namedtuple('Unary', ['op', 'operand', 'span'])
Binary = namedtuple('Binary', ['op', 'left', 'right', 'span'])
Call = namedtuple('Call', ['name', 'args', 'span'])

SYMBOLS = ('z', 'y', 'x')

NUMBER = 'number'
NAME = 'name'
OP = 'op'
END = 'end'

token_pattern = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^(),]))')

BINDING = {'+': 10, '-': 10, '*': 20, '/': 20, '^': 40}
UNARY_BINDING = 30


def tokenize(text):
    tokens = []
    position = 0
    while True:
        match = token_pattern.match(text, position)
        if not match:
            rest = text[position:]
            if not rest.strip():
                break
            offset = position + len(rest) - len(rest.lstrip())
            raise ExpressionSyntaxError('Unexpected character {!r}'.format(text[offset]),
                                        text, offset)
        number, name, operator = match.groups()
        if number is not None:
            tokens.append(Token(NUMBER, number, match.start(1), match.end(1)))
        elif name is not None:
            tokens.append(Token(NAME, name, match.start(2), match.end(2)))
        else:
            operator_text = '^' if operator == '**' else operator
            tokens.append(Token(OP, operator_text, match.start(3), match.end(3)))
        position = match.end()
    tokens.append(Token(END, '', len(text), len(text)))
    return tokens


class Parser(object):

    def __init__(self, text, functions):
        self.text = text
        self.functions = functions
        self.tokens = tokenize(text)
        self.position = 0

    @property
    def token(self):
        return self.tokens[self.position]

    def advance(self):
        token = self.token
        self.position += 1
        return token

    def error(self, message, token=None):
        token = token or self.token
        return ExpressionSyntaxError(message, self.text, token.start)

    def expect(self, text):
        if self.token.kind != OP or self.token.text != text:
            found = 'end of input' if self.token.kind == END else repr(self.token.text)
            raise self.error('Expected {!r}, found {}'.format(text, found))
        return self.advance()

    def parse(self):
        tree = self.expression()
        if self.token.kind != END:
            raise self.error('Unexpected {!r} after a complete expression'.format(self.token.text))
        return tree

    def expression(self, rbp=0):
        left = self.nud(self.advance())
        while self.token.kind == OP and rbp < BINDING.get(self.token.text, 0):
            left = self.led(self.advance(), left)
        return left

    def nud(self, token):
        if token.kind == NUMBER:
            return Number(int(token.text), (token.start, token.end))
        if token.kind == NAME:
            if self.token.kind == OP and self.token.text == '(':
                return self.call(token)
            if token.text not in SYMBOLS:
                raise self.error('Unknown symbol {!r}; symbols are {}'
                                 .format(token.text, ', '.join(SYMBOLS)), token)
            return Symbol(token.text, (token.start, token.end))
        if token.kind == OP and token.text == '-':
            operand = self.expression(UNARY_BINDING)
            return Unary('-', operand, (token.start, operand.span[1]))
        if token.kind == OP and token.text == '+':
            return self.expression(UNARY_BINDING)
        if token.kind == OP and token.text == '(':
            inner = self.expression()
            self.expect(')')
            return inner
        if token.kind == END:
            raise self.error('Unexpected end of input', token)
        raise self.error('Unexpected {!r}'.format(token.text), token)

    def led(self, token, left):
        if token.text == '^':
            right = self.expression(BINDING['^'] - 1)
        else:
            right = self.expression(BINDING[token.text])
        return Binary(token.text, left, right, (left.span[0], right.span[1]))

    def call(self, name_token):
        if name_token.text not in self.functions:
            raise self.error('Unknown function {!r}'.format(name_token.text), name_token)
        self.expect('(')
        args = []
        if not (self.token.kind == OP and self.token.text == ')'):
            args.append(self.expression())
            while self.token.kind == OP and self.token.text == ',':
                self.advance()
                args.append(self.expression())
        end = self.expect(')').end
        return Call(name_token.text, tuple(args), (name_token.start, end))


def parse(text, functions=None):
    """Parse a formula into a tree of Number/Symbol/Unary/Binary/Call nodes"""
    if functions is None:
        from .evaluator import function_names
        functions = function_names
    return Parser(text, functions).parse()


def _precedence(node):
    if isinstance(node, Binary):
        return BINDING[node.op]
    if isinstance(node, Unary):
        return UNARY_BINDING
    return 100


def unparse(node):
    """Source text for a tree, with only the parentheses the grammar needs"""
    if isinstance(node, Number):
        return str(node.value)
    if isinstance(node, Symbol):
        return node.name
    if isinstance(node, Call):
        return '{}({})'.format(node.name, ', '.join(unparse(arg) for arg in node.args))
    if isinstance(node, Unary):
        return '-' + _wrap(node.operand, _precedence(node.operand) < UNARY_BINDING)
    precedence = BINDING[node.op]
    if node.op == '^':
        left = _wrap(node.left, _precedence(node.left) <= precedence)
        right = _wrap(node.right, _precedence(node.right) < precedence)
        return '{}^{}'.format(left, right)
    left = _wrap(node.left, _precedence(node.left) < precedence)
    right = _wrap(node.right, _precedence(node.right) <= precedence)
    if node.op in '*/':
        return '{}{}{}'.format(left, node.op, right)
    return '{} {} {}'.format(left, node.op, right)


def _wrap(node, needed):
    text = unparse(node)
    return '({})'.format(text) if needed else text


def strip_spans(node):
    """The tree without source offsets, for structural comparison"""
    if isinstance(node, Number):
        return ('number', node.value)
    if isinstance(node, Symbol):
        return ('symbol', node.name)
    if isinstance(node, Unary):
        return ('unary', node.op, strip_spans(node.operand))
    if isinstance(node, Binary):
        return ('binary', node.op, strip_spans(node.left), strip_spans(node.right))
    return ('call', node.name, tuple(strip_spans(arg) for arg in node.args))
