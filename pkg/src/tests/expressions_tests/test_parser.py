import pytest

from necklace.exceptions import ExpressionSyntaxError
from necklace.expressions import parse, strip_spans, tokenize, unparse


def tree(text):
    return strip_spans(parse(text))


def test_tokenize():
    tokens = tokenize('hcfree(2*z**2)')
    assert [token.text for token in tokens] == ['hcfree', '(', '2', '*', 'z', '^', '2', ')', '']
    assert tokens[0].kind == 'name'
    assert (tokens[2].start, tokens[2].end) == (7, 8)


@pytest.mark.parametrize('text,expected', [
    ('1 + 2*z', ('binary', '+', ('number', 1),
                 ('binary', '*', ('number', 2), ('symbol', 'z')))),
    ('1 - 2 - 3', ('binary', '-', ('binary', '-', ('number', 1), ('number', 2)),
                   ('number', 3))),
    ('2^3^2', ('binary', '^', ('number', 2), ('binary', '^', ('number', 3), ('number', 2)))),
    ('-z^2', ('unary', '-', ('binary', '^', ('symbol', 'z'), ('number', 2)))),
    ('+z', ('symbol', 'z')),
    ('(1 - z)^-1', ('binary', '^', ('binary', '-', ('number', 1), ('symbol', 'z')),
                    ('unary', '-', ('number', 1)))),
    ('lie(1/(1 - z))', ('call', 'lie', (('binary', '/', ('number', 1),
                                         ('binary', '-', ('number', 1), ('symbol', 'z'))),))),
    ('subst_3(y*z)', ('call', 'subst_3', (('binary', '*', ('symbol', 'y'), ('symbol', 'z')),))),
])
def test_precedence(text, expected):
    assert tree(text) == expected


def test_spans():
    node = parse('1 + hcfree(z)')
    assert node.span == (0, 13)
    assert node.right.span == (4, 13)


@pytest.mark.parametrize('text,offset', [
    ('hcfree(', 7),
    ('1 + ', 4),
    ('w + 1', 0),
    ('foo(z)', 0),
    ('1 + 2)', 5),
    ('(1 + 2', 6),
    ('z $ 2', 2),
    ('hcfree(z z)', 9),
])
def test_syntax_errors(text, offset):
    with pytest.raises(ExpressionSyntaxError) as error:
        parse(text)
    assert error.value.offset == offset
    assert error.value.column == offset + 1
    assert error.value.lineno == 1


def test_syntax_error_line_and_column():
    with pytest.raises(ExpressionSyntaxError) as error:
        parse('1 +\n  * z')
    assert (error.value.lineno, error.value.column) == (2, 3)


@pytest.mark.parametrize('text,rendered', [
    ('1 - (2 - z)', '1 - (2 - z)'),
    ('(1 - z)^-1', '(1 - z)^(-1)'),
    ('(2*z)^2', '(2*z)^2'),
    ('-(1 + z)', '-(1 + z)'),
    ('1/(2*z)', '1/(2*z)'),
    ('((z))', 'z'),
    ('hcfree(7*y*z - 3*z^2)', 'hcfree(7*y*z - 3*z^2)'),
])
def test_unparse(text, rendered):
    assert unparse(parse(text)) == rendered
    assert tree(rendered) == tree(text)
