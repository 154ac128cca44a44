"""Explicit presentations of the algebra families with closed-form series

All generators have weight one unless stated otherwise. ``parity`` selects
even (0) or odd (1) generators.
"""
from .presentation import Presentation, relation
from .words import Alphabet


def _alphabet(names, parity):
    return Alphabet([(name, 1, parity) for name in names])


def _names(prefix, n):
    return ['{}{}'.format(prefix, i) for i in range(1, n + 1)]


def graded_commutator(alphabet, u, v):
    """uv - (-1)^{|u||v|} vu for generator names u and v"""
    sign = -1 if alphabet[alphabet.index(u)].parity and alphabet[alphabet.index(v)].parity else 1
    return relation(alphabet, (1, [u, v]), (-sign, [v, u]))


def free_algebra(generators, trunc=6, name=None):
    """T(V) on (name, weight, parity) generators"""
    alphabet = Alphabet(generators)
    return Presentation(alphabet, [], trunc=trunc, name=name or 'free algebra')


def dual_numbers(n, parity=0, trunc=6):
    """k<T_1..T_n>/(T_1^2)"""
    alphabet = _alphabet(_names('T', n), parity)
    return Presentation(alphabet, [relation(alphabet, (1, ['T1', 'T1']))], trunc=trunc,
                        name='A{}(n={})'.format(parity, n))


def commutator_quotient(n, parity=0, trunc=6):
    """k<T_1..T_n>/([T_1, T_2])"""
    alphabet = _alphabet(_names('T', n), parity)
    return Presentation(alphabet, [graded_commutator(alphabet, 'T1', 'T2')], trunc=trunc,
                        name='B{}(n={})'.format(parity, n))


def polynomial_ring(n, trunc=6):
    """k[x_1..x_n]; order x_n > ... > x_1 so normal words are sorted monomials"""
    names = _names('x', n)
    alphabet = _alphabet(names, 0)
    relations = [graded_commutator(alphabet, names[j], names[i])
                 for i in range(n) for j in range(i + 1, n)]
    return Presentation(alphabet, relations, order=list(reversed(names)), trunc=trunc,
                        name='polynomial ring({})'.format(n))


def exterior_algebra(n, trunc=6):
    """Exterior algebra on n odd generators a_1..a_n"""
    names = _names('a', n)
    alphabet = _alphabet(names, 1)
    relations = [relation(alphabet, (1, [name, name])) for name in names]
    relations += [graded_commutator(alphabet, names[i], names[j])
                  for i in range(n) for j in range(i + 1, n)]
    return Presentation(alphabet, relations, trunc=trunc,
                        name='exterior algebra({})'.format(n))


def monomial_quotient(names, parity, words, trunc=6):
    """k<names>/(words), each word a sequence of generator names"""
    alphabet = _alphabet(names, parity)
    return Presentation(alphabet, [relation(alphabet, (1, list(word))) for word in words],
                        trunc=trunc, name='monomial quotient')


def symmetric_witness(trunc=6):
    """k<a, b, c>/([a, b] + c^2), a, b, c odd"""
    alphabet = _alphabet(['a', 'b', 'c'], 1)
    return Presentation(
        alphabet,
        [relation(alphabet, (1, ['a', 'b']), (1, ['b', 'a']), (1, ['c', 'c']))],
        order=['a', 'b', 'c'], trunc=trunc, name='symmetric witness',
    )


def symmetric_many_witness(j, k, trunc=6):
    """Odd generators a_1..a_j, b_1..b_k and c_ml with the j*k relations
    [a_m, b_l] + c_ml^2
    """
    a_names = _names('a', j)
    b_names = _names('b', k)
    c_names = ['c{}_{}'.format(m, l) for m in range(1, j + 1) for l in range(1, k + 1)]
    alphabet = _alphabet(a_names + b_names + c_names, 1)
    relations = []
    for m, a in enumerate(a_names, 1):
        for l, b in enumerate(b_names, 1):
            c = 'c{}_{}'.format(m, l)
            relations.append(relation(alphabet, (1, [a, b]), (1, [b, a]), (1, [c, c])))
    return Presentation(alphabet, relations, trunc=trunc,
                        name='symmetric witness({}, {})'.format(j, k))
