"""Verification case definitions

Every case reproduces one closed formula or structural identity exactly, either
against a second computation (property suites) or against a homology table
computed from an explicit presentation.

All cases take one parameter:
rng (random.Random) A generator seeded by the harness; deterministic cases
    ignore it

All cases should be wrapped with @Case to declare whether they are randomized

All cases should return: (list of Check) one entry per comparison made

Cases defined here are registered in Verifier.available_cases
"""
import logging

from necklace.component.calculus import (
    HC_DUAL,
    exterior_hh,
    freeset_hc,
    hh_from_hc,
    hkr,
    koszul_dual,
    predict,
    quotient_series_strongly_free,
    strong_quotient_hc_difference,
)
from necklace.component.oracle import HC, HH, bookkeeping_report, homology_table, koszul_check
from necklace.component.rewriting import (
    Alphabet,
    MonomialSet,
    complete,
    hc0_direct,
    is_strongly_free_monomials,
    strongly_free_series_check,
)
from necklace.component.rewriting import witnesses
from necklace.component.series import SignedSeries, TriSeries, invert, tri_from_signed
from necklace.component.transforms import (
    free_lie_series,
    free_product_hc,
    hcfree,
    hcfree_rule9_rhs,
    lie_log,
    necklace_counts,
    serre_free_lie,
    sym_exp,
)
from necklace.expressions import evaluate_text, parse, strip_spans, unparse

from .checks import compare_series, compare_table, compare_values


class Case(object):
    """decorator for verification cases: result will be a callable case with a
    `randomized` attribute telling whether the case draws from the random
    generator it is given
    """

    def __init__(self, randomized):
        if randomized not in (True, False):
            raise ValueError("randomized must be True or False")
        self.randomized = randomized

    def __call__(self, function):

        class DecoratedCase(object):
            def __init__(self, randomized, function):
                self.randomized = randomized
                self.function = function
                self.__name__ = function.__name__
                self.__doc__ = function.__doc__

            def __call__(self, rng):
                return self.function(rng)

        return DecoratedCase(self.randomized, function)


def _z(trunc, coefficient=1, weight=1):
    return SignedSeries.monomial(weight, 0, coefficient, trunc)


def _yz(trunc, coefficient=1, weight=1):
    return SignedSeries.monomial(weight, 1, coefficient, trunc)


def _table(presentation, max_hdeg=None):
    trunc = presentation.trunc
    rs = complete(presentation)
    logging.info('Computing homology of %s to weight %s', presentation.name, trunc)
    return homology_table(rs, trunc, trunc if max_hdeg is None else max_hdeg,
                          presentation_hash=presentation.hash)


def random_series(rng, trunc, constant=0, low=-2, high=2):
    """Integral series with the given constant term and random coefficients
    in [low, high] elsewhere
    """
    even = [constant] + [rng.randint(low, high) for _ in range(trunc)]
    odd = [0] + [rng.randint(low, high) for _ in range(trunc)]
    return SignedSeries(trunc, even, odd)


def random_alphabet(rng, max_generators=3, max_weight=2):
    size = rng.randint(1, max_generators)
    return [('g{}'.format(i), rng.randint(1, max_weight), rng.randint(0, 1))
            for i in range(1, size + 1)]


def random_monomials(rng, letters, max_words=3, max_length=4):
    return MonomialSet(
        tuple(rng.randrange(letters) for _ in range(rng.randint(2, max_length)))
        for _ in range(rng.randint(1, max_words))
    )


@Case(randomized=False)
def hkr_n2(_):
    """HH of k[x_1, x_2] is (1 + yxz)^2 / (1 - z)^2"""
    table = _table(witnesses.polynomial_ring(2, trunc=5))
    return [compare_table('HH of k[x1, x2]', table, hkr(2, 5), HH)]


@Case(randomized=False)
def symmetric_form_abc(_):
    """k<a, b, c>/([a, b] + c^2), odd generators, to weight 6 in every degree:
    HC_1 = yz^2, HC_0 = z^2 + hcfree(3yz - z^2), nothing above
    """
    trunc = 6
    presentation = witnesses.symmetric_witness(trunc=trunc)
    table = _table(presentation, max_hdeg=trunc)
    expected_hc0 = _z(trunc, weight=2) + hcfree(_yz(trunc, 3) - _z(trunc, weight=2))
    hc1 = {slot: dim for slot, dim in table.hc.items() if slot[0] == 1}
    higher = {slot: dim for slot, dim in table.hc.items() if slot[0] >= 2}
    return [
        compare_values('HC_1 slots', hc1, {(1, 2, 1): 1}),
        compare_values('HC_n slots for n >= 2', higher, {}),
        compare_table('HC against generic_symmetric(3)', table,
                      predict('generic_symmetric', [3], trunc), HC),
        compare_series('HC_0 from commutators', hc0_direct(complete(presentation), trunc),
                       expected_hc0),
    ]


@Case(randomized=False)
def final_example(_):
    """hcfree(7yz - 3z^2) and polynomial_generic(7, 3, 1, 3) to weight 5"""
    trunc = 5
    free_part = evaluate_text('hcfree(7*y*z - 3*z^2)', trunc)
    expected_free = SignedSeries(trunc, [0, 0, 18, 0, 465, 0], [0, 7, 0, 98, 0, 2401])
    expected_preset = TriSeries(trunc, {
        (0, 1, 0): 7,
        (0, 2, 0): 3,
        (1, 2, 1): 21,
        (2, 3, 0): 98,
        (3, 4, 1): 465,
        (4, 5, 0): 2401,
    })
    return [
        compare_series('hcfree(7yz - 3z^2)', free_part, expected_free),
        compare_series('polynomial_generic(7, 3, 1, 3)',
                       predict('polynomial_generic', [7, 3, 1, 3], trunc), expected_preset),
    ]


@Case(randomized=False)
def hcfree_geometric(_):
    """hcfree(z) = z/(1 - z) and hcfree(yz) = yz/(1 - z^2) to weight 20"""
    trunc = 20
    return [
        compare_series('hcfree(z)', hcfree(_z(trunc)),
                       _z(trunc) * invert(1 - _z(trunc))),
        compare_series('hcfree(yz)', hcfree(_yz(trunc)),
                       _yz(trunc) * invert(1 - _z(trunc, weight=2))),
    ]


@Case(randomized=True)
def hc0_free_algebras(rng):
    """HC_0 of T(V) from commutators equals hcfree(V) on random alphabets"""
    trunc = 8
    checks = []
    for _ in range(25):
        generators = random_alphabet(rng)
        presentation = witnesses.free_algebra(generators, trunc=trunc)
        checks.append(compare_series(
            'HC_0 of T({})'.format(presentation.alphabet),
            hc0_direct(complete(presentation), trunc),
            hcfree(presentation.alphabet.series(trunc)),
        ))
    return checks


@Case(randomized=True)
def symmetric_lie_inverse(rng):
    """S(Lie(X)) = X and Lie(S(P)) = P on random integral series"""
    trunc = 12
    checks = []
    for index in range(50):
        unit = random_series(rng, trunc, constant=1)
        checks.append(compare_series('S(Lie(X)) #{}'.format(index),
                                     sym_exp(lie_log(unit)), unit))
        primitive = random_series(rng, trunc)
        checks.append(compare_series('Lie(S(P)) #{}'.format(index),
                                     lie_log(sym_exp(primitive)), primitive))
    return checks


@Case(randomized=True)
def hcfree_rule9(rng):
    """hcfree(V1 + V2) = hcfree(V1) + hcfree(V2) + hcfree(V1 V2 / ((1 - V1)(1 - V2)))"""
    trunc = 12
    checks = []
    for index in range(50):
        first, second = random_series(rng, trunc), random_series(rng, trunc)
        checks.append(compare_series('rule 9 #{}'.format(index),
                                     hcfree(first + second), hcfree_rule9_rhs(first, second)))
    return checks


@Case(randomized=True)
def hcfree_logarithm_law(rng):
    """1 - V = (1 - V1)(1 - V2) implies hcfree(V) = hcfree(V1) + hcfree(V2)"""
    trunc = 12
    checks = []
    for index in range(50):
        first, second = random_series(rng, trunc), random_series(rng, trunc)
        product = first + second - first * second
        checks.append(compare_series('logarithm law #{}'.format(index),
                                     hcfree(product), hcfree(first) + hcfree(second)))
    return checks


@Case(randomized=True)
def strongly_free_monomials(rng):
    """A monomial set is strongly free exactly when its quotient has series
    1 / (1 - V + omega), over alphabets of mixed weight and parity
    """
    trunc = 16
    checks = []
    for _ in range(200):
        alphabet = Alphabet(random_alphabet(rng))
        omega = random_monomials(rng, len(alphabet))
        report = strongly_free_series_check(alphabet, omega, trunc)
        checks.append(compare_values(
            'strongly free {} over {}'.format(
                [alphabet.render(word) for word in omega], alphabet),
            is_strongly_free_monomials(omega), report.equal,
        ))
    return checks


@Case(randomized=False)
def freeset(_):
    """k<x_1, x_2>/(x_1 x_2): HC_n = 0 for 1 <= n <= 4, HC_0 = hcfree(2z - z^2)"""
    trunc = 6
    table = _table(witnesses.monomial_quotient(['x1', 'x2'], 0, [['x1', 'x2']], trunc=trunc),
                   max_hdeg=4)
    expected = freeset_hc(_z(trunc, 2), _z(trunc, weight=2), SignedSeries.zero(trunc))
    return [compare_table('HC of k<x1, x2>/(x1 x2)', table, expected, HC)]


@Case(randomized=False)
def free_algebra_oracle(_):
    """T(V) on two even generators: HC_0 = hcfree(2z), HC_n = 0 for n >= 1,
    HH = 1 + HC + xy HC
    """
    trunc = 6
    table = _table(witnesses.free_algebra([('x1', 1, 0), ('x2', 1, 0)], trunc=trunc),
                   max_hdeg=4)
    hc = tri_from_signed(hcfree(_z(trunc, 2)))
    return [
        compare_table('HC of T(2z)', table, hc, HC),
        compare_table('HH of T(2z)', table, hh_from_hc(hc), HH),
    ]


def _exceptional(family, builder, parity, sizes):
    trunc = 5
    checks = []
    for n in sizes:
        table = _table(builder(n, parity, trunc=trunc))
        checks.append(compare_table(
            '{}(n={})'.format(family, n), table,
            predict('exceptional_{}'.format(family), [n], trunc), HC,
        ))
    return checks


@Case(randomized=False)
def exceptional_a0(_):
    """k<T_1..T_n>/(T_1^2) with even generators, n = 2, 3"""
    return _exceptional('A0', witnesses.dual_numbers, 0, (2, 3))


@Case(randomized=False)
def exceptional_a1(_):
    """k<T_1..T_n>/(T_1^2) with odd generators, n = 2, 3"""
    return _exceptional('A1', witnesses.dual_numbers, 1, (2, 3))


@Case(randomized=False)
def exceptional_b0(_):
    """k<T_1..T_n>/([T_1, T_2]) with even generators, n = 2"""
    return _exceptional('B0', witnesses.commutator_quotient, 0, (2,))


@Case(randomized=False)
def exceptional_b1(_):
    """k<T_1..T_n>/([T_1, T_2]) with odd generators, n = 2"""
    return _exceptional('B1', witnesses.commutator_quotient, 1, (2,))


@Case(randomized=False)
def koszul(_):
    """k[x_1, x_2] against the exterior algebra on two odd generators"""
    trunc = 5
    polynomial = complete(witnesses.polynomial_ring(2, trunc=trunc))
    exterior = witnesses.exterior_algebra(2, trunc=trunc)
    report = koszul_check(polynomial, complete(exterior), trunc)
    return [
        compare_table('HH of the exterior algebra', _table(exterior), exterior_hh(2, trunc), HH),
        compare_values('HH remap', report.hh.first_discrepancy, None),
        compare_values('HC remap', report.hc.first_discrepancy, None),
    ]


@Case(randomized=False)
def complex_identities(_):
    """Chain-map identities and HH/HC bookkeeping on small witnesses"""
    presentations = [
        witnesses.dual_numbers(2, 1, trunc=4),
        witnesses.commutator_quotient(2, 1, trunc=4),
        witnesses.exterior_algebra(2, trunc=4),
        witnesses.symmetric_witness(trunc=4),
    ]
    checks = []
    for presentation in presentations:
        report = bookkeeping_report(_table(presentation))
        checks.append(compare_values('bookkeeping for {}'.format(presentation.name),
                                     report.first_discrepancy, None))
    return checks


@Case(randomized=False)
def serre(_):
    """Serre's formula for free Lie algebras equals Lie(1 / (1 - dz))"""
    trunc = 12
    return [
        compare_series('free Lie algebra on {} generators'.format(d),
                       free_lie_series(_z(trunc, d)), serre_free_lie(d, trunc))
        for d in range(1, 5)
    ]


@Case(randomized=False)
def necklaces(_):
    """Necklace counts equal hcfree(dz)"""
    trunc = 12
    return [
        compare_series('necklaces on {} colours'.format(d),
                       hcfree(_z(trunc, d)), necklace_counts(d, trunc))
        for d in range(1, 5)
    ]


@Case(randomized=True)
def free_product(rng):
    """T(V1) * T(V2) = T(V1 + V2): the free product rule reproduces hcfree(V1 + V2)"""
    trunc = 10
    checks = []
    for index in range(20):
        first = random_series(rng, trunc, low=0)
        second = random_series(rng, trunc, low=0)
        combined = free_product_hc(
            tri_from_signed(hcfree(first)), tri_from_signed(hcfree(second)),
            invert(1 - first), invert(1 - second),
        )
        checks.append(compare_series('free product #{}'.format(index),
                                     combined, tri_from_signed(hcfree(first + second))))
    return checks


@Case(randomized=False)
def symmetric_preset_consistency(_):
    """generic_symmetric(n) agrees with the exact sequence for dividing T(V)
    by one strongly free element
    """
    trunc = 10
    checks = []
    for n in range(3, 6):
        preset = predict('generic_symmetric', [n], trunc)
        v = _yz(trunc, n)
        expected = strong_quotient_hc_difference(
            hcfree(v), SignedSeries.zero(trunc), invert(1 - v), _z(trunc, weight=2))
        checks.append(compare_series('generic_symmetric({})'.format(n),
                                     preset.slice(0) - preset.slice(1).times_y(), expected))
    return checks


@Case(randomized=False)
def polynomial_generic_dual(_):
    """polynomial_generic is the cyclic Koszul dual of generic_symmetric_many"""
    trunc = 8
    checks = []
    for parameters in ([7, 3, 1, 3], [5, 2, 1, 2], [8, 1, 2, 2], [8, 4, 2, 2]):
        dual = koszul_dual(predict('generic_symmetric_many', parameters, trunc), HC_DUAL)
        checks.append(compare_series('parameters {}'.format(parameters),
                                     predict('polynomial_generic', parameters, trunc), dual))
    return checks


@Case(randomized=True)
def quotient_identity(rng):
    """B = A / (1 + omega A) satisfies 1 / (1 - omega B) = 1 + omega A"""
    trunc = 10
    checks = []
    for index in range(50):
        a = random_series(rng, trunc, constant=1, low=0)
        omega = SignedSeries.monomial(rng.randint(1, 3), rng.randint(0, 1),
                                      rng.randint(1, 3), trunc)
        b = quotient_series_strongly_free(a, omega)
        checks.append(compare_series('quotient identity #{}'.format(index),
                                     invert(1 - omega * b), 1 + omega * a))
    return checks


ROUND_TRIP_FORMULAS = [
    'hcfree(7*y*z - 3*z^2)',
    '1/(1 - 2*z + z^2)',
    '-z^2^3 + (1 + y)*z',
    '(1 + y*x*z)^2/(1 - z)^2',
    '2 - (3 - z) - -z',
    'S(lie(1 + z + y*z^2))',
    'hh_from_hc(polynomial_generic(7, 3, 1, 3))',
    'subst_2(hcfree(z)) * inv(1 - y*z)',
    'z**3 - z/2/3',
]


@Case(randomized=False)
def parse_round_trip(_):
    """Unparsing and parsing again gives the same tree; evaluation commutes
    with truncation
    """
    checks = []
    for text in ROUND_TRIP_FORMULAS:
        tree = parse(text)
        rendered = unparse(tree)
        checks.append(compare_values('round trip {!r}'.format(text),
                                     strip_spans(parse(rendered)), strip_spans(tree)))
        checks.append(compare_values('fixed point {!r}'.format(text),
                                     unparse(parse(rendered)), rendered))
        checks.append(compare_series('truncation {!r}'.format(text),
                                     evaluate_text(text, 12).truncate(8), evaluate_text(text, 8)))
    return checks
