"""Tensor powers of the augmentation ideal and the maps b, b' and t

A tensor is a tuple of normal words (each a tuple of letters). Blocks are
keyed by (length, weight, parity) where parity is the sum of the word
parities; b, b' and t all preserve weight and parity.

Sign conventions, with |a| the parity of a word:

    b'(a_0 ... a_{L-1}) = sum_{i < L-1} (-1)^i a_0 ... (a_i a_{i+1}) ... a_{L-1}
    b = b' + (-1)^{L-1} (-1)^{|a_{L-1}| (|a_0| + ... + |a_{L-2}|)} (a_{L-1} a_0) a_1 ... a_{L-2}
    t(a_0 ... a_{L-1}) = (-1)^{L-1} (-1)^{|a_{L-1}| (|a_0| + ... + |a_{L-2}|)} a_{L-1} a_0 ... a_{L-2}
"""
import logging
from fractions import Fraction

from descriptors import cachedproperty

from necklace.component.rewriting import normal_form
from necklace.exceptions import ChainComplexError


class GradedBasis(object):
    """Bases of (I^{tensor L})_{q, parity} for weights up to ``trunc`` and
    lengths up to ``max_length``
    """

    def __init__(self, rs, trunc, max_length):
        self.rs = rs
        self.trunc = trunc
        self.max_length = max_length
        alphabet = rs.alphabet
        self.words = {}
        for q in range(1, trunc + 1):
            for parity in (0, 1):
                self.words[(q, parity)] = rs.normal_words(q, parity)
        self.word_parity = {
            word: parity for (_, parity), words in self.words.items() for word in words
        }
        self.word_weight = {word: alphabet.weight(word) for word in self.word_parity}
        self._blocks = {}
        self._indices = {}

    def block(self, length, weight, parity):
        key = (length, weight, parity)
        if key not in self._blocks:
            self._blocks[key] = self._build(length, weight, parity)
        return self._blocks[key]

    def index(self, length, weight, parity):
        key = (length, weight, parity)
        if key not in self._indices:
            self._indices[key] = {
                tensor: i for i, tensor in enumerate(self.block(length, weight, parity))
            }
        return self._indices[key]

    def _build(self, length, weight, parity):
        if length < 1 or length > self.max_length or weight < length or weight > self.trunc:
            return []
        if length == 1:
            return [(word,) for word in self.words.get((weight, parity), [])]
        tensors = []
        for first_weight in range(1, weight - length + 2):
            for first_parity in (0, 1):
                rest = self.block(length - 1, weight - first_weight, (parity - first_parity) % 2)
                if not rest:
                    continue
                for word in self.words.get((first_weight, first_parity), []):
                    tensors.extend((word,) + tail for tail in rest)
        return tensors

    def dimension(self, length, weight, parity):
        return len(self.block(length, weight, parity))


def build_blocks(rs, trunc, max_hdeg):
    """Graded basis with the tensor lengths needed for degrees up to max_hdeg"""
    return GradedBasis(rs, trunc, min(trunc, max_hdeg + 2))


def _add(target, key, value):
    new_value = target.get(key, 0) + value
    if new_value:
        target[key] = new_value
    else:
        target.pop(key, None)


class ChainMaps(object):
    """The maps of the cyclic double complex on a graded basis, applied to
    sparse vectors {tensor: coefficient}
    """

    def __init__(self, rs, basis):
        self.rs = rs
        self.basis = basis
        self._products = {}

    @cachedproperty
    def parity(self):
        return self.basis.word_parity

    def multiply(self, u, v):
        key = (u, v)
        if key not in self._products:
            self._products[key] = normal_form(self.rs, u + v)
        return self._products[key]

    def _face(self, tensor, i):
        """a_0 ... (a_i a_{i+1}) ... as a sparse vector"""
        head, tail = tensor[:i], tensor[i + 2:]
        return {head + (word,) + tail: value
                for word, value in self.multiply(tensor[i], tensor[i + 1]).items()}

    def _rotation_sign(self, tensor):
        last = self.parity[tensor[-1]]
        rest = sum(self.parity[word] for word in tensor[:-1])
        return -1 if last * rest % 2 else 1

    def b_prime(self, tensor):
        result = {}
        for i in range(len(tensor) - 1):
            sign = -1 if i % 2 else 1
            for target, value in self._face(tensor, i).items():
                _add(result, target, sign * value)
        return result

    def b(self, tensor):
        result = self.b_prime(tensor)
        length = len(tensor)
        if length < 2:
            return result
        sign = self._rotation_sign(tensor) * (-1 if (length - 1) % 2 else 1)
        rest = tensor[1:-1]
        for word, value in self.multiply(tensor[-1], tensor[0]).items():
            _add(result, (word,) + rest, sign * value)
        return result

    def t(self, tensor):
        """(sign, rotated tensor)"""
        sign = self._rotation_sign(tensor) * (-1 if (len(tensor) - 1) % 2 else 1)
        return sign, (tensor[-1],) + tensor[:-1]

    def one_minus_t(self, tensor):
        sign, rotated = self.t(tensor)
        result = {tensor: Fraction(1)}
        _add(result, rotated, -sign)
        return result

    def apply(self, operator, vector):
        result = {}
        for tensor, coefficient in vector.items():
            for target, value in operator(tensor).items():
                _add(result, target, coefficient * value)
        return result

    def rows(self, operator, length, weight, parity):
        """Matrix of ``operator`` on one block, as sparse rows over the
        basis of the target block of length ``length - 1``
        """
        columns = self.basis.index(length - 1, weight, parity)
        return [
            {columns[target]: value for target, value in operator(tensor).items()}
            for tensor in self.basis.block(length, weight, parity)
        ]

    def check_block(self, length, weight, parity):
        """Assert the identities of the double complex on every basis tensor"""
        block = (length, weight, parity)
        for tensor in self.basis.block(length, weight, parity):
            if self.apply(self.b, self.b(tensor)):
                raise ChainComplexError('b∘b != 0 on {}'.format(tensor), block=block,
                                        identity='b∘b = 0')
            if self.apply(self.b_prime, self.b_prime(tensor)):
                raise ChainComplexError("b'∘b' != 0 on {}".format(tensor), block=block,
                                        identity="b'∘b' = 0")
            left = self.apply(self.b, self.one_minus_t(tensor))
            right = self.apply(self.one_minus_t, self.b_prime(tensor))
            if left != right:
                raise ChainComplexError("b(1-t) != (1-t)b' on {}".format(tensor), block=block,
                                        identity="b(1-t) = (1-t)b'")
            sign, rotated = 1, tensor
            for _ in range(length):
                step, rotated = self.t(rotated)
                sign *= step
            if sign != 1 or rotated != tensor:
                raise ChainComplexError('t^{} != id on {}'.format(length, tensor), block=block,
                                        identity='t^L = id')
        logging.debug('Chain identities hold on block %s', block)


def assemble_maps(rs, basis, check=True):
    """Chain maps on ``basis``, with the identities asserted on every block
    whose lengths the basis covers
    """
    maps = ChainMaps(rs, basis)
    if check:
        for q in range(1, basis.trunc + 1):
            for parity in (0, 1):
                for length in range(1, min(q, basis.max_length) + 1):
                    maps.check_block(length, q, parity)
    return maps
