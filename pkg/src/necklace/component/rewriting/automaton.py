"""Factor automaton over a set of forbidden words

A trie of the forbidden words completed with longest-strict-suffix (failure)
links into a deterministic automaton. A state is dead when the text read so
far ends with a forbidden word; words that never reach a dead state are
exactly the words avoiding every forbidden factor.
"""
from collections import deque

from necklace.component.series import CoefPair, SignedSeries


class State(object):
    __slots__ = ['identifier', 'transitions', 'parent', 'letter', 'depth',
                 'matched_word', 'longest_strict_suffix', 'dead']

    def __init__(self, identifier, letter=None, parent=None, depth=0):
        self.identifier = identifier
        self.letter = letter
        self.parent = parent
        self.depth = depth
        self.transitions = {}
        self.matched_word = None
        self.longest_strict_suffix = None
        self.dead = False

    def __repr__(self):
        return 'State {}. Transitions: {}'.format(
            self.identifier,
            ','.join('{} -> {}'.format(letter, state.identifier)
                     for letter, state in sorted(self.transitions.items())),
        )


class FactorAutomaton(object):

    def __init__(self, words, n_letters):
        self.n_letters = n_letters
        self.words = tuple(sorted(set(tuple(word) for word in words if word)))
        self._zero_state = State(0)
        self.states = [self._zero_state]
        for word in self.words:
            self._add(word)
        self._finalize()

    def _add(self, word):
        current = self._zero_state
        for letter in word:
            if letter not in current.transitions:
                state = State(len(self.states), letter=letter, parent=current,
                              depth=current.depth + 1)
                self.states.append(state)
                current.transitions[letter] = state
            current = current.transitions[letter]
        current.matched_word = word

    def _finalize(self):
        """Breadth-first failure links, then full transition tables"""
        root = self._zero_state
        root.longest_strict_suffix = root
        queue = deque()
        for letter in range(self.n_letters):
            child = root.transitions.get(letter)
            if child is None:
                root.transitions[letter] = root
            else:
                child.longest_strict_suffix = root
                child.dead = child.matched_word is not None
                queue.append(child)
        while queue:
            state = queue.popleft()
            suffix = state.longest_strict_suffix
            for letter in range(self.n_letters):
                child = state.transitions.get(letter)
                if child is None:
                    state.transitions[letter] = suffix.transitions[letter]
                else:
                    child.longest_strict_suffix = suffix.transitions[letter]
                    child.dead = (child.matched_word is not None or
                                  child.longest_strict_suffix.dead)
                    queue.append(child)

    @property
    def start(self):
        return self._zero_state

    def step(self, state, letter):
        return state.transitions[letter]

    def find_factor(self, word):
        """(start index, forbidden word) of the leftmost-ending occurrence in
        ``word``, or None
        """
        state = self._zero_state
        for index, letter in enumerate(word):
            state = state.transitions[letter]
            if state.dead:
                match = state
                while match.matched_word is None:
                    match = match.longest_strict_suffix
                return index + 1 - len(match.matched_word), match.matched_word
        return None

    def avoids(self, word):
        return self.find_factor(word) is None

    def count(self, alphabet, trunc):
        """Series of the words avoiding every forbidden factor, counted by
        weight and parity through a walk over live states
        """
        letters = [(i, g.weight, g.parity) for i, g in enumerate(alphabet)]
        zero = CoefPair(0, 0)
        layers = [dict() for _ in range(trunc + 1)]
        layers[0][self._zero_state.identifier] = CoefPair(1, 0)
        for q in range(trunc + 1):
            for identifier, pair in layers[q].items():
                state = self.states[identifier]
                for letter, weight, parity in letters:
                    target_weight = q + weight
                    if target_weight > trunc:
                        continue
                    target = state.transitions[letter]
                    if target.dead:
                        continue
                    moved = CoefPair(pair.odd, pair.even) if parity else pair
                    layer = layers[target_weight]
                    layer[target.identifier] = layer.get(target.identifier, zero) + moved
        totals = [sum(layer.values(), zero) for layer in layers]
        return SignedSeries.from_pairs(totals, trunc)

    def enumerate(self, alphabet, trunc):
        """All avoiding words of weight 1..trunc, as {(weight, parity): [words]}
        with words in lexicographic order of letter indices
        """
        result = {}
        stack = [((), self._zero_state, 0, 0)]
        while stack:
            word, state, weight, parity = stack.pop()
            if word:
                result.setdefault((weight, parity), []).append(word)
            for letter in reversed(range(self.n_letters)):
                generator = alphabet[letter]
                if weight + generator.weight > trunc:
                    continue
                target = state.transitions[letter]
                if target.dead:
                    continue
                stack.append((word + (letter,), target, weight + generator.weight,
                              (parity + generator.parity) % 2))
        for words in result.values():
            words.sort()
        return result
