import itertools

from hypothesis import strategies as st

from pdfa import Alphabet, PartialDfa, accepts

ALPHA = {1: Alphabet("a"), 2: Alphabet("ab"), 3: Alphabet("abc")}


def words(alphabet: Alphabet, max_len: int):
    """All words over the alphabet up to the given length, shortlex order."""
    for n in range(max_len + 1):
        for tup in itertools.product(alphabet.symbols, repeat=n):
            yield "".join(tup)


def language(dfa: PartialDfa, max_len: int) -> frozenset:
    return frozenset(w for w in words(dfa.alphabet, max_len) if accepts(dfa, w))


@st.composite
def partial_dfas(draw, max_states: int = 4, alphabet_sizes=(1, 2, 3)):
    """Arbitrary well-formed partial DFAs (not necessarily connected)."""
    alphabet = ALPHA[draw(st.sampled_from(alphabet_sizes))]
    n = draw(st.integers(1, max_states))
    transitions = {}
    for q in range(n):
        for sym in alphabet:
            target = draw(st.integers(-1, n - 1))
            if target >= 0:
                transitions[(q, sym)] = target
    accepting = draw(st.frozensets(st.integers(0, n - 1)))
    start = draw(st.integers(0, n - 1))
    return PartialDfa(alphabet, n, start, accepting, transitions)


@st.composite
def dfa_pairs(draw, max_states: int = 3, alphabet_sizes=(1, 2)):
    """Pairs sharing one alphabet, for the product constructions."""
    alphabet = ALPHA[draw(st.sampled_from(alphabet_sizes))]

    def one():
        n = draw(st.integers(1, max_states))
        transitions = {}
        for q in range(n):
            for sym in alphabet:
                target = draw(st.integers(-1, n - 1))
                if target >= 0:
                    transitions[(q, sym)] = target
        accepting = draw(st.frozensets(st.integers(0, n - 1)))
        return PartialDfa(alphabet, n, draw(st.integers(0, n - 1)), accepting, transitions)

    return one(), one()
