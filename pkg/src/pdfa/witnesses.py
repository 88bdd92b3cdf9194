"""Witness language families used by the tightness checks.

Every constructor returns an already-minimal partial DFA (the tests
confirm this via the minimizer rather than trusting it).  Generators
take the alphabet explicitly -- or derive the smallest one -- because
some complexity measurements only make sense over a larger alphabet
than the witness actually uses; an unused symbol simply has no
transitions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .core import Alphabet, PartialDfa


class WitnessFamily(Enum):
    UNION_SYMBOL = "union-symbol"
    UNION_MULTI = "union-multi"
    UNION_TOTAL = "union-total"
    UNARY_CYCLE = "unary-cycle"
    UNARY_SINGLETON = "unary-singleton"
    CHAIN_STAR = "chain-star"
    EPSILON = "epsilon"


@dataclass(frozen=True)
class WitnessSpec:
    """A family plus its parameters; ``build_witness`` turns it into a DFA."""

    family: WitnessFamily
    params: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "params", dict(self.params))


def _default_alphabet(*symbols: str) -> Alphabet:
    return Alphabet(tuple(sorted(set(symbols))))


def union_symbol_witness(
    n: int, k: int, b: str = "b", c: str = "c", alphabet: Alphabet | None = None
) -> PartialDfa:
    """Cycle of n states on ``c`` with ``b``-self-loops on states 0..k-1.

    Recognizes ((b*c)^k c^(n-k))* b*; state 0 is start and the only
    accepting state.  Requires 1 <= k < n (with k = n the b-loops cover
    the whole cycle and the per-symbol tightness argument collapses).
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if b == c:
        raise ValueError("loop and cycle symbols must differ")
    alphabet = alphabet or _default_alphabet(b, c)
    if b not in alphabet or c not in alphabet:
        raise ValueError(f"symbols {b!r}, {c!r} must be in the alphabet")
    transitions: dict[tuple[int, str], int] = {(i, c): (i + 1) % n for i in range(n)}
    for i in range(k):
        transitions[(i, b)] = i
    return PartialDfa(alphabet, n, 0, frozenset({0}), transitions)


def union_multi_witness(
    n: int, k_map: Mapping[str, int], c: str = "c", alphabet: Alphabet | None = None
) -> PartialDfa:
    """Multi-symbol variant: one c-cycle, self-loop prefixes per symbol.

    For each symbol d in ``k_map``, states 0..k_map[d]-1 get d-self-loops,
    so the d-transition count is exactly k_map[d].  An empty map gives
    the bare (c^n)* cycle.
    """
    if n < 1:
        raise ValueError(f"cycle length must be at least 1, got {n}")
    for d, k in k_map.items():
        if d == c:
            raise ValueError(f"self-loop symbol {d!r} clashes with the cycle symbol")
        if not 1 <= k < n:
            raise ValueError(f"symbol {d!r}: need 1 <= k < n, got k={k}, n={n}")
    alphabet = alphabet or _default_alphabet(c, *k_map)
    for d in (c, *k_map):
        if d not in alphabet:
            raise ValueError(f"symbol {d!r} must be in the alphabet")
    transitions: dict[tuple[int, str], int] = {(i, c): (i + 1) % n for i in range(n)}
    for d, k in k_map.items():
        for i in range(k):
            transitions[(i, d)] = i
    return PartialDfa(alphabet, n, 0, frozenset({0}), transitions)


def union_total_witness(
    n: int, loop_sym: str = "a", cycle_sym: str = "c", alphabet: Alphabet | None = None
) -> PartialDfa:
    """Recognizer of (loop_sym | cycle_sym^n)*: one cycle plus one loop.

    Words are arbitrary mixes of loop letters and complete n-blocks of
    the cycle letter.  The self-loop sits on state 0 only, so the DFA
    has exactly n+1 transitions -- the family with minimal total
    transition count used for the union lower bound.
    """
    if n < 2:
        raise ValueError(f"cycle length must be at least 2, got {n}")
    if loop_sym == cycle_sym:
        raise ValueError("loop and cycle symbols must differ")
    alphabet = alphabet or _default_alphabet(loop_sym, cycle_sym)
    if loop_sym not in alphabet or cycle_sym not in alphabet:
        raise ValueError(f"symbols {loop_sym!r}, {cycle_sym!r} must be in the alphabet")
    transitions: dict[tuple[int, str], int] = {(i, cycle_sym): (i + 1) % n for i in range(n)}
    transitions[(0, loop_sym)] = 0
    return PartialDfa(alphabet, n, 0, frozenset({0}), transitions)


def unary_cycle(n: int) -> PartialDfa:
    """The minimal DFA of (b^n)*: an n-cycle over the one-letter alphabet."""
    if n < 1:
        raise ValueError(f"cycle length must be at least 1, got {n}")
    alphabet = Alphabet(("b",))
    transitions = {(i, "b"): (i + 1) % n for i in range(n)}
    return PartialDfa(alphabet, n, 0, frozenset({0}), transitions)


def unary_singleton(n: int, alphabet: Alphabet | None = None) -> PartialDfa:
    """The singleton language {b^n}: a chain of n+1 states, last accepting."""
    if n < 1:
        raise ValueError(f"word length must be at least 1, got {n}")
    alphabet = alphabet or Alphabet(("b",))
    if "b" not in alphabet:
        raise ValueError("alphabet must contain 'b'")
    transitions = {(i, "b"): i + 1 for i in range(n)}
    return PartialDfa(alphabet, n + 1, 0, frozenset({n}), transitions)


def chain_star_witness(m: int, alphabet: Alphabet | None = None) -> PartialDfa:
    """Recognizer of a* b^(m-1): an a-loop on the start, then a b-chain.

    Has m transitions in total (1 loop + m-1 chain edges); m = 1
    degenerates to plain a*.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    alphabet = alphabet or Alphabet(("a", "b"))
    if "a" not in alphabet or "b" not in alphabet:
        raise ValueError("alphabet must contain 'a' and 'b'")
    transitions: dict[tuple[int, str], int] = {(0, "a"): 0}
    for i in range(m - 1):
        transitions[(i, "b")] = i + 1
    return PartialDfa(alphabet, m, 0, frozenset({m - 1}), transitions)


def epsilon_lang(alphabet: Alphabet | None = None) -> PartialDfa:
    """Recognizer of {empty word}: one accepting state, no transitions."""
    alphabet = alphabet or Alphabet(("a", "b"))
    return PartialDfa(alphabet, 1, 0, frozenset({0}), {})


def build_witness(spec: WitnessSpec) -> PartialDfa:
    """Dispatch a WitnessSpec to its family constructor.

    Unknown or missing parameters surface as TypeError/ValueError from
    the constructors, which the CLI maps to input errors.
    """
    builders = {
        WitnessFamily.UNION_SYMBOL: union_symbol_witness,
        WitnessFamily.UNION_MULTI: union_multi_witness,
        WitnessFamily.UNION_TOTAL: union_total_witness,
        WitnessFamily.UNARY_CYCLE: unary_cycle,
        WitnessFamily.UNARY_SINGLETON: unary_singleton,
        WitnessFamily.CHAIN_STAR: chain_star_witness,
        WitnessFamily.EPSILON: epsilon_lang,
    }
    return builders[spec.family](**spec.params)
