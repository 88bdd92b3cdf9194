"""Brute-force enumeration oracle for small partial DFAs.

Exhaustively lists every connected canonical partial DFA up to a size
cap and uses the list to certify, independently of the minimizer, that
minimization really achieves the minimum total and per-symbol
transition counts for every language at desk scale.

Canonical enumeration trick: a connected DFA is a fixed point of
breadth-first renumbering exactly when, scanning its transition table
row-major (state by state, symbols in alphabet order), states make
their first appearance in increasing order.  Generating only such
tables yields each isomorphism class exactly once -- no hashing, no
post-hoc dedup -- and the generation order is a total order, which is
what makes sharded runs recombine deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .core import Alphabet, PartialDfa, render_dfa, transition_counts
from .minimize import canonicalize, minimize, pair_equivalent

# Desk-scale caps by alphabet size, keeping any single call in the
# minutes range: unary tables grow like (n+1)*2^n, binary 4-state is
# already ~260k DFAs, ternary explodes fastest.
_ENUM_LIMITS = {1: 14, 2: 4, 3: 3}


def _check_limits(max_states: int, alphabet: Alphabet) -> None:
    if max_states < 1:
        raise ValueError(f"max_states must be at least 1, got {max_states}")
    if len(alphabet) > 3:
        raise ValueError(f"enumeration is capped at 3 symbols, got {len(alphabet)}")
    limit = _ENUM_LIMITS[len(alphabet)]
    if max_states > limit:
        raise ValueError(
            f"enumeration over {len(alphabet)} symbol(s) is capped at "
            f"{limit} states to stay at desk scale, got {max_states}"
        )


def _canonical_tables(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All length-n*k transition tables (-1 = undefined) that are
    canonical and use all n states, in lexicographic order."""
    table = [-1] * (n * k)

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == n * k:
            if used == n:
                yield tuple(table)
            return
        if i // k >= used:
            return  # this row's state was never discovered: unreachable
        options = [-1, *range(used)]
        if used < n:
            options.append(used)  # discover the next state here
        for v in options:
            table[i] = v
            yield from rec(i + 1, used + (1 if v == used else 0))
        table[i] = -1

    yield from rec(0, 1)


def _all_dfas(max_states: int, alphabet: Alphabet) -> Iterator[PartialDfa]:
    k = len(alphabet)
    syms = tuple(alphabet)
    for n in range(1, max_states + 1):
        for table in _canonical_tables(n, k):
            transitions = {
                (q, syms[j]): table[q * k + j]
                for q in range(n)
                for j in range(k)
                if table[q * k + j] >= 0
            }
            # accepting sets ordered by their bitmask value
            for mask in range(1 << n):
                accepting = frozenset(q for q in range(n) if mask >> q & 1)
                yield PartialDfa(alphabet, n, 0, accepting, transitions)


def enumerate_dfas(max_states: int, alphabet: Alphabet) -> Iterator[PartialDfa]:
    """Every connected canonical partial DFA with up to max_states states.

    Total, deterministic order: by state count, then transition table
    (undefined slots sorting first), then accepting bitmask.
    """
    _check_limits(max_states, alphabet)
    return _all_dfas(max_states, alphabet)


@dataclass(frozen=True)
class EnumerationCursor:
    """Resumable, shardable position in the canonical enumeration.

    ``shard = (index, count)`` selects every count-th DFA starting at
    offset index; ``position`` skips the global prefix.  Iteration
    order never depends on how the stream was sharded, so concurrent
    workers can split a cursor and their merged output (sorted by
    position) is identical to the unsharded stream.
    """

    max_states: int
    alphabet: Alphabet
    position: int = 0
    shard: tuple[int, int] = (0, 1)

    def __post_init__(self):
        _check_limits(self.max_states, self.alphabet)
        index, count = self.shard
        if count < 1 or not 0 <= index < count:
            raise ValueError(f"shard must satisfy 0 <= index < count, got {self.shard}")
        if self.position < 0:
            raise ValueError(f"position must be non-negative, got {self.position}")

    def __iter__(self) -> Iterator[PartialDfa]:
        for pos, dfa in self.items():
            yield dfa

    def items(self) -> Iterator[tuple[int, PartialDfa]]:
        """(global position, DFA) pairs belonging to this shard."""
        index, count = self.shard
        for pos, dfa in enumerate(_all_dfas(self.max_states, self.alphabet)):
            if pos >= self.position and pos % count == index:
                yield pos, dfa

    def split(self, count: int) -> tuple["EnumerationCursor", ...]:
        """Partition this cursor's stream into ``count`` interleaved shards."""
        if count < 1:
            raise ValueError(f"split count must be at least 1, got {count}")
        index, old = self.shard
        return tuple(
            EnumerationCursor(
                self.max_states, self.alphabet, self.position, (index + j * old, old * count)
            )
            for j in range(count)
        )


@dataclass(frozen=True)
class OracleResult:
    """Exhaustively certified minima for one language."""

    min_total: int
    min_per_symbol: Mapping[str, int]
    witness_dfa: PartialDfa


def brute_min_transitions(target: PartialDfa, max_states: int = 0) -> OracleResult:
    """Minimum total and per-symbol transition counts over all DFAs
    with at most ``max_states`` states recognizing L(target).

    ``max_states = 0`` picks sc(L)+1 automatically -- one more state
    than the minimal DFA, enough to certify that extra states buy
    nothing.  Passing a cap smaller than sc(L) is rejected: that search
    space provably contains no equivalent DFA at all.
    """
    m = minimize(target)
    if max_states == 0:
        max_states = m.state_count + 1
    if m.state_count > max_states:
        raise ValueError(
            f"max_states={max_states} is below the language's state complexity "
            f"{m.state_count}; no equivalent DFA fits"
        )
    min_total: int | None = None
    min_per: dict[str, int] = {}
    witness: PartialDfa | None = None
    for cand in enumerate_dfas(max_states, target.alphabet):
        if not pair_equivalent(cand, target):
            continue
        counts = transition_counts(cand)
        if min_total is None or counts.total < min_total:
            min_total = counts.total
            witness = cand
        for sym, c in counts.per_symbol.items():
            if sym not in min_per or c < min_per[sym]:
                min_per[sym] = c
    assert min_total is not None and witness is not None  # m itself is enumerated
    return OracleResult(min_total=min_total, min_per_symbol=min_per, witness_dfa=witness)


@dataclass(frozen=True)
class Lemma1Report:
    """Outcome of one verify_lemma1 sweep."""

    max_states: int
    alphabet: Alphabet
    dfas_checked: int
    languages: int
    counterexamples: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_lemma1(max_states: int, alphabet: Alphabet) -> Lemma1Report:
    """Certify the minimizer against brute force, language by language.

    Enumerates every connected canonical partial DFA with up to
    max_states+1 states, groups them by language, and checks for each
    language whose minimal DFA fits in max_states that minimize()
    simultaneously achieves the group's minimum state count, total
    transition count, and per-symbol transition counts, and that the
    minimal DFA's undefined-move count per symbol equals sc minus the
    certified per-symbol minimum.

    The grouping key is the canonical minimal DFA, but its correctness
    is not assumed: every enumerated DFA is first checked, by
    minimization-free pair exploration, to still recognize its
    minimize()'s language.  A minimizer bug therefore cannot silently
    corrupt the grouping -- it surfaces as a counterexample here.
    """
    cap = max_states + 1
    _check_limits(cap, alphabet)
    # key -> [minimal artifact, min states, min total, per-symbol minima]
    groups: dict[str, list] = {}
    checked = 0
    bad: list[str] = []
    for a in _all_dfas(cap, alphabet):
        checked += 1
        m = canonicalize(minimize(a))
        if not pair_equivalent(a, m):
            bad.append("minimize() changed the language of:\n" + render_dfa(a))
            continue
        counts = transition_counts(a)
        key = render_dfa(m)
        g = groups.get(key)
        if g is None:
            groups[key] = [m, a.state_count, counts.total, dict(counts.per_symbol)]
        else:
            g[1] = min(g[1], a.state_count)
            g[2] = min(g[2], counts.total)
            per = g[3]
            for sym, c in counts.per_symbol.items():
                if c < per[sym]:
                    per[sym] = c

    languages = 0
    for key in sorted(groups):
        m, min_states, min_total, min_per = groups[key]
        if m.state_count > max_states:
            # language only exists at the padding layer; out of scope
            continue
        languages += 1
        mc = transition_counts(m)
        if m.state_count != min_states:
            bad.append(
                f"state count: minimize() gives {m.state_count}, "
                f"but {min_states} states suffice for:\n{key}"
            )
        if mc.total != min_total:
            bad.append(
                f"total transitions: minimize() gives {mc.total}, "
                f"but {min_total} are achievable for:\n{key}"
            )
        for sym in alphabet:
            if mc.per_symbol[sym] != min_per[sym]:
                bad.append(
                    f"{sym!r}-transitions: minimize() gives {mc.per_symbol[sym]}, "
                    f"but {min_per[sym]} are achievable for:\n{key}"
                )
            undefined = m.state_count - mc.per_symbol[sym]
            if undefined != min_states - min_per[sym]:
                bad.append(
                    f"undefined-count identity fails on {sym!r}: "
                    f"{undefined} undefined moves vs sc - tc_{sym} = "
                    f"{min_states - min_per[sym]} for:\n{key}"
                )
    return Lemma1Report(
        max_states=max_states,
        alphabet=alphabet,
        dfas_checked=checked,
        languages=languages,
        counterexamples=tuple(bad),
    )
