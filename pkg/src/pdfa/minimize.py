"""Minimization and language complexity for partial DFAs.

The minimal partial DFA for a language is obtained from the minimal
*complete* DFA by deleting its dead state (when one exists).  So the
pipeline here is: trim, complete with a rejecting sink, refine the
state partition to Nerode classes, drop the dead class, and renumber
canonically.  The result is unique, which makes language equality a
simple dataclass comparison -- one of the two independent equivalence
routes below.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .core import (
    PartialDfa,
    _renumbered,
    is_connected,
    reachable,
    transition_counts,
    trim,
)


@dataclass(frozen=True)
class ComplexityReport:
    """Language measures read off the minimal partial DFA.

    ``nerode_classes`` counts right-congruence classes including the
    dead class when the minimal partial DFA has one, i.e. it is
    ``sc`` for a complete minimal DFA and ``sc + 1`` otherwise.
    """

    sc: int
    tc: int
    tc_per_symbol: Mapping[str, int]
    nerode_classes: int


def complete_with_sink(dfa: PartialDfa) -> tuple[PartialDfa, int | None]:
    """Route every undefined move to a fresh non-accepting sink state.

    Returns the completed DFA and the sink index, or ``(dfa, None)``
    unchanged when the input is already complete.
    """
    missing = [
        (q, sym)
        for q in range(dfa.state_count)
        for sym in dfa.alphabet
        if (q, sym) not in dfa.transitions
    ]
    if not missing:
        return dfa, None
    sink = dfa.state_count
    transitions = dict(dfa.transitions)
    for q, sym in missing:
        transitions[(q, sym)] = sink
    for sym in dfa.alphabet:
        transitions[(sink, sym)] = sink
    return PartialDfa(dfa.alphabet, sink + 1, dfa.start, dfa.accepting, transitions), sink


def canonicalize(dfa: PartialDfa) -> PartialDfa:
    """Renumber a connected DFA by BFS discovery order.

    Two connected deterministic automata are isomorphic exactly when
    their canonical forms are equal, so this turns isomorphism checks
    into equality checks.
    """
    if not is_connected(dfa):
        raise ValueError("canonicalize requires a connected DFA")
    return _renumbered(dfa, reachable(dfa))


def minimize(dfa: PartialDfa) -> PartialDfa:
    """The unique minimal partial DFA for the language, canonically numbered.

    Moore partition refinement on the sink-completed trim part; classes
    are renumbered by lowest member state each round, keeping every step
    deterministic.  The dead class (the sink's class) is deleted at the
    end, which is what makes the result minimal among *partial* DFAs,
    per symbol and in state count simultaneously.
    """
    t = trim(dfa)
    if not t.accepting:
        return t  # canonical empty-language DFA straight from trim
    complete, sink = complete_with_sink(t)

    n = complete.state_count
    cls = [1 if q in complete.accepting else 0 for q in range(n)]
    while True:
        remap: dict[tuple, int] = {}
        new = []
        for q in range(n):
            sig = (cls[q], tuple(cls[complete.transitions[(q, sym)]] for sym in complete.alphabet))
            if sig not in remap:
                remap[sig] = len(remap)
            new.append(remap[sig])
        if new == cls:
            break
        cls = new

    dead = cls[sink] if sink is not None else None
    reps: dict[int, int] = {}
    for q in range(n):
        reps.setdefault(cls[q], q)
    live = sorted(c for c in reps if c != dead)
    index = {c: i for i, c in enumerate(live)}
    transitions = {}
    for c in live:
        for sym in complete.alphabet:
            target = cls[complete.transitions[(reps[c], sym)]]
            if target != dead:
                transitions[(index[c], sym)] = index[target]
    quotient = PartialDfa(
        complete.alphabet,
        len(live),
        index[cls[complete.start]],
        frozenset(index[cls[q]] for q in complete.accepting),
        transitions,
    )
    return canonicalize(quotient)


def complexity(dfa: PartialDfa) -> ComplexityReport:
    """State/transition complexity of the language ``dfa`` recognizes."""
    m = minimize(dfa)
    counts = transition_counts(m)
    # One extra class -- the dead class -- exists whenever the minimal
    # partial DFA leaves some move undefined.
    classes = m.state_count if m.is_complete() else m.state_count + 1
    return ComplexityReport(
        sc=m.state_count,
        tc=counts.total,
        tc_per_symbol=dict(counts.per_symbol),
        nerode_classes=classes,
    )


def pair_equivalent(a: PartialDfa, b: PartialDfa) -> bool:
    """Language equality by synchronized product exploration.

    Walks pairs of states with ``None`` standing for the implicit dead
    state; a pair with mismatched acceptance witnesses a separating
    word.  Independent of minimization -- used as the cross-check half
    of :func:`equivalent` and by the brute-force oracle.
    """
    if a.alphabet != b.alphabet:
        raise ValueError("cannot compare DFAs over different alphabets")
    start = (a.start, b.start)
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        in_a = p is not None and p in a.accepting
        in_b = q is not None and q in b.accepting
        if in_a != in_b:
            return False
        for sym in a.alphabet:
            np = a.transitions.get((p, sym)) if p is not None else None
            nq = b.transitions.get((q, sym)) if q is not None else None
            if np is None and nq is None:
                continue  # both dead; rejects everything on both sides
            if (np, nq) not in seen:
                seen.add((np, nq))
                queue.append((np, nq))
    return True


def equivalent(a: PartialDfa, b: PartialDfa) -> bool:
    """Do ``a`` and ``b`` recognize the same language?

    Decided twice, by canonical-minimal-form equality and by pair
    exploration.  The two routes share no algorithmic machinery; any
    disagreement is an internal error and raises instead of guessing.
    """
    by_minimal = minimize(a) == minimize(b)
    by_pairs = pair_equivalent(a, b)
    if by_minimal != by_pairs:
        raise RuntimeError(
            "equivalence routes disagree "
            f"(minimal-form says {by_minimal}, pair exploration says {by_pairs})"
        )
    return by_minimal
