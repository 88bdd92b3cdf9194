"""Closed-form bound evaluators and the measurement harness.

Each check constructs witness DFAs (or draws seeded random ones),
builds the Boolean-operation result, measures real complexities via
minimization, evaluates the closed-form bound, and classifies the
outcome:

* ``EQUAL`` -- measured value matches the formula exactly;
* ``WITHIN_BOUND`` -- measured value is under an upper bound (or, for
  the unary-exception probe, differs from a disputed reference value,
  which is flagged in the details rather than failed);
* ``VIOLATION`` -- an upper bound is exceeded, or a claimed-tight
  equality does not hold.

Measured tc/sc values always come from ``minimize``; raw construction
counts are only compared where the claim is about the construction
itself (the per-symbol union prediction and the intersection product
law).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .boolean import complement, intersection_product, predicted_union_symbol_count, union_product
from .core import Alphabet, PartialDfa, is_connected, render_dfa, transition_counts
from .minimize import canonicalize, complexity, minimize
from .oracle import brute_min_transitions
from .witnesses import (
    chain_star_witness,
    epsilon_lang,
    unary_cycle,
    unary_singleton,
    union_multi_witness,
    union_symbol_witness,
    union_total_witness,
)

DEFAULT_SEED = 12345
DEFAULT_PAIRS = 200
DEFAULT_MAX_STATES = 4

_BC = Alphabet(("b", "c"))
_ABC = Alphabet(("a", "b", "c"))
_AB = Alphabet(("a", "b"))


# --- closed-form evaluators -------------------------------------------------

def union_symbol_upper(tb1: int, tb2: int, s1: int, s2: int) -> int:
    """Per-symbol union bound from the padded product construction.

    Asserts the algebraic identity with the rearranged tight form
    tb1*s2 + tb2*s1 - tb1*tb2 + tb1 + tb2 on every evaluation.
    """
    for tb, s, side in ((tb1, s1, 1), (tb2, s2, 2)):
        if not 0 <= tb <= s:
            raise ValueError(f"component {side}: need 0 <= per-symbol count <= states, got {tb} vs {s}")
    value = tb1 * tb2 + tb1 * (1 + s2 - tb2) + tb2 * (1 + s1 - tb1)
    assert value == tb1 * s2 + tb2 * s1 - tb1 * tb2 + tb1 + tb2
    return value


def union_state_upper(n1: int, n2: int) -> int:
    """State bound for the union: n1*n2 + n1 + n2."""
    if n1 < 1 or n2 < 1:
        raise ValueError(f"state counts must be at least 1, got {n1}, {n2}")
    return n1 * n2 + n1 + n2


def union_total_upper(t1: int, t2: int) -> int:
    """General upper bound on tc of a union: 2*(t1*t2 + t1 + t2)."""
    return 2 * (t1 * t2 + t1 + t2)


def union_total_lower(t1: int, t2: int) -> int:
    """Worst-case lower bound on tc of a union: t1*t2 + t1 + t2 - 1."""
    return t1 * t2 + t1 + t2 - 1


def union_cycle_upper(t1: int, t2: int) -> int:
    """Upper bound when all cycle-symbol moves are defined: t1*t2 + t1 + t2 - 1."""
    return t1 * t2 + t1 + t2 - 1


def conjecture_bound(t1: int, t2: int) -> int:
    """The conjectured union bound t1*t2 + t1 + t2 (plausible for tc >= 2;
    known to fail below that, see the conjecture-small check)."""
    return t1 * t2 + t1 + t2


def unary_union_upper(t1: int, t2: int) -> int:
    """Unary union bound t1*t2; inapplicable below tc 2.

    The guard is not pedantry: the union of b (one transition) with
    (b^n)* costs strictly more than 1*n transitions, so the product
    form genuinely fails there.
    """
    if t1 < 2 or t2 < 2:
        raise ValueError(
            "the unary product bound needs both transition complexities >= 2 "
            f"(got {t1}, {t2}); e.g. the union of b with (b^n)* exceeds 1*n"
        )
    return t1 * t2


def intersection_upper(t1: int, t2: int) -> int:
    """Intersection bound t1*t2 (tight for coprime unary cycles)."""
    return t1 * t2


def intersection_symbol_upper(tb1: int, tb2: int) -> int:
    """Per-symbol intersection bound tb1*tb2."""
    return tb1 * tb2


def complement_upper(sigma_size: int, t: int) -> int:
    """Complement bound |alphabet|*(t+2)."""
    return sigma_size * (t + 2)


# --- reports ----------------------------------------------------------------

class BoundId(Enum):
    UNION_SYMBOL_TIGHT = "union-symbol-tight"
    UNION_SYMBOL_MAX = "union-symbol-max"
    UNION_MULTI_TIGHT = "union-multi-tight"
    UNION_SC_TIGHT = "union-sc-tight"
    UNION_TOTAL_TIGHT = "union-total-tight"
    UNION_CYCLE_UPPER = "union-cycle-upper"
    UNION_TOTAL_UPPER = "union-total-upper"
    UNION_SYMBOL_SOUND = "union-symbol-sound"
    UNION_CONSTRUCTION_EXACT = "union-construction-exact"
    INTERSECTION_TIGHT = "intersection-tight"
    INTERSECTION_UPPER = "intersection-upper"
    INTERSECTION_CONSTRUCTION_EXACT = "intersection-construction-exact"
    COMPLEMENT_TIGHT = "complement-tight"
    COMPLEMENT_UPPER = "complement-upper"
    UNARY_TIGHT = "unary-tight"
    UNARY_EXCEPTION = "unary-exception"
    CONJECTURE_SMALL = "conjecture-small"


class Relation(Enum):
    EQUAL = "EQUAL"
    WITHIN_BOUND = "WITHIN_BOUND"
    VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class BoundCheckReport:
    """One bound check: what was claimed, what was measured, verdict.

    ``details`` is free text; its first line is a short note (shown in
    tables), any following lines carry artifact renderings.
    """

    bound_id: BoundId
    params: Mapping[str, int]
    formula_value: int
    measured_value: int
    relation: Relation
    details: str = ""

    def __post_init__(self):
        object.__setattr__(self, "params", dict(self.params))

    @property
    def note(self) -> str:
        return self.details.splitlines()[0] if self.details else ""


def render_report_line(report: BoundCheckReport) -> str:
    """Machine-readable one-liner: ``bound p=v ... formula=F measured=M verdict=V``."""
    parts = [report.bound_id.value]
    parts += [f"{k}={v}" for k, v in report.params.items()]
    parts += [
        f"formula={report.formula_value}",
        f"measured={report.measured_value}",
        f"verdict={report.relation.value}",
    ]
    return " ".join(parts)


def render_report_table(reports: Sequence[BoundCheckReport]) -> str:
    """Aligned table plus one trailing note line per flagged check."""
    rows = [("BOUND", "PARAMS", "FORMULA", "MEASURED", "VERDICT")]
    for r in reports:
        rows.append(
            (
                r.bound_id.value,
                " ".join(f"{k}={v}" for k, v in r.params.items()),
                str(r.formula_value),
                str(r.measured_value),
                r.relation.value,
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    counts = {rel: 0 for rel in Relation}
    for r in reports:
        counts[r.relation] += 1
    lines.append(
        f"{len(reports)} checks: {counts[Relation.EQUAL]} equal, "
        f"{counts[Relation.WITHIN_BOUND]} within bound, {counts[Relation.VIOLATION]} violations"
    )
    for r in reports:
        if r.note:
            lines.append(f"note [{render_report_line(r).split(' formula=')[0]}]: {r.note}")
    return "\n".join(lines) + "\n"


# --- seeded random sampling -------------------------------------------------

def sample_connected_dfa(
    rng: random.Random, state_count: int, alphabet: Alphabet, require_incomplete: bool = False
) -> PartialDfa:
    """One uniform canonical connected partial DFA with the given size.

    Draws a uniform labeled transition table (each slot undefined or any
    target) plus accepting set, rejects disconnected draws, and
    canonicalizes.  Connected deterministic automata have no nontrivial
    automorphisms, so every canonical form of a given state count is hit
    with equal probability.
    """
    n = state_count
    while True:
        transitions: dict[tuple[int, str], int] = {}
        for q in range(n):
            for sym in alphabet:
                v = rng.randrange(-1, n)
                if v >= 0:
                    transitions[(q, sym)] = v
        accepting = frozenset(q for q in range(n) if rng.getrandbits(1))
        dfa = PartialDfa(alphabet, n, 0, accepting, transitions)
        if not is_connected(dfa):
            continue
        if require_incomplete and dfa.is_complete():
            continue
        return canonicalize(dfa)


def sample_pairs(
    seed: int,
    count: int,
    max_states: int = DEFAULT_MAX_STATES,
    require_incomplete: bool = False,
) -> list[tuple[PartialDfa, PartialDfa]]:
    """Seeded list of same-alphabet DFA pairs over 1-3 symbols."""
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        alphabet = Alphabet("abc"[: rng.randrange(1, 4)])
        a = sample_connected_dfa(rng, rng.randrange(1, max_states + 1), alphabet, require_incomplete)
        b = sample_connected_dfa(rng, rng.randrange(1, max_states + 1), alphabet, require_incomplete)
        pairs.append((a, b))
    return pairs


# --- check implementations --------------------------------------------------

def _require_coprime(n1: int, n2: int) -> None:
    g = math.gcd(n1, n2)
    if g != 1:
        raise ValueError(
            f"this tightness claim requires relatively prime cycle lengths; gcd({n1}, {n2}) = {g}"
        )


def _measured(dfa: PartialDfa) -> tuple[PartialDfa, int, dict[str, int]]:
    m = minimize(dfa)
    counts = transition_counts(m)
    return m, counts.total, dict(counts.per_symbol)


def _tightness(measured: int, formula: int) -> Relation:
    return Relation.EQUAL if measured == formula else Relation.VIOLATION


def _soundness(measured: int, formula: int) -> Relation:
    if measured > formula:
        return Relation.VIOLATION
    return Relation.EQUAL if measured == formula else Relation.WITHIN_BOUND


def _int_param(params: Mapping[str, int], name: str, default: int | None = None) -> int:
    if name in params:
        return int(params[name])
    if default is None:
        raise ValueError(f"missing required parameter {name!r}")
    return default


def _check_union_symbol_tight(params: Mapping[str, int]) -> BoundCheckReport:
    n1 = _int_param(params, "n1")
    n2 = _int_param(params, "n2")
    k1 = _int_param(params, "k1", 1)
    k2 = _int_param(params, "k2", 1)
    _require_coprime(n1, n2)
    c1 = union_symbol_witness(n1, k1, alphabet=_BC)
    c2 = union_symbol_witness(n2, k2, alphabet=_BC)
    m, _total, per = _measured(union_product(c1, c2))
    formula = union_symbol_upper(k1, k2, n1, n2)
    measured = per["b"]
    return BoundCheckReport(
        BoundId.UNION_SYMBOL_TIGHT,
        {"n1": n1, "n2": n2, "k1": k1, "k2": k2},
        formula,
        measured,
        _tightness(measured, formula),
        details="\n" + render_dfa(m),
    )


def _check_union_symbol_max(params: Mapping[str, int]) -> BoundCheckReport:
    n1 = _int_param(params, "n1")
    n2 = _int_param(params, "n2")
    _require_coprime(n1, n2)
    inner = _check_union_symbol_tight({"n1": n1, "n2": n2, "k1": n1 - 1, "k2": n2 - 1})
    formula = n1 * n2 + n1 + n2 - 3
    assert formula == inner.formula_value  # maximal-k instance of the tight form
    return BoundCheckReport(
        BoundId.UNION_SYMBOL_MAX,
        {"n1": n1, "n2": n2},
        formula,
        inner.measured_value,
        _tightness(inner.measured_value, formula),
        details=inner.details,
    )


def _check_union_multi_tight(params: Mapping[str, int]) -> BoundCheckReport:
    n1 = _int_param(params, "n1")
    n2 = _int_param(params, "n2")
    ka1 = _int_param(params, "ka1", 1)
    kb1 = _int_param(params, "kb1", max(1, n1 - 1))
    ka2 = _int_param(params, "ka2", 1)
    kb2 = _int_param(params, "kb2", max(1, n2 - 1))
    _require_coprime(n1, n2)
    w1 = union_multi_witness(n1, {"a": ka1, "b": kb1}, alphabet=_ABC)
    w2 = union_multi_witness(n2, {"a": ka2, "b": kb2}, alphabet=_ABC)
    m, _total, per = _measured(union_product(w1, w2))
    expected = {
        "a": union_symbol_upper(ka1, ka2, n1, n2),
        "b": union_symbol_upper(kb1, kb2, n1, n2),
    }
    mismatches = [sym for sym in expected if per[sym] != expected[sym]]
    formula = sum(expected.values())
    measured = per["a"] + per["b"]
    relation = Relation.EQUAL if not mismatches else Relation.VIOLATION
    note = "" if not mismatches else f"per-symbol mismatch on {', '.join(mismatches)}"
    return BoundCheckReport(
        BoundId.UNION_MULTI_TIGHT,
        {"n1": n1, "n2": n2, "ka1": ka1, "kb1": kb1, "ka2": ka2, "kb2": kb2},
        formula,
        measured,
        relation,
        details=note + "\n" + render_dfa(m),
    )


def _check_union_sc_tight(params: Mapping[str, int]) -> BoundCheckReport:
    n1 = _int_param(params, "n1")
    n2 = _int_param(params, "n2")
    k1 = _int_param(params, "k1", 1)
    k2 = _int_param(params, "k2", 1)
    _require_coprime(n1, n2)
    c1 = union_symbol_witness(n1, k1, alphabet=_BC)
    c2 = union_symbol_witness(n2, k2, alphabet=_BC)
    m = minimize(union_product(c1, c2))
    formula = union_state_upper(n1, n2)
    measured = m.state_count
    return BoundCheckReport(
        BoundId.UNION_SC_TIGHT,
        {"n1": n1, "n2": n2, "k1": k1, "k2": k2},
        formula,
        measured,
        _tightness(measured, formula),
        details="\n" + render_dfa(m),
    )


def _union_total_pair(n1: int, n2: int) -> tuple[PartialDfa, PartialDfa]:
    return (
        union_total_witness(n1, "a", "c", alphabet=_ABC),
        union_total_witness(n2, "b", "c", alphabet=_ABC),
    )


def _check_union_total_tight(params: Mapping[str, int]) -> BoundCheckReport:
    n1 = _int_param(params, "n1")
    n2 = _int_param(params, "n2")
    _require_coprime(n1, n2)
    w1, w2 = _union_total_pair(n1, n2)
    t1 = complexity(w1).tc
    t2 = complexity(w2).tc
    m, measured, _per = _measured(union_product(w1, w2))
    formula = union_total_lower(t1, t2)
    relation = _tightness(measured, formula)
    note = ""
    if (t1, t2) != (n1 + 1, n2 + 1):
        relation = Relation.VIOLATION
        note = f"witness premise failed: tc inputs ({t1}, {t2}) != ({n1 + 1}, {n2 + 1})"
    return BoundCheckReport(
        BoundId.UNION_TOTAL_TIGHT,
        {"n1": n1, "n2": n2},
        formula,
        measured,
        relation,
        details=note + "\n" + render_dfa(m),
    )


def _check_union_cycle_upper(params: Mapping[str, int]) -> BoundCheckReport:
    n1 = _int_param(params, "n1")
    n2 = _int_param(params, "n2")
    w1, w2 = _union_total_pair(n1, n2)
    t1 = complexity(w1).tc
    t2 = complexity(w2).tc
    m, measured, _per = _measured(union_product(w1, w2))
    formula = union_cycle_upper(t1, t2)
    relation = _soundness(measured, formula)
    coprime = math.gcd(n1, n2) == 1
    note = ""
    if coprime and relation is not Relation.EQUAL:
        relation = Relation.VIOLATION
        note = "coprime pair did not reach the bound claimed tight"
    return BoundCheckReport(
        BoundId.UNION_CYCLE_UPPER,
        {"n1": n1, "n2": n2},
        formula,
        measured,
        relation,
        details=note + "\n" + render_dfa(m),
    )


def _check_intersection_tight(params: Mapping[str, int]) -> BoundCheckReport:
    n1 = _int_param(params, "n1")
    n2 = _int_param(params, "n2")
    _require_coprime(n1, n2)
    w1 = unary_cycle(n1)
    w2 = unary_cycle(n2)
    m, measured, _per = _measured(intersection_product(w1, w2))
    formula = intersection_upper(n1, n2)
    return BoundCheckReport(
        BoundId.INTERSECTION_TIGHT,
        {"n1": n1, "n2": n2},
        formula,
        measured,
        _tightness(measured, formula),
        details="\n" + render_dfa(m),
    )


def _check_complement_tight(params: Mapping[str, int]) -> BoundCheckReport:
    n = _int_param(params, "n")
    sigma = _int_param(params, "sigma", 2)
    if not 1 <= sigma <= 3:
        raise ValueError(f"sigma must be 1..3, got {sigma}")
    alphabet = Alphabet("abc"[:sigma]) if sigma != 2 else _AB
    w = unary_singleton(n, alphabet=alphabet)
    t = complexity(w).tc
    m, measured, _per = _measured(complement(w))
    formula = complement_upper(sigma, t)
    relation = _tightness(measured, formula)
    note = ""
    if t != n:
        relation = Relation.VIOLATION
        note = f"witness premise failed: tc of the singleton is {t}, expected {n}"
    return BoundCheckReport(
        BoundId.COMPLEMENT_TIGHT,
        {"n": n, "sigma": sigma},
        formula,
        measured,
        relation,
        details=note + "\n" + render_dfa(m),
    )


def _check_unary_tight(params: Mapping[str, int]) -> BoundCheckReport:
    n1 = _int_param(params, "n1")
    n2 = _int_param(params, "n2")
    if n1 < 3 or n2 < 2:
        raise ValueError(
            f"the unary tightness claim is stated for n1 >= 3 and n2 >= 2, got ({n1}, {n2})"
        )
    _require_coprime(n1, n2)
    w1 = unary_cycle(n1)
    w2 = unary_cycle(n2)
    t1 = complexity(w1).tc
    t2 = complexity(w2).tc
    m, measured, _per = _measured(union_product(w1, w2))
    formula = unary_union_upper(t1, t2)
    return BoundCheckReport(
        BoundId.UNARY_TIGHT,
        {"n1": n1, "n2": n2},
        formula,
        measured,
        _tightness(measured, formula),
        details="\n" + render_dfa(m),
    )


def _check_unary_exception(params: Mapping[str, int]) -> BoundCheckReport:
    n = _int_param(params, "n")
    if n < 2:
        raise ValueError(f"the exception probe needs n >= 2, got {n}")
    w1 = unary_singleton(1)
    w2 = unary_cycle(n)
    m, measured, _per = _measured(union_product(w1, w2))
    oracle = brute_min_transitions(m)
    reference = n + 1
    if oracle.min_total != measured:
        relation = Relation.VIOLATION
        note = f"minimizer ({measured}) and brute-force oracle ({oracle.min_total}) disagree"
    elif measured <= n:
        relation = Relation.VIOLATION
        note = f"union of b and (b^{n})* did not exceed the product bound {n}"
    elif measured == reference:
        relation = Relation.EQUAL
        note = ""
    else:
        relation = Relation.WITHIN_BOUND
        note = (
            f"measured tc {measured} (oracle-certified) differs from the stated "
            f"reference value n+1 = {reference}; it does exceed the product bound {n} "
            "as claimed -- flagged, not failed"
        )
    return BoundCheckReport(
        BoundId.UNARY_EXCEPTION,
        {"n": n},
        reference,
        measured,
        relation,
        details=note + "\n" + render_dfa(m),
    )


def _check_conjecture_small(params: Mapping[str, int]) -> BoundCheckReport:
    m_par = _int_param(params, "m")
    if m_par < 1:
        raise ValueError(f"need m >= 1, got {m_par}")
    eps = epsilon_lang(alphabet=_AB)
    chain = chain_star_witness(m_par, alphabet=_AB)
    t_eps = complexity(eps).tc
    t_chain = complexity(chain).tc
    mdfa, measured, _per = _measured(union_product(eps, chain))
    expected = m_par + 2 if m_par >= 2 else 1  # m = 1: a* union {eps} is just a*
    conjectured = conjecture_bound(t_eps, t_chain)
    ok = t_eps == 0 and t_chain == m_par and measured == expected
    if not ok:
        relation = Relation.VIOLATION
        note = (
            f"expected trio (0, {m_par}, {expected}), "
            f"measured ({t_eps}, {t_chain}, {measured})"
        )
    else:
        relation = Relation.EQUAL
        note = (
            f"counterexample holds: measured {measured} exceeds the conjectured "
            f"bound {conjectured}, whose applicability needs tc >= 2 on both sides"
            if measured > conjectured
            else f"conjectured bound {conjectured} not exceeded at m={m_par}"
        )
    return BoundCheckReport(
        BoundId.CONJECTURE_SMALL,
        {"m": m_par},
        expected,
        measured,
        relation,
        details=note + "\n" + render_dfa(mdfa),
    )


def _suite_params(params: Mapping[str, int]) -> tuple[int, int, int]:
    pairs = _int_param(params, "pairs", DEFAULT_PAIRS)
    seed = _int_param(params, "seed", DEFAULT_SEED)
    max_states = _int_param(params, "max_states", DEFAULT_MAX_STATES)
    if pairs < 1:
        raise ValueError(f"need at least one pair, got {pairs}")
    return pairs, seed, max_states


def _random_suite(
    bound_id: BoundId,
    params: Mapping[str, int],
    per_pair,  # (a, b) -> (measured, formula, mismatch: bool)
    require_incomplete: bool = False,
) -> BoundCheckReport:
    """Shared driver for the 200-pair soundness/exactness suites.

    The reported formula/measured values belong to the worst pair
    (largest measured - formula margin); the details line carries the
    violation count and that pair's renderings.
    """
    pairs, seed, max_states = _suite_params(params)
    sample = sample_pairs(seed, pairs, max_states, require_incomplete)
    worst: tuple[int, int, int] | None = None  # (margin, measured, formula)
    worst_pair = sample[0]
    violations = 0
    for a, b in sample:
        measured, formula, bad = per_pair(a, b)
        if bad:
            violations += 1
        margin = measured - formula
        if worst is None or margin > worst[0]:
            worst = (margin, measured, formula)
            worst_pair = (a, b)
    assert worst is not None
    _margin, measured, formula = worst
    if violations:
        relation = Relation.VIOLATION
    else:
        relation = Relation.EQUAL if measured == formula else Relation.WITHIN_BOUND
    note = f"pairs={pairs} violations={violations}; values are the worst pair's"
    details = note + "\n" + render_dfa(worst_pair[0]) + render_dfa(worst_pair[1])
    return BoundCheckReport(
        bound_id,
        {"pairs": pairs, "seed": seed, "max_states": max_states},
        formula,
        measured,
        relation,
        details=details,
    )


def _check_union_total_upper(params: Mapping[str, int]) -> BoundCheckReport:
    def per_pair(a: PartialDfa, b: PartialDfa):
        t1 = complexity(a).tc
        t2 = complexity(b).tc
        measured = complexity(union_product(a, b)).tc
        formula = union_total_upper(t1, t2)
        return measured, formula, measured > formula

    return _random_suite(BoundId.UNION_TOTAL_UPPER, params, per_pair)


def _check_union_symbol_sound(params: Mapping[str, int]) -> BoundCheckReport:
    def per_pair(a: PartialDfa, b: PartialDfa):
        ra = complexity(a)
        rb = complexity(b)
        ru = complexity(union_product(a, b))
        measured = formula = 0
        bad = False
        for sym in a.alphabet:
            bound = union_symbol_upper(
                ra.tc_per_symbol[sym], rb.tc_per_symbol[sym], ra.sc, rb.sc
            )
            got = ru.tc_per_symbol[sym]
            measured += got
            formula += bound
            bad = bad or got > bound
        return measured, formula, bad

    return _random_suite(BoundId.UNION_SYMBOL_SOUND, params, per_pair)


def _check_union_construction_exact(params: Mapping[str, int]) -> BoundCheckReport:
    def per_pair(a: PartialDfa, b: PartialDfa):
        ca = transition_counts(a)
        cb = transition_counts(b)
        cu = transition_counts(union_product(a, b))
        measured = formula = 0
        bad = False
        for sym in a.alphabet:
            predicted = predicted_union_symbol_count(
                ca.per_symbol[sym], cb.per_symbol[sym], a.state_count, b.state_count
            )
            got = cu.per_symbol[sym]
            measured += got
            formula += predicted
            bad = bad or got != predicted
        return measured, formula, bad

    # exactness of the prediction needs the dead slot on both sides
    return _random_suite(
        BoundId.UNION_CONSTRUCTION_EXACT, params, per_pair, require_incomplete=True
    )


def _check_intersection_construction_exact(params: Mapping[str, int]) -> BoundCheckReport:
    def per_pair(a: PartialDfa, b: PartialDfa):
        ca = transition_counts(a)
        cb = transition_counts(b)
        ci = transition_counts(intersection_product(a, b))
        measured = formula = 0
        bad = False
        for sym in a.alphabet:
            predicted = intersection_symbol_upper(ca.per_symbol[sym], cb.per_symbol[sym])
            got = ci.per_symbol[sym]
            measured += got
            formula += predicted
            bad = bad or got != predicted
        return measured, formula, bad

    return _random_suite(BoundId.INTERSECTION_CONSTRUCTION_EXACT, params, per_pair)


def _check_intersection_upper(params: Mapping[str, int]) -> BoundCheckReport:
    def per_pair(a: PartialDfa, b: PartialDfa):
        ra = complexity(a)
        rb = complexity(b)
        measured = complexity(intersection_product(a, b)).tc
        symbol_sum = sum(
            intersection_symbol_upper(ra.tc_per_symbol[sym], rb.tc_per_symbol[sym])
            for sym in a.alphabet
        )
        formula = intersection_upper(ra.tc, rb.tc)
        # two layers: tc <= sum of per-symbol products <= t1*t2
        bad = measured > symbol_sum or symbol_sum > formula
        return measured, formula, bad

    return _random_suite(BoundId.INTERSECTION_UPPER, params, per_pair)


def _check_complement_upper(params: Mapping[str, int]) -> BoundCheckReport:
    def per_pair(a: PartialDfa, _b: PartialDfa):
        t = complexity(a).tc
        measured = complexity(complement(a)).tc
        formula = complement_upper(len(a.alphabet), t)
        return measured, formula, measured > formula

    return _random_suite(BoundId.COMPLEMENT_UPPER, params, per_pair)


_CHECKS = {
    BoundId.UNION_SYMBOL_TIGHT: _check_union_symbol_tight,
    BoundId.UNION_SYMBOL_MAX: _check_union_symbol_max,
    BoundId.UNION_MULTI_TIGHT: _check_union_multi_tight,
    BoundId.UNION_SC_TIGHT: _check_union_sc_tight,
    BoundId.UNION_TOTAL_TIGHT: _check_union_total_tight,
    BoundId.UNION_CYCLE_UPPER: _check_union_cycle_upper,
    BoundId.UNION_TOTAL_UPPER: _check_union_total_upper,
    BoundId.UNION_SYMBOL_SOUND: _check_union_symbol_sound,
    BoundId.UNION_CONSTRUCTION_EXACT: _check_union_construction_exact,
    BoundId.INTERSECTION_TIGHT: _check_intersection_tight,
    BoundId.INTERSECTION_UPPER: _check_intersection_upper,
    BoundId.INTERSECTION_CONSTRUCTION_EXACT: _check_intersection_construction_exact,
    BoundId.COMPLEMENT_TIGHT: _check_complement_tight,
    BoundId.COMPLEMENT_UPPER: _check_complement_upper,
    BoundId.UNARY_TIGHT: _check_unary_tight,
    BoundId.UNARY_EXCEPTION: _check_unary_exception,
    BoundId.CONJECTURE_SMALL: _check_conjecture_small,
}


def check_bound(bound_id: BoundId | str, params: Mapping[str, int] | None = None) -> BoundCheckReport:
    """Run one bound check; see the module docstring for verdict semantics."""
    if isinstance(bound_id, str):
        try:
            bound_id = BoundId(bound_id)
        except ValueError:
            known = ", ".join(b.value for b in BoundId)
            raise ValueError(f"unknown bound {bound_id!r}; known bounds: {known}") from None
    return _CHECKS[bound_id](params or {})


def _coprime_pairs(max_n: int) -> list[tuple[int, int]]:
    return [
        (n1, n2)
        for n1 in range(2, max_n + 1)
        for n2 in range(n1 + 1, max_n + 1)
        if math.gcd(n1, n2) == 1
    ]


def run_suite(
    max_n: int = 5, seed: int = DEFAULT_SEED, pairs: int = DEFAULT_PAIRS
) -> list[BoundCheckReport]:
    """The whole tightness + soundness suite, in deterministic order."""
    if max_n < 3:
        raise ValueError(f"need max_n >= 3 to instantiate the tight families, got {max_n}")
    reports: list[BoundCheckReport] = []
    grid = _coprime_pairs(max_n)
    for n1, n2 in grid:
        for k1 in range(1, n1):
            for k2 in range(1, n2):
                reports.append(
                    check_bound(BoundId.UNION_SYMBOL_TIGHT, {"n1": n1, "n2": n2, "k1": k1, "k2": k2})
                )
    for n1, n2 in grid:
        reports.append(check_bound(BoundId.UNION_SYMBOL_MAX, {"n1": n1, "n2": n2}))
        reports.append(check_bound(BoundId.UNION_MULTI_TIGHT, {"n1": n1, "n2": n2}))
        reports.append(check_bound(BoundId.UNION_SC_TIGHT, {"n1": n1, "n2": n2}))
        reports.append(check_bound(BoundId.UNION_TOTAL_TIGHT, {"n1": n1, "n2": n2}))
        reports.append(check_bound(BoundId.INTERSECTION_TIGHT, {"n1": n1, "n2": n2}))
    for n1 in range(2, max_n + 1):
        for n2 in range(n1, max_n + 1):
            reports.append(check_bound(BoundId.UNION_CYCLE_UPPER, {"n1": n1, "n2": n2}))
    for n1 in range(3, max_n + 1):
        for n2 in range(2, max_n + 1):
            if n2 != n1 and math.gcd(n1, n2) == 1:
                reports.append(check_bound(BoundId.UNARY_TIGHT, {"n1": n1, "n2": n2}))
    for n in (2, 3):
        reports.append(check_bound(BoundId.UNARY_EXCEPTION, {"n": n}))
    for n in range(1, max_n + 1):
        reports.append(check_bound(BoundId.COMPLEMENT_TIGHT, {"n": n}))
    for m in (1, 2, 3):
        reports.append(check_bound(BoundId.CONJECTURE_SMALL, {"m": m}))
    suite_params = {"pairs": pairs, "seed": seed}
    for bound_id in (
        BoundId.UNION_TOTAL_UPPER,
        BoundId.UNION_SYMBOL_SOUND,
        BoundId.UNION_CONSTRUCTION_EXACT,
        BoundId.INTERSECTION_UPPER,
        BoundId.INTERSECTION_CONSTRUCTION_EXACT,
        BoundId.COMPLEMENT_UPPER,
    ):
        reports.append(check_bound(bound_id, suite_params))
    reports.sort(key=lambda r: (r.bound_id.value, tuple(sorted(r.params.items()))))
    return reports
