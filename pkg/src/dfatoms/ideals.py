"""Ideal-language predicates, ideal closures, and successor-set machinery.

A language is a right ideal when it absorbs arbitrary suffixes, a left ideal
when it absorbs arbitrary prefixes, and a two-sided ideal when both hold.
The predicates work on the minimized automaton and reject the empty language.
"""

from __future__ import annotations

from enum import Enum

from .dfa import Dfa, Transformation, minimize, state_language_contains
from .errors import CapExceededError, EmptyLanguageError, NotAnIdealError

DETERMINIZE_CAP = 1 << 16


class IdealKind(Enum):
    RIGHT = "right"
    LEFT = "left"
    TWO_SIDED = "two-sided"


def _minimal_nonempty(dfa: Dfa) -> Dfa:
    minimal = minimize(dfa)
    if not minimal.finals:
        raise EmptyLanguageError("the empty language belongs to no ideal class")
    return minimal


def is_right_ideal(dfa: Dfa) -> bool:
    """True iff the language absorbs suffixes: final states stay final."""
    minimal = _minimal_nonempty(dfa)
    return all(
        minimal.delta[letter](q) in minimal.finals
        for q in minimal.finals
        for letter in minimal.alphabet
    )


def is_left_ideal(dfa: Dfa) -> bool:
    """True iff every quotient's language contains the whole language."""
    minimal = _minimal_nonempty(dfa)
    return all(
        state_language_contains(minimal, minimal.initial, q)
        for q in range(1, minimal.state_count + 1)
    )


def is_two_sided_ideal(dfa: Dfa) -> bool:
    return is_right_ideal(dfa) and is_left_ideal(dfa)


def _absorb_finals(dfa: Dfa) -> Dfa:
    delta = {}
    for letter in dfa.alphabet:
        t = dfa.delta[letter]
        delta[letter] = Transformation(
            tuple(q if q in dfa.finals else t(q) for q in range(1, dfa.state_count + 1))
        )
    return Dfa(dfa.state_count, dfa.alphabet, delta, dfa.initial, dfa.finals)


def _prefix_closure(dfa: Dfa, cap: int) -> Dfa:
    # Determinize the machine that may loop on the initial state before
    # running the original DFA; every subset reached contains the initial.
    n = dfa.state_count
    init_bit = 1 << (dfa.initial - 1)
    bits = [
        [1 << (t(q) - 1) for q in range(1, n + 1)]
        for t in (dfa.delta[letter] for letter in dfa.alphabet)
    ]
    fmask = 0
    for q in dfa.finals:
        fmask |= 1 << (q - 1)

    subsets = [init_bit]
    index = {init_bit: 0}
    rows: list[list[int]] = [[] for _ in dfa.alphabet]
    pos = 0
    while pos < len(subsets):
        current = subsets[pos]
        for k in range(len(dfa.alphabet)):
            image = init_bit
            m = current
            while m:
                low = m & -m
                image |= bits[k][low.bit_length() - 1]
                m ^= low
            j = index.get(image)
            if j is None:
                j = len(subsets)
                if j + 1 > cap:
                    raise CapExceededError(
                        f"determinization exceeds cap {cap}", j + 1
                    )
                index[image] = j
                subsets.append(image)
            rows[k].append(j)
        pos += 1

    delta = {
        letter: Transformation(tuple(j + 1 for j in rows[k]))
        for k, letter in enumerate(dfa.alphabet)
    }
    finals = frozenset(i + 1 for i, s in enumerate(subsets) if s & fmask)
    return minimize(Dfa(len(subsets), dfa.alphabet, delta, 1, finals))


def idealize(dfa: Dfa, kind: IdealKind, cap: int = DETERMINIZE_CAP) -> Dfa:
    """A DFA for the ideal closure of the language.

    Right: make final states absorbing (suffix closure).  Left: allow an
    arbitrary prefix before the original run, then determinize and minimize
    (prefix closure).  Two-sided: prefix closure of the suffix closure.
    """
    if kind is IdealKind.RIGHT:
        return _absorb_finals(dfa)
    if kind is IdealKind.LEFT:
        return _prefix_closure(dfa, cap)
    return _prefix_closure(_absorb_finals(dfa), cap)


def accepting_sink(dfa: Dfa) -> int | None:
    """The unique final state fixed by every letter, if there is one.

    For a one-state DFA accepting everything, that state is the sink.
    Intended for minimal DFAs, where a right ideal has exactly one such state.
    """
    fixed = [
        q
        for q in sorted(dfa.finals)
        if all(dfa.delta[letter](q) == q for letter in dfa.alphabet)
    ]
    if len(fixed) == 1:
        return fixed[0]
    return None


def _containment_table(dfa: Dfa) -> list[list[bool]]:
    # contains[p-1][q-1]: no word sends (p, q) to (final, non-final).
    # Computed as a backward fixpoint over state pairs.
    n = dfa.state_count
    trans = [dfa.delta[letter] for letter in dfa.alphabet]
    bad = [[p in dfa.finals and q not in dfa.finals for q in range(1, n + 1)]
           for p in range(1, n + 1)]
    changed = True
    while changed:
        changed = False
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                if bad[p - 1][q - 1]:
                    continue
                for t in trans:
                    if bad[t(p) - 1][t(q) - 1]:
                        bad[p - 1][q - 1] = True
                        changed = True
                        break
    return [[not bad[p][q] for q in range(n)] for p in range(n)]


def successor_sets(dfa: Dfa) -> dict[int, frozenset[int]]:
    """For each state p, the states whose language strictly contains p's.

    No state is its own successor, and the relation is transitive.  Intended
    for minimal DFAs, where distinct states have distinct languages.
    """
    n = dfa.state_count
    contains = _containment_table(dfa)
    return {
        p: frozenset(
            q
            for q in range(1, n + 1)
            if q != p and contains[p - 1][q - 1] and not contains[q - 1][p - 1]
        )
        for p in range(1, n + 1)
    }


def refined_two_sided_bound(dfa: Dfa) -> int:
    """Successor-set bound on the complexity of the atom whose basis is every
    state except the initial one, for a two-sided ideal.

    With the accepting sink excluded from the inner sums, the value is
    1 + sum over non-sink states j of
    (|S(j)| - 1) + 2^(|S(j)|-1) - sum of 2^(|S(i)|-1) over non-sink i in S(j),
    and never exceeds 2^(n-2) + n - 1.
    """
    if not is_two_sided_ideal(dfa):
        raise NotAnIdealError("refined bound requires a two-sided ideal")
    minimal = minimize(dfa)
    n = minimal.state_count
    if n == 1:
        return 1
    sink = accepting_sink(minimal)
    if sink is None:
        raise NotAnIdealError("no accepting sink state found")
    succ = successor_sets(minimal)
    total = 1
    for j in range(1, n + 1):
        if j == sink:
            continue
        sj = succ[j]
        inner = sum(1 << (len(succ[i]) - 1) for i in sj if i != sink)
        total += (len(sj) - 1) + (1 << (len(sj) - 1)) - inner
    return total
