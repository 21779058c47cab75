"""Complete DFAs over 1-based state sets and their transformation algebra.

States are the integers 1..n everywhere in the public API.  A transformation
is a total self-map of the state set; a DFA assigns one transformation per
letter.  State subsets are handled internally as bit masks (bit i-1 set means
state i is a member), which caps subset-enumerating operations at
``SUBSET_OP_LIMIT`` states.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import (
    CapExceededError,
    InvalidDfaError,
    LimitExceededError,
    SizeMismatchError,
    UnknownLetterError,
)

# Operations that may enumerate subsets of the state set refuse larger inputs.
SUBSET_OP_LIMIT = 20


def _mask_of(states: Iterable[int]) -> int:
    mask = 0
    for q in states:
        mask |= 1 << (q - 1)
    return mask


def _set_of(mask: int) -> frozenset[int]:
    members = []
    while mask:
        low = mask & -mask
        members.append(low.bit_length())
        mask ^= low
    return frozenset(members)


@dataclass(frozen=True)
class Transformation:
    """A total map of {1..n} into itself; ``image[i-1]`` is the image of state i."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "image", tuple(self.image))
        n = len(self.image)
        if n == 0:
            raise InvalidDfaError("a transformation must act on at least one state")
        for i, q in enumerate(self.image, start=1):
            if not isinstance(q, int) or not 1 <= q <= n:
                raise InvalidDfaError(f"image of state {i} is {q!r}, not in 1..{n}")

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, state: int) -> int:
        return self.image[state - 1]

    def is_identity(self) -> bool:
        return all(q == i for i, q in enumerate(self.image, start=1))

    @classmethod
    def identity(cls, n: int) -> "Transformation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def cycle(cls, n: int, states: Iterable[int]) -> "Transformation":
        """The cyclic permutation (q1,...,qk) acting on 1..n, fixing everything else."""
        cyc = tuple(states)
        if len(set(cyc)) != len(cyc):
            raise InvalidDfaError("cycle entries must be distinct")
        image = list(range(1, n + 1))
        for i, q in enumerate(cyc):
            image[q - 1] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(image))

    @classmethod
    def unitary(cls, n: int, source: int, target: int) -> "Transformation":
        """The map sending ``source`` to ``target`` and fixing everything else."""
        image = list(range(1, n + 1))
        image[source - 1] = target
        return cls(tuple(image))

    @classmethod
    def constant(cls, n: int, target: int) -> "Transformation":
        """The map sending every state to ``target``."""
        return cls(tuple(target for _ in range(n)))


def compose(first: Transformation, second: Transformation) -> Transformation:
    """Left-action composition: apply ``first``, then ``second``."""
    if first.size != second.size:
        raise SizeMismatchError(
            f"cannot compose transformations of sizes {first.size} and {second.size}"
        )
    return Transformation(tuple(second.image[q - 1] for q in first.image))


@dataclass(frozen=True)
class Dfa:
    """A complete DFA: one transformation per letter, an initial state, finals.

    Immutable after construction; all operations on it are pure functions.
    """

    state_count: int
    alphabet: tuple[str, ...]
    delta: Mapping[str, Transformation]
    initial: int
    finals: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", dict(self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        n = self.state_count
        if n < 1:
            raise InvalidDfaError("state count must be positive")
        if not self.alphabet:
            raise InvalidDfaError("alphabet must be non-empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InvalidDfaError("alphabet letters must be distinct")
        for letter in self.alphabet:
            if not letter or letter.split() != [letter] or "#" in letter:
                raise InvalidDfaError(
                    f"letter {letter!r} must be a non-empty token without '#'"
                )
        if set(self.delta) != set(self.alphabet):
            missing = sorted(set(self.alphabet) - set(self.delta))
            extra = sorted(set(self.delta) - set(self.alphabet))
            raise InvalidDfaError(
                f"delta letters do not match alphabet (missing {missing}, extra {extra})"
            )
        for letter, trans in self.delta.items():
            if trans.size != n:
                raise InvalidDfaError(
                    f"transformation for {letter!r} acts on {trans.size} states, expected {n}"
                )
        if not 1 <= self.initial <= n:
            raise InvalidDfaError(f"initial state {self.initial} not in 1..{n}")
        if not self.finals <= frozenset(range(1, n + 1)):
            raise InvalidDfaError(f"final states {sorted(self.finals)} not within 1..{n}")

    def transformation(self, letter: str) -> Transformation:
        try:
            return self.delta[letter]
        except KeyError:
            raise UnknownLetterError(f"letter {letter!r} not in alphabet") from None

    def step(self, state: int, letter: str) -> int:
        return self.transformation(letter)(state)

    def accepts(self, word: Iterable[str]) -> bool:
        state = self.initial
        for letter in word:
            state = self.step(state, letter)
        return state in self.finals


def induced_transformation(dfa: Dfa, word: Iterable[str]) -> Transformation:
    """The transformation of the state set induced by reading ``word``.

    The empty word induces the identity.  A plain string is read letter by
    letter, so it only suits single-character alphabets.
    """
    result = Transformation.identity(dfa.state_count)
    for letter in word:
        result = compose(result, dfa.transformation(letter))
    return result


def reachable(dfa: Dfa) -> frozenset[int]:
    """States reachable from the initial state."""
    seen = {dfa.initial}
    frontier = [dfa.initial]
    while frontier:
        nxt = []
        for q in frontier:
            for letter in dfa.alphabet:
                r = dfa.delta[letter](q)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return frozenset(seen)


def _moore_blocks(count: int, rows: list[list[int]], finals: list[bool]) -> list[int]:
    """Moore partition refinement on a 0-based array automaton.

    ``rows[k][i]`` is the successor of state i under letter k.  Returns a dense
    block id per state; two states share a block iff they are indistinguishable.
    """
    block = [1 if f else 0 for f in finals]
    block_count = len(set(block))
    while True:
        table: dict[tuple[int, ...], int] = {}
        new = [0] * count
        for i in range(count):
            sig = (block[i],) + tuple(block[row[i]] for row in rows)
            b = table.get(sig)
            if b is None:
                b = len(table)
                table[sig] = b
            new[i] = b
        if len(table) == block_count:
            return new
        block = new
        block_count = len(table)


def _reachable_arrays(dfa: Dfa) -> tuple[list[int], list[list[int]], list[bool]]:
    """Restrict to reachable states, in 0-based array form (BFS order from initial)."""
    order = [dfa.initial]
    index = {dfa.initial: 0}
    trans = [dfa.delta[letter] for letter in dfa.alphabet]
    rows: list[list[int]] = [[] for _ in trans]
    pos = 0
    while pos < len(order):
        q = order[pos]
        for k, t in enumerate(trans):
            r = t(q)
            j = index.get(r)
            if j is None:
                j = len(order)
                index[r] = j
                order.append(r)
            rows[k].append(j)
        pos += 1
    final_flags = [q in dfa.finals for q in order]
    return order, rows, final_flags


def distinguishability_classes(dfa: Dfa) -> tuple[frozenset[int], ...]:
    """The partition of the reachable states into indistinguishability classes.

    This is the coarsest partition respecting finality and stable under every
    letter; states in distinct classes are distinguishable by some word.
    Classes are returned sorted by their smallest member.
    """
    order, rows, final_flags = _reachable_arrays(dfa)
    blocks = _moore_blocks(len(order), rows, final_flags)
    grouped: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        grouped.setdefault(b, []).append(order[i])
    classes = [frozenset(members) for members in grouped.values()]
    return tuple(sorted(classes, key=min))


def quotient_complexity(dfa: Dfa) -> int:
    """Number of indistinguishability classes among reachable states."""
    order, rows, final_flags = _reachable_arrays(dfa)
    blocks = _moore_blocks(len(order), rows, final_flags)
    return max(blocks) + 1 if blocks else 0


def minimize(dfa: Dfa) -> Dfa:
    """The minimal DFA for the same language.

    States are the indistinguishability classes of the reachable part,
    renumbered in breadth-first order from the initial class, so two
    language-equal DFAs over the same alphabet minimize to equal values.
    """
    classes = distinguishability_classes(dfa)
    class_index = {q: k for k, cls in enumerate(classes) for q in cls}
    rep = [min(cls) for cls in classes]

    start = class_index[dfa.initial]
    new_id = {start: 1}
    order = [start]
    pos = 0
    while pos < len(order):
        k = order[pos]
        for letter in dfa.alphabet:
            j = class_index[dfa.delta[letter](rep[k])]
            if j not in new_id:
                new_id[j] = len(order) + 1
                order.append(j)
        pos += 1

    count = len(order)
    delta = {}
    for letter in dfa.alphabet:
        image = [0] * count
        for k in order:
            image[new_id[k] - 1] = new_id[class_index[dfa.delta[letter](rep[k])]]
        delta[letter] = Transformation(tuple(image))
    finals = frozenset(new_id[k] for k in order if rep[k] in dfa.finals)
    return Dfa(count, dfa.alphabet, delta, 1, finals)


def transition_semigroup(dfa: Dfa, cap: int) -> frozenset[Transformation]:
    """Closure of the per-letter transformations under composition.

    The identity appears only if some non-empty word induces it.  Raises
    ``CapExceededError`` as soon as more than ``cap`` elements are found;
    the error carries the partial count.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    generators = [dfa.delta[letter] for letter in dfa.alphabet]
    seen = set(generators)
    if len(seen) > cap:
        raise CapExceededError(f"transition semigroup exceeds cap {cap}", len(seen))
    frontier = list(seen)
    while frontier:
        nxt = []
        for t in frontier:
            for g in generators:
                c = compose(t, g)
                if c not in seen:
                    seen.add(c)
                    if len(seen) > cap:
                        raise CapExceededError(
                            f"transition semigroup exceeds cap {cap}", len(seen)
                        )
                    nxt.append(c)
        frontier = nxt
    return frozenset(seen)


def atom_bases_by_reversal(dfa: Dfa) -> frozenset[frozenset[int]]:
    """All achievable columns {q : the word sends q into the finals}.

    Computed by closing the final-state set under per-letter preimages.  Each
    column is the basis of one atom of the state-language list; when every
    state of ``dfa`` is reachable the column count equals the quotient
    complexity of the reversed language.
    """
    n = dfa.state_count
    if n > SUBSET_OP_LIMIT:
        raise LimitExceededError(
            f"column enumeration supports at most {SUBSET_OP_LIMIT} states, got {n}"
        )
    # pre_bits[k][j] = mask of states that letter k sends onto state j+1
    pre_bits = []
    for letter in dfa.alphabet:
        t = dfa.delta[letter]
        bits = [0] * n
        for q in range(1, n + 1):
            bits[t(q) - 1] |= 1 << (q - 1)
        pre_bits.append(bits)

    start = _mask_of(dfa.finals)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for col in frontier:
            for bits in pre_bits:
                pre = 0
                m = col
                while m:
                    low = m & -m
                    pre |= bits[low.bit_length() - 1]
                    m ^= low
                if pre not in seen:
                    seen.add(pre)
                    nxt.append(pre)
        frontier = nxt
    return frozenset(_set_of(mask) for mask in seen)


def state_language_contains(dfa: Dfa, p: int, q: int) -> bool:
    """Whether the right language of state p is a subset of that of state q.

    True iff no word leads the pair jointly to (final, non-final); decided by
    a search over state pairs.
    """
    n = dfa.state_count
    for s in (p, q):
        if not 1 <= s <= n:
            raise InvalidDfaError(f"state {s} not in 1..{n}")
    seen = {(p, q)}
    frontier = [(p, q)]
    trans = [dfa.delta[letter] for letter in dfa.alphabet]
    while frontier:
        nxt = []
        for sp, sq in frontier:
            if sp in dfa.finals and sq not in dfa.finals:
                return False
            for t in trans:
                pair = (t(sp), t(sq))
                if pair not in seen:
                    seen.add(pair)
                    nxt.append(pair)
        frontier = nxt
    return True
