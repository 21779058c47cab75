"""Atomic intersections of state languages and their quotient complexity.

For a basis S, the atomic intersection takes the states in S uncomplemented
and the rest complemented.  It is recognized by a DFA over pairs of disjoint
state subsets plus an absorbing sink: the pair tracks the images of S and of
its complement, and collapses to the sink as soon as they collide.  Only pair
states reachable from the start pair are ever materialized.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .dfa import (
    SUBSET_OP_LIMIT,
    Dfa,
    Transformation,
    _mask_of,
    _moore_blocks,
    _set_of,
    atom_bases_by_reversal,
    minimize,
)
from .errors import InvalidBasisError, LimitExceededError, NotAnAtomError


@dataclass(frozen=True)
class PairState:
    """A state of an atom DFA: either a disjoint pair (X, Y) or the sink."""

    x: frozenset[int]
    y: frozenset[int]
    is_bottom: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", frozenset(self.x))
        object.__setattr__(self, "y", frozenset(self.y))
        if self.is_bottom:
            if self.x or self.y:
                raise ValueError("the sink pair state carries no subsets")
        elif self.x & self.y:
            raise ValueError(f"pair subsets must be disjoint, got {self.x} and {self.y}")

    @classmethod
    def bottom(cls) -> "PairState":
        return cls(frozenset(), frozenset(), is_bottom=True)

    def __repr__(self) -> str:
        if self.is_bottom:
            return "PairState.bottom()"
        return f"PairState({set(self.x) or '{}'}, {set(self.y) or '{}'})"


def _basis_mask(dfa: Dfa, basis: Iterable[int]) -> int:
    members = frozenset(basis)
    n = dfa.state_count
    if n > SUBSET_OP_LIMIT:
        raise LimitExceededError(
            f"atom operations support at most {SUBSET_OP_LIMIT} states, got {n}"
        )
    bad = [q for q in members if not (isinstance(q, int) and 1 <= q <= n)]
    if bad:
        raise InvalidBasisError(f"basis ids {sorted(bad)} not within 1..{n}")
    return _mask_of(members)


def _letter_bits(dfa: Dfa) -> list[list[int]]:
    # bits[k][i] = singleton mask of the image of state i+1 under letter k
    return [
        [1 << (t(q) - 1) for q in range(1, dfa.state_count + 1)]
        for t in (dfa.delta[letter] for letter in dfa.alphabet)
    ]


def _apply(mask: int, bits: list[int]) -> int:
    image = 0
    while mask:
        low = mask & -mask
        image |= bits[low.bit_length() - 1]
        mask ^= low
    return image


def _explore(dfa: Dfa, basis_mask: int):
    """Breadth-first exploration of the pair automaton for a basis.

    Returns (pairs, rows, finals): pairs in discovery order with None for the
    sink, 0-based transition rows per letter, and per-state finality flags.
    """
    n = dfa.state_count
    full = (1 << n) - 1
    fmask = _mask_of(dfa.finals)
    nfmask = full ^ fmask
    letter_bits = _letter_bits(dfa)

    start = (basis_mask, full ^ basis_mask)
    pairs: list[tuple[int, int] | None] = [start]
    index: dict[tuple[int, int] | None, int] = {start: 0}
    rows: list[list[int]] = [[] for _ in letter_bits]
    finals: list[bool] = []

    pos = 0
    while pos < len(pairs):
        state = pairs[pos]
        if state is None:
            finals.append(False)
            for row in rows:
                row.append(pos)
        else:
            x, y = state
            finals.append((x & nfmask) == 0 and (y & fmask) == 0)
            for k, bits in enumerate(letter_bits):
                nx = _apply(x, bits)
                ny = _apply(y, bits)
                key = None if nx & ny else (nx, ny)
                j = index.get(key)
                if j is None:
                    j = len(pairs)
                    index[key] = j
                    pairs.append(key)
                rows[k].append(j)
        pos += 1
    return pairs, rows, finals


def build_atom_dfa(dfa: Dfa, basis: Iterable[int]) -> Dfa:
    """The DFA recognizing the atomic intersection named by ``basis``.

    Its start state is the pair (S, complement of S); state i of the result
    is the i-th pair state discovered, as reported by ``reachable_pair_states``.
    """
    mask = _basis_mask(dfa, basis)
    pairs, rows, finals = _explore(dfa, mask)
    delta = {
        letter: Transformation(tuple(j + 1 for j in rows[k]))
        for k, letter in enumerate(dfa.alphabet)
    }
    final_ids = frozenset(i + 1 for i, f in enumerate(finals) if f)
    return Dfa(len(pairs), dfa.alphabet, delta, 1, final_ids)


def reachable_pair_states(dfa: Dfa, basis: Iterable[int]) -> tuple[PairState, ...]:
    """Pair-state labels of ``build_atom_dfa`` in state order."""
    mask = _basis_mask(dfa, basis)
    pairs, _, _ = _explore(dfa, mask)
    return tuple(
        PairState.bottom() if p is None else PairState(_set_of(p[0]), _set_of(p[1]))
        for p in pairs
    )


def is_atom(dfa: Dfa, basis: Iterable[int]) -> bool:
    """Whether the atomic intersection named by ``basis`` is non-empty."""
    mask = _basis_mask(dfa, basis)
    n = dfa.state_count
    full = (1 << n) - 1
    fmask = _mask_of(dfa.finals)
    nfmask = full ^ fmask
    letter_bits = _letter_bits(dfa)

    start = (mask, full ^ mask)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x, y in frontier:
            if (x & nfmask) == 0 and (y & fmask) == 0:
                return True
            for bits in letter_bits:
                nx = _apply(x, bits)
                ny = _apply(y, bits)
                if not nx & ny and (nx, ny) not in seen:
                    seen.add((nx, ny))
                    nxt.append((nx, ny))
        frontier = nxt
    return False


def atom_complexity(dfa: Dfa, basis: Iterable[int]) -> int:
    """Quotient complexity of the atom named by ``basis``.

    Counts the indistinguishability classes of the reachable pair states; all
    pair states recognizing the empty language fall into a single class with
    the sink, so the empty quotient is counted at most once.  Raises
    ``NotAnAtomError`` when the intersection is empty.
    """
    mask = _basis_mask(dfa, basis)
    pairs, rows, finals = _explore(dfa, mask)
    if not any(finals):
        raise NotAnAtomError(
            f"basis {sorted(_set_of(mask))} names an empty atomic intersection"
        )
    blocks = _moore_blocks(len(pairs), rows, finals)
    return max(blocks) + 1


@dataclass(frozen=True)
class AtomInfo:
    basis: frozenset[int]
    is_atom: bool
    complexity: int | None


@dataclass(frozen=True)
class AtomReport:
    """All atoms of a language, with optional per-atom complexity."""

    state_count: int
    atoms: tuple[AtomInfo, ...]

    @property
    def count(self) -> int:
        return sum(1 for info in self.atoms if info.is_atom)


def enumerate_atoms(dfa: Dfa, with_complexities: bool = True) -> AtomReport:
    """Enumerate the atoms of the language of ``dfa``.

    Minimizes first when the input is not already minimal, so bases refer to
    the states of the minimal DFA.  Bases come from the achievable-column
    closure; pass ``with_complexities=False`` to skip the per-atom complexity
    computation when only the count matters.
    """
    minimal = minimize(dfa)
    if minimal.state_count == dfa.state_count:
        minimal = dfa
    bases = sorted(atom_bases_by_reversal(minimal), key=lambda s: (len(s), sorted(s)))
    infos = tuple(
        AtomInfo(
            basis,
            True,
            atom_complexity(minimal, basis) if with_complexities else None,
        )
        for basis in bases
    )
    return AtomReport(minimal.state_count, infos)
