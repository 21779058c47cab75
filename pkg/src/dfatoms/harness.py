"""Independent oracles and randomized cross-checking.

The atom-complexity oracle never builds the pair automaton: it runs the DFA
whose states are the word-induced transformations (identity plus the
transition semigroup) and accepts exactly when the current transformation's
column equals the requested basis.  That DFA recognizes the same atom, so its
quotient complexity must agree with the pair-automaton route.
"""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass

from .atoms import atom_complexity, enumerate_atoms, is_atom
from .bounds import bound_for_basis
from .dfa import (
    SUBSET_OP_LIMIT,
    Dfa,
    Transformation,
    _moore_blocks,
    atom_bases_by_reversal,
    minimize,
    quotient_complexity,
    transition_semigroup,
)
from .errors import InvalidBasisError, LimitExceededError
from .ideals import IdealKind, accepting_sink, idealize
from .witnesses import WitnessClass, witness

ORACLE_STATE_LIMIT = 6
_LETTER_NAMES = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class RandomSpec:
    """Seeded recipe for one random complete DFA.

    Generation is a pure function of the seed: a Mersenne Twister
    (random.Random) is seeded with it and consumed only through random();
    per letter, one uniform image per state in state order, then final flags
    with probability final_density per state, redrawn until the final set is
    neither empty nor everything.  A one-state DFA gets final set {1}.
    """

    state_count: int
    letters: int
    seed: int
    final_density: float = 0.5

    def __post_init__(self) -> None:
        if self.state_count < 1:
            raise ValueError("state_count must be at least 1")
        if not 1 <= self.letters <= len(_LETTER_NAMES):
            raise ValueError(f"letters must be in 1..{len(_LETTER_NAMES)}")
        if not 0 < self.final_density < 1:
            raise ValueError("final_density must be strictly between 0 and 1")


def random_dfa(spec: RandomSpec) -> Dfa:
    """The DFA determined by ``spec``; equal specs give equal DFAs."""
    rng = random.Random(spec.seed)
    n = spec.state_count
    names = tuple(_LETTER_NAMES[: spec.letters])
    delta = {
        name: Transformation(
            tuple(min(int(rng.random() * n), n - 1) + 1 for _ in range(n))
        )
        for name in names
    }
    if n == 1:
        finals = frozenset({1})
    else:
        while True:
            finals = frozenset(
                q for q in range(1, n + 1) if rng.random() < spec.final_density
            )
            if finals and len(finals) < n:
                break
    return Dfa(n, names, delta, 1, finals)


def _column(t: Transformation, finals: frozenset[int]) -> frozenset[int]:
    return frozenset(q for q in range(1, t.size + 1) if t(q) in finals)


class _MonoidDfa:
    """The transformation-monoid automaton of a DFA, finals left open."""

    def __init__(self, dfa: Dfa):
        n = dfa.state_count
        if n > ORACLE_STATE_LIMIT:
            raise LimitExceededError(
                f"monoid oracle supports at most {ORACLE_STATE_LIMIT} states, got {n}"
            )
        elements = {Transformation.identity(n)}
        elements.update(transition_semigroup(dfa, cap=n**n))
        self.elements = sorted(elements, key=lambda t: t.image)
        index = {t.image: i for i, t in enumerate(self.elements)}
        generators = [dfa.delta[letter] for letter in dfa.alphabet]
        self.rows = [
            [index[tuple(g.image[q - 1] for q in t.image)] for t in self.elements]
            for g in generators
        ]
        self.initial = index[Transformation.identity(n).image]
        self.columns = [_column(t, dfa.finals) for t in self.elements]

    def complexity_for(self, basis: frozenset[int]) -> int:
        finals = [col == basis for col in self.columns]
        if not any(finals):
            return 0
        blocks = _moore_blocks(len(self.elements), self.rows, finals)
        return max(blocks) + 1

    def bases(self) -> frozenset[frozenset[int]]:
        return frozenset(self.columns)


def oracle_atom_complexity(dfa: Dfa, basis: Iterable[int]) -> int:
    """Atom complexity via the transformation-monoid automaton.

    Returns 0 when the basis names an empty intersection (no monoid element
    has that column).  Only supports small state counts; the monoid may hold
    up to n**n elements.
    """
    members = frozenset(basis)
    n = dfa.state_count
    bad = [q for q in members if not 1 <= q <= n]
    if bad:
        raise InvalidBasisError(f"basis ids {sorted(bad)} not within 1..{n}")
    return _MonoidDfa(dfa).complexity_for(members)


def reversal_quotient_complexity(dfa: Dfa) -> int:
    """Quotient complexity of the reversed language.

    Built the long way round: reverse every transition into a
    nondeterministic table, determinize by subset construction from the final
    set, and minimize the result.
    """
    n = dfa.state_count
    rev: dict[str, list[set[int]]] = {
        letter: [set() for _ in range(n)] for letter in dfa.alphabet
    }
    for letter in dfa.alphabet:
        t = dfa.delta[letter]
        for q in range(1, n + 1):
            rev[letter][t(q) - 1].add(q)

    start = frozenset(dfa.finals)
    subsets = [start]
    index = {start: 0}
    rows: list[list[int]] = [[] for _ in dfa.alphabet]
    pos = 0
    while pos < len(subsets):
        current = subsets[pos]
        for k, letter in enumerate(dfa.alphabet):
            image = frozenset(p for q in current for p in rev[letter][q - 1])
            j = index.get(image)
            if j is None:
                j = len(subsets)
                index[image] = j
                subsets.append(image)
            rows[k].append(j)
        pos += 1

    delta = {
        letter: Transformation(tuple(j + 1 for j in rows[k]))
        for k, letter in enumerate(dfa.alphabet)
    }
    finals = frozenset(i + 1 for i, s in enumerate(subsets) if dfa.initial in s)
    return quotient_complexity(Dfa(len(subsets), dfa.alphabet, delta, 1, finals))


@dataclass(frozen=True)
class BasisCheck:
    basis: frozenset[int]
    pair_route: int
    oracle_route: int

    @property
    def match(self) -> bool:
        return self.pair_route == self.oracle_route


@dataclass(frozen=True)
class CrossCheckReport:
    """Agreement report between the pair-automaton route and the oracles."""

    description: str
    basis_checks: tuple[BasisCheck, ...]
    routes_agree: bool
    atom_count: int
    reversal_complexity: int

    @property
    def passed(self) -> bool:
        return (
            self.routes_agree
            and self.atom_count == self.reversal_complexity
            and all(check.match for check in self.basis_checks)
        )


def cross_check(dfa: Dfa, description: str = "") -> CrossCheckReport:
    """Compare every atom-related route on one (small) DFA.

    The input is minimized first.  Compares the three basis enumerations
    (column closure, exhaustive pair-automaton emptiness, monoid columns) and
    the two complexity routes on every subset of the state set.
    """
    minimal = minimize(dfa)
    n = minimal.state_count
    if n > ORACLE_STATE_LIMIT:
        raise LimitExceededError(
            f"cross_check supports at most {ORACLE_STATE_LIMIT} states, got {n}"
        )
    monoid = _MonoidDfa(minimal)

    column_bases = atom_bases_by_reversal(minimal)
    emptiness_bases = set()
    checks = []
    for mask in range(1 << n):
        basis = frozenset(q for q in range(1, n + 1) if mask & (1 << (q - 1)))
        atom = is_atom(minimal, basis)
        if atom:
            emptiness_bases.add(basis)
        pair_route = atom_complexity(minimal, basis) if atom else 0
        checks.append(BasisCheck(basis, pair_route, monoid.complexity_for(basis)))
    routes_agree = column_bases == frozenset(emptiness_bases) == monoid.bases()

    report = enumerate_atoms(minimal, with_complexities=False)
    return CrossCheckReport(
        description=description or f"dfa(n={dfa.state_count})",
        basis_checks=tuple(checks),
        routes_agree=routes_agree,
        atom_count=report.count,
        reversal_complexity=reversal_quotient_complexity(minimal),
    )


@dataclass(frozen=True)
class SweepReport:
    """Outcome of a randomized bound-saturation sweep for one class."""

    kind: WitnessClass
    n: int
    samples: int
    seed: int
    checked: int
    max_observed: dict[int, int]
    violations: tuple[str, ...]
    witness_attains: bool
    skipped: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


_IDEALIZE_FOR = {
    WitnessClass.RIGHT_IDEAL: IdealKind.RIGHT,
    WitnessClass.LEFT_IDEAL: IdealKind.LEFT,
    WitnessClass.TWO_SIDED_IDEAL: IdealKind.TWO_SIDED,
}


def _sweep_witness(kind: WitnessClass, n: int) -> Dfa:
    if n == 1:
        return Dfa(1, ("a",), {"a": Transformation.identity(1)}, 1, frozenset({1}))
    return witness(kind, n)


def bound_sweep(kind: WitnessClass, n: int, samples: int, seed: int) -> SweepReport:
    """Generate random DFAs, close them into the class, and verify that every
    atom complexity respects the class bound.

    The class witness is always included and must attain its bounds exactly.
    Instances whose minimized complexity exceeds the subset-operation limit
    are skipped and reported.
    """
    if n > 7:
        raise ValueError("bound sweeps support n <= 7")
    instances: list[tuple[str, Dfa]] = [("witness", _sweep_witness(kind, n))]
    for i in range(samples):
        spec = RandomSpec(n, 3, seed + i)
        instances.append((f"seed={seed + i}", random_dfa(spec)))

    violations = []
    skipped = []
    max_observed: dict[int, int] = {}
    witness_attains = True
    checked = 0
    for label, instance in instances:
        if kind is WitnessClass.REGULAR:
            closed = instance
        else:
            closed = idealize(instance, _IDEALIZE_FOR[kind])
        minimal = minimize(closed)
        m = minimal.state_count
        if not minimal.finals:
            skipped.append(f"{label}: empty language")
            continue
        if m > SUBSET_OP_LIMIT:
            skipped.append(f"{label}: minimized complexity {m}")
            continue
        sink = accepting_sink(minimal)
        checked += 1
        for info in enumerate_atoms(minimal).atoms:
            size = len(info.basis)
            bound = bound_for_basis(kind, m, info.basis, sink=sink or m)
            assert info.complexity is not None
            if bound is None or info.complexity > bound:
                violations.append(
                    f"{label}: basis {sorted(info.basis)} complexity "
                    f"{info.complexity} exceeds bound {bound}"
                )
            elif label == "witness" and info.complexity != bound:
                witness_attains = False
            if size not in max_observed or info.complexity > max_observed[size]:
                max_observed[size] = info.complexity
    return SweepReport(
        kind=kind,
        n=n,
        samples=samples,
        seed=seed,
        checked=checked,
        max_observed=max_observed,
        violations=tuple(violations),
        witness_attains=witness_attains,
        skipped=tuple(skipped),
    )
