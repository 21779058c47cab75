"""Witness DFA families attaining the worst-case atom bounds per language class.

Each family is emitted exactly as defined, including the reduced alphabets of
the small-n special cases.  All witnesses are minimal, use states 1..n with
initial state 1 and final state n, and letters named a, b, c, ... in order.
"""

from __future__ import annotations

from enum import Enum

from .dfa import Dfa, Transformation


class WitnessClass(Enum):
    REGULAR = "regular"
    RIGHT_IDEAL = "right"
    LEFT_IDEAL = "left"
    TWO_SIDED_IDEAL = "two-sided"


def regular_witness(n: int) -> Dfa:
    """Most complex regular language on n states: a=(1..n), b=(1,2), c=(n->1).

    For n=2 the letters a and b coincide, so the alphabet is {a, c}.
    """
    if n < 2:
        raise ValueError("regular witness requires n >= 2")
    a = Transformation.cycle(n, range(1, n + 1))
    c = Transformation.unitary(n, n, 1)
    if n == 2:
        return Dfa(n, ("a", "c"), {"a": a, "c": c}, 1, frozenset({n}))
    b = Transformation.cycle(n, (1, 2))
    return Dfa(n, ("a", "b", "c"), {"a": a, "b": b, "c": c}, 1, frozenset({n}))


def right_ideal_witness(n: int) -> Dfa:
    """Most complex right ideal: a=(1..n-1), b=(2..n-1), c=(n-1->1), d=(n-1->n).

    Small cases: n=3 drops b; n=2 recognizes aa*; n=1 recognizes a*.
    """
    if n < 1:
        raise ValueError("right ideal witness requires n >= 1")
    if n == 1:
        return Dfa(1, ("a",), {"a": Transformation.identity(1)}, 1, frozenset({1}))
    if n == 2:
        return Dfa(2, ("a",), {"a": Transformation((2, 2))}, 1, frozenset({2}))
    a = Transformation.cycle(n, range(1, n))
    c = Transformation.unitary(n, n - 1, 1)
    d = Transformation.unitary(n, n - 1, n)
    if n == 3:
        return Dfa(n, ("a", "c", "d"), {"a": a, "c": c, "d": d}, 1, frozenset({n}))
    b = Transformation.cycle(n, range(2, n))
    return Dfa(
        n, ("a", "b", "c", "d"), {"a": a, "b": b, "c": c, "d": d}, 1, frozenset({n})
    )


def left_ideal_witness(n: int) -> Dfa:
    """Most complex left ideal: a=(2..n), b=(2,3), c=(n->2), d=(n->1), e=(Q->2).

    Small cases: n=3 drops b; n=2 is the three-letter DFA with a the identity,
    b constant to 2, c constant to 1.
    """
    if n < 2:
        raise ValueError("left ideal witness requires n >= 2")
    if n == 2:
        return Dfa(
            2,
            ("a", "b", "c"),
            {
                "a": Transformation.identity(2),
                "b": Transformation.constant(2, 2),
                "c": Transformation.constant(2, 1),
            },
            1,
            frozenset({2}),
        )
    a = Transformation.cycle(n, range(2, n + 1))
    c = Transformation.unitary(n, n, 2)
    d = Transformation.unitary(n, n, 1)
    e = Transformation.constant(n, 2)
    if n == 3:
        return Dfa(
            n, ("a", "c", "d", "e"), {"a": a, "c": c, "d": d, "e": e}, 1, frozenset({n})
        )
    b = Transformation.cycle(n, (2, 3))
    return Dfa(
        n,
        ("a", "b", "c", "d", "e"),
        {"a": a, "b": b, "c": c, "d": d, "e": e},
        1,
        frozenset({n}),
    )


def two_sided_ideal_witness(n: int) -> Dfa:
    """Most complex two-sided ideal: a=(2..n-1), b=(2,3), c=(n-1->2),
    d=(n-1->1), e=(Q_{n-1}->2), f=(2->n).

    For n=4 the letters a and b coincide but both are kept.  The small cases
    keep the three letters that stay distinct when the middle cycle empties:
    n=3 uses a=(2->1), b sending {1,2} to 2, and c=(2->3); n=2 degenerates
    further, with a and c the identity and b constant to 2.
    """
    if n < 2:
        raise ValueError("two-sided ideal witness requires n >= 2")
    if n == 2:
        return Dfa(
            2,
            ("a", "b", "c"),
            {
                "a": Transformation.identity(2),
                "b": Transformation.constant(2, 2),
                "c": Transformation.identity(2),
            },
            1,
            frozenset({2}),
        )
    if n == 3:
        return Dfa(
            3,
            ("a", "b", "c"),
            {
                "a": Transformation.unitary(3, 2, 1),
                "b": Transformation((2, 2, 3)),
                "c": Transformation.unitary(3, 2, 3),
            },
            1,
            frozenset({3}),
        )
    a = Transformation.cycle(n, range(2, n))
    b = Transformation.cycle(n, (2, 3))
    c = Transformation.unitary(n, n - 1, 2)
    d = Transformation.unitary(n, n - 1, 1)
    e = Transformation(tuple(2 if q < n else q for q in range(1, n + 1)))
    f = Transformation.unitary(n, 2, n)
    return Dfa(
        n,
        ("a", "b", "c", "d", "e", "f"),
        {"a": a, "b": b, "c": c, "d": d, "e": e, "f": f},
        1,
        frozenset({n}),
    )


_BUILDERS = {
    WitnessClass.REGULAR: regular_witness,
    WitnessClass.RIGHT_IDEAL: right_ideal_witness,
    WitnessClass.LEFT_IDEAL: left_ideal_witness,
    WitnessClass.TWO_SIDED_IDEAL: two_sided_ideal_witness,
}


def witness(kind: WitnessClass, n: int) -> Dfa:
    """The witness DFA of the given class and complexity."""
    return _BUILDERS[kind](n)
