import random

import pytest

from dfatoms import InvalidDfaError, SizeMismatchError, Transformation, compose


def test_identity_fixes_everything():
    t = Transformation.identity(5)
    assert t.image == (1, 2, 3, 4, 5)
    assert t.is_identity()


def test_cycle_image():
    assert Transformation.cycle(4, (1, 2, 3, 4)).image == (2, 3, 4, 1)
    assert Transformation.cycle(4, (1, 2)).image == (2, 1, 3, 4)
    assert Transformation.cycle(5, range(2, 6)).image == (1, 3, 4, 5, 2)


def test_unitary_and_constant():
    assert Transformation.unitary(4, 4, 1).image == (1, 2, 3, 1)
    assert Transformation.constant(3, 2).image == (2, 2, 2)


def test_cycle_rejects_repeats():
    with pytest.raises(InvalidDfaError):
        Transformation.cycle(3, (1, 1))


def test_image_entries_validated():
    with pytest.raises(InvalidDfaError):
        Transformation((1, 4, 2))
    with pytest.raises(InvalidDfaError):
        Transformation((0, 1))
    with pytest.raises(InvalidDfaError):
        Transformation(())


def test_compose_identity_is_neutral():
    one = Transformation.identity(4)
    t = Transformation((2, 2, 4, 1))
    assert compose(one, t) == t
    assert compose(t, one) == t


def test_compose_three_cycle_squared():
    c = Transformation.cycle(3, (1, 2, 3))
    assert compose(c, c).image == (3, 1, 2)


def test_compose_constant_absorbs():
    swap = Transformation.cycle(3, (1, 2))
    const = Transformation.constant(3, 1)
    assert compose(swap, const) == const


def test_compose_applies_left_argument_first():
    t = Transformation((2, 3, 3))
    u = Transformation((1, 1, 2))
    # i -> u(t(i))
    assert compose(t, u).image == (1, 2, 2)


def test_compose_size_mismatch():
    with pytest.raises(SizeMismatchError):
        compose(Transformation.identity(3), Transformation.identity(4))


def test_compose_associative_and_identity_neutral():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(1, 8)
        ts = [
            Transformation(tuple(rng.randint(1, n) for _ in range(n)))
            for _ in range(3)
        ]
        a, b, c = ts
        assert compose(compose(a, b), c) == compose(a, compose(b, c))
        one = Transformation.identity(n)
        assert compose(one, a) == a
        assert compose(a, one) == a
