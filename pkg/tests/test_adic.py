"""Successor dynamics on root paths and symmetric-measure bookkeeping."""

import pytest

from fractions import Fraction
from math import factorial

from euleradic import (
    BudgetError,
    IncomingEdge,
    MaximalPathError,
    ORIGIN,
    Vertex,
    compare,
    cylinder_frequency,
    cylinder_measure,
    dim_between,
    enumerate_paths,
    incoming_order,
    maximal_path,
    minimal_path,
    orbit,
    parse_path,
    successor,
)


def test_incoming_order_examples():
    assert incoming_order((1, 1)) == [
        IncomingEdge(Vertex(0, 1), 1),
        IncomingEdge(Vertex(0, 1), 2),
        IncomingEdge(Vertex(1, 0), 1),
        IncomingEdge(Vertex(1, 0), 2),
    ]
    assert incoming_order((1, 0)) == [IncomingEdge(Vertex(0, 0), 1)]
    assert incoming_order((0, 3)) == [IncomingEdge(Vertex(0, 2), 1)]
    with pytest.raises(ValueError):
        incoming_order((0, 0))


def test_compare_total_order_at_1_1():
    a = parse_path("(0,0):V1,H1")
    b = parse_path("(0,0):V1,H2")
    c = parse_path("(0,0):H1,V1")
    d = parse_path("(0,0):H1,V2")
    order = [a, b, c, d]
    for m, x in enumerate(order):
        assert compare(x, x) == 0
        for y in order[m + 1:]:
            assert compare(x, y) == -1
            assert compare(y, x) == 1


def test_compare_requires_common_end():
    with pytest.raises(ValueError):
        compare(parse_path("(0,0):H1"), parse_path("(0,0):V1"))


def test_compare_is_antisymmetric_at_2_2():
    paths = list(enumerate_paths(ORIGIN, (2, 2)))
    for x in paths:
        for y in paths:
            assert compare(x, y) == -compare(y, x)
            assert (compare(x, y) == 0) == (x == y)


def test_extreme_paths():
    assert minimal_path((1, 1)) == parse_path("(0,0):V1,H1")
    assert maximal_path((1, 1)) == parse_path("(0,0):H1,V2")
    assert minimal_path((3, 0)) == parse_path("(0,0):H1,H1,H1")
    assert maximal_path((3, 0)) == parse_path("(0,0):H1,H1,H1")
    assert minimal_path(ORIGIN) == parse_path("(0,0):")


def test_successor_steps_through_the_order():
    assert successor(minimal_path((1, 1))) == parse_path("(0,0):V1,H2")
    with pytest.raises(MaximalPathError):
        successor(maximal_path((1, 1)))
    seen = {minimal_path((2, 1))}
    x = minimal_path((2, 1))
    while x != maximal_path((2, 1)):
        x = successor(x)
        seen.add(x)
    assert len(seen) == 11


def test_orbit_exact_at_1_1():
    assert list(orbit((1, 1))) == [
        parse_path("(0,0):V1,H1"),
        parse_path("(0,0):V1,H2"),
        parse_path("(0,0):H1,V1"),
        parse_path("(0,0):H1,V2"),
    ]


def test_orbits_up_to_level_four():
    for n in range(5):
        for x in range(n + 1):
            v = (x, n - x)
            paths = list(orbit(v))
            assert len(paths) == dim_between(ORIGIN, v)
            assert all(compare(a, b) == -1 for a, b in zip(paths, paths[1:]))
            assert set(paths) == set(enumerate_paths(ORIGIN, v))


def test_orbit_budget():
    with pytest.raises(BudgetError):
        list(orbit((6, 6), max_enum=10))


def test_cylinder_measure():
    assert cylinder_measure(0) == 1
    assert cylinder_measure(1) == Fraction(1, 2)
    assert cylinder_measure(4) == Fraction(1, 120)
    with pytest.raises(ValueError):
        cylinder_measure(-1)


def test_measure_normalization():
    for n in range(8):
        total = sum(dim_between(ORIGIN, (x, n - x)) for x in range(n + 1))
        assert total * cylinder_measure(n) == 1
        assert total == factorial(n + 1)


def test_cylinder_frequency():
    assert cylinder_frequency(parse_path("(0,0):H1"), (1, 1)) == Fraction(1, 2)
    assert cylinder_frequency(parse_path("(0,0):"), (3, 4)) == 1
    # frequency depends on the prefix only through its end vertex
    a = parse_path("(0,0):H1,V1")
    b = parse_path("(0,0):V1,H2")
    for v in [(2, 2), (3, 5), (6, 6)]:
        assert cylinder_frequency(a, v) == cylinder_frequency(b, v)


def test_cylinder_frequency_approaches_measure():
    prefix = parse_path("(0,0):H1,V1")
    gap_near = abs(cylinder_frequency(prefix, (10, 10)) - cylinder_measure(2))
    gap_far = abs(cylinder_frequency(prefix, (40, 40)) - cylinder_measure(2))
    assert gap_far < gap_near < Fraction(1, 10)
