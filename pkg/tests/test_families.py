from __future__ import annotations

import math

import pytest

from ecix.canon import canonical_key, is_isomorphic
from ecix.extremal import clique_path_partial_edges
from ecix.families import FAMILIES, FamilyError, FamilySpec, closed_eci, construct, is_degenerate
from ecix.graph import dominating_count, eci, eccentricities, is_connected, pending_count


def F(name, n, **kw):
    return construct(FamilySpec(name, n, **kw))


def test_pendant_star_examples():
    h83 = F("pendant-star", 8, p=3)
    assert (h83.n, pending_count(h83), eci(h83)) == (8, 3, 29)
    assert closed_eci(FamilySpec("pendant-star", 8, p=3)) == 29
    assert eci(F("pendant-star", 9, p=3)) == closed_eci(FamilySpec("pendant-star", 9, p=3)) == 36
    assert closed_eci(FamilySpec("pendant-star", 5, p=2)) == 16


def test_small_isomorphisms():
    assert eci(F("complete-split", 5, x=2)) == 20
    m4 = F("matching-reduced", 4)
    assert is_isomorphic(m4, F("cycle", 4)) and eci(m4) == 16
    assert is_isomorphic(F("pendant-star", 4, p=0), F("complete-split", 4, x=2))
    assert dominating_count(F("pendant-star", 4, p=0)) == 2
    for n in range(4, 12):
        for d in range(2, n - 1):
            assert is_isomorphic(F("clique-path-partial", n, d=d, k=n - d - 1), F("clique-path", n, d=d))


def test_closed_form_examples():
    assert closed_eci(FamilySpec("complete-split", 6, x=2)) == 26
    assert closed_eci(FamilySpec("complete-split", 7, x=2)) == 32
    assert closed_eci(FamilySpec("cycle", 5)) == 20
    assert closed_eci(FamilySpec("complete", 5)) == 20
    for n in range(3, 30):
        assert closed_eci(FamilySpec("complete-split", n, x=1)) == 3 * (n - 1)
    assert closed_eci(FamilySpec("complete-split", 5, x=4)) is None
    assert closed_eci(FamilySpec("wheel", 6)) is None
    assert closed_eci(FamilySpec("path", 6)) is None


def test_pendant_star_4_0_is_off_formula():
    # the two-case formula would say 17; the graph is K4 minus an edge with index 14
    assert eci(F("pendant-star", 4, p=0)) == 14
    assert closed_eci(FamilySpec("pendant-star", 4, p=0)) is None


def _all_specs(n):
    yield FamilySpec("complete", n)
    yield FamilySpec("path", n)
    yield FamilySpec("cycle", n)
    yield FamilySpec("wheel", n)
    yield FamilySpec("matching-reduced", n)
    for x in range(1, n):
        yield FamilySpec("complete-split", n, x=x)
    for p in range(n - 2):
        yield FamilySpec("pendant-star", n, p=p)
    for d in range(2, n - 1):
        yield FamilySpec("clique-path", n, d=d)
    for d in range(2, n):
        for k in range(n - d):
            yield FamilySpec("clique-path-partial", n, d=d, k=k)
    if n >= 5:
        for i in range(1, n - 3):
            yield FamilySpec("conjecture-exception", n, i=i)


def test_closed_form_equals_constructed_index_4_to_50():
    checked = 0
    for n in range(4, 51):
        for spec in _all_specs(n):
            g = construct(spec)
            assert g.n == n and is_connected(g)
            value = closed_eci(spec)
            if value is not None:
                assert value == eci(g), spec
                checked += 1
    assert checked > 2000


def test_pendant_star_counts():
    for n in range(5, 40):
        for p in range(n - 2):
            g = F("pendant-star", n, p=p)
            assert pending_count(g) == p
            assert dominating_count(g) == 1
    assert dominating_count(F("pendant-star", 4, p=1)) == 1


def test_clique_path_partial_edge_identity_up_to_20():
    for n in range(3, 21):
        for d in range(2, n):
            for k in range(n - d):
                g = F("clique-path-partial", n, d=d, k=k)
                assert g.m == clique_path_partial_edges(n, d, k)
                # inverting: k = m - C(n-D+1, 2) - D + 1
                assert g.m - math.comb(n - d + 1, 2) - d + 1 == k


def test_wheel_and_matching_reduced():
    for n in range(5, 40):
        assert eci(F("wheel", n)) == 7 * (n - 1)
    assert eci(F("wheel", 5)) == eci(F("matching-reduced", 5)) == 28
    for n in range(4, 40, 2):
        g = F("matching-reduced", n)
        assert g.degrees() == [n - 2] * n
        assert eccentricities(g) == [2] * n
        assert eci(g) == 2 * n * (n - 2)
    for n in range(5, 40, 2):
        g = F("matching-reduced", n)
        assert dominating_count(g) == 0
        assert g.m == math.comb(n, 2) - (n - 1) // 2 - 1


def test_wheel_4_is_degenerate():
    spec = FamilySpec("wheel", 4)
    assert is_degenerate(spec)
    assert canonical_key(construct(spec)) == canonical_key(F("complete", 4))


def test_path_with_empty_clique():
    assert construct(FamilySpec("clique-path-partial", 9, d=8, k=0)) == F("path", 9)


def test_exception_family_shape():
    n = 8
    for i in range(1, n - 3):
        g = F("conjecture-exception", n, i=i)
        assert g.m == math.comb(n - 4, 2) + 3 + 3 * (n - 4)
    # i = n-4 puts every clique vertex on u0,u1,u2: that is g(n,3,n-4)
    assert is_isomorphic(F("conjecture-exception", n, i=n - 4), F("clique-path-partial", n, d=3, k=n - 4))


def test_aliases():
    assert FamilySpec("H", 6, p=1).name == "pendant-star"
    assert FamilySpec("g", 6, d=3, k=1).label() == "clique-path-partial(6,3,1)"


@pytest.mark.parametrize(
    "name, n, kw, match",
    [
        ("pendant-star", 6, dict(p=4), "p <= n-3"),
        ("pendant-star", 3, dict(p=0), "n >= 4"),
        ("complete-split", 5, dict(x=5), "x <= n-1"),
        ("complete-split", 5, dict(x=0), "1 <= x"),
        ("clique-path", 6, dict(d=5), "d <= n-2"),
        ("clique-path-partial", 6, dict(d=3, k=3), "k <= n-d-1"),
        ("conjecture-exception", 6, dict(i=3), "i <= n-4"),
        ("conjecture-exception", 6, dict(i=0), "1 <= i"),
        ("cycle", 2, {}, "n >= 3"),
        ("matching-reduced", 3, {}, "n >= 4"),
        ("wheel", 3, {}, "n >= 4"),
        ("pendant-star", 6, {}, "requires parameter p"),
        ("cycle", 6, dict(p=1), "takes no parameter p"),
        ("petersen", 10, {}, "unknown family"),
    ],
)
def test_rejects_bad_parameters(name, n, kw, match):
    with pytest.raises(FamilyError, match=match):
        FamilySpec(name, n, **kw)


def test_every_family_has_a_constructor():
    for name in FAMILIES:
        specs = [s for s in _all_specs(7) if s.name == name]
        assert specs, name
        construct(specs[0])
