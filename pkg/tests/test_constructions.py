import pytest

from planarc5.constructions.families import (
    ConstructionSpec,
    Family,
    apex_classes,
    apex_tripartite,
    build,
    expected_count,
    k2_book,
)
from planarc5.counting.cycles import count_c4, count_c5
from planarc5.errors import ConstructionError
from planarc5.graphs.base import is_simple
from planarc5.planarity.embedding import is_planar


@pytest.mark.parametrize("n", [7, 10, 13, 16, 19, 31, 301])
def test_apex_tripartite_count(n):
    g = apex_tripartite(n)
    assert is_simple(g)
    assert count_c5(g, induced=True) == (n - 4) ** 2 // 3 == expected_count(Family.APEX_TRIPARTITE, n)


@pytest.mark.parametrize("n", [4, 6, 10, 100])
def test_k2_book_count(n):
    g = k2_book(n)
    assert is_simple(g)
    assert count_c4(g, induced=True) == (n * n - 5 * n + 6) // 2 == expected_count(Family.K2_BOOK, n)


@pytest.mark.parametrize("n", [7, 10, 13, 31])
def test_constructions_are_planar(n):
    assert is_planar(apex_tripartite(n))
    assert is_planar(k2_book(n))


def test_apex_tripartite_shape():
    g = apex_tripartite(10)
    a, b, c = apex_classes(10)
    assert g.degree(0) == 6
    assert g.m == 3 + 2 * 6
    assert all(g.neighbors(x) == [0, 1] for x in a)
    assert all(g.neighbors(x) == [0, 3] for x in c)


@pytest.mark.parametrize("n", [4, 6, 8, 9])
def test_apex_tripartite_rejects_bad_sizes(n):
    with pytest.raises(ConstructionError):
        apex_tripartite(n)


def test_k2_book_rejects_small_n():
    with pytest.raises(ConstructionError):
        k2_book(3)


def test_build_attaches_expected_count():
    g, spec = build("apex_tripartite", 13)
    assert spec == ConstructionSpec(family=Family.APEX_TRIPARTITE, n=13, expected_count=27, objective="induced_c5")
    assert g.n == 13
    _, spec = build(Family.K2_BOOK, 10)
    assert spec.expected_count == 28
    assert spec.objective == "induced_c4"
    with pytest.raises(ConstructionError):
        build("petersen", 10)
