import pytest

from multipoles.catalog import (CatalogBoundsError, CatalogQuery, connected_pieces, count,
                                generate, generate_up_to)
from multipoles.core import (canonical_certificate, components, disjoint_union, is_forest, join,
                             make_free_edge, make_minimal, make_tree, make_vertex_pole, validate)
from oracles import brute_catalog_count, iso_key


def _certs(entries):
    return [canonical_certificate(e.multipole) for e in entries]


def test_vertex_pole_only_three_pole_on_one_vertex():
    entries = generate(CatalogQuery(3, 1))
    assert _certs(entries) == [canonical_certificate(make_vertex_pole())]


def test_free_edge_only_two_pole_without_vertices():
    entries = generate(CatalogQuery(2, 0))
    assert _certs(entries) == [canonical_certificate(make_free_edge())]


def test_four_poles_on_two_vertices():
    entries = generate(CatalogQuery(4, 2))
    certs = set(_certs(entries))
    digon = join(make_tree([None, 0]), 0, 2)
    assert canonical_certificate(make_tree([None, 0])) in certs
    assert canonical_certificate(disjoint_union(digon, make_free_edge())) in certs
    assert len(entries) == brute_catalog_count(4, 2) == 2


def test_generate_up_to_small_cases():
    assert _certs(generate_up_to(4, 0)) == [canonical_certificate(make_minimal(4))]
    assert _certs(generate_up_to(5, 1)) == [canonical_certificate(make_minimal(5))]


def test_five_poles_colorable_against_oracle():
    got = len(generate_up_to(5, 3, colorable_only=True))
    assert got == sum(brute_catalog_count(5, n, colorable_only=True) for n in (1, 3))


@pytest.mark.parametrize("m, n", [(1, 3), (1, 5), (2, 2), (2, 4), (3, 3), (3, 5), (4, 4), (5, 5), (6, 4)])
def test_counts_against_labeled_oracle(m, n):
    assert count(CatalogQuery(m, n)) == brute_catalog_count(m, n)


def test_entries_are_valid_distinct_and_sorted():
    for m in range(1, 7):
        for n in range(m % 2, 7, 2):
            entries = generate(CatalogQuery(m, n))
            certs = _certs(entries)
            assert certs == sorted(certs)
            assert len(set(certs)) == len(certs)
            assert len({iso_key(e.multipole) for e in entries}) == len(entries)
            for e in entries:
                assert validate(e.multipole) == []
                assert (e.multipole.m, e.multipole.n) == (m, n)


def test_connected_and_colorable_filters():
    q = CatalogQuery(4, 4)
    everything = generate(q)
    connected = generate(CatalogQuery(4, 4, connected_only=True))
    colorable = generate(CatalogQuery(4, 4, colorable_only=True))
    assert {e.certificate for e in connected} == {
        e.certificate for e in everything if components(e.multipole).component_count == 1}
    assert {e.certificate for e in colorable} == {e.certificate for e in everything if e.state_set}


def test_generation_is_deterministic():
    a = [e.certificate for e in generate(CatalogQuery(5, 5))]
    b = [e.certificate for e in generate(CatalogQuery(5, 5))]
    assert a == b


def test_tree_entries():
    trees = [e for e in generate(CatalogQuery(6, 4, connected_only=True)) if is_forest(e.multipole)]
    assert len(trees) == 2  # path and star on four vertices


def test_piece_counts_are_stable():
    assert [len(connected_pieces(n, s)) for n, s in [(1, 3), (2, 2), (2, 4)]] == [1, 1, 1]


@pytest.mark.parametrize("kwargs", [
    {"m": 3, "n": 2},
    {"m": 0, "n": 0},
    {"m": 9, "n": 1},
    {"m": 2, "n": 12},
])
def test_bounds_are_enforced(kwargs):
    with pytest.raises(CatalogBoundsError):
        CatalogQuery(**kwargs)


def test_bounds_can_be_raised():
    assert CatalogQuery(9, 1, max_m=9).m == 9
