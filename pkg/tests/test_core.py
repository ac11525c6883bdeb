import math

import pytest

from multipoles.coloring import state_count, states
from multipoles.core import (Attached, CertificateMode, FreePaired, InvalidMultipole, JunctionSpec,
                             Multipole, canonical_certificate, check, components, cut_edge,
                             delete_semiedge_vertex, disjoint_union, is_forest, join, junction,
                             make_cycle, make_free_edge, make_minimal, make_path_tree, make_tree,
                             make_vertex_pole, relabel, reorder_semiedges, semiedge_distance,
                             validate)
from oracles import brute_states, iso_key


def test_free_edge():
    e = make_free_edge()
    assert (e.n, e.m) == (0, 2)
    assert validate(e) == []
    assert states(e).to_lines() == ["11"]


def test_vertex_pole():
    v = make_vertex_pole()
    assert (v.n, v.m) == (1, 3)
    assert states(v).to_lines() == ["123"]


def test_minimal_shapes():
    m4 = make_minimal(4)
    assert (m4.n, m4.m) == (0, 4)
    assert components(m4).component_count == 2
    m5 = make_minimal(5)
    assert (m5.n, m5.m) == (1, 5)
    assert iso_key(m5) == iso_key(disjoint_union(make_vertex_pole(), make_free_edge()))
    assert state_count(make_minimal(6)) == 5


def test_make_tree_single_vertex_is_vertex_pole():
    assert make_tree([None]) == make_vertex_pole()


def test_make_tree_paths():
    x = make_tree([None, 0])
    assert (x.n, x.m) == (2, 4)
    assert state_count(x) == 2
    assert state_count(make_path_tree(4)) == 8


@pytest.mark.parametrize("parents", [[None, None], [0, 0], [None, 0, 5], [None, 0, 0, 0, 0]])
def test_make_tree_rejects_bad_parent_lists(parents):
    with pytest.raises(InvalidMultipole):
        make_tree(parents)


def test_cycles():
    c3 = make_cycle(3)
    assert states(c3).to_lines() == ["123"]
    assert make_cycle(5).n == 5
    assert state_count(make_cycle(6)) == 11


def test_disjoint_union():
    three = disjoint_union(disjoint_union(make_free_edge(), make_free_edge()), make_free_edge())
    assert state_count(three) == 5
    a, b = make_cycle(4), make_path_tree(3)
    assert components(disjoint_union(a, b)).component_count == 2


def test_join_free_edge_with_itself_is_empty():
    out = join(make_free_edge(), 0, 1)
    assert (out.n, out.m, out.edges) == (0, 0, ())


def test_join_free_edge_absorbed_by_vertex_pole():
    mp = disjoint_union(make_vertex_pole(), make_free_edge())
    out = join(mp, 0, 3)
    assert (out.n, out.m) == (1, 3)
    assert states(out) == states(make_vertex_pole())


def test_digon_is_color_equivalent_to_free_edge():
    x = make_tree([None, 0])
    digon = join(x, 0, 2)  # one semiedge from each endpoint
    assert (digon.n, digon.m) == (2, 2)
    assert digon.edges.count((0, 1)) == 2
    assert states(digon) == states(make_free_edge())


def test_join_rejects_loop():
    with pytest.raises(InvalidMultipole):
        join(make_vertex_pole(), 0, 1)


def test_junction():
    a, b = make_cycle(4), make_path_tree(3)
    assert junction(a, b, JunctionSpec(())) == disjoint_union(a, b)
    out = junction(a, b, JunctionSpec(((0, 0), (1, 4))))
    assert out.m == (a.m - 2) + (b.m - 2)
    assert out.n == a.n + b.n


def test_junction_spec_requires_distinct_refs():
    with pytest.raises(InvalidMultipole):
        JunctionSpec(((0, 1), (0, 2)))


def test_cut_edge_of_x_gives_two_vertex_poles():
    out = cut_edge(make_tree([None, 0]), (0, 1))
    assert out.m == 6
    assert components(out).component_count == 2
    # one canonical state for the first pole times all 3! colorings of the second
    assert state_count(out) == 6
    assert set(states(out)) == brute_states(out)


def test_cut_cycle_edge_gives_path_tree():
    out = cut_edge(make_cycle(4), (1, 2))
    assert is_forest(out) and out.m == 6
    assert state_count(out) == 8


def test_cut_then_join_restores_structure():
    c = make_cycle(5)
    out = cut_edge(c, (2, 3))
    back = join(out, out.m - 2, out.m - 1)
    assert iso_key(back) == iso_key(c)


def test_cut_missing_edge():
    with pytest.raises(InvalidMultipole):
        cut_edge(make_cycle(5), (0, 2))


def test_delete_semiedge_vertex_on_vertex_pole():
    out = delete_semiedge_vertex(make_vertex_pole(), 0)
    assert out == make_free_edge()


@pytest.mark.parametrize("eps", range(5))
def test_delete_semiedge_vertex_on_cycle(eps):
    out = delete_semiedge_vertex(make_cycle(5), eps)
    assert (out.n, out.m) == (4, 6)
    assert is_forest(out) and components(out).component_count == 1
    assert iso_key(out) == iso_key(make_path_tree(4))


def test_delete_semiedge_vertex_rejects_free_half():
    with pytest.raises(InvalidMultipole):
        delete_semiedge_vertex(make_minimal(4), 0)


def test_semiedge_distance():
    x = make_tree([None, 0])
    assert semiedge_distance(x, 0, 1) == 0
    assert semiedge_distance(x, 0, 2) == 1
    two = disjoint_union(make_vertex_pole(), make_vertex_pole())
    assert semiedge_distance(two, 0, 3) == math.inf
    with pytest.raises(InvalidMultipole):
        semiedge_distance(make_free_edge(), 0, 1)


def test_components():
    assert components(make_minimal(6)).component_count == 3
    assert components(make_cycle(7)).component_count == 1
    summary = components(disjoint_union(make_path_tree(3), make_free_edge()))
    assert summary.component_count == 2
    assert [sorted(s) for s in summary.semiedge_sets] == [[0, 1, 2, 3, 4], [5, 6]]


def test_certificate_rotation_invariant():
    c = make_cycle(5)
    rotated = reorder_semiedges(relabel(c, [1, 2, 3, 4, 0]), [4, 0, 1, 2, 3])
    assert canonical_certificate(c) == canonical_certificate(rotated)


def test_certificate_separates_minimal_and_x():
    assert canonical_certificate(make_minimal(4)) != canonical_certificate(make_tree([None, 0]))


def test_certificate_caterpillars_against_brute_force():
    path = make_path_tree(4)
    star = make_tree([None, 0, 0, 0])
    assert iso_key(path) != iso_key(star)
    assert canonical_certificate(path) != canonical_certificate(star)


def test_respect_mode_sees_semiedge_order():
    x = make_tree([None, 0])
    swapped = reorder_semiedges(x, [0, 2, 1, 3])
    assert canonical_certificate(x) == canonical_certificate(swapped)
    assert (canonical_certificate(x, CertificateMode.RESPECT_SEMIEDGE_ORDER)
            != canonical_certificate(swapped, CertificateMode.RESPECT_SEMIEDGE_ORDER))


def test_validate_messages():
    assert validate(make_cycle(6)) == []
    degree_two = Multipole(1, (), (Attached(0), Attached(0)))
    assert any("cubic condition" in p for p in validate(degree_two))
    odd = Multipole(2, ((0, 1),), (Attached(0), Attached(0), Attached(1), Attached(1), Attached(1)))
    assert any("cubic condition" in p for p in validate(odd))
    lonely = Multipole(1, (), (FreePaired(1), FreePaired(0)))
    assert any("parity" in p for p in validate(lonely))
    with pytest.raises(InvalidMultipole):
        check(degree_two)


def test_validate_rejects_loops_and_triple_edges():
    loop = Multipole(1, ((0, 0),), (Attached(0),))
    assert any("loop" in p for p in validate(loop))
    triple = Multipole(2, ((0, 1),) * 3, ())
    assert any("multiplicity" in p for p in validate(triple))
