import itertools

import pytest

from multipoles.analysis import (AnalysisVerdict, Kind, complete_implies_connected_check, embeddings,
                                 first_disjoint_ordering, forest_multipoles, is_color_closed,
                                 is_color_complete, is_reducible, is_separable, junction_r_allowed,
                                 junction_state_feasibility, min_complete_order, mu_bounded,
                                 outer_parity_condition, tree_multipoles, v_lower_bound_report,
                                 verify_junction_completeness)
from multipoles.coloring import StateSet, states
from multipoles.core import (JunctionSpec, canonical_certificate, components, disjoint_union,
                             junction, make_cycle, make_free_edge, make_minimal, make_path_tree,
                             make_tree, make_vertex_pole)
from multipoles.mpole_io import parse_mpole
from oracles import petersen_two_pole


# completeness

def test_vertex_pole_is_complete():
    assert is_color_complete(make_vertex_pole()).kind is Kind.COMPLETE


def test_cycle_five_is_not_complete():
    assert is_color_complete(make_cycle(5)).kind is Kind.NOT_COMPLETE


def test_minimal_four_pole_misses_alternating_state():
    v = is_color_complete(make_minimal(4))
    assert v.kind is Kind.NOT_COMPLETE
    assert v.witness.state == (1, 2, 1, 2)


def test_complete_implies_connected():
    assert complete_implies_connected_check(6, 8)
    assert not is_color_complete(make_minimal(5)).holds
    assert len(states(make_minimal(5))) == 3


def test_only_complete_three_pole_on_small_orders():
    found = min_complete_order(3, 3)
    assert found is not None and found[0] == 1
    assert canonical_certificate(found[1]) == canonical_certificate(make_vertex_pole())


def test_no_complete_five_pole_up_to_five_vertices():
    assert min_complete_order(5, 5) is None


def test_smallest_complete_four_pole_has_eight_vertices():
    n, witness = min_complete_order(4, 8)
    assert n == 8
    assert is_color_complete(witness).holds
    assert components(witness).component_count == 1


# junctions

def test_junction_feasibility_examples():
    assert junction_state_feasibility((1, 1, 1), (1, 1, 1), 3) == (1, 1, 1)
    assert junction_state_feasibility((2, 0, 0), (1, 1, 0), 2) is None
    assert not outer_parity_condition((2, 0, 0), (1, 1, 0))
    assert junction_state_feasibility((2, 0, 0), (2, 0, 0), 2) is not None


def test_junction_feasibility_matches_parity_condition():
    comps = [c for total in range(7) for c in itertools.product(range(total + 1), repeat=3) if sum(c) == total]
    for r in (2, 3, 4, 5):
        for a, b in itertools.product(comps, repeat=2):
            assert (junction_state_feasibility(a, b, r) is not None) == outer_parity_condition(a, b)


def test_r_allowed():
    assert [r for r in range(7) if junction_r_allowed(r)] == [2, 3, 4, 5, 6]


def test_vertex_pole_junction_gives_complete_digon():
    # the two-semiedge leftovers are below the stated precondition, so join directly
    out = junction(make_vertex_pole(), make_vertex_pole(), JunctionSpec(((0, 0), (1, 1))))
    assert (out.n, out.m) == (2, 2)
    assert is_color_complete(out).holds


def test_verify_junction_completeness_four_poles():
    _, w = min_complete_order(4, 8)
    for pairs in [((0, 0), (1, 1)), ((2, 3), (3, 0))]:
        assert verify_junction_completeness(w, w, JunctionSpec(pairs))


def test_verify_junction_rejects_r_one():
    _, w = min_complete_order(4, 8)
    with pytest.raises(ValueError):
        verify_junction_completeness(w, w, JunctionSpec(((0, 0),)))


def test_verify_junction_rejects_incomplete_input():
    c = make_cycle(6)
    with pytest.raises(ValueError):
        verify_junction_completeness(c, c, JunctionSpec(((0, 0), (1, 1))))


# closedness

@pytest.mark.parametrize("m, n_max, mu", [(4, 6, 2), (5, 7, 3), (6, 6, 5)])
def test_mu_bounded(m, n_max, mu):
    assert mu_bounded(m, n_max) == mu


def test_complete_is_closed_sufficient():
    _, w = min_complete_order(4, 8)
    assert is_color_closed(w).kind is Kind.CLOSED_SUFFICIENT


def test_minimal_four_pole_is_not_closed():
    v = is_color_closed(make_minimal(4), 6)
    assert v.kind is Kind.NOT_CLOSED
    # the opponent is the X-shaped tree with states 1212 and 1221
    assert canonical_certificate(v.witness.multipole) == canonical_certificate(make_tree([None, 0]))
    assert not set(states(v.witness.multipole)) & set(states(make_minimal(4)))


def test_three_state_four_pole_is_closed():
    v = is_color_closed(make_cycle(4), 8)
    assert len(states(make_cycle(4))) == 3
    assert v.kind is Kind.CLOSED_SUFFICIENT


def test_free_edge_is_closed():
    assert is_color_closed(make_free_edge()).kind is Kind.CLOSED_SUFFICIENT


def test_bounded_label_prints_its_bound():
    v = AnalysisVerdict(Kind.CLOSED_UP_TO_BOUND, bound_meta={"m": 7, "n_max": 8})
    assert v.holds and v.label == "closed up to n<=8"


def test_first_disjoint_ordering():
    target = states(make_minimal(4))
    assert first_disjoint_ordering(states(make_tree([None, 0])), target) == (0, 1, 2, 3)
    assert first_disjoint_ordering(target, target) is None


# reducibility and separability

def test_cycle_four_reduces_to_two_free_edges():
    v = is_reducible(make_cycle(4))
    assert v.kind is Kind.REDUCIBLE
    w = v.witness.multipole
    assert canonical_certificate(w) == canonical_certificate(make_minimal(4))
    assert states(w).issubset(states(make_cycle(4)))


def test_cycle_five_irreducible():
    assert is_reducible(make_cycle(5)).kind is Kind.IRREDUCIBLE


def test_tree_five_poles_irreducible():
    for t in tree_multipoles(5):
        assert is_reducible(t).kind is Kind.IRREDUCIBLE


def test_path_plus_free_edge_irreducible():
    assert is_reducible(disjoint_union(make_path_tree(3), make_free_edge())).kind is Kind.IRREDUCIBLE


def test_uncolorable_is_irreducible_with_note():
    v = is_reducible(petersen_two_pole())
    assert v.kind is Kind.IRREDUCIBLE and v.note == "uncolorable"


def test_forests_not_separable():
    for m in range(2, 7):
        for f in forest_multipoles(m):
            assert is_separable(f).kind is Kind.NOT_SEPARABLE


def test_cycle_four_separable_into_two_digons():
    v = is_separable(make_cycle(4))
    assert v.kind is Kind.SEPARABLE
    w = v.witness.multipole
    assert (w.n, components(w).component_count) == (4, 2)
    assert states(w).issubset(states(make_cycle(4)))


def test_vertex_pole_not_separable():
    assert is_separable(make_vertex_pole()).kind is Kind.NOT_SEPARABLE


def test_embeddings_respect_order():
    sub = StateSet.from_states(4, [(1, 1, 1, 1), (1, 1, 2, 2)])
    sup = states(make_cycle(4))
    perms = list(embeddings(sub, sup))
    assert perms == sorted(perms)
    for p in perms:
        for s in sub:
            assert tuple(s[i] for i in p) in sup


def test_v_report():
    report = v_lower_bound_report(6)
    rows = {r["m"]: r for r in report["rows"]}
    assert report["ok"]
    assert rows[5]["implied_lower_bound"] == 5 == rows[5]["known_exact"]
    assert rows[4]["implied_lower_bound"] == 2 == rows[4]["known_exact"]
    assert rows[6]["implied_lower_bound"] == 6 and rows[6]["known_lower"] == 12


def test_verdict_json_embeds_witness():
    data = is_reducible(make_cycle(4)).to_json()
    assert data["verdict"] == "reducible"
    assert parse_mpole(data["witness"]["mpole"]).m == 4
