"""Exit criteria of the package, runnable from pytest and from ``mp verify-all``.

Each criterion returns a :class:`CriterionResult` whose ``detail`` is
deterministic (no timings), so reports are byte-stable.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import formulas
from .analysis import (Kind, complete_entries, first_disjoint_ordering, forest_multipoles,
                       is_color_closed, is_reducible, junction_r_allowed, junction_state_feasibility,
                       min_complete_order, mu_bounded, outer_parity_condition, tree_multipoles,
                       verify_junction_completeness)
from .catalog import generate_up_to
from .coloring import (COLORS, KempeRequest, enumerate_colorings, kempe_interchange,
                       parity_check, realizable, states, verify_coloring)
from .core import (JunctionSpec, Multipole, canonical_certificate, components,
                   disjoint_union, is_forest, make_cycle, make_free_edge, make_minimal)

# catalog bounds used by the criteria that say "the catalog"
PROPERTY_N_MAX = 10
FREE_EDGE_N_MAX = 7
CLOSED_BOUND = 8


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.title}: {self.detail}"


def _brute_admissible_count(m: int) -> int:
    total = 0
    for t in itertools.product(COLORS, repeat=m):
        # canonical: colors first appear in the order 1, 2, 3
        firsts = [c for k, c in enumerate(t) if c not in t[:k]]
        if firsts != list(COLORS[:len(firsts)]):
            continue
        if parity_check(t):
            total += 1
    return total


def criterion_sigma() -> CriterionResult:
    bad = [m for m in range(1, 13) if formulas.sigma(m) != _brute_admissible_count(m)]
    anchors = (formulas.sigma(1), formulas.sigma(4), formulas.sigma(5), formulas.sigma(6))
    ok = not bad and anchors == (0, 4, 10, 31)
    return CriterionResult(1, "sigma oracle m=1..12", ok, f"mismatches={bad} anchors={anchors}")


def criterion_rho() -> CriterionResult:
    got = [len(states(make_minimal(m))) for m in range(2, 13)]
    want = [formulas.rho(m) for m in range(2, 13)]
    ok = got == want and formulas.rho(2) == 1 and formulas.rho(6) == 5
    return CriterionResult(2, "rho oracle m=2..12", ok, f"counts={got}")


def criterion_trees() -> CriterionResult:
    bad = []
    checked = 0
    for m in range(3, 9):
        for t in tree_multipoles(m):
            checked += 1
            if len(states(t)) != formulas.tree_count(m):
                bad.append((m, len(states(t))))
    return CriterionResult(3, "tree m-poles have 2^(m-3) states, m<=8", not bad and checked > 0,
                           f"trees={checked} mismatches={bad}")


def criterion_cycles() -> CriterionResult:
    got = [len(states(make_cycle(m))) for m in range(3, 15)]
    want = [formulas.cycle_count(m) for m in range(3, 15)]
    return CriterionResult(4, "cycle counts m=3..14", got == want, f"counts={got}")


def criterion_forests() -> CriterionResult:
    bad = []
    checked = 0
    for m in range(2, 9):
        for f in forest_multipoles(m):
            checked += 1
            if len(states(f)) != formulas.forest_count(f.n, m):
                bad.append((f.n, m))
    triangle_bad = []
    for m in range(2, 13):
        for n in range(m % 2, m - 1, 2):
            closed = formulas.forest_count(n, m)
            if formulas.forest_count_recursive(n, m) != closed:
                triangle_bad.append(("recurrence", n, m))
            for k in range(0, (m - n) // 2):
                if formulas.forest_count_binomial(n, m, k) != closed:
                    triangle_bad.append(("binomial", n, m, k))
        if m % 2 == 0 and formulas.forest_count(0, m) != (3 ** (m // 2 - 1) + 1) // 2:
            triangle_bad.append(("f(0,2k+2)", m))
        if m % 2 == 1 and m >= 3 and formulas.forest_count(1, m) != 3 ** ((m - 3) // 2):
            triangle_bad.append(("f(1,2k+3)", m))
    ok = not bad and not triangle_bad and checked > 0
    return CriterionResult(5, "forest triangle", ok,
                           f"forests={checked} mismatches={bad} formula_mismatches={triangle_bad}")


def criterion_mu() -> CriterionResult:
    got = (mu_bounded(4, 6), mu_bounded(5, 7), mu_bounded(6, 6))
    return CriterionResult(6, "mu(4), mu(5), mu(6)", got == (2, 3, 5), f"values={got}")


def _forbidden_cycle_patterns_ok(m: int) -> bool:
    cyc = make_cycle(m)
    for i in range(m):
        pos3 = [(i + k) % m for k in range(3)]
        pos5 = [(i + k) % m for k in range(5)]
        for a, b, c in itertools.permutations(COLORS):
            if realizable(cyc, dict(zip(pos3, (a, b, a)))):
                return False
            if realizable(cyc, dict(zip(pos5, (a, a, b, b, c)))):
                return False
    return True


def criterion_forbidden_patterns() -> CriterionResult:
    bad = [m for m in range(5, 11) if not _forbidden_cycle_patterns_ok(m)]
    return CriterionResult(7, "forbidden cycle patterns m=5..10", not bad, f"violations={bad}")


def criterion_irreducibility() -> CriterionResult:
    problems = []
    trees = forests = 0
    for m in range(2, 8):
        for t in tree_multipoles(m):
            trees += 1
            if is_reducible(t).kind is not Kind.IRREDUCIBLE:
                problems.append(("tree", m, t.n))
    for m in range(2, 7):
        for f in forest_multipoles(m):
            forests += 1
            if is_reducible(f).kind is not Kind.IRREDUCIBLE:
                problems.append(("forest", m, f.n))
    for m in (5, 6, 7):
        if is_reducible(make_cycle(m)).kind is not Kind.IRREDUCIBLE:
            problems.append(("cycle", m))
    c4 = make_cycle(4)
    v = is_reducible(c4)
    two_free = canonical_certificate(make_minimal(4))
    c4_ok = (v.kind is Kind.REDUCIBLE and v.witness is not None
             and canonical_certificate(v.witness.multipole) == two_free
             and states(v.witness.multipole).issubset(states(c4)))
    if not c4_ok:
        problems.append(("C4", v.label))
    return CriterionResult(8, "irreducibility certificates", not problems,
                           f"trees={trees} forests={forests} cycles=C5,C6,C7 C4={v.label} problems={problems}")


def criterion_free_edge_stability() -> CriterionResult:
    irreducible = 0
    problems = []
    for m in range(1, 6):
        for entry in generate_up_to(m, FREE_EDGE_N_MAX, colorable_only=True):
            if is_reducible(entry.multipole).holds:
                continue
            irreducible += 1
            if is_reducible(disjoint_union(entry.multipole, make_free_edge())).holds:
                problems.append(entry.digest)
    return CriterionResult(9, f"M irreducible => M+e irreducible (m<=5, n<={FREE_EDGE_N_MAX})",
                           not problems and irreducible > 0,
                           f"irreducible_entries={irreducible} violations={problems}")


def _junction_specs(a: Multipole, b: Multipole, r: int):
    for left in itertools.combinations(range(a.m), r):
        for right in itertools.permutations(range(b.m), r):
            yield JunctionSpec(tuple(zip(left, right)))


def criterion_junction() -> CriterionResult:
    complete = []
    orders = {}
    for m in (3, 4):
        found = min_complete_order(m, 8)
        if found is None:
            return CriterionResult(10, "junction of complete multipoles", False, f"no complete {m}-pole")
        orders[m] = found[0]
        complete += [e.multipole for e in complete_entries(m, found[0])]
    junctions = 0
    failures = 0
    for a, b in itertools.product(complete, repeat=2):
        for r in (2, 3):
            if a.m - r < 2 or b.m - r < 2:
                continue
            for spec in _junction_specs(a, b, r):
                junctions += 1
                failures += not verify_junction_completeness(a, b, spec)
    parity_mismatch = 0
    combos = 0
    for r in range(0, 7):
        for ma, mb in itertools.product(range(0, 7), repeat=2):
            for ca in _compositions(ma):
                for cb in _compositions(mb):
                    combos += 1
                    feasible = junction_state_feasibility(ca, cb, r) is not None
                    if junction_r_allowed(r) and feasible != outer_parity_condition(ca, cb):
                        parity_mismatch += 1
    ok = junctions > 0 and failures == 0 and parity_mismatch == 0
    return CriterionResult(
        10, "junction of complete multipoles", ok,
        f"n(3)={orders[3]} n(4)={orders[4]} complete={len(complete)} junctions={junctions} "
        f"failures={failures} count_combinations={combos} parity_mismatches={parity_mismatch}")


def _compositions(total: int):
    for a in range(total + 1):
        for b in range(total - a + 1):
            yield (a, b, total - a - b)


def criterion_n_lower_bound() -> CriterionResult:
    five = [n for n in (1, 3, 5) if complete_entries(5, n)]
    four = [n for n in (0, 2) if complete_entries(4, n)]
    return CriterionResult(11, "no complete 5-pole with n<=5, no complete 4-pole with n<=2",
                           not five and not four, f"complete_5={five} complete_4={four}")


def criterion_closed_four_pole() -> CriterionResult:
    target = None
    for entry in generate_up_to(4, CLOSED_BOUND, colorable_only=True):
        if len(entry.state_set) == 3:
            target = entry
            break
    if target is None:
        return CriterionResult(12, "color closed 4-pole with 3 states", False, "no 3-state 4-pole")
    verdict = is_color_closed(target.multipole, CLOSED_BOUND)
    opponents = generate_up_to(4, CLOSED_BOUND, colorable_only=True)
    disjoint = [e.digest for e in opponents
                if first_disjoint_ordering(e.state_set, target.state_set) is not None]
    ok = (verdict.kind in (Kind.CLOSED_SUFFICIENT, Kind.CLOSED_UP_TO_BOUND) and not disjoint)
    return CriterionResult(
        12, "color closed 4-pole with 3 states", ok,
        f"n={target.multipole.n} states={','.join(target.state_set.to_lines())} "
        f"verdict={verdict.label} opponents={len(opponents)} disjoint={disjoint}")


def _random_kempe_cases(count: int, seed: int = 20130501):
    rng = random.Random(seed)
    pool = [e.multipole for m in range(2, 7) for e in generate_up_to(m, 6, colorable_only=True)]
    pool += [make_cycle(m) for m in range(3, 10)]
    cases = 0
    while cases < count:
        mp = rng.choice(pool)
        colorings = list(enumerate_colorings(mp))
        phi = rng.choice(colorings)
        start = rng.randrange(mp.m)
        c = phi.semiedge_colors[start]
        pair = (c, rng.choice([x for x in COLORS if x != c]))
        yield mp, phi, KempeRequest(start, pair)
        cases += 1


def criterion_properties() -> CriterionResult:
    parity_bad = 0
    order_bad = 0
    entries = 0
    for m in range(1, 8):
        for entry in generate_up_to(m, PROPERTY_N_MAX):
            entries += 1
            mp = entry.multipole
            c = components(mp).component_count
            if mp.n < m - 2 * c or (mp.n == m - 2 * c) != is_forest(mp):
                order_bad += 1
            parity_bad += sum(not parity_check(s) for s in entry.state_set)
    kempe_bad = 0
    for mp, phi, req in _random_kempe_cases(1000):
        psi = kempe_interchange(mp, phi, req)
        back = kempe_interchange(mp, psi, req)
        if not verify_coloring(mp, psi) or back != phi:
            kempe_bad += 1
    ok = parity_bad == 0 and order_bad == 0 and kempe_bad == 0
    return CriterionResult(
        13, f"property suite (catalog m<=7, n<={PROPERTY_N_MAX})", ok,
        f"entries={entries} parity_violations={parity_bad} order_bound_violations={order_bad} "
        f"kempe_cases=1000 kempe_failures={kempe_bad}")


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_sigma,
    2: criterion_rho,
    3: criterion_trees,
    4: criterion_cycles,
    5: criterion_forests,
    6: criterion_mu,
    7: criterion_forbidden_patterns,
    8: criterion_irreducibility,
    9: criterion_free_edge_stability,
    10: criterion_junction,
    11: criterion_n_lower_bound,
    12: criterion_closed_four_pole,
    13: criterion_properties,
}


def _run_one(number: int) -> CriterionResult:
    return CRITERIA[number]()


def run_all(workers: int = 1) -> list[CriterionResult]:
    numbers = sorted(CRITERIA)
    if workers <= 1:
        return [_run_one(k) for k in numbers]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, numbers))
