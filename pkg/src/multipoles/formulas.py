"""Counting sequences for multipole state sets, with exact integer arithmetic.

sigma(m)   states of a color complete m-pole (parity-admissible states)
rho(m)     states of the minimal m-pole
tree_count(m), cycle_count(m), forest_count(n, m)
known_constants()  reference values of mu(m), v(m) and bounds on n(m)
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from math import comb


class SequenceId(Enum):
    SIGMA = "sigma"
    RHO = "rho"
    TREE_COUNT = "t"
    CYCLE_COUNT = "c"
    FOREST_COUNT = "f"
    MU_KNOWN = "mu"
    V_KNOWN = "v"
    N_BOUNDS = "n"


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def sigma(m: int) -> int:
    if m < 1:
        raise ValueError(f"sigma needs m >= 1, got {m}")
    return _exact_div(3 ** (m - 1) + 2 + (-1) ** m * 3, 8)


def sigma_recurrence_check(max_m: int) -> bool:
    """sigma(m) == 2 sigma(m-1) + 3 sigma(m-2) - 1 for 4 <= m <= max_m."""
    if max_m < 4:
        raise ValueError(f"max_m must be >= 4, got {max_m}")
    return all(sigma(m) == 2 * sigma(m - 1) + 3 * sigma(m - 2) - 1 for m in range(4, max_m + 1))


def sigma_superadditive_check(max_m: int) -> bool:
    """sigma(a) * sigma(b) < sigma(a + b) for all a, b >= 2 with a + b <= max_m."""
    if max_m < 4:
        raise ValueError(f"max_m must be >= 4, got {max_m}")
    return all(sigma(a) * sigma(b) < sigma(a + b)
               for a in range(2, max_m - 1) for b in range(2, max_m - a + 1))


def rho(m: int) -> int:
    if m < 2:
        raise ValueError(f"rho needs m >= 2, got {m}")
    if m % 2:
        return 3 ** ((m - 3) // 2)
    return _exact_div(3 ** (m // 2 - 1) + 1, 2)


def tree_count(m: int) -> int:
    if m < 3:
        raise ValueError(f"tree_count needs m >= 3, got {m}")
    return 2 ** (m - 3)


def cycle_colorings(m: int) -> int:
    """Number of Tait colorings of a cycle m-pole, before dividing out color permutations."""
    if m < 1:
        raise ValueError(f"cycle needs m >= 1, got {m}")
    return 2 ** m + 2 * (-1) ** m


def cycle_count(m: int) -> int:
    if m < 1:
        raise ValueError(f"cycle needs m >= 1, got {m}")
    return _exact_div(2 ** (m - 1) + (-1) ** m, 3)


def _check_forest_args(n: int, m: int) -> None:
    if n < 0 or m < 2:
        raise ValueError(f"forest needs n >= 0 and m >= 2, got n={n}, m={m}")
    if (n - m) % 2:
        raise ValueError(f"forest needs n ≡ m (mod 2), got n={n}, m={m}")
    if n > m - 2:
        raise ValueError(f"forest needs n <= m - 2, got n={n}, m={m}")


def forest_count(n: int, m: int) -> int:
    """States of any forest m-pole with n vertices (closed form)."""
    _check_forest_args(n, m)
    if n == 0:
        return _exact_div(3 ** (m // 2 - 1) + 1, 2)
    return 2 ** (n - 1) * 3 ** ((m - n) // 2 - 1)


@lru_cache(maxsize=None)
def forest_count_recursive(n: int, m: int) -> int:
    """forest_count from the tree diagonal and f(n,m) = f(n,m-2) + f(n+1,m-1)."""
    _check_forest_args(n, m)
    if n == m - 2:
        return 1 if n == 0 else 2 ** (n - 1)
    return forest_count_recursive(n, m - 2) + forest_count_recursive(n + 1, m - 1)


def forest_count_binomial(n: int, m: int, k: int) -> int:
    """sum_i C(k, i) f(n + i, m - 2k + i), valid when n <= m - 2(k + 1)."""
    _check_forest_args(n, m)
    if k < 0 or n > m - 2 * (k + 1):
        raise ValueError(f"binomial expansion needs 0 <= k and n <= m - 2(k+1), got k={k}")
    return sum(comb(k, i) * forest_count_recursive(n + i, m - 2 * k + i) for i in range(k + 1))


def forest_table(max_m: int) -> list[dict]:
    """Rows ``{"n", "m", "kind", "value"}``: forests (n <= m-2) plus cycles (n = m)."""
    if max_m < 2:
        raise ValueError(f"max_m must be >= 2, got {max_m}")
    rows = []
    for m in range(2, max_m + 1):
        for n in range(m % 2, m - 1, 2):
            rows.append({"n": n, "m": m, "kind": "forest", "value": forest_count(n, m)})
        if m >= 3:
            rows.append({"n": m, "m": m, "kind": "cycle", "value": cycle_count(m)})
    return rows


def render_forest_table(max_m: int) -> str:
    """Aligned text grid: one row per n, one column per m; cycles on the diagonal n = m."""
    rows = forest_table(max_m)
    cell = {(r["n"], r["m"]): r["value"] for r in rows}
    width = max(len(str(v)) for v in cell.values()) + 1
    width = max(width, len(str(max_m)) + 1)
    lines = ["n\\m " + "".join(f"{m:>{width}}" for m in range(2, max_m + 1))]
    for n in range(0, max_m + 1):
        vals = [str(cell[(n, m)]) if (n, m) in cell else "" for m in range(2, max_m + 1)]
        if any(vals):
            lines.append(f"{n:>3} " + "".join(f"{v:>{width}}" for v in vals))
    return "\n".join(lines) + "\n"


def n_bounds(m: int) -> tuple[int, int]:
    """Lower and upper bounds on the order of the smallest color complete m-pole (m >= 5)."""
    if m < 5:
        raise ValueError(f"bounds are stated for m >= 5, got {m}")
    return m + 2, (10 * m - 37 if m % 2 else 10 * m - 40)


def known_constants() -> dict:
    return {
        "mu": {4: 2, 5: 3, 6: 5},
        "v": {2: 0, 3: 1, 4: 2, 5: 5},
        "v_lower": {6: 12, 7: 11},
        "v_rules": [
            "v(m) >= v(m-1) - 1",
            "v(m) >= v(m-2)",
            "v(m) >= m - 2 for m >= 2 (trees)",
            "v(m) >= m for m >= 5 (cycles)",
        ],
        "n_bounds": {"odd": "m+2 <= n(m) <= 10m-37", "even": "m+2 <= n(m) <= 10m-40"},
    }


def v_lower_bound(m: int) -> int:
    """Best lower bound on v(m) from the known values and the monotonicity rules."""
    known = known_constants()
    best: dict[int, int] = {}
    for k in range(2, m + 1):
        cands = [k - 2]
        if k >= 5:
            cands.append(k)
        if k in known["v"]:
            cands.append(known["v"][k])
        if k in known["v_lower"]:
            cands.append(known["v_lower"][k])
        if k - 1 in best:
            cands.append(best[k - 1] - 1)
        if k - 2 in best:
            cands.append(best[k - 2])
        best[k] = max(cands)
    return best[m]
