"""Exact rational simplex for small feasibility/optimization problems.

Standard form: maximize c.x subject to A x = b, x >= 0, everything a
Fraction.  Two phases, Bland's pivoting rule (guaranteed termination), no
floating point.  Problem sizes in this package stay tiny (tens of variables),
so the dense tableau is the right tool.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _pivot(tab, basis, row, col):
    inv = 1 / tab[row][col]
    tab[row] = [x * inv for x in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [a - f * b for a, b in zip(tab[i], tab[row])]
    basis[row] = col


def _solve_phase(tab, basis, cost):
    """Run Bland-rule simplex on tableau rows with the given cost vector.

    tab: m rows of length n+1 (last entry = rhs), representing A x = b with
    the current basis already in canonical form.  Returns status.
    """
    m = len(tab)
    n = len(cost)
    while True:
        # Reduced costs relative to the current basis.
        z = list(cost)
        const = Fraction(0)
        for i, bi in enumerate(basis):
            if cost[bi] != 0:
                f = cost[bi]
                for j in range(n):
                    z[j] -= f * tab[i][j]
                const += f * tab[i][n]
        enter = next((j for j in range(n) if z[j] > 0), None)
        if enter is None:
            return OPTIMAL, const
        # Bland: smallest-index entering; leaving by min ratio, ties by index.
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][n] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return UNBOUNDED, None
        _pivot(tab, basis, leave, enter)


def simplex_maximize(a_rows, b, c):
    """Maximize c.x subject to a_rows x = b, x >= 0.

    Returns (status, x, value) with exact Fractions; x and value are None
    unless status == OPTIMAL.
    """
    m = len(a_rows)
    n = len(c)
    tab = []
    for i in range(m):
        row = [Fraction(x) for x in a_rows[i]] + [Fraction(b[i])]
        if row[n] < 0:
            row = [-x for x in row]
        tab.append(row)
    # Phase 1: artificial variable per row.
    for i in range(m):
        for j in range(m):
            tab[i].insert(n + j, Fraction(1 if i == j else 0))
    basis = [n + i for i in range(m)]
    phase1_cost = [Fraction(0)] * n + [Fraction(-1)] * m
    status, value = _solve_phase(tab, basis, phase1_cost)
    if status != OPTIMAL or value != 0:
        return INFEASIBLE, None, None
    # Drive lingering artificials out of the basis where possible.
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, i, col)
    # Drop rows whose artificial stayed basic (redundant constraints).
    keep = [i for i in range(m) if basis[i] < n]
    tab = [tab[i][:n] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    cost = [Fraction(x) for x in c]
    status, value = _solve_phase(tab, basis, cost)
    if status != OPTIMAL:
        return status, None, None
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        x[bi] = tab[i][-1]
    return OPTIMAL, tuple(x), value
