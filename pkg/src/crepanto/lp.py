"""Exact rational linear programming.

A dense two-phase simplex over fractions.Fraction with Bland's pivoting
rule, which guarantees termination.  Problem sizes here are tiny (tens of
variables, at most a few hundred constraints), so a dense tableau is fine.
"""

from fractions import Fraction


class Unbounded(Exception):
    pass


def maximize(c, a_eq, b_eq):
    """Maximize c.x subject to a_eq x = b_eq and x >= 0.

    Returns (optimum, solution) or None when infeasible.  Raises Unbounded
    when the objective is unbounded above on the feasible region.
    """
    m = len(a_eq)
    n = len(c)
    rows = []
    rhs = []
    for i in range(m):
        row = [Fraction(x) for x in a_eq[i]]
        r = Fraction(b_eq[i])
        if r < 0:
            row = [-x for x in row]
            r = -r
        rows.append(row)
        rhs.append(r)

    # Phase 1: artificial variables, minimize their sum.
    tab = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    cost = [Fraction(0)] * n + [Fraction(-1)] * m
    _solve(tab, basis, cost)
    if _objective(tab, basis, cost) != 0:
        return None
    # Drive remaining artificial variables out of the basis.
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tab[i][j] != 0), None)
            if col is None:
                continue
            _pivot(tab, basis, i, col)
    # Drop artificial columns; rows whose basis is still artificial are
    # redundant zero rows and can be kept harmlessly (their basis entry is
    # a zero row after the loop above only if the row is all zero).
    keep = [i for i in range(m) if basis[i] < n]
    tab = [[tab[i][j] for j in range(n)] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    cost2 = [Fraction(x) for x in c]
    _solve(tab, basis, cost2)
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        x[bi] = tab[i][-1]
    value = sum(cost2[j] * x[j] for j in range(n))
    return value, x


def maximize_ineq(c, a_le, b_le, a_eq=(), b_eq=()):
    """Maximize c.x with a_le x <= b_le, a_eq x = b_eq, x >= 0."""
    n = len(c)
    k = len(a_le)
    rows = [list(r) + [Fraction(int(i == j)) for j in range(k)] for i, r in enumerate(a_le)]
    rows += [list(r) + [Fraction(0)] * k for r in a_eq]
    rhs = list(b_le) + list(b_eq)
    out = maximize(list(c) + [Fraction(0)] * k, rows, rhs)
    if out is None:
        return None
    value, x = out
    return value, x[:n]


def _objective(tab, basis, cost):
    return sum(cost[bi] * tab[i][-1] for i, bi in enumerate(basis))


def _solve(tab, basis, cost):
    n = len(tab[0]) - 1 if tab else 0
    while True:
        # reduced costs; Bland: choose the lowest-index improving column
        y = _duals(tab, basis, cost, n)
        enter = None
        for j in range(n):
            if j in basis:
                continue
            reduced = cost[j] - sum(y[i] * tab[i][j] for i in range(len(tab)))
            if reduced > 0:
                enter = j
                break
        if enter is None:
            return
        leave = None
        best = None
        for i in range(len(tab)):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise Unbounded()
        _pivot(tab, basis, leave, enter)


def _duals(tab, basis, cost, n):
    # with the tableau kept in canonical form, basic columns are unit
    # vectors, so the dual multipliers are just the basic costs per row
    return [cost[basis[i]] for i in range(len(tab))]


def _pivot(tab, basis, row, col):
    pv = tab[row][col]
    tab[row] = [x / pv for x in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [x - f * y for x, y in zip(tab[i], tab[row])]
    basis[row] = col
