"""Exact linear programming over the rationals.

A small dense two-phase simplex with Bland's rule, operating on
``fractions.Fraction`` throughout.  Sized for desk-scale cone problems
(tens of variables); correctness over cleverness.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _pivot(tab, basis, prow, pcol):
    piv = tab[prow][pcol]
    tab[prow] = [x / piv for x in tab[prow]]
    for i in range(len(tab)):
        if i != prow and tab[i][pcol] != 0:
            factor = tab[i][pcol]
            row = tab[i]
            prow_vals = tab[prow]
            tab[i] = [row[j] - factor * prow_vals[j] for j in range(len(row))]
    basis[prow] = pcol


def _run_simplex(tab, basis, ncols):
    """Minimize the objective encoded in the last tableau row.

    The objective row holds reduced costs; column ``ncols`` is the RHS.
    Bland's rule (smallest eligible index) guarantees termination.
    """
    m = len(tab) - 1
    obj = tab[m]
    while True:
        pcol = None
        for j in range(ncols):
            if obj[j] < 0:
                pcol = j
                break
        if pcol is None:
            return OPTIMAL
        prow = None
        best = None
        for i in range(m):
            if tab[i][pcol] > 0:
                ratio = tab[i][ncols] / tab[i][pcol]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[prow]):
                    best = ratio
                    prow = i
        if prow is None:
            return UNBOUNDED
        _pivot(tab, basis, prow, pcol)
        obj = tab[m]


def solve_standard_form(c, a_rows, b):
    """min c.x subject to A x = b, x >= 0, all data rational.

    Returns (status, x, objective); x and objective are None unless
    status is OPTIMAL.
    """
    m = len(a_rows)
    n = len(c)
    c = [Fraction(x) for x in c]
    rows = [[Fraction(x) for x in row] for row in a_rows]
    rhs = [Fraction(x) for x in b]
    for row in rows:
        if len(row) != n:
            raise ValueError("constraint width does not match objective length")
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]

    # Phase 1: artificial variables n..n+m-1, minimize their sum.
    total = n + m
    tab = []
    for i in range(m):
        row = rows[i] + [_ONE if j == i else _ZERO for j in range(m)] + [rhs[i]]
        tab.append(row)
    obj = [_ZERO] * (total + 1)
    for i in range(m):
        for j in range(total + 1):
            obj[j] -= tab[i][j]
        obj[n + i] = _ZERO
    tab.append(obj)
    basis = [n + i for i in range(m)]

    status = _run_simplex(tab, basis, total)
    if status != OPTIMAL or -tab[m][total] > 0:
        return INFEASIBLE, None, None

    # Drive lingering artificials out of the basis; drop redundant rows.
    keep = []
    for i in range(m):
        if basis[i] >= n:
            pcol = next((j for j in range(n) if tab[i][j] != 0), None)
            if pcol is None:
                continue  # redundant constraint
            _pivot(tab, basis, i, pcol)
        keep.append(i)

    # Phase 2 tableau: original columns only, fresh reduced costs.
    tab2 = [[tab[i][j] for j in range(n)] + [tab[i][n + m]] for i in keep]
    basis2 = [basis[i] for i in keep]
    obj2 = list(c) + [_ZERO]
    for i, row in enumerate(tab2):
        cb = c[basis2[i]]
        if cb != 0:
            for j in range(n + 1):
                obj2[j] -= cb * row[j]
    tab2.append(obj2)

    status = _run_simplex(tab2, basis2, n)
    if status != OPTIMAL:
        return status, None, None
    x = [_ZERO] * n
    for i, bj in enumerate(basis2):
        x[bj] = tab2[i][n]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return OPTIMAL, x, value


def feasible_nonneg(a_rows, b):
    """Some x >= 0 with A x = b, or None.  Phase-1 feasibility only."""
    n = len(a_rows[0]) if a_rows else 0
    status, x, _ = solve_standard_form([_ZERO] * n, a_rows, b)
    return x if status == OPTIMAL else None


def strict_functional(dim, zero_vectors, positive_vectors):
    """A rational u with u.z == 0 for all z and u.p > 0 for all p, or None.

    This is the certificate search behind sharpness and face enumeration.
    Formulated as: maximize t <= 1 subject to u.p_j >= t; by scaling, a
    strictly positive optimum exists iff a strict functional does.
    """
    zero_vectors = [tuple(v) for v in zero_vectors]
    positive_vectors = [tuple(v) for v in positive_vectors]
    if not positive_vectors:
        return tuple(_ZERO for _ in range(dim))

    # Variables: u+ (dim), u- (dim), t, slack per positive vector, slack for t<=1.
    npos = len(positive_vectors)
    nvars = 2 * dim + 1 + npos + 1
    t_idx = 2 * dim
    rows = []
    rhs = []
    for z in zero_vectors:
        row = [_ZERO] * nvars
        for l in range(dim):
            row[l] = Fraction(z[l])
            row[dim + l] = Fraction(-z[l])
        rows.append(row)
        rhs.append(_ZERO)
    for j, p in enumerate(positive_vectors):
        row = [_ZERO] * nvars
        for l in range(dim):
            row[l] = Fraction(p[l])
            row[dim + l] = Fraction(-p[l])
        row[t_idx] = Fraction(-1)
        row[t_idx + 1 + j] = Fraction(-1)
        rows.append(row)
        rhs.append(_ZERO)
    cap = [_ZERO] * nvars
    cap[t_idx] = _ONE
    cap[t_idx + 1 + npos] = _ONE
    rows.append(cap)
    rhs.append(_ONE)

    c = [_ZERO] * nvars
    c[t_idx] = Fraction(-1)  # maximize t
    status, x, value = solve_standard_form(c, rows, rhs)
    if status != OPTIMAL or x is None or -value <= 0:
        return None
    u = tuple(x[l] - x[dim + l] for l in range(dim))
    return _normalize_functional(u)


def _normalize_functional(u):
    """Scale a rational vector to coprime integer entries (as Fractions)."""
    from math import gcd

    denominators = [f.denominator for f in u]
    lcm = 1
    for d in denominators:
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(f * lcm) for f in u]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(Fraction(x) for x in ints)


def in_cone(generator_columns, point):
    """Exact test: is the point a nonnegative rational combination of the
    generators?  ``generator_columns`` is a list of vectors in Z^d."""
    dim = len(point)
    k = len(generator_columns)
    if k == 0:
        return all(x == 0 for x in point)
    rows = [[Fraction(generator_columns[j][i]) for j in range(k)] for i in range(dim)]
    return feasible_nonneg(rows, [Fraction(x) for x in point]) is not None
