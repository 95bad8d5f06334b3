"""Exact rational simplex for mixed strict / non-strict inequality systems.

Strict rows are handled by one shared slack ``t``: ``<a,x> < b`` becomes
``<a,x> + t <= b`` and ``t`` is maximised subject to ``t <= 1``.  The system is
feasible iff the optimum is positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exactnum as en

RELATIONS = ("<", "<=", "=", ">=", ">")


@dataclass(frozen=True)
class Row:
    a: tuple
    b: Fraction
    relation: str

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "a", en.vec(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def holds(self, x) -> bool:
        lhs = en.dot(self.a, x)
        return {
            "<": lhs < self.b,
            "<=": lhs <= self.b,
            "=": lhs == self.b,
            ">=": lhs >= self.b,
            ">": lhs > self.b,
        }[self.relation]


@dataclass(frozen=True)
class InequalitySystem:
    rows: tuple
    dimension: int

    def __post_init__(self):
        rows = tuple(r if isinstance(r, Row) else Row(*r) for r in self.rows)
        for r in rows:
            if len(r.a) != self.dimension:
                raise ValueError("row dimension differs from system dimension")
        object.__setattr__(self, "rows", rows)

    def with_row(self, row) -> "InequalitySystem":
        return InequalitySystem(self.rows + (row,), self.dimension)

    @property
    def has_strict(self) -> bool:
        return any(r.relation in ("<", ">") for r in self.rows)


@dataclass(frozen=True)
class Feasible:
    witness: tuple
    slack: Fraction


@dataclass(frozen=True)
class Infeasible:
    pass


# -- tableau simplex ----------------------------------------------------------


class _Tableau:
    """Dense tableau for max c.z, z >= 0, rows already in equality form."""

    def __init__(self, rows, rhs, basis):
        self.T = [list(r) + [b] for r, b in zip(rows, rhs)]
        self.basis = list(basis)

    def pivot(self, i, j):
        T = self.T
        inv = 1 / T[i][j]
        pr = T[i] = [x * inv if x else x for x in T[i]]
        support = [(col, y) for col, y in enumerate(pr) if y]
        for k in range(len(T)):
            f = T[k][j]
            if k != i and f:
                row = T[k]
                for col, y in support:
                    row[col] -= f * y
        self.basis[i] = j

    def optimize(self, c, allowed) -> str:
        """Bland's rule; ``allowed`` masks columns that may enter.

        The reduced-cost row rides along as an extra tableau row while
        optimizing, so pivots keep it current.
        """
        T = self.T
        m = len(T)
        ncols = len(T[0]) - 1 if T else len(c)
        cost = [
            sum((c[self.basis[i]] * T[i][j] for i in range(m) if T[i][j]), Fraction(0)) - c[j]
            for j in range(ncols)
        ]
        T.append(cost + [Fraction(0)])
        try:
            while True:
                z = T[m]
                enter = next((j for j in range(ncols) if allowed[j] and z[j] < 0), None)
                if enter is None:
                    return "optimal"
                best = None
                for i in range(m):
                    if T[i][enter] > 0:
                        key = (T[i][-1] / T[i][enter], self.basis[i])
                        if best is None or key < best[0]:
                            best = (key, i)
                if best is None:
                    return "unbounded"
                self.pivot(best[1], enter)
        finally:
            T.pop()

    def value(self, c):
        return sum((c[b] * self.T[i][-1] for i, b in enumerate(self.basis)), Fraction(0))

    def solution(self, n):
        z = [Fraction(0)] * n
        for i, b in enumerate(self.basis):
            if b < n:
                z[b] = self.T[i][-1]
        return z


def solve_lp(A_rows: Sequence, senses: Sequence[str], b: Sequence, c: Sequence):
    """Maximise c.z over z >= 0 with rows A_i z (<=|=|>=) b_i.

    Returns ("optimal", z, value), ("infeasible", None, None) or
    ("unbounded", None, None).  Two-phase simplex, Bland's rule, exact.
    """
    n = len(c)
    m = len(A_rows)
    if m == 0:
        if any(ci > 0 for ci in c):
            return "unbounded", None, None
        return "optimal", [Fraction(0)] * n, Fraction(0)
    n_slack = sum(1 for s in senses if s != "=")
    rows, rhs, basis = [], [], []
    art_cols = []
    slack_col = n
    art_col = n + n_slack
    width = n + n_slack + m
    for Ai, s, bi in zip(A_rows, senses, b):
        row = [Fraction(x) for x in Ai] + [Fraction(0)] * (width - n)
        bi = Fraction(bi)
        slack_here = None
        if s == "<=":
            row[slack_col] = Fraction(1)
            slack_here = slack_col
            slack_col += 1
        elif s == ">=":
            row[slack_col] = Fraction(-1)
            slack_here = slack_col
            slack_col += 1
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        if slack_here is not None and row[slack_here] == 1:
            basis.append(slack_here)
        else:
            row[art_col] = Fraction(1)
            basis.append(art_col)
            art_cols.append(art_col)
            art_col += 1
        rows.append(row)
        rhs.append(bi)
    width = art_col
    rows = [r[:width] for r in rows]
    tab = _Tableau(rows, rhs, basis)
    art = set(art_cols)
    if art:
        c1 = [Fraction(-1) if j in art else Fraction(0) for j in range(width)]
        tab.optimize(c1, [True] * width)
        if tab.value(c1) < 0:
            return "infeasible", None, None
        # drive zero-level artificials out of the basis
        i = 0
        while i < len(tab.T):
            if tab.basis[i] in art:
                j = next((j for j in range(width) if j not in art and tab.T[i][j] != 0), None)
                if j is None:
                    del tab.T[i]
                    del tab.basis[i]
                    continue
                tab.pivot(i, j)
            i += 1
    c2 = [Fraction(x) for x in c] + [Fraction(0)] * (width - n)
    allowed = [j not in art for j in range(width)]
    status = tab.optimize(c2, allowed)
    if status == "unbounded":
        return "unbounded", None, None
    return "optimal", tab.solution(n), tab.value(c2)


# -- feasibility ----------------------------------------------------------------


def _lp_rows(system: InequalitySystem, strict: bool):
    """Rows over z = (x+, x-, [t]) in <=, =, >= form."""
    out = []
    for r in system.rows:
        coeffs = list(r.a) + [-x for x in r.a]
        if r.relation == "<":
            out.append((coeffs + [Fraction(1)], "<=", r.b))
        elif r.relation == ">":
            out.append((coeffs + [Fraction(-1)], ">=", r.b))
        else:
            out.append((coeffs + ([Fraction(0)] if strict else []), r.relation, r.b))
    return out


def _violated(row, z):
    coeffs, sense, b = row
    lhs = sum((x * y for x, y in zip(coeffs, z)), Fraction(0))
    if sense == "<=":
        return lhs - b
    if sense == ">=":
        return b - lhs
    return abs(lhs - b)


def feasible(system: InequalitySystem, chunk: int | None = None):
    """Decide feasibility; a Feasible result satisfies every row verbatim.

    Rows are fed to the simplex lazily (most violated first), which keeps the
    tableau small for systems with many redundant rows.  A relaxation that is
    infeasible (or has optimal slack <= 0) certifies the full system likewise,
    and a relaxation optimum satisfying all rows is optimal for the full system.
    """
    n = system.dimension
    strict = system.has_strict
    rows = _lp_rows(system, strict)
    nz = 2 * n + (1 if strict else 0)
    c = [Fraction(0)] * (2 * n) + ([Fraction(1)] if strict else [])
    cap = ([Fraction(0)] * (2 * n) + [Fraction(1)], "<=", Fraction(1)) if strict else None
    if chunk is None:
        chunk = n + 2
    active = [i for i, r in enumerate(rows) if r[1] == "="]
    active += [i for i in range(len(rows)) if i not in set(active)][: max(chunk, 1)]
    active_set = set(active)
    while True:
        lp = [rows[i] for i in active] + ([cap] if cap else [])
        status, z, val = solve_lp([r[0] for r in lp], [r[1] for r in lp], [r[2] for r in lp], c)
        if status != "optimal" or (strict and val <= 0):
            return Infeasible()
        z = z + [Fraction(0)] * (nz - len(z))
        bad = sorted(
            ((_violated(rows[i], z), i) for i in range(len(rows)) if i not in active_set),
            reverse=True,
        )
        bad = [i for v, i in bad if v > 0][:chunk]
        if not bad:
            break
        active.extend(bad)
        active_set.update(bad)
    x = tuple(z[i] - z[n + i] for i in range(n))
    t = z[2 * n] if strict else Fraction(0)
    assert all(r.holds(x) for r in system.rows), "simplex witness failed re-substitution"
    return Feasible(x, t)


def separating_hyperplane(A, B, strict: bool = True):
    """Hyperplane (u, alpha) with <a,u> < alpha < <b,u> on A and B.

    ``strict=False`` asks for proper separation instead: the same inequalities
    non-strict, with not every point of A and B on the hyperplane.  Returns an
    ``OrientedHyperplane`` or None.  The two argument orders give exactly
    opposite hyperplanes.
    """
    from .polytope import OrientedHyperplane

    A = [en.vec(p) for p in A]
    B = [en.vec(p) for p in B]
    if not A or not B:
        raise ValueError("both point sets must be nonempty")
    d = len(A[0])
    if any(len(p) != d for p in A + B):
        raise ValueError("dimension mismatch")
    if sorted(B) < sorted(A):
        h = separating_hyperplane(B, A, strict)
        return None if h is None else h.flipped()
    one = (Fraction(1),)
    rows = []
    if strict:
        rows += [Row(p + (-one[0],), 0, "<") for p in A]
        rows += [Row(p + (-one[0],), 0, ">") for p in B]
    else:
        rows += [Row(p + (-one[0],), 0, "<=") for p in A]
        rows += [Row(p + (-one[0],), 0, ">=") for p in B]
        total = [Fraction(0)] * (d + 1)
        for p in B:
            total = [t + x for t, x in zip(total, p + (-one[0],))]
        for p in A:
            total = [t - x for t, x in zip(total, p + (-one[0],))]
        rows.append(Row(tuple(total), 0, ">"))
    res = feasible(InequalitySystem(tuple(rows), d + 1))
    if isinstance(res, Infeasible):
        return None
    u, alpha = res.witness[:d], res.witness[d]
    if en.is_zero(u):
        return None
    return OrientedHyperplane(u, alpha)
