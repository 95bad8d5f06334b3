"""Exact rational linear algebra on ``fractions.Fraction``.

Vectors are tuples of Fractions, matrices are sequences of such rows.  Nothing
here ever touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]

_SCALAR_RE = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"n"`` (optional leading minus) into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    m = _SCALAR_RE.match(str(text))
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_scalar(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec(values) -> Vector:
    return tuple(Fraction(v) if not isinstance(v, str) else parse_scalar(v) for v in values)


def dot(a, b) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a, b) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a) -> Vector:
    return tuple(c * x for x in a)


def neg(a) -> Vector:
    return tuple(-x for x in a)


def centroid(points) -> Vector:
    points = list(points)
    n = len(points)
    return tuple(sum(col, Fraction(0)) / n for col in zip(*points))


def is_zero(a) -> bool:
    return all(x == 0 for x in a)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            f = m[i][c]
            if i != r and f:
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None) -> list[Vector]:
    """Basis of {x : rows . x = 0}."""
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -m[i][f]
        basis.append(tuple(x))
    return basis


def affine_rank(points) -> int:
    """Dimension of the affine span (``-1`` for no points)."""
    points = list(points)
    if not points:
        return -1
    p0 = points[0]
    diffs = [sub(p, p0) for p in points[1:]]
    return rank(diffs) if diffs else 0


def det(rows) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * result


@dataclass(frozen=True)
class UniqueSolution:
    x: Vector


@dataclass(frozen=True)
class SolutionSpace:
    particular: Vector
    basis: tuple


@dataclass(frozen=True)
class Inconsistent:
    pass


def solve_linear(A, b):
    """Solve ``A x = b`` exactly by Gauss-Jordan elimination."""
    A = [list(r) for r in A]
    b = list(b)
    if len(A) != len(b):
        raise ValueError(f"dimension mismatch: {len(A)} rows vs rhs of length {len(b)}")
    if not A:
        raise ValueError("empty system")
    ncols = len(A[0])
    if any(len(r) != ncols for r in A):
        raise ValueError("ragged matrix")
    m, pivots = rref([r + [bi] for r, bi in zip(A, b)])
    if ncols in pivots:
        return Inconsistent()
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = m[i][ncols]
    x = tuple(x)
    if len(pivots) == ncols:
        return UniqueSolution(x)
    return SolutionSpace(x, tuple(nullspace(A, ncols)))


def sign(x) -> int:
    return (x > 0) - (x < 0)


def orientation(points) -> int:
    """Sign of det[(p_i, 1)] for d+1 points in R^d."""
    points = [tuple(p) for p in points]
    d = len(points[0]) if points else 0
    if len(points) != d + 1 or any(len(p) != d for p in points):
        raise ValueError(f"orientation needs d+1 points in R^d, got {len(points)} of dim {d}")
    return sign(det([list(p) + [1] for p in points]))
