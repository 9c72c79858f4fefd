"""Exact dense linear algebra over the rationals.

Everything is computed with `fractions.Fraction` (arbitrary precision, always
in lowest terms, positive denominator), so results are exact and bit-for-bit
reproducible.  Determinism is part of the contract: elimination always picks
the first nonzero pivot, free columns are visited in ascending order, and
kernel vectors are scaled to primitive integer vectors with a positive
leading entry.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class LinalgError(ValueError):
    pass


def vector(entries: Iterable) -> Vector:
    return tuple(Fraction(x) for x in entries)


class Matrix:
    """Dense row-major matrix of exact rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        ent = tuple(Fraction(x) for x in entries)
        if len(ent) != rows * cols:
            raise LinalgError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = ent

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise LinalgError("ragged rows")
        return cls(n, m, (x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, (ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            (self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise LinalgError("shape mismatch")
        return Matrix(self.rows, self.cols, (a - b for a, b in zip(self.entries, other.entries)))

    def mul_vec(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise LinalgError("shape mismatch")
        return tuple(
            sum((self.at(i, j) * v[j] for j in range(self.cols)), ZERO)
            for i in range(self.rows)
        )

    def rank(self) -> int:
        return len(_rref(self.row_list())[1])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form, first-nonzero pivoting. Returns (rows, pivot cols)."""
    if not rows:
        return rows, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pr = None
        for i in range(r, n_rows):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def _primitive(v: Sequence[Fraction]) -> Vector:
    """Scale to an integer vector with content 1 and positive leading entry."""
    denom = 1
    for x in v:
        denom = denom * x.denominator // math.gcd(denom, x.denominator)
    ints = [int(x * denom) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(Fraction(x) for x in ints)


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the null space of ``m``.

    One vector per free column, free columns in ascending order; each vector
    is a primitive integer vector with positive leading entry, so the result
    is canonical.
    """
    rows, pivots = _rref(m.row_list())
    free = [c for c in range(m.cols) if c not in pivots]
    basis: list[Vector] = []
    for fc in free:
        v = [ZERO] * m.cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(_primitive(v))
    return basis


class Echelon:
    """Incremental row echelon used for rank / independence bookkeeping."""

    __slots__ = ("rows",)

    def __init__(self) -> None:
        self.rows: list[tuple[int, list[Fraction]]] = []  # (pivot col, row)

    def residual(self, v: Sequence[Fraction]) -> list[Fraction]:
        w = list(v)
        for pc, row in self.rows:
            if w[pc] != 0:
                f = w[pc]
                w = [x - f * y for x, y in zip(w, row)]
        return w

    def add(self, v: Sequence[Fraction]) -> bool:
        """Insert ``v``; returns False when dependent on the current span."""
        w = self.residual(v)
        pc = next((i for i, x in enumerate(w) if x != 0), None)
        if pc is None:
            return False
        pv = w[pc]
        w = [x / pv for x in w]
        self.rows.append((pc, w))
        self.rows.sort(key=lambda t: t[0])
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def span_basis(vectors: Iterable[Sequence[Fraction]]) -> list[Vector]:
    """Deterministic basis of the span (echelonized in input order)."""
    ech = Echelon()
    out: list[Vector] = []
    for v in vectors:
        if ech.add(v):
            out.append(vector(v))
    return out


def complement_basis(vectors: Sequence[Sequence[Fraction]], ambient_dim: int) -> list[int]:
    """Lexicographically smallest set of standard-basis indices whose span
    complements the span of ``vectors``.

    Raises ``LinalgError("dependent input")`` when the input is dependent.
    """
    ech = Echelon()
    for v in vectors:
        if len(v) != ambient_dim:
            raise LinalgError("vector length does not match ambient dimension")
        if not ech.add(v):
            raise LinalgError("dependent input")
    chosen: list[int] = []
    for i in range(ambient_dim):
        if ech.rank == ambient_dim:
            break
        e = [ZERO] * ambient_dim
        e[i] = ONE
        if ech.add(e):
            chosen.append(i)
    return chosen


def solve_in_span(vectors: Sequence[Sequence[Fraction]], target: Sequence[Fraction]):
    """Coefficients expressing ``target`` in the (independent) ``vectors``,
    or ``None`` when the target is outside the span."""
    k = len(vectors)
    if k == 0:
        return () if all(Fraction(x) == 0 for x in target) else None
    n = len(vectors[0])
    if len(target) != n:
        raise LinalgError("shape mismatch")
    aug = [[Fraction(vectors[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    rows, pivots = _rref(aug)
    if k in pivots:
        return None
    if len(pivots) != k:
        raise LinalgError("dependent input")
    coeffs = [ZERO] * k
    for r, pc in enumerate(pivots):
        coeffs[pc] = rows[r][k]
    return tuple(coeffs)


def invert(m: Matrix) -> Matrix:
    """Exact inverse (Gauss-Jordan); raises on singular input."""
    if m.rows != m.cols:
        raise LinalgError("not square")
    n = m.rows
    aug = [list(m.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    rows, pivots = _rref(aug)
    if pivots != list(range(n)):
        raise LinalgError("singular matrix")
    return Matrix(n, n, (rows[i][n + j] for i in range(n) for j in range(n)))
