"""Exact integer matrices: configurations, lattice span and unimodularity.

All arithmetic uses Python integers, so nothing ever overflows.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import CapExceeded, ZeroColumn
from .poset import Poset, enumerate_ideals

DEFAULT_MINOR_BUDGET = 10**7


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of arbitrary-precision integers, stored row-major."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]], nrows: Optional[int] = None) -> "IntMatrix":
        if not cols:
            return cls(tuple(() for _ in range(nrows or 0)))
        return cls(tuple(zip(*cols)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        return IntMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in ocols) for row in self.entries
        ))

    def submatrix(self, cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(row[j] for j in cols) for row in self.entries))

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "IntMatrix":
        m = cls.from_rows(data["entries"])
        if m.rows != data.get("rows", m.rows) or (m.rows and m.cols != data.get("cols", m.cols)):
            raise ValueError("declared rows/cols do not match entries")
        return m

    @classmethod
    def from_json(cls, text: str) -> "IntMatrix":
        return cls.from_dict(json.loads(text))


def order_matrix(p: Poset) -> IntMatrix:
    """``A_P``: indicator vectors of the nonempty ideals, in canonical order."""
    ideals = enumerate_ideals(p)[1:]
    cols = [tuple(int(i in ideal) for i in p.elements) for ideal in ideals]
    return IntMatrix.from_columns(cols)


def centrally_symmetric(a: IntMatrix) -> IntMatrix:
    """Block matrix ``[0 | A | -A]`` over a row of ones."""
    cols = a.columns()
    if any(not any(c) for c in cols):
        raise ZeroColumn("centrally symmetric configuration needs nonzero columns")
    out = [(0,) * a.rows + (1,)]
    out += [c + (1,) for c in cols]
    out += [tuple(-x for x in c) + (1,) for c in cols]
    return IntMatrix.from_columns(out)


def det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


class SmithForm(NamedTuple):
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    divisors: list[int]


def smith_normal_form(a: IntMatrix) -> SmithForm:
    """Smith normal form with transforms, pivoting on minimal absolute value."""
    r, c = a.shape
    D = [list(row) for row in a.entries]
    U = [[int(i == j) for j in range(r)] for i in range(r)]
    V = [[int(i == j) for j in range(c)] for i in range(c)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        # row_dst += f * row_src
        D[dst] = [x + f * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for M in (D, V):
            for row in M:
                row[dst] += f * row[src]

    for t in range(min(r, c)):
        while True:
            nonzero = [(abs(D[i][j]), i, j) for i in range(t, r) for j in range(t, c) if D[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = D[t][t]
            dirty = False
            for i in range(t + 1, r):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, c):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                continue
            # pivot must divide the remaining block; otherwise fold a row in and retry
            bad = next(((i, j) for i in range(t + 1, r) for j in range(t + 1, c) if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if all(D[i][j] == 0 for i in range(t, r) for j in range(t, c)):
            break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    divisors = [D[i][i] for i in range(min(r, c)) if D[i][i] != 0]
    return SmithForm(IntMatrix.from_rows(U), IntMatrix.from_rows(D), IntMatrix.from_rows(V), divisors)


class LatticeSpan(NamedTuple):
    rank: int
    spans_full_lattice: bool
    elementary_divisors: list[int]


def lattice_spans(a: IntMatrix) -> LatticeSpan:
    """Rank and elementary divisors of ``a``; full span iff all divisors are 1."""
    divisors = smith_normal_form(a).divisors
    rank = len(divisors)
    return LatticeSpan(rank, rank == a.rows and all(x == 1 for x in divisors), divisors)


class Unimodularity(NamedTuple):
    unimodular: bool
    all_plus_minus_one: bool
    same_absolute_value: bool
    rank: int
    witness_minor: Optional[tuple[tuple[int, ...], int]]
    minor_values: frozenset


def maximal_minors(a: IntMatrix, budget: int = DEFAULT_MINOR_BUDGET):
    """Yield ``(column_set, determinant)`` for every maximal minor (0-based columns)."""
    r, c = a.shape
    total = comb(c, r)
    if total > budget:
        raise CapExceeded(f"{total} maximal minors exceed the budget of {budget}")
    for cols in combinations(range(c), r):
        yield cols, det([[row[j] for j in cols] for row in a.entries])


def is_unimodular(a: IntMatrix, budget: int = DEFAULT_MINOR_BUDGET) -> Unimodularity:
    """Definition-faithful unimodularity test by enumerating all maximal minors.

    ``unimodular`` follows the general definition (full row rank, all nonzero
    maximal minors of equal absolute value).  ``all_plus_minus_one`` is the
    stricter test; the two agree when the columns span the full lattice.
    The witness is the first minor (in column-set order) with ``|det| != 1``,
    or, when no such minor exists but the rank is deficient, ``None``.
    """
    values = set()
    witness = None
    rank_full = False
    for cols, value in maximal_minors(a, budget):
        if value:
            rank_full = True
            values.add(abs(value))
            if witness is None and abs(value) != 1:
                witness = (cols, value)
    same = rank_full and len(values) == 1
    pm1 = rank_full and values == {1}
    return Unimodularity(
        unimodular=same,
        all_plus_minus_one=pm1,
        same_absolute_value=same,
        rank=a.rows if rank_full else lattice_spans(a).rank,
        witness_minor=witness,
        minor_values=frozenset(values),
    )
