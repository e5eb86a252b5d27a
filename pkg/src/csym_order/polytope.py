"""Exact lattice-polytope computations for small dimensions.

Facets come from a brute-force scan over ``d``-subsets of the input points.
Candidate normals are computed in floating point in batches and then
re-verified with integer arithmetic, so every returned inequality is exact.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import cached_property
from itertools import combinations, islice
from math import comb, gcd
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import CapExceeded, NotFullDim, ZeroColumn
from .lattice import IntMatrix, det, lattice_spans
from .poset import Poset, enumerate_ideals

MAX_FACET_DIM = 8
DEFAULT_BOX_BUDGET = 2 * 10**8
_BATCH = 50_000
_SLICE = 100_000


class Facets(NamedTuple):
    normals: np.ndarray  # (F, d) primitive integer outward normals
    offsets: np.ndarray  # (F,) polytope = {x : normals @ x <= offsets}


class Polytope:
    """Lattice polytope given by a V-representation (extra points allowed)."""

    def __init__(self, points: Sequence[Sequence[int]]):
        pts = np.array(points, dtype=np.int64)
        if pts.ndim != 2 or len(pts) == 0:
            raise ValueError("need a nonempty list of equal-length integer points")
        self.points = np.unique(pts, axis=0)
        self.ambient_dim = pts.shape[1]

    def __repr__(self):
        return f"Polytope(dim={self.ambient_dim}, points={len(self.points)})"

    @cached_property
    def affine_dim(self) -> int:
        diffs = self.points[1:] - self.points[0]
        if len(diffs) == 0:
            return 0
        return lattice_spans(IntMatrix.from_rows(diffs.tolist())).rank

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.ambient_dim

    @cached_property
    def facets(self) -> Facets:
        return facets(self)

    def contains_origin_in_interior(self) -> bool:
        return bool(np.all(self.facets.offsets > 0))

    def to_dict(self) -> dict:
        return {"dim": self.ambient_dim, "points": self.points.tolist()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Polytope":
        poly = cls(data["points"])
        if poly.ambient_dim != data.get("dim", poly.ambient_dim):
            raise ValueError("declared dim does not match the points")
        return poly

    @classmethod
    def from_json(cls, text: str) -> "Polytope":
        return cls.from_dict(json.loads(text))


def csym_polytope(a: IntMatrix) -> Polytope:
    """Convex hull of the origin, the columns of ``a`` and their negatives."""
    cols = a.columns()
    if any(not any(c) for c in cols):
        raise ZeroColumn("centrally symmetric polytope needs nonzero columns")
    return Polytope([(0,) * a.rows] + cols + [tuple(-x for x in c) for c in cols])


def order_polytope(p: Poset) -> Polytope:
    return Polytope([[int(i in ideal) for i in p.elements] for ideal in enumerate_ideals(p)])


def _primitive(rows: np.ndarray) -> np.ndarray:
    g = np.gcd.reduce(np.abs(rows), axis=1)
    g[g == 0] = 1
    return rows // g[:, None]


def _candidate_normals(points: np.ndarray, subsets: np.ndarray) -> np.ndarray:
    """Integer normals of the hyperplanes through each subset (zero if degenerate)."""
    d = points.shape[1]
    base = points[subsets[:, 0]]
    diffs = (points[subsets[:, 1:]] - base[:, None, :]).astype(np.float64)  # (B, d-1, d)
    normals = np.empty((len(subsets), d), dtype=np.float64)
    for j in range(d):
        minor = np.delete(diffs, j, axis=2)
        normals[:, j] = (-1) ** j * np.linalg.det(minor)
    normals = np.rint(normals).astype(np.int64)
    idiffs = diffs.astype(np.int64)
    # exact re-check: rounding must give a vector orthogonal to every difference
    ok = np.all(np.einsum("bkd,bd->bk", idiffs, normals) == 0, axis=1)
    for b in np.flatnonzero(~ok):
        rows = idiffs[b].tolist()
        normals[b] = [(-1) ** j * det([r[:j] + r[j + 1:] for r in rows]) for j in range(d)]
    return normals


def facets(poly: Polytope) -> Facets:
    """Every facet as a primitive outward normal with its integer offset."""
    d = poly.ambient_dim
    if d > MAX_FACET_DIM:
        raise CapExceeded(f"facet scan is capped at dimension {MAX_FACET_DIM}")
    if not poly.is_full_dimensional:
        raise NotFullDim(f"affine hull has dimension {poly.affine_dim} < {d}")
    pts = poly.points
    if d == 1:
        lo, hi = int(pts.min()), int(pts.max())
        return Facets(np.array([[1], [-1]], dtype=np.int64), np.array([hi, -lo], dtype=np.int64))

    seen = {}
    combos = combinations(range(len(pts)), d)
    while True:
        chunk = list(islice(combos, _BATCH))
        if not chunk:
            break
        subsets = np.array(chunk, dtype=np.int64)
        normals = _primitive(_candidate_normals(pts, subsets))
        keep = np.any(normals != 0, axis=1)
        normals, subsets = normals[keep], subsets[keep]
        offsets = np.einsum("bd,bd->b", normals, pts[subsets[:, 0]])
        # canonical sign so both orientations of a hyperplane collapse together
        first = normals[np.arange(len(normals)), np.argmax(normals != 0, axis=1)]
        sign = np.where(first < 0, -1, 1)
        normals, offsets = normals * sign[:, None], offsets * sign
        for row in np.unique(np.column_stack([normals, offsets]), axis=0):
            seen.setdefault(tuple(int(x) for x in row), None)

    hyper = np.array(list(seen), dtype=np.int64)
    N, c = hyper[:, :-1], hyper[:, -1]
    values = pts @ N.T
    upper = np.all(values <= c, axis=0)
    lower = np.all(values >= c, axis=0)
    normals = np.concatenate([N[upper], -N[lower & ~upper]])
    offsets = np.concatenate([c[upper], -c[lower & ~upper]])
    order = np.lexsort(np.column_stack([normals, offsets]).T[::-1])
    return Facets(normals[order], offsets[order])


def _box(poly: Polytope, t: int):
    lo = poly.points.min(axis=0) * t
    hi = poly.points.max(axis=0) * t
    return lo, hi


def box_size(poly: Polytope, t: int) -> int:
    """Number of lattice points in the bounding box of ``t * poly``."""
    lo, hi = _box(poly, t)
    return int(np.prod((hi - lo + 1).astype(object)))


def check_box_budget(poly: Polytope, t: int, budget: int = DEFAULT_BOX_BUDGET) -> None:
    total = box_size(poly, t)
    if total > budget:
        raise CapExceeded(f"bounding box of the {t}-dilate has {total} points (budget {budget})")


def _scan(poly: Polytope, t: int, strict: bool, collect: bool, budget: int):
    """Scan the dilated bounding box slice by slice; count or collect points."""
    N, c = poly.facets
    lo, hi = _box(poly, t)
    sizes = (hi - lo + 1).astype(np.int64)
    check_box_budget(poly, t, budget)
    bound = c * t
    d = poly.ambient_dim
    # fix enough leading coordinates that each slice stays small
    k = 0
    while k < d and int(np.prod(sizes[k:].astype(object))) > _SLICE:
        k += 1
    tail = np.indices(tuple(sizes[k:])).reshape(d - k, -1).T + lo[k:] if k < d else np.zeros((1, 0), np.int64)
    count = 0
    found = []
    for head in np.ndindex(*sizes[:k]) if k else [()]:
        X = np.empty((len(tail), d), dtype=np.int64)
        X[:, :k] = np.array(head, dtype=np.int64) + lo[:k]
        X[:, k:] = tail
        vals = X @ N.T
        mask = np.all(vals < bound, axis=1) if strict else np.all(vals <= bound, axis=1)
        count += int(mask.sum())
        if collect:
            found.append(X[mask])
    if collect:
        return count, (np.concatenate(found) if found else np.zeros((0, d), np.int64))
    return count, None


def lattice_point_count(poly: Polytope, t: int, budget: int = DEFAULT_BOX_BUDGET) -> int:
    """``#(t * poly) ∩ Z^d``."""
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    if t == 0:
        return 1
    return _scan(poly, t, strict=False, collect=False, budget=budget)[0]


def lattice_points(poly: Polytope, t: int = 1, budget: int = DEFAULT_BOX_BUDGET) -> np.ndarray:
    if t == 0:
        return np.zeros((1, poly.ambient_dim), dtype=np.int64)
    return _scan(poly, t, strict=False, collect=True, budget=budget)[1]


def interior_point_count(poly: Polytope, t: int, budget: int = DEFAULT_BOX_BUDGET) -> int:
    """Lattice points strictly inside ``t * poly``."""
    return _scan(poly, t, strict=True, collect=False, budget=budget)[0]


def interior_points(poly: Polytope, t: int = 1, budget: int = DEFAULT_BOX_BUDGET) -> np.ndarray:
    return _scan(poly, t, strict=True, collect=True, budget=budget)[1]


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Coefficients (constant first) of the interpolating polynomial."""
    coeffs = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    return coeffs


def evaluate(coeffs: Sequence[Fraction], t: int) -> Fraction:
    acc = Fraction(0)
    for a in reversed(coeffs):
        acc = acc * t + a
    return acc


def delta_from_counts(counts: Sequence[int], d: int) -> list[int]:
    """Numerator of the Ehrhart series from ``i(0..d)``."""
    return [sum((-1) ** k * comb(d + 1, k) * counts[j - k] for k in range(j + 1)) for j in range(d + 1)]


class EhrhartData(NamedTuple):
    counts: list  # i(t) for t = 0..d
    coefficients: list  # Fractions, constant term first
    delta: list
    method: str
    validated: bool

    def to_dict(self) -> dict:
        return {
            "counts": list(self.counts),
            "delta": list(self.delta),
            "polynomial": [f"{c.numerator}/{c.denominator}" for c in self.coefficients],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "EhrhartData":
        coeffs = [Fraction(s) for s in data["polynomial"]]
        return cls(list(data["counts"]), coeffs, list(data["delta"]), "loaded", False)


def ehrhart_delta(poly: Polytope, method: str = "auto", budget: int = DEFAULT_BOX_BUDGET) -> EhrhartData:
    """Ehrhart polynomial and delta-vector of a full-dimensional lattice polytope.

    ``direct`` counts dilates ``t = 0..d`` and checks ``t = d + 1`` out of
    sample.  ``reciprocity`` also uses interior counts, via
    ``i(-t) = (-1)^d * #interior(t * poly)``, which needs dilates only up to
    about ``d / 2``; it is chosen automatically when the direct box is too big.
    """
    d = poly.ambient_dim
    if not poly.is_full_dimensional:
        raise NotFullDim("Ehrhart data needs a full-dimensional polytope")
    if method == "auto":
        lo, hi = _box(poly, d + 1)
        method = "direct" if int(np.prod((hi - lo + 1).astype(object))) <= min(budget, 10**7) else "reciprocity"
    if method == "direct":
        counts = [1] + [lattice_point_count(poly, t, budget) for t in range(1, d + 2)]
        coeffs = _interpolate(list(range(d + 1)), counts[: d + 1])
        validated = evaluate(coeffs, d + 1) == counts[d + 1]
        counts = counts[: d + 1]
    elif method == "reciprocity":
        m = (d + 2) // 2  # dilates 1..m give 2m + 1 >= d + 2 values including t = 0
        xs, ys = [0], [1]
        for t in range(1, m + 1):
            xs += [t, -t]
            ys += [lattice_point_count(poly, t, budget), (-1) ** d * interior_point_count(poly, t, budget)]
        coeffs = _interpolate(xs[: d + 1], ys[: d + 1])
        validated = all(evaluate(coeffs, x) == y for x, y in zip(xs[d + 1:], ys[d + 1:]))
        counts = [int(evaluate(coeffs, t)) for t in range(d + 1)]
    else:
        raise ValueError(f"unknown method {method!r}")
    if not validated:
        raise ArithmeticError("Ehrhart interpolation failed its out-of-sample check")
    return EhrhartData(counts, coeffs, delta_from_counts(counts, d), method, validated)


def is_fano(poly: Polytope) -> bool:
    """Full-dimensional with the origin as its only interior lattice point."""
    if not poly.is_full_dimensional:
        raise NotFullDim("Fano test needs a full-dimensional polytope")
    if not poly.contains_origin_in_interior():
        return False
    inner = interior_points(poly, 1)
    return len(inner) == 1 and not inner.any()


class GorensteinCheck(NamedTuple):
    gorenstein: bool
    dual_integral: bool
    delta_symmetric: Optional[bool]
    offsets: list


def is_gorenstein_fano(poly: Polytope, delta: Optional[Sequence[int]] = None,
                       with_delta: bool = True) -> GorensteinCheck:
    """Dual integrality (all primitive facet offsets equal 1) and delta symmetry.

    For a Fano polytope the two criteria are equivalent; a disagreement
    raises ``AssertionError``.  Pass ``with_delta=False`` to skip the Ehrhart
    computation and report ``delta_symmetric=None``.
    """
    if not is_fano(poly):
        raise ValueError("Gorenstein test applies to Fano polytopes only")
    offsets = sorted({int(c) for c in poly.facets.offsets})
    dual_integral = offsets == [1]
    sym = None
    if delta is not None or with_delta:
        delta = list(delta) if delta is not None else ehrhart_delta(poly).delta
        sym = delta == delta[::-1]
        assert sym == dual_integral, "dual integrality and delta symmetry disagree"
    return GorensteinCheck(dual_integral, dual_integral, sym, offsets)


class NormalityCheck(NamedTuple):
    normal_up_to_T: bool
    witness: Optional[tuple]  # (t, point) of the first missing lattice point
    checked_up_to: int


def is_normal_up_to(poly: Polytope, T: int = 3, budget: int = DEFAULT_BOX_BUDGET) -> NormalityCheck:
    """Compare sums of ``t`` lattice points with the lattice points of ``t * poly``."""
    check_box_budget(poly, T, budget)
    base = lattice_points(poly, 1, budget)
    current = base
    for t in range(2, T + 1):
        current = np.unique((current[:, None, :] + base[None, :, :]).reshape(-1, poly.ambient_dim), axis=0)
        target = lattice_points(poly, t, budget)
        if len(target) != len(current):
            have = {tuple(r) for r in current.tolist()}
            missing = sorted(tuple(r) for r in target.tolist() if tuple(r) not in have)
            return NormalityCheck(False, (t, missing[0]), t)
    return NormalityCheck(True, None, T)


def eulerian_row(n: int) -> list[int]:
    """Eulerian numbers A(n, k), k = 0..n-1."""
    row = [1]
    for m in range(2, n + 1):
        prev = row + [0]
        row = [(k + 1) * prev[k] + (m - k) * (prev[k - 1] if k else 0) for k in range(m)]
    return row


class AntichainForms(NamedTuple):
    point_count: int
    delta: list
    zonotope_count: int


def antichain_closed_forms(d: int, t: int) -> AntichainForms:
    """Closed forms for the centrally symmetric polytope of the d-antichain."""
    if d > 10:
        raise CapExceeded("antichain closed forms are capped at d = 10")
    return AntichainForms(
        point_count=(t + 1) ** (d + 1) - t ** (d + 1),
        delta=eulerian_row(d + 1),
        zonotope_count=sum(comb(d + 1, k) * t**k for k in range(d + 1)),
    )
