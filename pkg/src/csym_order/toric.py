"""Binomials, monomial orders and Gröbner-basis checks for toric ideals.

Monomials are tuples of exponents indexed by variable number.  For a poset
ring the variables follow the column order of the centrally symmetric
configuration: ``0`` is ``z``, ``1..n`` are ``x_I`` and ``n+1..2n`` are
``y_I`` for the nonempty ideals ``I`` in canonical order.

Orders are graded reverse lexicographic.  Plain reverse lex is not a
well-order on all monomials, but every ideal handled here is homogeneous,
so comparing degree first agrees with it on the data that matters.
"""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import CapExceeded, CompletionCapExceeded, NotMarked
from .lattice import IntMatrix, centrally_symmetric, order_matrix
from .poset import Poset, enumerate_ideals, maximal_elements

Monomial = tuple

MAX_KERNEL_DEGREE = 3
MAX_STANDARD_DEGREE = 8
MAX_SEMIGROUP_DEGREE = 8


class Binomial(NamedTuple):
    lead: Monomial
    trail: Monomial


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


@dataclass(frozen=True)
class PosetRing:
    """Variable bookkeeping for the polynomial ring ``S_P``."""

    poset: Poset
    ideals: tuple  # nonempty ideals, canonical order

    @classmethod
    def of(cls, p: Poset) -> "PosetRing":
        return cls(p, tuple(enumerate_ideals(p)[1:]))

    @property
    def n(self) -> int:
        return len(self.ideals)

    @property
    def nvars(self) -> int:
        return 2 * self.n + 1

    @cached_property
    def index(self) -> dict:
        return {ideal: k for k, ideal in enumerate(self.ideals)}

    def x(self, ideal: Iterable[int]) -> int:
        """Variable number of ``x_I``; the empty ideal maps to ``z``."""
        ideal = frozenset(ideal)
        return 0 if not ideal else 1 + self.index[ideal]

    def y(self, ideal: Iterable[int]) -> int:
        ideal = frozenset(ideal)
        return 0 if not ideal else 1 + self.n + self.index[ideal]

    def monomial(self, *variables: int) -> Monomial:
        e = [0] * self.nvars
        for v in variables:
            e[v] += 1
        return tuple(e)

    def variable_name(self, v: int) -> str:
        if v == 0:
            return "z"
        kind, k = ("x", v - 1) if v <= self.n else ("y", v - 1 - self.n)
        return kind + "{" + ",".join(map(str, sorted(self.ideals[k]))) + "}"

    @cached_property
    def configuration(self) -> IntMatrix:
        return centrally_symmetric(order_matrix(self.poset))


def monomial_str(m: Monomial, names) -> str:
    parts = []
    for v, e in enumerate(m):
        if e:
            parts.extend([names(v)] * e)
    return "*".join(parts) if parts else "1"


def binomial_str(b: Binomial, names) -> str:
    return f"{monomial_str(b.lead, names)} - {monomial_str(b.trail, names)}"


def parse_monomial(text: str, ring: PosetRing) -> Monomial:
    lookup = {ring.variable_name(v): v for v in range(ring.nvars)}
    text = text.strip()
    if text == "1":
        return (0,) * ring.nvars
    return ring.monomial(*(lookup[tok.strip()] for tok in text.split("*")))


def parse_binomial(line: str, ring: PosetRing) -> Binomial:
    lead, _, trail = line.partition(" - ")
    return Binomial(parse_monomial(lead, ring), parse_monomial(trail, ring))


class MonomialOrder:
    """Graded reverse lexicographic order given by a ranking of variables.

    ``rank[v]`` is the position of variable ``v`` counted from the smallest.
    """

    def __init__(self, rank: Sequence[int]):
        rank = tuple(rank)
        if sorted(rank) != list(range(len(rank))):
            raise ValueError("rank must be a permutation of 0..n-1")
        self.rank = rank
        self.ascending = tuple(sorted(range(len(rank)), key=rank.__getitem__))

    @classmethod
    def from_ascending(cls, variables: Sequence[int]) -> "MonomialOrder":
        rank = [0] * len(variables)
        for pos, v in enumerate(variables):
            rank[v] = pos
        return cls(rank)

    def key(self, m: Monomial):
        return (sum(m), tuple(-m[v] for v in self.ascending))

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def mark(self, u: Monomial, v: Monomial) -> Binomial:
        return Binomial(u, v) if self.key(u) > self.key(v) else Binomial(v, u)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.rank == other.rank

    def __hash__(self):
        return hash(self.rank)

    def __repr__(self):
        return f"MonomialOrder(ascending={self.ascending})"


def order_constraints_hold(ring: PosetRing, order: MonomialOrder) -> bool:
    """z smallest; x_I < x_J and y_I < y_J whenever I is a proper subset of J."""
    if order.ascending[0] != 0:
        return False
    for i, I in enumerate(ring.ideals):
        for j, J in enumerate(ring.ideals):
            if I < J:
                if order.rank[1 + i] >= order.rank[1 + j]:
                    return False
                if order.rank[1 + ring.n + i] >= order.rank[1 + ring.n + j]:
                    return False
    return True


def canonical_order(p: Poset) -> MonomialOrder:
    """z, then y_I before x_I for each nonempty ideal in canonical order."""
    ring = PosetRing.of(p)
    asc = [0]
    for k in range(ring.n):
        asc += [1 + ring.n + k, 1 + k]
    return MonomialOrder.from_ascending(asc)


def random_compatible_order(p: Poset, seed) -> MonomialOrder:
    """Random linear extension of the order constraints, deterministic per seed.

    Repeatedly picks uniformly among the currently minimal variables.
    """
    ring = PosetRing.of(p)
    rng = random.Random(seed)
    n = ring.n
    preds = {v: set() for v in range(1, 2 * n + 1)}
    for i, I in enumerate(ring.ideals):
        for j, J in enumerate(ring.ideals):
            if I < J:
                preds[1 + j].add(1 + i)
                preds[1 + n + j].add(1 + n + i)
    asc = [0]
    placed: set = set()
    remaining = set(preds)
    while remaining:
        ready = sorted(v for v in remaining if preds[v] <= placed)
        v = rng.choice(ready)
        asc.append(v)
        placed.add(v)
        remaining.discard(v)
    return MonomialOrder.from_ascending(asc)


def hibi_csym_basis(p: Poset, ring: Optional[PosetRing] = None) -> list[Binomial]:
    """The explicit quadratic binomial family for ``I_{A_P^pm}``.

    Lead term is the first monomial of each family member:
    ``x_I x_J - x_{I|J} x_{I&J}``, ``y_I y_J - y_{I|J} y_{I&J}`` for
    incomparable ``I, J``, and ``x_I y_J - x_{I-k} y_{J-k}`` for every ``k``
    maximal in both ``I`` and ``J``.
    """
    ring = ring or PosetRing.of(p)
    out = []
    for I, J in combinations(ring.ideals, 2):
        if not (I <= J or J <= I):
            out.append(Binomial(ring.monomial(ring.x(I), ring.x(J)),
                                ring.monomial(ring.x(I | J), ring.x(I & J))))
    for I, J in combinations(ring.ideals, 2):
        if not (I <= J or J <= I):
            out.append(Binomial(ring.monomial(ring.y(I), ring.y(J)),
                                ring.monomial(ring.y(I | J), ring.y(I & J))))
    for I in ring.ideals:
        max_i = maximal_elements(p, I)
        for J in ring.ideals:
            for k in sorted(max_i & maximal_elements(p, J)):
                out.append(Binomial(ring.monomial(ring.x(I), ring.y(J)),
                                    ring.monomial(ring.x(I - {k}), ring.y(J - {k}))))
    return out


class LaurentExponent(NamedTuple):
    s_degree: int
    t_exponents: tuple


def image(a: IntMatrix, m: Monomial) -> tuple:
    """Exponent vector of the image of ``m`` under the toric map of ``a``."""
    return tuple(sum(e * row[v] for v, e in enumerate(m) if e) for row in a.entries)


def pi_image(p: Poset, m: Monomial, ring: Optional[PosetRing] = None) -> LaurentExponent:
    ring = ring or PosetRing.of(p)
    t = [0] * p.d
    for v, e in enumerate(m):
        if not e or v == 0:
            continue
        sign = 1 if v <= ring.n else -1
        for i in ring.ideals[(v - 1) % ring.n]:
            t[i - 1] += sign * e
    return LaurentExponent(degree(m), tuple(t))


def in_kernel(p: Poset, b: Binomial, ring: Optional[PosetRing] = None) -> bool:
    ring = ring or PosetRing.of(p)
    return pi_image(p, b.lead, ring) == pi_image(p, b.trail, ring)


class Reducer:
    """Division by a marked binomial list, lowest-index divisor first."""

    def __init__(self, basis: Sequence[Binomial], order: Optional[MonomialOrder] = None):
        self.basis = list(basis)
        self.by_var = defaultdict(list)
        self.lead_support = []
        for k, b in enumerate(self.basis):
            if order is not None and order.key(b.lead) <= order.key(b.trail):
                raise NotMarked(f"basis element {k} has lead <= trail")
            self._index(k, b)

    def _index(self, k: int, b: Binomial):
        support = tuple((v, e) for v, e in enumerate(b.lead) if e)
        self.lead_support.append(support)
        for v, _ in support:
            self.by_var[v].append(k)

    def add(self, b: Binomial) -> int:
        self.basis.append(b)
        k = len(self.basis) - 1
        self._index(k, b)
        return k

    def divisor(self, m: Monomial) -> Optional[int]:
        best = None
        for v, e in enumerate(m):
            if not e:
                continue
            for k in self.by_var[v]:
                if best is not None and k >= best:
                    break
                if all(m[w] >= f for w, f in self.lead_support[k]):
                    best = k
                    break
        return best

    def normal_form(self, m: Monomial) -> Monomial:
        while True:
            k = self.divisor(m)
            if k is None:
                return m
            b = self.basis[k]
            m = tuple(x - y + z for x, y, z in zip(m, b.lead, b.trail))


def normal_form(m: Monomial, basis: Sequence[Binomial], order: MonomialOrder) -> Monomial:
    return Reducer(basis, order).normal_form(m)


def s_binomial(f: Binomial, g: Binomial) -> tuple[Monomial, Monomial]:
    L = mono_lcm(f.lead, g.lead)
    return mono_mul(mono_div(L, f.lead), f.trail), mono_mul(mono_div(L, g.lead), g.trail)


class GroebnerCheck(NamedTuple):
    is_groebner: bool
    failing_pair: Optional[tuple[int, int]]
    pairs_checked: int


def buchberger_verify(basis: Sequence[Binomial], order: MonomialOrder) -> GroebnerCheck:
    """Buchberger's criterion on a marked binomial list.

    Each S-binomial ``a - b`` reduces to zero iff ``a`` and ``b`` share a
    normal form.  Pairs with coprime leads are skipped.  The first failing
    pair in sorted pair order is reported.
    """
    red = Reducer(basis, order)
    checked = 0
    for i, j in combinations(range(len(basis)), 2):
        f, g = basis[i], basis[j]
        if coprime(f.lead, g.lead):
            continue
        checked += 1
        a, b = s_binomial(f, g)
        if a != b and red.normal_form(a) != red.normal_form(b):
            return GroebnerCheck(False, (i, j), checked)
    return GroebnerCheck(True, None, checked)


class InitialIdeal(NamedTuple):
    generators: list
    all_squarefree: bool
    all_quadratic: bool
    raw_lead_count: int


def initial_ideal_minimal_generators(basis: Sequence[Binomial], order: MonomialOrder) -> InitialIdeal:
    leads = []
    for b in basis:
        if order.key(b.lead) <= order.key(b.trail):
            raise NotMarked(f"{b} is not marked under the order")
        leads.append(b.lead)
    distinct = sorted(set(leads), key=lambda m: (sum(m), m))
    minimal = []
    for m in distinct:
        if not any(divides(g, m) for g in minimal):
            minimal.append(m)
    return InitialIdeal(
        generators=minimal,
        all_squarefree=all(is_squarefree(m) for m in minimal),
        all_quadratic=all(sum(m) == 2 for m in minimal),
        raw_lead_count=len(leads),
    )


def standard_monomial_count(leads: Sequence[Monomial], nvars: int, t: int,
                            cap: int = MAX_STANDARD_DEGREE) -> int:
    """Number of degree-``t`` monomials divisible by none of ``leads``.

    Depth-first over variables in index order, pruning as soon as a
    partial monomial is divisible by a lead (every extension then is too).
    """
    if t > cap:
        raise CapExceeded(f"degree {t} exceeds the standard-monomial cap {cap}")
    by_var_any = defaultdict(list)
    for g in leads:
        for v, e in enumerate(g):
            if e:
                by_var_any[v].append(g)
    m = [0] * nvars

    def blocked(v):
        return any(all(m[w] >= f for w, f in enumerate(g) if f) for g in by_var_any[v])

    def count(start, left):
        if left == 0:
            return 1
        total = 0
        for v in range(start, nvars):
            m[v] += 1
            if not blocked(v):
                total += count(v, left - 1)
            m[v] -= 1
        return total

    return count(0, t)


def basis_standard_monomial_count(basis: Sequence[Binomial], order: MonomialOrder, t: int,
                                  cap: int = MAX_STANDARD_DEGREE) -> int:
    gens = initial_ideal_minimal_generators(basis, order).generators
    nvars = len(order.rank)
    return standard_monomial_count(gens, nvars, t, cap)


def semigroup_degree_count(a: IntMatrix, t: int, cap: int = MAX_SEMIGROUP_DEGREE) -> int:
    """Number of distinct sums of ``t`` columns (with repetition)."""
    if a.rows == 0 or any(x != 1 for x in a.entries[-1]):
        raise ValueError("last row of the configuration must be all ones")
    if t > cap:
        raise CapExceeded(f"degree {t} exceeds the semigroup cap {cap}")
    cols = set(a.columns())
    level = {(0,) * a.rows}
    for _ in range(t):
        level = {tuple(x + y for x, y in zip(s, c)) for s in level for c in cols}
    return len(level)


def kernel_fibers(a: IntMatrix, t: int) -> dict:
    """Degree-``t`` monomials bucketed by image vector."""
    n = a.cols
    fibers = defaultdict(list)
    cols = a.columns()
    for combo in combinations_with_replacement(range(n), t):
        e = [0] * n
        for v in combo:
            e[v] += 1
        img = tuple(sum(col[i] for col in (cols[v] for v in combo)) for i in range(a.rows))
        fibers[img].append(tuple(e))
    return fibers


def degree_bounded_kernel(a: IntMatrix, D: int, cap: int = MAX_KERNEL_DEGREE) -> list[Binomial]:
    """All kernel binomials ``u - v`` with ``deg u = deg v <= D``, up to sign.

    Orientation is fixed so that ``u`` is the lexicographically larger
    exponent vector; callers re-mark under their own order.
    """
    if D > cap:
        raise CapExceeded(f"kernel degree {D} exceeds cap {cap}")
    out = []
    for t in range(1, D + 1):
        for fiber in kernel_fibers(a, t).values():
            for u, v in combinations(sorted(fiber, reverse=True), 2):
                out.append(Binomial(u, v))
    return out


def kernel_spanning_binomials(a: IntMatrix, t: int) -> list[Binomial]:
    """One binomial per non-trivial fiber member against the fiber's first monomial.

    These span every degree-``t`` kernel binomial (same span as all pairs).
    """
    out = []
    for fiber in kernel_fibers(a, t).values():
        fiber = sorted(fiber, reverse=True)
        out.extend(Binomial(fiber[0], v) for v in fiber[1:])
    return out


@dataclass
class Completion:
    """Degree-truncated Gröbner basis of a binomial ideal."""

    reducer: Reducer
    degree_cap: int
    skipped_pairs: int = 0
    added: int = 0

    @property
    def basis(self) -> list:
        return self.reducer.basis

    def normal_form(self, m: Monomial) -> Monomial:
        return self.reducer.normal_form(m)


def buchberger_complete(generators: Sequence[Binomial], order: MonomialOrder,
                        degree_cap: int = 4, max_size: int = 50_000) -> Completion:
    """Binomial Buchberger completion, truncated at ``degree_cap``.

    For homogeneous input, processing every S-pair whose lcm has degree at
    most ``degree_cap`` decides ideal membership exactly in degrees up to
    the cap.  S-pairs above the cap are counted in ``skipped_pairs``.
    """
    red = Reducer([], order)
    for g in generators:
        u, v = red.normal_form(g.lead), red.normal_form(g.trail)
        if u != v:
            red.add(order.mark(u, v))
    pending = [(i, j) for j in range(len(red.basis)) for i in range(j)]
    comp = Completion(red, degree_cap)
    while pending:
        i, j = pending.pop()
        f, g = red.basis[i], red.basis[j]
        if coprime(f.lead, g.lead):
            continue
        if sum(mono_lcm(f.lead, g.lead)) > degree_cap:
            comp.skipped_pairs += 1
            continue
        a, b = s_binomial(f, g)
        a, b = red.normal_form(a), red.normal_form(b)
        if a == b:
            continue
        if len(red.basis) >= max_size:
            raise CompletionCapExceeded(f"completion exceeded {max_size} binomials")
        k = red.add(order.mark(a, b))
        comp.added += 1
        pending.extend((i, k) for i in range(k))
    return comp


class QuadraticGeneration(NamedTuple):
    generated_in_degree_two_up_to_3: bool
    witness: Optional[Binomial]
    quadratic_count: int
    cubic_count: int
    completion_size: int


def quadratic_generation_test(a: IntMatrix, order: MonomialOrder, degree_cap: int = 4) -> QuadraticGeneration:
    """Decide whether the cubic part of ``I_a`` lies in the ideal of its quadrics.

    Returns the first spanning cubic kernel binomial whose two monomials keep
    different normal forms against the completed quadratic basis.
    """
    quads = [order.mark(*b) for b in kernel_spanning_binomials(a, 2)]
    comp = buchberger_complete(quads, order, degree_cap=degree_cap)
    cubics = [order.mark(*b) for b in kernel_spanning_binomials(a, 3)]
    witness = None
    for b in cubics:
        if comp.normal_form(b.lead) != comp.normal_form(b.trail):
            witness = b
            break
    return QuadraticGeneration(witness is None, witness, len(quads), len(cubics), len(comp.basis))
