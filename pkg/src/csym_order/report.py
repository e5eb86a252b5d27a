"""End-to-end verification pipelines producing JSON-serialisable reports."""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import fixtures
from .lattice import (DEFAULT_MINOR_BUDGET, IntMatrix, centrally_symmetric, is_unimodular,
                      lattice_spans, order_matrix)
from .polytope import (Polytope, antichain_closed_forms, csym_polytope, ehrhart_delta, is_fano,
                       check_box_budget, is_gorenstein_fano, is_normal_up_to, lattice_point_count,
                       order_polytope)
from .poset import Poset, enumerate_all_posets, enumerate_ideals, has_three_antichain
from .toric import (MonomialOrder, PosetRing, basis_standard_monomial_count, binomial_str,
                    buchberger_verify, canonical_order, hibi_csym_basis, in_kernel,
                    initial_ideal_minimal_generators, monomial_str, order_constraints_hold,
                    quadratic_generation_test, random_compatible_order, semigroup_degree_count)

SCHEMA = "1"
PASS, FAIL, INCONSISTENT = "PASS", "FAIL", "INCONSISTENT"


@dataclass
class Report:
    """Verification report for one poset (schema ``"1"``)."""

    input: dict
    seed: int
    ideals_count: int
    matrices: dict
    groebner: dict
    geometry: dict
    counts: dict
    consistency: dict
    verdict: str
    schema: str = SCHEMA
    elapsed_seconds: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    @property
    def passed(self) -> bool:
        return self.verdict == PASS


def parse_order(p: Poset, spec: str) -> tuple[str, MonomialOrder]:
    """``canonical`` or ``seed:N``."""
    if spec == "canonical":
        return spec, canonical_order(p)
    kind, _, value = spec.partition(":")
    if kind == "seed" and value.lstrip("-").isdigit():
        return spec, random_compatible_order(p, int(value))
    raise ValueError(f"unknown order {spec!r}; use 'canonical' or 'seed:N'")


def groebner_summary(p: Poset, order: MonomialOrder, ring: Optional[PosetRing] = None,
                     basis=None) -> dict:
    ring = ring or PosetRing.of(p)
    basis = basis if basis is not None else hibi_csym_basis(p, ring)
    check = buchberger_verify(basis, order)
    init = initial_ideal_minimal_generators(basis, order)
    return {
        "basis_size": len(basis),
        "all_in_kernel": all(in_kernel(p, b, ring) for b in basis),
        "order_compatible": order_constraints_hold(ring, order),
        "buchberger_pass": check.is_groebner,
        "failing_pair": list(check.failing_pair) if check.failing_pair else None,
        "pairs_checked": check.pairs_checked,
        "initial_generators": len(init.generators),
        "raw_lead_count": init.raw_lead_count,
        "all_squarefree": init.all_squarefree,
        "all_quadratic": init.all_quadratic,
    }


def classify(p: Poset, seed: int = 0, random_orders: int = 3, normal_T: int = 3,
             identity_max_t: int = 4, minor_budget: int = DEFAULT_MINOR_BUDGET,
             source: Optional[str] = None) -> Report:
    """Run the whole pipeline on one poset and cross-check the implication chain."""
    start = time.perf_counter()
    ring = PosetRing.of(p)
    ideals = enumerate_ideals(p)
    a = order_matrix(p)
    apm = centrally_symmetric(a)
    span = lattice_spans(a)
    span_pm = lattice_spans(apm)
    unimod = is_unimodular(a, minor_budget)
    matrices = {
        "order_matrix_shape": list(a.shape),
        "configuration_shape": list(apm.shape),
        "spans_full_lattice": span.spans_full_lattice,
        "configuration_spans_full_lattice": span_pm.spans_full_lattice,
        "elementary_divisors": span.elementary_divisors,
        "unimodular": unimod.unimodular,
        "witness_minor": ([list(unimod.witness_minor[0]), unimod.witness_minor[1]]
                          if unimod.witness_minor else None),
        "has_three_antichain": has_three_antichain(p),
    }

    basis = hibi_csym_basis(p, ring)
    orders = [("canonical", canonical_order(p))]
    orders += [(f"seed:{s}", random_compatible_order(p, s)) for s in range(seed, seed + random_orders)]
    per_order = {}
    for name, order in orders:
        per_order[name] = groebner_summary(p, order, ring, basis)
    canon = per_order["canonical"]
    groebner = dict(canon)
    groebner["orders"] = per_order
    gb_ok = all(
        o["buchberger_pass"] and o["all_squarefree"] and o["all_quadratic"]
        and o["all_in_kernel"] and o["order_compatible"]
        for o in per_order.values()
    )

    poly = csym_polytope(a)
    fano = is_fano(poly)
    ehr = ehrhart_delta(poly)
    gor = is_gorenstein_fano(poly, delta=ehr.delta) if fano else None
    normal = is_normal_up_to(poly, normal_T)
    geometry = {
        "dimension": poly.ambient_dim,
        "lattice_points": lattice_point_count(poly, 1),
        "facet_count": len(poly.facets.offsets),
        "fano": fano,
        "gorenstein": bool(gor and gor.gorenstein),
        "dual_integral": bool(gor and gor.dual_integral),
        "delta_symmetric": ehr.delta == ehr.delta[::-1],
        "normal_up_to": normal.checked_up_to if normal.normal_up_to_T else None,
        "normal": normal.normal_up_to_T,
        "normal_witness": [normal.witness[0], list(normal.witness[1])] if normal.witness else None,
        "delta": ehr.delta,
        "ehrhart_counts": ehr.counts,
        "ehrhart_polynomial": ehr.to_dict()["polynomial"],
    }

    canonical = canonical_order(p)
    standard = [basis_standard_monomial_count(basis, canonical, t) for t in range(identity_max_t + 1)]
    semigroup = [semigroup_degree_count(apm, t) for t in range(identity_max_t + 1)]
    lattice = [lattice_point_count(poly, t) for t in range(identity_max_t + 1)]
    counts = {"standard_monomials": standard, "semigroup": semigroup, "lattice_points": lattice}
    triple_ok = standard == semigroup == lattice

    # hypotheses of the normal-Gorenstein-Fano lemma on this instance
    premise = (span_pm.spans_full_lattice and gb_ok
               and geometry["lattice_points"] == len(set(apm.columns())))
    conclusion = fano and geometry["gorenstein"] and normal.normal_up_to_T
    consistency = {
        "lemma_premise": premise,
        "lemma_conclusion": conclusion,
        "triple_count_identity": triple_ok,
        "gorenstein_matches_delta": geometry["dual_integral"] == geometry["delta_symmetric"],
        "prop_unimodular_iff_no_3_antichain": unimod.unimodular == (not matrices["has_three_antichain"]),
    }
    if (premise and not conclusion) or not consistency["gorenstein_matches_delta"]:
        verdict = INCONSISTENT
    elif all(consistency.values()) and span.spans_full_lattice:
        verdict = PASS
    else:
        verdict = FAIL
    return Report(
        input={"source": source, **p.to_dict()},
        seed=seed,
        ideals_count=len(ideals),
        matrices=matrices,
        groebner=groebner,
        geometry=geometry,
        counts=counts,
        consistency=consistency,
        verdict=verdict,
        elapsed_seconds=round(time.perf_counter() - start, 3),
    )


def basis_listing(p: Poset, order: MonomialOrder) -> list[str]:
    ring = PosetRing.of(p)
    return [binomial_str(b, ring.variable_name) for b in hibi_csym_basis(p, ring)]


def ehrhart_report(poly: Polytope, dilate_max: int = 3, antichain_d: Optional[int] = None) -> dict:
    # fail before any work if the largest dilate is out of reach
    check_box_budget(poly, dilate_max)
    ehr = ehrhart_delta(poly)
    out = ehr.to_dict()
    out["counts"] = [lattice_point_count(poly, t) for t in range(dilate_max + 1)]
    out["method"] = ehr.method
    if antichain_d is not None:
        forms = [antichain_closed_forms(antichain_d, t) for t in range(dilate_max + 1)]
        out["closed_form"] = {
            "point_count": [f.point_count for f in forms],
            "zonotope_count": [f.zonotope_count for f in forms],
            "delta": forms[0].delta,
            "agrees": ([f.point_count for f in forms] == out["counts"]
                       == [f.zonotope_count for f in forms] and forms[0].delta == ehr.delta),
        }
    return out


def negative_example(normal_T: int = 3, kernel_degree_cap: int = 4) -> dict:
    """Re-check each stated property of the non-normal configuration.

    A claim counts as reproduced when the computation agrees with the
    statement.  Normality is reported ``inconclusive`` if no witness turns up
    within ``normal_T`` dilates.
    """
    a = fixtures.negative_configuration()
    apm = centrally_symmetric(a)
    poly = csym_polytope(a)
    claims = []

    span = lattice_spans(a)
    claims.append({"claim": "ZA = Z^7", "expected": True, "observed": span.spans_full_lattice,
                   "reproduced": span.spans_full_lattice})

    uni = is_unimodular(a)
    claims.append({"claim": "A is unimodular", "expected": False, "observed": uni.unimodular,
                   "reproduced": not uni.unimodular,
                   "witness_minor": ([list(uni.witness_minor[0]), uni.witness_minor[1]]
                                     if uni.witness_minor else None)})

    normal = is_normal_up_to(poly, normal_T)
    entry = {"claim": "Q_sym(A) is normal", "expected": False,
             "observed": False if not normal.normal_up_to_T else "inconclusive",
             "reproduced": not normal.normal_up_to_T}
    if normal.witness:
        entry["witness"] = [normal.witness[0], list(normal.witness[1])]
    else:
        entry["note"] = f"no counterexample up to dilate {normal_T}; larger dilates not searched"
    claims.append(entry)

    offsets = sorted({int(c) for c in poly.facets.offsets})
    gorenstein = is_fano(poly) and offsets == [1]
    claims.append({"claim": "Q_sym(A) is Gorenstein", "expected": False, "observed": gorenstein,
                   "reproduced": not gorenstein, "facet_offsets": offsets,
                   "facet_count": len(poly.facets.offsets)})

    order = MonomialOrder(range(apm.cols))
    quad = quadratic_generation_test(apm, order, kernel_degree_cap)
    names = lambda v: f"v{v}"
    claims.append({"claim": "I_{A^pm} generated by quadratic binomials", "expected": False,
                   "observed": quad.generated_in_degree_two_up_to_3,
                   "reproduced": not quad.generated_in_degree_two_up_to_3,
                   "witness": (binomial_str(quad.witness, names) if quad.witness else None),
                   "quadratic_binomials": quad.quadratic_count})
    return {"schema": SCHEMA, "claims": claims, "all_reproduced": all(c["reproduced"] for c in claims)}


def sweep(dmax: int = 4, seed: int = 0, random_orders: int = 1, progress=None) -> dict:
    """Classify every labeled poset with ``d <= dmax``."""
    rows = []
    for d in range(1, dmax + 1):
        posets = sorted(enumerate_all_posets(d), key=Poset.encoding)
        for p in posets:
            r = classify(p, seed=seed, random_orders=random_orders)
            rows.append({
                "d": d,
                "covers": p.to_dict()["covers"],
                "verdict": r.verdict,
                "unimodular": r.matrices["unimodular"],
                "three_antichain": r.matrices["has_three_antichain"],
                "prop_equivalence": r.consistency["prop_unimodular_iff_no_3_antichain"],
                "delta": r.geometry["delta"],
                "gb_generators": r.groebner["initial_generators"],
            })
            if progress:
                progress(rows[-1])
    per_d = {}
    for row in rows:
        s = per_d.setdefault(str(row["d"]), {"posets": 0, "pass": 0, "prop_equivalence": 0})
        s["posets"] += 1
        s["pass"] += row["verdict"] == PASS
        s["prop_equivalence"] += row["prop_equivalence"]
    ok = all(r["verdict"] == PASS and r["prop_equivalence"] for r in rows)
    return {"schema": SCHEMA, "dmax": dmax, "seed": seed, "summary": per_d, "all_pass": ok, "rows": rows}
