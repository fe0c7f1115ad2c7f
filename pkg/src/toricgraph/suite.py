"""Acceptance battery: ten numbered checks, each yielding a pass/fail record.

Every check is deterministic.  Wall-clock time is measured against a per-check
budget but left out of the JSON summary so repeated runs print identical bytes.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from . import catalog
from .code import (code_params, hilbert_function, hilbert_profile, torus_dimension,
                   torus_hilbert_series_coeffs, torus_min_distance, torus_regularity)
from .errors import CapExceeded, ToricGraphError
from .field import FieldSpec
from .generators import (balanced_partitions, conjectured_basis, bipartite_disjoint_generators, cycle_union_candidates,
                         even_cycle_generators, f_sigma_r, max_degree_witness, regularity_formula_disjoint,
                         regularity_upper_bound, sigma_swap, transfer)
from .graph import bridges, validate_cycle_family
from .groebner import test_conjecture as run_conjecture
from .ideal import Binomial, minimalize, read_binomials, vanishes_on, verify_generating_set
from .toric import enumerate_toric_set, length_formula, projective_torus

CYCLE_GRID = ((2, 3), (2, 4), (2, 5), (3, 3), (3, 4))
CONJECTURE_GRID = ((2, 3), (2, 4), (2, 5), (3, 3))


@dataclass
class SuiteConfig:
    enum_cap: int = 10 ** 8
    matrix_cap: int = 10 ** 8
    dist_cap: int = 10 ** 7
    generator_file: str | None = None  # replaces the fifteen two-triangle binomials in check 6
    only: tuple[int, ...] | None = None


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    details: dict = dc_field(default_factory=dict)
    findings: list[str] = dc_field(default_factory=list)
    skipped: str | None = None
    seconds: float = 0.0
    budget: float | None = None

    @property
    def within_budget(self) -> bool:
        return self.budget is None or self.seconds <= self.budget

    def line(self) -> str:
        status = "PASS" if self.passed else ("SKIP" if self.skipped else "FAIL")
        extra = f" ({self.skipped})" if self.skipped else ""
        return f"criterion {self.number:2d} {status}  {self.name}  [{self.seconds:.1f}s]{extra}"

    def to_json(self) -> dict:
        out = {"criterion": self.number, "name": self.name, "passed": self.passed,
               "details": self.details, "findings": self.findings}
        if self.skipped:
            out["skipped"] = self.skipped
        return out


class _Skip(Exception):
    pass


@lru_cache(maxsize=None)
def _field(q: int) -> FieldSpec:
    from .field import parse_q
    return FieldSpec(*parse_q(str(q)))


def _require(cfg: SuiteConfig, *caps: str):
    for name in caps:
        if getattr(cfg, name) <= 0:
            raise _Skip(f"{name} is {getattr(cfg, name)}")


# -- 1 ---------------------------------------------------------------------------

def check_length_formula(cfg: SuiteConfig) -> CriterionResult:
    _require(cfg, "enum_cap")
    corpus = catalog.length_corpus()
    mismatches, rows = [], 0
    for name, g in corpus.items():
        for q in (3, 4, 5):
            fld = _field(q)
            size = len(enumerate_toric_set(g, fld, cfg.enum_cap))
            formula = length_formula(g, fld)
            rows += 1
            if size != formula:
                mismatches.append({"graph": name, "q": q, "enumerated": size, "formula": formula})
    anchor = catalog.triangle_plus_square()
    anchors = {q: len(enumerate_toric_set(anchor, _field(q), cfg.enum_cap)) for q in (4, 5)}
    ok = not mismatches and len(corpus) >= 30 and anchors == {4: 243, 5: 1024}
    return CriterionResult(1, "length formula", ok, {
        "graphs": len(corpus), "cases": rows, "mismatches": mismatches,
        "triangle_plus_square": {str(q): v for q, v in anchors.items()}})


# -- 2 ---------------------------------------------------------------------------

def check_torus(cfg: SuiteConfig) -> CriterionResult:
    _require(cfg, "enum_cap", "matrix_cap", "dist_cap")
    bad, cases = [], 0
    for s in (2, 3, 4):
        for q in (3, 4, 5):
            x = projective_torus(s, _field(q), cfg.enum_cap)
            top = torus_regularity(s, q) + 2
            series = torus_hilbert_series_coeffs(s, q, top)
            for d in range(top + 1):
                h = hilbert_function(x, d, cfg.matrix_cap)
                cases += 1
                if not h == torus_dimension(s, q, d) == series[d]:
                    bad.append({"s": s, "q": q, "d": d, "rank": h,
                                "formula": torus_dimension(s, q, d), "series": series[d]})
            reg = hilbert_profile(x, cap=cfg.matrix_cap).regularity
            if reg != torus_regularity(s, q):
                bad.append({"s": s, "q": q, "regularity": reg, "expected": torus_regularity(s, q)})
    for q in (3, 4):
        x = projective_torus(3, _field(q), cfg.enum_cap)
        for d in range(1, torus_regularity(3, q)):
            got = code_params(x, d, True, cfg.matrix_cap, cfg.dist_cap).min_distance
            cases += 1
            if got != torus_min_distance(3, q, d):
                bad.append({"s": 3, "q": q, "d": d, "min_distance": got,
                            "formula": torus_min_distance(3, q, d)})
    return CriterionResult(2, "torus closed forms", not bad, {"cases": cases, "mismatches": bad})


# -- 3, 4, 5 ----------------------------------------------------------------------

def _cycle_set(k: int, q: int, cfg: SuiteConfig):
    x = enumerate_toric_set(catalog.cycle(2 * k), _field(q), cfg.enum_cap)
    return x, hilbert_profile(x, cap=cfg.matrix_cap)


def check_even_cycle_generation(cfg: SuiteConfig) -> CriterionResult:
    _require(cfg, "enum_cap", "matrix_cap")
    rows = []
    for k, q in CYCLE_GRID:
        x, prof = _cycle_set(k, q, cfg)
        gens = even_cycle_generators(k, q).binomials
        rep = verify_generating_set(gens, x, cap=cfg.matrix_cap, profile=prof)
        rows.append({"k": k, "q": q, "generators": len(gens), "generates": rep.generates,
                     "verified_up_to": rep.verified_up_to, "first_failure": rep.first_failure})
    return CriterionResult(3, "even-cycle generators", all(r["generates"] for r in rows), {"grid": rows})


def check_even_cycle_regularity(cfg: SuiteConfig) -> CriterionResult:
    _require(cfg, "enum_cap", "matrix_cap")
    rows = []
    for k, q in CYCLE_GRID:
        _, prof = _cycle_set(k, q, cfg)
        rows.append({"k": k, "q": q, "computed": prof.regularity, "formula": (q - 2) * (k - 1)})
    return CriterionResult(4, "even-cycle regularity", all(r["computed"] == r["formula"] for r in rows),
                           {"grid": rows})


def check_degree_extremes(cfg: SuiteConfig) -> CriterionResult:
    # the degree bound concerns the set without f_lambda^r (r >= 2); the full set is reported alongside
    rows, findings = [], []
    for k, q in CYCLE_GRID:
        gs = conjectured_basis(k, q)
        keys = {f.key() for f in gs.binomials}
        witness = max_degree_witness(k, q)
        top = max(f.degree for f in gs.binomials)
        low = min(f.degree for _, _, f in gs.combinatorial)
        full_top = max(f.degree for f in even_cycle_generators(k, q).binomials)
        want = (q - 2) * (k - 1) + 1
        ok = top == want == witness.degree and witness.key() in keys and low == k
        rows.append({"k": k, "q": q, "max_degree": top, "expected_max": want, "min_combinatorial": low,
                     "witness": str(witness), "witness_in_set": witness.key() in keys,
                     "max_degree_with_all_lambda": full_top, "ok": ok})
        if full_top != want:
            findings.append(f"(k={k}, q={q}) keeping f_lambda^r for r >= 2 raises the max degree to {full_top}")
    passed = all(r["ok"] for r in rows)
    for r in rows:
        del r["ok"]
    return CriterionResult(5, "degree extremes", passed, {"grid": rows}, findings)


# -- 6 ---------------------------------------------------------------------------

def check_two_triangles(cfg: SuiteConfig) -> CriterionResult:
    _require(cfg, "enum_cap", "matrix_cap")
    if cfg.generator_file:
        gens = read_binomials(cfg.generator_file)
        source = cfg.generator_file
    else:
        gens = catalog.two_triangles_generators()
        source = "built-in list"
    x = enumerate_toric_set(catalog.two_triangles(), _field(3), cfg.enum_cap)
    rep = verify_generating_set(gens, x, strict=False, cap=cfg.matrix_cap)
    redundant = minimalize(gens, verify=False, cap=cfg.matrix_cap)[1] if rep.generates else None
    details = {"source": source, "generators": len(gens), "generates": rep.generates,
               "non_vanishing": [str(gens[i]) for i, ok in enumerate(rep.vanishing) if not ok],
               "first_failure": rep.first_failure, "regularity": rep.regularity,
               "redundant": None if redundant is None else [str(gens[i]) for i in redundant]}
    return CriterionResult(6, "two-triangles generator list", rep.generates and redundant == [], details)


# -- 7 ---------------------------------------------------------------------------

def check_decorated_cycles(cfg: SuiteConfig) -> CriterionResult:
    _require(cfg, "enum_cap", "matrix_cap")
    rows = []
    for name, g in catalog.decorated_cycles().items():
        x = enumerate_toric_set(g, _field(3), cfg.enum_cap)
        prof = hilbert_profile(x, cap=cfg.matrix_cap)
        gens = bipartite_disjoint_generators(g, 3).binomials
        rep = verify_generating_set(gens, x, cap=cfg.matrix_cap, profile=prof)
        rows.append({"graph": name, "generates": rep.generates, "computed": prof.regularity,
                     "formula": regularity_formula_disjoint(g, 3)})
    ok = all(r["generates"] and r["computed"] == r["formula"] for r in rows)
    return CriterionResult(7, "bipartite disjoint-cycles pipeline", ok, {"graphs": rows})


# -- 8 ---------------------------------------------------------------------------

def check_shared_vertex_examples(cfg: SuiteConfig) -> CriterionResult:
    _require(cfg, "enum_cap", "matrix_cap")
    fld = _field(5)
    g1, g2 = catalog.two_squares_sharing_diagonal(), catalog.k23()
    x1 = enumerate_toric_set(g1, fld, cfg.enum_cap)
    x2 = enumerate_toric_set(g2, fld, cfg.enum_cap)
    prof1 = hilbert_profile(x1, cap=cfg.matrix_cap)
    prof2 = hilbert_profile(x2, cap=cfg.matrix_cap)
    fam1 = validate_cycle_family(g1, catalog.TWO_SQUARES_CYCLES)
    fam2 = validate_cycle_family(g2, catalog.K23_CYCLE)

    a = vanishes_on(catalog.two_squares_binomial(), x1)
    naive = cycle_union_candidates(g1, 5, fam1).binomials
    rep_b = verify_generating_set(naive, x1, cap=cfg.matrix_cap, profile=prof1)
    b = not rep_b.generates
    bound1 = regularity_upper_bound(g1, 5, fam1)
    c = prof1.regularity == 9 == bound1
    printed = vanishes_on(catalog.k23_binomial_as_printed(), x2)
    bound2 = regularity_upper_bound(g2, 5, fam2)
    d = printed and prof2.regularity == 6 and bound2 == 9

    findings = []
    weighted = vanishes_on(catalog.k23_binomial_weighted(), x2)
    if not printed:
        findings.append(f"{catalog.k23_binomial_as_printed()} does not vanish on X(K_2,3); "
                        f"{catalog.k23_binomial_weighted()} does: {weighted}")
    details = {
        "a_vanishes": a,
        "b_naive_generators": len(naive), "b_generates": rep_b.generates, "b_first_failure": rep_b.first_failure,
        "c_regularity": prof1.regularity, "c_bound": bound1,
        "d_printed_vanishes": printed, "d_weighted_vanishes": weighted,
        "d_regularity": prof2.regularity, "d_bound": bound2,
        "parts": {"a": a, "b": b, "c": c, "d": d},
    }
    return CriterionResult(8, "shared-vertex examples (q=5)", a and b and c and d, details, findings)


# -- 9 ---------------------------------------------------------------------------

def check_conjecture(cfg: SuiteConfig) -> CriterionResult:
    _require(cfg, "enum_cap", "matrix_cap")
    rows, findings = [], []
    for k, q in CONJECTURE_GRID:
        rep = run_conjecture(k, q, enum_cap=cfg.enum_cap)
        rows.append({"k": k, "q": q, "generates": rep.generates, "minimal": rep.minimal,
                     "groebner": rep.groebner, "basis_size": rep.size})
        for verdict in ("minimal", "groebner"):
            if not getattr(rep, verdict):
                findings.append(f"(k={k}, q={q}) {verdict} = false: {rep.witnesses}")
    return CriterionResult(9, "even-cycle conjecture battery", all(r["generates"] for r in rows),
                           {"grid": rows, "order": "grevlex t1>...>ts"}, findings)


# -- 10 --------------------------------------------------------------------------

def _prop_profiles(cfg: SuiteConfig) -> dict:
    bad, cases = [], 0
    for name, g in catalog.length_corpus().items():
        for q in (3, 4, 5):
            x = enumerate_toric_set(g, _field(q), cfg.enum_cap)
            try:
                prof = hilbert_profile(x, cap=cfg.matrix_cap)
            except AssertionError as exc:
                bad.append({"graph": name, "q": q, "error": str(exc)})
                continue
            cases += 1
            v = prof.values
            if any(b < a for a, b in zip(v, v[1:])) or v[-1] != len(x) or prof.regularity > max(len(x) - 1, 0):
                bad.append({"graph": name, "q": q, "values": v})
    return {"cases": cases, "violations": bad}


def _prop_singleton(cfg: SuiteConfig) -> dict:
    bad, checked, skipped = [], 0, 0
    graphs = list(catalog.length_corpus().items()) + [(f"torus{s}", None) for s in (2, 3, 4)]
    for name, g in graphs:
        for q in (3, 4):
            fld = _field(q)
            x = projective_torus(int(name[-1]), fld, cfg.enum_cap) if g is None else enumerate_toric_set(g, fld, cfg.enum_cap)
            prof = hilbert_profile(x, cap=cfg.matrix_cap)
            for d, dim in enumerate(prof.values):
                if q ** dim > min(cfg.dist_cap, 10 ** 5):
                    skipped += 1
                    continue
                cp = code_params(x, d, True, cfg.matrix_cap, cfg.dist_cap)
                checked += 1
                if cp.min_distance > cp.length - cp.dimension + 1:
                    bad.append({"graph": name, "q": q, **cp.to_json()})
    return {"checked": checked, "over_cap": skipped, "violations": bad}


def _prop_swap() -> dict:
    bad = []
    for k, q in ((2, 5), (3, 3)):
        comb_set = {f.key() for _, _, f in even_cycle_generators(k, q).combinatorial}
        for key in comb_set:
            f = Binomial(*sorted(key)) if len(key) == 2 else None
            for i in range(1, 2 * k - 1):
                if sigma_swap(f, i).key() not in comb_set:
                    bad.append({"k": k, "q": q, "binomial": str(f), "i": i})
    return {"violations": bad}


def _normalized_vanishing(x, q: int, max_degree: int):
    """Every normalized homogeneous binomial of degree <= max_degree vanishing on X (brute force)."""
    s = x.s
    vectors = [v for v in itertools.product(range(q - 1), repeat=s) if 0 < sum(v) <= max_degree]
    by_degree: dict[int, list] = {}
    for v in vectors:
        by_degree.setdefault(sum(v), []).append(v)
    for vs in by_degree.values():
        for a, b in itertools.combinations(vs, 2):
            if any(u and w for u, w in zip(a, b)):
                continue
            f = Binomial(a, b)
            if vanishes_on(f, x):
                yield f


def _prop_bridges(cfg: SuiteConfig) -> dict:
    bad, searched = [], 0
    for name, g in catalog.decorated_cycles().items():
        bridge_vars = bridges(g)
        for q in (3, 4) if g.s <= 6 else (3,):
            x = enumerate_toric_set(g, _field(q), cfg.enum_cap)
            gens = bipartite_disjoint_generators(g, q).binomials
            rep = verify_generating_set(gens, x, cap=cfg.matrix_cap)
            if not rep.generates:
                bad.append({"graph": name, "q": q, "error": "generator set failed verification"})
            for f in gens:
                if f.is_normalized(q) and any(f.a[i] or f.b[i] for i in bridge_vars):
                    bad.append({"graph": name, "q": q, "binomial": str(f)})
            for f in _normalized_vanishing(x, q, g.s):
                searched += 1
                if any(f.a[i] or f.b[i] for i in bridge_vars):
                    bad.append({"graph": name, "q": q, "search_hit": str(f)})
    return {"normalized_vanishing_found": searched, "violations": bad}


def _prop_transfer(cfg: SuiteConfig) -> dict:
    bad, checked = [], 0
    for k, qs in ((2, (3, 4, 5)), (3, (3, 4))):
        for q in qs:
            x = enumerate_toric_set(catalog.cycle(2 * k), _field(q), cfg.enum_cap)
            for sigma in balanced_partitions(2 * k):
                for i in range(3, 2 * k + 1):
                    if not (i in sigma.A and (i - 1) not in sigma.A):
                        continue
                    moved = transfer(sigma, i)
                    for r in range(1, q - 1):
                        checked += 1
                        before = vanishes_on(f_sigma_r(sigma, r, q), x)
                        after = vanishes_on(f_sigma_r(moved, r, q), x)
                        if before != after:
                            bad.append({"k": k, "q": q, "sigma": str(sigma), "i": i, "r": r})
    return {"checked": checked, "violations": bad}


def check_properties(cfg: SuiteConfig) -> CriterionResult:
    _require(cfg, "enum_cap", "matrix_cap", "dist_cap")
    parts = {"a_hilbert": _prop_profiles(cfg), "b_singleton": _prop_singleton(cfg), "c_swap": _prop_swap(),
             "d_bridges": _prop_bridges(cfg), "e_transfer": _prop_transfer(cfg)}
    ok = all(not p["violations"] for p in parts.values())
    return CriterionResult(10, "property suites", ok, parts)


CHECKS = {
    1: (check_length_formula, 60), 2: (check_torus, 120), 3: (check_even_cycle_generation, 300),
    4: (check_even_cycle_regularity, None), 5: (check_degree_extremes, None), 6: (check_two_triangles, None),
    7: (check_decorated_cycles, 300), 8: (check_shared_vertex_examples, 600), 9: (check_conjecture, None),
    10: (check_properties, None),
}


def run_criterion(number: int, cfg: SuiteConfig) -> CriterionResult:
    fn, budget = CHECKS[number]
    name = fn.__name__.removeprefix("check_").replace("_", " ")
    start = time.perf_counter()
    try:
        res = fn(cfg)
    except _Skip as exc:
        res = CriterionResult(number, name, False, skipped=f"skipped: {exc}")
    except CapExceeded as exc:
        res = CriterionResult(number, name, False, skipped=f"skipped: {exc}")
    except ToricGraphError as exc:
        res = CriterionResult(number, name, False, {"error": f"{type(exc).__name__}: {exc}"})
    res.seconds = time.perf_counter() - start
    res.budget = budget
    if not res.within_budget:
        res.passed = False
        res.findings.append(f"exceeded time budget of {budget}s")
    return res


def run_suite(cfg: SuiteConfig | None = None, progress=None) -> list[CriterionResult]:
    cfg = cfg or SuiteConfig()
    out = []
    for number in sorted(CHECKS):
        if cfg.only and number not in cfg.only:
            continue
        res = run_criterion(number, cfg)
        if progress:
            progress(res)
        out.append(res)
    return out


def summary_json(results) -> dict:
    return {"passed": all(r.passed for r in results), "criteria": [r.to_json() for r in results]}
