"""Command-line entry point: ``toricgraph <command> ...``.

JSON on stdout is the canonical output; ``--format csv`` prints a flat
projection.  Exit codes: 0 ok, 2 bad input, 3 cap exceeded, 4 verification failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .code import (DEFAULT_DIST_CAP, DEFAULT_MATRIX_CAP, code_params, hilbert_function, hilbert_profile,
                   torus_dimension, torus_hilbert_series_coeffs, torus_min_distance, torus_regularity)
from .errors import (CapExceeded, EnumerationTooLarge, InputError, SearchTooLarge,
                     ToricGraphError, VerificationFailure)
from .field import FieldSpec, parse_q
from .generators import (bipartite_disjoint_generators, cycle_union_candidates, even_cycle_generators,
                         regularity_formula_disjoint, regularity_upper_bound)
from .graph import NotDisjoint, components, cycle_blocks, read_graph, validate_cycle_family
from .groebner import MonomialOrder, test_conjecture
from .ideal import format_binomials, minimalize, verify_generating_set
from .toric import DEFAULT_ENUM_CAP, enumerate_toric_set, length_formula, projective_torus

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_VERIFY = 0, 2, 3, 4

log = logging.getLogger("toricgraph")


@dataclass(frozen=True)
class RunConfig:
    field: FieldSpec
    graph_path: str | None = None
    max_d: int | None = None
    enum_cap: int = DEFAULT_ENUM_CAP
    matrix_cap: int = DEFAULT_MATRIX_CAP
    dist_cap: int = DEFAULT_DIST_CAP
    fmt: str = "json"
    normalize: bool = False
    out: str | None = None

    def __post_init__(self):
        for name in ("enum_cap", "matrix_cap", "dist_cap"):
            if getattr(self, name) <= 0:
                raise InputError(f"--{name.replace('_', '-')} must be positive")
        if self.max_d is not None and self.max_d < 0:
            raise InputError("--max-d must be >= 0")


def _field_from_args(args) -> FieldSpec:
    p, m = parse_q(args.q)
    modulus = None
    if args.modulus:
        try:
            modulus = [int(c) for c in args.modulus.split(",")]
        except ValueError:
            raise InputError(f"bad --modulus {args.modulus!r}") from None
    return FieldSpec(p, m, modulus)


def _config(args) -> RunConfig:
    kwargs = dict(field=_field_from_args(args), graph_path=getattr(args, "graph", None),
                  max_d=args.max_d, enum_cap=args.enum_cap, matrix_cap=args.matrix_cap,
                  dist_cap=args.dist_cap, fmt=args.format, normalize=args.normalize, out=args.out)
    return RunConfig(**kwargs)


def _graph(cfg: RunConfig):
    return read_graph(cfg.graph_path, normalize=cfg.normalize)


def _parse_cycles(text: str | None):
    """"1,2,3,4;3,5,1,6" -> [(1,2,3,4), (3,5,1,6)]."""
    if not text:
        return None
    try:
        return [tuple(int(v) for v in part.split(",")) for part in text.split(";") if part.strip()]
    except ValueError:
        raise InputError(f"bad --cycles {text!r}") from None


def _graph_json(g) -> dict:
    return {"n": g.n, "s": g.s}


# -- commands -----------------------------------------------------------------------

def cmd_length(cfg: RunConfig) -> dict:
    g = _graph(cfg)
    formula = length_formula(g, cfg.field)
    try:
        enumerated = len(enumerate_toric_set(g, cfg.field, cfg.enum_cap))
    except EnumerationTooLarge as exc:
        log.warning("%s; reporting the formula only", exc)
        enumerated = None
    return {"field": cfg.field.to_json(), "graph": _graph_json(g), "formula": formula,
            "enumerated": enumerated, "match": None if enumerated is None else enumerated == formula}


def cmd_code(cfg: RunConfig, d: int, want_min_distance: bool) -> dict:
    g = _graph(cfg)
    x = enumerate_toric_set(g, cfg.field, cfg.enum_cap)
    params = code_params(x, d, want_min_distance, cfg.matrix_cap, cfg.dist_cap)
    return {"field": cfg.field.to_json(), "graph": _graph_json(g), **params.to_json()}


def _block_family(g):
    fam = cycle_blocks(g)
    return None if isinstance(fam, NotDisjoint) else fam


def cmd_regularity(cfg: RunConfig, cycles=None) -> tuple[dict, object]:
    g = _graph(cfg)
    q = cfg.field.q
    x = enumerate_toric_set(g, cfg.field, cfg.enum_cap)
    prof = hilbert_profile(x, max_d=cfg.max_d, cap=cfg.matrix_cap)
    out = {"field": cfg.field.to_json(), "graph": _graph_json(g), "size": len(x),
           "computed": prof.regularity, "hilbert": prof.values}
    comps = components(g)
    bipartite = all(c.bipartite for c in comps)
    block = _block_family(g) if bipartite else None
    if len(comps) == 1 and bipartite and block is not None:
        out["formula"] = regularity_formula_disjoint(g, q)
        out["formula_match"] = out["formula"] == prof.regularity
    if bipartite:
        fam = validate_cycle_family(g, cycles) if cycles else block
        if fam is not None:
            out["bound"] = regularity_upper_bound(g, q, fam)
            out["bound_cycles"] = [[e + 1 for e in c] for c in fam.cycles]
            out["bound_holds"] = None if prof.regularity is None else prof.regularity <= out["bound"]
    return out, prof


def _is_cycle(g) -> bool:
    return g.n == g.s and len(components(g)) == 1 and all(len(v) == 2 for v in g.adjacency().values())


def cmd_generators(cfg: RunConfig, verify: bool, do_minimalize: bool, conjecture: bool,
                   order: str, cycles=None) -> tuple[dict, int]:
    g = _graph(cfg)
    q = cfg.field.q
    if cycles:
        fam = validate_cycle_family(g, cycles, require_edge_disjoint=False)
        gs = cycle_union_candidates(g, q, fam)
        kind = "cycle-union candidates"
        gens, prov = gs.binomials, gs.provenance
    elif _is_cycle(g):
        if g.s % 2:
            raise InputError("odd cycle: the combinatorial generators need an even cycle")
        cs = even_cycle_generators(g.s // 2, q)
        kind = "even cycle"
        # the cycle file may number its edges in any order; re-index along the traversal
        fam = cycle_blocks(g)
        order_map = fam.cycles[0]
        gens = [f.embed(order_map, g.s) for f in cs.binomials]
        prov = cs.provenance()
    else:
        gs = bipartite_disjoint_generators(g, q)
        kind = "bipartite, vertex-disjoint cycles"
        gens, prov = gs.binomials, gs.provenance

    out = {"field": cfg.field.to_json(), "graph": _graph_json(g), "construction": kind,
           "count": len(gens), "generators": [str(f) for f in gens]}
    status = EXIT_OK
    x = None
    prof = None
    if verify or do_minimalize or cfg.out:
        x = enumerate_toric_set(g, cfg.field, cfg.enum_cap)
    if verify or do_minimalize:
        prof = hilbert_profile(x, cap=cfg.matrix_cap)
        rep = verify_generating_set(gens, x, strict=False, cap=cfg.matrix_cap, profile=prof)
        out["verification"] = rep.to_json()
        if not rep.generates:
            status = EXIT_VERIFY
        elif do_minimalize:
            kept, redundant = minimalize(gens, verify=False, cap=cfg.matrix_cap)
            out["minimalize"] = {"kept": kept, "redundant": redundant,
                                 "redundant_binomials": [str(gens[i]) for i in redundant]}
    if conjecture:
        if kind != "even cycle":
            raise InputError("--conjecture applies to even cycles only")
        rep = test_conjecture(g.s // 2, q, order=MonomialOrder(order), field=cfg.field, enum_cap=cfg.enum_cap)
        out["conjecture"] = rep.to_json()
    if cfg.out:
        _write_artifacts(Path(cfg.out), gens, prov, kind, cfg, x, prof)
    return out, status


def _write_artifacts(outdir: Path, gens, prov, kind, cfg: RunConfig, x, prof):
    outdir.mkdir(parents=True, exist_ok=True)
    header = f"{kind}; q={cfg.field.q}; one binomial per line: a_1 ... a_s | b_1 ... b_s"
    (outdir / "generators.txt").write_text(format_binomials(gens, header), encoding="utf-8")
    sidecar = {"field": cfg.field.to_json(), "construction": kind, "generators": prov}
    (outdir / "generators.provenance.json").write_text(json.dumps(sidecar, indent=2) + "\n", encoding="utf-8")
    if x is not None:
        (outdir / "toric.csv").write_text(x.to_csv(), encoding="utf-8")
    if prof is not None:
        (outdir / "hilbert.csv").write_text(prof.to_csv(), encoding="utf-8")


def cmd_torus(cfg: RunConfig, s: int, d: int) -> dict:
    q = cfg.field.q
    if s < 2:
        raise InputError("need s >= 2")
    out = {"field": cfg.field.to_json(), "s": s, "d": d, "dimension": torus_dimension(s, q, d),
           "regularity": torus_regularity(s, q), "series_coefficient": torus_hilbert_series_coeffs(s, q, d)[d],
           "min_distance": torus_min_distance(s, q, d)}
    try:
        x = projective_torus(s, cfg.field, cfg.enum_cap)
        h = hilbert_function(x, d, cfg.matrix_cap)
        out["enumerated"] = {"length": len(x), "dimension": h}
        try:
            out["enumerated"]["min_distance"] = code_params(x, d, True, cfg.matrix_cap, cfg.dist_cap).min_distance
        except SearchTooLarge as exc:
            log.warning("%s; skipping the brute-force distance", exc)
            out["enumerated"]["min_distance"] = None
    except CapExceeded as exc:
        log.warning("%s; closed forms only", exc)
        out["enumerated"] = None
    return out


def cmd_suite(args) -> tuple[dict, int]:
    from .suite import SuiteConfig, run_suite, summary_json
    only = tuple(int(v) for v in args.only.split(",")) if args.only else None
    cfg = SuiteConfig(enum_cap=args.enum_cap, matrix_cap=args.matrix_cap, dist_cap=args.dist_cap,
                      generator_file=args.generator_file, only=only)
    results = run_suite(cfg, progress=lambda r: print(r.line(), file=sys.stderr))
    summary = summary_json(results)
    return summary, EXIT_OK if summary["passed"] else EXIT_VERIFY


# -- output -------------------------------------------------------------------------

def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}." if not isinstance(v, (dict,)) or v else f"{prefix}{k}")
    else:
        yield prefix.rstrip("."), json.dumps(obj) if isinstance(obj, list) else obj


def render(report: dict, fmt: str, csv_text: str | None = None) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    if csv_text is not None:
        return csv_text.rstrip("\n")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    for k, v in _flatten(report):
        w.writerow([k, "" if v is None else v])
    return buf.getvalue().rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", default="3", help="field size as P^M or a prime power (default 3)")
    common.add_argument("--modulus", help="monic modulus coefficients c0,c1,...,cm for m > 1")
    common.add_argument("--max-d", type=int, help="stop Hilbert profiles at this degree")
    common.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    common.add_argument("--matrix-cap", type=int, default=DEFAULT_MATRIX_CAP)
    common.add_argument("--dist-cap", type=int, default=DEFAULT_DIST_CAP)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--normalize", action="store_true", help="drop loops and repeated edges with a warning")
    common.add_argument("--out", help="directory for generator, provenance and CSV artifacts")

    parser = argparse.ArgumentParser(prog="toricgraph", description="Evaluation codes and vanishing ideals "
                                     "of graph toric sets over finite fields.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("length", parents=[common], help="|X| by formula and by enumeration")
    p.add_argument("graph")
    p = sub.add_parser("code", parents=[common], help="length, dimension and minimum distance of C_X(d)")
    p.add_argument("graph")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--min-distance", action="store_true")
    p = sub.add_parser("regularity", parents=[common], help="regularity index, with formula and bound")
    p.add_argument("graph")
    p.add_argument("--cycles", help="edge-disjoint even cycles as vertex lists, e.g. '1,2,3,4;3,5,1,6'")
    p = sub.add_parser("generators", parents=[common], help="binomial generators of the vanishing ideal")
    p.add_argument("graph")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--minimalize", action="store_true")
    p.add_argument("--conjecture", action="store_true", help="even cycles: generation, minimality, Groebner checks")
    p.add_argument("--order", choices=("grevlex", "revlex"), default="grevlex")
    p.add_argument("--cycles", help="build cycle-union candidates from these cycles instead")
    p = sub.add_parser("torus", parents=[common], help="closed forms for the projective torus")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p = sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.add_argument("--generator-file", help="binomial file replacing the built-in two-triangle list")
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        csv_text = None
        status = EXIT_OK
        if args.command == "suite":
            report, status = cmd_suite(args)
        else:
            cfg = _config(args)
            if args.command == "length":
                report = cmd_length(cfg)
            elif args.command == "code":
                report = cmd_code(cfg, args.d, args.min_distance)
            elif args.command == "regularity":
                report, prof = cmd_regularity(cfg, _parse_cycles(args.cycles))
                csv_text = prof.to_csv()
            elif args.command == "generators":
                report, status = cmd_generators(cfg, args.verify, args.minimalize, args.conjecture,
                                                args.order, _parse_cycles(args.cycles))
            else:
                report = cmd_torus(cfg, args.s, args.d)
        print(render(report, args.format, csv_text))
        return status
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"error: {type(exc).__name__}: {exc} (cap={exc.cap})", file=sys.stderr)
        return EXIT_CAP
    except VerificationFailure as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ToricGraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
