"""Command-line front end.

Subcommands:
  radius  --space SPEC --dim N --matrix M          compute v(T) + witnesses
  check   RELATION --a/--b (operators) or --x/--y  decide a relation
  verify  ID... | all                              run verification suites

Exit codes: 0 success / verdict true, 1 verdict false or suite failure,
2 usage error.  Matrices and vectors are JSON (row-major); complex entries
are [re, im] pairs; "I" denotes the identity.  The seed falls back to the
NUMRAD_SEED environment variable, then 0.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import report
from .engine import EngineConfig, numerical_radius
from .operators import identity
from .relations import (
    birkhoff_vectors,
    daugavet_check,
    norm_parallel_vectors,
    nr_birkhoff,
    nr_parallel,
)
from .spaces import COMPLEX, NormedSpace
from .verify import SUITES, run_suite

_VECTOR_RELATIONS = {"parallel": norm_parallel_vectors, "birkhoff": birkhoff_vectors}
_OPERATOR_RELATIONS = {"nr-parallel": nr_parallel, "nr-birkhoff": nr_birkhoff}


class UsageError(Exception):
    pass


def _parse_entries(node, complex_ok):
    """Recursively convert parsed JSON, turning [re, im] leaf pairs into
    complex scalars when the field is complex."""
    if isinstance(node, (int, float)):
        return node
    if not isinstance(node, list):
        raise UsageError(f"bad numeric entry {node!r}")
    if complex_ok and len(node) == 2 and all(isinstance(v, (int, float)) for v in node):
        return complex(node[0], node[1])
    return [_parse_entries(v, complex_ok) for v in node]


def _parse_array(space, text, ndim):
    if text.strip().upper() == "I":
        if ndim != 2:
            raise UsageError('"I" is only valid for an operator argument')
        return identity(space.dim, space.field == COMPLEX)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"malformed JSON array {text!r}: {e}") from e
    arr = np.asarray(_parse_entries(data, space.field == COMPLEX), dtype=space.dtype)
    if arr.ndim != ndim:
        kind = "matrix" if ndim == 2 else "vector"
        raise UsageError(f"expected a {kind}, got an array of rank {arr.ndim}")
    if ndim == 2 and arr.shape != (space.dim, space.dim):
        raise UsageError(f"expected a {space.dim}x{space.dim} matrix, got {arr.shape}")
    if ndim == 1 and arr.shape != (space.dim,):
        raise UsageError(f"expected a vector of dim {space.dim}, got {arr.shape}")
    return arr


def _seed_of(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("NUMRAD_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as e:
            raise UsageError(f"NUMRAD_SEED must be an integer, got {env!r}") from e
    return 0


def _load_config_file(args):
    if not args.config:
        return {}
    try:
        with open(args.config) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read config file {args.config}: {e}") from e
    if not isinstance(cfg, dict):
        raise UsageError("config file must contain a JSON object")
    allowed = {"space", "dim", "field", "grid", "refine_rounds", "multistarts",
               "seed", "tol"}
    for key in cfg:
        if key not in allowed:
            raise UsageError(f"unknown config key {key!r}")
    return cfg


def _build_space_and_config(args):
    file_cfg = _load_config_file(args)

    def pick(flag, key, default):
        v = getattr(args, flag, None)
        if v is not None:
            return v
        return file_cfg.get(key, default)

    try:
        space = NormedSpace.from_string(
            pick("space", "space", "l2"),
            int(pick("dim", "dim", 2)),
            pick("field", "field", "real"),
        )
    except ValueError as e:
        raise UsageError(str(e)) from e
    seed = _seed_of(args) if args.seed is not None or "seed" not in file_cfg \
        else int(file_cfg["seed"])
    try:
        cfg = EngineConfig(
            grid_size=int(pick("grid", "grid", 2048)),
            refine_rounds=int(pick("refine_rounds", "refine_rounds", 3)),
            multistarts=int(pick("multistarts", "multistarts", 64)),
            seed=seed,
            tol=float(pick("tol", "tol", space.tol)),
        )
    except ValueError as e:
        raise UsageError(str(e)) from e
    return space, cfg


def _config_dict(space, cfg):
    return {
        "space": space.kind if space.kind != "lp" else f"lp:{space.p:g}",
        "dim": space.dim,
        "field": space.field,
        "grid": cfg.grid_size,
        "refine_rounds": cfg.refine_rounds,
        "multistarts": cfg.multistarts,
        "seed": cfg.seed,
        "tol": cfg.tol,
    }


def _emit_report(args, payload):
    if args.report:
        report.write(args.report, payload)


def _fmt_vec(v):
    if v is None:
        return "-"
    return "[" + ", ".join(f"{z:.9g}" if not isinstance(z, complex)
                           else f"{z.real:.9g}{z.imag:+.9g}i" for z in v) + "]"


def cmd_radius(args) -> int:
    space, cfg = _build_space_and_config(args)
    T = _parse_array(space, args.matrix, 2)
    res = numerical_radius(space, T, cfg)
    print(f"v(T) = {res.value:.12g}")
    for w in res.witnesses:
        print(f"  witness: x = {_fmt_vec(w.x)}  x* = {_fmt_vec(w.xstar)}"
              f"  |x*(Tx)| = {abs(w.attained):.12g}")
    results = [report.result_entry(
        "radius", verdict=True, value=res.value, tol=cfg.tol,
        witness=report.witness_dict(res.witnesses[0]) if res.witnesses else None)]
    _emit_report(args, report.build("radius", _config_dict(space, cfg),
                                    results, cfg.seed))
    return 0


def cmd_check(args) -> int:
    space, cfg = _build_space_and_config(args)
    rel = args.relation
    has_ops = args.a is not None or args.b is not None
    has_vecs = args.x is not None or args.y is not None
    if has_ops and has_vecs:
        raise UsageError("give either --a/--b (operators) or --x/--y (vectors), "
                         "not both")
    if rel in _VECTOR_RELATIONS:
        if not (args.x and args.y):
            raise UsageError(f"relation {rel!r} needs --x and --y vectors")
        x = _parse_array(space, args.x, 1)
        y = _parse_array(space, args.y, 1)
        if rel == "parallel":
            rep = norm_parallel_vectors(space, x, y, cfg,
                                        collect_sweep=args.sweep)
        else:
            rep = birkhoff_vectors(space, x, y, cfg)
    elif rel in _OPERATOR_RELATIONS:
        if not (args.a and args.b):
            raise UsageError(f"relation {rel!r} needs --a and --b matrices")
        A = _parse_array(space, args.a, 2)
        B = _parse_array(space, args.b, 2)
        rep = _OPERATOR_RELATIONS[rel](space, A, B, cfg)
    elif rel == "daugavet":
        if not args.a:
            raise UsageError("relation 'daugavet' needs --a")
        rep = daugavet_check(space, _parse_array(space, args.a, 2), cfg)
    else:
        raise UsageError(f"unknown relation {rel!r}")
    print(f"{rel}: verdict={rep.verdict} gap={rep.gap:.6g} tol={rep.tol:g}")
    for k, v in rep.details.items():
        print(f"  {k} = {v}")
    if rep.witness is not None and rep.witness.scalar is not None:
        print(f"  scalar = {rep.witness.scalar}")
    results = [report.result_entry(rel, verdict=rep.verdict, gap=rep.gap,
                                   witness=rep.witness, tol=rep.tol)]
    if args.sweep and rep.sweep is not None:
        results[0]["sweep"] = rep.sweep
    _emit_report(args, report.build(f"check {rel}", _config_dict(space, cfg),
                                    results, cfg.seed))
    return 0 if rep.verdict else 1


def cmd_verify(args) -> int:
    seed = _seed_of(args)
    ids = list(args.suites) or ["all"]
    if ids == ["all"]:
        ids = list(SUITES)
    for sid in ids:
        if sid not in SUITES:
            raise UsageError(f"unknown suite id {sid!r}; "
                             f"known: {', '.join(SUITES)} or 'all'")
    results = []
    all_passed = True
    print(f"{'suite':<12} {'status':<6} checks")
    for sid in ids:
        out = run_suite(sid, seed)
        all_passed &= out.passed
        status = "pass" if out.passed else "FAIL"
        print(f"{sid:<12} {status:<6} {len(out.checks)}")
        for c in out.failures:
            print(f"    failed: {c.name} {c.info}")
        results.append(report.result_entry(
            sid, verdict=out.passed, margin=None,
            checks=[{"name": c.name, "passed": c.passed, "info": c.info}
                    for c in out.checks]))
    _emit_report(args, report.build(f"verify {' '.join(ids)}",
                                    {"seed": seed}, results, seed))
    return 0 if all_passed else 1


def _add_common(p):
    p.add_argument("--space", help='norm spec: "lp:<p>", "l1", "linf", "l2", "mixed"')
    p.add_argument("--dim", type=int)
    p.add_argument("--field", choices=["real", "complex"])
    p.add_argument("--grid", type=int, dest="grid")
    p.add_argument("--refine-rounds", type=int, dest="refine_rounds")
    p.add_argument("--multistarts", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--config", help="JSON config file (same keys as the flags)")
    p.add_argument("--report", help="write a JSON report to this path")


def build_parser():
    ap = argparse.ArgumentParser(prog="numrad",
                                 description="numerical radius computations and "
                                             "geometric relation checks")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("radius", help="compute the numerical radius of a matrix")
    _add_common(p)
    p.add_argument("--matrix", required=True, help='JSON matrix or "I"')
    p.set_defaults(fn=cmd_radius)

    p = sub.add_parser("check", help="decide a geometric relation")
    p.add_argument("relation",
                   choices=sorted({*_VECTOR_RELATIONS, *_OPERATOR_RELATIONS,
                                   "daugavet"}))
    _add_common(p)
    p.add_argument("--a", help='first operator (JSON matrix or "I")')
    p.add_argument("--b", help='second operator (JSON matrix or "I")')
    p.add_argument("--x", help="first vector (JSON)")
    p.add_argument("--y", help="second vector (JSON)")
    p.add_argument("--sweep", action="store_true",
                   help="include the raw scalar sweep in the report")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suites", nargs="*", metavar="ID",
                   help=f"suite ids ({', '.join(SUITES)}) or 'all'")
    p.add_argument("--seed", type=int)
    p.add_argument("--report", help="write a JSON report to this path")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
