"""Command-line surface: enumeration, graded matrices, ladder bounds,
and the floating-point relation checks, with TSV and JSON output."""

import argparse
import json
import os
import sys

from . import laurent
from .calibrated import (
    DEFAULT_TOL,
    NonGenericSeedError,
    blob_check,
    build_calibrated,
    check_hecke_relations,
    check_jm_spectrum,
    check_tl_relations,
    make_seed,
)
from .decomp import (
    blocks,
    decomposition_matrix,
    delta_matrix,
    simple_dim_lower_bounds,
    simple_graded_dims,
)
from .params import Integral, config_to_obj, load_config, validate_config
from .paths import degree_klr, degree_tiles, is_ladder, reduced_word
from .tableaux import (
    count_std,
    enumerate_std,
    parse_shape,
    parse_tableau,
    shape_str,
    shapes,
    tableau_str,
    validate_shape,
)


class _UsageError(Exception):
    pass


class _CheckFailure(Exception):
    pass


def _out(text):
    sys.stdout.write(text)


def _out_json(obj):
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _load(path):
    try:
        cfg = load_config(path)
    except OSError as exc:
        raise _UsageError("cannot read config %s: %s" % (path, exc)) from None
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    problems = validate_config(cfg)
    if problems:
        raise _CheckFailure(
            "config %s violates the standing assumptions:\n%s"
            % (path, "\n".join("  " + p for p in problems)))
    return cfg


def _shape_arg(text, n):
    try:
        shape = parse_shape(text)
        validate_shape(n, shape)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    return shape


def _shape_range(args):
    if args.shape is None:
        return shapes(args.n)
    return [_shape_arg(args.shape, args.n)]


# -- subcommands -----------------------------------------------------------

def _cmd_validate(args):
    try:
        cfg = load_config(args.config)
    except OSError as exc:
        raise _UsageError("cannot read config %s: %s" % (args.config, exc)) from None
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    problems = validate_config(cfg)
    if args.format == "json":
        obj = {"ok": not problems}
        if problems:
            obj["violations"] = problems
        else:
            obj["config"] = config_to_obj(cfg)
        _out_json(obj)
    elif problems:
        _out("invalid\n" + "".join("%s\n" % p for p in problems))
    else:
        lines = ["ok", "e\t%s" % ("infinity" if cfg.e is None else cfg.e)]
        for name in ("alpha1", "alpha2", "theta"):
            spec = cfg.points[name]
            if isinstance(spec, Integral):
                lines.append("%s\tq^%d" % (name, spec.exp))
            else:
                lines.append("%s\torbit %s offset %d" % (name, spec.orbit, spec.offset))
        _out("".join("%s\n" % l for l in lines))
    return 1 if problems else 0


def _cmd_shapes(args):
    rows = [(shape_str(s), count_std(args.n, s)) for s in shapes(args.n)]
    if args.format == "json":
        _out_json({"n": args.n,
                   "shapes": [{"shape": s, "std_count": c} for s, c in rows]})
    else:
        _out("".join("%s\t%d\n" % r for r in rows))
    return 0


def _cmd_tableaux(args):
    out = []
    for shape in _shape_range(args):
        out.extend(tableau_str(t) for t in enumerate_std(args.n, shape))
    if args.format == "json":
        _out_json({"n": args.n, "count": len(out), "tableaux": out})
    else:
        _out("".join("%s\n" % t for t in out))
    return 0


def _blocks_of(args, cfg):
    d = delta_matrix(cfg, args.n, jobs=args.jobs)
    bls = blocks(d)
    if args.block_of is not None:
        target = _shape_arg(args.block_of, args.n)
        bls = [b for b in bls if target in b]
    return d, bls


def _emit_matrix_blocks(args, mat, bls):
    if args.format == "json":
        if args.block_of is not None:
            obj = {"n": args.n}
            obj.update(mat.submatrix(bls[0]).to_json_obj())
            _out_json(obj)
        else:
            _out_json({"n": args.n,
                       "blocks": [mat.submatrix(b).to_json_obj() for b in bls]})
    elif args.block_of is not None:
        _out(mat.submatrix(bls[0]).to_tsv())
    else:
        chunks = ["# block %d of %d\n%s" % (i + 1, len(bls),
                                            mat.submatrix(b).to_tsv())
                  for i, b in enumerate(bls)]
        _out("\n".join(chunks))
    return 0


def _cmd_delta(args):
    cfg = _load(args.config)
    d, bls = _blocks_of(args, cfg)
    return _emit_matrix_blocks(args, d, bls)


def _cmd_decomp(args):
    cfg = _load(args.config)
    _, bls = _blocks_of(args, cfg)
    nmat = decomposition_matrix(cfg, args.n, jobs=args.jobs)
    return _emit_matrix_blocks(args, nmat, bls)


def _cmd_blocks(args):
    cfg = _load(args.config)
    d = delta_matrix(cfg, args.n, jobs=args.jobs)
    bls = blocks(d)
    if args.format == "json":
        _out_json({"n": args.n,
                   "blocks": [[shape_str(s) for s in b] for b in bls]})
    else:
        _out("".join("\t".join(shape_str(s) for s in b) + "\n" for b in bls))
    return 0


def _cmd_ladders(args):
    cfg = _load(args.config)
    found = []
    for shape in _shape_range(args):
        found.extend(tableau_str(t) for t in enumerate_std(args.n, shape)
                     if is_ladder(cfg, args.n, t))
    if args.format == "json":
        _out_json({"n": args.n, "ladders": found})
    else:
        _out("".join("%s\n" % t for t in found))
    return 0


def _cmd_bounds(args):
    cfg = _load(args.config)
    lows = simple_dim_lower_bounds(cfg, args.n)
    dims = simple_graded_dims(cfg, args.n, jobs=args.jobs)
    rows = [(s, lows[s], laurent.eval_one(dims[s]), dims[s])
            for s in shapes(args.n)]
    if args.format == "json":
        _out_json({"n": args.n, "conjectural": True,
                   "rows": [{"shape": shape_str(s), "lower_bound": lo,
                             "dim_at_1": d1,
                             "graded_dim": laurent.to_json_obj(p)}
                            for s, lo, d1, p in rows]})
    else:
        lines = ["# graded_dim and dim_at_1 are conjectural",
                 "shape\tlower_bound\tdim_at_1\tgraded_dim"]
        lines.extend("%s\t%d\t%d\t%s"
                     % (shape_str(s), lo, d1, laurent.to_str(p))
                     for s, lo, d1, p in rows)
        _out("".join("%s\n" % l for l in lines))
    return 0


_CHECKS = (
    ("hecke", check_hecke_relations),
    ("tl", check_tl_relations),
    ("jm", check_jm_spectrum),
    ("blob", blob_check),
)


def _cmd_calibrated_check(args):
    cfg = _load(args.config)
    try:
        seed = make_seed(cfg, seed=args.seed, tol=args.tol)
        results = []
        for shape in shapes(args.n):
            mod = build_calibrated(cfg, args.n, shape, seed)
            for name, checker in _CHECKS:
                rep = checker(mod)
                results.append((shape, name, rep["max_residual"], rep["pass"]))
    except NonGenericSeedError as exc:
        raise _CheckFailure(str(exc)) from None
    worst = max(r[2] for r in results)
    ok = all(r[3] for r in results)
    if args.format == "json":
        _out_json({"n": args.n, "seed": args.seed, "tol": args.tol,
                   "checks": [{"shape": shape_str(s), "check": c,
                               "max_residual": r, "pass": p}
                              for s, c, r, p in results],
                   "worst_residual": worst, "pass": ok})
    else:
        lines = ["shape\tcheck\tmax_residual\tstatus"]
        lines.extend("%s\t%s\t%.3e\t%s"
                     % (shape_str(s), c, r, "pass" if p else "FAIL")
                     for s, c, r, p in results)
        lines.append("# worst residual %.3e against tol %.1e: %s"
                     % (worst, args.tol, "PASS" if ok else "FAIL"))
        _out("".join("%s\n" % l for l in lines))
    return 0 if ok else 1


def _cmd_degree(args):
    cfg = _load(args.config)
    rows = []
    for shape in _shape_range(args):
        for t in enumerate_std(args.n, shape):
            rows.append((tableau_str(t), degree_tiles(cfg, args.n, t),
                         degree_klr(cfg, args.n, t)))
    if args.format == "json":
        _out_json({"n": args.n,
                   "degrees": [{"tableau": s, "degree_tiles": a,
                                "degree_klr": b} for s, a, b in rows]})
    else:
        lines = ["tableau\tdegree_tiles\tdegree_klr"]
        lines.extend("%s\t%d\t%d" % r for r in rows)
        _out("".join("%s\n" % l for l in lines))
    return 0


def _cmd_word(args):
    cfg = _load(args.config)
    if args.shape is not None and ":" in args.shape:
        try:
            ts = [parse_tableau(args.shape, n=args.n)]
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    else:
        ts = [t for shape in _shape_range(args)
              for t in enumerate_std(args.n, shape)]
    rows = [(tableau_str(t), reduced_word(cfg, args.n, t)) for t in ts]
    if args.format == "json":
        _out_json({"n": args.n,
                   "words": [{"tableau": s, "length": len(w),
                              "word": list(w)} for s, w in rows]})
    else:
        lines = ["tableau\tlength\tword"]
        lines.extend("%s\t%d\t%s" % (s, len(w), " ".join(map(str, w)))
                     for s, w in rows)
        _out("".join("%s\n" % l for l in lines))
    return 0


# -- argument parsing --------------------------------------------------------

def _positive_int(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _parser():
    top = argparse.ArgumentParser(
        prog="blobalg",
        description="Exact combinatorics and numeric checks for the "
                    "two-boundary diagram algebras.")
    sub = top.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, summary, config=False, n=False, shape=False,
            block_of=False, seed=False, jobs=False):
        sp = sub.add_parser(name, help=summary, description=summary)
        if config:
            sp.add_argument("--config", required=True, metavar="PATH",
                            help="parameter configuration JSON file")
        if n:
            sp.add_argument("--n", type=_positive_int, required=True,
                            help="number of strands")
        if shape:
            sp.add_argument("--shape", metavar="STR",
                            help='shape literal "(k,marker)"; default: all')
        if block_of:
            sp.add_argument("--block-of", metavar="STR",
                            help="restrict to the block containing this shape")
        if seed:
            sp.add_argument("--seed", type=int, default=0,
                            help="random seed for the numeric parameters")
            sp.add_argument("--tol", type=float, default=DEFAULT_TOL,
                            help="residual tolerance (default %g)" % DEFAULT_TOL)
        if jobs:
            sp.add_argument("--jobs", type=_positive_int,
                            default=os.cpu_count() or 1,
                            help="worker processes (default: all cores)")
        sp.add_argument("--format", choices=("tsv", "json"), default="tsv",
                        help="output format (default tsv)")
        sp.set_defaults(func=func)
        return sp

    add("validate", _cmd_validate, "check a configuration file", config=True)
    add("shapes", _cmd_shapes, "list the shapes and their tableau counts",
        n=True)
    add("tableaux", _cmd_tableaux, "enumerate standard tableaux", n=True,
        shape=True)
    add("delta", _cmd_delta, "graded coloured-tableau count matrix",
        config=True, n=True, block_of=True, jobs=True)
    add("decomp", _cmd_decomp,
        "conjectural graded decomposition matrix (N factor)",
        config=True, n=True, block_of=True, jobs=True)
    add("blocks", _cmd_blocks, "partition of the shapes into blocks",
        config=True, n=True, jobs=True)
    add("ladders", _cmd_ladders, "list the ladder tableaux", config=True,
        n=True, shape=True)
    add("bounds", _cmd_bounds,
        "ladder lower bounds next to the conjectural simple dimensions",
        config=True, n=True, jobs=True)
    add("calibrated-check", _cmd_calibrated_check,
        "numeric relation residuals on a random calibrated seed",
        config=True, n=True, seed=True)
    add("degree", _cmd_degree, "tableau degrees, tile-wise and generator-wise",
        config=True, n=True, shape=True)
    add("word", _cmd_word, "reduced words of standard tableaux; --shape also "
        "accepts a full tableau literal", config=True, n=True, shape=True)
    return top


def run(argv=None):
    """Parse argv and execute; returns the process exit code."""
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except _UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except _CheckFailure as exc:
        print(str(exc), file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
