"""Command-line front end.

    facering analyze corpus:bowtie --field q
    facering lc corpus:boundary-simplex-2 --l 2
    facering quotient-lc corpus:bowtie --m 1
    facering kernels corpus:torus-7 --field fp:32003 --seed 3
    facering verify corpus:bowtie --m 1 --seed 7
    facering corpus --selftest

Exit codes: 0 success, 1 usage error, 2 parse error, 3 theorem disagreement.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from facering import corpus, report
from facering.complex import ComplexError, FacetParseError, SimplicialComplex, format_facets, load_facets
from facering.fields import FieldSpec
from facering.graebe import GenericityError, kernel_dims, kernel_sweep, sweep_matrix
from facering.hochster import NEG_INFINITY, PurityWarning, graded_dim_table, singularity_dimension
from facering.quotient import check_main_theorem, quotient_lc_table

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load_input(spec: str | None, path: str | None) -> tuple[SimplicialComplex, dict]:
    if spec and path:
        raise UsageError("give either a positional input or --input, not both")
    spec = spec or path
    if not spec:
        raise UsageError("no input; pass corpus:<name> or a facet file")
    if spec.startswith("corpus:"):
        name = spec[len("corpus:"):]
        try:
            return corpus.load(name), {"kind": "corpus", "name": name}
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    p = Path(spec)
    if not p.is_file():
        raise UsageError(f"no such file: {spec}")
    return load_facets(p), {"kind": "file", "path": str(p)}


def _field(text: str | None, default: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text or default)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, rep: dict, lines: list[str]) -> None:
    if args.json:
        text = report.dumps(rep)
        if args.json == "-":
            sys.stdout.write(text)
            return
        Path(args.json).write_text(text)
    print("\n".join(lines))


def _fmt_sd(s) -> str:
    return "-inf" if s is NEG_INFINITY else str(s)


def cmd_analyze(args) -> int:
    cx, src = _load_input(args.input, args.input_file)
    field = _field(args.field, "q")
    if cx.is_void:
        raise UsageError("the void complex cannot be analyzed")
    rep = report.base_report("analyze", src, cx, field)
    rep["analysis"] = report.analysis(cx, field)
    a = rep["analysis"]
    lines = [
        f"complex: n={cx.n} dim={cx.dim} pure={cx.is_pure} f-vector={cx.f_vector()}",
        f"field: {field}",
        f"singularity dimension: {a['singularity_dimension']}",
    ]
    for w in a["witnesses"]:
        lines.append(f"  singular face {w['face'] or '∅'}: dim H~^{w['degree']}(lk) = {w['dim']}")
    buchs = "n/a (not pure)" if a["buchsbaum"] is None else a["buchsbaum"]
    lines += [f"Cohen-Macaulay: {a['cohen_macaulay']}", f"Buchsbaum: {buchs}"]
    _emit(args, rep, lines)
    return EXIT_OK


def cmd_lc(args) -> int:
    cx, src = _load_input(args.input, args.input_file)
    field = _field(args.field, "q")
    ls = args.l if args.l else None
    try:
        table = graded_dim_table(cx, ls, args.lowest, field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = report.base_report("lc", src, cx, field)
    rep["lc"] = report.lc_json(table)
    lines = [f"dim H^l_m(k[Δ])_j over {field}"]
    for l in sorted(table.values):
        row = "  ".join(f"{j}:{v}" for j, v in sorted(table.values[l].items()))
        lines.append(f"l={l}: {row}   degree -(i+1) tail: {table.tail_text(l)}")
    _emit(args, rep, lines)
    return EXIT_OK


def cmd_quotient_lc(args) -> int:
    cx, src = _load_input(args.input, args.input_file)
    field = _field(args.field, "q")
    try:
        table = quotient_lc_table(cx, args.m, field, args.max_i)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = report.base_report("quotient-lc", src, cx, field)
    rep["quotient_lc"] = report.quotient_json(table)
    lines = [f"dim H^l_m(k[Δ]/(θ_1..θ_{args.m}))_-i over {field}; finite local cohomology: {table.flc}"]
    for l in sorted(table.values):
        row = "  ".join(f"-{i}:{v}" for i, v in sorted(table.values[l].items()))
        lines.append(f"l={l}: {row}")
    for l, (neg, zero, one) in sorted(table.isolated.items()):
        lines.append(f"l={l} (one form, isolated singularities): j<0:{neg}  j=0:{zero}  j=1:{one}  j>=2:0")
    _emit(args, rep, lines)
    return EXIT_OK


def cmd_kernels(args) -> int:
    cx, src = _load_input(args.input, args.input_file)
    field = _field(args.field, "fp:32003")
    rep = report.base_report("kernels", src, cx, field)
    rep["seed"] = args.seed
    if args.m is None:
        reports, a = kernel_sweep(cx, field, seed=args.seed, max_offset=args.max_i)
    else:
        if not 0 <= args.m <= cx.d:
            raise UsageError(f"--m must be in 0..{cx.d}")
        a = sweep_matrix(cx, field, args.seed)
        reports = [kernel_dims(cx, l, args.m, i, a, field)
                   for l in range(1, cx.d + 1) for i in range(args.m, args.m + args.max_i + 1)]
    rep["kernels"] = report.kernels_json(reports, a)
    lines = [f"ker^l_(m,i) over {field}, matrix {a.describe()}"]
    for r in reports:
        mark = "ok" if r.equal and r.surjective_onto_previous is not False else "MISMATCH"
        lines.append(f"l={r.l} m={r.m} i={r.i}: brute={r.brute_dim} closed={r.closed_form_dim} "
                     f"surjective={r.surjective_onto_previous} {mark}")
    _emit(args, rep, lines)
    ok = rep["kernels"]["all_equal"] and rep["kernels"]["all_surjective"]
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_verify(args) -> int:
    cx, src = _load_input(args.input, args.input_file)
    field = _field(args.field, "fp:32003")
    if not cx.is_pure:
        raise UsageError("purity required: the theorem applies to pure complexes")
    ms = [args.m] if args.m is not None else list(range(cx.d + 1))
    for m in ms:
        if not 0 <= m <= cx.d:
            raise UsageError(f"--m must be in 0..{cx.d}")
    rep = report.base_report("verify", src, cx, field)
    rep["seed"] = args.seed
    verdicts = [check_main_theorem(cx, m, field, with_bruteforce=True, seed=args.seed, max_offset=args.max_i)
                for m in ms]
    rep["verdicts"] = [report.verdict_json(v) for v in verdicts]
    if len(verdicts) == 1:
        rep["verdict"] = rep["verdicts"][0]
    lines = []
    for v in verdicts:
        lines.append(f"m={v.m}: singularity dimension {_fmt_sd(v.singularity_dimension)} < m: {v.singular_below_m}; "
                     f"FLC by formula: {v.flc_by_formula}; FLC by brute force: {v.flc_by_bruteforce}; "
                     f"agree={v.agree}")
    _emit(args, rep, lines)
    if all(v.agree for v in verdicts):
        return EXIT_OK
    repro = Path(args.repro_dir) / f"facering-repro-{src.get('name', 'input')}.json"
    repro.write_text(report.dumps({"reproducer": {"facets": format_facets(cx), "field": str(field),
                                                  "seed": args.seed, "m": ms}, **rep}))
    print(f"disagreement; reproducer written to {repro}", file=sys.stderr)
    return EXIT_DISAGREE


def cmd_corpus(args) -> int:
    if args.show:
        try:
            sys.stdout.write(corpus.source(args.show))
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        return EXIT_OK
    if not args.selftest:
        for name in corpus.NAMES:
            print(name)
        return EXIT_OK
    failures = 0
    for e in corpus.entries():
        checks = [("pure", e.complex.is_pure, e.notes["pure"])]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", PurityWarning)
            for key, field in (("singdim_q", FieldSpec(0)), ("singdim_f2", FieldSpec(2))):
                got = _fmt_sd(singularity_dimension(e.complex, field).singularity_dimension)
                checks.append((key, got, str(e.notes[key])))
        for key, got, want in checks:
            ok = got == want
            failures += not ok
            print(f"{'PASS' if ok else 'FAIL'} {e.name} {key}: got {got}, expected {want}")
    return EXIT_OK if not failures else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="facering", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, kernel=False):
        p.add_argument("input", nargs="?", help="corpus:<name> or a facet file")
        p.add_argument("--input", dest="input_file", help="facet file")
        p.add_argument("--field", help="q or fp:<p> (default %s)" % ("fp:32003" if kernel else "q"))
        p.add_argument("--json", help="write the JSON report to this path ('-' for stdout)")

    p = sub.add_parser("analyze", help="purity, singularity dimension, Cohen-Macaulay and Buchsbaum tests")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("lc", help="graded dimensions of the local cohomology of the face ring")
    common(p)
    p.add_argument("--l", type=int, action="append", help="cohomological degree (repeatable; default all)")
    p.add_argument("--lowest", type=int, default=-4, help="lowest degree in the window (default -4)")
    p.set_defaults(func=cmd_lc)

    p = sub.add_parser("quotient-lc", help="local cohomology of the quotient by m generic forms")
    common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-i", type=int, default=4, help="tabulate degrees -1..-max_i (default 4)")
    p.set_defaults(func=cmd_quotient_lc)

    p = sub.add_parser("kernels", help="brute-force kernel intersections against the closed form")
    common(p, kernel=True)
    p.add_argument("--m", type=int, help="number of forms (default: all 0..d)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-i", type=int, default=3, help="i ranges over m..m+max_i (default 3)")
    p.set_defaults(func=cmd_kernels)

    p = sub.add_parser("verify", help="check the singularity/finite-local-cohomology equivalence")
    common(p, kernel=True)
    p.add_argument("--m", type=int, help="number of forms (default: all 0..d)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-i", type=int, default=3, help="brute force for i in 1..max_i+1 (default 3)")
    p.add_argument("--repro-dir", default=".", help="where to write a reproducer on disagreement")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="list, show or self-test the built-in complexes")
    p.add_argument("--selftest", action="store_true")
    p.add_argument("--show", metavar="NAME")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except FacetParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, ComplexError, GenericityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
