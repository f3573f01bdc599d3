"""Command-line front end.

Settings come from flags first, then ``PP_*`` environment variables
(``PP_ORDER``, ``PP_NMAX``, ``PP_FORMAT``, ``PP_JOBS``, ``PP_LOG_DIR``),
then built-in defaults.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import catalog, oracle, reports
from .bijections import MAPS
from .geometry import (
    bounce_minus,
    bounce_plus,
    cross_h,
    cross_v,
    dyck_area,
    east_below_subdiagonal,
    is_dyck,
    north_above_superdiagonal,
    touch_points,
)
from .paths import DELANNOY, LATTICE, PathError, ascii_grid, enumerate_paths, parse_word
from .patterns import PATTERN_IDS, match_profile, profile_tuple
from .poly import MultiPoly


def _env(name: str, default):
    v = os.environ.get(f"PP_{name}")
    if v is None:
        return default
    return type(default)(v)


class Output:
    """Single writer for all command output."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def text(self, s: str = "") -> None:
        self.stream.write(s + "\n")

    def emit(self, payload, rows: list[dict] | None = None, text: str | None = None) -> None:
        if self.fmt == "json":
            self.text(json.dumps(payload, indent=2, default=str))
        elif self.fmt == "csv" and rows is not None:
            buf = io.StringIO()
            w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
            self.stream.write(buf.getvalue())
        else:
            self.text(text if text is not None else json.dumps(payload, default=str))


def _kind_of(word: str) -> str:
    return DELANNOY if "D" in word.upper() else LATTICE


def _profile_dict(word: str) -> dict:
    L = parse_word(word, _kind_of(word))
    out: dict = {"word": L.word, "n": L.n, "kind": L.kind}
    out["matches"] = match_profile(L).counts
    if L.is_lattice:
        out["geometry"] = {
            "east_below_subdiagonal": east_below_subdiagonal(L),
            "north_above_superdiagonal": north_above_superdiagonal(L),
            "bounce_minus": bounce_minus(L),
            "bounce_plus": bounce_plus(L),
            "cross_h": cross_h(L),
            "cross_v": cross_v(L),
        }
        out["dyck"] = is_dyck(L)
        if out["dyck"]:
            out["dyck_area"] = dyck_area(L)
    out["touch_points"] = touch_points(L)
    return out


def cmd_profile(args, out: Output) -> int:
    d = _profile_dict(args.word)
    lines = [f"{d['word'] or '(empty)'}  n={d['n']}  {d['kind']}"]
    lines.append("  " + "  ".join(f"{p}={c}" for p, c in d["matches"].items()))
    for k, v in d.get("geometry", {}).items():
        lines.append(f"  {k}: {v}")
    if "dyck" in d:
        lines.append(f"  dyck: {d['dyck']}" + (f" (area {d['dyck_area']})" if d["dyck"] else ""))
    lines.append(f"  touches: {d['touch_points']}")
    lines.append(ascii_grid(d["word"]))
    row = {"word": d["word"], **d["matches"], **d.get("geometry", {})}
    out.emit(d, [row], "\n".join(lines))
    return 0


def cmd_enumerate(args, out: Output) -> int:
    kind = DELANNOY if args.delannoy else LATTICE
    oracle._check_cap(args.n, kind, args.force)
    rows = []
    for L in enumerate_paths(args.n, kind):
        prof = profile_tuple(L.word)
        if args.where:
            pid, k = args.where.split("=")
            if prof[PATTERN_IDS.index(pid.upper())] != int(k):
                continue
        rows.append({"word": L.word, **dict(zip(PATTERN_IDS, prof))})
        if args.limit and len(rows) >= args.limit:
            break
    text = "\n".join(f"{r['word']}  " + " ".join(str(r[p]) for p in PATTERN_IDS) for r in rows)
    out.emit(rows, rows, text + f"\n({len(rows)} paths)")
    return 0


def _poly_json(p) -> object:
    p = MultiPoly.coerce(p)
    return str(p)


def cmd_series(args, out: Output) -> int:
    subs = reports._parse_assign(args.spec) if args.spec else {}
    F = catalog.build(args.name, args.order)
    if subs:
        F = F.substitute(subs)
    if args.exactly:
        (var, k), = reports._parse_assign(args.exactly).items()
        s = catalog.exactly_k(args.name, var, int(k), args.order, series=F)
        coeffs = [str(c) for c in s.coeffs]
    else:
        coeffs = [_poly_json(c) for c in F.coeffs]
    if args.coeff is not None:
        if not 0 <= args.coeff < len(coeffs):
            raise SystemExit(f"coefficient {args.coeff} outside order {args.order}")
        payload = {"name": args.name, "n": args.coeff, "coeff": coeffs[args.coeff]}
        out.emit(payload, [payload], coeffs[args.coeff])
        return 0
    rows = [{"n": n, "coeff": c} for n, c in enumerate(coeffs)]
    payload = {"name": args.name, "order": args.order, "coeffs": coeffs}
    out.emit(payload, rows, "\n".join(f"t^{n}: {c}" for n, c in enumerate(coeffs)))
    return 0


def _seq_out(out: Output, name: str, terms: list, offset: int = 0) -> None:
    rows = [{"n": offset + i, "a": str(v)} for i, v in enumerate(terms)]
    out.emit({"name": name, "offset": offset, "terms": [str(v) for v in terms]}, rows,
             f"{name}: " + ", ".join(str(v) for v in terms))


def cmd_exactly(args, out: Output) -> int:
    (var, k), = reports._parse_assign(args.assign).items()
    others = "marginal" if args.marginal else "avoid"
    s = catalog.exactly_k(args.name, var, int(k), args.order, others=others)
    _seq_out(out, f"exactly {var}={k} in {args.name}", [Fraction(c) for c in s.coeffs])
    return 0


def cmd_parity(args, out: Output) -> int:
    flip = args.vars.split(",") if args.vars else None
    even, odd = catalog.parity(args.name, flip, args.order)
    rows = [{"n": n, "even": str(even.coeffs[n]), "odd": str(odd.coeffs[n])} for n in range(even.order)]
    text = "even: " + ", ".join(map(str, even.coeffs)) + "\nodd:  " + ", ".join(map(str, odd.coeffs))
    out.emit({"name": args.name, "even": [str(c) for c in even.coeffs],
              "odd": [str(c) for c in odd.coeffs]}, rows, text)
    return 0


def cmd_expect(args, out: Output) -> int:
    vars_ = args.vars.split(",") if args.vars else None
    num = catalog.derivative_numerators(args.name, vars_, args.order)
    ex = catalog.expectation(args.name, vars_, args.order)
    counts = catalog.path_counts(args.name, args.order)
    rows = [{"n": n, "total": str(num.coeffs[n]), "paths": counts[n], "mean": str(ex[n]),
             "mean_float": f"{float(ex[n]):.6f}"} for n in range(len(ex))]
    text = "\n".join(f"{r['n']:>3}  {r['total']:>12} / {r['paths']:<12} = {r['mean_float']}" for r in rows)
    out.emit(rows, rows, text)
    return 0


def cmd_verify(args, out: Output) -> int:
    if args.names:
        unknown = [n for n in args.names if n not in catalog.GF_INFO]
        if unknown:
            raise KeyError(f"unknown generating function(s): {', '.join(unknown)}")
        rep = {"catalog": [], "passed": True}
        for name in args.names:
            k = args.nmax if args.nmax is not None else reports.default_nmax(name)
            r = oracle.verify(name, k, force=args.force, jobs=args.jobs)
            rep["catalog"].append(r.to_json())
            rep["passed"] &= r.passed
    else:
        rep = reports.verify_all(args.nmax, jobs=args.jobs, force=args.force)
    path = reports.write_run_log(rep, args.log_dir)
    lines = []
    for section in ("catalog", "equivalences", "bijections", "golden"):
        for r in rep.get(section, []):
            label = r.get("name", f"n={r.get('n')}")
            if "n" in r and "name" in r:
                label = f"{r['name']} n={r['n']}"
            lines.append(f"{section:<12} {label:<28} {'pass' if r.get('passed') else 'FAIL'}")
            for row in r.get("rows", []):
                if row["status"] != "pass":
                    lines.append(f"    n={row['n']} first differing monomial {row['first_diff_monomial']}")
    lines.append(f"{'PASSED' if rep['passed'] else 'FAILED'}; log written to {path}")
    out.emit(rep, None, "\n".join(lines))
    return 0 if rep["passed"] else 1


def cmd_bijection(args, out: Output) -> int:
    spec = MAPS[args.map]
    L = parse_word(args.word)
    M = spec.func(L)
    d = {
        "map": args.map,
        "input": L.word,
        "output": M.word,
        "input_profile": _profile_dict(L.word)["matches"],
        "output_profile": _profile_dict(M.word)["matches"],
        "source_in": spec.source(L),
        "target_out": spec.target(M),
    }
    text = (
        f"{d['input']} -> {d['output']}\n"
        f"  in:  {d['input_profile']}\n  out: {d['output_profile']}\n"
        f"  {spec.source.__name__}(in) = {d['source_in']}, {spec.target.__name__}(out) = {d['target_out']}"
    )
    out.emit(d, [{k: v for k, v in d.items() if not k.endswith("profile")}], text)
    return 0


def cmd_export_bfile(args, out: Output) -> int:
    path = reports.export_bfile(args.spec, args.path, args.order, args.start)
    out.emit({"spec": args.spec, "path": str(path)}, None, f"wrote {path}")
    return 0


def cmd_asymptotics(args, out: Output) -> int:
    nmax = args.nmax if args.nmax is not None else 40
    rep = reports.asymptotics(args.target, nmax)
    rows = [{"n": r.n, "exact": str(r.exact), "exact_float": f"{float(r.exact):.6f}",
             "asymptote": f"{r.asymptote:.6f}", "rel_gap": f"{r.rel_gap:.6f}"} for r in rep.rows]
    lines = [f"E[{rep.target.name}] against {rep.target.printed}"]
    if rep.target.note:
        lines.append(f"note: {rep.target.note}")
    lines += [f"{r['n']:>3}  {r['exact_float']:>12}  {r['asymptote']:>12}  {r['rel_gap']}" for r in rows]
    lines.append(f"relative gap shrinks monotonically from n=8: {rep.gap_shrinks()}")
    out.emit(rep.to_json(), rows, "\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=_env("ORDER", 16), help="series order (PP_ORDER, 16)")
    common.add_argument("--nmax", type=int, default=_env("NMAX", -1), help="largest size (PP_NMAX)")
    common.add_argument("--format", choices=("text", "json", "csv"), default=_env("FORMAT", "text"))
    common.add_argument("--force", action="store_true", help="lift enumeration caps")
    common.add_argument("--jobs", type=int, default=_env("JOBS", 1), help="worker processes (PP_JOBS)")

    p = argparse.ArgumentParser(
        prog="pairedpaths",
        description="Paired patterns in lattice paths: enumeration, generating functions, checks.",
        epilog="Precedence: flags, then PP_* environment variables, then defaults.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("profile", parents=[common], help="match counts and geometry of one path")
    s.add_argument("word", nargs="?", default="")
    s.set_defaults(func=cmd_profile)

    s = sub.add_parser("enumerate", parents=[common], help="list paths with their match counts")
    s.add_argument("n", type=int)
    s.add_argument("--delannoy", action="store_true")
    s.add_argument("--where", help="filter such as P1=2")
    s.add_argument("--limit", type=int, default=0)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("series", parents=[common], help="expand a catalog generating function")
    s.add_argument("name", choices=catalog.GF_NAMES)
    s.add_argument("--spec", help="substitutions such as x1=1,x6=0")
    s.add_argument("--coeff", type=int)
    s.add_argument("--exactly", help="var=k")
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("exactly", parents=[common], help="paths with exactly k marked matches")
    s.add_argument("name", choices=catalog.GF_NAMES)
    s.add_argument("assign", help="var=k, e.g. x=1")
    s.add_argument("--marginal", action="store_true", help="leave other patterns unrestricted")
    s.set_defaults(func=cmd_exactly)

    s = sub.add_parser("parity", parents=[common], help="even/odd split of the match count")
    s.add_argument("name", choices=catalog.GF_NAMES)
    s.add_argument("--vars")
    s.set_defaults(func=cmd_parity)

    s = sub.add_parser("expect", parents=[common], help="mean number of matches")
    s.add_argument("name", choices=catalog.GF_NAMES)
    s.add_argument("--vars")
    s.set_defaults(func=cmd_expect)

    s = sub.add_parser("verify", parents=[common], help="compare catalog with enumeration")
    s.add_argument("names", nargs="*", help="catalog entries (default: everything)")
    s.add_argument("--log-dir", default=None, help="run-log directory (PP_LOG_DIR, ./runs)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bijection", parents=[common], help="apply a reflection map to a path")
    s.add_argument("map", choices=list(MAPS))
    s.add_argument("word")
    s.set_defaults(func=cmd_bijection)

    s = sub.add_parser("export-bfile", parents=[common], help="write a sequence as an OEIS b-file")
    s.add_argument("spec", help="named sequence or spec such as coeff:F34:x3*x4")
    s.add_argument("path")
    s.add_argument("--start", type=int)
    s.set_defaults(func=cmd_export_bfile)

    s = sub.add_parser("asymptotics", parents=[common], help="exact means against printed asymptotes")
    s.add_argument("target", choices=list(reports.ASYMPTOTICS))
    s.set_defaults(func=cmd_asymptotics)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.nmax is not None and args.nmax < 0:
        args.nmax = None
    out = Output(args.format)
    try:
        return args.func(args, out)
    except (PathError, ValueError, KeyError, oracle.CapExceededError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
