"""Command-line front end: ``dolgachev {invariants,verify,walls,hilb2}``.

Exit status: 0 success, 1 a hard check or closed form failed, 2 usage or
input error.  Every option may also be given in a config file of flat
``key = value`` lines (keys are option names, dashes or underscores);
command-line flags override the file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import gcd
from pathlib import Path

from . import errata, expr, verify
from .assembly import closed_form_a, closed_form_b, coefficient_series
from .lattice import SurfaceParams, classes
from .walls import EndpointOnWall, wall_effective, walls_on_segment

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULTS = {
    "p": 3,
    "q": 2,
    "n_max": 10,
    "sweep": None,
    "format": None,
    "out": None,
    "depth": "fast",
    "seed": 0,
    "jobs": 1,
    "n": 1,
}

ROW_FIELDS = ["p", "q", "n", "sum_m", "a", "b", "closed_form_a", "closed_form_b",
              "a_match", "b_match", "c"]


class UsageError(Exception):
    pass


def render(x) -> str:
    return errata.render(x)


def load_config(path: str) -> dict:
    """Flat key = value file; blank lines and '#' comments are ignored."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def _coerce(key: str, value):
    if value is None or not isinstance(value, str):
        return value
    try:
        if key in ("p", "q", "n_max", "seed", "jobs", "n"):
            return int(value)
        if key == "sweep":
            pmax, qmax = value.replace(",", " ").split()
            return [int(pmax), int(qmax)]
    except ValueError:
        raise UsageError(f"bad value for {key}: {value!r}") from None
    return value


def resolve(args: argparse.Namespace, keys) -> dict:
    """Merge flags over the config file over built-in defaults."""
    cfg = load_config(args.config) if getattr(args, "config", None) else {}
    known = set(DEFAULTS) | {"w0", "w1", "let", "expression", "p", "q"}
    unknown = set(cfg) - known
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    out = {}
    for key in keys:
        flag = getattr(args, key, None)
        if flag is not None:
            out[key] = flag
        elif key in cfg:
            out[key] = _coerce(key, cfg[key])
        else:
            out[key] = DEFAULTS.get(key)
    return out


def _emit(text: str, out_path):
    if out_path is None:
        sys.stdout.write(text)
        return
    try:
        Path(out_path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out_path}: {exc.strerror}") from None


def _pairs(opts: dict):
    """Requested (p, q) pairs in order, and notices for skipped ones."""
    if opts["sweep"]:
        pmax, qmax = opts["sweep"]
        if pmax < 1 or qmax < 1:
            raise UsageError("sweep ranges must be nonempty")
        requested = [(p, q) for p in range(1, pmax + 1) for q in range(1, qmax + 1)]
    else:
        requested = [(opts["p"], opts["q"])]
    pairs, skipped, seen = [], [], set()
    for p, q in requested:
        if p < 1 or q < 1:
            raise UsageError(f"p and q must be positive, got ({p}, {q})")
        if gcd(p, q) != 1:
            skipped.append({"p": p, "q": q, "reason": "not coprime"})
            continue
        params = SurfaceParams(p, q)
        if (params.p, params.q) in seen:
            continue
        seen.add((params.p, params.q))
        pairs.append(params)
    return pairs, skipped


def invariant_rows(params: SurfaceParams, n_max: int) -> list:
    rows = []
    for inv in coefficient_series(params, n_max):
        ea, eb = closed_form_a(inv.n), closed_form_b(inv.n, params)
        rows.append({
            "p": params.p, "q": params.q, "n": inv.n, "sum_m": inv.sum_m,
            "a": inv.a, "b": inv.b, "closed_form_a": ea, "closed_form_b": eb,
            "a_match": inv.a == ea, "b_match": inv.b == eb, "c": inv.c_known,
        })
    return rows


def _rows_worker(args):
    p, q, n_max = args
    return invariant_rows(SurfaceParams(p, q), n_max)


def rows_to_csv(rows: list) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=ROW_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if r[k] is None else str(r[k]).lower() if isinstance(r[k], bool)
                        else render(r[k])) for k in ROW_FIELDS})
    return buf.getvalue()


def cmd_invariants(args) -> int:
    opts = resolve(args, ["p", "q", "n_max", "sweep", "format", "out", "jobs"])
    if opts["n_max"] < 1:
        raise UsageError("--n-max must be at least 1")
    fmt = opts["format"] or "json"
    if fmt not in ("json", "csv"):
        raise UsageError(f"unknown format {fmt!r}")
    pairs, skipped = _pairs(opts)
    for s in skipped:
        print(f"skipping (p, q) = ({s['p']}, {s['q']}): not coprime", file=sys.stderr)
    chunks = verify._map(_rows_worker, [(s.p, s.q, opts["n_max"]) for s in pairs], opts["jobs"])
    rows = [r for chunk in chunks for r in chunk]
    if fmt == "csv":
        text = rows_to_csv(rows)
    else:
        if opts["sweep"]:
            meta_p, meta_q = f"1..{opts['sweep'][0]}", f"1..{opts['sweep'][1]}"
        else:
            meta_p, meta_q = opts["p"], opts["q"]
        doc = {
            "meta": {"p": meta_p, "q": meta_q, "n_max": opts["n_max"], "seed": None,
                     "skipped": skipped},
            "rows": rows,
            "ledger": [e.as_dict() for e in errata.build_ledger()],
        }
        text = json.dumps(doc, indent=2) + "\n"
    _emit(text, opts["out"])
    ok = all(r["a_match"] and r["b_match"] for r in rows)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    opts = resolve(args, ["depth", "seed", "jobs", "format", "out"])
    if opts["depth"] not in verify.DEPTHS:
        raise UsageError(f"depth must be one of {sorted(verify.DEPTHS)}")
    report = verify.run(opts["depth"], opts["seed"], opts["jobs"])
    fmt = opts["format"] or "text"
    if fmt == "json":
        text = json.dumps(report.as_dict(), indent=2) + "\n"
    elif fmt == "text":
        text = "\n".join(report.lines()) + "\n"
    else:
        raise UsageError(f"unknown format {fmt!r}")
    _emit(text, opts["out"])
    return EXIT_OK if report.ok else EXIT_FAIL


def _params(p: int, q: int) -> SurfaceParams:
    try:
        return SurfaceParams(p, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _fmt_class(x) -> str:
    return "(" + ",".join(render(c) for c in x.coords) + ")"


def cmd_walls(args) -> int:
    opts = resolve(args, ["n", "p", "q", "w0", "w1", "format", "out"])
    if opts["w0"] is None or opts["w1"] is None:
        raise UsageError("--w0 and --w1 are required")
    if opts["n"] < 1:
        raise UsageError("--n must be at least 1")
    try:
        w0, w1 = expr.parse_class(opts["w0"]), expr.parse_class(opts["w1"])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    params = _params(opts["p"], opts["q"])
    c1 = classes(params).c1(opts["n"])
    try:
        found = walls_on_segment(w0, w1, c1)
    except EndpointOnWall as exc:
        raise UsageError(f"{exc} (zeta = {_fmt_class(exc.zeta)})") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = []
    for w in found:
        rows.append({
            "zeta": [render(c) for c in w.zeta.coords],
            "square": w.square,
            "M": None if w.M is None else [render(c) for c in w.M.coords],
            "effective": None if w.M is None else wall_effective(w.M, c1, params),
        })
    if (opts["format"] or "text") == "json":
        meta = {"p": params.p, "q": params.q, "n": opts["n"], "c1": [render(c) for c in c1.coords]}
        text = json.dumps({"meta": meta, "rows": rows}, indent=2) + "\n"
    else:
        lines = [f"# c1 = {_fmt_class(c1)}; {len(rows)} wall(s)"]
        for r in rows:
            M = "-" if r["M"] is None else "(" + ",".join(r["M"]) + ")"
            eff = "-" if r["effective"] is None else str(r["effective"]).lower()
            lines.append(f"zeta=({','.join(r['zeta'])}) square={r['square']} M={M} effective={eff}")
        text = "\n".join(lines) + "\n"
    _emit(text, opts["out"])
    return EXIT_OK


def cmd_hilb2(args) -> int:
    opts = resolve(args, ["p", "q"])
    params = _params(opts["p"], opts["q"])
    lets = {}
    for item in args.let or []:
        if "=" not in item:
            raise UsageError(f"--let expects NAME=c0,...,c9, got {item!r}")
        name, coords = item.split("=", 1)
        try:
            lets[name.strip()] = expr.parse_class(coords)
        except ValueError as exc:
            raise UsageError(f"--let {name.strip()}: {exc}") from None
    try:
        value = expr.evaluate(args.expression, params, lets)
    except expr.ParseError as exc:
        raise UsageError(f"parse error at {exc}") from None
    print(render(Fraction(value)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dolgachev", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="flat key = value file; flags override it")
        return sp

    inv = common(sub.add_parser("invariants", help="a(n), b(n) tables"))
    inv.add_argument("--p", type=int)
    inv.add_argument("--q", type=int)
    inv.add_argument("--n-max", dest="n_max", type=int)
    inv.add_argument("--sweep", nargs=2, type=int, metavar=("PMAX", "QMAX"))
    inv.add_argument("--format", choices=["json", "csv"])
    inv.add_argument("--out")
    inv.add_argument("--jobs", type=int)
    inv.set_defaults(func=cmd_invariants)

    ver = common(sub.add_parser("verify", help="identity and errata suite"))
    ver.add_argument("--depth", choices=sorted(verify.DEPTHS))
    ver.add_argument("--seed", type=int)
    ver.add_argument("--jobs", type=int)
    ver.add_argument("--format", choices=["text", "json"])
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)

    wal = common(sub.add_parser("walls", help="walls crossed by a segment of periods"))
    wal.add_argument("--n", type=int)
    wal.add_argument("--w0", help='ten coordinates, e.g. "3,1,1,1,1,1,1,1,1,1/2"')
    wal.add_argument("--w1")
    wal.add_argument("--p", type=int)
    wal.add_argument("--q", type=int)
    wal.add_argument("--format", choices=["text", "json"])
    wal.add_argument("--out")
    wal.set_defaults(func=cmd_walls)

    hil = common(sub.add_parser("hilb2", help="evaluate a quartic product on Hilb^2"))
    hil.add_argument("expression")
    hil.add_argument("--let", action="append", metavar="NAME=c0,...,c9")
    hil.add_argument("--p", type=int)
    hil.add_argument("--q", type=int)
    hil.set_defaults(func=cmd_hilb2)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"dolgachev {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
