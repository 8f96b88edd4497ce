"""Command-line driver: one subcommand per capability, JSON reports.

Machine-readable output goes to stdout (one JSON report validating against
docs/report.schema.json), a short human summary to stderr.  Exit status is 0
exactly when the command's mathematical assertion holds, 1 when it fails,
and 2 on invalid parameters.  Reports embed the field modulus and primitive
element so every number is reproducible bit-for-bit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import classdelta as cdelta
from . import equivalence as equiv
from . import families
from . import geometry as geo
from . import search as searchmod
from .field import GF, is_prime
from .poly import UniPoly

SCHEMA_VERSION = 1
SCHEMA_PATH = Path(__file__).resolve().parent.parent.parent / "docs" / "report.schema.json"


def field_for_q(q: int, modulus=None) -> GF:
    """Resolve a field order q = p^h to its context."""
    if q < 2:
        raise ValueError(f"not a prime power: {q}")
    p = min(spf for spf in range(2, q + 1) if q % spf == 0 and is_prime(spf))
    h = 0
    qq = q
    while qq % p == 0 and qq > 1:
        qq //= p
        h += 1
    if qq != 1:
        raise ValueError(f"not a prime power: {q}")
    return GF(p, h, modulus=modulus)


def _spec_from_args(gf: GF, args) -> families.FamilySpec:
    given = {k: getattr(args, k) for k in ("n", "c", "i") if getattr(args, k, None) is not None}
    if not given:
        return families.default_spec(gf, args.family)
    base = families.default_spec(gf, args.family)
    merged = {"n": base.n, "c": base.c, "i": base.i} | given
    return families.FamilySpec(args.family, **merged)


# ---------------------------------------------------------------------------
# subcommands: each returns (fields, result_dict, ok)
# ---------------------------------------------------------------------------

def cmd_verify(args):
    gf = field_for_q(args.q)
    spec = _spec_from_args(gf, args)
    g = families.g_of(spec, gf)
    spread = geo.spread_from_g(gf, g)
    rep = geo.verify_spread(spread, census=args.census)
    thm = geo.permutation_criterion(gf, g)
    result = {
        "family": spec.to_json(),
        "g": g.to_json(),
        "verify": rep.to_json(),
        "permutation_criterion": thm,
    }
    return [gf.to_json()], result, bool(rep.is_symplectic and thm)


def cmd_tau_recover(args):
    gf = field_for_q(args.q)
    spec = _spec_from_args(gf, args)
    g = families.g_of(spec, gf)
    transformed = equiv.tau_spread(geo.spread_from_g(gf, g))
    recovered = equiv.recover_g(transformed)
    result = {
        "family": spec.to_json(),
        "g": g.to_json(),
        "recovered_terms": recovered.to_json(),
        "recovered_text": recovered.to_text(),
        "permutation_criterion": geo.permutation_criterion(gf, recovered),
    }
    return [gf.to_json()], result, bool(result["permutation_criterion"])


def _class_rows(gf: GF, delta_max: int):
    rows = []

    def add_row(name, spec, extra=None):
        fam = cdelta.family_gen(gf, spec)
        cert = cdelta.find_class(fam, delta_max)
        row = {"family": name, "q": gf.q, "params": spec.to_json()}
        if cert is None:
            row |= {"delta": None, "t": None, "d": None, "check_count": gf.q}
        else:
            row |= cert.to_json()
            row["check_count"] = cert.check_count(gf.q)
            row["reduced_equals_full"] = bool(
                cdelta.reduced_pp_check(fam, cert) == fam.all_permutations()
            )
        if extra:
            row |= extra
        rows.append(row)

    add_row("regular", families.default_spec(gf, "regular"))
    if gf.p != 2:
        for i in range(1, gf.h):
            alpha = gf.p ** i
            from math import gcd
            add_row(
                "kantor",
                families.FamilySpec("kantor", n=gf.epsilon, i=i),
                {"formula_count": gcd(gf.q - 1, (alpha - 1) // 2) + 1},
            )
    if gf.p == 3 and gf.h > 2:
        add_row("thas-payne", families.FamilySpec("thas-payne", n=gf.epsilon))
    if (gf.p, gf.h) == (3, 5):
        add_row("penttila-williams", families.FamilySpec("penttila-williams"))
    if gf.p == 3 and gf.h % 2 == 1 and gf.h >= 3:
        add_row("ree-tits", families.FamilySpec("ree-tits"))
    if gf.p == 2 and gf.h % 2 == 1 and gf.h >= 3:
        add_row("tits-luneburg", families.FamilySpec("tits-luneburg"))
    return rows


def cmd_class_table(args):
    fields, rows = [], []
    for q in args.q:
        gf = field_for_q(q)
        fields.append(gf.to_json())
        rows.extend(_class_rows(gf, args.delta_max))
    ok = all(r.get("reduced_equals_full", True) for r in rows)
    return fields, {"rows": rows}, ok


def render_class_csv(rows) -> str:
    cols = ["family", "q", "delta", "t", "d", "check_count", "formula_count"]
    lines = [",".join(cols)]
    for r in rows:
        lines.append(",".join("" if r.get(c) is None else str(r[c]) for c in cols))
    return "\n".join(lines)


def cmd_pp_check(args):
    gf = field_for_q(args.q)
    a_values = list(range(gf.q)) if args.all else args.a
    if not a_values and not args.all:
        raise ValueError("give --all or at least one --a")
    failures = []
    for a in a_values:
        if not 0 <= a < gf.q:
            raise ValueError(f"a = {a} outside field")
        if not families.ree_tits_fa(gf, a).is_permutation():
            failures.append(a)
    result = {
        "q": gf.q,
        "alpha": gf.alpha(),
        "a_values": "all" if args.all else a_values,
        "checked": len(a_values),
        "failures": failures,
        "all_permutations": not failures,
    }
    return [gf.to_json()], result, not failures


def cmd_search(args):
    space = searchmod.SearchSpace(
        fields=[(args.p, args.h)],
        t_range=args.t_range,
        d_values=args.d_values,
        c_values=args.c_values,
        delta_max=args.delta_max,
    )
    progress = (lambda msg: print(msg, file=sys.stderr)) if not args.quiet else None
    report = searchmod.run_search(space, threads=args.threads, progress=progress)
    payload = report.to_json()
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2))
    return report.fields, payload, report.all_classified


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

def load_schema() -> dict:
    return json.loads(SCHEMA_PATH.read_text())


def validate_report(report, schema=None) -> None:
    """Structural validation against the shipped schema subset
    (type / required / properties / items / enum); raises ValueError."""
    schema = schema if schema is not None else load_schema()

    def check(node, sch, path):
        typ = sch.get("type")
        type_map = {
            "object": dict, "array": list, "string": str, "boolean": bool,
            "integer": int, "number": (int, float), "null": type(None),
        }
        if typ is not None:
            pytype = type_map[typ]
            if isinstance(node, bool) and typ in ("integer", "number"):
                raise ValueError(f"{path}: expected {typ}, got bool")
            if not isinstance(node, pytype):
                raise ValueError(f"{path}: expected {typ}, got {type(node).__name__}")
        if "enum" in sch and node not in sch["enum"]:
            raise ValueError(f"{path}: {node!r} not in {sch['enum']}")
        if typ == "object":
            for key in sch.get("required", []):
                if key not in node:
                    raise ValueError(f"{path}: missing required key {key!r}")
            for key, sub in sch.get("properties", {}).items():
                if key in node:
                    check(node[key], sub, f"{path}.{key}")
        if typ == "array" and "items" in sch:
            for k, item in enumerate(node):
                check(item, sch["items"], f"{path}[{k}]")

    check(report, schema, "$")


def make_report(command, args_echo, fields, result, ok, wall_time):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "args": args_echo,
        "fields": fields,
        "result": result,
        "ok": ok,
        "wall_time_s": wall_time,
    }


def _parse_t_range(text):
    lo, _, hi = text.partition(":")
    return (int(lo), int(hi))


def _parse_values(text):
    return tuple(int(v) for v in text.split(",") if v != "")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="symspread",
        description="Symplectic spreads of PG(3,q): construction, exact "
        "verification, polynomial recovery, check-count reduction, search.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_family_flags(p):
        p.add_argument("--family", required=True, choices=families.FAMILY_NAMES)
        p.add_argument("--q", type=int, required=True, help="field order p^h")
        p.add_argument("--n", type=int, help="non-square parameter (element index)")
        p.add_argument("--c", type=int, help="trace-one parameter (element index, even q)")
        p.add_argument("--i", type=int, help="Frobenius power for the kantor family")

    pv = sub.add_parser("verify", help="construct a family spread and verify it exactly")
    add_family_flags(pv)
    pv.add_argument("--census", action="store_true", help="collect every violation")
    pv.set_defaults(func=cmd_verify)

    pt = sub.add_parser("tau-recover", help="recover the generating polynomial of the swapped spread")
    add_family_flags(pt)
    pt.set_defaults(func=cmd_tau_recover)

    pc = sub.add_parser("class-table", help="scaling-class certificates and check counts per family")
    pc.add_argument("--q", type=int, action="append", required=True)
    pc.add_argument("--delta-max", type=int, default=23)
    pc.add_argument("--format", choices=("json", "csv"), default="json")
    pc.set_defaults(func=cmd_class_table)

    pp = sub.add_parser("pp-check", help="permutation check of the low-degree family over GF(3^(2h+1))")
    pp.add_argument("--q", type=int, required=True)
    pp.add_argument("--all", action="store_true")
    pp.add_argument("--a", type=int, action="append", default=[])
    pp.set_defaults(func=cmd_pp_check)

    ps = sub.add_parser("search", help="exhaustive two-term search with class prefiltering")
    ps.add_argument("--p", type=int, required=True)
    ps.add_argument("--h", type=int, required=True)
    ps.add_argument("--delta-max", type=int, default=23)
    ps.add_argument("--t-range", type=_parse_t_range, default=None, metavar="LO:HI")
    ps.add_argument("--d-values", type=_parse_values, default=None, metavar="I,J,...")
    ps.add_argument("--c-values", type=_parse_values, default=None, metavar="I,J,...")
    ps.add_argument("--threads", type=int, default=1)
    ps.add_argument("--out", type=str, default=None, help="also write the report here")
    ps.add_argument("--quiet", action="store_true", help="suppress progress lines")
    ps.set_defaults(func=cmd_search)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    echo = {k: v for k, v in vars(args).items() if k not in ("func", "command") and v is not None}
    echo = {k: (list(v) if isinstance(v, tuple) else v) for k, v in echo.items()}
    t0 = time.monotonic()
    try:
        fields, result, ok = args.func(args)
    except (ValueError, equiv.StandardFormError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = make_report(args.command, echo, fields, result, bool(ok), time.monotonic() - t0)
    validate_report(report)
    if args.command == "class-table" and args.format == "csv":
        print(render_class_csv(result["rows"]))
    else:
        print(json.dumps(report, indent=2))
    print(f"{args.command}: {'OK' if ok else 'FAILED'} ({report['wall_time_s']:.2f}s)", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
