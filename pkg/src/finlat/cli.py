"""Command-line entry point.

Commands: build (lattice summary / DOT), check (law verdicts), mq
(threshold table) and paper-tables (the reference suite).  Output is
byte-deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import compute_mq
from .errors import CapExceeded, FinlatError
from .fields import make_field, poly_str
from .golden import golden_failed, render_golden, run_golden
from .lattices import DEFAULT_LATTICE_CAP, build_lattice, export_dot
from .laws import check_all
from .report import LAW_ORDER

JSON_VERSION = 1


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _factor_prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            n = 0
            while q % p == 0:
                q //= p
                n += 1
            if q != 1:
                raise _CliError(f"{q * p ** n} is not a prime power")
            return p, n
    raise _CliError("q must be >= 2")


def _parse_modulus(text: str):
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise _CliError(f"bad modulus {text!r}; expected comma-separated integers") from None


def _field_from(args):
    if args.q is not None:
        if args.p is not None or args.n is not None:
            raise _CliError("give either --q or --p/--n, not both")
        if args.q < 2:
            raise _CliError("q must be >= 2")
        p, n = _factor_prime_power(args.q)
    elif args.p is not None:
        p, n = args.p, args.n or 1
    else:
        raise _CliError("a field is required: --q or --p [--n]")
    modulus = _parse_modulus(args.modulus) if args.modulus else None
    return make_field(p, n, modulus)


def _cap_from(args) -> int:
    if args.cap is None:
        return DEFAULT_LATTICE_CAP
    if args.cap > DEFAULT_LATTICE_CAP:
        raise _CliError(f"--cap may only lower the default cap {DEFAULT_LATTICE_CAP}")
    if args.cap < 1:
        raise _CliError("--cap must be positive")
    return args.cap


def _cmd_build(args) -> int:
    gf = _field_from(args)
    lat = build_lattice(gf, args.m, cap=_cap_from(args))
    dims = [lat.by_dimension[d] for d in range(args.m + 1)]
    if args.format == "dot":
        _emit(export_dot(lat, show_basis=args.show_basis, perp_edges=args.perp_edges), args.out)
    elif args.format == "json":
        payload = {
            "version": JSON_VERSION,
            "q": gf.q,
            "p": gf.p,
            "n": gf.n,
            "modulus": list(gf.modulus),
            "m": args.m,
            "elements": lat.n,
            "by_dimension": dims,
            "atoms": len(lat.atoms()),
            "coatoms": len(lat.coatoms()),
        }
        _emit(_dumps(payload), args.out)
    else:
        text = (
            f"{lat.n} elements; dims [{','.join(str(c) for c in dims)}]\n"
            f"atoms {len(lat.atoms())}; coatoms {len(lat.coatoms())}\n"
        )
        _emit(text, args.out)
    return 0


def _cmd_check(args) -> int:
    gf = _field_from(args)
    lat = build_lattice(gf, args.m, cap=_cap_from(args))
    report = check_all(lat)
    if args.format == "json":
        _emit(_dumps(report.to_dict(lat)), args.out)
        return 0
    lines = [f"q={gf.q} m={args.m} modulus={poly_str(gf.modulus)}"]
    for law in LAW_ORDER:
        verdict = report.verdicts[law]
        if verdict.holds:
            lines.append(f"{law}: holds")
        else:
            lines.append(f"{law}: fails witness={verdict.witness} note={verdict.note}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _mq_row(gf) -> dict:
    res = compute_mq(gf)
    return {
        "q": gf.q,
        "modulus": list(gf.modulus),
        "m_q": res.m_q,
        "witness": [e.index for e in res.witness],
        "witness_str": "(" + ", ".join(str(e) for e in res.witness) + ")",
        "bounds": res.bound_checks,
    }


def _cmd_mq(args) -> int:
    if args.range:
        if args.q is not None:
            raise _CliError("give either --q or --range, not both")
        try:
            lo, hi = (int(x) for x in args.range.split(".."))
        except ValueError:
            raise _CliError(f"bad range {args.range!r}; expected LO..HI") from None
        qs = []
        for q in range(max(lo, 2), hi + 1):
            try:
                _factor_prime_power(q)
            except _CliError:
                continue
            qs.append(q)
        fields = [make_field(*_factor_prime_power(q)) for q in qs]
    else:
        fields = [_field_from(args)]
    rows = [_mq_row(gf) for gf in fields]
    if args.format == "json":
        _emit(_dumps({"version": JSON_VERSION, "rows": rows}), args.out)
        return 0
    lines = []
    for row in rows:
        bounds = []
        for name, info in row["bounds"].items():
            if info["applies"]:
                mark = "ok" if info["holds"] else "VIOLATED"
                bounds.append(f"{name}<={info['bound']} {mark}")
        suffix = f"  bounds: {', '.join(bounds)}" if bounds else ""
        lines.append(f"m({row['q']}) = {row['m_q']}  witness {row['witness_str']}{suffix}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_paper_tables(args) -> int:
    override = None
    if args.modulus:
        if args.q is None:
            raise _CliError("a modulus override needs --q to say which field it replaces")
        override = (args.q, _parse_modulus(args.modulus))
    items = run_golden(only=args.only, override=override)
    _emit(render_golden(items), args.out)
    return 3 if golden_failed(items) else 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="finlat", description="Subspace lattices over finite fields")
    sub = parser.add_subparsers(dest="command", required=True)

    def field_args(p, with_m=True):
        p.add_argument("--q", type=int, help="field size (prime power)")
        p.add_argument("--p", type=int, help="characteristic")
        p.add_argument("--n", type=int, help="extension degree")
        p.add_argument("--modulus", help="comma-separated modulus coefficients, constant first")
        if with_m:
            p.add_argument("--m", type=int, required=True, help="ambient dimension")
        p.add_argument("--out", help="write output to a file instead of stdout")
        p.add_argument("--cap", type=int, help="lower the subspace-count cap")

    p_build = sub.add_parser("build", help="build a lattice and print its summary")
    field_args(p_build)
    p_build.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p_build.add_argument("--show-basis", action="store_true", help="basis rows in DOT labels")
    p_build.add_argument("--perp-edges", action="store_true", help="dashed involution edges in DOT")
    p_build.set_defaults(func=_cmd_build)

    p_check = sub.add_parser("check", help="decide all lattice laws")
    field_args(p_check)
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.set_defaults(func=_cmd_check)

    p_mq = sub.add_parser("mq", help="threshold m(q) with witnesses and bounds")
    field_args(p_mq, with_m=False)
    p_mq.add_argument("--range", help="inclusive range LO..HI of prime powers")
    p_mq.add_argument("--format", choices=("text", "json"), default="text")
    p_mq.set_defaults(func=_cmd_mq)

    p_tables = sub.add_parser("paper-tables", help="run the built-in reference suite")
    p_tables.add_argument("--only", help="restrict to items with this label prefix")
    p_tables.add_argument("--q", type=int, help="field whose presentation is overridden")
    p_tables.add_argument("--modulus", help="override modulus, comma-separated, constant first")
    p_tables.add_argument("--out", help="write output to a file instead of stdout")
    p_tables.set_defaults(func=_cmd_paper_tables)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except _CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except FinlatError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main_entry():  # console-script shim
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
