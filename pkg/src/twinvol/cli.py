"""Command-line front end.

    twinvol verify dihedral --max-l 200 [--brute-cap 60] [--jobs 4]
    twinvol verify orders --primes 2,3,5,7
    twinvol verify indicators --max-l 20
    twinvol table1
    twinvol count --group D:12 --aut 5,0 [--brute-force]
    twinvol indicators --group D:5 [--aut 4,0]
    twinvol congruence --a 4 --c 4 --n 6
    twinvol aut-list --group D:6

Exit status: 0 on success, 1 when a campaign finds violations, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .automorphisms import (
    CONVENTION_NOTE,
    aut_from_literal,
    automorphisms,
    identity_aut,
    is_involutive,
)
from .characters import character_table, indicator_report
from .groups import Dihedral, GroupError, parse_group
from .harness import (
    CSV_FIELDS,
    CampaignConfig,
    Family,
    csv_cell,
    render_text,
    run_campaign,
    write_csv,
    write_json,
    write_report,
)
from .involutions import make_record, twisted_involution_set
from .numtheory import solve_linear_congruence


class UsageError(Exception):
    pass


def _color(text: str, code: str, stream) -> str:
    if os.environ.get("NO_COLOR") or not getattr(stream, "isatty", lambda: False)():
        return text
    return f"\033[{code}m{text}\033[0m"


def _primes(text: str) -> List[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed prime list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twinvol", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p, default="text"):
        p.add_argument("--format", choices=("text", "json", "csv"), default=default)
        p.add_argument("--output", "-o", type=Path, help="write to this file instead of stdout")

    verify = sub.add_parser("verify", help="run a verification campaign")
    vsub = verify.add_subparsers(dest="campaign", required=True)
    p = vsub.add_parser("dihedral", help="m_sigma <= T(D_l) over all automorphisms")
    p.add_argument("--max-l", type=int, default=60)
    p.add_argument("--brute-cap", type=int, default=60, help="brute-force cross-check for l up to this")
    p.add_argument("--jobs", type=int, default=1)
    add_output(p)
    p = vsub.add_parser("orders", help="groups of order p, p^2 and 2p")
    p.add_argument("--primes", type=_primes, default=[2, 3, 5, 7])
    p.add_argument("--classes", choices=("all", "p", "p2", "2p"), default="all")
    p.add_argument("--two-cyclic-max-p", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    add_output(p)
    p = vsub.add_parser("indicators", help="classical and twisted indicator identities on D_l")
    p.add_argument("--max-l", type=int, default=20)
    p.add_argument("--jobs", type=int, default=1)
    add_output(p)

    p = sub.add_parser("table1", help="the six automorphisms of D_3")
    add_output(p)

    p = sub.add_parser("count", help="twisted involutions of one automorphism")
    p.add_argument("--group", required=True)
    p.add_argument("--aut", help="u,v for D:l; w for Z:n; a,b,c,d for Z:nxZ:n (default: identity)")
    p.add_argument("--brute-force", action="store_true")
    add_output(p)

    p = sub.add_parser("indicators", help="classical and twisted indicators of a group")
    p.add_argument("--group", required=True)
    p.add_argument("--aut", help="single automorphism (default: every involutive one)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "-o", type=Path)

    p = sub.add_parser("congruence", help="solve a*k = c (mod n)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("aut-list", help="enumerate automorphisms of a group")
    p.add_argument("--group", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text)


def _campaign(args) -> int:
    if args.campaign == "dihedral":
        cfg = CampaignConfig(Family.DIHEDRAL, max_l=args.max_l, brute_cap=args.brute_cap, jobs=args.jobs)
    elif args.campaign == "orders":
        family = {"all": Family.ORDERS, "p": Family.ORDER_P, "p2": Family.ORDER_P_SQUARED,
                  "2p": Family.ORDER_2P}[args.classes]
        cfg = CampaignConfig(family, primes=tuple(args.primes), two_cyclic_max_p=args.two_cyclic_max_p,
                             jobs=args.jobs)
    else:
        cfg = CampaignConfig(Family.INDICATORS, max_l=args.max_l, jobs=args.jobs)
    return _run(cfg, args)


def _run(cfg: CampaignConfig, args) -> int:
    cfg.output, cfg.fmt = args.output, args.format
    try:
        cfg.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_campaign(cfg)
    if args.output is not None:
        write_report(report, args.output, args.format)
    elif args.format == "text":
        sys.stdout.write(render_text(report))
    else:
        (write_json if args.format == "json" else write_csv)(report, sys.stdout)
    verdict = "PASS" if report.ok else "FAIL"
    print(
        _color(verdict, "32" if report.ok else "31", sys.stderr)
        + f" {cfg.family.value}: {report.summary['cases']} cases, "
        f"{report.summary['violations']} violations, {report.wall_time:.2f}s",
        file=sys.stderr,
    )
    return 0 if report.ok else 1


def _count(args) -> int:
    g = parse_group(args.group)
    sigma = aut_from_literal(g, args.aut) if args.aut else identity_aut(g)
    rec = make_record(g, sigma, brute=args.brute_force or not isinstance(g, Dihedral))
    d = rec.to_dict()
    if args.format == "json":
        d["S"] = [g.format(x) for x in twisted_involution_set(g, sigma)]
        text = json.dumps(d, indent=1) + "\n"
    elif args.format == "csv":
        text = ",".join(CSV_FIELDS) + "\n" + ",".join(str(csv_cell(d[f])) for f in CSV_FIELDS) + "\n"
    else:
        text = f"group={rec.group} aut={sigma} m={rec.m} T={rec.T} "
        text += f"ineq_holds={csv_cell(rec.ineq_holds)} equality={csv_cell(rec.equality)}\n"
        if rec.m_closed is not None:
            text += f"  closed form: rot={rec.rot} refl={rec.refl} total={rec.m_closed}\n"
        if rec.m_brute is not None:
            text += f"  brute force: {rec.m_brute}\n"
    _emit(text, args.output)
    return 0 if rec.agrees and rec.ineq_holds else 1


def _aut_label(params: dict) -> str:
    if params["v"] is None:
        return json.dumps(params["u"], separators=(",", ":"))
    return f"{params['u']},{params['v']}"


def _indicators(args) -> int:
    g = parse_group(args.group)
    if args.aut:
        auts = [aut_from_literal(g, args.aut)]
    else:
        auts = [a for a in automorphisms(g) if is_involutive(g, a)]
    rows = indicator_report(character_table(g), auts)
    if args.format == "json":
        text = json.dumps(rows, indent=1) + "\n"
    else:
        lines = [f"{'irrep':<10} {'degree':>6} {'eps':>4}  twisted"]
        for row in rows:
            tw = " ".join(f"{_aut_label(t)}:{t['value']}" for t in row["twisted"])
            lines.append(f"{row['irrep']:<10} {row['degree']:>6} {row['epsilon']:>4}  {tw}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0


def _congruence(args) -> int:
    if args.n < 1:
        raise UsageError(f"--n must be positive, got {args.n}")
    sol = solve_linear_congruence(args.a, args.c, args.n)
    print(json.dumps(sol.to_dict()))
    return 0


def _aut_list(args) -> int:
    g = parse_group(args.group)
    auts = automorphisms(g)
    if args.format == "json":
        print(json.dumps({"group": g.name, "convention": CONVENTION_NOTE,
                          "automorphisms": [a.params() for a in auts]}))
    else:
        if isinstance(g, Dihedral):
            print(CONVENTION_NOTE)
        for a in auts:
            print(a)
        print(f"{len(auts)} automorphisms of {g.name}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": _campaign,
        "table1": lambda a: _run(CampaignConfig(Family.TABLE1), a),
        "count": _count,
        "indicators": _indicators,
        "congruence": _congruence,
        "aut-list": _aut_list,
    }
    try:
        return handlers[args.command](args)
    except (UsageError, GroupError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{parser.prog}: cannot write report: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
