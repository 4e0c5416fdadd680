"""Command-line front end."""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import gf2
from .catalog import catalog, expected_count, involution_set
from .generators import parse_genword, realize
from .group import DEFAULT_BUDGET
from .homology import BRUTEFORCE_MAX_GENUS, isometry_order, twist_generators
from .mapping import Engine
from .verifier import RunConfig, verify_all

USAGE = 3
BUDGET_ENV = "ARTIFACT_BUDGET"
DEFAULT_GENERA = {"a": "4-12", "b": "4-7"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _genera(values: Sequence[str]) -> tuple:
    out = []
    for v in values:
        for part in v.split(","):
            part = part.strip()
            if not part:
                continue
            if "-" in part[1:]:
                a, b = part.split("-", 1)
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
    if not out:
        raise UsageError("no genus given")
    for g in out:
        if g < 4:
            raise UsageError(f"genus must be >= 4, got {g}")
    return tuple(sorted(set(out)))


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="artifact", description="Mapping classes of nonorientable surfaces "
                "and the level 2 involution generators.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="verify catalog statements")
    v.add_argument("--genus", nargs="+", help="e.g. 5, 4,5 or 4-7 (default 4-7 for tier b, "
                   "4-12 for tier a)")
    v.add_argument("--tier", default="b", type=str.lower, choices=("a", "b"))
    v.add_argument("--statement", default="*", help="id glob, comma separated")
    v.add_argument("--json", metavar="PATH")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--budget", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--include-printed", action="store_true",
                   help="also run the literal variants of inconsistent statements")
    v.add_argument("--quiet", action="store_true", help="only print the summary")

    c = sub.add_parser("catalog", help="list statement ids")
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--text", action="store_true", help="print each statement")

    h = sub.add_parser("homology", help="induced homology action of a generator word")
    h.add_argument("--gen", required=True)
    h.add_argument("--genus", type=int, required=True)

    i = sub.add_parser("isometry", help="order of the mod-2 isometry group")
    i.add_argument("--genus", type=int, required=True)

    n = sub.add_parser("count", help="size of the involution generating set")
    n.add_argument("--genus", type=int, required=True)
    return p


def _check_genus(g: int, low: int = 4) -> None:
    if g < low:
        raise UsageError(f"genus must be >= {low}, got {g}")


def cmd_verify(a) -> int:
    if a.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if a.seed < 0:
        raise UsageError("--seed must be non-negative")
    genera = _genera(a.genus or [DEFAULT_GENERA[a.tier]])
    budget = a.budget if a.budget is not None else _default_budget()
    cfg = RunConfig(genera, a.tier.upper(), a.statement, budget, a.jobs, a.seed, a.include_printed)
    for g in genera:
        if g % 2 == 1 and g < 5:
            raise UsageError("odd genus must be >= 5")
    report = verify_all(cfg)
    if not report.certificates:
        print(f"no statement matches {a.statement!r}", file=sys.stderr)
        return USAGE
    bad = [k for k, ok in report.validation.items() if not ok]
    for k in bad:
        print(f"generator validation failed: {k}", file=sys.stderr)
    if not a.quiet:
        width = max(len(c.statement.id) for c in report.certificates)
        for c in report.certificates:
            flag = " (printed)" if c.statement.as_printed else ""
            print(f"g={c.statement.genus}  {c.statement.id:<{width}}  {c.tier}  {c.verdict:<9}  "
                  f"{c.elapsed_ms:9.1f} ms  {c.witness}{flag}")
    s = report.summary()
    print(f"verified {s['verified']}, falsified {s['falsified']}, undecided {s['undecided']}")
    if a.json:
        with open(a.json, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=2, sort_keys=True, ensure_ascii=False)
            fh.write("\n")
    return report.exit_code()


def cmd_catalog(a) -> int:
    _check_genus(a.genus)
    for s in catalog(a.genus):
        line = s.id + ("  [printed]" if s.as_printed else "")
        if a.text:
            line += "  " + s.text()
        print(line)
    return 0


def _print_matrix(rows) -> None:
    for r in rows:
        print("  " + " ".join(f"{x:>2}" for x in r))


def cmd_homology(a) -> int:
    _check_genus(a.genus)
    try:
        w = parse_genword(a.gen)
        f = realize(Engine(a.genus), w)
    except ValueError as exc:
        raise UsageError(str(exc))
    m2 = f.mod2()
    g = a.genus
    print(f"mod-2 action (columns are images of x1..x{g}):")
    _print_matrix(gf2.to_rows(m2))
    mz = f.integral()
    print("integral action (modulo 2(x1+...+xg)):")
    _print_matrix([[mz[j][i] for j in range(g)] for i in range(g)])
    print(f"level 2: {m2 == gf2.identity(g)}")
    return 0


def cmd_isometry(a) -> int:
    _check_genus(a.genus, 1)
    clo = isometry_order(a.genus, "closure", twist_generators(a.genus))
    print(clo.text())
    if a.genus <= BRUTEFORCE_MAX_GENUS:
        bf = isometry_order(a.genus, "bruteforce")
        print(bf.text())
        print("agree" if bf.order == clo.order else "DISAGREE")
        return 0 if bf.order == clo.order else 1
    return 0


def cmd_count(a) -> int:
    _check_genus(a.genus)
    try:
        spec = involution_set(a.genus)
    except ValueError as exc:
        raise UsageError(str(exc))
    n, want = len(spec.members), expected_count(a.genus)
    print(f"{n} = {want}" if n == want else f"{n} != {want}")
    return 0 if n == want else 1


COMMANDS = {"verify": cmd_verify, "catalog": cmd_catalog, "homology": cmd_homology,
            "isometry": cmd_isometry, "count": cmd_count}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.cmd](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
