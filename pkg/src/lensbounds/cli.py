"""Command-line interface: query, table, derive, lift, verify.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 internal
inconsistency (a lower bound exceeding an upper bound, i.e. an engine bug).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .catalog import report
from .dyadic import alpha
from .inductive import derive_rounds
from .lifting import (davis_mahowald_check, embedding_gate, feeding_params,
                      sharpening_drop, sharper_lifting_level)
from .records import (InconsistentBoundsError, LensSpace,
                      RoundsDivergenceError)
from .verify import run_scope

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_INTERNAL = 3

COLUMNS = ("m", "dim", "e", "lower", "lower_rule", "upper", "upper_rule",
           "upper_category", "gap", "eff", "exact")
_INT_COLUMNS = {"m", "dim", "e", "lower", "upper", "gap", "eff"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


# --- table rendering (byte-stable per format) ------------------------------

def table_rows(e: int, max_m: int, odd_factor: int = 1,
               conjectural: bool = False, external: bool = False) -> list[dict]:
    rows = []
    for m in range(1, max_m + 1):
        rep = report(LensSpace(m, e, odd_factor), conjectural=conjectural,
                     external=external)
        rows.append({
            "m": m,
            "dim": rep.space.dim,
            "e": e,
            "lower": rep.lower.dim,
            "lower_rule": rep.lower.rule_id,
            "upper": rep.upper.dim,
            "upper_rule": rep.upper.rule_id,
            "upper_category": str(rep.upper.category),
            "gap": rep.gap,
            "eff": 2 * rep.space.dim - rep.upper.dim,
            "exact": rep.exact,
        })
    return rows


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_csv(rows: list[dict]) -> str:
    lines = [",".join(COLUMNS)]
    lines.extend(",".join(_cell(r[c]) for c in COLUMNS) for r in rows)
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[dict]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != COLUMNS:
        raise ValueError(f"unexpected header {header}")
    rows = []
    for record in reader:
        if not record:
            continue
        row: dict = dict(zip(COLUMNS, record))
        for key in _INT_COLUMNS:
            row[key] = int(row[key])
        row["exact"] = row["exact"] == "true"
        rows.append(row)
    return rows


def render_jsonl(rows: list[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n"
                   for r in rows)


def parse_jsonl(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line]


def render_markdown(rows: list[dict]) -> str:
    out = ["| " + " | ".join(COLUMNS) + " |",
           "|" + "|".join(" --- " for _ in COLUMNS) + "|"]
    out.extend("| " + " | ".join(_cell(r[c]) for c in COLUMNS) + " |"
               for r in rows)
    return "\n".join(out) + "\n"


def render_human(rows: list[dict]) -> str:
    cells = [COLUMNS] + [tuple(_cell(r[c]) for c in COLUMNS) for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(COLUMNS))]
    lines = ["  ".join(row[i].rjust(widths[i]) for i in range(len(COLUMNS)))
             for row in cells]
    return "\n".join(lines) + "\n"


_RENDERERS = {"csv": render_csv, "jsonl": render_jsonl,
              "md": render_markdown, "human": render_human}


# --- subcommands ------------------------------------------------------------

def _flag_suffix(bound) -> str:
    flags = [name for name, on in (("conjectural", bound.conjectural),
                                   ("external", bound.external),
                                   ("transferred", bound.transferred)) if on]
    return f"  [{', '.join(flags)}]" if flags else ""


def cmd_query(args) -> int:
    space = LensSpace(args.m, args.e, args.k)
    rep = report(space, conjectural=args.conjectural, external=args.external)
    print(f"{space}  (m={space.m}, e={space.e}, odd factor {space.odd_factor}, "
          f"manifold dimension {space.dim})")
    lo, up = rep.lower, rep.upper
    print(f"  lower: emb >= {lo.dim}  via {lo.rule_id}: {lo.citation}"
          f"{_flag_suffix(lo)}")
    print(f"  upper: emb <= {up.dim} ({up.category})  via {up.rule_id}: "
          f"{up.citation}{_flag_suffix(up)}")
    if rep.exact:
        print(f"  exact: embedding dimension = {up.dim}")
    else:
        print(f"  gap: {rep.gap}")
    if args.all:
        print("  all bounds:")
        for b in rep.all_bounds:
            print(f"    {b}")
    return EXIT_OK


def cmd_table(args) -> int:
    rows = table_rows(args.e, args.max_m, args.k,
                      conjectural=args.conjectural, external=args.external)
    sys.stdout.write(_RENDERERS[args.format](rows))
    return EXIT_OK


def cmd_derive(args) -> int:
    if args.m < 3:
        print(f"no inductive derivation exists for m={args.m} "
              "(the rounds start at m=3)", file=sys.stderr)
        return EXIT_USAGE
    candidates = [b for m, b in derive_rounds(args.e, args.m)
                  if m == args.m and (args.external or not b.external)]
    if not candidates:
        print(f"no inductive derivation for (m={args.m}, e={args.e}); "
              "the best upper bound there is axiom-only", file=sys.stderr)
        return EXIT_USAGE
    best = min(candidates, key=lambda b: b.dim)
    if args.format == "jsonl":
        print(json.dumps(best.derivation.to_dict(), sort_keys=True))
    else:
        print(f"best inductive upper bound for (m={args.m}, e={args.e}): "
              f"R^{best.dim} ({best.category}){_flag_suffix(best)}")
        for line in best.derivation.to_lines():
            print(line)
    conditions = sum(len(n.side_conditions) for n in best.derivation.walk())
    if not best.derivation.replay():
        print("side-condition replay FAILED", file=sys.stderr)
        return EXIT_VERIFY
    print(f"side conditions: {conditions} replayed OK")
    return EXIT_OK


def cmd_lift(args) -> int:
    ell = args.ell
    lam = sharpening_drop(ell)
    print(f"ell={ell}: alpha(ell)={alpha(ell)}, sharpening drop lambda={lam}")
    if ell >= 2:
        ok, nu1, nu2 = davis_mahowald_check(ell)
        print(f"davis-mahowald: nu(C(p, 4l-4)) = {nu1} (need >= 1), "
              f"nu(C(p, 4l-2)) = {nu2} (need >= 3) -> "
              f"{'pass' if ok else 'fail'}")
        print(f"certified BO level for mu=2: {sharper_lifting_level(ell)} "
              f"(unsharpened baseline {8 * (ell - 1)})")
    for mu in ((args.mu,) if args.mu else (1, 2)):
        inst = feeding_params(mu, ell, 0)
        ambient = embedding_gate(inst)
        line = (f"feeding mu={mu}: (n, m, d) = ({inst.n}, {inst.m}, {inst.d})"
                f" -> {2**mu}*eta over L({inst.n}, e) embeds in R^{ambient}")
        if lam:
            sharp = embedding_gate(feeding_params(mu, ell, 1))
            line += f", sharpened R^{sharp}"
        print(line)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_scope(args.scope)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.ok]
    total_cases = sum(r.cases for r in results)
    verdict = "FAIL" if failed else "PASS"
    print(f"{verdict}: {len(results) - len(failed)}/{len(results)} checks, "
          f"{total_cases} cases")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lensbounds",
                     description="Embedding-dimension bounds for 2^e-torsion "
                                 "lens spaces")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    def space_args(p):
        p.add_argument("--m", type=int, required=True,
                       help="manifold parameter (dimension 2m+1)")
        p.add_argument("--e", type=int, required=True,
                       help="2-power torsion exponent")
        p.add_argument("--k", type=int, default=1,
                       help="odd torsion cofactor (default 1)")

    def rule_flags(p):
        p.add_argument("--conjectural", action="store_true",
                       help="include conjectural bounds (flagged)")
        p.add_argument("--external", action="store_true",
                       help="include external-input bounds (flagged)")

    q = sub.add_parser("query", help="best bounds for one lens space")
    space_args(q)
    rule_flags(q)
    q.add_argument("--all", action="store_true",
                   help="list every applicable bound")
    q.set_defaults(fn=cmd_query)

    t = sub.add_parser("table", help="bounds table for m = 1..max-m")
    t.add_argument("--e", type=int, required=True)
    t.add_argument("--max-m", type=int, required=True, dest="max_m")
    t.add_argument("--k", type=int, default=1)
    t.add_argument("--format", choices=sorted(_RENDERERS), default="human")
    rule_flags(t)
    t.set_defaults(fn=cmd_table)

    d = sub.add_parser("derive", help="derivation tree of the best "
                                      "inductive upper bound")
    d.add_argument("--m", type=int, required=True)
    d.add_argument("--e", type=int, required=True)
    d.add_argument("--format", choices=("human", "jsonl"), default="human")
    d.add_argument("--external", action="store_true")
    d.set_defaults(fn=cmd_derive)

    lf = sub.add_parser("lift", help="lifting gates for one induction "
                                     "parameter ell")
    lf.add_argument("--ell", type=int, required=True)
    lf.add_argument("--mu", type=int, choices=(1, 2))
    lf.set_defaults(fn=cmd_lift)

    v = sub.add_parser("verify", help="run the invariant sweeps")
    v.add_argument("scope", choices=("dyadic", "cohomology", "bounds",
                                     "rounds", "lifting", "all"))
    v.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except InconsistentBoundsError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except RoundsDivergenceError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
