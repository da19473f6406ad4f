"""Command-line entry point: ``ucycles {generate,verify,stats,graph,maxpack}``.

Exit codes: 0 success (``verify``: ucycle), 1 packing, 2 internal
NotEulerian, 3 budget exceeded, 4 invalid sequence, 64 usage error,
65 unparseable input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional

from .assembler import DEFAULT_SEARCH_BUDGET, generate_packing
from .classes import census, psi_prime_exact
from .errors import BudgetExceeded, NotEulerian, SymbolOutOfRange
from .graphs import (
    build_class_graph,
    build_transition,
    class_graph_to_dot,
    class_graph_to_json,
    transition_to_dot,
    transition_to_json,
)
from .verifier import exhaustive_max_packing, verify

EX_OK, EX_PACKING, EX_NOT_EULERIAN, EX_BUDGET, EX_INVALID = 0, 1, 2, 3, 4
EX_USAGE, EX_DATAERR = 64, 65

DEFAULT_FORMAT = {
    "generate": "text",
    "verify": "text",
    "stats": "text",
    "graph": "dot",
    "maxpack": "text",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    k: Optional[int] = None
    filter: str = "awesome"
    rep_strategy: str = "default"
    seed: int = 0
    format: Optional[str] = None
    sequence: Optional[str] = None
    which: str = "transition"
    budget: Optional[int] = None

    def __post_init__(self):
        if self.format is None:
            self.format = DEFAULT_FORMAT[self.command]
        if self.n is None or self.k is None:
            raise UsageError("--n and --k are required")
        if not 2 <= self.k <= self.n - 2:
            raise UsageError(f"need 2 <= k <= n-2, got n={self.n}, k={self.k}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ucycles", description="Near-universal cycles for k-subsets of [n].")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--format", choices=formats)
        return p

    g = common(sub.add_parser("generate", help="build a near-Ucycle packing"), ("text", "json"))
    g.add_argument("--filter", choices=("awesome", "good"), default="awesome")
    g.add_argument("--rep-strategy", choices=("default", "search"), default="default")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--budget", type=int, default=None, help="representative-search evaluations")

    v = common(sub.add_parser("verify", help="classify a cyclic sequence"), ("text", "json"))
    v.add_argument("--sequence", required=True, help="file path, or '-' for stdin")

    s = common(sub.add_parser("stats", help="pattern/class/form/set census"), ("text", "json"))
    s.add_argument("--budget", type=int, default=None, help="largest C(n,k) to enumerate")

    gr = common(sub.add_parser("graph", help="export T(n,k) or H(n,k)"), ("dot", "json"))
    gr.add_argument("--which", choices=("transition", "class"), default="transition")
    gr.add_argument("--filter", choices=("awesome", "good"), default="awesome")

    m = common(sub.add_parser("maxpack", help="exhaustive longest packing"), ("text", "json"))
    m.add_argument("--budget", type=int, default=None, help="DFS node budget")
    return parser


def parse_sequence(text: str, n: int) -> list[int]:
    """Parse a cyclic sequence from ``generate`` output, JSON, or plain integers.

    Integer tokens may be separated by whitespace or commas; reading stops at
    a line opening a JSON block.  A single bare digit string is split into
    characters when ``n <= 9``.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        payload = json.loads(stripped)
        return [int(x) for x in payload["sequence"]]
    tokens = []
    for line in stripped.splitlines():
        if line.lstrip().startswith("{"):
            break
        tokens.extend(t for t in line.replace(",", " ").split() if t)
    if not tokens:
        raise ValueError("no symbols found")
    if len(tokens) == 1 and n <= 9 and tokens[0].isdigit():
        return [int(c) for c in tokens[0]]
    return [int(t) for t in tokens]


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def cmd_generate(cfg: RunConfig, out=sys.stdout) -> int:
    budget = DEFAULT_SEARCH_BUDGET if cfg.budget is None else cfg.budget
    result = generate_packing(
        cfg.n, cfg.k, filter=cfg.filter, rep_strategy=cfg.rep_strategy, seed=cfg.seed,
        budget=budget,
    )
    stats = result.stats()
    stats["report"] = result.report
    if cfg.format == "json":
        out.write(json.dumps({"sequence": result.sequence, "stats": stats}) + "\n")
    else:
        out.write(" ".join(map(str, result.sequence)) + "\n")
        out.write(json.dumps(stats, indent=2) + "\n")
    if result.report.get("budget_exceeded"):
        return EX_BUDGET
    return EX_OK


def cmd_verify(cfg: RunConfig, out=sys.stdout) -> int:
    seq = parse_sequence(_read_source(cfg.sequence), cfg.n)
    report = verify(seq, cfg.n, cfg.k)
    if cfg.format == "json":
        out.write(json.dumps(report.as_dict()) + "\n")
    else:
        d = report.as_dict()
        out.write(f"classification: {d['classification']}\n")
        out.write(f"length: {d['length']}\n")
        out.write(f"distinct subsets: {d['coverage']}\n")
        out.write(f"invalid windows: {len(report.invalid_windows)}\n")
        out.write(f"duplicated subsets: {len(report.duplicate_subsets)}\n")
    return {"ucycle": EX_OK, "packing": EX_PACKING}.get(report.classification, EX_INVALID)


def _fmt_pattern(p) -> str:
    return "<" + ",".join(map(str, p)) + ">"


def stats_payload(n: int, k: int, budget: Optional[int] = None) -> dict:
    cs = census(n, k) if budget is None else census(n, k, budget=budget)
    return {
        "n": n,
        "k": k,
        "rows": [
            {
                "pattern": list(r.pattern),
                "goodness": r.goodness,
                "classes": r.exact_class_count,
                "psi_prime_ordered": r.psi_prime_ordered,
                "psi_prime_asym": r.asym_class_count,
                "gcd_mismatch": r.gcd_mismatch,
                "forms": r.exact_form_count,
                "sets": r.exact_set_count,
                "awesome_sets": r.awesome_set_count,
            }
            for r in cs.rows
        ],
        "total_sets": cs.total_sets,
        "good_sets": cs.good_sets,
        "bad_sets": cs.bad_sets,
        "awesome_sets": cs.awesome_sets,
        "good_fraction": cs.good_fraction,
        "awesome_fraction": cs.awesome_fraction,
        "cross_ratios": {_fmt_pattern(p): str(r) for p, r in cs.cross_ratios.items()},
        "non_awesome": {
            "exact": cs.non_awesome.exact,
            "asym": cs.non_awesome.asym,
            "classes": [str(c) for c in cs.non_awesome.classes],
        },
    }


def cmd_stats(cfg: RunConfig, out=sys.stdout) -> int:
    d = stats_payload(cfg.n, cfg.k, cfg.budget)
    if cfg.format == "json":
        out.write(json.dumps(d, indent=2) + "\n")
        return EX_OK
    cols = ("pattern", "goodness", "classes", "psi_prime_ordered", "psi_prime_asym",
            "forms", "sets", "awesome_sets")
    out.write("\t".join(cols) + "\n")
    for r in d["rows"]:
        cells = [_fmt_pattern(r["pattern"]) if c == "pattern" else r[c] for c in cols]
        cells = [f"{x:.3f}" if isinstance(x, float) else str(x) for x in cells]
        if r["gcd_mismatch"]:
            cells[4] += "*"
        out.write("\t".join(cells) + "\n")
    out.write(f"total sets: {d['total_sets']}\n")
    out.write(f"good sets: {d['good_sets']}\n")
    out.write(f"bad sets: {d['bad_sets']}\n")
    out.write(f"awesome sets: {d['awesome_sets']}\n")
    out.write(f"good fraction: {d['good_fraction']:.6f}\n")
    out.write(f"awesome fraction: {d['awesome_fraction']:.6f}\n")
    for p, r in d["cross_ratios"].items():
        out.write(f"cross ratio c{p}/c(phi{p}): {r}\n")
    na = d["non_awesome"]
    asym = "n/a" if na["asym"] is None else f"{na['asym']:.3f}"
    out.write(f"non-awesome good classes: {na['exact']} (asym {asym})\n")
    for c in na["classes"]:
        out.write(f"  good, non-awesome: {c}\n")
    return EX_OK


def cmd_graph(cfg: RunConfig, out=sys.stdout) -> int:
    if cfg.which == "class":
        h = build_class_graph(cfg.n, cfg.k, cfg.filter)
        text = class_graph_to_dot(h) if cfg.format == "dot" else json.dumps(class_graph_to_json(h), indent=2) + "\n"
    else:
        t = build_transition(cfg.n, cfg.k, cfg.filter)
        text = transition_to_dot(t) if cfg.format == "dot" else json.dumps(transition_to_json(t), indent=2) + "\n"
    out.write(text)
    return EX_OK


def cmd_maxpack(cfg: RunConfig, out=sys.stdout) -> int:
    best = exhaustive_max_packing(cfg.n, cfg.k, node_budget=cfg.budget)
    if cfg.format == "json":
        out.write(json.dumps({"n": cfg.n, "k": cfg.k, "best_length": best.best_length,
                              "witness": best.witness, "nodes": best.nodes}) + "\n")
    else:
        out.write(f"best length: {best.best_length} of C({cfg.n},{cfg.k}) = {math.comb(cfg.n, cfg.k)}\n")
        out.write("witness: " + " ".join(map(str, best.witness)) + "\n")
    return EX_OK


COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "stats": cmd_stats,
    "graph": cmd_graph,
    "maxpack": cmd_maxpack,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        ns = build_parser().parse_args(argv)
        cfg = RunConfig(**{k: v for k, v in vars(ns).items()})
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    try:
        return COMMANDS[cfg.command](cfg, out)
    except (ValueError, SymbolOutOfRange, OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except NotEulerian as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EX_NOT_EULERIAN
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EX_BUDGET


if __name__ == "__main__":
    sys.exit(main())
