"""Command-line front end.

Input is an edge list (one edge per line, two whitespace-separated vertex
names, ``#`` starts a comment) or a DIMACS graph (``p edge N M`` followed by
``e u v`` lines).  Results go to stdout as text, or as JSON with ``--json``.

Exit status: 0 success, 1 error, 2 graph not chordal where chordality is
required, 3 methods disagree.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from . import betti as betti_mod
from .chordal import PivotRule, elimination_ordering, unmixed_certificate
from .covers import (
    independence_complex,
    induced_matching_number,
    minimal_covers_bruteforce,
    minimal_covers_recursive,
)
from .families import random_chordal_graph
from .graph import MAX_VERTICES, Graph, bits
from .linquo import (
    fvt_ordering,
    shelling_from_ordering,
    verify_linear_quotients,
    verify_shelling,
    vv_ordering,
)
from .oracle import exhaustive_shelling_search, hochster_betti

EXIT_OK, EXIT_ERROR, EXIT_NOT_CHORDAL, EXIT_MISMATCH = 0, 1, 2, 3


class GraphParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _strip_comment(line: str, marker: str) -> str:
    return line.split(marker, 1)[0].strip()


def _parse_edge_list(text: str) -> Graph:
    index: dict[str, int] = {}
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw, "#")
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected two vertex names, got {len(tokens)}", lineno)
        a, b = tokens
        if a == b:
            raise GraphParseError(f"self-loop at vertex {a!r}", lineno)
        for x in (a, b):
            if x not in index:
                if len(index) == MAX_VERTICES:
                    raise GraphParseError(f"more than {MAX_VERTICES} vertices", lineno)
                index[x] = len(index)
        u, v = index[a], index[b]
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(len(index), sorted(edges), list(index))


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise GraphParseError("second problem line", lineno)
            if len(tokens) != 4 or not tokens[2].isdigit():
                raise GraphParseError("expected 'p edge <vertices> <edges>'", lineno)
            n = int(tokens[2])
            if n > MAX_VERTICES:
                raise GraphParseError(f"more than {MAX_VERTICES} vertices", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise GraphParseError("edge before problem line", lineno)
            if len(tokens) != 3 or not (tokens[1].isdigit() and tokens[2].isdigit()):
                raise GraphParseError("expected 'e <u> <v>'", lineno)
            u, v = int(tokens[1]) - 1, int(tokens[2]) - 1
            if not (0 <= u < n and 0 <= v < n):
                raise GraphParseError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u + 1}", lineno)
            edges.add((min(u, v), max(u, v)))
        else:
            raise GraphParseError(f"unknown DIMACS line type {tokens[0]!r}", lineno)
    if n is None:
        raise GraphParseError("missing problem line")
    return Graph.from_edges(n, sorted(edges), [str(i + 1) for i in range(n)])


def _looks_like_dimacs(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith(("c ", "#")) and line != "c":
            return line.startswith("p ")
    return False


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse an edge list or DIMACS text; ``fmt`` is ``auto``, ``edges`` or ``dimacs``."""
    if fmt == "auto":
        fmt = "dimacs" if _looks_like_dimacs(text) else "edges"
    if fmt == "dimacs":
        return _parse_dimacs(text)
    if fmt == "edges":
        return _parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


@dataclass
class RunReport:
    n: int
    labels: list[str]
    digest: str
    chordal: bool
    fields: dict[str, Any] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    def as_dict(self, with_timings: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "n": self.n,
            "labels": self.labels,
            "digest": self.digest,
            "chordal": self.chordal,
        }
        out.update(self.fields)
        if with_timings:
            out["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return out


def _sets(g: Graph, masks) -> list[list[str]]:
    return [[g.label(v) for v in bits(m)] for m in masks]


def _betti_rows(table: betti_mod.BettiTable) -> list[dict[str, int]]:
    return [{"i": i, "j": j, "v": v} for i, j, v in table.rows()]


def _parse_pivot(g: Graph, spec: str, then: str) -> PivotRule:
    if spec in ("min", "max"):
        return PivotRule(spec)
    try:
        order = [g.index(tok.strip()) for tok in spec.split(",") if tok.strip()]
    except KeyError as exc:
        raise ValueError(f"pivot list names unknown vertex {exc.args[0]!r}") from None
    return PivotRule(order, then=then)


class _Timer:
    def __init__(self, report: RunReport):
        self.report = report

    def __call__(self, name: str, fn, *args, **kwargs):
        start = time.perf_counter()
        try:
            return fn(*args, **kwargs)
        finally:
            self.report.timings[name] = time.perf_counter() - start


def _not_chordal_fields(g: Graph, verdict) -> dict[str, Any]:
    return {
        "witness": {
            "vertex": g.label(verdict.vertex),
            "non_adjacent_pair": [g.label(v) for v in verdict.pair],
        }
    }


def _ordering(g: Graph, args) -> Any:
    rule = _parse_pivot(g, args.pivot, args.then)
    if args.method == "vv":
        return vv_ordering(g, rule)
    return fvt_ordering(g, rule, sub=args.sub)


def _cmd_check(g, args, report, timed):
    verdict = timed("check", elimination_ordering, g)
    if verdict.chordal:
        report.fields["elimination_ordering"] = [g.label(v) for v in verdict.order]
    else:
        report.fields.update(_not_chordal_fields(g, verdict))
    return EXIT_OK


def _cmd_covers(g, args, report, timed):
    if report.chordal:
        family = timed("covers", minimal_covers_recursive, g)
    else:
        family = timed("covers", minimal_covers_bruteforce, g)
    report.fields["covers"] = _sets(g, family.covers)
    report.fields["covers_count"] = len(family)
    return EXIT_OK


def _cmd_ordering(g, args, report, timed):
    o = timed("ordering", _ordering, g, args)
    report.fields["ordering"] = {
        "method": o.method,
        "gens": _sets(g, o.gens),
        "colon_counts": list(o.colon_counts),
    }
    return EXIT_OK


def _cmd_shelling(g, args, report, timed):
    o = timed("ordering", _ordering, g, args)
    shelling = shelling_from_ordering(o, g.n)
    report.fields["ordering"] = {"method": o.method, "gens": _sets(g, o.gens)}
    report.fields["shelling"] = _sets(g, shelling.facets)
    if args.verify:
        verdict = timed("verify", verify_shelling, shelling)
        report.fields["shelling_verified"] = verdict.ok
        if not verdict.ok:
            report.fields["shelling_witness"] = list(verdict.witness)
            return EXIT_MISMATCH
    return EXIT_OK


def _cmd_betti(g, args, report, timed):
    methods = list(betti_mod.METHODS) if args.method == "all" else [args.method]
    rule = _parse_pivot(g, args.pivot, args.then)
    tables = {m: timed(f"betti:{m}", betti_mod.betti_table, g, m, rule) for m in methods}
    first = tables[methods[0]]
    report.fields["betti"] = _betti_rows(first)
    report.fields["betti_totals"] = {str(i): v for i, v in first.totals().items()}
    if len(methods) > 1:
        report.fields["betti_methods"] = {m: _betti_rows(t) for m, t in tables.items()}
        agree = all(t == first for t in tables.values())
        report.fields["cross_check"] = "pass" if agree else "fail"
        if not agree:
            return EXIT_MISMATCH
    return EXIT_OK


def _cmd_invariants(g, args, report, timed):
    inv = timed("invariants", betti_mod.invariants, g)
    report.fields["invariants"] = {
        "pd": inv.pd,
        "im": inv.im,
        "reg_edge_ideal": inv.reg_edge_ideal,
        "b0": inv.b0,
    }
    return EXIT_OK


def _cmd_unmixed(g, args, report, timed):
    cert = timed("unmixed", unmixed_certificate, g)
    report.fields["unmixed"] = cert.is_unmixed
    report.fields["free_facets"] = _sets(g, cert.free_facets)
    closed = betti_mod.unmixed_1dim_betti(g)
    if isinstance(closed, betti_mod.UnmixedBetti):
        report.fields["closed_form"] = {"b0": closed.b0, "b1": closed.b1, "b2": closed.b2}
    else:
        report.fields["closed_form"] = {"not_applicable": closed.reason}
    return EXIT_OK


COMMANDS = {
    "check": (_cmd_check, False),
    "covers": (_cmd_covers, False),
    "ordering": (_cmd_ordering, True),
    "shelling": (_cmd_shelling, True),
    "betti": (_cmd_betti, True),
    "invariants": (_cmd_invariants, True),
    "unmixed": (_cmd_unmixed, True),
}


def _print_text(report: RunReport, command: str, with_timings: bool, out) -> None:
    d = report.as_dict(with_timings)
    print(f"graph: {d['n']} vertices, chordal: {'yes' if d['chordal'] else 'no'}", file=out)
    if "witness" in d:
        w = d["witness"]
        pair = " ".join(w["non_adjacent_pair"])
        print(f"  witness: later neighbours {pair} of {w['vertex']} are not adjacent", file=out)
    if "elimination_ordering" in d:
        print("elimination ordering: " + " ".join(d["elimination_ordering"]), file=out)
    if "covers" in d:
        print(f"minimal vertex covers ({d['covers_count']}):", file=out)
        print("  " + ", ".join(_word(c) for c in d["covers"]), file=out)
    if "ordering" in d:
        o = d["ordering"]
        print(f"ordering ({o['method']}): " + ", ".join(_word(c) for c in o["gens"]), file=out)
        if "colon_counts" in o:
            print("colon counts: " + " ".join(map(str, o["colon_counts"])), file=out)
    if "shelling" in d:
        print("shelling: " + ", ".join(_word(c) for c in d["shelling"]), file=out)
        if "shelling_verified" in d:
            print(f"verified: {'yes' if d['shelling_verified'] else 'no'}", file=out)
    if "betti" in d:
        table = betti_mod.BettiTable({(r["i"], r["j"]): r["v"] for r in d["betti"]})
        print(table.format(), file=out)
        if "cross_check" in d:
            print(f"cross-check ({', '.join(d['betti_methods'])}): {d['cross_check']}", file=out)
    if "invariants" in d:
        inv = d["invariants"]
        print(
            f"pd(J) = {inv['pd']}, im = {inv['im']}, reg(I) = {inv['reg_edge_ideal']}, "
            f"b0 = {inv['b0']}",
            file=out,
        )
    if "unmixed" in d:
        print(f"unmixed: {'yes' if d['unmixed'] else 'no'}", file=out)
        print("free facets: " + ", ".join(_word(c) for c in d["free_facets"]), file=out)
        cf = d["closed_form"]
        if "b1" in cf:
            print(f"closed form: b1 = {cf['b1']}, b2 = {cf['b2']}", file=out)
        else:
            print(f"closed form not applicable: {cf['not_applicable']}", file=out)
    if with_timings:
        for k, v in d["timings"].items():
            print(f"time {k}: {v:.4f}s", file=out)


def _word(labels: list[str]) -> str:
    if all(len(x) == 1 for x in labels):
        return "".join(labels) or "{}"
    return "{" + " ".join(labels) + "}"


def run_graph_command(command: str, g: Graph, args, digest: str) -> tuple[RunReport, int]:
    handler, needs_chordal = COMMANDS[command]
    verdict = elimination_ordering(g)
    report = RunReport(g.n, [g.label(v) for v in range(g.n)], digest, verdict.chordal)
    if needs_chordal and not verdict.chordal:
        report.fields.update(_not_chordal_fields(g, verdict))
        return report, EXIT_NOT_CHORDAL
    code = handler(g, args, report, _Timer(report))
    return report, code


def selftest(max_n: int, cases: int, seed: int) -> dict[str, Any]:
    """Cross-check every method on random connected chordal graphs."""
    rng = random.Random(seed)
    failures = []
    for case in range(cases):
        g = random_chordal_graph(rng.randint(2, max_n), rng)
        problems = []
        rec = minimal_covers_recursive(g)
        if rec.as_set() != minimal_covers_bruteforce(g).as_set():
            problems.append("covers")
        for method in ("vv", "fvt"):
            o = vv_ordering(g) if method == "vv" else fvt_ordering(g)
            if not verify_linear_quotients(o.gens) or sorted(o.gens) != sorted(rec.covers):
                problems.append(f"ordering:{method}")
        tables = {m: betti_mod.betti_table(g, m) for m in betti_mod.METHODS if m != "oracle"}
        if g.n <= 12:
            tables["oracle"] = hochster_betti(rec.covers, g.n)
        first = next(iter(tables.values()))
        if any(t != first for t in tables.values()):
            problems.append("betti")
        if first.pd != induced_matching_number(g):
            problems.append("pd=im")
        if len(rec) <= 9 and exhaustive_shelling_search(independence_complex(g)) is None:
            problems.append("shellable")
        if problems:
            failures.append({"case": case, "edges": g.edges(), "problems": problems})
    return {"seed": seed, "cases": cases, "max_n": max_n, "failures": failures,
            "status": "pass" if not failures else "fail"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverideal",
        description="Cover ideals of chordal graphs: covers, linear quotients, Betti numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin")
    common.add_argument("--format", choices=["auto", "edges", "dimacs"], default="auto")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--timings", action="store_true", help="report wall-clock timings")

    pivot = argparse.ArgumentParser(add_help=False)
    pivot.add_argument(
        "--pivot", default="min",
        help="min, max, or a comma list 'x1,x2,...' fixing the root pivot and neighbour order",
    )
    pivot.add_argument("--then", choices=["min", "max"], default="min",
                       help="rule below the root when --pivot is a list")

    ordering = argparse.ArgumentParser(add_help=False, parents=[pivot])
    ordering.add_argument("--method", choices=["vv", "fvt"], default="fvt")
    ordering.add_argument("--sub", choices=["fvt", "vv"], default="fvt",
                          help="how fvt builds its two sub-orderings")

    sub.add_parser("check", parents=[common], help="chordality verdict")
    sub.add_parser("covers", parents=[common], help="minimal vertex covers")
    sub.add_parser("ordering", parents=[common, ordering], help="linear quotients ordering")
    sh = sub.add_parser("shelling", parents=[common, ordering], help="shelling of ind(G)")
    sh.add_argument("--verify", action="store_true")
    bt = sub.add_parser("betti", parents=[common, pivot], help="graded Betti table of J(G)")
    bt.add_argument("--method", choices=[*betti_mod.METHODS, "all"], default="recursive")
    sub.add_parser("invariants", parents=[common], help="pd, im, reg")
    sub.add_parser("unmixed", parents=[common], help="unmixedness and closed forms")

    st = sub.add_parser("selftest", help="random cross-checks")
    st.add_argument("--n", type=int, default=9, help="maximum vertex count")
    st.add_argument("--cases", type=int, default=100)
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--json", action="store_true")
    return parser


def main(argv: list[str] | None = None, stdout=None, stdin=None) -> int:
    out = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "selftest":
            result = selftest(args.n, args.cases, args.seed)
            if args.json:
                print(json.dumps(result, indent=2), file=out)
            else:
                print(f"selftest: {result['cases']} cases, n <= {result['max_n']}, "
                      f"seed {result['seed']}: {result['status']}", file=out)
                for f in result["failures"]:
                    print(f"  case {f['case']}: {', '.join(f['problems'])}", file=out)
            return EXIT_OK if result["status"] == "pass" else EXIT_MISMATCH

        if args.input == "-":
            text = (stdin or sys.stdin).read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        g = parse_graph(text, args.format)
        digest = hashlib.sha256(text.encode()).hexdigest()
        report, code = run_graph_command(args.command, g, args, digest)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except betti_mod.InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if args.json:
        print(json.dumps(report.as_dict(args.timings), indent=2), file=out)
    else:
        _print_text(report, args.command, args.timings, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
