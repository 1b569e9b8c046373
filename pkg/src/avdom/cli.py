"""Command-line front end.

Exit status: 0 on success, 1 on usage/input errors, 2 when a verification
check fails (a mathematical finding rather than a program fault).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, TextIO

from . import critical, domination, extremal, poly
from .domination import CapExceeded, check_bound
from .graph import Graph, GraphError, parse_edge_list_text, parse_graph6, read_lines
from .parallel import default_workers, ordered_map

COMMANDS = ("avd", "tally", "profile", "verify", "search", "survey", "generate")
LEMMAS = ("sum", "a1n1", "deg2", "kstem", "restricted", "equivalence", "partition", "bound", "theorem", "all")

EXIT_OK, EXIT_ERROR, EXIT_FINDING = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    graph6: str | None = None
    edge_list: str | None = None
    input: str | None = None
    n: int | None = None
    min_degree: int = 0
    connected: bool = False
    no_isolated: bool = False
    format: str = "text"
    workers: int = 1
    oracle_cap: int = domination.ORACLE_CAP
    fast_cap: int = domination.FAST_CAP
    strict: bool = False
    method: str = "fast"
    poly: bool = False
    lemma: str = "all"
    order_upto: int | None = None
    subset: list[int] | None = field(default=None)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in ("json", "csv", "text"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")
        if not 0 <= self.oracle_cap <= 64 or not 0 <= self.fast_cap <= 64:
            raise UsageError("caps must lie in 0..64")


def _frac(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


class Runner:
    def __init__(self, cfg: RunConfig, out: TextIO, err: TextIO):
        self.cfg, self.out, self.err = cfg, out, err
        self.skipped = 0

    # -- input -----------------------------------------------------------

    def graphs(self) -> Iterator[tuple[str, Graph]]:
        """``(label, graph)`` pairs from the configured source; bad lines skipped unless strict."""
        cfg = self.cfg
        if cfg.graph6 is not None:
            g = parse_graph6(cfg.graph6)
            yield g.to_graph6(), g
            return
        if cfg.edge_list is not None:
            text = sys.stdin.read() if cfg.edge_list == "-" else open(cfg.edge_list).read()
            g = parse_edge_list_text(text)
            yield g.to_graph6(), g
            return
        if cfg.input is None:
            raise UsageError("give --graph6, --edge-list or --input")
        empty = True
        for lineno, line in read_lines(cfg.input):
            try:
                g = parse_graph6(line)
            except GraphError as exc:
                if cfg.strict:
                    raise GraphError(f"line {lineno}: {exc}") from None
                print(f"warning: line {lineno}: {exc}; skipped", file=self.err)
                self.skipped += 1
                continue
            empty = False
            yield g.to_graph6(), g
        if empty:
            print("warning: input stream contained no graphs", file=self.err)

    # -- output ----------------------------------------------------------

    def emit(self, header: list[str], records: list[dict], text_lines: list[str], summary: dict):
        fmt = self.cfg.format
        if fmt == "json":
            for r in records:
                self.out.write(json.dumps(r, sort_keys=False) + "\n")
            self.out.write(json.dumps({"summary": summary}) + "\n")
        elif fmt == "csv":
            w = csv.writer(self.out, lineterminator="\n")
            w.writerow(header)
            for r in records:
                w.writerow([_cell(r.get(h)) for h in header])
            w.writerow(["#summary"] + [f"{k}={v}" for k, v in summary.items()])
        else:
            for line in text_lines:
                self.out.write(line + "\n")
            self.out.write("# " + ", ".join(f"{k}={v}" for k, v in summary.items()) + "\n")

    # -- commands --------------------------------------------------------

    def _tally(self, g: Graph) -> list[int]:
        cfg = self.cfg
        if cfg.method == "bruteforce":
            return domination.tally_bruteforce(g, cap=cfg.oracle_cap, workers=cfg.workers)
        return domination.tally_fast(g, cap=cfg.fast_cap)

    def cmd_avd(self) -> int:
        records, text = [], []
        for label, g in self.graphs():
            s = domination.AvdSummary.from_tally(self._tally(g))
            b = check_bound(g, s)
            records.append({"graph6": label, "n": g.n, "gamma": s.gamma, "Gamma": str(s.Gamma),
                            "GammaPrime": str(s.GammaPrime), "avd": _frac(s.avd),
                            "bound": b.verdict.value})
            a = s.avd
            text.append(f"{label}\tavd = {a}  (approx. {float(a):.6f})\tbound: {b.verdict.value}")
        self.emit(["graph6", "n", "gamma", "Gamma", "GammaPrime", "avd", "bound"], records, text,
                  {"records": len(records), "skipped": self.skipped})
        return EXIT_OK

    def cmd_tally(self) -> int:
        records, text = [], []
        for label, g in self.graphs():
            d = self._tally(g)
            s = domination.AvdSummary.from_tally(d)
            rec = {"graph6": label, **s.to_json()}
            line = f"{label}\td = {d}\tavd = {s.avd}"
            if self.cfg.poly:
                rep = poly.analyze_tally(d)
                rec.update({k: v for k, v in rep.to_json().items() if k not in ("graph6", "coeffs")})
                line += f"\tmode = {list(rep.mode)} unimodal = {rep.unimodal} " \
                        f"real_rooted = {rep.real_rooted} darroch = {rep.darroch}"
            records.append(rec)
            text.append(line)
        header = ["graph6", "n", "d", "gamma", "Gamma", "GammaPrime", "avd"]
        if self.cfg.poly:
            header += ["mode", "unimodal", "real_rooted", "darroch"]
        self.emit(header, records, text, {"records": len(records), "skipped": self.skipped})
        return EXIT_OK

    def cmd_profile(self) -> int:
        records, text = [], []
        for label, g in self.graphs():
            if g.n > self.cfg.oracle_cap:
                raise CapExceeded(f"profile enumeration refuses n={g.n} (cap {self.cfg.oracle_cap})")
            if self.cfg.subset is not None:
                sets = [critical.profile(g, sum(1 << v for v in self.cfg.subset))]
            else:
                sets = list(critical.profiles(g))
            for p in sets:
                rec = {"graph6": label, **p.to_json()}
                records.append(rec)
                text.append(f"{label}\t" + "  ".join(f"{k}={v}" for k, v in p.to_json().items()))
        self.emit(["graph6", "S", "a", "a1", "a2", "N1", "N2"], records, text,
                  {"records": len(records), "skipped": self.skipped})
        return EXIT_OK

    def _verify_graphs(self) -> Iterator[tuple[str, Graph]]:
        if self.cfg.order_upto is not None:
            for n in range(1, self.cfg.order_upto + 1):
                for g in extremal.generate_all_nonisomorphic(n):
                    yield g.to_graph6(), g
        else:
            yield from self.graphs()

    def cmd_verify(self) -> int:
        cfg = self.cfg
        lemma = cfg.lemma
        records = []
        if lemma == "theorem":
            if cfg.order_upto is None:
                raise UsageError("verify --lemma theorem needs --order-upto")
            for n in range(2, cfg.order_upto + 1):
                rep = extremal.verify_main_theorem(n, workers=cfg.workers)
                records.append({"check": "main_theorem", "graph6": None, "holds": rep.ok,
                                "lhs": str(len(rep.equality)), "rhs": str(len(rep.star_like)),
                                "witness": {"n": n, "examined": rep.examined, "violations": rep.violations}})
        else:
            which = critical.CHECKS if lemma == "all" else (lemma,)
            lines = []
            for label, g in self._verify_graphs():
                if g.n > cfg.oracle_cap:
                    raise CapExceeded(f"verification refuses n={g.n} (cap {cfg.oracle_cap})")
                if g.n >= 1:
                    lines.append(label)
            results = ordered_map(_verify_one, [(x, which, lemma) for x in lines], workers=cfg.workers)
            records = [r for batch in results for r in batch]
        failed = [r for r in records if r["holds"] is False]
        text = [f"{'FAIL' if r['holds'] is False else 'ok  '}\t{r['check']}\t{r['graph6']}\t"
                f"{r['lhs']} vs {r['rhs']}" for r in failed]
        summary = {"checks": len(records), "failed": len(failed),
                   "not_applicable": sum(r["holds"] is None for r in records), "skipped": self.skipped}
        if cfg.format == "text":
            self.emit([], [], text, summary)
        else:
            self.emit(["check", "graph6", "holds", "lhs", "rhs", "witness"], records, text, summary)
        return EXIT_FINDING if failed else EXIT_OK

    def cmd_search(self) -> int:
        cfg = self.cfg
        if cfg.n is None:
            raise UsageError("search needs --n")
        cons = extremal.SearchConstraint(cfg.n, cfg.min_degree, cfg.connected, cfg.no_isolated)
        if cfg.input is None and cfg.graph6 is None:
            stream = extremal.generate_all_nonisomorphic(cfg.n)
        else:
            stream = [label for label, _ in self.graphs()]
        res = extremal.search(stream, cons, workers=cfg.workers)
        rec = res.to_json(cons)
        if cfg.format == "json":
            self.out.write(json.dumps(rec) + "\n")
        elif cfg.format == "csv":
            w = csv.writer(self.out, lineterminator="\n")
            w.writerow(["graph6", "avd_num", "avd_den"])
            for g6 in res.argmax:
                w.writerow([g6, rec["best_avd"]["num"], rec["best_avd"]["den"]])
            w.writerow(["#summary", f"examined={res.examined}", f"argmax={len(res.argmax)}"])
        else:
            self.out.write(f"best avd = {res.best_avd}  (approx. {float(res.best_avd):.6f})\n")
            for g6 in res.argmax:
                self.out.write(f"argmax\t{g6}\n")
            self.out.write(f"# examined={res.examined}\n")
        return EXIT_OK

    def cmd_survey(self) -> int:
        cfg = self.cfg
        if cfg.n is None:
            raise UsageError("survey needs --n")
        if cfg.input is None and cfg.graph6 is None:
            cons = extremal.SearchConstraint(cfg.n, no_isolated=True)
            stream = [g for g in extremal.generate_all_nonisomorphic(cfg.n) if cons.accepts(g)]
        else:
            stream = [g for _, g in self.graphs()]
        rep = poly.max_mode_survey(stream, cfg.n, workers=cfg.workers)
        if cfg.format == "csv":
            csv.writer(self.out, lineterminator="\n").writerows(rep.csv_rows())
        elif cfg.format == "json":
            self.out.write(json.dumps(rep.to_json()) + "\n")
        else:
            self.out.write(f"n={rep.n} max mode index={rep.max_mode_index} "
                           f"attained by {len(rep.attaining)} graph(s); "
                           f"star-like among them: {rep.star_like_attains}\n")
            for g6 in rep.attaining:
                self.out.write(f"attaining\t{g6}\n")
        return EXIT_OK

    def cmd_generate(self) -> int:
        if self.cfg.n is None:
            raise UsageError("generate needs --n")
        for g in extremal.generate_all_nonisomorphic(self.cfg.n):
            self.out.write(g.to_graph6() + "\n")
        return EXIT_OK


def _cell(v) -> str:
    if isinstance(v, dict) and set(v) == {"num", "den"}:
        return f"{v['num']}/{v['den']}"
    if isinstance(v, list):
        return " ".join(map(str, v))
    if isinstance(v, bool):
        return str(v).lower()
    return "" if v is None else str(v)


def _verify_one(args) -> list[dict]:
    label, which, lemma = args
    g = parse_graph6(label)
    if lemma == "bound":
        b = check_bound(g)
        if b.avd is None:
            return [{"check": "bound", "graph6": label, "holds": None, "lhs": None, "rhs": None,
                     "witness": None}]
        return [{"check": "bound", "graph6": label, "holds": b.ok, "lhs": str(b.avd), "rhs": str(b.bound),
                 "witness": {"verdict": b.verdict.value, "isolated": b.isolated, "star_like": b.star_like}}]
    return [r.to_json() for r in critical.verify_all(g, which)]


def run(cfg: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    runner = Runner(cfg, out, err)
    try:
        return getattr(runner, f"cmd_{cfg.command}")()
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
    except OSError as exc:
        print(f"input error: cannot read {exc.filename or cfg.input}: {exc.strerror or exc}", file=err)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=err)
    except GraphError as exc:
        print(f"parse error: {exc}", file=err)
    except ValueError as exc:
        print(f"error: {exc}", file=err)
    return EXIT_ERROR


class _Parser(argparse.ArgumentParser):
    # argparse's default status 2 is reserved for verification findings
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"usage error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="avdom", description="Exact dominating-set counts and avd(G) tools.")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--graph6", help="a single graph in graph6")
    src.add_argument("--edge-list", help="edge-list file ('n m' then 'u v' lines), or - for stdin")
    src.add_argument("--input", help="graph6 file (one per line, .gz ok), or - for stdin")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: $AVDOM_WORKERS or 1)")
    common.add_argument("--oracle-cap", type=int, default=domination.ORACLE_CAP)
    common.add_argument("--fast-cap", type=int, default=domination.FAST_CAP)
    common.add_argument("--strict", action="store_true", help="abort on the first malformed input line")

    constraint = argparse.ArgumentParser(add_help=False)
    constraint.add_argument("--n", type=int)
    constraint.add_argument("--min-degree", type=int, default=0)
    constraint.add_argument("--connected", action="store_true")
    constraint.add_argument("--no-isolated", action="store_true")

    for name in ("avd", "tally"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--method", choices=("fast", "bruteforce"), default="fast")
        if name == "tally":
            sp.add_argument("--poly", action="store_true", help="add mode/unimodality/real-rootedness")
    sp = sub.add_parser("profile", parents=[common])
    sp.add_argument("--set", dest="subset", help="comma-separated dominating set; default: all of them")
    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("--lemma", choices=LEMMAS, default="all")
    sp.add_argument("--order-upto", type=int, help="check every graph of order 1..N (N <= 7)")
    sub.add_parser("search", parents=[common, constraint])
    sub.add_parser("survey", parents=[common, constraint])
    sub.add_parser("generate", parents=[common, constraint])
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    kw = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__}
    if kw.get("workers") is None:
        kw["workers"] = default_workers()
    if isinstance(kw.get("subset"), str):
        try:
            kw["subset"] = [int(x) for x in kw["subset"].split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"--set expects comma-separated vertex numbers, got {ns.subset!r}") from None
    return RunConfig(**kw)


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except (UsageError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
