"""Command line front end: ``majd {enumerate,stat,dist,verify,trace}``.

Exit codes: 0 success / all suites pass, 1 a suite found a counterexample,
2 usage, parse or bounds error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from math import factorial
from typing import Any

from . import paths, perm, stats, verify
from .paths import SwapMode
from .stats import Reading
from .tableau import SINGLE_MAX_N, SWEEP_MAX_N, BoundsError, Partition, StandardTableau, count_syt, enumerate_syt, is_standard

PERM_STATS = ("inv", "maj", "majd")
TABLEAU_STATS = ("inv_hs", "maj_tab", "majd_tab", "naive")
D_STATS = ("majd", "majd_tab", "naive")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    shape: Partition | None = None
    n: int | None = None
    stat: str | None = None
    d: int | None = None
    reading: Reading = stats.DEFAULT_READING
    swap_mode: SwapMode = SwapMode.FIXED
    fmt: str = "plain"
    jobs: int = 1
    out: str | None = None
    no_cache: bool = False
    max_n: int | None = None
    count_only: bool = False
    suites: list[str] = field(default_factory=list)
    reduce_with: str = "phi"
    obj: str | None = None

    def validate(self) -> None:
        if self.shape is not None and self.n is not None:
            raise UsageError("--shape and --n are mutually exclusive")
        if self.stat in D_STATS and self.d is None:
            raise UsageError(f"statistic {self.stat} requires --d")
        if self.d is not None and self.d < 1:
            raise UsageError("--d must be positive")

    def echo(self) -> dict:
        rec = {k: v for k, v in asdict(self).items() if v not in (None, [], False)}
        if self.shape is not None:
            rec["shape"] = list(self.shape.parts)
        rec["reading"] = self.reading.value
        rec["swap_mode"] = self.swap_mode.value
        if self.command != "verify":
            rec.pop("reduce_with", None)
        return rec


@dataclass
class Report:
    command: dict
    results: list[dict] = field(default_factory=list)
    distributions: list[dict] = field(default_factory=list)
    verdicts: list[dict] = field(default_factory=list)
    seconds: float = 0.0
    text: list[str] = field(default_factory=list)
    rows: list[list[Any]] = field(default_factory=list)
    header: list[str] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(v["verdict"] != "pass" for v in self.verdicts)

    def to_record(self) -> dict:
        rec: dict[str, Any] = {"command": self.command}
        for key in ("results", "distributions", "verdicts"):
            if getattr(self, key):
                rec[key] = getattr(self, key)
        rec["seconds"] = round(self.seconds, 3)
        return rec

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_record(), indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)
            return buf.getvalue()
        return "".join(line + "\n" for line in self.text)


# ---------------------------------------------------------------- commands


def _parse_tableau(text: str, max_n: int) -> StandardTableau:
    try:
        t = StandardTableau.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not is_standard(t):
        raise UsageError(f"not a standard Young tableau: {text}")
    if t.n > max_n:
        raise BoundsError(f"tableau of size {t.n} exceeds bound {max_n}")
    return t


def cmd_enumerate(cfg: RunConfig) -> Report:
    rep = Report(cfg.echo())
    bound = cfg.max_n or SWEEP_MAX_N
    if cfg.shape is not None:
        if cfg.count_only:
            count = count_syt(cfg.shape)
            items = None
        else:
            items = [str(t) for t in enumerate_syt(cfg.shape, max_n=bound)]
            count = len(items)
        family = f"SYT({cfg.shape})"
    elif cfg.n is not None:
        if cfg.n > bound:
            raise BoundsError(f"S_{cfg.n} exceeds enumeration bound {bound}")
        count = factorial(cfg.n)
        items = None if cfg.count_only else [perm.format_permutation(p) for p in perm.all_permutations(cfg.n)]
        family = f"S_{cfg.n}"
    else:
        raise UsageError("enumerate needs --shape or --n")
    rep.results.append({"family": family, "count": count, **({"items": items} if items is not None else {})})
    if items is None:
        rep.text = [str(count)]
        rep.header, rep.rows = ["family", "count"], [[family, count]]
    else:
        rep.text = items
        rep.header, rep.rows = ["index", "item"], [[i, item] for i, item in enumerate(items)]
    return rep


def cmd_stat(cfg: RunConfig) -> Report:
    rep = Report(cfg.echo())
    if cfg.stat is None or cfg.obj is None:
        raise UsageError("stat needs --stat and an object")
    result: dict[str, Any] = {"stat": cfg.stat, "object": cfg.obj}
    if cfg.stat in PERM_STATS:
        try:
            p = perm.parse_permutation(cfg.obj)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        result["value"] = perm.PERM_STATS[cfg.stat](p, cfg.d)
        if cfg.stat == "inv":
            result["pairs"] = sorted(perm.inversion_set(p))
    elif cfg.stat in TABLEAU_STATS:
        t = _parse_tableau(cfg.obj, cfg.max_n or SINGLE_MAX_N)
        pairs = None
        if cfg.stat == "inv_hs":
            pairs = stats.hs_inversion_set(t)
            result["value"] = len(pairs)
        elif cfg.stat == "maj_tab":
            result["value"] = stats.maj_tab(t)
        elif cfg.stat == "majd_tab":
            result["value"] = stats.maj_d_transform(t, cfg.d)
            weighted, pairs = stats.maj_d_weighted(t, cfg.d, cfg.reading)
            result["weighted_value"] = weighted
            result["reading"] = cfg.reading.value
        else:
            pairs = stats.naive_pairs(t, cfg.d)
            result["value"] = sum(p.weight for p in pairs)
        if pairs is not None:
            result["pairs"] = [list(p.as_tuple()) for p in stats.sorted_pairs(pairs)]
    else:
        raise UsageError(f"unknown statistic {cfg.stat!r}")
    rep.results.append(result)
    rep.text = [str(result["value"])]
    if "pairs" in result:
        rep.text.append("pairs: " + " ".join(f"({','.join(map(str, p))})" for p in result["pairs"]))
    rep.header, rep.rows = ["stat", "object", "value"], [[cfg.stat, cfg.obj, result["value"]]]
    return rep


def cmd_dist(cfg: RunConfig) -> Report:
    rep = Report(cfg.echo())
    if cfg.stat is None:
        raise UsageError("dist needs --stat")
    cache = None if cfg.no_cache else verify.DistCache()
    if cfg.shape is not None:
        if cfg.stat not in TABLEAU_STATS:
            raise UsageError(f"{cfg.stat} is not a tableau statistic")
        poly = verify.distribution(cfg.stat, shape=cfg.shape, d=cfg.d, cache=cache, max_n=cfg.max_n)
        family = f"SYT({cfg.shape})"
    elif cfg.n is not None:
        if cfg.stat not in PERM_STATS:
            raise UsageError(f"{cfg.stat} is not a permutation statistic")
        poly = verify.distribution(cfg.stat, n=cfg.n, d=cfg.d, cache=cache, max_n=cfg.max_n)
        family = f"S_{cfg.n}"
    else:
        raise UsageError("dist needs --shape or --n")
    rep.distributions.append({"family": family, "stat": cfg.stat, "d": cfg.d, **poly.to_record()})
    rep.text = [" ".join(map(str, poly.coeffs))]
    rep.header, rep.rows = ["exponent", "coeff"], [[m, c] for m, c in enumerate(poly.coeffs)]
    return rep


def cmd_verify(cfg: RunConfig) -> Report:
    rep = Report(cfg.echo())
    names = cfg.suites or list(verify.SUITES)
    unknown = [s for s in names if s not in verify.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {verify.SUITES}")
    params: dict[str, Any] = {"reading": cfg.reading, "swap_mode": cfg.swap_mode, "reduce_with": cfg.reduce_with}
    for name in names:
        p = dict(params)
        if name == "perm-equidist" and not cfg.no_cache:
            p["cache"] = verify.DistCache()
        if name not in ("weighted-vs-transform",):
            p.pop("reading")
        if name != "swapchain-equivalence":
            p.pop("swap_mode")
        if name != "recursion":
            p.pop("reduce_with")
        if cfg.max_n is not None and cfg.max_n > 9:
            raise BoundsError(f"--max-n {cfg.max_n} exceeds sweep bound 9")
        res = verify.run_suite(name, cfg.max_n, cfg.jobs, **p)
        rec = res.to_record()
        rep.verdicts.append(rec)
        line = f"{'PASS' if res.passed else 'FAIL'} {name} checked={res.checked} failures={res.failures}"
        if name == "weighted-vs-transform":
            line += f" reading={res.details['reading']} winners={','.join(res.details['winning_readings']) or 'none'}"
        rep.text.append(line)
        for ce in res.counterexamples[:3]:
            rep.text.append("  counterexample: " + json.dumps(ce, sort_keys=True))
        rep.rows.append([name, rec["verdict"], res.checked, res.failures])
    rep.header = ["suite", "verdict", "checked", "failures"]
    return rep


def cmd_trace(cfg: RunConfig) -> Report:
    rep = Report(cfg.echo())
    if cfg.obj is None or cfg.d is None:
        raise UsageError("trace needs --d and a tableau")
    t = _parse_tableau(cfg.obj, cfg.max_n or SINGLE_MAX_N)
    trace = paths.psi_pipeline(t, cfg.d)
    weighted, pairs = stats.maj_d_weighted(t, cfg.d, cfg.reading)
    n = t.n
    provenance = {}
    for stage in trace.stages:
        if stage.k >= 2:
            provenance[t[stage.before.cell_of(stage.k)]] = stage.k
    transform = stats.maj_tab(trace.final)
    stages = [s.to_record() for s in trace.stages]
    pair_records = [{"low": p.low, "high": p.high, "weight": p.weight, "k": provenance[p.high]}
                    for p in stats.sorted_pairs(pairs)]
    rep.results.append({
        "tableau": str(t), "d": cfg.d, "stages": stages, "final": str(trace.final),
        "weighted_pairs": pair_records, "maj_d_transform": transform, "maj_d_weighted": weighted,
        "reading": cfg.reading.value,
    })
    lines = [f"T_0 = {t}   d = {cfg.d}"]
    for i, s in enumerate(trace.stages):
        blk = " ".join("{" + ",".join(map(str, b)) + "}" for b in (s.blocks.blocks if s.blocks else ()))
        lines.append(
            f"k={s.k}: path {s.path.step_string or '-'} from {s.path.start} heights {list(s.path.heights)}"
            f" blocks {blk or '-'} -> T_{i + 1} = {s.after}"
        )
    lines.append("pairs: " + " ".join(f"({p['low']},{p['high']})w{p['weight']}@k{p['k']}" for p in pair_records))
    lines.append(f"maj_{cfg.d} transform={transform} weighted={weighted}")
    rep.text = lines
    rep.header = ["k", "tableau", "steps", "heights", "blocks", "result"]
    rep.rows = [[s["k"], s["tableau"], s["path"]["steps"], " ".join(map(str, s["path"]["heights"])),
                 " ".join("-".join(map(str, b)) for b in s["blocks"]), s["result"]] for s in stages]
    rep.rows.append(["final", str(trace.final), "", "", f"transform={transform}", f"weighted={weighted}"])
    return rep


COMMANDS = {
    "enumerate": cmd_enumerate,
    "stat": cmd_stat,
    "dist": cmd_dist,
    "verify": cmd_verify,
    "trace": cmd_trace,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--shape", help="partition, e.g. 3,3,3")
    common.add_argument("--n", type=int, help="permutation size")
    common.add_argument("--stat", choices=PERM_STATS + TABLEAU_STATS)
    common.add_argument("--d", type=int)
    common.add_argument("--reading", choices=[r.value for r in Reading], default=stats.DEFAULT_READING.value,
                        help="weight-1 range for the weighted maj_d formula")
    common.add_argument("--swap-mode", choices=[m.value for m in SwapMode], default=SwapMode.FIXED.value)
    common.add_argument("--format", dest="fmt", choices=["plain", "json", "csv"], default="plain")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--max-n", type=int)

    parser = argparse.ArgumentParser(prog="majd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("enumerate", parents=[common], help="list or count SYT(shape) or S_n")
    p.add_argument("--count", dest="count_only", action="store_true")
    p = sub.add_parser("stat", parents=[common], help="one statistic on one object")
    p.add_argument("obj", metavar="OBJECT", help='tableau "1,2,5/3,6,7/4,8,9" or permutation "3142"')
    sub.add_parser("dist", parents=[common], help="distribution polynomial of a statistic")
    p = sub.add_parser("verify", parents=[common], help="exhaustive verification suites")
    p.add_argument("suites", nargs="*", metavar="SUITE", help=f"any of: {', '.join(verify.SUITES)}")
    p.add_argument("--reduce-with", choices=["phi", "psi"], default="phi",
                   help="operator removing n in the recursion suite")
    p = sub.add_parser("trace", parents=[common], help="the full Psi^(d) pipeline for one tableau")
    p.add_argument("obj", metavar="TABLEAU")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    try:
        shape = Partition.parse(args.shape) if args.shape is not None else None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cfg = RunConfig(
        command=args.command,
        shape=shape,
        n=args.n,
        stat=args.stat,
        d=args.d,
        reading=Reading(args.reading),
        swap_mode=SwapMode(args.swap_mode),
        fmt=args.fmt,
        jobs=max(args.jobs, 1),
        out=args.out,
        no_cache=args.no_cache,
        max_n=args.max_n,
        count_only=getattr(args, "count_only", False),
        suites=getattr(args, "suites", []) or [],
        reduce_with=getattr(args, "reduce_with", "phi"),
        obj=getattr(args, "obj", None),
    )
    cfg.validate()
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        cfg = config_from_args(args)
        report = COMMANDS[cfg.command](cfg)
    except (UsageError, BoundsError, ValueError) as exc:
        print(f"majd: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.seconds = time.perf_counter() - start
    text = report.render(cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_FAIL if report.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
