"""Exhaustive verification sweeps.

Each suite walks every object in its declared range and returns a
:class:`SuiteResult`.  Tableau sweeps fan out per shape over a process pool
when ``jobs > 1``; results are merged in submission order, so reports do not
depend on the worker count.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from pathlib import Path
from typing import Any, Callable, Iterable

from . import paths, perm, stats
from .dist import DistPolynomial
from .paths import SwapMode
from .stats import Reading
from .tableau import Partition, StandardTableau, count_syt, delete_max, enumerate_syt, is_standard, partitions

__all__ = [
    "SuiteResult",
    "SUITES",
    "DEFAULT_DIST_MAX_N",
    "DEFAULT_POINTWISE_MAX_N",
    "run_suite",
    "distribution",
    "DistCache",
    "code_version",
    "find_tableaux_with_pairs",
    "REFERENCE_MAJ4_PAIRS",
    "WORKED_TABLEAU",
]

DEFAULT_DIST_MAX_N = 8
DEFAULT_POINTWISE_MAX_N = 7
MAX_COUNTEREXAMPLES = 20

WORKED_TABLEAU = "1,2,5/3,6,7/4,8,9"

# reference weighted pairs of maj_4 on one (3,3,3) tableau
REFERENCE_MAJ4_PAIRS = frozenset(
    stats.WeightedPair(lo, hi, w)
    for lo, hi, w in [
        (5, 9, 5), (7, 9, 1), (4, 7, 4), (2, 8, 2), (4, 8, 1), (5, 8, 1), (7, 8, 1), (2, 5, 1),
        (4, 5, 1), (1, 6, 1), (2, 6, 1), (3, 6, 1), (4, 6, 1), (5, 6, 1), (1, 3, 1), (2, 3, 1),
    ]
)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    failures: int = 0
    details: dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def fail(self, payload: dict) -> None:
        self.failures += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(payload)

    def merge(self, other: "SuiteResult") -> None:
        self.checked += other.checked
        self.failures += other.failures
        room = MAX_COUNTEREXAMPLES - len(self.counterexamples)
        self.counterexamples.extend(other.counterexamples[:max(room, 0)])

    def to_record(self) -> dict:
        return {
            "suite": self.name,
            "verdict": "pass" if self.passed else "fail",
            "checked": self.checked,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
            "details": self.details,
            "seconds": round(self.seconds, 3),
        }


def _tableau_payload(t: StandardTableau, **extra) -> dict:
    payload = {"shape": list(t.shape.parts), "tableau": str(t)}
    payload.update(extra)
    d = extra.get("d")
    payload["replay"] = f"majd trace --d {d} {t}" if d is not None else f"majd stat --stat inv_hs {t}"
    return payload


# ---------------------------------------------------------------- distributions


def code_version() -> str:
    h = hashlib.sha256()
    for path in sorted(Path(__file__).parent.glob("*.py")):
        h.update(path.read_bytes())
    return h.hexdigest()[:16]


class DistCache:
    """Write-once JSON files keyed by (family, statistic, d, code version)."""

    def __init__(self, root: str | os.PathLike | None = None):
        if root is None:
            root = os.environ.get("MAJD_CACHE_DIR", Path.home() / ".cache" / "majd")
        self.root = Path(root)

    def _path(self, key: str) -> Path:
        digest = hashlib.sha256(f"{key}|{code_version()}".encode()).hexdigest()[:24]
        return self.root / f"{digest}.json"

    def get(self, key: str) -> DistPolynomial | None:
        path = self._path(key)
        if not path.exists():
            return None
        try:
            return DistPolynomial.from_record(json.loads(path.read_text()))
        except (OSError, ValueError, KeyError):
            return None

    def put(self, key: str, poly: DistPolynomial) -> None:
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".{os.getpid()}.tmp")
        tmp.write_text(json.dumps({"key": key, **poly.to_record()}))
        os.replace(tmp, path)


TABLEAU_STATS: dict[str, Callable[[StandardTableau, int | None], int]] = {
    "maj_tab": lambda t, d: stats.maj_tab(t),
    "inv_hs": lambda t, d: stats.inv_hs(t),
    "majd_tab": lambda t, d: stats.maj_d_transform(t, d),
    "naive": lambda t, d: stats.naive_weighted(t, d),
}


def distribution(
    stat: str,
    *,
    shape: Partition | None = None,
    n: int | None = None,
    d: int | None = None,
    cache: DistCache | None = None,
    max_n: int | None = None,
) -> DistPolynomial:
    """Distribution of a statistic over SYT(shape) or S_n."""
    if (shape is None) == (n is None):
        raise ValueError("give exactly one of shape or n")
    key = f"{stat}|{'shape=' + str(shape) if shape is not None else 'n=' + str(n)}|d={d}"
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    if shape is not None:
        if stat not in TABLEAU_STATS:
            raise ValueError(f"unknown tableau statistic {stat!r}")
        if stat in ("majd_tab", "naive") and d is None:
            raise ValueError(f"statistic {stat} requires d")
        kw = {} if max_n is None else {"max_n": max_n}
        poly = DistPolynomial.from_values(TABLEAU_STATS[stat](t, d) for t in enumerate_syt(shape, **kw))
    else:
        kw = {} if max_n is None else {"max_n": max_n}
        poly = perm.perm_distribution(n, stat, d, **kw)
    if cache is not None:
        cache.put(key, poly)
    return poly


# ---------------------------------------------------------------- per-shape workers


def _shapes(lo: int, hi: int) -> list[Partition]:
    return [shape for n in range(lo, hi + 1) for shape in partitions(n)]


def _shape_tab_equidist(shape: Partition, params: dict) -> SuiteResult:
    res = SuiteResult("tab-equidist")
    tabs = enumerate_syt(shape)
    base = DistPolynomial.from_values(stats.maj_tab(t) for t in tabs)
    n = shape.size
    for d in range(1, n + 1):
        poly = DistPolynomial.from_values(stats.maj_d_transform(t, d) for t in tabs)
        res.checked += 1
        if poly != base:
            res.fail({"shape": list(shape.parts), "d": d, "maj_tab": list(base.coeffs), "majd_tab": list(poly.coeffs)})
    return res


def _shape_maj_eq_inv(shape: Partition, params: dict) -> SuiteResult:
    res = SuiteResult("maj-eq-inv")
    n = shape.size
    for t in enumerate_syt(shape):
        target = stats.inv_hs(t)
        for d in range(max(n - 1, 1), n + 2):
            res.checked += 1
            got = stats.maj_d_transform(t, d)
            if got != target:
                res.fail(_tableau_payload(t, d=d, majd=got, inv_hs=target))
    return res


def _shape_weighted(shape: Partition, params: dict) -> SuiteResult:
    reading = Reading(params["reading"])
    res = SuiteResult("weighted-vs-transform")
    n = shape.size
    for t in enumerate_syt(shape):
        for d in range(1, n + 1):
            res.checked += 1
            want = stats.maj_d_transform(t, d)
            got, _ = stats.maj_d_weighted(t, d, reading)
            if got != want:
                res.fail(_tableau_payload(t, d=d, reading=reading.value, weighted=got, transform=want))
    return res


def _shape_recursion(shape: Partition, params: dict) -> SuiteResult:
    reduce_with = params.get("reduce_with", "phi")
    res = SuiteResult("recursion")
    n = shape.size
    for t in enumerate_syt(shape):
        for d in range(1, n + 1):
            res.checked += 1
            if not stats.recursion_check(t, d, reduce_with=reduce_with):
                smaller = delete_max(paths.phi_k_d(t, n, d) if reduce_with == "phi" else paths.psi_k_d(t, n, d))
                res.fail(_tableau_payload(
                    t, d=d, reduce_with=reduce_with,
                    majd=stats.maj_d_transform(t, d), majd_reduced=stats.maj_d_transform(smaller, d),
                    reduced=str(smaller),
                ))
    return res


def _shape_descent(shape: Partition, params: dict) -> SuiteResult:
    res = SuiteResult("descent-lemma")
    n = shape.size
    if n < 2:
        return res
    for t in enumerate_syt(shape):
        for d in range(1, n + 1):
            res.checked += 1
            if not stats.descent_lemma_check(t, d):
                res.fail(_tableau_payload(t, d=d))
    return res


def _shape_swapchain(shape: Partition, params: dict) -> SuiteResult:
    mode = SwapMode(params.get("swap_mode", "fixed"))
    res = SuiteResult("swapchain-equivalence")
    n = shape.size
    for t in enumerate_syt(shape):
        for k in range(1, n + 1):
            for d in range(1, n + 1):
                res.checked += 1
                want = paths.psi_k_d(t, k, d)
                got = paths.psi_k_d_via_swaps(t, k, d, mode)
                if got != want:
                    res.fail(_tableau_payload(t, k=k, d=d, swap_mode=mode.value, blocks=str(want), swaps=str(got)))
    return res


def _shape_roundtrip(shape: Partition, params: dict) -> SuiteResult:
    res = SuiteResult("inverse-roundtrip")
    n = shape.size
    tabs = enumerate_syt(shape)
    for k in range(1, n + 1):
        for d in range(1, n + 1):
            images = set()
            for s in tabs:
                res.checked += 1
                t = paths.psi_k_d(s, k, d)
                images.add(t)
                if paths.phi_k_d(t, k, d) != s:
                    res.fail(_tableau_payload(s, k=k, d=d, check="phi(psi(s)) != s"))
                if paths.psi_k_d(paths.phi_k_d(s, k, d), k, d) != s:
                    res.fail(_tableau_payload(s, k=k, d=d, check="psi(phi(s)) != s"))
            if len(images) != len(tabs):
                res.fail({"shape": list(shape.parts), "k": k, "d": d, "check": "psi not bijective",
                          "image_size": len(images), "domain_size": len(tabs)})
    return res


def _shape_syt_count(shape: Partition, params: dict) -> SuiteResult:
    res = SuiteResult("syt-count")
    res.checked = 1
    tabs = enumerate_syt(shape)
    hook = count_syt(shape)
    if len(tabs) != hook or len(set(tabs)) != len(tabs) or not all(map(is_standard, tabs)):
        res.fail({"shape": list(shape.parts), "enumerated": len(tabs), "hook_length": hook})
    return res


SHAPE_WORKERS: dict[str, tuple[Callable[[Partition, dict], SuiteResult], int, int]] = {
    # name -> (worker, smallest n, default largest n)
    "tab-equidist": (_shape_tab_equidist, 2, DEFAULT_DIST_MAX_N),
    "maj-eq-inv": (_shape_maj_eq_inv, 1, DEFAULT_POINTWISE_MAX_N),
    "weighted-vs-transform": (_shape_weighted, 1, DEFAULT_POINTWISE_MAX_N),
    "recursion": (_shape_recursion, 1, DEFAULT_POINTWISE_MAX_N),
    "descent-lemma": (_shape_descent, 2, DEFAULT_POINTWISE_MAX_N),
    "swapchain-equivalence": (_shape_swapchain, 1, DEFAULT_POINTWISE_MAX_N),
    "inverse-roundtrip": (_shape_roundtrip, 1, DEFAULT_POINTWISE_MAX_N),
    "syt-count": (_shape_syt_count, 0, 9),
}


def _run_worker(args: tuple[str, tuple[int, ...], dict]) -> SuiteResult:
    name, parts, params = args
    return SHAPE_WORKERS[name][0](Partition(parts), params)


def _sweep_shapes(name: str, max_n: int | None, jobs: int, params: dict) -> SuiteResult:
    worker, lo, default_hi = SHAPE_WORKERS[name]
    hi = default_hi if max_n is None else max_n
    tasks = [(name, shape.parts, params) for shape in _shapes(lo, hi)]
    result = SuiteResult(name, details={"max_n": hi})
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_worker, tasks, chunksize=1))
    else:
        parts = [_run_worker(task) for task in tasks]
    for part in parts:
        result.merge(part)
    return result


# ---------------------------------------------------------------- other suites


def _perm_equidist(max_n: int | None, jobs: int, params: dict) -> SuiteResult:
    hi = DEFAULT_DIST_MAX_N if max_n is None else max_n
    cache = params.get("cache")
    res = SuiteResult("perm-equidist", details={"max_n": hi})
    for n in range(1, hi + 1):
        base = distribution("inv", n=n, cache=cache)
        if base.total != factorial(n):
            res.fail({"n": n, "check": "coefficient sum", "total": base.total})
        for d in range(1, n + 1):
            res.checked += 1
            poly = distribution("majd", n=n, d=d, cache=cache)
            if poly != base:
                res.fail({"n": n, "d": d, "inv": list(base.coeffs), "majd": list(poly.coeffs)})
    return res


def _foata_suite(max_n: int | None, jobs: int, params: dict) -> SuiteResult:
    hi = DEFAULT_POINTWISE_MAX_N if max_n is None else max_n
    res = SuiteResult("foata", details={"max_n": hi})
    for n in range(1, hi + 1):
        images = set()
        for p in perm.all_permutations(n):
            res.checked += 1
            f = perm.foata(p)
            images.add(f)
            if perm.maj(f) != perm.inv(p):
                res.fail({"permutation": perm.format_permutation(p), "foata": perm.format_permutation(f)})
        if len(images) != factorial(n):
            res.fail({"n": n, "check": "foata not bijective", "image_size": len(images)})
    return res


def find_tableaux_with_pairs(
    pairs: frozenset = REFERENCE_MAJ4_PAIRS, shape: tuple[int, ...] = (3, 3, 3), d: int = 4
) -> list[StandardTableau]:
    """Tableaux of ``shape`` whose maj_d weighted-pair set equals ``pairs``."""
    return [t for t in enumerate_syt(Partition(shape)) if stats.maj_d_weighted(t, d)[1] == pairs]


def reference_fixture_checks() -> dict[str, bool]:
    S = StandardTableau.parse(WORKED_TABLEAU)
    psi9 = paths.psi_k_d(S, 9, 8)
    hs_expected = {
        (1, 9), (2, 9), (5, 9), (6, 9), (7, 9), (2, 7), (5, 7), (2, 8), (5, 8), (6, 8),
        (7, 8), (1, 4), (2, 4), (3, 4), (1, 6), (2, 6), (5, 6), (1, 3), (2, 3),
    }
    t1 = StandardTableau.parse("1,2/3,4")
    t2 = StandardTableau.parse("1,3/2,4")
    path9 = paths.build_path(S, 9)
    path8 = paths.build_path(psi9, 8)
    under9 = {S[c] for c in S.shape.cells() if path9.is_under(c)}
    under8 = {psi9[c] for c in psi9.shape.cells() if path8.is_under(c)}
    located = find_tableaux_with_pairs()
    return {
        "inv_hs(S) = 19": stats.inv_hs(S) == 19,
        "Inv(S) matches the 19 listed pairs": {(p.low, p.high) for p in stats.hs_inversion_set(S)} == hs_expected,
        "maj(Psi(S)) = 19": stats.maj_d_transform(S, 8) == 19,
        "blocks about pi(S,9)": paths.blocks(S, path9, 1).blocks == ((1,), (2, 3, 4), (5,), (6,), (7, 8)),
        "blocks about pi(Psi9(S),8)": paths.blocks(psi9, path8, 1).blocks == ((1,), (2,), (3, 4, 5), (6,), (7,)),
        "cells under pi(S,9)": under9 == {1, 2, 5, 6, 7},
        "cells under pi(Psi9(S),8) hold S-labels 2,5": {S[c] for c in psi9.shape.cells() if path8.is_under(c)} == {2, 5}
        and under8 == {4, 5},
        "SYT(2,2) maj values {2,4}": sorted(stats.maj_tab(t) for t in enumerate_syt((2, 2))) == [2, 4],
        "Inv of 1,2/3,4": {(p.low, p.high) for p in stats.hs_inversion_set(t1)} == {(1, 3), (2, 3), (2, 4), (1, 4)},
        "Inv of 1,3/2,4": {(p.low, p.high) for p in stats.hs_inversion_set(t2)} == {(1, 2), (3, 4)},
        "maj_4 weighted pairs located in SYT(3,3,3)": len(located) >= 1,
        "maj_4 of located tableau = 24": all(stats.maj_d_weighted(t, 4)[0] == 24 == stats.maj_d_transform(t, 4)
                                             for t in located),
    }


def _reference_fixtures(max_n: int | None, jobs: int, params: dict) -> SuiteResult:
    res = SuiteResult("paper-fixtures")
    checks = reference_fixture_checks()
    res.details["checks"] = checks
    for name, ok in checks.items():
        res.checked += 1
        if not ok:
            res.fail({"fixture": name})
    return res


def _reading_report(max_n: int | None, jobs: int) -> dict[str, dict]:
    """Mismatch counts and the smallest counterexample for every reading."""
    out = {}
    for reading in Reading:
        r = _sweep_shapes("weighted-vs-transform", max_n, jobs, {"reading": reading.value})
        out[reading.value] = {
            "failures": r.failures,
            "checked": r.checked,
            "first_counterexample": r.counterexamples[0] if r.counterexamples else None,
        }
    return out


def run_suite(name: str, max_n: int | None = None, jobs: int = 1, **params) -> SuiteResult:
    start = time.perf_counter()
    params = {k: (v.value if hasattr(v, "value") and k in ("reading", "swap_mode") else v) for k, v in params.items()}
    if name in ("perm-equidist", "foata", "paper-fixtures"):
        res = {"perm-equidist": _perm_equidist, "foata": _foata_suite, "paper-fixtures": _reference_fixtures}[name](
            max_n, jobs, params
        )
    elif name in SHAPE_WORKERS:
        worker_params = {k: v for k, v in params.items() if k != "cache"}
        if name == "weighted-vs-transform":
            worker_params.setdefault("reading", stats.DEFAULT_READING.value)
        res = _sweep_shapes(name, max_n, jobs, worker_params)
        if name == "weighted-vs-transform":
            res.details["reading"] = worker_params["reading"]
            res.details["readings"] = _reading_report(max_n, jobs)
            winners = [r for r, v in res.details["readings"].items() if v["failures"] == 0]
            res.details["winning_readings"] = winners
        for key in ("reduce_with", "swap_mode"):
            if key in worker_params:
                res.details[key] = worker_params[key]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    res.seconds = time.perf_counter() - start
    return res


SUITES = [
    "perm-equidist",
    "tab-equidist",
    "maj-eq-inv",
    "weighted-vs-transform",
    "recursion",
    "descent-lemma",
    "swapchain-equivalence",
    "inverse-roundtrip",
    "paper-fixtures",
    "foata",
    "syt-count",
]


def run_suites(names: Iterable[str], max_n: int | None = None, jobs: int = 1, **params) -> list[SuiteResult]:
    return [run_suite(name, max_n, jobs, **params) for name in names]
