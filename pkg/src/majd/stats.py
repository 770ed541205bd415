"""Statistics on standard Young tableaux.

``maj_d_transform`` (maj of the image under Psi^(d)) is the reference
definition of maj_d.  ``maj_d_weighted`` computes the same number as a sum of
weighted inversion pairs read off the Psi^(d) pipeline; the sweeps in
``majd.verify`` check the two against each other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .paths import LatticePath, build_path, phi_k_d, psi_k_d, psi_pipeline
from .tableau import Cell, StandardTableau, delete_max

__all__ = [
    "WeightedPair",
    "Attack",
    "Reading",
    "DEFAULT_READING",
    "maj_tab",
    "hs_attack_assignment",
    "hs_inversion_set",
    "inv_hs",
    "maj_d_transform",
    "maj_d_weighted",
    "kadell_weight",
    "naive_pairs",
    "naive_weighted",
    "descent_lemma_check",
    "recursion_check",
    "sorted_pairs",
]


@dataclass(frozen=True, order=True)
class WeightedPair:
    low: int
    high: int
    weight: int = 1

    def __post_init__(self):
        if not self.low < self.high:
            raise ValueError(f"pair needs low < high, got ({self.low}, {self.high})")
        if self.weight < 0:
            raise ValueError("weight must be nonnegative")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.low, self.high, self.weight)


def sorted_pairs(pairs) -> list[WeightedPair]:
    """Canonical order: by (high, low)."""
    return sorted(pairs, key=lambda p: (p.high, p.low))


@dataclass(frozen=True)
class Attack:
    cell: Cell
    j: int
    path: LatticePath


class Reading(enum.Enum):
    """Range of the unit-weight labels ``s`` paired with ``l`` at stage ``k``.

    All readings take ``s`` over the T-labels of cells under the stage path.
    With ``m = max(k-d, 1)`` and ``n`` the size:

    * ``BOUND_A``: ``n-k < s < l``
    * ``BOUND_B``: ``m < s < k``
    * ``BOUND_C``: ``m < s < l``
    """

    BOUND_A = "A"
    BOUND_B = "B"
    BOUND_C = "C"


DEFAULT_READING = Reading.BOUND_C


def maj_tab(t: StandardTableau) -> int:
    pos = t.positions
    return sum(i for i in range(1, t.n) if pos[i + 1][1] > pos[i][1])


def hs_attack_assignment(t: StandardTableau) -> list[Attack]:
    """For j = n..1, the cell holding j in Psi_{j+1} o ... o Psi_n(t) and its path."""
    n = t.n
    if n == 0:
        return []
    trace = psi_pipeline(t, max(n - 1, 1))
    out = []
    for stage in trace.stages:
        out.append(Attack(stage.before.cell_of(stage.k), stage.k, stage.path))
    return out


def hs_inversion_set(t: StandardTableau) -> frozenset[WeightedPair]:
    pairs = set()
    for attack in hs_attack_assignment(t):
        high = t[attack.cell]
        for low in range(1, high):
            if attack.path.is_under(t.cell_of(low)):
                pairs.add(WeightedPair(low, high, 1))
    return frozenset(pairs)


def inv_hs(t: StandardTableau) -> int:
    return len(hs_inversion_set(t))


def maj_d_transform(t: StandardTableau, d: int) -> int:
    return maj_tab(psi_pipeline(t, d).final)


def maj_d_weighted(
    t: StandardTableau, d: int, reading: Reading = DEFAULT_READING
) -> tuple[int, frozenset[WeightedPair]]:
    """maj_d as a sum of weighted pairs.

    For each stage ``k`` (input ``T_{n-k}``), ``l`` is the T-label of the cell
    where ``k`` sits.  The pair ``(m, l)`` gets weight ``m`` if ``m`` is under
    the stage path; each T-label ``s`` under the path in the reading's range
    adds a unit pair ``(s, l)``.
    """
    if d < 1:
        raise ValueError("d must be positive")
    n = t.n
    weights: dict[tuple[int, int], int] = {}
    trace = psi_pipeline(t, d)
    for stage in trace.stages:
        k = stage.k
        if k < 2:
            continue
        m = max(k - d, 1)
        cur, path = stage.before, stage.path
        high = t[cur.cell_of(k)]
        if path.is_under(cur.cell_of(m)):
            weights[(m, high)] = weights.get((m, high), 0) + m
        if reading is Reading.BOUND_A:
            lo, hi = n - k, high
        elif reading is Reading.BOUND_B:
            lo, hi = m, k
        else:
            lo, hi = m, high
        for s in range(lo + 1, hi):
            if s < high and path.is_under(t.cell_of(s)):
                weights[(s, high)] = weights.get((s, high), 0) + 1
    pairs = frozenset(WeightedPair(lo, hi, w) for (lo, hi), w in weights.items() if w)
    return sum(p.weight for p in pairs), pairs


def kadell_weight(low: int, high: int, d: int) -> int:
    gap = high - low
    if gap < d:
        return 1
    if gap == d:
        return low
    return 0


def naive_pairs(t: StandardTableau, d: int) -> frozenset[WeightedPair]:
    """HS inversions reweighted with the permutation weights of W^(d)."""
    out = set()
    for p in hs_inversion_set(t):
        w = kadell_weight(p.low, p.high, d)
        if w:
            out.add(WeightedPair(p.low, p.high, w))
    return frozenset(out)


def naive_weighted(t: StandardTableau, d: int) -> int:
    return sum(p.weight for p in naive_pairs(t, d))


def descent_lemma_check(t: StandardTableau, d: int) -> bool:
    """``max(n-d,1)`` under pi(t, n)  <=>  n-1, n form a descent of Psi^(d)(t)."""
    n = t.n
    if n < 2:
        raise ValueError("descent lemma needs n >= 2")
    under = build_path(t, n).is_under(t.cell_of(max(n - d, 1)))
    final = psi_pipeline(t, d).final
    descent = final.cell_of(n)[1] > final.cell_of(n - 1)[1]
    return under == descent


def recursion_check(t: StandardTableau, d: int, reduce_with: str = "phi") -> bool:
    """maj_d(t) = maj_d(R(t) - {n}) + (n-1 if max(n-d,1) is under pi(t,n)).

    ``reduce_with="phi"`` takes R = Phi_n^(d), the inverse of Psi_n^(d);
    ``"psi"`` takes R = Psi_n^(d) itself, i.e. the pipeline tableau T_1.
    """
    if reduce_with not in ("phi", "psi"):
        raise ValueError(f"reduce_with must be 'phi' or 'psi', got {reduce_with!r}")
    n = t.n
    if n <= 1:
        return maj_d_transform(t, d) == 0
    step = phi_k_d if reduce_with == "phi" else psi_k_d
    smaller = delete_max(step(t, n, d))
    bonus = n - 1 if build_path(t, n).is_under(t.cell_of(max(n - d, 1))) else 0
    return maj_d_transform(t, d) == maj_d_transform(smaller, d) + bonus
