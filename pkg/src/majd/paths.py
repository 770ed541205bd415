"""Lattice paths through a tableau, block cycling, Swap, and the Psi/Phi maps.

A cell ``(c, r)`` occupies the unit square ``[c-1, c] x [r-1, r]``.  The path
``pi(T, k)`` starts at the lower-left corner of the cell holding ``k`` and walks
Left or Down to the origin.  At a lattice corner ``(x, y)`` it looks at the
cell northwest of the corner, ``(x, y+1)``, and the cell southeast of it,
``(x+1, y)``, and steps toward whichever holds the larger label.

A cell is *under* the path when its row does not exceed the path's height over
its column; columns right of the start use the start height.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .tableau import SWEEP_MAX_N, BoundsError, Cell, Partition, StandardTableau, enumerate_syt, is_standard

__all__ = [
    "Side",
    "SwapMode",
    "LatticePath",
    "BlockPartition",
    "Stage",
    "Trace",
    "build_path",
    "side_of",
    "blocks",
    "cycle_blocks",
    "swap",
    "psi_k_d",
    "psi_k_d_via_swaps",
    "psi_pipeline",
    "psi_d",
    "phi_k",
    "phi_k_d",
]


class Side(enum.Enum):
    UNDER = "under"
    ABOVE = "above"


class SwapMode(enum.Enum):
    FIXED = "fixed"
    RECOMPUTED = "recomputed"


@dataclass(frozen=True)
class LatticePath:
    k: int
    start: tuple[int, int]
    steps: tuple[str, ...]
    # heights[a-1] is the height of the path over column a, for a = 1..width
    heights: tuple[int, ...]

    def height(self, col: int) -> int:
        if col <= len(self.heights):
            return self.heights[col - 1]
        return self.start[1]

    def side(self, cell: Cell) -> Side:
        col, row = cell
        return Side.UNDER if row <= self.height(col) else Side.ABOVE

    def is_under(self, cell: Cell) -> bool:
        return cell[1] <= self.height(cell[0])

    @property
    def step_string(self) -> str:
        return "".join(self.steps)

    def to_record(self) -> dict:
        return {
            "k": self.k,
            "start": list(self.start),
            "steps": self.step_string,
            "heights": list(self.heights),
        }


@dataclass(frozen=True)
class BlockPartition:
    lo: int
    k: int
    blocks: tuple[tuple[int, ...], ...]

    def to_record(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def build_path(t: StandardTableau, k: int) -> LatticePath:
    if not 1 <= k <= t.n:
        raise ValueError(f"label {k} out of range 1..{t.n}")
    col, row = t.cell_of(k)
    x, y = col - 1, row - 1
    width = len(t.rows[0])
    heights = [y] * width
    steps = []
    while True:
        left = t.label_at((x, y + 1))
        below = t.label_at((x + 1, y))
        if left is None and below is None:
            break
        if below is None or (left is not None and left > below):
            heights[x - 1] = y
            x -= 1
            steps.append("L")
        else:
            y -= 1
            steps.append("D")
    return LatticePath(k, (col - 1, row - 1), tuple(steps), tuple(heights))


def side_of(path: LatticePath, cell: Cell) -> Side:
    return path.side(cell)


def blocks(t: StandardTableau, path: LatticePath, lo: int) -> BlockPartition:
    """Maximal runs of ``lo..k-1``; a run opens on the side of ``lo`` and
    continues while labels sit on the opposite side."""
    k = path.k
    if not 1 <= lo < k:
        raise ValueError(f"need 1 <= lo < k, got lo={lo}, k={k}")
    anchor = path.is_under(t.cell_of(lo))
    runs: list[list[int]] = []
    for label in range(lo, k):
        if label == lo or path.is_under(t.cell_of(label)) == anchor:
            runs.append([label])
        else:
            runs[-1].append(label)
    return BlockPartition(lo, k, tuple(tuple(r) for r in runs))


def cycle_blocks(t: StandardTableau, bp: BlockPartition) -> StandardTableau:
    """Within each block write a into a+1's cell, ..., the last label into a's cell."""
    moves = {}
    for block in bp.blocks:
        for i, label in enumerate(block):
            moves[label] = t.cell_of(block[(i + 1) % len(block)])
    out = t.relabel(moves)
    if not is_standard(out):
        raise AssertionError(f"block cycling produced a non-standard filling from {t} with blocks {bp.blocks}")
    return out


def _exchange(t: StandardTableau, a: int) -> StandardTableau:
    return t.relabel({a: t.cell_of(a + 1), a + 1: t.cell_of(a)})


def swap(t: StandardTableau, a: int, k: int, path: LatticePath | None = None) -> StandardTableau:
    """Exchange ``a`` and ``a+1`` if ``pi(t, k)`` separates them.

    ``path`` overrides the recomputed path (fixed-path swap chains).
    """
    if not (1 <= a and a + 1 < k <= t.n):
        raise ValueError(f"swap needs a+1 < k <= n, got a={a}, k={k}, n={t.n}")
    if path is None:
        path = build_path(t, k)
    if path.is_under(t.cell_of(a)) != path.is_under(t.cell_of(a + 1)):
        out = _exchange(t, a)
        if not is_standard(out):
            raise AssertionError(f"swap({a},{k}) produced a non-standard filling from {t}")
        return out
    return t


def _lo(k: int, d: int) -> int:
    return max(k - d, 1)


def psi_k_d(t: StandardTableau, k: int, d: int) -> StandardTableau:
    """Cycle the labels ``max(k-d,1)..k-1`` in maximal blocks around ``pi(t, k)``."""
    if d < 1:
        raise ValueError("d must be positive")
    if not 1 <= k <= t.n:
        raise ValueError(f"label {k} out of range 1..{t.n}")
    lo = _lo(k, d)
    if lo >= k - 1:
        return t
    return cycle_blocks(t, blocks(t, build_path(t, k), lo))


def psi_k_d_via_swaps(t: StandardTableau, k: int, d: int, mode: SwapMode = SwapMode.FIXED) -> StandardTableau:
    """Swap_{a,k} for a = max(k-d,1), ..., k-2 in ascending order."""
    if d < 1:
        raise ValueError("d must be positive")
    if not 1 <= k <= t.n:
        raise ValueError(f"label {k} out of range 1..{t.n}")
    fixed = build_path(t, k) if mode is SwapMode.FIXED else None
    for a in range(_lo(k, d), k - 1):
        t = swap(t, a, k, fixed)
    return t


@dataclass(frozen=True)
class Stage:
    """One step ``T_{i+1} = Psi_k^(d)(T_i)`` with ``k = n - i``."""

    k: int
    before: StandardTableau
    path: LatticePath
    blocks: BlockPartition | None
    after: StandardTableau

    def to_record(self) -> dict:
        return {
            "k": self.k,
            "tableau": str(self.before),
            "path": self.path.to_record(),
            "blocks": self.blocks.to_record() if self.blocks else [],
            "result": str(self.after),
        }


@dataclass(frozen=True)
class Trace:
    d: int
    stages: tuple[Stage, ...]
    tableaux: tuple[StandardTableau, ...]  # T_0, ..., T_n

    @property
    def final(self) -> StandardTableau:
        return self.tableaux[-1]

    def stage_for(self, k: int) -> Stage:
        """The stage applying Psi_k, whose input is T_{n-k}."""
        return self.stages[len(self.stages) - k]


def psi_pipeline(t: StandardTableau, d: int) -> Trace:
    if d < 1:
        raise ValueError("d must be positive")
    n = t.n
    tableaux = [t]
    stages = []
    for k in range(n, 0, -1):
        cur = tableaux[-1]
        path = build_path(cur, k)
        lo = _lo(k, d)
        if lo >= k - 1:
            bp = blocks(cur, path, lo) if lo < k else None
            nxt = cur
        else:
            bp = blocks(cur, path, lo)
            nxt = cycle_blocks(cur, bp)
        stages.append(Stage(k, cur, path, bp, nxt))
        tableaux.append(nxt)
    return Trace(d, tuple(stages), tuple(tableaux))


def psi_d(t: StandardTableau, d: int) -> StandardTableau:
    """Psi^(d) = Psi_1^(d) o ... o Psi_n^(d)."""
    for k in range(t.n, 0, -1):
        t = psi_k_d(t, k, d)
    return t


@lru_cache(maxsize=None)
def _psi_k_inverse_table(shape: Partition, k: int) -> dict[StandardTableau, StandardTableau]:
    n = shape.size
    if n > SWEEP_MAX_N:
        raise BoundsError(f"phi_k: n={n} exceeds table-inverse bound {SWEEP_MAX_N}")
    table = {}
    for s in enumerate_syt(shape):
        image = psi_k_d(s, k, max(n - 1, 1))
        if image in table:
            raise AssertionError(f"Psi_{k} is not injective on SYT{shape.parts}: {s} and {table[image]} collide")
        table[image] = s
    return table


def phi_k(t: StandardTableau, k: int) -> StandardTableau:
    """Inverse of ``Psi_k = Psi_k^(n-1)``, by table lookup over SYT(shape)."""
    if not 1 <= k <= t.n:
        raise ValueError(f"label {k} out of range 1..{t.n}")
    try:
        return _psi_k_inverse_table(t.shape, k)[t]
    except KeyError:
        raise AssertionError(f"no preimage of {t} under Psi_{k}") from None


def phi_k_d(t: StandardTableau, k: int, d: int) -> StandardTableau:
    """Inverse of Psi_k^(d): undo Psi_k, then re-cycle ``1..k-d`` about the path."""
    if d < 1:
        raise ValueError("d must be positive")
    s = phi_k(t, k)
    for a in range(1, k - d):
        s = swap(s, a, k)
    return s
