"""Partitions, Young diagrams and standard Young tableaux.

Geometry uses the French convention throughout: a cell is ``(col, row)``,
both 1-indexed, with row 1 at the bottom.  Tableaux store their rows
bottom-first, so ``StandardTableau.parse("1,2,5/3,6,7/4,8,9")`` has
``1, 2, 5`` on the bottom row and ``4, 8, 9`` on the top row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Iterator, Sequence

__all__ = [
    "BoundsError",
    "Cell",
    "Partition",
    "StandardTableau",
    "SINGLE_MAX_N",
    "SWEEP_MAX_N",
    "partitions",
    "enumerate_syt",
    "count_syt",
    "is_standard",
    "delete_max",
]

# single-tableau operations
SINGLE_MAX_N = 20
# exhaustive per-shape sweeps (enumeration, table inverses)
SWEEP_MAX_N = 9

Cell = tuple[int, int]


class BoundsError(ValueError):
    """Input is larger than the supported size for the requested operation."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}: {exc}") from None

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def contains(self, cell: Cell) -> bool:
        col, row = cell
        return 1 <= row <= len(self.parts) and 1 <= col <= self.parts[row - 1]

    def cells(self) -> list[Cell]:
        return [(c, r) for r, part in enumerate(self.parts, 1) for c in range(1, part + 1)]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1)))

    def hook(self, cell: Cell) -> int:
        """Cells weakly right of and weakly above ``cell`` in its hook."""
        col, row = cell
        arm = self.parts[row - 1] - col
        leg = sum(1 for p in self.parts[row:] if p >= col)
        return arm + leg + 1


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, e.g. (3), (2,1), (1,1,1)."""

    def rec(m: int, cap: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            yield ()
            return
        for p in range(min(m, cap), 0, -1):
            for rest in rec(m - p, p):
                yield (p,) + rest

    for parts in rec(n, n if largest is None else largest):
        yield Partition(parts)


@dataclass(frozen=True)
class StandardTableau:
    """A filling of a Young diagram; ``rows[0]`` is the bottom row.

    Construction only checks that the row lengths form a partition and the
    labels are ``1..n``; use :func:`is_standard` for the ordering conditions.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(tuple(len(r) for r in rows))
        labels = sorted(v for row in rows for v in row)
        if labels != list(range(1, len(labels) + 1)):
            raise ValueError(f"labels must be exactly 1..n, got {labels}")

    @classmethod
    def parse(cls, text: str) -> "StandardTableau":
        text = text.strip()
        if not text:
            return cls(())
        try:
            rows = tuple(tuple(int(v) for v in chunk.split(",")) for chunk in text.split("/"))
        except ValueError as exc:
            raise ValueError(f"cannot parse tableau {text!r}: {exc}") from None
        return cls(rows)

    @classmethod
    def from_record(cls, record: dict) -> "StandardTableau":
        t = cls(tuple(tuple(r) for r in record["rows"]))
        if "shape" in record and list(t.shape.parts) != list(record["shape"]):
            raise ValueError(f"record shape {record['shape']} does not match rows")
        return t

    def to_record(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))

    def __str__(self) -> str:
        return "/".join(",".join(map(str, row)) for row in self.rows)

    @cached_property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @cached_property
    def positions(self) -> dict[int, Cell]:
        """label -> (col, row)"""
        return {v: (c, r) for r, row in enumerate(self.rows, 1) for c, v in enumerate(row, 1)}

    def cell_of(self, label: int) -> Cell:
        return self.positions[label]

    def label_at(self, cell: Cell) -> int | None:
        col, row = cell
        if 1 <= row <= len(self.rows) and 1 <= col <= len(self.rows[row - 1]):
            return self.rows[row - 1][col - 1]
        return None

    def __getitem__(self, cell: Cell) -> int:
        label = self.label_at(cell)
        if label is None:
            raise KeyError(cell)
        return label

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def relabel(self, moves: dict[int, Cell]) -> "StandardTableau":
        """Copy with each label in ``moves`` written into the given cell."""
        grid = [list(r) for r in self.rows]
        for label, (col, row) in moves.items():
            grid[row - 1][col - 1] = label
        return StandardTableau(tuple(tuple(r) for r in grid))


def is_standard(t: StandardTableau | Sequence[Sequence[int]]) -> bool:
    rows = t.rows if isinstance(t, StandardTableau) else tuple(tuple(r) for r in t)
    lengths = [len(r) for r in rows]
    if any(a < b for a, b in zip(lengths, lengths[1:])) or any(x == 0 for x in lengths):
        return False
    labels = sorted(v for r in rows for v in r)
    if labels != list(range(1, len(labels) + 1)):
        return False
    for row in rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for lower, upper in zip(rows, rows[1:]):
        if any(lower[c] >= upper[c] for c in range(len(upper))):
            return False
    return True


def _check_size(n: int, max_n: int, what: str) -> None:
    if n > max_n:
        raise BoundsError(f"{what}: n={n} exceeds supported bound {max_n}")


def enumerate_syt(shape: Partition | Sequence[int], max_n: int = SWEEP_MAX_N) -> list[StandardTableau]:
    """All SYT of ``shape``, sorted lexicographically by bottom-first reading word."""
    if not isinstance(shape, Partition):
        shape = Partition(tuple(shape))
    parts = shape.parts
    n = shape.size
    _check_size(n, max_n, "enumerate_syt")
    out: list[tuple[int, ...]] = []
    rows: list[list[int]] = [[] for _ in parts]

    # placing labels in increasing order; row i may grow only while shorter than row i-1
    def rec(label: int) -> None:
        if label > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, part in enumerate(parts):
            if len(rows[i]) < part and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(label)
                rec(label + 1)
                rows[i].pop()

    rec(1)
    tableaux = [StandardTableau(r) for r in out]
    tableaux.sort(key=StandardTableau.reading_word)
    return tableaux


def count_syt(shape: Partition | Sequence[int], max_n: int = SINGLE_MAX_N) -> int:
    """Hook length formula."""
    if not isinstance(shape, Partition):
        shape = Partition(tuple(shape))
    n = shape.size
    _check_size(n, max_n, "count_syt")
    denom = 1
    for cell in shape.cells():
        denom *= shape.hook(cell)
    return factorial(n) // denom


def delete_max(t: StandardTableau) -> StandardTableau:
    """Remove the cell holding ``n``; it is always an outer corner."""
    if t.n == 0:
        raise ValueError("delete_max of the empty tableau")
    n = t.n
    rows = tuple(r for r in (tuple(v for v in row if v != n) for row in t.rows) if r)
    return StandardTableau(rows)
