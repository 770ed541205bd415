"""Permutation statistics: inv, maj, weighted inversions inv_W and maj_d.

A permutation is a tuple ``(s_1, ..., s_n)`` of the values ``1..n`` in
one-line notation.  Inversions are *position* pairs ``(i, j)`` with
``i < j`` and ``s_i > s_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterator, Sequence

import numpy as np

from .dist import DistPolynomial
from .tableau import BoundsError

__all__ = [
    "PERM_MAX_N",
    "parse_permutation",
    "format_permutation",
    "check_permutation",
    "inversion_set",
    "inv",
    "maj",
    "WeightMatrix",
    "weight_matrix_d",
    "ones_matrix",
    "inv_w",
    "maj_d_perm",
    "foata",
    "foata_inverse",
    "all_permutations",
    "perm_distribution",
    "PERM_STATS",
]

PERM_MAX_N = 9

Permutation = tuple[int, ...]


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    try:
        if "," in text:
            p = tuple(int(v) for v in text.split(","))
        else:
            p = tuple(int(ch) for ch in text)
    except ValueError:
        raise ValueError(f"cannot parse permutation {text!r}") from None
    check_permutation(p)
    return p


def format_permutation(p: Sequence[int]) -> str:
    if len(p) <= 9:
        return "".join(map(str, p))
    return ",".join(map(str, p))


def check_permutation(p: Sequence[int]) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {tuple(p)}")


def inversion_set(p: Sequence[int]) -> set[tuple[int, int]]:
    n = len(p)
    return {(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if p[i] > p[j]}


def inv(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def maj(p: Sequence[int]) -> int:
    return sum(i for i in range(1, len(p)) if p[i - 1] > p[i])


@dataclass(frozen=True)
class WeightMatrix:
    """Strictly upper triangular weights ``w[(i, j)]``, ``1 <= i < j <= n``.

    Missing entries are zero.
    """

    n: int
    w: dict[tuple[int, int], int]

    def __post_init__(self):
        for (i, j), weight in self.w.items():
            if not 1 <= i < j <= self.n:
                raise ValueError(f"entry {(i, j)} is not strictly upper triangular for n={self.n}")
            if weight < 0:
                raise ValueError(f"negative weight at {(i, j)}")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.w.get(ij, 0)

    def as_array(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for (i, j), weight in self.w.items():
            a[i - 1, j - 1] = weight
        return a


def weight_matrix_d(n: int, d: int) -> WeightMatrix:
    """Kadell's W^(d): 1 for 0 < j-i < d, i for j-i = d, 0 beyond."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    w = {}
    for i, j in combinations(range(1, n + 1), 2):
        gap = j - i
        if gap < d:
            w[(i, j)] = 1
        elif gap == d:
            w[(i, j)] = i
    return WeightMatrix(n, w)


def ones_matrix(n: int) -> WeightMatrix:
    return WeightMatrix(n, {ij: 1 for ij in combinations(range(1, n + 1), 2)})


def inv_w(p: Sequence[int], W: WeightMatrix) -> int:
    if len(p) != W.n:
        raise ValueError(f"size mismatch: permutation of {len(p)}, matrix of {W.n}")
    return sum(W[ij] for ij in inversion_set(p))


def maj_d_perm(p: Sequence[int], d: int) -> int:
    return inv_w(p, weight_matrix_d(len(p), d))


def _foata_step(word: list[int], x: int) -> list[int]:
    # cut after every letter on the same side of x as the last letter, rotate each block right
    big = word[-1] > x
    out: list[int] = []
    block: list[int] = []
    for letter in word:
        block.append(letter)
        if (letter > x) == big:
            out.extend([block[-1]] + block[:-1])
            block = []
    return out + [x]


def foata_inverse(p: Sequence[int]) -> Permutation:
    """Foata's second fundamental transformation, sending maj to inv."""
    if not p:
        return ()
    word = [p[0]]
    for x in p[1:]:
        word = _foata_step(word, x)
    return tuple(word)


def foata(p: Sequence[int]) -> Permutation:
    """Inverse of :func:`foata_inverse`: ``maj(foata(p)) == inv(p)``."""
    word = list(p)
    tail: list[int] = []
    while len(word) > 1:
        x = word.pop()
        tail.append(x)
        # undo the rotation: blocks now *start* with a letter on the cut side
        big = word[0] > x
        blocks: list[list[int]] = []
        for letter in word:
            if (letter > x) == big:
                blocks.append([letter])
            else:
                blocks[-1].append(letter)
        word = [v for b in blocks for v in b[1:] + b[:1]]
    return tuple(word + tail[::-1])


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order."""
    return permutations(range(1, n + 1))


def _pair_weights(n: int, stat: str, d: int | None) -> np.ndarray:
    pairs = list(combinations(range(1, n + 1), 2))
    if stat == "inv":
        W = ones_matrix(n)
    elif stat == "maj":
        W = weight_matrix_d(n, 1)
    elif stat == "majd":
        if d is None:
            raise ValueError("statistic majd requires d")
        W = weight_matrix_d(n, d)
    else:
        raise ValueError(f"unknown permutation statistic {stat!r}")
    return np.array([W[ij] for ij in pairs], dtype=np.int64)


def perm_distribution(n: int, stat: str, d: int | None = None, max_n: int = PERM_MAX_N) -> DistPolynomial:
    """Coefficients of sum over S_n of q^stat, computed in one vectorized pass.

    ``stat`` is one of ``"inv"``, ``"maj"``, ``"majd"``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise BoundsError(f"perm_distribution: n={n} exceeds supported bound {max_n}")
    weights = _pair_weights(n, stat, d)
    if n == 1:
        return DistPolynomial((1,))
    perms = np.array(list(all_permutations(n)), dtype=np.int8)
    i_idx, j_idx = np.triu_indices(n, k=1)
    inversions = perms[:, i_idx] > perms[:, j_idx]
    values = inversions.astype(np.int64) @ weights
    return DistPolynomial(tuple(np.bincount(values)))


PERM_STATS: dict[str, Callable[..., int]] = {
    "inv": lambda p, d=None: inv(p),
    "maj": lambda p, d=None: maj(p),
    "majd": lambda p, d: maj_d_perm(p, d),
}
