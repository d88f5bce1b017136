"""Companion-matrix section for block parabolics in gl_n / sl_n.

For a composition (n_1, ..., n_k) the cells (a, b), 1 <= b <= n_a, are
visited by a greedy sequence s(0), s(1), ...: start at (k, 1); from
(a, b) move to the cell (a', b) with maximal a' < a if one exists, else
to the cell (a', b + 1) with maximal a'.  Steps where the block index
drops are the decreases; the matrix

    A(f) = sum_j t^(-eps_j) e*_(s(j-1)) x e_(s(j)) - sum_j f_j e*_(s(j)) x e_(s(0))

satisfies c_j(t A) = t^(m_(j-1)) f_(j-1) exactly, which exhibits every
point of the predicted box as attained.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .degrees import gl_m_sequence
from .linalg import SeriesMatrix, StructureError
from .series import TruncatedLaurentSeries, val_at_least


@dataclass(frozen=True)
class CompanionPlan:
    blocks: tuple
    s: tuple  # sequence of cells (a, b), 1-based
    eps: tuple  # decrease flags eps_1 .. eps_(n-1)

    @property
    def n(self) -> int:
        return sum(self.blocks)


def build_plan(blocks: Sequence[int]) -> CompanionPlan:
    blocks = tuple(blocks)
    if not blocks or any(b <= 0 for b in blocks):
        raise StructureError(f"blocks must be positive, got {blocks}")
    k = len(blocks)
    n = sum(blocks)
    seq = [(k, 1)]
    for _ in range(n - 1):
        a, b = seq[-1]
        smaller = [a2 for a2 in range(1, a) if blocks[a2 - 1] >= b]
        if smaller:
            seq.append((max(smaller), b))
        else:
            nxt = [a2 for a2 in range(1, k + 1) if blocks[a2 - 1] >= b + 1]
            if not nxt:
                raise StructureError("ran out of cells early")
            seq.append((max(nxt), b + 1))
    if len(set(seq)) != n:
        raise StructureError("cell sequence is not a bijection")
    eps = tuple(
        1 if seq[j][0] < seq[j - 1][0] else 0 for j in range(1, n)
    )
    plan = CompanionPlan(blocks, tuple(seq), eps)
    m = gl_m_sequence(blocks)
    for j in range(1, n):
        if sum(eps[:j]) != j + 1 - m[j]:
            raise StructureError("decrease count disagrees with the m-sequence")
    return plan


def _cell_index(blocks: tuple, cell: tuple) -> int:
    a, b = cell
    return sum(blocks[: a - 1]) + (b - 1)


def companion_matrix(
    plan: CompanionPlan, f: Sequence[TruncatedLaurentSeries]
) -> SeriesMatrix:
    """The companion germ A(f_0, ..., f_(n-1)) as a series matrix.

    Rows and columns are indexed by cells in composition order (block 1
    first), so the t^-1 part is strictly block upper triangular.
    """
    n = plan.n
    if len(f) != n:
        raise StructureError(f"need {n} coefficient series, got {len(f)}")
    for fj in f:
        if val_at_least(fj.valuation(), 0) is not True:
            raise StructureError("companion coefficients must lie in O")
    prec = min(fj.precision for fj in f)
    entries = [
        [TruncatedLaurentSeries.zero(prec) for _ in range(n)] for _ in range(n)
    ]
    for j in range(1, n):
        row = _cell_index(plan.blocks, plan.s[j])
        col = _cell_index(plan.blocks, plan.s[j - 1])
        entries[row][col] = entries[row][col] + TruncatedLaurentSeries.t_power(
            -plan.eps[j - 1], prec
        )
    col0 = _cell_index(plan.blocks, plan.s[0])
    for j in range(n):
        row = _cell_index(plan.blocks, plan.s[j])
        entries[col0][row] = entries[col0][row] - f[j]
    return SeriesMatrix(entries)


def companion_matrix_sl(
    plan: CompanionPlan, f: Sequence[TruncatedLaurentSeries]
) -> SeriesMatrix:
    """Trace-corrected variant: subtract (c_1/n) I so the result is traceless.

    Since c_1(A(f)) = f_0, this shifts the diagonal by f_0/n; taking
    f_0 = 0 leaves the matrix unchanged.
    """
    a = companion_matrix(plan, f)
    n = plan.n
    shift = f[0] / n
    return SeriesMatrix(
        [
            [
                a.entries[i][j] + shift if i == j else a.entries[i][j]
                for j in range(n)
            ]
            for i in range(n)
        ]
    )
