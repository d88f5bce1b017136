"""Fundamental degrees, Levi degrees, the predicted image box, and the
decrease combinatorics that controls pole orders.

The predicted image of the local Hitchin map on a Higgs germ space is a
box of valuation lower bounds: coordinate i (an invariant of degree d_i)
has poles of order at most d_i - m_i, where m_i is a fundamental degree
of the Levi.  Outside type D the pairing is simply by ascending m_i; in
type D the degree-n Pfaffian coordinate is paired through the ambient
sl_2n flag (see predicted_image).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .algebras import ParabolicSpec, G2ParabolicSpec
from .linalg import StructureError


class BadParabolicError(ValueError):
    """Raised when a box description is requested for a bad type-D parabolic.

    The image of such a parabolic is not a box; use the Newton-polygon and
    square-condition description instead.
    """


def conjugate_partition(parts: Sequence[int]) -> tuple:
    parts = sorted((p for p in parts if p), reverse=True)
    if not parts:
        return ()
    return tuple(
        sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1)
    )


def fundamental_degrees(type_label: str, rank: int) -> tuple:
    """Degrees of the chosen invariant generators, in their fixed order.

    Type D is deliberately not sorted: the Pfaffian (degree n) comes last.
    """
    if type_label == "A":
        return tuple(range(2, rank + 2))
    if type_label in ("B", "C"):
        return tuple(range(2, 2 * rank + 1, 2))
    if type_label == "D":
        return tuple(range(2, 2 * rank - 1, 2)) + (rank,)
    if type_label == "G2":
        return (2, 6)
    raise StructureError(f"unsupported type {type_label!r}")


def gl_m_sequence(composition: Sequence[int]) -> tuple:
    """The sorted fundamental degrees m_0 <= ... <= m_(n-1) of a gl Levi.

    The Levi of the block parabolic with the given composition is a
    product of gl factors; its degree multiset is value v repeated
    delta_v times, where delta is the conjugate partition.
    """
    delta = conjugate_partition(composition)
    out = []
    for v, count in enumerate(delta, start=1):
        out.extend([v] * count)
    return tuple(out)


def so_degrees(s: int) -> tuple:
    """Fundamental degrees of so_2s (s >= 0), so_2 being a 1-dim torus."""
    if s == 0:
        return ()
    if s == 1:
        return (1,)
    return tuple(range(2, 2 * s - 1, 2)) + (s,)


def levi_degrees(par: ParabolicSpec) -> tuple:
    """Sorted fundamental degrees of the Levi of par (rank of g many)."""
    t = par.realization.type_label
    if isinstance(par, G2ParabolicSpec):
        return (1, 1) if par.label == "borel" else (1, 2)
    if t == "A":
        degs = sorted(gl_m_sequence(par.levi_blocks()))
        if degs[0] != 1:
            raise StructureError("gl Levi degrees must start at 1")
        return tuple(degs[1:])  # drop one leading 1 for the trace-free Levi
    r_list, s = par.levi_blocks()
    degs: list[int] = []
    for r in r_list:
        degs.extend(range(1, r + 1))
    if t in ("B", "C"):
        degs.extend(range(2, 2 * s + 1, 2))
    else:
        degs.extend(so_degrees(s))
    degs.sort()
    if len(degs) != par.realization.rank:
        raise StructureError("Levi degree count does not match the rank")
    return tuple(degs)


@dataclass(frozen=True)
class DegreeProfile:
    """The predicted image box: val(coordinate i) >= -d[i] + m[i]."""

    d: tuple
    m: tuple
    exponents: tuple

    @classmethod
    def make(cls, d: Sequence[int], m: Sequence[int]) -> "DegreeProfile":
        d = tuple(d)
        m = tuple(m)
        if len(d) != len(m):
            raise StructureError("degree/Levi-degree length mismatch")
        for di, mi in zip(d, m):
            if not 1 <= mi <= di:
                raise StructureError(f"Levi degree {mi} out of range for degree {di}")
        return cls(d, m, tuple(mi - di for di, mi in zip(d, m)))


def is_good_parabolic(par: ParabolicSpec):
    """(good, witness): witness names the violated inequality when bad."""
    t = par.realization.type_label
    if t != "D":
        return True, None
    n = par.realization.rank
    marks = par.marks
    gaps = [marks[0]] + [b - a for a, b in zip(marks, marks[1:])]
    bound = max(gaps + [4])
    have = 2 * (n - marks[-1])
    if have >= bound:
        return True, None
    return False, f"2(n - i_k) = {have} < {bound} = max(i_1, i_2-i_1, ..., 4)"


def predicted_image(par: ParabolicSpec) -> DegreeProfile:
    """The box description of the image for a good parabolic.

    Type D pairs each even-degree coordinate c_2i with the ambient flag
    degree at odd position 2i-1 and the Pfaffian with half the top ambient
    degree; for a good parabolic this reproduces the Levi degree multiset
    with the degree-s invariant of the so_2s factor landing on the
    Pfaffian coordinate.
    """
    t = par.realization.type_label
    d = fundamental_degrees(t, par.realization.rank)
    good, witness = is_good_parabolic(par)
    if not good:
        raise BadParabolicError(
            f"bad type-D parabolic ({witness}); use the Newton-polygon description"
        )
    if t != "D":
        return DegreeProfile.make(d, levi_degrees(par))
    n = par.realization.rank
    mt = gl_m_sequence(par.ambient_composition())
    top = mt[2 * n - 1]
    if top % 2:
        raise StructureError("top ambient degree is odd for a good D parabolic")
    m = tuple(mt[2 * i - 1] for i in range(1, n)) + (top // 2,)
    return DegreeProfile.make(d, m)


# ---------------------------------------------------------------------------
# decrease combinatorics


def cells_of(js: Sequence[int]) -> list[tuple[int, int]]:
    return [(a, b) for a, ja in enumerate(js, start=1) for b in range(1, ja + 1)]


def count_decreases(sigma: dict) -> int:
    """Number of cells (a, b) with sigma(a, b) = (a', b') and a' < a."""
    return sum(1 for (a, _), (a2, _) in sigma.items() if a2 < a)


def lambda_of(js: Sequence[int]) -> int:
    """Max decreases over permutations of the cells: r - max(js)."""
    r = sum(js)
    return r - max(js) if r else 0


def brute_lambda(js: Sequence[int]) -> int:
    cells = cells_of(js)
    best = 0
    for perm in itertools.permutations(cells):
        dec = sum(1 for src, dst in zip(cells, perm) if dst[0] < src[0])
        if dec > best:
            best = dec
    return best


def j_tuples(r: int, blocks: Sequence[int]):
    """All (j_1, ..., j_k) with 0 <= j_a <= blocks[a] summing to r."""
    if not blocks:
        if r == 0:
            yield ()
        return
    head = blocks[0]
    for j in range(min(head, r) + 1):
        for rest in j_tuples(r - j, blocks[1:]):
            yield (j,) + rest


def mu_of(r: int, blocks: Sequence[int]) -> int:
    """mu_r = r - m_(r-1), the max of lambda over J_r."""
    if not 1 <= r <= sum(blocks):
        raise StructureError(f"r = {r} out of range for blocks {blocks}")
    m = gl_m_sequence(blocks)
    return r - m[r - 1]


def brute_mu(r: int, blocks: Sequence[int]) -> int:
    return max(brute_lambda(js) for js in j_tuples(r, blocks))


# ---------------------------------------------------------------------------
# dimension audit


def dimension_audit(par: ParabolicSpec, genus: int) -> dict:
    """Check the global dimension count at the given genus.

    sum_i [(2 d_i - 1)(g - 1) + (d_i - m_i)] must equal
    dim(G)(g - 1) + dim(G/P), with dim(G/P) = dim n.
    """
    if genus < 2:
        raise StructureError("genus must be >= 2")
    d = fundamental_degrees(par.realization.type_label, par.realization.rank)
    m = levi_degrees(par)
    lhs = sum((2 * di - 1) * (genus - 1) + (di - mi) for di, mi in zip(d, sorted(m)))
    rhs = par.realization.dim_g * (genus - 1) + par.dim_n
    return {
        "genus": genus,
        "lhs": lhs,
        "rhs": rhs,
        "match": lhs == rhs,
        "d": list(d),
        "m": list(m),
    }
