"""Type-D specifics: Richardson Jordan types, Newton polygons, edge
polynomials and square conditions, component classification, and the
codimension identities.

The image of a bad type-D parabolic is not a box.  It is cut out of the
space of tuples (c_2, c_4, ..., c_(2n-2), p_n) over O by two kinds of
conditions read off from the Jordan type delta of the Richardson orbit:
membership of the characteristic polynomial in the Newton polygon of
slopes -delta_1, ..., -delta_mu, and squareness of the edge polynomials
attached to even slopes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import sympy

from .algebras import ParabolicSpec
from .degrees import conjugate_partition
from .linalg import Matrix, StructureError, mat_add, mat_mul, mat_scale, rank_int, zeros
from .series import PrecisionError, TruncatedLaurentSeries


@dataclass(frozen=True)
class JordanType:
    delta: tuple

    def __post_init__(self):
        d = self.delta
        if any(a < b for a, b in zip(d, d[1:])) or any(x <= 0 for x in d):
            raise StructureError(f"not a partition: {d}")

    @property
    def mu(self) -> int:
        return len(self.delta)

    def total(self) -> int:
        return sum(self.delta)

    def validate_d(self) -> None:
        """Parity constraints satisfied by Richardson types in so_2n."""
        d = self.delta
        if len(d) % 2:
            raise StructureError(f"mu must be even, got {d}")
        for v in set(d):
            if v % 2 == 0 and d.count(v) % 2:
                raise StructureError(f"even part {v} has odd multiplicity in {d}")
        for j in range(0, len(d), 2):
            if d[j] % 2 != d[j + 1] % 2:
                raise StructureError(f"consecutive pair parity fails in {d}")


def jordan_type_of_nilpotent(y: Matrix) -> tuple:
    """Partition from the rank sequence: #blocks >= k is rank(y^(k-1)) - rank(y^k)."""
    n = len(y)
    ranks = [n]
    power = [row[:] for row in y]
    while True:
        r = rank_int(power)
        ranks.append(r)
        if r == 0:
            break
        power = mat_mul(power, y)
        if len(ranks) > n + 1:
            raise StructureError("matrix is not nilpotent")
    counts = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts = []
    for size, count in enumerate(
        (c - n for c, n in zip(counts, counts[1:] + [0])), start=1
    ):
        parts.extend([size] * count)
    parts.sort(reverse=True)
    return tuple(parts)


def richardson_jordan_type(par: ParabolicSpec, seed: int = 0) -> JordanType:
    """Jordan type of a generic element of n, by sampled rank sequences.

    Three independent samples must agree; on disagreement the coefficient
    bound is raised and the vote repeated.
    """
    size = par.realization.matrix_size
    for bound in (10, 100, 10000):
        rng = random.Random(seed * 1_000_003 + bound)
        types = set()
        for _ in range(3):
            y = zeros(size)
            for x in par.basis_n:
                c = rng.randint(-bound, bound)
                if c:
                    y = mat_add(y, mat_scale(c, x))
            types.add(jordan_type_of_nilpotent(y))
        if len(types) == 1:
            jt = JordanType(types.pop())
            if par.realization.type_label == "D":
                jt.validate_d()
            return jt
    raise StructureError("generic samples keep disagreeing on the Jordan type")


# ---------------------------------------------------------------------------
# Newton polygons


@dataclass(frozen=True)
class EdgePolynomial:
    """Coefficients on the boundary edge of slope -delta_j (delta_j even)."""

    delta_j: int
    e_j: int
    pairs: tuple  # ((alpha, beta), ...) for s = 0..e_j
    coeffs: tuple  # rho at those pairs, highest u-power first


class NewtonPolygon:
    """The admissibility region of slopes -delta_1 >= ... >= -delta_mu."""

    def __init__(self, delta: JordanType):
        self.delta = delta
        d = delta.delta
        self.two_n = sum(d)
        self.partial = [0]
        for x in d:
            self.partial.append(self.partial[-1] + x)
        self.distinct = []
        self.mults = []
        for v, group in itertools.groupby(d):
            self.distinct.append(v)
            self.mults.append(len(list(group)))

    def min_alpha(self, beta: int) -> int:
        """Least allowed t-exponent for the lambda^beta coefficient."""
        if not 0 <= beta < self.two_n:
            raise StructureError(f"beta = {beta} out of range")
        depth = self.two_n - beta
        for j in range(1, len(self.partial)):
            if self.partial[j - 1] < depth <= self.partial[j]:
                return j
        raise StructureError("unreachable")

    def relevant_pairs(self) -> list[tuple[int, int, list[tuple[int, int]]]]:
        """(delta_j, e_j, integer points on the edge) for each even distinct part."""
        out = []
        acc_e = 0
        acc_depth = 0
        for dj, ej in zip(self.distinct, self.mults):
            if dj % 2 == 0:
                base = (acc_e, self.two_n - acc_depth)
                pts = [
                    (base[0] + s, base[1] - s * dj) for s in range(ej + 1)
                ]
                out.append((dj, ej, pts))
            acc_e += ej
            acc_depth += ej * dj
        return out

    def boundary_indices(self) -> list[int]:
        """Global indices alpha in 0..mu of coefficients on even-slope edges."""
        idx = set()
        for _, _, pts in self.relevant_pairs():
            idx.update(a for a, _ in pts)
        return sorted(idx)


def _rho(values: Sequence[TruncatedLaurentSeries], two_n: int, alpha: int, beta: int):
    """Coefficient rho_(alpha, beta) of the characteristic polynomial
    lambda^2n + c_2 lambda^(2n-2) + ... + c_(2n-2) lambda^2 + (-1)^n p_n^2,
    from values = (c_2, c_4, ..., c_(2n-2), p_n) over O.  The sign on the
    constant term is forced by the split form: det = (-1)^n Pf(J phi)^2.

    Returns None when the coefficient is beyond known precision.
    """
    if beta % 2:
        return 0
    if beta == two_n:
        return 1 if alpha == 0 else 0
    if beta == 0:
        sq = values[-1] * values[-1]
        if (two_n // 2) % 2:
            sq = -sq
        series = sq
    else:
        series = values[(two_n - beta) // 2 - 1]
    try:
        return series.coefficient(alpha)
    except PrecisionError:
        return None


def polygon_membership(
    values: Sequence[TruncatedLaurentSeries], delta: JordanType
) -> Optional[bool]:
    """Three-valued membership of the point in the Newton polygon."""
    poly = NewtonPolygon(delta)
    two_n = poly.two_n
    if len(values) != two_n // 2:
        raise StructureError("wrong number of invariant coordinates")
    unknown = False
    for beta in range(0, two_n, 2):
        jmin = poly.min_alpha(beta)
        for alpha in range(jmin):
            r = _rho(values, two_n, alpha, beta)
            if r is None:
                unknown = True
            elif r != 0:
                return False
    return None if unknown else True


def edge_polynomials(
    values: Sequence[TruncatedLaurentSeries], delta: JordanType
) -> Optional[list[EdgePolynomial]]:
    """Edge polynomials q_j for every even slope; None if precision runs out."""
    poly = NewtonPolygon(delta)
    out = []
    for dj, ej, pts in poly.relevant_pairs():
        coeffs = []
        for alpha, beta in pts:
            r = _rho(values, poly.two_n, alpha, beta)
            if r is None:
                return None
            coeffs.append(r)
        out.append(EdgePolynomial(dj, ej, tuple(pts), tuple(coeffs)))
    return out


def is_square(coeffs: Sequence) -> bool:
    """Is the polynomial (highest power first) a square in C[u]?

    Exact: squarefree factorization over Q; a rational polynomial is a
    complex square iff every squarefree factor of odd multiplicity is
    constant (the leading constant is always a complex square).
    """
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if not coeffs or len(coeffs) == 1:
        return True
    if (len(coeffs) - 1) % 2:
        return False
    u = sympy.Symbol("u")
    p = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in coeffs], u, domain="QQ"
    )
    _, factors = sympy.sqf_list(p)
    return all(mult % 2 == 0 for f, mult in factors if f.degree() > 0)


def is_square_brute(coeffs: Sequence) -> bool:
    """Independent squareness check by triangular back-substitution.

    Writes q = lc * q1 with q1 monic; q is a complex square iff q1 = r^2
    for a monic rational r, whose coefficients are forced one by one.
    """
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if not coeffs or len(coeffs) == 1:
        return True
    deg = len(coeffs) - 1
    if deg % 2:
        return False
    lc = coeffs[0]
    q1 = [c / lc for c in coeffs]
    half = deg // 2
    r = [Fraction(1)] + [Fraction(0)] * half
    for k in range(1, half + 1):
        acc = sum(r[i] * r[k - i] for i in range(1, k))
        r[k] = (q1[k] - acc) / 2
    square = [Fraction(0)] * (deg + 1)
    for i in range(half + 1):
        for j in range(half + 1):
            square[i + j] += r[i] * r[j]
    return square == q1


def d_membership(
    values: Sequence[TruncatedLaurentSeries], delta: JordanType
) -> Optional[bool]:
    """Polygon membership plus squareness of every even-multiplicity edge."""
    member = polygon_membership(values, delta)
    if member is not True:
        return member
    edges = edge_polynomials(values, delta)
    if edges is None:
        return None
    for edge in edges:
        if edge.e_j % 2 == 0 and not is_square(edge.coeffs):
            return False
    return True


# ---------------------------------------------------------------------------
# components and codimension


def component_analysis(delta: JordanType) -> dict:
    """Segments of even-edge coefficients and the component/singularity report."""
    delta.validate_d()
    poly = NewtonPolygon(delta)
    mu = delta.mu
    indices = poly.boundary_indices()
    segments = []
    for _, group in itertools.groupby(
        enumerate(indices), key=lambda iv: iv[1] - iv[0]
    ):
        run = [v for _, v in group]
        segments.append((run[0], run[-1]))
    cases = []
    for a, b in segments:
        if a == 0 and b == mu:
            cases.append(4)
        elif a == 0:
            cases.append(2)
        elif b == mu:
            cases.append(3)
        else:
            cases.append(1)
    all_even = all(x % 2 == 0 for x in delta.delta)
    two_components = 4 in cases
    if two_components != all_even:
        raise StructureError("component criterion disagrees with parity of delta")
    return {
        "delta": list(delta.delta),
        "segments": [list(s) for s in segments],
        "cases": cases,
        "component_count": 2 if two_components else 1,
        "two_components": two_components,
        "singular": any(c in (1, 3) for c in cases),
    }


def codim_report(par: ParabolicSpec, seed: int = 0) -> dict:
    """Exact verification of the codimension identities for a type-D parabolic."""
    if par.realization.type_label != "D":
        raise StructureError("codimension report applies to type D only")
    n = par.realization.rank
    delta = richardson_jordan_type(par, seed=seed)
    d = delta.delta
    mu = delta.mu
    if sum(d) != 2 * n:
        raise StructureError("Jordan type does not partition 2n")
    conj = conjugate_partition(d)
    n_ev = sum(1 for j in range(0, mu, 2) if d[j] % 2 == 0)
    n_odd = mu // 2 - n_ev

    # identity relating a partition of 2n and its conjugate
    lhs16 = -2 * n + 2 * sum(j * dj for j, dj in enumerate(d, start=1))
    rhs16 = sum(x * x for x in conj)
    # Levi dimension from the conjugate partition
    dim_l_formula = Fraction(sum(x * x for x in conj), 2) - n_odd
    # the truncated-box codimension sequence
    mt = []
    for j, dj in enumerate(d, start=1):
        mt.extend([j] * (dj if j < mu else dj - 1))
    mt.append(mu // 2)
    if len(mt) != 2 * n:
        raise StructureError("codimension m-sequence has wrong length")
    m = [mt[2 * j - 1] for j in range(1, n + 1)]
    sum_m = sum(m)
    rhs_sum = n * n - par.dim_n - n_ev
    alt_sum = Fraction(sum(j * dj for j, dj in enumerate(d, start=1)), 2) + Fraction(
        n_odd, 2
    ) - Fraction(mu, 2)
    report = {
        "delta": list(d),
        "conjugate": list(conj),
        "n_even_pairs": n_ev,
        "n_odd_pairs": n_odd,
        "partition_identity": [lhs16, rhs16],
        "dim_l": [dim_l_formula, par.dim_l],
        "m_sequence": m,
        "sum_m": [sum_m, rhs_sum, alt_sum],
    }
    if lhs16 != rhs16:
        raise StructureError(f"partition identity fails: {report}")
    if dim_l_formula != par.dim_l:
        raise StructureError(f"Levi dimension identity fails: {report}")
    if sum_m != rhs_sum or Fraction(sum_m) != alt_sum:
        raise StructureError(f"codimension sum identity fails: {report}")
    return report
