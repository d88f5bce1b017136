"""Exact linear algebra over the rationals and over the truncated series ring.

Two layers:

* plain ``list[list]`` matrices with int/Fraction entries, used for Lie
  algebra bases, nilpotents and rank computations;
* :class:`SeriesMatrix` with :class:`TruncatedLaurentSeries` entries,
  the carrier of Higgs germs.

Characteristic polynomial coefficients come from the Faddeev-LeVerrier
recurrence, which only ever divides by integers and therefore stays exact
over any commutative algebra over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .series import Coeff, TruncatedLaurentSeries, _norm

Matrix = list  # list[list[Coeff]]


class StructureError(ValueError):
    """Input violates a structural precondition (shape, symmetry, ...)."""


# ---------------------------------------------------------------------------
# constant-matrix helpers


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return [[0] * m for _ in range(n)]


def eye(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c: Coeff, a: Matrix) -> Matrix:
    return [[_norm(c * x) if x else 0 for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    bt = [[b[p][j] for p in range(k)] for j in range(m)]
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for j in range(m):
            bj = bt[j]
            s = 0
            for p in range(k):
                x = ai[p]
                if x:
                    s += x * bj[p]
            oi[j] = _norm(s) if isinstance(s, Fraction) else s
    return out

def mat_pow(a: Matrix, k: int) -> Matrix:
    out = eye(len(a))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def trace(a: Matrix):
    return sum(a[i][i] for i in range(len(a)))


def bracket(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def char_poly_const(a: Matrix, upto: int | None = None) -> list[Coeff]:
    """Coefficients c_1..c_k of det(lambda*I - a) via Faddeev-LeVerrier."""
    n = len(a)
    k_max = n if upto is None else min(upto, n)
    cs: list[Coeff] = []
    m = [row[:] for row in a]
    for k in range(1, k_max + 1):
        if k > 1:
            for i in range(n):
                m[i][i] = m[i][i] + cs[-1]
            m = mat_mul(a, m)
        tr = trace(m)
        cs.append(_norm(Fraction(-tr, k)))
    return cs


def det_const(a: Matrix) -> Coeff:
    n = len(a)
    if n == 0:
        return 1
    cs = char_poly_const(a)
    return _norm((-1) ** n * cs[-1])


# ---------------------------------------------------------------------------
# exact rank and nullspaces


def _integer_rows(a: Matrix) -> list[list[int]]:
    rows = []
    for row in a:
        denom = 1
        for x in row:
            if isinstance(x, Fraction):
                denom = denom * x.denominator // __import__("math").gcd(denom, x.denominator)
        rows.append([int(x * denom) for x in row])
    return rows


def rank_int(a: Matrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    m = _integer_rows(a)
    rows, cols = len(m), len(m[0]) if m else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def rref(rows: Sequence[Sequence[Coeff]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[Coeff]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows @ x = 0} over the rationals."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def solve_linear(rows: Sequence[Sequence[Coeff]], rhs: Sequence[Coeff]):
    """One exact solution x of rows @ x = rhs, or None if inconsistent.

    Free variables are set to zero.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def in_row_span(rows: Sequence[Sequence[Coeff]], vec: Sequence[Coeff]) -> bool:
    red, pivots = rref(rows)
    v = [Fraction(x) for x in vec]
    for r, pc in enumerate(pivots):
        if v[pc]:
            f = v[pc]
            v = [x - f * y for x, y in zip(v, red[r])]
    return not any(v)


# ---------------------------------------------------------------------------
# series matrices


@dataclass(frozen=True)
class CharPolyCoeffs:
    """Coefficients c_1, ..., c_n of det(lambda*I - m) = lambda^n + sum c_j lambda^(n-j)."""

    c: tuple

    def __len__(self) -> int:
        return len(self.c)

    def cj(self, j: int):
        """1-based access: cj(1) = c_1."""
        return self.c[j - 1]


class SeriesMatrix:
    """Square matrix over the truncated Laurent series ring."""

    __slots__ = ("n", "entries")

    def __init__(self, entries: Sequence[Sequence[TruncatedLaurentSeries]]):
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise StructureError("matrix must be square")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", [list(row) for row in entries])

    def __setattr__(self, name, value):
        raise AttributeError("SeriesMatrix is immutable")

    @classmethod
    def from_scalar(cls, m: Matrix, precision: int) -> "SeriesMatrix":
        return cls(
            [[TruncatedLaurentSeries({0: x}, precision) for x in row] for row in m]
        )

    @property
    def precision(self) -> int:
        return min(e.precision for row in self.entries for e in row)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self.n == other.n and all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    def __add__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        return SeriesMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        return SeriesMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "SeriesMatrix":
        return SeriesMatrix([[-a for a in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, SeriesMatrix):
            n = self.n
            a, b = self.entries, other.entries
            out = []
            for i in range(n):
                ai = a[i]
                row = []
                for j in range(n):
                    s = None
                    for p in range(n):
                        x = ai[p]
                        if x.is_zero():
                            continue
                        term = x * b[p][j]
                        s = term if s is None else s + term
                    if s is None:
                        # row of known zeros: precision from the usual rule
                        prec = min(
                            min(x.precision + (b[p][j].low_bound) for p, x in enumerate(ai)),
                            min(b[p][j].precision + ai[p].low_bound for p in range(n)),
                        )
                        s = TruncatedLaurentSeries.zero(prec)
                    row.append(s)
                out.append(row)
            return SeriesMatrix(out)
        if isinstance(other, (int, Fraction, TruncatedLaurentSeries)):
            return SeriesMatrix([[a * other for a in row] for row in self.entries])
        return NotImplemented

    __rmul__ = __mul__

    def scale_t(self, k: int) -> "SeriesMatrix":
        """Multiply every entry by t^k."""
        return SeriesMatrix([[a.shift(k) for a in row] for row in self.entries])

    def trace(self) -> TruncatedLaurentSeries:
        s = self.entries[0][0]
        for i in range(1, self.n):
            s = s + self.entries[i][i]
        return s

    def transpose(self) -> "SeriesMatrix":
        return SeriesMatrix([list(col) for col in zip(*self.entries)])

    def is_constant(self) -> bool:
        return all(
            all(e >= 0 for e, _ in entry.items()) and entry.low_bound >= 0 and
            all(e == 0 for e, _ in entry.items())
            for row in self.entries for entry in row
        )

    def constant_matrix(self) -> Matrix:
        """Extract the scalar matrix when every entry is a constant series."""
        out = []
        for row in self.entries:
            r = []
            for entry in row:
                for e, _ in entry.items():
                    if e != 0:
                        raise StructureError("non-constant entry")
                r.append(entry.coefficient(0) if entry.precision > 0 else 0)
            out.append(r)
        return out

    def coefficient_matrix(self, e: int) -> Matrix:
        return [[entry._coeffs.get(e, 0) for entry in row] for row in self.entries]

    def __str__(self) -> str:
        return "\n".join("  ".join(str(e) for e in row) for row in self.entries)


def char_poly_coeffs(m: SeriesMatrix, upto: int | None = None) -> CharPolyCoeffs:
    """Exact characteristic polynomial coefficients (Faddeev-LeVerrier)."""
    n = m.n
    k_max = n if upto is None else min(upto, n)
    cs = []
    work = m
    for k in range(1, k_max + 1):
        if k > 1:
            c = cs[-1]
            shifted = SeriesMatrix(
                [
                    [
                        work.entries[i][j] + c if i == j else work.entries[i][j]
                        for j in range(n)
                    ]
                    for i in range(n)
                ]
            )
            work = m * shifted
        cs.append(work.trace() / (-k))
    return CharPolyCoeffs(tuple(cs))


def det_series(m: SeriesMatrix) -> TruncatedLaurentSeries:
    cs = char_poly_coeffs(m)
    return cs.cj(m.n) * ((-1) ** m.n)


def pfaffian(m: SeriesMatrix) -> TruncatedLaurentSeries:
    """Pfaffian of an exactly skew-symmetric series matrix of even size.

    First-row expansion with memoisation on index subsets; satisfies
    pfaffian(m)^2 = det(m).
    """
    n = m.n
    if n % 2 != 0:
        raise StructureError("pfaffian requires even size")
    for i in range(n):
        if not m.entries[i][i].is_zero():
            raise StructureError("pfaffian requires zero diagonal")
        for j in range(i + 1, n):
            if not (m.entries[i][j] + m.entries[j][i]).is_zero():
                raise StructureError("pfaffian requires a skew-symmetric matrix")
    if n == 0:
        return TruncatedLaurentSeries.constant(1, m.precision)
    a = m.entries
    cache: dict = {}

    def pf(idx: tuple) -> TruncatedLaurentSeries:
        if len(idx) == 2:
            return a[idx[0]][idx[1]]
        got = cache.get(idx)
        if got is not None:
            return got
        i0 = idx[0]
        rest = idx[1:]
        total = None
        for p, j in enumerate(rest):
            entry = a[i0][j]
            sub = rest[:p] + rest[p + 1:]
            term = entry * pf(sub)
            if p % 2 == 1:
                term = -term
            total = term if total is None else total + term
        cache[idx] = total
        return total

    return pf(tuple(range(n)))


def pfaffian_const(m: Matrix) -> Coeff:
    """Pfaffian of a constant skew-symmetric matrix (same expansion)."""
    n = len(m)
    if n % 2 != 0:
        raise StructureError("pfaffian requires even size")
    for i in range(n):
        if m[i][i]:
            raise StructureError("pfaffian requires zero diagonal")
        for j in range(i + 1, n):
            if m[i][j] + m[j][i]:
                raise StructureError("pfaffian requires a skew-symmetric matrix")
    if n == 0:
        return 1
    cache: dict = {}

    def pf(idx: tuple):
        if len(idx) == 2:
            return m[idx[0]][idx[1]]
        got = cache.get(idx)
        if got is not None:
            return got
        i0 = idx[0]
        rest = idx[1:]
        total = 0
        for p, j in enumerate(rest):
            x = m[i0][j]
            if x:
                sub = rest[:p] + rest[p + 1:]
                term = x * pf(sub)
                total = total - term if p % 2 == 1 else total + term
        cache[idx] = total
        return total

    return _norm(pf(tuple(range(n))))


# ---------------------------------------------------------------------------
# polarized invariants


def polarized_invariant(j: int, xs: Sequence) -> Coeff | TruncatedLaurentSeries:
    """Fully symmetric multilinear c_j with c_j(A, ..., A) = c_j(A).

    This is the trace over the j-th exterior power with its (-1)^j/j!
    normalisation, computed by finite differences of c_j over subset sums.
    Accepts either constant matrices (lists) or SeriesMatrix arguments.
    """
    if len(xs) != j:
        raise StructureError(f"expected {j} arguments, got {len(xs)}")
    series_mode = isinstance(xs[0], SeriesMatrix)
    sizes = {x.n if series_mode else len(x) for x in xs}
    if len(sizes) != 1:
        raise StructureError("size mismatch among arguments")
    n = sizes.pop()
    if n < j:
        raise StructureError(f"need matrix size >= {j}")
    total = None
    for mask in range(1, 1 << j):
        if series_mode:
            acc = None
            for u in range(j):
                if mask >> u & 1:
                    acc = xs[u] if acc is None else acc + xs[u]
            ck = char_poly_coeffs(acc, upto=j).cj(j)
        else:
            acc = zeros(n)
            for u in range(j):
                if mask >> u & 1:
                    acc = mat_add(acc, xs[u])
            ck = char_poly_const(acc, upto=j)[j - 1]
        sign = -1 if (j - bin(mask).count("1")) % 2 else 1
        term = ck * sign
        total = term if total is None else total + term
    result = total / factorial(j)
    return _norm(result) if not series_mode else result


def rank_over_rationals(m) -> int:
    """Exact rank of a constant matrix (SeriesMatrix with constant entries, or plain)."""
    if isinstance(m, SeriesMatrix):
        m = m.constant_matrix()
    return rank_int(m)
