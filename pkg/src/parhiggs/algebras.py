"""Matrix realizations of the classical simple Lie algebras and G2.

Types B and D are realized as matrices skew with respect to the
anti-diagonal symmetric form, type C with respect to the anti-diagonal
symplectic form.  With these forms the parabolic subalgebras attached to
coordinate isotropic flags are literally block upper triangular, the Levi
is block diagonal and the nilpotent radical is strictly block upper
triangular.  (These models are conjugate to the more common symmetric
ones; all invariants used here are conjugation invariant.)

G2 is realized inside sl_7 as the annihilator of the 3-form on imaginary
split octonions, built from explicit Zorn vector-matrix structure
constants.

Every basis element constructed here is a root vector (or Cartan element)
for the diagonal Cartan subalgebra, so parabolic subalgebras for a marked
set of simple roots are obtained by filtering basis elements on the signs
of their simple-root coordinates.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .linalg import (
    Matrix,
    StructureError,
    bracket,
    eye,
    is_zero_matrix,
    mat_add,
    mat_mul,
    mat_scale,
    mat_sub,
    nullspace,
    rref,
    solve_linear,
    transpose,
    trace,
    zeros,
)
from .series import TruncatedLaurentSeries
from . import linalg

CLASSICAL = ("A", "B", "C", "D")
TYPES = CLASSICAL + ("G2",)


def _elementary(n: int, i: int, j: int) -> Matrix:
    m = zeros(n)
    m[i][j] = 1
    return m


def _clear_denominators(vec: Sequence[Fraction]) -> list[int]:
    denom = 1
    for x in vec:
        fx = Fraction(x)
        denom = denom * fx.denominator // gcd(denom, fx.denominator)
    ints = [int(Fraction(x) * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    # fix an overall sign so the construction is deterministic
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def _vec_to_matrix(vec: Sequence, n: int) -> Matrix:
    return [list(vec[i * n:(i + 1) * n]) for i in range(n)]


def _matrix_to_vec(m: Matrix) -> list:
    return [x for row in m for x in row]


class RootElement:
    """A basis element of g that is a root vector for the diagonal Cartan."""

    __slots__ = ("matrix", "coords", "positive")

    def __init__(self, matrix: Matrix, coords: tuple, positive: bool):
        self.matrix = matrix
        self.coords = coords
        self.positive = positive


class LieRealization:
    """A simple Lie algebra in its defining matrix realization.

    Attributes:
        type_label, rank, matrix_size, dim_g
        basis: all Cartan and root elements
        cartan: the diagonal Cartan elements
        roots: list of RootElement
        form: matrix of the preserved bilinear/symplectic form (None for A)
        simple_count: number of simple roots (= rank, except gl bookkeeping)
    """

    def __init__(self, type_label: str, rank: int):
        if type_label not in TYPES:
            raise StructureError(f"unsupported type {type_label!r}")
        if type_label == "G2":
            if rank != 2:
                raise StructureError("G2 requires rank 2")
        elif rank < 1 or (type_label == "D" and rank < 2):
            raise StructureError(f"unsupported rank {rank} for type {type_label}")
        self.type_label = type_label
        self.rank = rank
        if type_label == "G2":
            self._build_g2()
        else:
            self._build_classical()
        self.basis = self.cartan + [r.matrix for r in self.roots]
        self.dim_g = len(self.basis)
        expected = {
            "A": (rank + 1) ** 2 - 1,
            "B": rank * (2 * rank + 1),
            "C": rank * (2 * rank + 1),
            "D": rank * (2 * rank - 1),
            "G2": 14,
        }[type_label]
        if self.dim_g != expected:
            raise StructureError(
                f"dimension mismatch for {type_label}{rank}: got {self.dim_g}, want {expected}"
            )

    # -- classical types ----------------------------------------------------

    def _build_classical(self) -> None:
        rank = self.rank
        if self.type_label == "A":
            n = rank + 1
            self.matrix_size = n
            self.form = None
            self.cartan = [
                mat_sub(_elementary(n, i, i), _elementary(n, i + 1, i + 1))
                for i in range(n - 1)
            ]
            self.simple_count = rank
            simples = self._simple_roots_eps(n)
            self.roots = []
            for i in range(n):
                for j in range(n):
                    if i != j:
                        eps = [0] * n
                        eps[i] += 1
                        eps[j] -= 1
                        coords = self._coords_in_simples(simples, eps)
                        self.roots.append(
                            RootElement(_elementary(n, i, j), coords, i < j)
                        )
            return

        n = 2 * rank + 1 if self.type_label == "B" else 2 * rank
        self.matrix_size = n
        symplectic = self.type_label == "C"
        form = zeros(n)
        for i in range(n):
            form[i][n - 1 - i] = -1 if (symplectic and i >= n // 2) else 1
        self.form = form
        form_inv = zeros(n)
        for i in range(n):
            form_inv[i][n - 1 - i] = Fraction(1, form[n - 1 - i][i])

        def theta(x: Matrix) -> Matrix:
            return mat_scale(-1, mat_mul(form_inv, mat_mul(transpose(x), form)))

        self.cartan = []
        for i in range(rank):
            h = mat_add(_elementary(n, i, i), theta(_elementary(n, i, i)))
            self.cartan.append(h)

        def eps_of(i: int) -> list[int]:
            v = [0] * rank
            if i < rank:
                v[i] = 1
            elif i >= n - rank:
                v[n - 1 - i] = -1
            return v

        simples = self._simple_roots_eps(rank)
        self.simple_count = rank
        self.roots = []
        seen: set = set()
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                cand = mat_add(_elementary(n, i, j), theta(_elementary(n, i, j)))
                if is_zero_matrix(cand):
                    continue
                support = tuple(
                    sorted(
                        (a, b)
                        for a in range(n)
                        for b in range(n)
                        if cand[a][b]
                    )
                )
                if support in seen:
                    continue
                seen.add(support)
                eps = [a - b for a, b in zip(eps_of(i), eps_of(j))]
                if all(x == 0 for x in eps):
                    raise StructureError("unexpected zero root")
                coords = self._coords_in_simples(simples, eps)
                positive = all(c >= 0 for c in coords)
                if not positive and not all(c <= 0 for c in coords):
                    raise StructureError("root with mixed-sign coordinates")
                self.roots.append(RootElement(cand, coords, positive))

    def _simple_roots_eps(self, dim: int) -> list[list[int]]:
        """Simple roots in the epsilon coordinates, 0-based."""
        t = self.type_label
        if t == "A":
            return [
                [1 if m == i else -1 if m == i + 1 else 0 for m in range(dim)]
                for i in range(dim - 1)
            ]
        out = [
            [1 if m == i else -1 if m == i + 1 else 0 for m in range(dim)]
            for i in range(dim - 1)
        ]
        last = [0] * dim
        if t == "B":
            last[dim - 1] = 1
        elif t == "C":
            last[dim - 1] = 2
        else:
            last[dim - 2] = 1
            last[dim - 1] = 1
        out.append(last)
        return out

    @staticmethod
    def _coords_in_simples(simples: list[list[int]], eps: list[int]) -> tuple:
        cols = [[simples[k][m] for k in range(len(simples))] for m in range(len(eps))]
        sol = solve_linear(cols, eps)
        if sol is None:
            raise StructureError("root not in span of simple roots")
        return tuple(int(x) for x in sol)

    # -- G2 -----------------------------------------------------------------

    def _build_g2(self) -> None:
        self.matrix_size = 7
        n = 7

        def cross(u, w):
            return (
                u[1] * w[2] - u[2] * w[1],
                u[2] * w[0] - u[0] * w[2],
                u[0] * w[1] - u[1] * w[0],
            )

        def dot(u, w):
            return u[0] * w[0] + u[1] * w[1] + u[2] * w[2]

        def zmul(x, y):
            # split octonions as Zorn vector matrices (a, u, v, b)
            a, u, v, b = x
            c, w, z, d = y
            return (
                a * c + dot(u, z),
                tuple(a * w[i] + d * u[i] + cross(v, z)[i] for i in range(3)),
                tuple(c * v[i] + b * z[i] - cross(u, w)[i] for i in range(3)),
                b * d + dot(v, w),
            )

        e = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        zero3 = (0, 0, 0)
        # imaginary basis: u1,u2,u3, h, v1,v2,v3
        imag = (
            [(0, e[i], zero3, 0) for i in range(3)]
            + [(1, zero3, zero3, -1)]
            + [(0, zero3, e[i], 0) for i in range(3)]
        )

        def norm(x):
            a, u, v, b = x
            return a * b - dot(u, v)

        def zadd(x, y):
            return (
                x[0] + y[0],
                tuple(x[1][i] + y[1][i] for i in range(3)),
                tuple(x[2][i] + y[2][i] for i in range(3)),
                x[3] + y[3],
            )

        bform = [
            [norm(zadd(imag[i], imag[j])) - norm(imag[i]) - norm(imag[j]) for j in range(n)]
            for i in range(n)
        ]
        self.form = bform

        def bpair(x, j):
            # B(x, imag[j]) for x a Zorn element, by polarizing the norm
            return norm(zadd(x, imag[j])) - norm(x) - norm(imag[j])

        phi = [[[bpair(zmul(imag[i], imag[j]), k) for k in range(n)] for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if phi[i][j][k] != -phi[j][i][k] or phi[i][j][k] != -phi[i][k][j]:
                        raise StructureError("3-form is not alternating")
        self.threeform = phi

        rows = []
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    row = [0] * (n * n)
                    for m in range(n):
                        row[m * n + a] += phi[m][b][c]
                        row[m * n + b] += phi[a][m][c]
                        row[m * n + c] += phi[a][b][m]
                    rows.append(row)
        basis_vecs = nullspace(rows, n * n)
        if len(basis_vecs) != 14:
            raise StructureError(f"G2 annihilator has dimension {len(basis_vecs)}")
        g2_basis = [_vec_to_matrix(_clear_denominators(v), n) for v in basis_vecs]

        # Cartan: elements of the span that are diagonal matrices
        constraints = []
        for i in range(n):
            for j in range(n):
                if i != j:
                    constraints.append([g2_basis[m][i][j] for m in range(14)])
        cart_coeffs = nullspace(constraints, 14)
        if len(cart_coeffs) != 2:
            raise StructureError("G2 Cartan has wrong dimension")
        self.cartan = []
        for cv in cart_coeffs:
            h = zeros(n)
            for m, c in enumerate(_clear_denominators(cv)):
                if c:
                    h = mat_add(h, mat_scale(c, g2_basis[m]))
            self.cartan.append(h)
        h1, h2 = self.cartan

        weights: dict[tuple, list[tuple[int, int]]] = {}
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                w = (h1[i][i] - h1[j][j], h2[i][i] - h2[j][j])
                weights.setdefault(w, []).append((i, j))

        root_spaces: list[tuple[tuple, Matrix]] = []
        for w, positions in sorted(weights.items()):
            if w == (0, 0):
                continue
            allowed = set(positions)
            constraints = []
            for i in range(n):
                for j in range(n):
                    if i != j and (i, j) not in allowed:
                        constraints.append([g2_basis[m][i][j] for m in range(14)])
            for i in range(n):
                constraints.append([g2_basis[m][i][i] for m in range(14)])
            sols = nullspace(constraints, 14)
            if len(sols) > 1:
                raise StructureError("G2 root space not one-dimensional")
            if not sols:
                continue
            x = zeros(n)
            for m, c in enumerate(_clear_denominators(sols[0])):
                if c:
                    x = mat_add(x, mat_scale(c, g2_basis[m]))
            root_spaces.append((w, x))
        if len(root_spaces) != 12:
            raise StructureError(f"G2 has {len(root_spaces)} root spaces, want 12")

        height = None
        for k in (7, 11, 13, 17):
            f = {w: k * w[0] + w[1] for w, _ in root_spaces}
            if all(v != 0 for v in f.values()):
                height = f
                break
        if height is None:
            raise StructureError("no separating height functional for G2 roots")
        positives = [w for w, _ in root_spaces if height[w] > 0]
        # simple roots: positives that are not a sum of two positives
        simples = []
        pos_set = set(positives)
        for w in positives:
            decomposable = any(
                (w[0] - a[0], w[1] - a[1]) in pos_set for a in positives if a != w
            )
            if not decomposable:
                simples.append(w)
        if len(simples) != 2:
            raise StructureError("G2 should have exactly 2 simple roots")
        simples.sort()
        self.simple_count = 2

        self.roots = []
        for w, x in root_spaces:
            sol = solve_linear(
                [[simples[0][0], simples[1][0]], [simples[0][1], simples[1][1]]],
                [w[0], w[1]],
            )
            coords = tuple(int(c) for c in sol)
            self.roots.append(RootElement(x, coords, height[w] > 0))

    # -- membership ---------------------------------------------------------

    def contains_const(self, m: Matrix) -> bool:
        """Exact structural membership of a constant matrix in g."""
        if self.type_label == "A":
            return trace(m) == 0
        if self.type_label == "G2":
            n = self.matrix_size
            phi = self.threeform
            for a in range(n):
                for b in range(a + 1, n):
                    for c in range(b + 1, n):
                        s = 0
                        for k in range(n):
                            s += (
                                m[k][a] * phi[k][b][c]
                                + m[k][b] * phi[a][k][c]
                                + m[k][c] * phi[a][b][k]
                            )
                        if s:
                            return False
            return True
        lhs = mat_add(mat_mul(transpose(m), self.form), mat_mul(self.form, m))
        return is_zero_matrix(lhs)

    def contains_series(self, m) -> bool:
        """Membership of a SeriesMatrix in g(K), checked at every known power of t."""
        exps: set[int] = set()
        for row in m.entries:
            for entry in row:
                exps.update(e for e, _ in entry.items())
        return all(self.contains_const(m.coefficient_matrix(e)) for e in exps)


@lru_cache(maxsize=None)
def build_algebra(type_label: str, rank: int) -> LieRealization:
    return LieRealization(type_label, rank)


# ---------------------------------------------------------------------------
# parabolic subalgebras


def _marks_from_blocks(type_label: str, rank: int, blocks) -> tuple:
    """Translate flag block data into a 1-based marked simple-root set."""
    if type_label == "A":
        comp = tuple(blocks)
        if any(b <= 0 for b in comp) or sum(comp) != rank + 1:
            raise StructureError(f"composition {comp} does not sum to {rank + 1}")
        marks = []
        acc = 0
        for b in comp[:-1]:
            acc += b
            marks.append(acc)
        return tuple(marks)
    r_list, s = blocks
    r_list = tuple(r_list)
    if any(r <= 0 for r in r_list) or s < 0 or sum(r_list) + s != rank:
        raise StructureError(f"bad isotropic block data {blocks} for rank {rank}")
    cums = []
    acc = 0
    for r in r_list:
        acc += r
        cums.append(acc)
    if type_label in ("B", "C"):
        return tuple(cums)
    # type D: translate the tail of the isotropic flag into fork marks
    if s >= 2:
        return tuple(cums)
    if s == 1:
        return tuple(cums[:-1]) + (rank - 1, rank)
    return tuple(cums[:-1]) + (rank,)


def _d_flag_data(rank: int, marks: tuple) -> tuple:
    """For type D marks, the isotropic flag dims and the value of s."""
    fork = tuple(m for m in marks if m >= rank - 1)
    body = tuple(m for m in marks if m < rank - 1)
    if not fork:
        ilist = body
        s = rank - max(body)
    elif fork == (rank - 1, rank):
        ilist = body + (rank - 1,)
        s = 1
    else:
        ilist = body + (rank,)
        s = 0
    return ilist, s


class ParabolicSpec:
    """A parabolic subalgebra p = l + n given by marked simple roots.

    Flag block data, when supplied, is translated to marked roots; the
    block description is kept for reporting.
    """

    def __init__(self, realization: LieRealization, marked_roots: Sequence[int]):
        marks = tuple(sorted(set(int(m) for m in marked_roots)))
        if any(m < 1 or m > realization.simple_count for m in marks):
            raise StructureError(
                f"marked roots {marks} out of range 1..{realization.simple_count}"
            )
        self.realization = realization
        self.marks = marks
        zero_based = set(m - 1 for m in marks)
        basis_l = list(realization.cartan)
        basis_n = []
        basis_p = list(realization.cartan)
        for r in realization.roots:
            on_marks = [r.coords[j] for j in zero_based]
            if all(c == 0 for c in on_marks):
                basis_l.append(r.matrix)
                basis_p.append(r.matrix)
            elif r.positive:
                basis_n.append(r.matrix)
                basis_p.append(r.matrix)
        self.basis_p = basis_p
        self.basis_l = basis_l
        self.basis_n = basis_n
        self.dim_l = len(basis_l)
        self.dim_n = len(basis_n)
        if realization.dim_g != self.dim_l + 2 * self.dim_n:
            raise StructureError("Levi decomposition dimension mismatch")

    # -- block structure ----------------------------------------------------

    def levi_blocks(self):
        """(gl part sizes, s) for B/C/D; the flag composition for A; None for G2."""
        t = self.realization.type_label
        rank = self.realization.rank
        if t == "G2":
            return None
        if t == "A":
            comp = []
            prev = 0
            for m in self.marks + (rank + 1,):
                comp.append(m - prev)
                prev = m
            return tuple(comp)
        if t == "D":
            ilist, s = _d_flag_data(rank, self.marks)
        else:
            ilist, s = self.marks, rank - (self.marks[-1] if self.marks else 0)
            if not self.marks:
                ilist = ()
                s = rank
        r_list = []
        prev = 0
        for i in ilist:
            r_list.append(i - prev)
            prev = i
        return tuple(r_list), s

    def ambient_composition(self) -> tuple:
        """Block sizes of the stabilized full flag inside the ambient sl."""
        t = self.realization.type_label
        if t == "A":
            return self.levi_blocks()
        if t == "G2":
            raise StructureError("no ambient composition for G2 parabolics")
        r_list, s = self.levi_blocks()
        middle = 2 * s + 1 if t == "B" else 2 * s
        mid = (middle,) if middle else ()
        return tuple(r_list) + mid + tuple(reversed(r_list))

    def describe(self) -> dict:
        out = {
            "type": self.realization.type_label,
            "rank": self.realization.rank,
            "marked_roots": list(self.marks),
            "dim_g": self.realization.dim_g,
            "dim_l": self.dim_l,
            "dim_n": self.dim_n,
        }
        if self.realization.type_label == "A":
            out["blocks"] = list(self.levi_blocks())
        elif self.realization.type_label != "G2":
            r_list, s = self.levi_blocks()
            out["gl_blocks"] = list(r_list)
            out["s"] = s
        return out


class G2ParabolicSpec(ParabolicSpec):
    """A G2 parabolic with its geometric label (borel / line / plane)."""

    def __init__(self, realization: LieRealization, marked_roots, label: str):
        super().__init__(realization, marked_roots)
        self.label = label

    def describe(self) -> dict:
        out = super().describe()
        out["parabolic"] = self.label
        return out


def _g2_invariant_lines(par: ParabolicSpec) -> list[int]:
    n = par.realization.matrix_size
    out = []
    for i in range(n):
        if all(
            all(x[m][i] == 0 for m in range(n) if m != i) for x in par.basis_p
        ):
            out.append(i)
    return out


def _g2_invariant_planes(par: ParabolicSpec) -> list[tuple[int, int]]:
    n = par.realization.matrix_size
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            keep = {i, j}
            if all(
                all(
                    x[m][c] == 0
                    for c in keep
                    for m in range(n)
                    if m not in keep
                )
                for x in par.basis_p
            ):
                out.append((i, j))
    return out


def _g2_labels(realization: LieRealization) -> dict[str, tuple]:
    """Map geometric labels to marked-root sets for the G2 realization."""
    labels = {}
    phi = realization.threeform
    bform = realization.form
    for marks in ((1,), (2,)):
        par = ParabolicSpec(realization, marks)
        lines = [
            i for i in _g2_invariant_lines(par) if bform[i][i] == 0
        ]
        planes = [
            (i, j)
            for (i, j) in _g2_invariant_planes(par)
            if all(phi[i][j][k] == 0 for k in range(7))
        ]
        if lines and "line" not in labels:
            labels["line"] = marks
        elif planes:
            labels["plane"] = marks
    if set(labels) != {"line", "plane"}:
        raise StructureError("could not identify the G2 maximal parabolics")
    labels["borel"] = (1, 2)
    return labels


@lru_cache(maxsize=None)
def _g2_label_table() -> dict[str, tuple]:
    return _g2_labels(build_algebra("G2", 2))


def build_parabolic(
    realization: LieRealization,
    blocks=None,
    marked_roots=None,
    g2_parabolic: str | None = None,
) -> ParabolicSpec:
    """Build a parabolic from flag block data, marked roots, or a G2 label."""
    given = [x is not None for x in (blocks, marked_roots, g2_parabolic)]
    if sum(given) != 1:
        raise StructureError(
            "give exactly one of blocks, marked_roots, g2_parabolic"
        )
    if g2_parabolic is not None:
        if realization.type_label != "G2":
            raise StructureError("g2_parabolic only applies to type G2")
        table = _g2_label_table()
        if g2_parabolic not in table:
            raise StructureError(
                f"unknown G2 parabolic {g2_parabolic!r}; use borel, line or plane"
            )
        return G2ParabolicSpec(realization, table[g2_parabolic], g2_parabolic)
    if realization.type_label == "G2":
        marks = tuple(sorted(set(marked_roots)))
        table = _g2_label_table()
        label = next(k for k, v in table.items() if tuple(sorted(v)) == marks)
        return G2ParabolicSpec(realization, marks, label)
    if blocks is not None:
        marked_roots = _marks_from_blocks(
            realization.type_label, realization.rank, blocks
        )
    if not marked_roots:
        raise StructureError("empty marked-root set describes all of g, not a proper parabolic")
    return ParabolicSpec(realization, marked_roots)


def block_parabolic_bases(realization: LieRealization, composition: Sequence[int]):
    """Bases of p, l, n filtered by literal matrix block structure.

    Used as an independent cross-check of the root-theoretic construction:
    the composition is the ambient flag composition (palindromic for
    B/C/D).
    """
    sizes = tuple(composition)
    if sum(sizes) != realization.matrix_size:
        raise StructureError("composition does not match matrix size")
    block_of = []
    for b, sz in enumerate(sizes):
        block_of.extend([b] * sz)

    def classify(m: Matrix) -> str:
        upper = True
        diag = True
        for i in range(len(m)):
            for j in range(len(m)):
                if m[i][j]:
                    if block_of[i] > block_of[j]:
                        upper = False
                    if block_of[i] != block_of[j]:
                        diag = False
        if diag:
            return "l"
        if upper:
            return "n"
        return "other"

    basis_p, basis_l, basis_n = [], [], []
    for x in realization.basis:
        cls = classify(x)
        if cls == "l":
            basis_l.append(x)
            basis_p.append(x)
        elif cls == "n":
            basis_n.append(x)
            basis_p.append(x)
    return basis_p, basis_l, basis_n


def span_equal(basis_a: Sequence[Matrix], basis_b: Sequence[Matrix]) -> bool:
    ra, _ = rref([_matrix_to_vec(m) for m in basis_a])
    rb, _ = rref([_matrix_to_vec(m) for m in basis_b])
    return ra == rb


# ---------------------------------------------------------------------------
# sampling


def sample_pperp(
    par: ParabolicSpec,
    precision: int,
    seed: int,
    coeff_bound: int = 10,
):
    """A pseudorandom Higgs germ t^-1*Y + sum_k t^k Z_k, deterministic in seed.

    Y is an integer combination of the n-basis and each Z_k of the
    g-basis, with coefficients uniform in [-coeff_bound, coeff_bound].
    """
    if precision < 1:
        raise StructureError("precision must be >= 1")
    rng = random.Random(seed)
    size = par.realization.matrix_size
    coeffs = [[dict() for _ in range(size)] for _ in range(size)]

    def add_layer(basis, exponent):
        for x in basis:
            c = rng.randint(-coeff_bound, coeff_bound)
            if c == 0:
                continue
            for i in range(size):
                for j in range(size):
                    if x[i][j]:
                        d = coeffs[i][j]
                        d[exponent] = d.get(exponent, 0) + c * x[i][j]

    add_layer(par.basis_n, -1)
    for k in range(precision):
        add_layer(par.realization.basis, k)
    return linalg.SeriesMatrix(
        [
            [TruncatedLaurentSeries(coeffs[i][j], precision) for j in range(size)]
            for i in range(size)
        ]
    )


def residue_matrix(phi) -> Matrix:
    """The t^-1 coefficient of a sampled germ."""
    return phi.coefficient_matrix(-1)


def in_span(basis: Sequence[Matrix], m: Matrix) -> bool:
    rows = [_matrix_to_vec(x) for x in basis]
    return linalg.in_row_span(rows, _matrix_to_vec(m))
