"""Lie algebra realizations and parabolic subalgebras."""

import pytest

from parhiggs.algebras import (
    block_parabolic_bases,
    build_algebra,
    build_parabolic,
    in_span,
    residue_matrix,
    sample_pperp,
    span_equal,
)
from parhiggs.linalg import (
    StructureError,
    bracket,
    is_zero_matrix,
    mat_add,
    mat_mul,
    mat_pow,
    mat_scale,
    transpose,
    zeros,
)

DIMS = {
    ("A", 3): 15,
    ("A", 4): 24,
    ("B", 2): 10,
    ("B", 3): 21,
    ("C", 2): 10,
    ("C", 3): 21,
    ("D", 4): 28,
    ("D", 5): 45,
    ("G2", 2): 14,
}


@pytest.mark.parametrize("key", sorted(DIMS))
def test_dimensions(key):
    t, r = key
    real = build_algebra(t, r)
    assert real.dim_g == DIMS[key]
    assert len(real.basis) == DIMS[key]


@pytest.mark.parametrize("key", sorted(DIMS))
def test_bracket_closure(key):
    t, r = key
    real = build_algebra(t, r)
    for x in real.basis:
        for y in real.basis:
            assert real.contains_const(bracket(x, y))


@pytest.mark.parametrize("key", [k for k in sorted(DIMS) if k[0] in "BCD"])
def test_form_invariance(key):
    t, r = key
    real = build_algebra(t, r)
    j = real.form
    for x in real.basis:
        lhs = mat_add(mat_mul(transpose(x), j), mat_mul(j, x))
        assert is_zero_matrix(lhs)


@pytest.mark.parametrize("key", [k for k in sorted(DIMS) if k[0] == "A"])
def test_traceless(key):
    t, r = key
    real = build_algebra(t, r)
    for x in real.basis:
        assert sum(x[i][i] for i in range(len(x))) == 0


def test_parabolic_dimension_split():
    for t, r in sorted(DIMS):
        real = build_algebra(t, r)
        if t == "G2":
            specs = [
                build_parabolic(real, g2_parabolic=lbl)
                for lbl in ("borel", "line", "plane")
            ]
        else:
            specs = [
                build_parabolic(real, marked_roots=(m,))
                for m in range(1, real.simple_count + 1)
            ]
        for par in specs:
            assert real.dim_g == par.dim_l + 2 * par.dim_n
            assert len(par.basis_p) == par.dim_l + par.dim_n


def test_nilradical_is_nilpotent():
    for t, r in sorted(DIMS):
        real = build_algebra(t, r)
        if t == "G2":
            par = build_parabolic(real, g2_parabolic="borel")
        else:
            par = build_parabolic(
                real, marked_roots=tuple(range(1, real.simple_count + 1))
            )
        y = zeros(real.matrix_size)
        for k, x in enumerate(par.basis_n):
            y = mat_add(y, mat_scale(k + 1, x))
        assert is_zero_matrix(mat_pow(y, real.matrix_size))


def test_flag_vs_root_construction_A():
    real = build_algebra("A", 3)
    par = build_parabolic(real, blocks=(2, 2))
    fp, fl, fn = block_parabolic_bases(real, (2, 2))
    assert span_equal(par.basis_p, fp)
    assert span_equal(par.basis_l, fl)
    assert span_equal(par.basis_n, fn)


@pytest.mark.parametrize(
    "t,r,blocks,comp",
    [
        ("B", 3, ((1,), 2), (1, 5, 1)),
        ("C", 3, ((2,), 1), (2, 2, 2)),
        ("D", 4, ((1, 1), 2), (1, 1, 4, 1, 1)),
        ("D", 5, ((4,), 1), (4, 2, 4)),
    ],
)
def test_flag_vs_root_construction_BCD(t, r, blocks, comp):
    real = build_algebra(t, r)
    par = build_parabolic(real, blocks=blocks)
    assert par.ambient_composition() == comp
    fp, fl, fn = block_parabolic_bases(real, comp)
    assert span_equal(par.basis_p, fp)
    assert span_equal(par.basis_l, fl)
    assert span_equal(par.basis_n, fn)


def test_d_fork_conventions():
    real = build_algebra("D", 5)
    # single fork mark: s = 0, ambient middle block absent
    par = build_parabolic(real, marked_roots=(4, 5))
    assert par.levi_blocks() == ((4,), 1)
    par = build_parabolic(real, marked_roots=(5,))
    assert par.levi_blocks() == ((5,), 0)
    assert par.ambient_composition() == (5, 5)
    par = build_parabolic(real, marked_roots=(1,))
    assert par.ambient_composition() == (1, 8, 1)


def test_g2_labels():
    real = build_algebra("G2", 2)
    table = {}
    for lbl in ("borel", "line", "plane"):
        par = build_parabolic(real, g2_parabolic=lbl)
        table[lbl] = (par.dim_l, par.dim_n)
    assert table["borel"] == (2, 6)
    assert table["line"] == (4, 5)
    assert table["plane"] == (4, 5)
    # line and plane are genuinely different parabolics
    a = build_parabolic(real, g2_parabolic="line")
    b = build_parabolic(real, g2_parabolic="plane")
    assert a.marks != b.marks


def test_sampling_determinism_and_membership():
    real = build_algebra("C", 2)
    par = build_parabolic(real, marked_roots=(1,))
    phi1 = sample_pperp(par, 5, 42)
    phi2 = sample_pperp(par, 5, 42)
    phi3 = sample_pperp(par, 5, 43)
    assert all(
        phi1.entries[i][j] == phi2.entries[i][j]
        for i in range(4)
        for j in range(4)
    )
    assert any(
        phi1.entries[i][j] != phi3.entries[i][j]
        for i in range(4)
        for j in range(4)
    )
    assert real.contains_series(phi1)
    assert in_span(par.basis_n, residue_matrix(phi1))


def test_bad_config_rejected():
    real = build_algebra("A", 3)
    with pytest.raises(StructureError):
        build_parabolic(real, blocks=(2, 3))
    with pytest.raises(StructureError):
        build_parabolic(real, marked_roots=(7,))
    with pytest.raises(StructureError):
        build_algebra("E", 8)
