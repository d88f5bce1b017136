"""Degree bookkeeping: image boxes, interleaving, decrease combinatorics."""

import itertools

import pytest

from parhiggs.algebras import build_algebra, build_parabolic
from parhiggs.degrees import (
    BadParabolicError,
    brute_lambda,
    brute_mu,
    conjugate_partition,
    dimension_audit,
    fundamental_degrees,
    gl_m_sequence,
    is_good_parabolic,
    lambda_of,
    levi_degrees,
    mu_of,
    predicted_image,
    so_degrees,
)


def mark_subsets(rank):
    for k in range(1, rank + 1):
        yield from itertools.combinations(range(1, rank + 1), k)


def test_degree_sum_identity():
    """sum(2 d_i - 1) = dim g for every type."""
    for t, r, dim in [
        ("A", 4, 24),
        ("B", 3, 21),
        ("C", 3, 21),
        ("D", 4, 28),
        ("G2", 2, 14),
    ]:
        assert sum(2 * d - 1 for d in fundamental_degrees(t, r)) == dim


def test_conjugate_partition():
    assert conjugate_partition((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate_partition(conjugate_partition((5, 3, 3, 1))) == (5, 3, 3, 1)


def test_gl_m_sequence():
    assert gl_m_sequence((3, 1)) == (1, 1, 2, 3)
    assert gl_m_sequence((1, 1, 1)) == (1, 1, 1)
    assert gl_m_sequence((2, 1, 4)) == (1, 1, 1, 2, 2, 3, 4)


def test_so_degrees():
    assert so_degrees(0) == ()
    assert so_degrees(1) == (1,)
    assert so_degrees(2) == (2, 2)
    assert so_degrees(4) == (2, 4, 6, 4)


def test_levi_degree_count_matches_rank():
    for t, r in [("A", 4), ("B", 4), ("C", 4), ("D", 4), ("D", 5)]:
        real = build_algebra(t, r)
        for marks in mark_subsets(real.simple_count):
            par = build_parabolic(real, marked_roots=marks)
            m = levi_degrees(par)
            assert len(m) == r
            assert all(x >= 1 for x in m)


def test_interleaving_b_and_c():
    """For B/C the box exponents come from interleaving the ambient flag:
    m_i = mtilde_(2i-1), and conversely the sorted Levi degrees reproduce
    that interleaving (ranks <= 6, all parabolics, both directions)."""
    for t in ("B", "C"):
        for r in range(2, 7):
            real = build_algebra(t, r)
            for marks in mark_subsets(r):
                par = build_parabolic(real, marked_roots=marks)
                mt = gl_m_sequence(par.ambient_composition())
                interleaved = tuple(mt[2 * i - 1] for i in range(1, r + 1))
                box = predicted_image(par)
                assert box.m == interleaved
                assert tuple(sorted(levi_degrees(par))) == tuple(
                    sorted(interleaved)
                )


def test_good_d_box_is_levi_multiset():
    for r in (4, 5, 6):
        real = build_algebra("D", r)
        for marks in mark_subsets(r):
            par = build_parabolic(real, marked_roots=marks)
            good, witness = is_good_parabolic(par)
            if not good:
                with pytest.raises(BadParabolicError):
                    predicted_image(par)
                continue
            box = predicted_image(par)
            assert sorted(box.m) == sorted(levi_degrees(par))


def test_known_bad_parabolics():
    real = build_algebra("D", 5)
    assert is_good_parabolic(build_parabolic(real, marked_roots=(4, 5)))[0] is False
    assert is_good_parabolic(build_parabolic(real, marked_roots=(1,)))[0] is True
    assert is_good_parabolic(build_parabolic(real, marked_roots=(3,)))[0] is True


def test_lambda_closed_form_small():
    for js in [(1,), (2, 1), (1, 1, 1), (3, 2), (2, 2, 1)]:
        assert lambda_of(js) == brute_lambda(js)


def test_mu_closed_form_small():
    for blocks in [(2, 1), (1, 1, 1), (3, 1), (2, 2)]:
        for r in range(1, sum(blocks) + 1):
            assert mu_of(r, blocks) == brute_mu(r, blocks)


def test_dimension_audit_examples():
    real = build_algebra("A", 3)
    par = build_parabolic(real, blocks=(3, 1))
    rep = dimension_audit(par, 2)
    assert rep["match"]
    g2 = build_algebra("G2", 2)
    par = build_parabolic(g2, g2_parabolic="borel")
    rep = dimension_audit(par, 3)
    assert rep["match"] and rep["lhs"] == 34
