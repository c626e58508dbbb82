"""Invariant quotient fibers and the model degree pairing."""

from __future__ import annotations

import pytest

from twistoric import (
    BadIndices,
    bimeromorphic_pairs,
    build_surface,
    conjugate_divisor,
    enumerate_sequences,
    intersect,
    invariant_fibers,
    model_degree,
    quotient_form,
    validate,
)
from twistoric.lattice import det2


def surf(vectors):
    return build_surface(validate(vectors))


def test_hexagon_first_fiber():
    s = surf([(0, 1), (1, 1), (1, 0)])
    f, fbar = invariant_fibers(s, 1)
    assert f == (0, 1, 1, 0, 0, 0)  # C2 + C3
    assert fbar == (0, 0, 0, 0, 1, 1)


def test_base_case_fiber():
    s = surf([(0, 1), (1, 0)])
    f, fbar = invariant_fibers(s, 1)
    assert f == (0, 1, 0, 0)  # C2 alone
    assert fbar == (0, 0, 0, 1)


def test_n2_fiber_with_multiplicity_two():
    s = surf([(0, 1), (1, 1), (2, 1), (1, 0)])
    f, fbar = invariant_fibers(s, 1)
    assert f == (0, 1, 2, 1, 0, 0, 0, 0)  # C2 + 2 C3 + C4
    assert fbar == (0, 0, 0, 0, 0, 1, 2, 1)


def test_fibers_are_conjugate_and_match_pairing():
    for n in range(7):
        for seq in enumerate_sequences(n):
            s = build_surface(seq)
            for a in range(1, s.k + 1):
                f, fbar = invariant_fibers(s, a)
                assert fbar == conjugate_divisor(f, s)
                form = quotient_form(s, a)
                for r, u in enumerate(s.rays):
                    assert f[r] - fbar[r] == form.evaluate(u)
                    assert f[r] * fbar[r] == 0
                # the fibration collapses its own curve and its conjugate
                assert f[a - 1] == 0 and fbar[a - 1] == 0
                assert any(f) and any(fbar)


def test_fiber_self_intersection_vanishes():
    for n in range(7):
        for seq in enumerate_sequences(n):
            s = build_surface(seq)
            for a in range(1, s.k + 1):
                f, fbar = invariant_fibers(s, a)
                assert intersect(f, f, s) == 0
                assert intersect(fbar, fbar, s) == 0
                # the two fibers of one pencil meet nothing of each other
                assert intersect(f, fbar, s) == 0


def test_model_degree_hexagon_all_pairs():
    s = surf([(0, 1), (1, 1), (1, 0)])
    assert model_degree(s, 1, 2) == 1
    assert model_degree(s, 1, 3) == 1
    assert model_degree(s, 2, 3) == 1


def test_model_degree_n2_distant_pair():
    s = surf([(0, 1), (1, 1), (2, 1), (1, 0)])
    assert model_degree(s, 1, 3) == 2


def test_adjacent_pairs_always_degree_one():
    for n in range(7):
        for seq in enumerate_sequences(n):
            s = build_surface(seq)
            for i in range(1, s.k):
                assert model_degree(s, i, i + 1) == 1


def test_degree_matches_determinant_cross_oracle():
    for n in range(7):
        for seq in enumerate_sequences(n):
            s = build_surface(seq)
            for i in range(1, s.k + 1):
                for j in range(i + 1, s.k + 1):
                    d = model_degree(s, i, j)
                    assert d == abs(det2(seq.vectors[i - 1], seq.vectors[j - 1]))
                    assert d >= 1


def test_bimeromorphic_pairs_n2():
    s = surf([(0, 1), (1, 1), (2, 1), (1, 0)])
    pairs = bimeromorphic_pairs(s)
    assert pairs == [(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert (1, 3) not in pairs
    for i in range(1, 4):
        assert (i, i + 1) in pairs


def test_bad_indices_rejected():
    s = surf([(0, 1), (1, 1), (1, 0)])
    with pytest.raises(BadIndices):
        model_degree(s, 2, 2)
    with pytest.raises(BadIndices):
        model_degree(s, 3, 1)
    with pytest.raises(BadIndices):
        model_degree(s, 0, 2)
    with pytest.raises(BadIndices):
        model_degree(s, 1, 4)
    with pytest.raises(BadIndices):
        quotient_form(s, 7)
