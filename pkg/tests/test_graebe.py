import random

import pytest
from hypothesis import given, strategies as st

from conftest import complexes, pure_complexes
from facering.complex import from_facets
from facering.fields import GF2, GF2_16, GF32003, QQ, FieldSpec
from facering.graebe import (GenericityError, certify, closed_form_kernel_dim, compositions, enumerate_w,
                             explicit_matrix, exponent_vectors, generic_matrix, graded_piece, kernel_dim, kernel_dims,
                             sweep_matrix, theta_action)
from facering.hochster import binom
from facering.linalg import Matrix


def test_vandermonde_over_q_is_certified():
    a = generic_matrix(5, 3, QQ, "vandermonde")
    assert a.certified and a.provenance == "vandermonde"
    assert [a.coefficient(t, 3) for t in range(1, 6)] == [1, 4, 9, 16, 25]


def test_repeated_rows_fail_certification():
    a = explicit_matrix([[1, 2], [1, 2], [1, 3], [2, 1]], FieldSpec(5))
    assert not a.certified


def test_small_field_resamples_then_succeeds():
    a = generic_matrix(4, 2, FieldSpec(5), "seeded", seed=0)
    assert a.certified and certify(a.entries, a.field)
    assert a.seed == a.attempts - 1


def test_field_too_small_exhausts_retries():
    # four rows with nonzero entries in F_2 are all (1, 1): no generic 4x2 matrix exists
    with pytest.raises(GenericityError):
        generic_matrix(4, 2, GF2, "seeded", seed=0, max_retries=16)


def test_seeded_large_prime():
    a = generic_matrix(6, 3, GF32003, "seeded", seed=42)
    assert a.certified and a.seed == 42 and a.attempts == 1
    assert a == generic_matrix(6, 3, GF32003, "seeded", seed=42)


def test_generic_matrix_rejects_bad_shape():
    with pytest.raises(ValueError):
        generic_matrix(2, 3)
    with pytest.raises(GenericityError):
        generic_matrix(17, 2, GF32003, "seeded")


def test_vandermonde_in_binary_extension():
    assert generic_matrix(6, 3, GF2_16, "vandermonde").certified


def test_graded_piece_examples(triangle, bowtie):
    piece = graded_piece(triangle, 2, 1, QQ)
    assert len(piece.index) == 3 and piece.total_dim == 3
    assert graded_piece(triangle, 2, 0, QQ).total_dim == 1
    piece = graded_piece(bowtie, 2, 2, QQ)
    assert piece.total_dim == 1
    assert piece.block((2, 0, 0, 0, 0)).dim == 1
    assert (2, 0, 0, 0, 0) in piece.index and (1, 1, 0, 0, 0) in piece.index


def test_theta_single_point(point):
    a = explicit_matrix([[7, 11]], QQ)
    # degree 0 is H̃^0(point) = 0, so the identity-block case starts at i = 1
    assert theta_action(point, 1, 0, 1, a, QQ).shape == (0, 1)
    for i in range(1, 5):
        for p in (1, 2):
            assert theta_action(point, 1, i, p, a, QQ).tolist() == [[a.coefficient(1, p)]]


def test_theta_shapes(triangle):
    a = generic_matrix(3, 2, QQ)
    assert theta_action(triangle, 2, 0, 1, a, QQ).shape == (1, 3)
    assert theta_action(triangle, 1, 0, 1, a, QQ).shape == (0, 0)


def test_theta_requires_certified(triangle):
    bad = explicit_matrix([[1, 1], [1, 1], [1, 1]], QQ)
    with pytest.raises(GenericityError):
        theta_action(triangle, 2, 0, 1, bad, QQ)
    assert theta_action(triangle, 2, 0, 1, bad, QQ, allow_uncertified=True).shape == (1, 3)


def test_kernel_examples(triangle, bowtie):
    a = generic_matrix(3, 3, GF32003, "seeded", seed=1)
    for i in range(1, 5):
        r = kernel_dims(triangle, 2, 1, i, a, GF32003)
        assert r.brute_dim == r.closed_form_dim == 3
    for i in range(2, 5):
        r = kernel_dims(triangle, 2, 2, i, a, GF32003)
        assert r.brute_dim == r.closed_form_dim == 0
    b = generic_matrix(5, 3, GF32003, "seeded", seed=1)
    r = kernel_dims(bowtie, 2, 1, 1, b, GF32003)
    assert r.brute_dim == r.closed_form_dim == 0


def test_kernel_dims_preconditions(triangle):
    a = generic_matrix(3, 2, QQ)
    with pytest.raises(ValueError):
        kernel_dims(triangle, 2, 2, 1, a, QQ)
    with pytest.raises(ValueError):
        kernel_dims(triangle, 3, 0, 1, a, QQ)
    with pytest.raises(ValueError):
        kernel_dims(triangle, 2, 3, 3, a, QQ)


def test_enumerate_w_examples():
    w = enumerate_w([1, 2, 3], 1, 4)
    assert w == [(1, 1, 2), (1, 2, 1)]
    assert enumerate_w([1, 2], 1, 2) == [(1, 1)]
    with pytest.raises(ValueError):
        enumerate_w([1], 1, 3)


@given(k=st.integers(1, 5), m=st.integers(0, 4), extra=st.integers(0, 4))
def test_enumerate_w_count(k, m, extra):
    if k <= m:
        return
    face = list(range(1, k + 1))
    r = k + extra
    w = enumerate_w(face, m, r)
    assert len(w) == len(set(w)) == binom(r - 1 - m, k - m - 1)
    for u in w:
        assert sum(u) == r and all(u[v - 1] == 1 for v in face[:m]) and all(u[v - 1] >= 1 for v in face)


@given(total=st.integers(0, 7), parts=st.integers(0, 4))
def test_compositions_count(total, parts):
    comps = list(compositions(total, parts))
    expected = 1 if total == parts == 0 else binom(total - 1, parts - 1)
    assert len(comps) == expected and comps == sorted(comps)


@given(cx=complexes(max_n=5), r=st.integers(0, 4))
def test_exponent_vectors_supported_on_faces(cx, r):
    for u in exponent_vectors(cx, r):
        assert sum(u) == r
        assert tuple(t + 1 for t, x in enumerate(u) if x) in cx


@pytest.mark.parametrize("field", [QQ, GF32003], ids=str)
@given(cx=complexes(max_n=5))
def test_theta_forms_commute(field, cx):
    a = sweep_matrix(cx, field, seed=3)
    for l in range(1, cx.d + 1):
        for i in range(3):
            for p in range(1, a.d + 1):
                for q in range(p + 1, a.d + 1):
                    pq = theta_action(cx, l, i, p, a, field) @ theta_action(cx, l, i + 1, q, a, field)
                    qp = theta_action(cx, l, i, q, a, field) @ theta_action(cx, l, i + 1, p, a, field)
                    assert pq == qp


@given(cx=complexes(max_n=5))
def test_m_zero_is_whole_piece(cx):
    a = sweep_matrix(cx, QQ)
    for l in range(1, cx.d + 1):
        for i in range(4):
            r = kernel_dims(cx, l, 0, i, a, QQ)
            assert r.brute_dim == r.closed_form_dim == graded_piece(cx, l, i + 1, QQ).total_dim


@given(cx=pure_complexes(max_n=5), seed=st.integers(0, 10**6))
def test_random_uncertified_matrix_respects_upper_bound(cx, seed):
    rng = random.Random(seed)
    forms = min(cx.d, cx.n)
    a = explicit_matrix([[rng.randrange(1, 32003) for _ in range(forms)] for _ in range(cx.n)], GF32003)
    for m in range(forms + 1):
        for l in range(1, cx.d + 1):
            for i in range(m, m + 3):
                brute = kernel_dim(cx, l, m, i, a, GF32003, allow_uncertified=True)
                assert brute <= closed_form_kernel_dim(cx, l, m, i, GF32003)


def test_degenerate_matrix_can_exceed_bound(triangle):
    # the bound needs generic forms: with θ_1 = 0 nothing is killed
    zero = explicit_matrix([[0], [0], [0]], QQ)
    assert not zero.certified
    assert kernel_dim(triangle, 2, 1, 1, zero, QQ, allow_uncertified=True) > closed_form_kernel_dim(triangle, 2, 1, 1)


@given(cx=complexes(max_n=5))
def test_kernel_closed_form_on_random_complexes(cx):
    a = sweep_matrix(cx, GF32003, seed=0)
    for m in range(a.d + 1):
        if m > cx.d:
            break
        for l in range(1, cx.d + 1):
            for i in range(m, m + 3):
                r = kernel_dims(cx, l, m, i, a, GF32003)
                assert r.equal
                assert r.surjective_onto_previous is not False


def test_theta_matrix_type(triangle):
    assert isinstance(theta_action(triangle, 2, 1, 1, generic_matrix(3, 1, QQ), QQ), Matrix)


def test_vandermonde_needs_distinct_nodes():
    with pytest.raises(GenericityError):
        generic_matrix(4, 2, FieldSpec(3), "vandermonde")
    assert from_facets(1, [[1]]).n == 1
