from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

import oracle
from facering.fields import GF2, GF2_16, GF32003, QQ, FieldSpec, generic_extension
from facering.linalg import (Matrix, available_backends, det, kernel_basis, left_inverse, nullity, rank, rref,
                             solve_in_span, use_backend)

FIELDS = [QQ, GF32003, FieldSpec(3), GF2, GF2_16]


def small_int_matrices(max_dim=5, lo=-4, hi=4):
    return st.integers(0, max_dim).flatmap(
        lambda r: st.integers(0, max_dim).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
            .map(lambda rows: (rows, c))))


def test_rank_examples():
    assert rank(Matrix.identity(QQ, 2)) == 2
    assert rank(Matrix.zeros(QQ, 3, 4)) == 0
    assert rank(Matrix.from_rows(QQ, [[1, 2], [2, 4]])) == 1
    assert rank(Matrix.zeros(QQ, 0, 5)) == 0 and rank(Matrix.zeros(QQ, 5, 0)) == 0


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(QQ, 3)).ncols == 0
    assert kernel_basis(Matrix.zeros(QQ, 2, 3)).ncols == 3
    m = Matrix.from_rows(QQ, [[1, 1, 0]])
    k = kernel_basis(m)
    assert k.ncols == 2 and (m @ k).is_zero()


def test_solve_examples():
    b = [Fraction(3), Fraction(-1)]
    assert solve_in_span(Matrix.identity(QQ, 2), b) == b
    assert solve_in_span(Matrix.zeros(QQ, 2, 2), [1, 0]) is None
    assert solve_in_span(Matrix.from_rows(QQ, [[1], [1]]), [2, 2]) == [2]


def test_gf2_16_arithmetic():
    f = GF2_16
    x = f.from_bits(0x1234)
    assert f.mul(x, f.inv(x)) == 1
    assert f(-1) == 1 and f(2) == 0
    assert generic_extension(GF2) == GF2_16 and generic_extension(QQ) == QQ


@pytest.mark.parametrize("text", ["q", "fp:2", "fp:32003", "gf2^16"])
def test_field_parse_round_trip(text):
    assert str(FieldSpec.parse(text)) == text


@pytest.mark.parametrize("text", ["fp:4", "gf3^2", "r", "gf2^5"])
def test_field_parse_rejects(text):
    with pytest.raises(ValueError):
        FieldSpec.parse(text)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(data=small_int_matrices())
def test_rank_nullity(field, data):
    rows, c = data
    m = Matrix.from_rows(field, rows, ncols=c)
    k = kernel_basis(m)
    assert rank(m) + k.ncols == c == rank(m) + nullity(m)
    assert (m @ k).is_zero()
    assert rank(k) == k.ncols


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(data=small_int_matrices())
def test_rref_is_reduced(field, data):
    rows, c = data
    m = Matrix.from_rows(field, rows, ncols=c)
    red, piv = rref(m)
    assert list(piv) == sorted(piv)
    for r, pc in enumerate(piv):
        assert red[r, pc] == field.one
        assert all(red[s, pc] == field.zero for s in range(red.nrows) if s != r)
    assert rank(red) == rank(m) == len(piv)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(data=small_int_matrices(), x=st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_solve_in_span_finds_preimage(field, data, x):
    rows, c = data
    a = Matrix.from_rows(field, rows, ncols=c)
    b = a.apply([field(v) for v in x[:c]])
    sol = solve_in_span(a, b)
    assert sol is not None and a.apply(sol) == b


@pytest.mark.parametrize("field", [QQ, GF32003, GF2_16], ids=str)
@given(data=small_int_matrices(max_dim=4))
def test_left_inverse(field, data):
    rows, c = data
    a = Matrix.from_rows(field, rows, ncols=c)
    _, piv = rref(a)
    p = a.select_columns(piv) if piv else Matrix.zeros(field, a.nrows, 0)
    ell, null = left_inverse(p)
    assert ell @ p == Matrix.identity(field, p.ncols)
    assert (null @ p).is_zero()
    assert null.nrows + p.ncols == p.nrows


@given(data=small_int_matrices(max_dim=4))
def test_rank_q_vs_fp(data):
    """rank over F_p equals rank over Q exactly when p misses some maximal nonzero minor."""
    rows, c = data
    q = Matrix.from_rows(QQ, rows, ncols=c)
    r = rank(q)
    for p in (2, 3, 5, 32003):
        rp = rank(Matrix.from_rows(FieldSpec(p), rows, ncols=c))
        assert rp <= r
        if r:
            minors = [det(q.select_rows(rs).select_columns(cs))
                      for rs in combinations(range(q.nrows), r) for cs in combinations(range(c), r)]
            survives = any(mn and mn.numerator % p for mn in minors)
            assert (rp == r) == survives


@given(data=small_int_matrices())
def test_rank_matches_oracle(data):
    rows, c = data
    for p in (0, 2, 7):
        field = QQ if p == 0 else FieldSpec(p)
        assert rank(Matrix.from_rows(field, rows, ncols=c)) == (oracle.rank_mod(rows, p) if rows and c else 0)


@given(data=small_int_matrices(max_dim=6, lo=-50, hi=50))
def test_finite_backends_agree(data):
    rows, c = data
    for field in (GF32003, GF2, GF2_16):
        m = Matrix.from_rows(field, rows, ncols=c)
        results = []
        for name in available_backends()["finite"]:
            with use_backend(finite=name):
                results.append((rref(m), kernel_basis(m)))
        assert all(r == results[0] for r in results)


@given(data=small_int_matrices(max_dim=6, lo=-50, hi=50))
def test_rational_backends_agree(data):
    rows, c = data
    m = Matrix.from_rows(QQ, rows, ncols=c)
    results = []
    for name in available_backends()["rational"]:
        with use_backend(rational=name):
            results.append((rref(m), rank(m), kernel_basis(m)))
    assert all(r == results[0] for r in results)


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        with use_backend(finite="fortran"):
            pass


def test_det_examples():
    assert det(Matrix.from_rows(QQ, [[1, 2], [3, 4]])) == -2
    assert det(Matrix.from_rows(FieldSpec(5), [[1, 2], [3, 4]])) == 3
    with pytest.raises(ValueError):
        det(Matrix.zeros(QQ, 2, 3))


def test_pure_fallback_selected_by_environment():
    import os
    import subprocess
    import sys
    code = ("from facering.linalg import backend; from facering import corpus; "
            "from facering.graebe import kernel_sweep; from facering.fields import GF32003; "
            "r, _ = kernel_sweep(corpus.load('bowtie'), GF32003); "
            "print(backend(), all(x.equal for x in r))")
    out = subprocess.run([sys.executable, "-c", code], env=dict(os.environ, FACERING_PURE="1"),
                         capture_output=True, text=True, check=True).stdout
    assert out.strip() == "{'finite': 'python', 'rational': 'fractions'} True"


def test_benchmark_smoke(capsys):
    import importlib.util
    from pathlib import Path
    path = Path(__file__).parent.parent / "bench" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--repeat", "1", "--sizes", "8", "16", "--sweep", "bowtie"]) == 0
    assert "backends agree" in capsys.readouterr().out
