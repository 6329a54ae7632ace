import pytest
from hypothesis import given, settings

from conftest import CORPUS, pure_complexes
from facering.complex import ComplexError, from_facets
from facering.fields import GF2, QQ, FieldSpec
from facering.hochster import singularity_dimension
from facering.quotient import (check_main_theorem, f_map, has_flc, isolated_quotient_lc, quotient_lc_dim,
                               quotient_lc_table)


def test_quotient_examples(triangle, bowtie):
    assert [quotient_lc_dim(triangle, 1, 1, i) for i in range(1, 5)] == [3] * 4
    assert [quotient_lc_dim(bowtie, 1, 1, i) for i in range(1, 5)] == [0] * 4
    assert [quotient_lc_dim(bowtie, 0, 2, i) for i in range(1, 5)] == [1] * 4


def test_quotient_range_checks(bowtie):
    with pytest.raises(ValueError):
        quotient_lc_dim(bowtie, 1, 3, 1)
    with pytest.raises(ValueError):
        quotient_lc_dim(bowtie, 1, 1, 0)
    with pytest.raises(ValueError):
        quotient_lc_dim(bowtie, 4, 1, 1)


def test_bowtie_isolated_singularity(bowtie):
    assert isolated_quotient_lc(bowtie, [1, 2, 3, 4, 5], 1) == (0, 1, 0)
    assert isolated_quotient_lc(bowtie, [-1, 5, 2, 2, 9], 1, FieldSpec(32003)) == (0, 1, 0)
    f0, f1 = f_map(bowtie, [1] * 5, 0), f_map(bowtie, [1] * 5, 1)
    assert f0.shape == (0, 0) and f1.shape == (0, 1)


def test_isolated_preconditions(bowtie, two_triangles):
    with pytest.raises(ValueError):
        isolated_quotient_lc(bowtie, [1, 0, 1, 1, 1], 1)
    with pytest.raises(ValueError):
        isolated_quotient_lc(bowtie, [1] * 4, 1)
    with pytest.raises(ComplexError):
        isolated_quotient_lc(two_triangles, [1] * 6, 1)


def test_flc_examples(bowtie):
    assert has_flc(bowtie, 1) and not has_flc(bowtie, 0)



def test_rp2_has_flc_in_both_characteristics():
    # over F_2 only the empty face is singular (H̃^1 ≠ 0), and |∅| = 0 is not > m = 0;
    # the characteristic shows up in Cohen-Macaulayness, not in FLC
    rp2 = CORPUS["rp2-6"].complex
    assert has_flc(rp2, 0, QQ) and has_flc(rp2, 0, GF2)
    assert singularity_dimension(rp2, GF2).singularity_dimension == -1


def test_theorem_examples(bowtie, two_triangles):
    v = check_main_theorem(bowtie, 1, QQ, with_bruteforce=True)
    assert v.agree and v.flc_by_formula and v.flc_by_bruteforce
    v = check_main_theorem(bowtie, 0, QQ, with_bruteforce=True)
    assert v.agree and not v.flc_by_formula and not v.flc_by_bruteforce
    assert check_main_theorem(two_triangles, 0, QQ, with_bruteforce=True).agree


def test_theorem_needs_purity():
    with pytest.raises(ComplexError):
        check_main_theorem(from_facets(4, [[1, 2, 3], [4]]), 1)


def test_table_json_marks_derived_entries(bowtie):
    j = quotient_lc_table(bowtie, 1).to_json()
    assert j["flc"] is True
    assert j["isolated_singularities"]["1"]["0"] == 1
    assert "derived" in j["isolated_singularities"]["1"]["2+_note"]


@pytest.mark.parametrize("field", [QQ, GF2], ids=str)
@given(cx=pure_complexes())
def test_flc_monotone_in_m(field, cx):
    flags = [has_flc(cx, m, field) for m in range(cx.d + 1)]
    assert flags == sorted(flags)
    assert flags[-1]


@pytest.mark.parametrize("field", [QQ, GF2], ids=str)
@given(cx=pure_complexes())
def test_equivalence_by_formula(field, cx):
    for m in range(cx.d + 1):
        assert check_main_theorem(cx, m, field).agree


@settings(max_examples=15)
@given(cx=pure_complexes(max_n=5))
def test_equivalence_with_bruteforce(cx):
    for m in range(cx.d + 1):
        v = check_main_theorem(cx, m, QQ, with_bruteforce=True, max_offset=2)
        assert v.agree, v.bridge_mismatches


@given(cx=pure_complexes())
def test_isolated_singularities_have_no_negative_part(cx):
    if cx.d < 3 or singularity_dimension(cx).singularity_dimension != 0:
        return
    for l in range(1, cx.d - 1):
        neg, _, one = isolated_quotient_lc(cx, [1] * cx.n, l)
        assert neg == 0
        assert all(quotient_lc_dim(cx, 1, l, i) == 0 for i in range(1, 5))
        assert one >= 0


def test_suspended_bowtie_isolated_case_refused():
    cx = CORPUS["suspension-bowtie"].complex
    assert singularity_dimension(cx).singularity_dimension == 1
    with pytest.raises(ComplexError):
        isolated_quotient_lc(cx, [1] * cx.n, 1)
    assert not has_flc(cx, 1) and has_flc(cx, 2)
