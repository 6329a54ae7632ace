"""Local cohomology of k[Δ]/(θ_1, ..., θ_m) and the finite-local-cohomology test.

For 0 < l <= d - m and i >= 1 the piece of degree -i has dimension
Σ_F C(i-1, |F|-m-1) · dim H^{l+m-1}(Δ, cost F), independently of the generic
forms chosen.  Since C(i-1, |F|-m-1) is eventually positive exactly when
|F| > m, finiteness is decided by which pair cohomologies vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from facering.cohomology import cohomology_dim, induced_map, reduced_cohomology_dim
from facering.complex import ComplexError, SimplicialComplex
from facering.fields import FieldSpec, QQ, generic_extension
from facering.graebe import GenericMatrix, KernelReport, kernel_dims, sweep_matrix
from facering.hochster import NEG_INFINITY, SingularityDimension, below, binom, singularity_dimension
from facering.linalg import Matrix, hstack, rank


def _check_range(cx: SimplicialComplex, m: int, l: int | None = None, i: int | None = None) -> None:
    d = cx.d
    if not 0 <= m <= d:
        raise ValueError(f"m={m} outside 0..{d}")
    if l is not None and not 0 < l <= d - m:
        raise ValueError(f"l={l} outside 1..{d - m}")
    if i is not None and i < 1:
        raise ValueError(f"degree index i={i} must be >= 1")


def quotient_coefficients(cx: SimplicialComplex, m: int, l: int, field: FieldSpec = QQ) -> dict[int, int]:
    """``{k: Σ_{|F|=k} dim H^{l+m-1}(Δ, cost F)}`` for the faces with |F| > m."""
    _check_range(cx, m, l)
    out: dict[int, int] = {}
    for face in cx.faces():
        if len(face) > m:
            dim = cohomology_dim(cx, face, l + m - 1, field)
            if dim:
                out[len(face)] = out.get(len(face), 0) + dim
    return out


def quotient_lc_dim(cx: SimplicialComplex, m: int, l: int, i: int, field: FieldSpec = QQ) -> int:
    """dim H^l_m(k[Δ]/(θ_1..θ_m))_{-i} for 0 < l <= d - m, i >= 1."""
    _check_range(cx, m, l, i)
    return sum(binom(i - 1, k - m - 1) * dim for k, dim in quotient_coefficients(cx, m, l, field).items())


@dataclass
class QuotientLcTable:
    """Dimensions of H^l_m of the quotient by m forms in degrees -1, -2, ..., -max_i."""

    m: int
    field: FieldSpec
    max_i: int
    values: dict[int, dict[int, int]] = dc_field(default_factory=dict)
    coefficients: dict[int, dict[int, int]] = dc_field(default_factory=dict)
    isolated: dict[int, tuple[int, int, int]] = dc_field(default_factory=dict)
    flc: bool = False

    def to_json(self) -> dict:
        out = {
            "m": self.m,
            "field": str(self.field),
            "max_i": self.max_i,
            "flc": self.flc,
            "rows": {
                str(l): {
                    "negative_degrees": {str(-i): v for i, v in sorted(self.values[l].items())},
                    "face_size_coefficients": {str(k): v for k, v in sorted(self.coefficients[l].items())},
                }
                for l in sorted(self.values)
            },
        }
        if self.isolated:
            out["isolated_singularities"] = {
                str(l): {"negative": v[0], "0": v[1], "1": v[2], "2+": 0, "2+_note": "derived, not quoted"}
                for l, v in sorted(self.isolated.items())
            }
        return out


def quotient_lc_table(cx: SimplicialComplex, m: int, field: FieldSpec = QQ, max_i: int = 4,
                      coefficients: Sequence | None = None) -> QuotientLcTable:
    """Table for 0 < l <= d - m; adds the degree 0 and 1 entries for one form and isolated singularities."""
    _check_range(cx, m)
    table = QuotientLcTable(m, field, max_i)
    for l in range(1, cx.d - m + 1):
        table.coefficients[l] = quotient_coefficients(cx, m, l, field)
        table.values[l] = {i: quotient_lc_dim(cx, m, l, i, field) for i in range(1, max_i + 1)}
    table.flc = has_flc(cx, m, field)
    if m == 1 and singularity_dimension(cx, field).singularity_dimension == 0:
        a = coefficients if coefficients is not None else [field(1)] * cx.n
        for l in range(1, cx.d - 1):
            table.isolated[l] = isolated_quotient_lc(cx, a, l, field)
    return table


def f_map(cx: SimplicialComplex, coefficients: Sequence, i: int, field: FieldSpec = QQ) -> Matrix:
    """f^i = Σ_t a_t ι*: ⊕_t H^i(Δ, cost {t}) -> H^i(Δ, ∅), blocks ordered by vertex."""
    target = reduced_cohomology_dim(cx, i, field)
    blocks = [induced_map(cx, (t,), (), i, field).scaled(field(coefficients[t - 1])) for t in cx.vertices]
    return hstack(field, target, blocks)


def isolated_quotient_lc(cx: SimplicialComplex, coefficients: Sequence, l: int,
                         field: FieldSpec = QQ) -> tuple[int, int, int]:
    """Dims of H^l_m(k[Δ]/(θ)) in degrees (< 0, 0, 1) for one form with nonzero coefficients.

    Degree 0 is coker f^{l-1} ⊕ ker f^l and degree 1 is H^l(Δ, ∅).  Degrees
    >= 2 vanish (positive degrees of H_m(k[Δ]) vanish, and the long exact
    sequence then forces it); callers report them as 0.
    """
    if len(coefficients) != cx.n:
        raise ValueError("need one coefficient per vertex")
    if any(not field(a) for a in coefficients):
        raise ValueError("all coefficients of the form must be nonzero")
    if singularity_dimension(cx, field).singularity_dimension != 0:
        raise ComplexError("complex does not have isolated singularities")
    if not 0 <= l < cx.d - 1:
        raise ValueError(f"need 0 <= l < d - 1 = {cx.d - 1}")
    f_prev = f_map(cx, coefficients, l - 1, field)
    f_cur = f_map(cx, coefficients, l, field)
    coker_prev = f_prev.nrows - rank(f_prev)
    ker_cur = f_cur.ncols - rank(f_cur)
    return 0, coker_prev + ker_cur, reduced_cohomology_dim(cx, l, field)


def has_flc(cx: SimplicialComplex, m: int, field: FieldSpec = QQ) -> bool:
    """Finite local cohomology of the quotient by m generic forms, from the vanishing criterion."""
    _check_range(cx, m)
    for face in cx.faces():
        if len(face) <= m:
            continue
        for j in range(m, cx.d - 1):
            if cohomology_dim(cx, face, j, field):
                return False
    return True


@dataclass(frozen=True)
class TheoremVerdict:
    m: int
    singularity_dimension: SingularityDimension
    singular_below_m: bool
    flc_by_formula: bool
    flc_by_bruteforce: bool | None
    agree: bool
    field: str
    bruteforce_field: str | None = None
    matrix: GenericMatrix | None = None
    reports: tuple[KernelReport, ...] = ()
    bridge_mismatches: tuple[tuple[int, int], ...] = ()

    def to_json(self) -> dict:
        s = self.singularity_dimension
        return {
            "m": self.m,
            "singularity_dimension": "-inf" if s is NEG_INFINITY else s,
            "singularity_dimension_below_m": self.singular_below_m,
            "flc_by_formula": self.flc_by_formula,
            "flc_by_bruteforce": self.flc_by_bruteforce,
            "agree": self.agree,
            "field": self.field,
            "bruteforce_field": self.bruteforce_field,
            "matrix": self.matrix.to_json() if self.matrix is not None else None,
            "kernel_reports": [r.to_json() for r in self.reports],
            "bridge_mismatches": [list(x) for x in self.bridge_mismatches],
        }


def check_main_theorem(cx: SimplicialComplex, m: int, field: FieldSpec = QQ, with_bruteforce: bool = False,
                       seed: int = 0, max_offset: int = 3) -> TheoremVerdict:
    """Compare ``singularity dimension < m`` with finite local cohomology of the quotient.

    With ``with_bruteforce`` the kernels ker^{l+m}_{m, i+m-1} for l + m <= d - 1
    and 1 <= i <= max_offset + 1 are computed with a certified matrix and must
    match :func:`quotient_lc_dim`.  Brute-force FLC means the kernel vanishes at
    i = max(max_offset + 1, d - m) for every such l: from there on every binomial
    C(i-1, |F|-m-1) with |F| > m is positive, so a nonzero kernel there never
    dies out.  Over F_2 the brute force runs in GF(2^16).
    """
    if not cx.is_pure:
        raise ComplexError("the theorem needs a pure complex")
    _check_range(cx, m)
    sd = singularity_dimension(cx, field).singularity_dimension
    lhs = below(sd, m)
    flc = has_flc(cx, m, field)
    if not with_bruteforce:
        return TheoremVerdict(m, sd, lhs, flc, None, lhs == flc, str(field))

    bf_field = generic_extension(field)
    a = sweep_matrix(cx, bf_field, seed)
    reports = []
    mismatches = []
    growing = False
    for l in range(1, cx.d - m):
        for i in range(1, max_offset + 2):
            rep = kernel_dims(cx, l + m, m, i + m - 1, a, bf_field)
            reports.append(rep)
            if rep.brute_dim != quotient_lc_dim(cx, m, l, i, field):
                mismatches.append((l, i))
        probe = max(max_offset + 1, cx.d - m)
        if kernel_dims(cx, l + m, m, probe + m - 1, a, bf_field).brute_dim:
            growing = True
    flc_bf = not growing
    agree = lhs == flc == flc_bf and not mismatches
    return TheoremVerdict(m, sd, lhs, flc, flc_bf, agree, str(field), str(bf_field), a,
                          tuple(reports), tuple(mismatches))
