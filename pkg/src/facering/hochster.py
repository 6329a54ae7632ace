"""Graded dimensions of H^l_m(k[Δ]) and the link conditions built on them.

The ℤ-graded piece of degree -(i+1) collects the pair cohomology
H^{l-1}(Δ, cost F) once for every exponent vector with support F and total
degree i+1, of which there are C(i, |F|-1).
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Union

from facering.cohomology import cohomology_dim, reduced_cohomology_dim
from facering.complex import ComplexError, Face, SimplicialComplex
from facering.fields import FieldSpec, QQ


class NegInfinity(enum.Enum):
    """Singularity dimension of a complex without singular faces."""

    NEG_INFINITY = "-inf"

    def __str__(self) -> str:
        return "-inf"


NEG_INFINITY = NegInfinity.NEG_INFINITY

SingularityDimension = Union[int, NegInfinity]


def below(s: SingularityDimension, m: int) -> bool:
    """``s < m`` with -∞ below every integer."""
    return True if s is NEG_INFINITY else s < m


def binom(a: int, b: int) -> int:
    """Binomial coefficient with C(a, b) = 0 unless 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


class PurityWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Witness:
    face: Face
    degree: int
    dim: int


@dataclass(frozen=True)
class SingularityVerdict:
    singularity_dimension: SingularityDimension
    witnesses: tuple[Witness, ...]
    pure: bool
    field: FieldSpec

    def below(self, m: int) -> bool:
        return below(self.singularity_dimension, m)


def face_witnesses(cx: SimplicialComplex, face: Face, field: FieldSpec = QQ) -> list[Witness]:
    """Nonzero H̃^i(lk F) with i < d - 1 - |F|; empty iff F is nonsingular."""
    lk = cx.link(face)
    out = []
    for i in range(-1, cx.d - 1 - len(face)):
        dim = reduced_cohomology_dim(lk, i, field)
        if dim:
            out.append(Witness(face, i, dim))
    return out


def singularity_dimension(cx: SimplicialComplex, field: FieldSpec = QQ) -> SingularityVerdict:
    if cx.is_void:
        raise ComplexError("the void complex has no singularity dimension")
    if not cx.is_pure:
        warnings.warn("complex is not pure; using d = dim + 1", PurityWarning, stacklevel=2)
    witnesses: list[Witness] = []
    for face in cx.faces():
        witnesses.extend(face_witnesses(cx, face, field))
    if not witnesses:
        return SingularityVerdict(NEG_INFINITY, (), cx.is_pure, field)
    top = max(len(w.face) - 1 for w in witnesses)
    return SingularityVerdict(top, tuple(witnesses), cx.is_pure, field)


def is_cohen_macaulay(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PurityWarning)
        return singularity_dimension(cx, field).singularity_dimension is NEG_INFINITY


def is_buchsbaum(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    if not cx.is_pure:
        raise ComplexError("the Buchsbaum criterion applies to pure complexes only")
    return singularity_dimension(cx, field).below(0)


# -- graded dimensions -------------------------------------------------------


def _check_l(cx: SimplicialComplex, l: int) -> None:
    if not 0 <= l <= cx.d:
        raise ValueError(f"cohomological degree {l} outside 0..{cx.d}")


def pair_dims_by_size(cx: SimplicialComplex, degree: int, field: FieldSpec = QQ) -> dict[int, int]:
    """``{k: Σ_{|F|=k} dim H^degree(Δ, cost F)}`` over nonempty faces."""
    out: dict[int, int] = {}
    for face in cx.faces():
        if face:
            dim = cohomology_dim(cx, face, degree, field)
            if dim:
                out[len(face)] = out.get(len(face), 0) + dim
    return out


def lc_graded_dim(cx: SimplicialComplex, l: int, j: int, field: FieldSpec = QQ) -> int:
    """dim_k H^l_m(k[Δ])_j."""
    _check_l(cx, l)
    if j >= 1:
        return 0
    if j == 0:
        return reduced_cohomology_dim(cx, l - 1, field)
    i = -j - 1
    return sum(binom(i, k - 1) * dim for k, dim in pair_dims_by_size(cx, l - 1, field).items())


def lc_tail_coefficients(cx: SimplicialComplex, l: int, field: FieldSpec = QQ) -> list[int]:
    """``c`` with dim H^l_m(k[Δ])_{-(i+1)} = Σ_k c[k]·C(i, k) for all i >= 0."""
    _check_l(cx, l)
    sizes = pair_dims_by_size(cx, l - 1, field)
    if not sizes:
        return []
    coeffs = [0] * max(sizes)
    for k, dim in sizes.items():
        coeffs[k - 1] += dim
    return coeffs


def binomial_to_monomial(coeffs: list[int]) -> list[Fraction]:
    """Convert Σ c_k C(i, k) to Σ a_k i^k."""
    out = [Fraction(0)] * max(len(coeffs), 1)
    for k, c in enumerate(coeffs):
        if not c:
            continue
        # C(i, k) = i (i-1) ... (i-k+1) / k!
        poly = [Fraction(1)]
        for r in range(k):
            poly = [Fraction(0)] + poly
            for e in range(len(poly) - 1):
                poly[e] -= r * poly[e + 1]
        scale = Fraction(c, math.factorial(k))
        for e, a in enumerate(poly):
            out[e] += scale * a
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def format_polynomial(coeffs: list[Fraction], var: str = "i") -> str:
    terms = []
    for e, a in enumerate(coeffs):
        if a == 0:
            continue
        mag = abs(a)
        num = "" if (mag == 1 and e) else (str(mag.numerator) if mag.denominator == 1 else f"{mag}")
        if e == 0:
            body = num
        else:
            sep = " " if num and mag.denominator != 1 else ""
            body = f"{num}{sep}{var}" + (f"^{e}" if e > 1 else "")
        terms.append(("-" if a < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


@dataclass
class GradedDimTable:
    """Dimensions of H^l_m(k[Δ])_j over a degree window plus the closed-form tail."""

    field: FieldSpec
    d: int
    window: tuple[int, int]
    values: dict[int, dict[int, int]] = dc_field(default_factory=dict)
    tails: dict[int, list[int]] = dc_field(default_factory=dict)

    def tail_polynomial(self, l: int) -> list[Fraction]:
        return binomial_to_monomial(self.tails[l])

    def tail_text(self, l: int) -> str:
        return format_polynomial(self.tail_polynomial(l))

    def to_json(self) -> dict:
        return {
            "field": str(self.field),
            "window": list(self.window),
            "rows": {
                str(l): {
                    "degrees": {str(j): v for j, v in sorted(self.values[l].items())},
                    "tail_binomial_coefficients": self.tails[l],
                    "tail_polynomial": [_frac(a) for a in self.tail_polynomial(l)],
                    "tail_text": self.tail_text(l),
                }
                for l in sorted(self.values)
            },
        }


def _frac(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def graded_dim_table(cx: SimplicialComplex, ls: list[int] | None = None, lowest: int = -4,
                     field: FieldSpec = QQ) -> GradedDimTable:
    """Table over degrees ``lowest..1`` for each requested ``l`` (default 0..d)."""
    ls = list(range(cx.d + 1)) if ls is None else ls
    table = GradedDimTable(field, cx.d, (lowest, 1))
    for l in ls:
        _check_l(cx, l)
        table.values[l] = {j: lc_graded_dim(cx, l, j, field) for j in range(lowest, 2)}
        table.tails[l] = lc_tail_coefficients(cx, l, field)
    return table
