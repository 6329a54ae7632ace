"""Explicit matrices for the k[Δ]-module structure of H^l_m(k[Δ]).

The graded piece of degree -r is the direct sum, over exponent vectors U with
|U| = r and support s(U) in Δ, of H^{l-1}(Δ, cost s(U)).  Multiplication by
x_t sends the U-block to the (U - e_t)-block by ι* (identity when the support
does not shrink), so a linear form θ_p = Σ a_{t,p} x_t becomes a block matrix
between consecutive graded pieces.  Intersections of the kernels of θ_1..θ_m
are computed by stacking these matrices.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from facering.cohomology import CohomologyBasis, _basis, _induced, cohomology_dim
from facering.complex import Face, SimplicialComplex, as_face
from facering.fields import FieldSpec, QQ
from facering.hochster import binom
from facering.linalg import Matrix, det, kernel_basis, rank, vstack

MAX_CERTIFY_VERTICES = 16
DEFAULT_RETRIES = 64

ExponentVector = tuple[int, ...]


class GenericityError(RuntimeError):
    pass


@dataclass(frozen=True)
class GenericMatrix:
    """Coefficients a_{t,p} of the forms θ_p = Σ_t a_{t,p} x_t, stored as ``entries[t-1][p-1]``."""

    n: int
    d: int
    field: FieldSpec
    entries: tuple[tuple, ...]
    provenance: str
    seed: int | None = None
    attempts: int = 1
    certified: bool = False

    def coefficient(self, t: int, p: int):
        """a_{t,p} with 1-based vertex ``t`` and form index ``p``."""
        return self.entries[t - 1][p - 1]

    def describe(self) -> str:
        s = f"{self.provenance}"
        if self.seed is not None:
            s += f"(seed={self.seed})"
        return s + (" certified" if self.certified else " uncertified")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "forms": self.d,
            "field": str(self.field),
            "provenance": self.provenance,
            "seed": self.seed,
            "attempts": self.attempts,
            "certified": self.certified,
            "entries": [[self.field.format(x) for x in row] for row in self.entries],
        }


def certify(entries: Sequence[Sequence], field: FieldSpec) -> bool:
    """True iff every square submatrix of the n x d matrix is nonsingular."""
    n = len(entries)
    d = len(entries[0]) if n else 0
    if n > MAX_CERTIFY_VERTICES:
        raise GenericityError(f"refusing to certify minors of a matrix with {n} > {MAX_CERTIFY_VERTICES} rows")
    for k in range(1, min(n, d) + 1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(d), k):
                sub = Matrix(field, k, k, [[entries[r][c] for c in cols] for r in rows])
                if not det(sub):
                    return False
    return True


def _vandermonde(n: int, d: int, field: FieldSpec) -> tuple[tuple, ...]:
    if field.is_binary_extension:
        nodes = [field.from_bits(t) for t in range(1, n + 1)]
    else:
        nodes = [field(t) for t in range(1, n + 1)]
    rows = []
    for x in nodes:
        row, power = [], field.one
        for _ in range(d):
            row.append(power)
            power = field.mul(power, x)
        rows.append(tuple(row))
    return tuple(rows)


def _sample(n: int, d: int, field: FieldSpec, seed: int) -> tuple[tuple, ...]:
    rng = random.Random(seed)
    if field.is_rational:
        draw = lambda: Fraction(rng.randint(-10_000, 10_000))  # noqa: E731
    elif field.is_binary_extension:
        draw = lambda: rng.randrange(field.order)  # noqa: E731
    else:
        draw = lambda: rng.randrange(field.characteristic)  # noqa: E731
    return tuple(tuple(draw() for _ in range(d)) for _ in range(n))


def generic_matrix(n: int, d: int, field: FieldSpec = QQ, strategy: str = "vandermonde",
                   seed: int = 0, max_retries: int = DEFAULT_RETRIES) -> GenericMatrix:
    """An n x d coefficient matrix with every square minor certified nonzero.

    ``strategy`` is ``"vandermonde"`` (a_{t,p} = t^{p-1}; no resampling) or
    ``"seeded"`` (uniform entries from ``random.Random(seed)``; on a failed
    certification the seed is incremented, up to ``max_retries`` times).
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got n={n}, d={d}")
    if n > MAX_CERTIFY_VERTICES:
        raise GenericityError(f"refusing to certify minors of a matrix with {n} > {MAX_CERTIFY_VERTICES} rows")
    if strategy == "vandermonde":
        entries = _vandermonde(n, d, field)
        if not certify(entries, field):
            raise GenericityError(f"Vandermonde matrix {n}x{d} is not generic over {field}")
        return GenericMatrix(n, d, field, entries, "vandermonde", None, 1, True)
    if strategy != "seeded":
        raise ValueError(f"unknown strategy {strategy!r}")
    for attempt in range(max_retries):
        s = seed + attempt
        entries = _sample(n, d, field, s)
        if certify(entries, field):
            return GenericMatrix(n, d, field, entries, "seeded", s, attempt + 1, True)
    raise GenericityError(f"no generic {n}x{d} matrix over {field} after {max_retries} samples "
                          f"starting at seed {seed}; the field is too small")


def explicit_matrix(entries: Sequence[Sequence], field: FieldSpec) -> GenericMatrix:
    """Wrap given coefficients; ``certified`` records whether the minors check passed."""
    rows = tuple(tuple(field(x) for x in row) for row in entries)
    ok = certify(rows, field)
    return GenericMatrix(len(rows), len(rows[0]), field, rows, "explicit", None, 1, ok)


# -- graded pieces -------------------------------------------------------------


def support(u: ExponentVector) -> Face:
    return tuple(t + 1 for t, x in enumerate(u) if x)


def compositions(total: int, parts: int):
    """Tuples of ``parts`` positive integers summing to ``total``, lexicographically."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def exponent_vectors(cx: SimplicialComplex, r: int) -> list[ExponentVector]:
    """U in ℕ^n with |U| = r and s(U) in Δ, in lexicographic order."""
    if r < 0 or cx.is_void:
        return []
    out = []
    for face in cx.faces():
        if len(face) > r or (r > 0 and not face):
            continue
        for parts in compositions(r, len(face)):
            u = [0] * cx.n
            for v, x in zip(face, parts):
                u[v - 1] = x
            out.append(tuple(u))
    out.sort()
    return out


@dataclass(frozen=True, eq=False)
class GradedPiece:
    """H^l_m(k[Δ]) in degree -r as a direct sum of pair-cohomology blocks."""

    complex: SimplicialComplex
    l: int
    r: int
    field: FieldSpec
    index: tuple[ExponentVector, ...]
    blocks: tuple[CohomologyBasis, ...]
    offsets: dict

    @property
    def total_dim(self) -> int:
        return sum(b.dim for b in self.blocks)

    def block(self, u: ExponentVector) -> CohomologyBasis:
        return self.blocks[self.index.index(u)]


def graded_piece(cx: SimplicialComplex, l: int, r: int, field: FieldSpec = QQ) -> GradedPiece:
    if r < 0:
        raise ValueError("total degree r must be nonnegative")
    return _piece(cx, l, r, field)


@lru_cache(maxsize=None)
def _piece(cx: SimplicialComplex, l: int, r: int, field: FieldSpec) -> GradedPiece:
    index = tuple(exponent_vectors(cx, r))
    blocks = tuple(_basis(cx, support(u), l - 1, field) for u in index)
    offsets = {}
    pos = 0
    for u, b in zip(index, blocks):
        offsets[u] = pos
        pos += b.dim
    return GradedPiece(cx, l, r, field, index, blocks, offsets)


def _require(a: GenericMatrix, field: FieldSpec, allow_uncertified: bool) -> None:
    if a.field != field:
        raise ValueError(f"matrix lives over {a.field}, computation over {field}")
    if not a.certified and not allow_uncertified:
        raise GenericityError("coefficient matrix is not certified generic")


def theta_action(cx: SimplicialComplex, l: int, i: int, p: int, a: GenericMatrix,
                 field: FieldSpec = QQ, allow_uncertified: bool = False) -> Matrix:
    """Matrix of ·θ_p from degree -(i+1) to degree -i of H^l_m(k[Δ]); ``p`` is 1-based."""
    _require(a, field, allow_uncertified)
    if not 1 <= p <= a.d:
        raise ValueError(f"form index {p} outside 1..{a.d}")
    if a.n != cx.n:
        raise ValueError("coefficient matrix and complex disagree on n")
    return _theta(cx, l, i, p, a, field)


@lru_cache(maxsize=None)
def _theta(cx: SimplicialComplex, l: int, i: int, p: int, a: GenericMatrix, field: FieldSpec) -> Matrix:
    dom = _piece(cx, l, i + 1, field)
    cod = _piece(cx, l, i, field)
    m = Matrix.zeros(field, cod.total_dim, dom.total_dim)
    for u, blk in zip(dom.index, dom.blocks):
        if not blk.dim:
            continue
        s_u = support(u)
        col0 = dom.offsets[u]
        for t in s_u:
            coef = a.entries[t - 1][p - 1]
            if not coef:
                continue
            tt = list(u)
            tt[t - 1] -= 1
            tt = tuple(tt)
            s_t = support(tt)
            phi = _induced(cx, s_u, s_t, l - 1, field)
            if not phi.nrows:
                continue
            row0 = cod.offsets[tt]
            for r_, prow in enumerate(phi.rows):
                out = m.rows[row0 + r_]
                for c_, x in enumerate(prow):
                    if x:
                        out[col0 + c_] = field.add(out[col0 + c_], field.mul(coef, x))
    return m


# -- kernel intersections --------------------------------------------------------


@lru_cache(maxsize=None)
def _kernel(cx: SimplicialComplex, l: int, m: int, i: int, a: GenericMatrix, field: FieldSpec) -> Matrix:
    """Columns spanning ker^l_{m,i} inside the degree -(i+1) piece."""
    dom = _piece(cx, l, i + 1, field)
    if m == 0 or dom.total_dim == 0:
        return Matrix.identity(field, dom.total_dim)
    stacked = vstack(field, dom.total_dim, [_theta(cx, l, i, p, a, field) for p in range(1, m + 1)])
    return kernel_basis(stacked)


def closed_form_kernel_dim(cx: SimplicialComplex, l: int, m: int, i: int, field: FieldSpec = QQ) -> int:
    """Σ_F C(i-m, |F|-m-1) · dim H^{l-1}(Δ, cost F)."""
    total = 0
    for face in cx.faces():
        c = binom(i - m, len(face) - m - 1)
        if c:
            total += c * cohomology_dim(cx, face, l - 1, field)
    return total


@dataclass(frozen=True)
class KernelReport:
    l: int
    m: int
    i: int
    brute_dim: int
    closed_form_dim: int
    surjective_onto_previous: bool | None
    field: str
    matrix_provenance: str

    @property
    def equal(self) -> bool:
        return self.brute_dim == self.closed_form_dim

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "m": self.m,
            "i": self.i,
            "brute_dim": self.brute_dim,
            "closed_form_dim": self.closed_form_dim,
            "equal": self.equal,
            "surjective_onto_previous": self.surjective_onto_previous,
            "field": self.field,
            "matrix_provenance": self.matrix_provenance,
        }


def kernel_dim(cx: SimplicialComplex, l: int, m: int, i: int, a: GenericMatrix,
               field: FieldSpec = QQ, allow_uncertified: bool = False) -> int:
    """dim ker^l_{m,i} by stacked elimination."""
    _require(a, field, allow_uncertified)
    if m > a.d:
        raise ValueError(f"only {a.d} forms available, asked for {m}")
    return _kernel(cx, l, m, i, a, field).ncols


def kernel_dims(cx: SimplicialComplex, l: int, m: int, i: int, a: GenericMatrix,
                field: FieldSpec = QQ, allow_uncertified: bool = False) -> KernelReport:
    """Brute-force and closed-form dim ker^l_{m,i}, plus surjectivity of ·θ_{m+1}.

    Surjectivity onto ker^l_{m,i-1} is tested for i >= m+1 when ``a`` has an
    (m+1)-st column; without one it is reported as the vacuous statement
    ``dim ker^l_{m,i-1} == 0``.
    """
    _require(a, field, allow_uncertified)
    d = cx.d
    if not 0 <= m <= d:
        raise ValueError(f"m={m} outside 0..{d}")
    if l > d:
        raise ValueError(f"l={l} exceeds d={d}")
    if i < m:
        raise ValueError(f"need i >= m, got i={i}, m={m}")
    if m > a.d:
        raise ValueError(f"only {a.d} forms available, asked for {m}")
    ker = _kernel(cx, l, m, i, a, field)
    surjective = None
    if i >= m + 1:
        prev = _kernel(cx, l, m, i - 1, a, field).ncols
        if m + 1 <= a.d:
            image = _theta(cx, l, i, m + 1, a, field) @ ker
            surjective = rank(image) == prev
        else:
            surjective = prev == 0
    return KernelReport(l, m, i, ker.ncols, closed_form_kernel_dim(cx, l, m, i, field),
                        surjective, str(field), a.describe())


def enumerate_w(face: Sequence[int], m: int, r: int, n: int | None = None) -> list[ExponentVector]:
    """Exponent vectors with support ``face``, total ``r``, and the first m support entries equal to 1."""
    face = as_face(face)
    if len(face) <= m:
        raise ValueError(f"need |F| > m, got |F|={len(face)}, m={m}")
    if r < len(face):
        raise ValueError(f"need r >= |F|, got r={r}")
    n = max(face) if n is None else n
    out = []
    for parts in compositions(r - m, len(face) - m):
        u = [0] * n
        for v in face[:m]:
            u[v - 1] = 1
        for v, x in zip(face[m:], parts):
            u[v - 1] = x
        out.append(tuple(u))
    out.sort()
    return out


def sweep_matrix(cx: SimplicialComplex, field: FieldSpec, seed: int = 0) -> GenericMatrix:
    """The certified matrix used for sweeps: d+1 forms when n allows, Vandermonde over Q."""
    forms = min(cx.d + 1, cx.n)
    if field.is_rational:
        return generic_matrix(cx.n, forms, field, "vandermonde")
    return generic_matrix(cx.n, forms, field, "seeded", seed)


def kernel_sweep(cx: SimplicialComplex, field: FieldSpec, a: GenericMatrix | None = None,
                 seed: int = 0, max_offset: int = 3) -> tuple[list[KernelReport], GenericMatrix]:
    """KernelReports for 1 <= l <= d, 0 <= m <= d, m <= i <= m + max_offset.

    Over a finite field a failing equality is re-run once with a freshly
    sampled certified matrix before being reported.
    """
    if a is None:
        a = sweep_matrix(cx, field, seed)
    d = cx.d
    params = [(l, m, i) for m in range(d + 1) for l in range(1, d + 1) for i in range(m, m + max_offset + 1)]
    reports = [kernel_dims(cx, l, m, i, a, field) for l, m, i in params]
    bad = [r for r in reports if not r.equal or r.surjective_onto_previous is False]
    if bad and not field.is_rational and a.provenance == "seeded":
        a = generic_matrix(cx.n, a.d, field, "seeded", (a.seed or 0) + 1)
        reports = [kernel_dims(cx, l, m, i, a, field) for l, m, i in params]
    return reports, a


def clear_caches() -> None:
    for fn in (_piece, _theta, _kernel):
        fn.cache_clear()
