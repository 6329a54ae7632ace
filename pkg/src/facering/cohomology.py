"""Cohomology of pairs (Δ, cost F) and the maps induced by contrastar inclusions.

Cochains of the pair (Δ, cost F) are cochains supported on faces containing
F, so C^•(Δ, cost F) is a sub-complex of C^•(Δ) and for τ ⊆ σ the map
ι*: H(Δ, cost σ) -> H(Δ, cost τ) is induced by the inclusion of supports.
The empty face sits in degree -1, which makes H^•(Δ, cost ∅) the reduced
cohomology of Δ.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from facering.complex import ComplexError, Face, SimplicialComplex, as_face
from facering.fields import FieldSpec, QQ
from facering.linalg import Matrix, hstack, kernel_basis, left_inverse, rref


def _face_in(cx: SimplicialComplex, face: Sequence[int]) -> Face:
    face = as_face(face)
    if face not in cx:
        raise ComplexError(f"{face} is not a face of {cx!r}")
    return face


def pair_coboundary(cx: SimplicialComplex, face: Sequence[int], i: int, field: FieldSpec = QQ) -> Matrix:
    """Matrix of δ: C^i(Δ, cost F) -> C^{i+1}(Δ, cost F).

    Columns are indexed by ``faces_containing(F, i)``, rows by
    ``faces_containing(F, i+1)``; ``(δφ)(τ) = Σ_j (-1)^j φ(τ minus its j-th vertex)``.
    """
    face = _face_in(cx, face)
    return _coboundary(cx, face, i, field)


@lru_cache(maxsize=None)
def _coboundary(cx: SimplicialComplex, face: Face, i: int, field: FieldSpec) -> Matrix:
    src = cx.faces_containing(face, i) if i >= -1 else []
    dst = cx.faces_containing(face, i + 1) if i + 1 >= -1 else []
    col = {s: j for j, s in enumerate(src)}
    m = Matrix.zeros(field, len(dst), len(src))
    one, minus = field(1), field(-1)
    for r, tau in enumerate(dst):
        for pos in range(len(tau)):
            j = col.get(tau[:pos] + tau[pos + 1:])
            if j is not None:
                m.rows[r][j] = minus if pos % 2 else one
    return m


@dataclass(frozen=True, eq=False)
class CohomologyBasis:
    """A basis of H^i(Δ, cost F) by representative cocycles.

    ``representatives`` has one column per basis class, expressed in the
    cochain basis ``cochain_faces``.  ``decompose`` writes a cocycle as a
    combination of the representatives modulo coboundaries.
    """

    complex: SimplicialComplex
    face: Face
    degree: int
    field: FieldSpec
    cochain_faces: tuple[Face, ...]
    representatives: Matrix
    _coeffs: Matrix
    _membership: Matrix

    @property
    def dim(self) -> int:
        return self.representatives.ncols

    def decompose_many(self, cocycles: Matrix) -> Matrix:
        """Coefficients (one column per input column) of cocycles in this basis."""
        return self._coeffs @ cocycles

    def decompose(self, cocycle: Sequence) -> list:
        return self._coeffs.apply(cocycle)

    def is_cocycle(self, cochain: Sequence) -> bool:
        """True when ``cochain`` is a cocycle of the pair."""
        if not self.cochain_faces:
            return True
        return not any(self._membership.apply(cochain))


def cohomology_basis(cx: SimplicialComplex, face: Sequence[int], i: int, field: FieldSpec = QQ) -> CohomologyBasis:
    """Basis of H^i(Δ, cost F); memoized per (Δ, F, i, field)."""
    return _basis(cx, _face_in(cx, face), i, field)


@lru_cache(maxsize=None)
def _basis(cx: SimplicialComplex, face: Face, i: int, field: FieldSpec) -> CohomologyBasis:
    cochains = tuple(cx.faces_containing(face, i)) if i >= -1 else ()
    n = len(cochains)
    if n == 0:
        empty = Matrix.zeros(field, 0, 0)
        return CohomologyBasis(cx, face, i, field, cochains, empty, empty, empty)
    cocycles = kernel_basis(_coboundary(cx, face, i, field))
    incoming = _coboundary(cx, face, i - 1, field)
    if incoming.ncols:
        _, bpiv = rref(incoming)
        boundaries = incoming.select_columns(bpiv)
    else:
        boundaries = Matrix.zeros(field, n, 0)
    # coboundaries first, so the cocycles that add new pivots form a complement
    _, piv = rref(hstack(field, n, [boundaries, cocycles]))
    nb = boundaries.ncols
    reps = cocycles.select_columns([p - nb for p in piv if p >= nb])
    ell, _ = left_inverse(hstack(field, n, [reps, boundaries]))
    coeffs = ell.select_rows(range(reps.ncols))
    # rows of the coboundary matrix test the cocycle condition
    membership = _coboundary(cx, face, i, field)
    return CohomologyBasis(cx, face, i, field, cochains, reps, coeffs, membership)


def cohomology_dim(cx: SimplicialComplex, face: Sequence[int], i: int, field: FieldSpec = QQ) -> int:
    return cohomology_basis(cx, face, i, field).dim


def reduced_cohomology_dim(cx: SimplicialComplex, i: int, field: FieldSpec = QQ) -> int:
    """dim H̃^i(Δ; k); the empty complex has H̃^{-1} = k, the void complex has nothing."""
    if cx.is_void:
        return 0
    return _basis(cx, (), i, field).dim


def induced_map(cx: SimplicialComplex, sigma: Sequence[int], tau: Sequence[int], i: int,
                field: FieldSpec = QQ) -> Matrix:
    """ι*: H^i(Δ, cost σ) -> H^i(Δ, cost τ) for τ ⊆ σ, in the fixed bases."""
    sigma = _face_in(cx, sigma)
    tau = _face_in(cx, tau)
    if not set(tau) <= set(sigma):
        raise ComplexError(f"{tau} is not contained in {sigma}")
    return _induced(cx, sigma, tau, i, field)


@lru_cache(maxsize=None)
def _induced(cx: SimplicialComplex, sigma: Face, tau: Face, i: int, field: FieldSpec) -> Matrix:
    src = _basis(cx, sigma, i, field)
    dst = _basis(cx, tau, i, field)
    if src.dim == 0 or dst.dim == 0:
        return Matrix.zeros(field, dst.dim, src.dim)
    if sigma == tau:
        return Matrix.identity(field, src.dim)
    pos = {f: k for k, f in enumerate(dst.cochain_faces)}
    embedded = Matrix.zeros(field, len(dst.cochain_faces), src.dim)
    for k, f in enumerate(src.cochain_faces):
        embedded.rows[pos[f]] = list(src.representatives.rows[k])
    return dst.decompose_many(embedded)


def link_iso_check(cx: SimplicialComplex, face: Sequence[int], i: int, field: FieldSpec = QQ) -> bool:
    """Whether dim H^i(Δ, cost F) equals dim H̃^{i-|F|}(lk F)."""
    face = _face_in(cx, face)
    lhs = _basis(cx, face, i, field).dim
    rhs = reduced_cohomology_dim(cx.link(face), i - len(face), field)
    return lhs == rhs


def clear_caches() -> None:
    for fn in (_coboundary, _basis, _induced):
        fn.cache_clear()
