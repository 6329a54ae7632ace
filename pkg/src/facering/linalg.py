"""Dense exact linear algebra over a :class:`~facering.fields.FieldSpec`.

Elimination is dispatched to a backend chosen at import time:

* finite fields: the compiled ``facering._kernels`` extension when it was
  built, otherwise the pure-Python loops in ``facering._purepy``;
* rationals: python-flint's ``fmpq_mat`` when importable, otherwise
  ``fractions.Fraction`` Gauss-Jordan.

All backends return the (unique) reduced row echelon form, so results do not
depend on the backend.  Set ``FACERING_PURE=1`` to force the Python paths.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from facering import _purepy
from facering.fields import FieldSpec

try:
    from facering import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

try:
    import flint as _flint
except ImportError:
    _flint = None

if os.environ.get("FACERING_PURE"):
    _compiled = None
    _flint = None

_backend = {
    "finite": "cython" if _compiled is not None else "python",
    "rational": "flint" if _flint is not None else "fractions",
}


def backend() -> dict[str, str]:
    return dict(_backend)


def available_backends() -> dict[str, list[str]]:
    return {
        "finite": (["cython"] if _compiled is not None else []) + ["python"],
        "rational": (["flint"] if _flint is not None else []) + ["fractions"],
    }


@contextmanager
def use_backend(finite: str | None = None, rational: str | None = None):
    """Temporarily switch elimination backends (benchmarks and differential tests)."""
    saved = dict(_backend)
    avail = available_backends()
    for key, value in (("finite", finite), ("rational", rational)):
        if value is not None:
            if value not in avail[key]:
                raise ValueError(f"{key} backend {value!r} unavailable; have {avail[key]}")
            _backend[key] = value
    try:
        yield
    finally:
        _backend.clear()
        _backend.update(saved)


class Matrix:
    """A dense ``nrows x ncols`` matrix of field elements stored row-major.

    Shapes with a zero dimension are valid and remember both sizes.
    """

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: FieldSpec, nrows: int, ncols: int, rows: list[list] | None = None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            zero = field.zero
            rows = [[zero] * ncols for _ in range(nrows)]
        elif len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError(f"rows do not match shape {nrows}x{ncols}")
        self.rows = rows

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence], ncols: int | None = None) -> Matrix:
        data = [[field(x) for x in row] for row in rows]
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(data[0])
        return cls(field, len(data), ncols, data)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Iterable[Sequence], nrows: int) -> Matrix:
        cols = [list(c) for c in columns]
        rows = [[c[i] for c in cols] for i in range(nrows)]
        return cls(field, nrows, len(cols), rows)

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> Matrix:
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        m = cls(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij: tuple[int, int], value) -> None:
        i, j = ij
        self.rows[i][j] = value

    def column(self, j: int) -> list:
        return [row[j] for row in self.rows]

    def columns(self) -> list[list]:
        return [self.column(j) for j in range(self.ncols)]

    def copy(self) -> Matrix:
        return Matrix(self.field, self.nrows, self.ncols, [list(r) for r in self.rows])

    @property
    def T(self) -> Matrix:
        return Matrix(self.field, self.ncols, self.nrows, [list(c) for c in zip(*self.rows)] if self.nrows else
                      [[] for _ in range(self.ncols)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.format(x) for x in row) for row in self.rows)
        return f"Matrix<{self.field}>({self.nrows}x{self.ncols}: [{body}])"

    def is_zero(self) -> bool:
        return not any(x for row in self.rows for x in row)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        f = self.field
        out = Matrix(f, self.nrows, other.ncols)
        brows = other.rows
        gf2k = f.is_binary_extension
        p = f.characteristic
        for i, arow in enumerate(self.rows):
            acc = out.rows[i]
            for k, a in enumerate(arow):
                if not a:
                    continue
                brow = brows[k]
                if gf2k:
                    for j, b in enumerate(brow):
                        if b:
                            acc[j] ^= f.mul(a, b)
                else:
                    for j, b in enumerate(brow):
                        if b:
                            acc[j] += a * b
            if p and not gf2k:
                out.rows[i] = [x % p for x in acc]
        return out

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product."""
        return (self @ Matrix.from_columns(self.field, [vec], self.ncols)).column(0)

    def scaled(self, c) -> Matrix:
        f = self.field
        return Matrix(f, self.nrows, self.ncols, [[f.mul(c, x) for x in r] for r in self.rows])

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        f = self.field
        return Matrix(f, self.nrows, self.ncols,
                      [[f.add(x, y) for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def select_columns(self, idx: Sequence[int]) -> Matrix:
        return Matrix(self.field, self.nrows, len(idx), [[r[j] for j in idx] for r in self.rows])

    def select_rows(self, idx: Sequence[int]) -> Matrix:
        return Matrix(self.field, len(idx), self.ncols, [list(self.rows[i]) for i in idx])


def hstack(field: FieldSpec, nrows: int, blocks: Sequence[Matrix]) -> Matrix:
    rows = [[] for _ in range(nrows)]
    ncols = 0
    for b in blocks:
        if b.nrows != nrows:
            raise ValueError("row count mismatch in hstack")
        for r, br in zip(rows, b.rows):
            r.extend(br)
        ncols += b.ncols
    return Matrix(field, nrows, ncols, rows)


def vstack(field: FieldSpec, ncols: int, blocks: Sequence[Matrix]) -> Matrix:
    rows = []
    for b in blocks:
        if b.ncols != ncols:
            raise ValueError("column count mismatch in vstack")
        rows.extend(list(r) for r in b.rows)
    return Matrix(field, len(rows), ncols, rows)


# -- elimination -----------------------------------------------------------


def _rref_rows(field: FieldSpec, rows: list[list], ncols: int, need_rows: bool = True) -> tuple[list[list], list[int]]:
    """Reduce ``rows`` (not modified) and return (rref rows, pivot columns)."""
    nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return [list(r) for r in rows], []
    if field.is_rational:
        if _backend["rational"] == "flint":
            return _rref_flint(rows, nrows, ncols, need_rows)
        a = [list(r) for r in rows]
        return a, _purepy.rref_generic(a, field)
    if field.is_binary_extension:
        log, exp = field._tables
        if _backend["finite"] == "cython":
            arr = np.array(rows, dtype=np.int64)
            piv = _compiled.rref_gf2k(arr, _np_tables(field)[0], _np_tables(field)[1], field.order)
            return arr.tolist(), list(piv)
        a = [list(r) for r in rows]
        return a, _purepy.rref_gf2k(a, log, exp, field.order)
    p = field.characteristic
    if _backend["finite"] == "cython":
        arr = np.array(rows, dtype=np.int64)
        piv = _compiled.rref_mod_p(arr, p)
        return arr.tolist(), list(piv)
    a = [list(r) for r in rows]
    return a, _purepy.rref_mod_p(a, p)


_np_table_cache: dict[FieldSpec, tuple[np.ndarray, np.ndarray]] = {}


def _np_tables(field: FieldSpec) -> tuple[np.ndarray, np.ndarray]:
    if field not in _np_table_cache:
        log, exp = field._tables
        _np_table_cache[field] = (np.array(log, dtype=np.int64), np.array(exp, dtype=np.int64))
    return _np_table_cache[field]


def _to_fmpq(x: Fraction):
    if x.denominator == 1:
        return x.numerator
    return _flint.fmpq(x.numerator, x.denominator)


def _rref_flint(rows, nrows, ncols, need_rows):
    m = _flint.fmpq_mat(nrows, ncols, [_to_fmpq(x) for r in rows for x in r])
    red, rank = m.rref()
    pivots = []
    out = []
    # pivots are the leading entries of the first `rank` rows
    for i in range(rank):
        row = [red[i, j] for j in range(ncols)] if need_rows else None
        start = pivots[-1] + 1 if pivots else 0
        for j in range(start, ncols):
            if red[i, j] != 0:
                pivots.append(j)
                break
        if need_rows:
            out.append([Fraction(int(e.p), int(e.q)) for e in row])
    if need_rows:
        zero = Fraction(0)
        out.extend([zero] * ncols for _ in range(nrows - rank))
    return out, pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    rows, piv = _rref_rows(m.field, m.rows, m.ncols)
    return Matrix(m.field, m.nrows, m.ncols, rows), tuple(piv)


def rank(m: Matrix) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if m.field.is_rational and _backend["rational"] == "flint":
        return _flint.fmpq_mat(m.nrows, m.ncols, [_to_fmpq(x) for r in m.rows for x in r]).rank()
    # eliminate along the shorter side
    src = m if m.nrows <= m.ncols else m.T
    return len(_rref_rows(m.field, src.rows, src.ncols, need_rows=False)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Columns spanning the right kernel, one per free column of the RREF.

    The basis vector for free column ``f`` has a 1 in position ``f``, zeros in
    the other free positions, so the basis is itself in reduced echelon form.
    """
    f = m.field
    n = m.ncols
    if m.nrows == 0:
        return Matrix.identity(f, n)
    red, piv = rref(m)
    pivset = set(piv)
    free = [j for j in range(n) if j not in pivset]
    cols = []
    for fc in free:
        v = [f.zero] * n
        v[fc] = f.one
        for r, pc in enumerate(piv):
            x = red.rows[r][fc]
            if x:
                v[pc] = f.neg(x)
        cols.append(v)
    return Matrix.from_columns(f, cols, n)


def nullity(m: Matrix) -> int:
    return m.ncols - rank(m)


def solve_in_span(a: Matrix, b: Sequence) -> list | None:
    """Some ``x`` with ``a @ x == b``, or ``None`` when ``b`` is outside the column span."""
    f = a.field
    if len(b) != a.nrows:
        raise ValueError("right-hand side has the wrong length")
    aug = [list(r) + [f(bi)] for r, bi in zip(a.rows, b)]
    rows, piv = _rref_rows(f, aug, a.ncols + 1)
    if piv and piv[-1] == a.ncols:
        return None
    x = [f.zero] * a.ncols
    for r, pc in enumerate(piv):
        x[pc] = rows[r][a.ncols]
    return x


def det(m: Matrix):
    """Determinant by elimination (square matrices only)."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    f = m.field
    n = m.nrows
    a = [list(r) for r in m.rows]
    result = f.one
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return f.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = f.neg(result)
        pv = a[c][c]
        result = f.mul(result, pv)
        inv = f.inv(pv)
        for i in range(c + 1, n):
            x = a[i][c]
            if x:
                g = f.mul(x, inv)
                a[i] = [f.sub(u, f.mul(g, w)) for u, w in zip(a[i], a[c])]
    return result


def left_inverse(p: Matrix) -> tuple[Matrix, Matrix]:
    """For ``p`` of full column rank return ``(L, N)`` with ``L @ p == I``.

    ``N`` has ``nrows - ncols`` rows and ``N @ v == 0`` exactly when ``v`` lies
    in the column span of ``p``.
    """
    f = p.field
    r, c = p.nrows, p.ncols
    eye = Matrix.identity(f, r)
    aug = [pr + er for pr, er in zip(p.rows, eye.rows)]
    rows, piv = _rref_rows(f, aug, c + r)
    if tuple(piv[:c]) != tuple(range(c)):
        raise ValueError("matrix does not have full column rank")
    ell = Matrix(f, c, r, [row[c:] for row in rows[:c]])
    null = Matrix(f, r - c, r, [row[c:] for row in rows[c:]])
    return ell, null
