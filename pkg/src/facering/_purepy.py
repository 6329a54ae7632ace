"""Pure-Python reference for the compiled elimination kernels.

Same contract as ``facering._kernels``: reduce a list-of-lists matrix in
place to reduced row echelon form and return the pivot columns.
"""

from __future__ import annotations


def rref_mod_p(a: list[list[int]], p: int) -> list[int]:
    nr = len(a)
    nc = len(a[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        prow = a[r] = [x * inv % p for x in a[r]]
        support = [j for j in range(c, nc) if prow[j]]
        for i in range(nr):
            f = a[i][c]
            if i == r or not f:
                continue
            row = a[i]
            for j in support:
                row[j] = (row[j] - f * prow[j]) % p
        pivots.append(c)
        r += 1
    return pivots


def rref_gf2k(a: list[list[int]], log: list[int], exp: list[int], order: int) -> list[int]:
    nr = len(a)
    nc = len(a[0]) if nr else 0
    group = order - 1
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        linv = group - log[a[r][c]]
        prow = a[r] = [exp[log[x] + linv] if x else 0 for x in a[r]]
        support = [j for j in range(c, nc) if prow[j]]
        for i in range(nr):
            x = a[i][c]
            if i == r or not x:
                continue
            lf = log[x]
            row = a[i]
            for j in support:
                row[j] ^= exp[lf + log[prow[j]]]
        pivots.append(c)
        r += 1
    return pivots


def rref_generic(a: list[list], field) -> list[int]:
    """Gauss-Jordan over any :class:`~facering.fields.FieldSpec` (Fractions for Q)."""
    nr = len(a)
    nc = len(a[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.inv(a[r][c])
        prow = a[r] = [field.mul(x, inv) for x in a[r]]
        support = [j for j in range(c, nc) if prow[j]]
        for i in range(nr):
            f = a[i][c]
            if i == r or not f:
                continue
            row = a[i]
            for j in support:
                row[j] = field.sub(row[j], field.mul(f, prow[j]))
        pivots.append(c)
        r += 1
    return pivots
