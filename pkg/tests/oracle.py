"""Independent reference computations used by the tests.

Nothing here imports the package's linear algebra: reduced Betti numbers come
from simplicial *homology* (boundary maps) ranked by a separate elimination,
so agreement with the cochain-side code is a genuine cross-check.
"""

from fractions import Fraction
from itertools import combinations


def rank_mod(rows, p):
    """Rank over F_p (p prime) or over Q when p == 0."""
    a = [[Fraction(x) if p == 0 else x % p for x in r] for r in rows]
    rk = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((r for r in range(rk, len(a)) if a[r][c]), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        inv = 1 / a[rk][c] if p == 0 else pow(a[rk][c], p - 2, p)
        for r in range(len(a)):
            if r != rk and a[r][c]:
                g = a[r][c] * inv
                a[r] = [x - g * y for x, y in zip(a[r], a[rk])]
                if p:
                    a[r] = [x % p for x in a[r]]
        rk += 1
    return rk


def all_faces(facets):
    out = {()}
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            out.update(combinations(f, k))
    return out


def reduced_betti(facets, q, p=0):
    """dim H̃_q over F_p (Q for p == 0) with the empty face in degree -1.

    ``facets == []`` is the void complex, ``[()]`` the empty complex.
    """
    if not facets:
        return 0
    faces = all_faces(facets)
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for v in by_dim.values():
        v.sort()

    def boundary(k):
        # ∂_k : C_k -> C_{k-1}
        src, dst = by_dim.get(k, []), by_dim.get(k - 1, [])
        if not src or not dst:
            return 0
        idx = {f: i for i, f in enumerate(dst)}
        rows = [[0] * len(src) for _ in dst]
        for j, f in enumerate(src):
            for pos in range(len(f)):
                rows[idx[f[:pos] + f[pos + 1:]]][j] = (-1) ** pos
        return rank_mod(rows, p)

    n_q = len(by_dim.get(q, []))
    return n_q - boundary(q) - boundary(q + 1)


def link_facets(facets, face):
    fs = set(face)
    return [tuple(v for v in f if v not in fs) for f in facets if fs <= set(f)]


def hochster_raw(facets, n, l, r, p=0):
    """Σ over U in N^n with |U| = r, s(U) a face, of dim H̃^{l-1-|s(U)|}(lk s(U)).

    Enumerates exponent vectors directly (stars and bars over all of N^n).
    """
    faces = all_faces(facets)
    total = 0
    for bars in combinations(range(r + n - 1), n - 1):
        prev, u = -1, []
        for b in bars + (r + n - 1,):
            u.append(b - prev - 1)
            prev = b
        s = tuple(t + 1 for t, x in enumerate(u) if x)
        if s in faces:
            total += reduced_betti(link_facets(facets, s), l - 1 - len(s), p)
    return total
