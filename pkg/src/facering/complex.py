"""Finite simplicial complexes on the vertex set {1, ..., n}.

A face is a strictly increasing tuple of vertex labels; ``()`` is the empty
face.  Complexes are immutable and hashable so they can key memo tables.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

Face = tuple[int, ...]

EMPTY_FACE: Face = ()


class ComplexError(ValueError):
    pass


class FacetParseError(ComplexError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def as_face(vertices: Iterable[int]) -> Face:
    face = tuple(sorted(set(int(v) for v in vertices)))
    return face


class SimplicialComplex:
    """A simplicial complex given by its facets.

    ``facets`` is empty for the void complex and ``{()}`` for the empty
    complex ``{∅}``; the two are different objects.
    """

    __slots__ = ("n", "facets", "_hash", "__dict__")

    def __init__(self, n: int, facets: Iterable[Face]):
        self.n = n
        self.facets: frozenset[Face] = frozenset(facets)
        self._hash = hash((n, self.facets))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("".join(map(str, f)) if f else "∅" for f in self.sorted_facets)
        return f"SimplicialComplex(n={self.n}, facets={{{body}}})"

    @property
    def sorted_facets(self) -> list[Face]:
        return sorted(self.facets, key=lambda f: (len(f), f))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex and for the void complex."""
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    @property
    def d(self) -> int:
        """Krull dimension of the face ring, ``dim + 1``."""
        return self.dim + 1

    @cached_property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @cached_property
    def _faces_by_size(self) -> dict[int, list[Face]]:
        found: set[Face] = set()
        for facet in self.facets:
            for k in range(len(facet) + 1):
                found.update(itertools.combinations(facet, k))
        by_size: dict[int, list[Face]] = {}
        for face in sorted(found):
            by_size.setdefault(len(face), []).append(face)
        return by_size

    @cached_property
    def _face_set(self) -> frozenset[Face]:
        return frozenset(f for faces in self._faces_by_size.values() for f in faces)

    def __contains__(self, face: Sequence[int]) -> bool:
        return tuple(face) in self._face_set

    def faces(self, k: int | None = None) -> list[Face]:
        """Faces of dimension ``k`` in lexicographic order (all faces if ``k`` is None)."""
        if k is None:
            return [f for size in sorted(self._faces_by_size) for f in self._faces_by_size[size]]
        return list(self._faces_by_size.get(k + 1, ()))

    def f_vector(self) -> list[int]:
        """Face counts ``f_{-1}, f_0, ..., f_{dim}``."""
        return [len(self._faces_by_size.get(k + 1, ())) for k in range(-1, self.dim + 1)]

    @cached_property
    def vertices(self) -> list[int]:
        return [f[0] for f in self.faces(0)]

    def _check_face(self, face: Sequence[int]) -> Face:
        face = as_face(face)
        if face not in self._face_set:
            raise ComplexError(f"{face} is not a face of {self!r}")
        return face

    def link(self, face: Sequence[int]) -> SimplicialComplex:
        face = self._check_face(face)
        fs = set(face)
        # the link is generated by the facets containing the face, minus the face
        gens = [tuple(v for v in facet if v not in fs) for facet in self.facets if fs.issubset(facet)]
        return from_facets(self.n, gens)

    def faces_containing(self, face: Sequence[int], k: int) -> list[Face]:
        """The ``k``-faces containing ``face``, lexicographically ordered."""
        face = as_face(face)
        if not face:
            return self.faces(k)
        fs = set(face)
        return [g for g in self._faces_by_size.get(k + 1, ()) if fs.issubset(g)]

    def suspension(self) -> SimplicialComplex:
        """Join with two new vertices ``n+1`` and ``n+2``."""
        a, b = self.n + 1, self.n + 2
        return SimplicialComplex(self.n + 2, [f + (a,) for f in self.facets] + [f + (b,) for f in self.facets])


def from_facets(n: int, raw_facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex on ``[n]`` from possibly redundant generating faces."""
    if not isinstance(n, int) or n <= 0:
        raise ComplexError(f"vertex count must be a positive integer, got {n!r}")
    faces = set()
    for raw in raw_facets:
        raw = list(raw)
        for v in raw:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                raise ComplexError(f"vertex label {v!r} outside 1..{n}")
        face = as_face(raw)
        if len(face) != len(raw):
            raise ComplexError(f"repeated vertex in {raw}")
        faces.add(face)
    # longest first so that dominated faces are seen after their cofaces
    maximal: list[frozenset[int]] = []
    kept: list[Face] = []
    for face in sorted(faces, key=lambda f: (-len(f), f)):
        fs = frozenset(face)
        if any(fs <= m for m in maximal):
            continue
        maximal.append(fs)
        kept.append(face)
    return SimplicialComplex(n, kept)


def parse_facets(text: str) -> SimplicialComplex:
    """Parse the facet-list text format.

    One facet per line as whitespace separated positive integers, ``#``
    comments, and an optional ``n <count>`` header.  A line containing only
    ``{}`` denotes the empty face.
    """
    n = None
    rows: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        tokens = stripped.split()
        if tokens[0] == "n":
            if n is not None or rows:
                raise FacetParseError("header 'n <count>' must come first and only once", lineno)
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) <= 0:
                raise FacetParseError("malformed header, expected 'n <count>'", lineno)
            n = int(tokens[1])
            continue
        if tokens == ["{}"]:
            rows.append([])
            continue
        try:
            row = [int(t) for t in tokens]
        except ValueError:
            raise FacetParseError(f"non-integer token in {stripped!r}", lineno) from None
        if any(v <= 0 for v in row):
            raise FacetParseError("vertex labels must be positive", lineno)
        if n is not None and any(v > n for v in row):
            raise FacetParseError(f"vertex label exceeds n={n}", lineno)
        if len(set(row)) != len(row):
            raise FacetParseError("repeated vertex in facet", lineno)
        rows.append(row)
    if n is None:
        n = max((v for row in rows for v in row), default=0)
        if n == 0:
            n = 1
    return from_facets(n, rows)


def load_facets(path: str | Path) -> SimplicialComplex:
    return parse_facets(Path(path).read_text())


def format_facets(cx: SimplicialComplex, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {cx.n}")
    for facet in cx.sorted_facets:
        lines.append(" ".join(map(str, facet)) if facet else "{}")
    return "\n".join(lines) + "\n"
