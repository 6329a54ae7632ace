"""Built-in test complexes.

Each entry carries expected properties; these are claims for the test suite
and ``facering corpus --selftest`` to check, not inputs to any computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from facering.complex import SimplicialComplex, parse_facets

NEG_INF = "-inf"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    complex: SimplicialComplex
    notes: dict


# pure, singularity dimension over Q and over F_2
_NOTES = {
    "boundary-simplex-2": {"pure": True, "singdim_q": NEG_INF, "singdim_f2": NEG_INF},
    "boundary-simplex-3": {"pure": True, "singdim_q": NEG_INF, "singdim_f2": NEG_INF},
    "boundary-simplex-4": {"pure": True, "singdim_q": NEG_INF, "singdim_f2": NEG_INF},
    "bowtie": {"pure": True, "singdim_q": 0, "singdim_f2": 0},
    "two-disjoint-filled-triangles": {"pure": True, "singdim_q": -1, "singdim_f2": -1},
    "two-disjoint-edges": {"pure": True, "singdim_q": -1, "singdim_f2": -1},
    "rp2-6": {"pure": True, "singdim_q": NEG_INF, "singdim_f2": -1},
    "torus-7": {"pure": True, "singdim_q": -1, "singdim_f2": -1},
    "suspension-bowtie": {"pure": True, "singdim_q": 1, "singdim_f2": 1},
    "nonpure-example": {"pure": False, "singdim_q": 0, "singdim_f2": 0},
}

NAMES = tuple(_NOTES)
ALIASES = {"rp2": "rp2-6", "torus": "torus-7"}


def canonical_name(name: str) -> str:
    return ALIASES.get(name, name)


def source(name: str) -> str:
    name = canonical_name(name)
    if name not in _NOTES:
        raise KeyError(f"unknown corpus entry {name!r}; have {', '.join(NAMES)}")
    return resources.files(__name__).joinpath(f"{name}.facets").read_text()


def load(name: str) -> SimplicialComplex:
    return parse_facets(source(name))


def entry(name: str) -> CorpusEntry:
    name = canonical_name(name)
    return CorpusEntry(name, load(name), dict(_NOTES[name]))


def entries(pure_only: bool = False) -> list[CorpusEntry]:
    out = [entry(name) for name in NAMES]
    if pure_only:
        out = [e for e in out if e.notes["pure"]]
    return out
