"""JSON report assembly.

Reports are plain dicts of str/int/bool/None/list so ``json.dumps`` with
sorted keys is byte-stable.  Rationals are rendered as ``"p/q"`` strings.
"""

from __future__ import annotations

import json
import warnings
from importlib import resources

from facering.complex import SimplicialComplex
from facering.fields import FieldSpec
from facering.graebe import GenericMatrix, KernelReport
from facering.hochster import (NEG_INFINITY, GradedDimTable, PurityWarning, SingularityVerdict,
                               is_buchsbaum, singularity_dimension)
from facering.quotient import QuotientLcTable, TheoremVerdict

SCHEMA_VERSION = "1.0"


def schema() -> dict:
    return json.loads(resources.files("facering").joinpath("report_schema.json").read_text())


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def complex_json(cx: SimplicialComplex) -> dict:
    return {
        "n": cx.n,
        "dim": cx.dim,
        "d": cx.d,
        "pure": cx.is_pure,
        "f_vector": cx.f_vector(),
        "facets": [list(f) for f in cx.sorted_facets],
    }


def singularity_json(v: SingularityVerdict) -> dict:
    s = v.singularity_dimension
    return {
        "singularity_dimension": "-inf" if s is NEG_INFINITY else s,
        "witnesses": [{"face": list(w.face), "degree": w.degree, "dim": w.dim} for w in v.witnesses],
    }


def base_report(command: str, source: dict, cx: SimplicialComplex, field: FieldSpec) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": source,
        "field": str(field),
        "complex": complex_json(cx),
    }


def analysis(cx: SimplicialComplex, field: FieldSpec) -> dict:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PurityWarning)
        v = singularity_dimension(cx, field)
    out = singularity_json(v)
    out["cohen_macaulay"] = v.singularity_dimension is NEG_INFINITY
    out["buchsbaum"] = is_buchsbaum(cx, field) if cx.is_pure else None
    return out


def lc_json(table: GradedDimTable) -> dict:
    return table.to_json()


def quotient_json(table: QuotientLcTable) -> dict:
    return table.to_json()


def kernels_json(reports: list[KernelReport], matrix: GenericMatrix) -> dict:
    return {
        "matrix": matrix.to_json(),
        "reports": [r.to_json() for r in reports],
        "all_equal": all(r.equal for r in reports),
        "all_surjective": all(r.surjective_onto_previous is not False for r in reports),
    }


def verdict_json(verdict: TheoremVerdict) -> dict:
    return verdict.to_json()
