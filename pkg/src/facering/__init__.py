"""Local cohomology of Stanley-Reisner rings with exact linear algebra.

Modules: ``complex`` (simplicial complexes), ``fields`` and ``linalg`` (exact
arithmetic), ``cohomology`` (pair cohomology and induced maps), ``hochster``
(graded dimensions, singularity dimension), ``graebe`` (explicit module
structure and kernel intersections), ``quotient`` (quotients by generic forms)
and ``cli``.
"""

from facering.cohomology import (cohomology_basis, cohomology_dim, induced_map, link_iso_check,
                                 pair_coboundary, reduced_cohomology_dim)
from facering.complex import EMPTY_FACE, SimplicialComplex, from_facets, load_facets, parse_facets
from facering.fields import GF2, GF2_16, GF32003, QQ, FieldSpec
from facering.graebe import (GenericMatrix, KernelReport, enumerate_w, generic_matrix, graded_piece,
                             kernel_dims, kernel_sweep, theta_action)
from facering.hochster import (NEG_INFINITY, is_buchsbaum, is_cohen_macaulay, lc_graded_dim,
                               singularity_dimension)
from facering.quotient import (check_main_theorem, has_flc, isolated_quotient_lc, quotient_lc_dim)

__version__ = "0.1.0"
