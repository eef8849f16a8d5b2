"""Spanning-tree link homology with twisted coefficients.

The package computes, from a planar diagram code, the delta-graded
homology of the spanning-tree complex over the fraction field of a
characteristic-two face-variable ring, together with the cube-shaped
twisted complex it collapses from, reduced characteristic-two Khovanov
homology, and the classical invariants (determinant, signature, weighted
tree polynomials) that cross-check all of them.
"""

from .pdcode import (
    LinkDiagram,
    parse_pd,
    parse_batch,
    mirror,
    connect_sum,
    reverse_component,
    smooth_crossing,
)
from .spantree import spanning_tree_homology, les_check
from .twisted import (
    build_twisted_complex,
    twisted_homology,
    reduced_khovanov_delta,
    cube_d_squared_violations,
)
from .classical import determinant, signature, tree_polynomial
from .gf2algebra import poincare_str, parse_poincare
from . import catalog

__version__ = "0.1.0"

__all__ = [
    "LinkDiagram",
    "parse_pd",
    "parse_batch",
    "mirror",
    "connect_sum",
    "reverse_component",
    "smooth_crossing",
    "spanning_tree_homology",
    "les_check",
    "build_twisted_complex",
    "twisted_homology",
    "reduced_khovanov_delta",
    "cube_d_squared_violations",
    "determinant",
    "signature",
    "tree_polynomial",
    "poincare_str",
    "parse_poincare",
    "catalog",
    "__version__",
]
