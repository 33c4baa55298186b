"""Exact Yang-Baxter bases of type-A Hecke algebras.

The package computes, over an exact rational-function field:

* the six classical operator families on the polynomial ring,
* Yang-Baxter bases of the corresponding Hecke algebras (by recursion and by
  Rothe-diagram factorization), their bilinear form and orthogonality,
* double Schubert and Grothendieck polynomial tables together with the
  transition matrices identifying Yang-Baxter coefficients with their
  specializations.

Everything is exact; there is no floating point anywhere.
"""

from .errors import YBHeckeError
from .hecke import (
    AlgebraSpec,
    HeckeElement,
    algebra,
    basis_element,
    delta,
    elementary_factor,
    expand_in_yb,
    gram_matrix,
    pairing,
    permuted_spectral,
    phi,
    symbolic_spectral,
    unit,
    yb_basis,
    yb_element,
    yb_element_rothe,
)
from .permutations import Permutation, all_permutations, all_reduced_words, rothe_diagram
from .poly import (
    LaurentPoly,
    RationalFunction,
    lowest_homogeneous_component,
    substitute,
)
from .schubert import (
    GrothendieckTable,
    SchubertTable,
    TransitionMatrix,
    grothendieck_table,
    schubert_table,
    specialize_double,
    verify_grothendieck_transition,
    verify_schubert_transition,
    yang_coefficients,
)
from .serialize import parse_poly, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "GrothendieckTable",
    "HeckeElement",
    "LaurentPoly",
    "Permutation",
    "RationalFunction",
    "SchubertTable",
    "TransitionMatrix",
    "YBHeckeError",
    "algebra",
    "all_permutations",
    "all_reduced_words",
    "basis_element",
    "delta",
    "elementary_factor",
    "expand_in_yb",
    "gram_matrix",
    "grothendieck_table",
    "lowest_homogeneous_component",
    "pairing",
    "parse_poly",
    "parse_scalar",
    "permuted_spectral",
    "phi",
    "rothe_diagram",
    "schubert_table",
    "specialize_double",
    "substitute",
    "symbolic_spectral",
    "unit",
    "verify_grothendieck_transition",
    "verify_schubert_transition",
    "yang_coefficients",
    "yb_basis",
    "yb_element",
    "yb_element_rothe",
]
