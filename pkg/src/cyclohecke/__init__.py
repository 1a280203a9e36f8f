"""Exact computations in the cyclotomic Hecke algebras H(m,1,n).

Normal-form reduction of algebra words, Young m-tableau combinatorics,
seminormal irreducible representations built from explicit content
formulas, and a global verification layer (dimension, flatness,
Jucys-Murphy spectra, completeness) over the exact rational-function
field Q(q, v1..vm).
"""

from .scalars import Field, MultiPoly, ParamSpec, Scalar, is_semisimple_spec
from .algebra import Algebra, Element, NormalWord, TAU, sigma, sigma_inv
from .tableaux import (
    ContentString,
    StandardMTableau,
    apply_transposition,
    content_string,
    enumerate_mpartitions,
    enumerate_standard_tableaux,
    is_content_string,
    tableau_from_content_string,
)
from .seminormal import (
    Representation,
    build_representation,
    jm_matrix,
    restriction_blocks,
    verify_defining_relations,
)
from .h2bax import (
    H2Rep,
    baxterize,
    h2_one_dim,
    h2_two_dim,
    verify_baxter_relations,
)
from .verify import (
    GlobalRep,
    basis_image_rank,
    completeness_report,
    default_spec,
    morphism_check,
    oracle_equal,
    phi,
    spectrum_report,
)

__version__ = "0.1.0"

__all__ = [
    "Field", "MultiPoly", "ParamSpec", "Scalar", "is_semisimple_spec",
    "Algebra", "Element", "NormalWord", "TAU", "sigma", "sigma_inv",
    "ContentString", "StandardMTableau", "apply_transposition",
    "content_string", "enumerate_mpartitions", "enumerate_standard_tableaux",
    "is_content_string", "tableau_from_content_string",
    "Representation", "build_representation", "jm_matrix",
    "restriction_blocks", "verify_defining_relations",
    "H2Rep", "baxterize", "h2_one_dim", "h2_two_dim", "verify_baxter_relations",
    "GlobalRep", "basis_image_rank", "completeness_report", "default_spec",
    "morphism_check", "oracle_equal", "phi", "spectrum_report",
]
