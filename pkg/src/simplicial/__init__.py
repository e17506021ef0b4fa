"""Simplicial complexes, Stanley-Reisner ideals, integer homology and
simplicial resolutions of monomial ideals."""

from .complex import SimplicialComplex, is_well_defined_complex, simplex
from .errors import (
    NotAFaceError,
    NotFoundError,
    ParseError,
    SimplicialError,
    VoidComplexError,
)
from .homology import (
    AbelianGroup,
    ChainComplexZ,
    betti_over_field,
    cohomology,
    homology,
    homology_groups,
    is_cohen_macaulay,
    is_cohen_macaulay_by_depth,
    reduced_chain_complex,
    reisner_witness,
)
from .maps import SimplicialMap, compose, identity_map, induced_chain_map, make_map
from .monomials import (
    Monomial,
    MonomialIdeal,
    divides,
    dual_ideal,
    hilbert_series_reduced,
    irreducible_decomposition,
    lcm,
    minimalize,
    strictly_divides,
)
from .named import named_complex
from .resolutions import (
    BettiTable,
    LabelledComplex,
    MultigradedComplex,
    betti_table,
    buchberger_complex,
    is_resolution,
    labelled_chain_complex,
    lyubeznik_complex,
    minimal_betti,
    restrict_to_degree,
    scarf_complex,
    taylor_complex,
)
from .smith import SmithForm, smith_normal_form

__version__ = "0.1.0"
