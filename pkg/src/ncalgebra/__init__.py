"""Noncrossing algebras of finite Coxeter groups and the homology of
reflection-arrangement complements and Milnor fibres."""

from .algebra import NcAlgebra
from .complexes import ChainComplex, ComplexBuilder, builder_of, cocomplex_space, complex_space, relative_complex
from .coxeter import ConfigurationError, CoxeterDatum, build_coxeter, parse_group
from .forms import Forms, forms_of
from .homology import ExactMatrix, HomologyResult, ResourceError, homology, rank, snf
from .lattice import NcpLattice, beta, hurwitz_act
from .reps import appendix_table, multiplicity, multiplicity_vector, partitions, specht
from .tilde import TildeAlgebra, graded_dims, hilbert_compare, present_fk, present_tilde

__version__ = "0.1.0"

__all__ = [
    "NcAlgebra",
    "ChainComplex",
    "ComplexBuilder",
    "builder_of",
    "cocomplex_space",
    "complex_space",
    "relative_complex",
    "ConfigurationError",
    "CoxeterDatum",
    "build_coxeter",
    "parse_group",
    "Forms",
    "forms_of",
    "ExactMatrix",
    "HomologyResult",
    "ResourceError",
    "homology",
    "rank",
    "snf",
    "NcpLattice",
    "beta",
    "hurwitz_act",
    "appendix_table",
    "multiplicity",
    "multiplicity_vector",
    "partitions",
    "specht",
    "TildeAlgebra",
    "graded_dims",
    "hilbert_compare",
    "present_fk",
    "present_tilde",
]
