"""Exact commutative algebra for Pluecker ideals, Koszul complexes and zero-dimensional schemes."""

__version__ = "0.1.0"

from .domains import GF, QQ, CoefficientDomain, DomainError, parse_domain
from .polynomial import GREVLEX, LEX, MonomialOrder, ParseError, Polynomial, PolyRing, RingMismatch, block
from .groebner import GroebnerBasis, buchberger, normal_form, s_polynomial
from .ideals import (HilbertData, Ideal, eliminate, hilbert_data, ideal_quotient, in_radical, intersect,
                     irrelevant_ideal, linear_section, saturate)
from .zerodim import (Point, affine_points, local_multiplicity, projective_points, variety_points,
                      zero_dim_radical)
from .complexes import (ChainMap, FreeComplex, check_chain_map, homology_dimension, is_complex,
                        is_regular_sequence, koszul_complex)
from .grassmann import (GrassmannContext, affine_chart_ideal, g36_forms, hyperplane_form, pluecker_ideal,
                        schubert_ideal, tau_apply, v_ideal)
from .report import VerificationReport

__all__ = [
    "GF", "QQ", "CoefficientDomain", "DomainError", "parse_domain",
    "GREVLEX", "LEX", "MonomialOrder", "ParseError", "Polynomial", "PolyRing", "RingMismatch", "block",
    "GroebnerBasis", "buchberger", "normal_form", "s_polynomial",
    "HilbertData", "Ideal", "eliminate", "hilbert_data", "ideal_quotient", "in_radical", "intersect",
    "irrelevant_ideal", "linear_section", "saturate",
    "Point", "affine_points", "local_multiplicity", "projective_points", "variety_points", "zero_dim_radical",
    "ChainMap", "FreeComplex", "check_chain_map", "homology_dimension", "is_complex", "is_regular_sequence",
    "koszul_complex",
    "GrassmannContext", "affine_chart_ideal", "g36_forms", "hyperplane_form", "pluecker_ideal",
    "schubert_ideal", "tau_apply", "v_ideal",
    "VerificationReport",
]
