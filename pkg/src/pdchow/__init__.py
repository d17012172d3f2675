"""Partial differential Chow forms over Q.

Differential polynomial arithmetic, Ritt reduction, Kolchin polynomials, a
Buchberger engine for elimination, truncated jet ideals, and the Chow-form
pipeline with its homogeneity, membership and degree-bound checks.
"""

from .chowform import (ChowFormConsistencyError, ChowFormResult, DegreeBounds, GenericHyperplane,
                       NoChowFormError, build_hyperplanes, compute_chow_form, degree_bounds, delta_degree,
                       lambda_check, swap_blocks, verify_charset_representation)
from .diffpoly import DerOp, DiffPoly, DiffVar, RingContext
from .groebner import GroebnerBasis, MonomialOrder, Poly, PolyRing, buchberger, eliminate, ideal_dimension, saturate
from .jetspace import IncoherentCharset, JetRing, prolong, truncated_ideal
from .kolchin import (ExponentSet, NumericalPolynomial, charset_summary, chow_admissible_shape,
                      kolchin_from_charset, omega_E)
from .quasigeneric import (QuasiGenericSpec, multi_intersection_predict, run_intersection_experiment,
                           validate_support)
from .ranking import (AutoreducedSet, Ranking, charset_criterion, coherence_check, is_reduced, ritt_reduce,
                      with_top)
from .textio import ParseError, SystemFile, parse_poly, parse_system, print_poly, print_system

__version__ = "0.1.0"
