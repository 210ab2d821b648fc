"""Exact verification toolkit for complex Hadamard matrices contained in
Bose-Mesner algebras of nonsymmetric 3-class association schemes."""

from .exactnum import (GaussianRational, QuadExt, RadicandMismatch, Rational,
                       embed_complex)
from .groebner import (BudgetExceeded, GroebnerBasis, MonomialOrder,
                       buchberger, eliminate_linear, ideal_contains,
                       normal_form)
from .hadamard import (EnumerationResult, HadamardCandidate, HadamardSystem,
                       build_system, build_W, check_common_zero,
                       check_hadamard_matrix, enumerate_families,
                       nonexistence_check, system_from_ac)
from .identities import CheckResult, IdentityReport, verify_identity_suite
from .multipoly import (ParseError, Polynomial, VarRing, parse_polynomial,
                        parse_quadext, standard_ring)
from .schemes import (AssociationScheme, EigenmatrixTemplate,
                      SchemeParameters, bush_type_from_hadamard,
                      cayley_scheme, load_hadamard_seed, load_scheme,
                      multiplicity_m1, params_from_ac, quaternion_scheme,
                      save_scheme, schemes_isomorphic, song_case,
                      sylvester_hadamard, verify_eigenmatrix,
                      verify_scheme_axioms, z4_scheme)
from .torus import TorusSolution, TorusSolutionSet, torus_zero_search

__version__ = "0.1.0"
