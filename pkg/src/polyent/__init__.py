"""Exact computational algebra over Q(i, sqrt2, sqrt3) with Groebner-basis
polynomial solving, variety dimension/degree computation, and a toolbox
for rank-4 PPT two-qutrit states built on generalized unextendible
product bases."""

from .scalars import (AlgebraicScalar, DivisionByZero, I, OMEGA, ONE, SQRT2,
                      SQRT3, SQRT6, ZERO, scalar, sqrt_in_tower, sqrt_rational)
from .linalg import (ExactMatrix, exact_det, exact_inverse, exact_kernel,
                     exact_rank, exact_solve)
from .poly import (GREVLEX, GRLEX, LEX, MonomialOrder, ParseError, Polynomial,
                   compare, parse_polynomial, parse_scalar)
from .groebner import (GroebnerBasis, buchberger, divide, elimination_ideal,
                       groebner, ideal_membership, ideals_equal, is_consistent,
                       reduce_basis, remainder, s_polynomial)
from .solve import (NotZeroDimensional, Solution, UnsolvableOverTower,
                    solve_zero_dim)
from .hilbert import (MonomialIdeal, affine_hilbert_function,
                      hilbert_function_monomial, monomial_ideal_dimension,
                      segre_ideal, variety_dim_degree)
from .qmat import (ComplexMatrix, LinearMapRep, choi_matrix,
                   operator_schmidt_rank, partial_trace, partial_transpose,
                   tensor_product, tensor_vec, upb_complement_projector)
from .gupb import (CanonicalForm, Infeasible, ProductVectorSet,
                   canonicalize_five, canonical_pairs, closed_form_quad,
                   invariants, is_gupb, is_minimal_gupb,
                   orthogonal_equivalence, pentagon_construct,
                   product_vectors_in_span, realize_orthogonal_upb,
                   reconstruct_ppt_state, sixth_product_vector,
                   validate_sign_tables, verify_main_theorem)

__version__ = "0.1.0"
