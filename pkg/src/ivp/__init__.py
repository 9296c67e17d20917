"""Integer-valued polynomials on sets of algebraic integers, computed exactly."""

__version__ = "0.1.0"

from .closure import ZWitness, closure_member, in_Sfd, z_closure_witness
from .dedekind import IndexReport, TriState, dedekind_divides_index, index_one_certificate
from .exact import (
    DEFAULT_SEED,
    AlgebraicElement,
    ReducibleError,
    binomial_poly,
    certify_irreducible,
    char_poly_from,
    char_poly_of_element,
    cyclotomic,
    difference_poly,
    discriminant,
    factor_mod_p,
    perron_irreducible,
    resultant,
)
from .families import FamilyKind, crosscheck_family, family_verdict, make_family
from .ivptests import (
    BudgetExceeded,
    IvpGenerator,
    ef_bound_generator,
    is_integral_value,
    kummer_splitting,
    lemma43_constraint,
    psi,
    psi_lcm_oracle,
    psi_membership_check,
)
from .newton import INFINITY, difference_valuations, element_valuations, newton_polygon, root_valuations
from .poly import FpPoly, RatPoly, X, parse_poly
from .sequences import Kind, ValuationMatrix, ball_cover, classify_prefix, residue_classes, theorem24_crosscheck
