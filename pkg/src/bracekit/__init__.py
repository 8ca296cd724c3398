"""Finite skew braces: relative commutators, centrality and low-dimensional homology."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .core import (  # noqa: F401
    CayleyTablePair,
    Hom,
    SkewBrace,
    check_hom,
    distributor,
    identity_hom,
    is_homomorphism,
    lambda_act,
    rho_act,
    star,
    validate,
)
from .subobjects import (  # noqa: F401
    ElementSet,
    additive_center,
    additive_closure,
    all_ideals,
    ideal_closure,
    is_ideal,
    is_strong_left_ideal,
    is_subbrace,
    z_r,
)
from .commutators import (  # noqa: F401
    ALL_VARIETIES,
    Variety,
    derived_ideal,
    huq_commutator,
    naive_star_set,
    radicalator,
    rel_commutator,
    star_ideal,
)
from .quotients import Quotient, check_reflector_universality, in_variety, quotient, reflect  # noqa: F401
from .extensions import (  # noqa: F401
    Extension,
    extension,
    is_central_algebraic,
    is_central_categorical,
    kernel,
    pullback,
    quotient_extension,
)
from .homology import five_term_tail, h1, hopf_quotient, lower_central_series  # noqa: F401
from .morphisms import all_homs, are_isomorphic, canonical_form  # noqa: F401
from .groups import groups_of_order  # noqa: F401
from .enumeration import all_skew_braces, skew_braces_on  # noqa: F401
from .formats import ResultRecord, parse_sbrace, write_sbrace  # noqa: F401
