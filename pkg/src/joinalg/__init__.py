"""Finite semigroups, two-operation joined structures, and the machinery to
verify their structure theory exhaustively at small order.

The core objects are index tables (FiniteMagma and its verified upgrades),
joined structures carrying two tables and a joiner element, endofunctions
with decomposition predicates, and exact-rational sampled structures.  On
top sit the classification ladder, the equivalence batteries, quotient and
factorization constructions, and the enumeration engine; ``suite.run_suite``
drives all of them.
"""

from .classify import (
    ClassificationReport,
    bi_identities,
    center,
    central_idempotents,
    classify,
    idempotents,
    ideal_submonoids,
    is_ideal,
    kernel,
    subgroups,
    zeroid_elements,
)
from .enumeration import (
    EnumerationQuery,
    enumerate_functions,
    enumerate_odot,
    identical_characterization,
    identical_consequences,
    identical_count_matches_functions,
)
from .errors import (
    InvariantViolation,
    JoinalgError,
    NotAssociativeError,
    ParseError,
    PreconditionError,
    SizeLimitError,
)
from .factorize import (
    Factorization,
    all_subgroups,
    decomposers_from_factorizations,
    is_direct,
    normal_subgroups,
    projection_decomposition_check,
    transversals,
)
from .functions import (
    Check,
    ConjugatePair,
    EndoFunction,
    all_endofunctions,
    conjugates,
    f_multiplication,
    functional_eq_checks,
    is_associative_fn,
    is_canceler,
    is_decomposer,
    is_idempotent_fn,
    is_periodic,
    predicates,
)
from .gallery import (
    b_addition,
    b_joined,
    cyclic,
    fractional_mult_sample,
    gallery,
    klein_group,
    klein_grouplike,
    klein_joined,
    min_semigroup,
    omega_grouplike,
    pick_left_joined,
    pick_right_joined,
    zn_min_joined,
)
from .joined import (
    EquivalenceBattery,
    JoinedStructure,
    JoinerMap,
    e_odot_G,
    grouplike_criterion_battery,
    image_subgroup_battery,
    is_josemig,
    joiner_identity_checks,
    unital_image_battery,
    verify_join_law,
)
from .quotient import (
    ClassDecomposition,
    QuotientDiagram,
    decompose_class_united,
    e_congruence,
    quotient,
    quotient_isomorphism,
)
from .rationals import (
    RationalJoined,
    RationalRuleMagma,
    RationalSampler,
    remainder_part,
    round_down,
    wrapped_addition,
)
from .report import Report, Verdict
from .suite import SuiteReport, run_suite
from .tables import (
    FiniteGroup,
    FiniteMagma,
    FiniteSemigroup,
    SubsetRef,
    check_associative,
    is_surjective,
    subset_product,
)

__version__ = "0.1.0"
