"""hopfdepth: exact depth-two / normality checks for semisimple Hopf algebras.

The package builds finite-dimensional Hopf algebras from structure
constants over exact cyclotomic scalars, computes their irreducible
characters, and machine-checks that an inclusion is depth two exactly when
it is normal, together with the restriction/induction identities that
drive the argument.
"""

from .algebras import (
    dual_group_algebra,
    dual_quotient_subalgebra,
    group_algebra,
    subgroup_subalgebra,
    trivial_subalgebra,
)
from .characters import (
    Character,
    IrrSet,
    character_table_dict,
    counit_character,
    dixon_character_table,
    irr_dual_group_algebra,
    irr_group_algebra,
    irreducible_characters,
    multiplicity,
    regular_character,
)
from .depth import (
    ClassPartition,
    Decomposition,
    DepthPair,
    DepthTwoResult,
    PairVerdict,
    constituents,
    depth_two_test,
    equivalence_classes,
    induce,
    lemma_test,
    regular_induction_check,
    restrict,
    theorem_check,
    verify_class_formulas,
)
from .errors import (
    AxiomError,
    DecompositionError,
    GroupError,
    HopfDepthError,
    IntegralError,
    NotNormalError,
    SplittingError,
    SubalgebraError,
    UnsupportedAlgebraError,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    builtin_group,
    enumerate_subgroups,
    group_from_generators,
    parse_permutation,
    perm_to_cycles,
    resolve_group,
)
from .hopf import (
    AlgebraElement,
    AxiomReport,
    HopfAlgebra,
    HopfSubalgebra,
    adjoint_stability_test,
    algebra_from_dict,
    algebra_to_dict,
    ideal_test,
    idempotent_integral,
    is_central,
    quotient_hopf,
    verify_hopf_axioms,
)
from .scalars import Cyc, PrimeFieldElement, Rational, find_lifting_prime
from .survey import CorpusSpec, SurveyReport, run_survey

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AxiomError",
    "AxiomReport",
    "Character",
    "ClassPartition",
    "CorpusSpec",
    "Cyc",
    "Decomposition",
    "DecompositionError",
    "DepthPair",
    "DepthTwoResult",
    "FiniteGroup",
    "GroupError",
    "HopfAlgebra",
    "HopfDepthError",
    "HopfSubalgebra",
    "IntegralError",
    "IrrSet",
    "NotNormalError",
    "PairVerdict",
    "PrimeFieldElement",
    "Rational",
    "SplittingError",
    "Subgroup",
    "SubalgebraError",
    "SurveyReport",
    "UnsupportedAlgebraError",
    "adjoint_stability_test",
    "algebra_from_dict",
    "algebra_to_dict",
    "builtin_group",
    "character_table_dict",
    "constituents",
    "counit_character",
    "depth_two_test",
    "dixon_character_table",
    "dual_group_algebra",
    "dual_quotient_subalgebra",
    "enumerate_subgroups",
    "equivalence_classes",
    "group_algebra",
    "group_from_generators",
    "ideal_test",
    "idempotent_integral",
    "induce",
    "irr_dual_group_algebra",
    "irr_group_algebra",
    "irreducible_characters",
    "is_central",
    "lemma_test",
    "multiplicity",
    "parse_permutation",
    "perm_to_cycles",
    "quotient_hopf",
    "regular_character",
    "regular_induction_check",
    "resolve_group",
    "restrict",
    "run_survey",
    "subgroup_subalgebra",
    "theorem_check",
    "trivial_subalgebra",
    "verify_class_formulas",
    "verify_hopf_axioms",
]
