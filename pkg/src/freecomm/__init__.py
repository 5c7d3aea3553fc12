"""freecomm: commutator contraction in unitary groups at desk scale.

Exact free-product trace arithmetic, nested-commutator decay dynamics,
seeded Haar matrix models, operator-norm discreteness filtrations, and
mixed-identity machinery for finite groups.
"""

__version__ = "0.1.0"

from .algebra import (
    AlgebraElement,
    FreeProductGroup,
    SupportCapExceeded,
    Z,
    ell,
    ell_bar,
    haar_generator,
    is_unitary,
    multiply,
    order_two_unitary,
    star,
    trace,
    verify_free_commutator_identity,
)
from .discrete import (
    FilterReport,
    MatrixGroup,
    NonClosure,
    commutator_ineq_check,
    ell_op,
    gamma_filter,
    group_closure,
    heisenberg_irrep,
)
from .dynamics import (
    DecayReport,
    DecayStep,
    decay_curve_exact,
    decay_curve_matrix,
    find_small_element,
    trace_recursion,
)
from .groups import FiniteGroup, cyclic_group, load_finite_group, quaternion_group, symmetric_group
from .matrices import (
    SpectralSpec,
    UnitaryMatrix,
    corner_haar,
    freeness_report,
    freeness_trial,
    normalized_trace,
    op_norm,
    sample_haar,
    subseed,
    two_norm_dist,
    unitary_from_spectrum,
    unitary_with_trace,
)
from .mixed import (
    MixedWord,
    asymptotic_freeness_witness,
    is_mixed_identity,
    iterated_commutator,
    parse_mixed_word,
)
from .reps import (
    CriterionVerdict,
    FiniteRep,
    adjoint_fixed_space,
    commutant_dimension,
    dihedral_chain_demo,
    least_dimension_criterion,
)
from .words import FreeWord, commutator, reduce_free_word, substitute, w_sequence

__all__ = [
    "AlgebraElement",
    "CriterionVerdict",
    "DecayReport",
    "DecayStep",
    "FilterReport",
    "FiniteGroup",
    "FiniteRep",
    "FreeProductGroup",
    "FreeWord",
    "MatrixGroup",
    "MixedWord",
    "NonClosure",
    "SpectralSpec",
    "SupportCapExceeded",
    "UnitaryMatrix",
    "Z",
    "adjoint_fixed_space",
    "asymptotic_freeness_witness",
    "commutant_dimension",
    "commutator",
    "commutator_ineq_check",
    "corner_haar",
    "cyclic_group",
    "decay_curve_exact",
    "decay_curve_matrix",
    "dihedral_chain_demo",
    "ell",
    "ell_bar",
    "ell_op",
    "find_small_element",
    "freeness_report",
    "freeness_trial",
    "gamma_filter",
    "group_closure",
    "haar_generator",
    "heisenberg_irrep",
    "is_mixed_identity",
    "is_unitary",
    "iterated_commutator",
    "least_dimension_criterion",
    "load_finite_group",
    "multiply",
    "normalized_trace",
    "op_norm",
    "order_two_unitary",
    "parse_mixed_word",
    "quaternion_group",
    "reduce_free_word",
    "sample_haar",
    "star",
    "subseed",
    "substitute",
    "symmetric_group",
    "trace",
    "trace_recursion",
    "two_norm_dist",
    "unitary_from_spectrum",
    "unitary_with_trace",
    "verify_free_commutator_identity",
    "w_sequence",
]
