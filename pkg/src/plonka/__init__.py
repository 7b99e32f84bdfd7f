"""Workbench for finite abstract algebraic logic.

The package provides exhaustively checkable implementations of logical
matrices over finite algebras, their deductive filters and Leibniz and
Suszko congruences, directed systems and their Plonka sums, left variable
inclusion companion logics, and the matching Hilbert-calculus
transformation.  Everything is bounded and certificate-producing: negative
answers carry counter-valuations, positive proof claims carry replayable
derivations, and expensive searches fail loudly instead of silently
truncating.
"""

from .bounds import DEFAULT, BoundExceeded, Bounds
from .terms import (
    Application,
    PartitionTerm,
    Signature,
    Term,
    TermSyntaxError,
    Variable,
    enumerate_terms,
    parse_context,
    parse_term,
    partition_identity_pairs,
    substitute,
    term_depth,
    to_text,
    vars_of,
)
from .algebras import (
    Congruence,
    FiniteAlgebra,
    Homomorphism,
    direct_product,
    enumerate_congruences,
    evaluate,
    generated_subalgebra,
    is_homomorphism,
    meet_congruences,
    quotient,
    unary_polynomial_functions,
)
from .matrices import (
    UNKNOWN,
    ByCalculus,
    ByMatrices,
    Entailment,
    FilterLattice,
    LogicalMatrix,
    MatrixPresentation,
    companion_entails,
    companion_presentation,
    entails,
    enumerate_filters,
    filter_generated,
    has_trivial_submatrix,
    is_filter,
    is_leibniz_reduced,
    is_model,
    is_suszko_reduced,
    leibniz,
    lift_one,
    logic_entails,
    reduce_matrix,
    suszko,
    suszko_via_filter_generation,
)
from .sums import (
    DirectedSystem,
    Fiber,
    Fibration,
    JoinSemilattice,
    algebra_fibration,
    chain_semilattice,
    decompose,
    isomorphic_matrices,
    isomorphic_systems,
    matrix_isomorphisms,
    one_lift,
    plonka_sum,
    sum_offsets,
    trivial_matrix,
    upset_union,
)
from .calculi import (
    Derivation,
    DerivationCheck,
    HilbertCalculus,
    Rule,
    SchemeFamily,
    Step,
    bounded_prove,
    check_derivation,
    cl_calculus,
    partition_term_check,
    pwk_calculus,
    same_calculus_up_to_renaming,
    transform_left,
)
from .hierarchy import (
    InconsistencySet,
    ProtoReport,
    ProtoWitness,
    TruthWitness,
    at_most_one_trivial,
    check_equivalential_witness,
    check_inconsistency_set,
    check_proto_witness,
    check_truth_witness,
    inconsistency_terms_refuter,
    proto_refutation_sample,
    suszko_reduced_condition,
)
from .fixtures import (
    absorption_boolean,
    absorption_lattice,
    b2_matrix,
    cl_lattice_companion,
    cl_lattice_presentation,
    cl_presentation,
    dl_companion_presentation,
    dl_upset_matrices,
    dl_upset_presentation,
    eight_fiber_system,
    l2_matrix,
    pwk_presentation,
    seven_element_names,
    seven_element_system,
    system_family,
    wk3_matrix,
)
from .files import (
    FileSyntaxError,
    Workspace,
    parse_certificate,
    parse_term_list,
    render_algebra,
    render_calculus,
    render_matrix,
    render_signature,
    render_system,
)
from .scenarios import SCENARIOS, ScenarioResult, run_scenario

__version__ = "0.1.0"
