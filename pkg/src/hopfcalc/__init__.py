"""Exact symbolic engine for bicovariant differential calculi on finite
Hopf algebras: functions, forms, Lie derivatives, and inner derivations in
one cross-product algebra, with exhaustive identity verification."""

from .linalg import Matrix, Rational, complement_basis, kernel_basis, solve_in_span
from .hopf import (
    Element,
    GroupTable,
    HopfCalcError,
    HopfData,
    NotAGroupError,
    TensorElement,
    check_hopf_axioms,
    dual_hopf,
    function_hopf,
    group_hopf,
)
from .duality import PairedHopf, check_covariance
from .calculus import (
    CalculusError,
    FodcData,
    OneForm,
    check_consistency,
    differential,
    finite_group_calculus,
    omega_times_function,
)
from .wedge import (
    Braiding,
    ExteriorBasis,
    GradedForm,
    WedgeAlgebra,
    build_exterior,
    check_graded_bialgebra,
    compute_braiding,
    exterior_derivative,
    graded_coproduct,
    wedge_multiply,
)
from .crossprod import (
    CrossAlgebra,
    CrossElement,
    DualElement,
    cross_act,
    cross_multiply,
    dual_act,
    dual_multiply,
    gamma_coproduct,
    inner_derivation,
    lie_derivative,
    pair,
)
from .verify import (
    SUITE_NAMES,
    run_all,
    run_suites,
    suite_cartan,
    suite_contraction,
    suite_differential,
    suite_dual_pairing,
    suite_lie_commutes_d,
)
from .report import SuiteCase, SuiteReport
from .dsl import (
    values_equal,
    BUILTIN_SPECS,
    CalculusSpec,
    DslError,
    SpecError,
    evaluate,
    evaluate_text,
    load_spec,
    parse,
    print_normal,
)
from .cli import main as cli_main

__version__ = "0.1.0"

__all__ = [
    "Matrix", "Rational", "complement_basis", "kernel_basis", "solve_in_span",
    "Element", "GroupTable", "HopfCalcError", "HopfData", "NotAGroupError",
    "TensorElement", "check_hopf_axioms", "dual_hopf", "function_hopf",
    "group_hopf",
    "PairedHopf", "check_covariance",
    "CalculusError", "FodcData", "OneForm", "check_consistency",
    "differential", "finite_group_calculus", "omega_times_function",
    "Braiding", "ExteriorBasis", "GradedForm", "WedgeAlgebra",
    "build_exterior", "check_graded_bialgebra", "compute_braiding",
    "exterior_derivative", "graded_coproduct", "wedge_multiply",
    "CrossAlgebra", "CrossElement", "DualElement", "cross_act",
    "cross_multiply", "dual_act", "dual_multiply", "gamma_coproduct",
    "inner_derivation", "lie_derivative", "pair",
    "SUITE_NAMES", "run_all", "run_suites", "suite_cartan",
    "suite_contraction", "suite_differential", "suite_dual_pairing",
    "suite_lie_commutes_d",
    "SuiteCase", "SuiteReport",
    "BUILTIN_SPECS", "CalculusSpec", "DslError", "SpecError", "evaluate",
    "evaluate_text", "load_spec", "parse", "print_normal", "values_equal",
    "cli_main",
]
