"""Exact cyclotomic verification of DFT-type transforms on qubits, qutrits and qudits."""

__version__ = "0.1.0"

from .cyclo import (
    CyclotomicNumber,
    InvalidOrderError,
    RootOfUnity,
    conjugate,
    cyclotomic_polynomial,
    is_zero,
    root_of_unity,
    sqrt_positive_integer,
    to_complex_float,
)
from .phasepoly import MissingAssignmentError, PhasePolynomial, PhaseVariable, constant, variable
from .qstates import (
    ArityError,
    DimensionError,
    EnsembleFamily,
    GateMatrix,
    GeneralQutritParams,
    StateVector,
    apply,
    counterexample_families,
    dft_matrix,
    equatorial_family,
    general_qutrit,
    gram,
    inner_product,
    is_unitary,
)
from .claims import ClaimResult, CoefficientPair, preservation_residual, run_all, solve_E2_coefficients
