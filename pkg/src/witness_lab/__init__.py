"""Exact diagonalization of transverse-field Ising qubit systems with
susceptibility-based entanglement witnesses and a brute-force separability
oracle."""

from .model import (
    MAX_QUBITS,
    AffinePath,
    PauliAxis,
    QubitSystem,
    build_hamiltonian,
    embed_pauli,
    sigma_z_diagonal,
)
from .observables import (
    ObservableRecord,
    cross_susceptibility_matrix,
    default_fd_step,
    ground_sz_on_path,
    lambda_susceptibility,
    observable_record,
    sigma_z_expectation,
    sigma_z_profile,
    susceptibility_fd,
    susceptibility_sos,
)
from .separability import (
    SCHMIDT_TOL,
    SchmidtData,
    check_pinned_pairs,
    is_fully_separable,
    is_separable,
    schmidt_coefficients,
)
from .spectrum import (
    DegenerateGroundError,
    GroundState,
    Spectrum,
    default_degeneracy_tolerance,
    diagonalize,
    ground_state,
)
from .sweep import (
    CertificationReport,
    SweepConfig,
    SweepPoint,
    SweepResult,
    certify_entanglement_on_path,
    detect_anticrossings,
    run_sweep,
)
from .witness import (
    Bipartition,
    CutWitness,
    WitnessReport,
    count_crossing_couplings,
    enumerate_bipartitions,
    witness_ab,
    witness_global,
    witness_lambda,
    witness_report,
    witness_tilde_ab,
)

__all__ = [
    "MAX_QUBITS",
    "SCHMIDT_TOL",
    "AffinePath",
    "Bipartition",
    "CertificationReport",
    "CutWitness",
    "DegenerateGroundError",
    "GroundState",
    "ObservableRecord",
    "PauliAxis",
    "QubitSystem",
    "SchmidtData",
    "Spectrum",
    "SweepConfig",
    "SweepPoint",
    "SweepResult",
    "WitnessReport",
    "build_hamiltonian",
    "certify_entanglement_on_path",
    "check_pinned_pairs",
    "count_crossing_couplings",
    "cross_susceptibility_matrix",
    "default_degeneracy_tolerance",
    "default_fd_step",
    "detect_anticrossings",
    "diagonalize",
    "embed_pauli",
    "enumerate_bipartitions",
    "ground_state",
    "ground_sz_on_path",
    "is_fully_separable",
    "is_separable",
    "lambda_susceptibility",
    "observable_record",
    "run_sweep",
    "schmidt_coefficients",
    "sigma_z_diagonal",
    "sigma_z_expectation",
    "sigma_z_profile",
    "susceptibility_fd",
    "susceptibility_sos",
    "witness_ab",
    "witness_global",
    "witness_lambda",
    "witness_report",
    "witness_tilde_ab",
]
