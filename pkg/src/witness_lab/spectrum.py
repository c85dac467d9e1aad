"""Dense symmetric eigendecomposition with deterministic conventions.

The full decomposition is always computed, never just the extremal pair,
because the susceptibility formulas downstream sum over every excited state.
At the 4096-dimensional cap this stays affordable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_DIM = 4096
SYMMETRY_RTOL = 1e-12


class DegenerateGroundError(Exception):
    """Raised when the ground level is degenerate within tolerance.

    Signals that susceptibility witnesses and path certification do not
    apply at this point, rather than silently returning huge or arbitrary
    values.
    """


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues in ascending order, eigenvector ``states[:, k]`` paired
    with ``energies[k]``."""

    energies: np.ndarray
    states: np.ndarray

    @property
    def dim(self) -> int:
        return self.energies.size


@dataclass(frozen=True, eq=False)
class GroundState:
    energy: float
    vector: np.ndarray
    gap: float


def diagonalize(H: np.ndarray) -> Spectrum:
    """Full eigendecomposition of a real symmetric matrix.

    Eigenvalues come out ascending; the global sign of each eigenvector is
    fixed by making its largest-magnitude component positive, so repeated
    calls on identical input are bit-identical. A failed iteration inside
    the solver surfaces as ``numpy.linalg.LinAlgError``.
    """
    H = np.asarray(H, dtype=float)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {H.shape}")
    dim = H.shape[0]
    if dim > MAX_DIM:
        raise ValueError(f"dimension {dim} exceeds the dense cap {MAX_DIM}")
    if not np.all(np.isfinite(H)):
        raise ValueError("matrix must contain only finite values")
    scale = max(1.0, float(np.abs(H).max()))
    if float(np.abs(H - H.T).max()) > SYMMETRY_RTOL * scale:
        raise ValueError("matrix is not symmetric within tolerance")

    energies, states = np.linalg.eigh(H)

    lead = np.argmax(np.abs(states), axis=0)
    flip = states[lead, np.arange(dim)] < 0.0
    states[:, flip] *= -1.0

    energies.setflags(write=False)
    states.setflags(write=False)
    return Spectrum(energies=energies, states=states)


def default_degeneracy_tolerance(spec: Spectrum) -> float:
    """Scale-free degeneracy threshold: 1e-9 of the spectral width (floored
    at 1e-9 for narrow spectra)."""
    width = float(spec.energies[-1] - spec.energies[0])
    return 1e-9 * max(1.0, width)


def ground_state(spec: Spectrum, deg_tol: float | None = None) -> GroundState:
    """Lowest eigenpair and its gap; fails rather than guessing on degeneracy.

    Raises ``DegenerateGroundError`` when ``E_1 - E_0 <= deg_tol``: a
    degenerate ground manifold has no preferred state, and the entanglement
    machinery built on a unique ground state does not apply.
    """
    if spec.dim < 2:
        raise ValueError("spectrum must contain at least two levels")
    if deg_tol is None:
        deg_tol = default_degeneracy_tolerance(spec)
    if deg_tol <= 0.0:
        raise ValueError(f"deg_tol must be positive, got {deg_tol}")
    gap = float(spec.energies[1] - spec.energies[0])
    if gap <= deg_tol:
        raise DegenerateGroundError(
            f"ground gap {gap:.3e} is within degeneracy tolerance {deg_tol:.3e}"
        )
    return GroundState(
        energy=float(spec.energies[0]), vector=spec.states[:, 0], gap=gap
    )
