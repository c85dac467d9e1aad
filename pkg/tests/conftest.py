"""Shared brute-force oracles for the test suite.

Everything here is built from raw numpy primitives (explicit Kronecker
products, direct eigh/svd calls, handwritten index arithmetic) so that it
stays independent of the library code it is used to check.
"""

import numpy as np

I2 = np.eye(2)
SX = np.array([[0.0, 1.0], [1.0, 0.0]])
SZ = np.array([[1.0, 0.0], [0.0, -1.0]])


def kron_op(mat, i, n):
    """Single-site operator embedded by explicit Kronecker products."""
    out = np.array([[1.0]])
    for k in range(n):
        out = np.kron(out, mat if k == i else I2)
    return out


def brute_hamiltonian(delta, h, J):
    """Reference Hamiltonian: canonical-order sum of embedded Pauli terms."""
    n = len(delta)
    dim = 2**n
    H = np.zeros((dim, dim))
    for i in range(n):
        H = H + (-0.5 * delta[i]) * kron_op(SX, i, n)
    for i in range(n):
        H = H + (-h[i]) * kron_op(SZ, i, n)
    for i in range(n):
        for j in range(i + 1, n):
            H = H + J[i][j] * (kron_op(SZ, i, n) @ kron_op(SZ, j, n))
    return H


def brute_sz(vec, i, n):
    """<vec|sz_i|vec> via the explicit embedded operator."""
    return float(vec @ (kron_op(SZ, i, n) @ vec))


def brute_chi_sos(energies, vectors, i, j, n):
    """Sum-over-states susceptibility straight from its defining formula."""
    v0 = vectors[:, 0]
    total = 0.0
    for k in range(1, len(energies)):
        vk = vectors[:, k]
        a = float(v0 @ (kron_op(SZ, j, n) @ vk))
        b = float(vk @ (kron_op(SZ, i, n) @ v0))
        c = float(v0 @ (kron_op(SZ, i, n) @ vk))
        d = float(vk @ (kron_op(SZ, j, n) @ v0))
        total += (a * b + c * d) / (energies[k] - energies[0])
    return total


def brute_ground(delta, h, J):
    """(energies, ground vector) from a direct eigh of the reference matrix."""
    energies, vectors = np.linalg.eigh(brute_hamiltonian(delta, h, J))
    return energies, vectors


def random_couplings(rng, n, zero_pairs=()):
    """Dense random symmetric zero-diagonal coupling matrix in [-1, 1]."""
    J = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in zero_pairs:
                J[i, j] = J[j, i] = rng.uniform(-1.0, 1.0)
    return J
