"""Independent reference implementations used only by the tests.

Everything here is built from first principles — the dense adjacency
matrix and generic matrix exponentials / eigendecompositions — and never
calls into the library's closed-form Fourier path. Where tests freeze
regression values, these routines fixed them.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg


def adjacency_matrix(n: int, members) -> np.ndarray:
    """A[a, b] = 1 iff (a - b) mod n is in the connection set."""
    S = {s % n for s in members}
    A = np.zeros((n, n))
    for a in range(n):
        for b in range(n):
            if (a - b) % n in S:
                A[a, b] = 1.0
    return A


def expm_transition(n: int, members, t: float) -> np.ndarray:
    """H(t) = exp(-i t A) via scipy's Pade-based expm."""
    return scipy.linalg.expm(-1j * t * adjacency_matrix(n, members))


def eigh_transition(n: int, members, t: float) -> np.ndarray:
    """H(t) via a dense Hermitian eigendecomposition of A."""
    values, vectors = np.linalg.eigh(adjacency_matrix(n, members))
    return (vectors * np.exp(-1j * t * values)) @ vectors.conj().T


def fourier_eigenvalues(n: int, members) -> np.ndarray:
    """Eigenvalues by applying A to the explicit Fourier vectors.

    v_l = (1, w^l, ..., w^(l(n-1))) with w = exp(2 pi i / n); the Rayleigh
    quotient of each is real for symmetric sets.
    """
    A = adjacency_matrix(n, members)
    w = np.exp(2j * np.pi / n)
    out = np.empty(n)
    for l in range(n):
        v = w ** (l * np.arange(n))
        out[l] = ((A @ v)[0] / v[0]).real
    return out
