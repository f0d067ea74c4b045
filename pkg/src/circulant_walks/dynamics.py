"""Walk dynamics: transition amplitudes, fidelities, and periodicity checks.

The transition matrix is H(t) = exp(-i t A) for the adjacency matrix A.
Because circulants diagonalize in the Fourier basis, every entry has the
closed form

    H(t)[u, v] = (1/n) sum_l exp(-i theta_l t) * omega_n^(-l (v - u))

with omega_n = exp(2 pi i / n). All operations here evaluate that sum
directly (an inverse DFT of the phase vector); no general matrix
exponential is ever taken. Entries depend only on (v - u) mod n.

Convention: fidelity is the modulus |H(t)[u, v]| (not the modulus squared);
it equals 1 exactly at perfect state transfer.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OrderTooLarge, SetsNotDisjoint, VertexOutOfRange
from .graphs import CirculantGraph, make_graph
from .spectra import spectrum

#: order cap for full-matrix operations (entry/fidelity calls are uncapped)
MATRIX_ORDER_CAP = 4096

#: default tolerance for H(t) = gamma * I detection
PERIODICITY_TOL = 1e-9


@dataclass(frozen=True)
class TransferRecord:
    """One sampled time: amplitude H(t)[u, v] and its modulus.

    q is the lattice index when the time came from a lattice scan, else None.
    """

    t: float
    amplitude: complex
    fidelity: float
    q: int | None = None

    def to_dict(self) -> dict:
        d: dict = {}
        if self.q is not None:
            d["q"] = self.q
        d.update(
            t=self.t,
            re=self.amplitude.real,
            im=self.amplitude.imag,
            fidelity=self.fidelity,
        )
        return d


def _check_vertex(G: CirculantGraph, u: int, name: str) -> None:
    if not 0 <= u < G.n:
        raise VertexOutOfRange(f"{name} = {u} outside 0..{G.n - 1}")


def _phase_row(G: CirculantGraph, t: float) -> np.ndarray:
    """h with h[k] = H(t)[u, u+k]; one row determines the whole circulant."""
    phases = np.exp(-1j * spectrum(G).values * t)
    return np.fft.fft(phases) / G.n


def transition_entry(G: CirculantGraph, u: int, v: int, t: float) -> complex:
    """H(t)[u, v] by the closed-form Fourier sum (O(n))."""
    _check_vertex(G, u, "u")
    _check_vertex(G, v, "v")
    n = G.n
    k = (v - u) % n
    theta = spectrum(G).values
    w = np.exp(-2j * np.pi * k * np.arange(n) / n)
    return complex(np.exp(-1j * theta * t) @ w / n)


def fidelity(G: CirculantGraph, u: int, v: int, t: float) -> float:
    """|H(t)[u, v]|, in [0, 1] up to roundoff."""
    return abs(transition_entry(G, u, v, t))


def transition_matrix(G: CirculantGraph, t: float, max_order: int = MATRIX_ORDER_CAP) -> np.ndarray:
    """The full n x n unitary H(t). Raises OrderTooLarge above max_order."""
    if G.n > max_order:
        raise OrderTooLarge(f"n = {G.n} exceeds the full-matrix cap {max_order}")
    h = _phase_row(G, t)
    idx = (np.arange(G.n)[None, :] - np.arange(G.n)[:, None]) % G.n
    return h[idx]


def is_periodic_at(G: CirculantGraph, t: float, tol: float = PERIODICITY_TOL) -> complex | None:
    """The unimodular gamma with H(t) = gamma * I, or None.

    Checks max off-diagonal modulus < tol and a diagonal of unit modulus
    within tol (all diagonal entries of a circulant are equal). The
    returned gamma is normalized to |gamma| = 1.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    h = _phase_row(G, t)
    off = np.max(np.abs(h[1:])) if G.n > 1 else 0.0
    diag = complex(h[0])
    if off < tol and abs(abs(diag) - 1.0) < tol:
        return diag / abs(diag)
    return None


def product_law_check(G1: CirculantGraph, G2: CirculantGraph, t: float) -> float:
    """Max-entry deviation between H_{S1 u S2}(t) and H_{S1}(t) H_{S2}(t).

    Walks generated by disjoint symmetric sets commute, so the union's
    transition matrix factors; the deviation should sit at roundoff level.
    Raises SetsNotDisjoint (or ValueError on mismatched orders).
    """
    if G1.n != G2.n:
        raise ValueError(f"orders differ: {G1.n} != {G2.n}")
    s1, s2 = set(G1.connection_set), set(G2.connection_set)
    overlap = s1 & s2
    if overlap:
        raise SetsNotDisjoint(f"connection sets share {sorted(overlap)}")
    union = make_graph(G1.n, sorted(s1 | s2))
    H_union = transition_matrix(union, t)
    H_product = transition_matrix(G1, t) @ transition_matrix(G2, t)
    return float(np.max(np.abs(H_union - H_product)))
