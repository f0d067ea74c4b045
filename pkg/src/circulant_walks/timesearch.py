"""Time-lattice search: simultaneous phase approximation and fidelity scans.

Transfer times are sought on two arithmetic progressions: the full-turn
lattice 2 pi Z and the odd quarter-turn lattice (2 Z + 1) pi / 2. The
engine is an exhaustive, vectorized scan over lattice indices q; a
Kronecker-style solver finds the smallest q driving a list of eigenvalue
phases simultaneously close to prescribed targets mod 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np

from .dynamics import TransferRecord
from .errors import EmptyRange, LengthMismatch, NotPowerOfTwo, RangeTooLarge, RatioTooSmall, VertexOutOfRange
from .graphs import CirculantGraph
from .spectra import distinct_positive_cycle_eigenvalues, spectrum

#: default Kronecker solver tolerance, in phase units (fractions of 1)
SOLVER_EPS = 1e-3

#: default cap on scan size (points per scan_lattice call)
SCAN_CAP = 10_000_000

_CHUNK = 1 << 16


class TimeLattice(Enum):
    """Arithmetic progression of candidate times, time(q) = offset + step * q."""

    TWO_PI_Z = "2piZ"
    ODD_HALF_PI = "oddHalfPi"

    @property
    def offset(self) -> float:
        return 0.0 if self is TimeLattice.TWO_PI_Z else math.pi / 2.0

    @property
    def step(self) -> float:
        return 2.0 * math.pi if self is TimeLattice.TWO_PI_Z else math.pi

    @property
    def default_q_min(self) -> int:
        # q = 0 on the full-turn lattice is t = 0, which is trivial
        return 1 if self is TimeLattice.TWO_PI_Z else 0

    def time(self, q: int) -> float:
        return self.offset + self.step * q

    def times(self, q: np.ndarray) -> np.ndarray:
        return self.offset + self.step * q

    @classmethod
    def from_name(cls, name: str) -> "TimeLattice":
        for member in cls:
            if member.value == name:
                return member
        raise ValueError(f"unknown lattice {name!r}; expected '2piZ' or 'oddHalfPi'")


@dataclass(frozen=True)
class KroneckerTarget:
    """Simultaneous approximation problem: find q with q*theta_j ~ alpha_j (mod 1).

    thetas are the values to multiply, alphas the phase targets in [0, 1),
    eps the acceptance distance to the nearest integer.
    """

    thetas: tuple[float, ...]
    alphas: tuple[float, ...]
    eps: float

    def __post_init__(self) -> None:
        if len(self.thetas) != len(self.alphas):
            raise LengthMismatch(
                f"{len(self.thetas)} thetas vs {len(self.alphas)} alphas"
            )
        if self.eps <= 0:
            raise ValueError(f"eps must be positive, got {self.eps}")


def _int_distance(x: np.ndarray) -> np.ndarray:
    return np.abs(x - np.round(x))


def kronecker_solve(target: KroneckerTarget, q_max: int) -> tuple[int, list[float]] | None:
    """Smallest q in [1, q_max] with dist(q*theta_j - alpha_j, Z) < eps for all j.

    Returns (q, residuals) or None when no q in range qualifies. The scan
    is exhaustive and vectorized; shrinking eps can only increase the
    minimal q.
    """
    if q_max < 1:
        raise ValueError(f"q_max must be >= 1, got {q_max}")
    thetas = np.asarray(target.thetas, dtype=float)
    alphas = np.asarray(target.alphas, dtype=float)
    if thetas.size == 0:
        return 1, []
    for start in range(1, q_max + 1, _CHUNK):
        qs = np.arange(start, min(start + _CHUNK, q_max + 1), dtype=float)
        residuals = _int_distance(np.outer(qs, thetas) - alphas)
        hits = np.flatnonzero(np.all(residuals < target.eps, axis=1))
        if hits.size:
            i = int(hits[0])
            return int(qs[i]), [float(r) for r in residuals[i]]
    return None


def cycle_phase_targets(n: int, flip_divisor: int, eps: float = SOLVER_EPS) -> KroneckerTarget:
    """Phase targets that align all cycle eigenvalue phases at full turns.

    For n a power of two, the targets cover the distinct positive
    irrational-side eigenvalues lambda_l, 1 <= l < n/4. The target is 1/2
    exactly at indices whose 2-adic valuation matches flip_divisor
    (l = flip_divisor * a with a odd) and 0 elsewhere: at a solution
    q, the time t = 2 pi q puts every phase lambda_l * t either at a full
    turn or at a half turn offset a*pi, which is what concentrates the
    walk on the antipodal vertex.
    """
    if n < 8 or n & (n - 1):
        raise NotPowerOfTwo(f"order must be a power of two >= 8, got {n}")
    if flip_divisor < 1 or flip_divisor & (flip_divisor - 1) or n % flip_divisor:
        raise NotPowerOfTwo(f"flip divisor must be a power-of-two divisor of {n}, got {flip_divisor}")
    if n // flip_divisor < 8:
        raise RatioTooSmall(f"n / flip_divisor = {n // flip_divisor} < 8")
    lam = dict(distinct_positive_cycle_eigenvalues(n))
    thetas, alphas = [], []
    for l in range(1, n // 4):
        thetas.append(lam[l])
        a, rem = divmod(l, flip_divisor)
        alphas.append(0.5 if rem == 0 and a % 2 == 1 else 0.0)
    return KroneckerTarget(thetas=tuple(thetas), alphas=tuple(alphas), eps=eps)


def _check_q_range(q_range: tuple[int, int]) -> tuple[int, int]:
    q_lo, q_hi = int(q_range[0]), int(q_range[1])
    if q_lo > q_hi:
        raise EmptyRange(f"empty lattice index range [{q_lo}, {q_hi}]")
    return q_lo, q_hi


def _amplitude_chunks(
    G: CirculantGraph, u: int, v: int, lattice: TimeLattice, q_lo: int, q_hi: int
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (q block, amplitude block) over the inclusive index range."""
    n = G.n
    if not 0 <= u < n:
        raise VertexOutOfRange(f"u = {u} outside 0..{n - 1}")
    if not 0 <= v < n:
        raise VertexOutOfRange(f"v = {v} outside 0..{n - 1}")
    theta = spectrum(G).values
    w = np.exp(-2j * np.pi * ((v - u) % n) * np.arange(n) / n)
    for start in range(q_lo, q_hi + 1, _CHUNK):
        qs = np.arange(start, min(start + _CHUNK, q_hi + 1))
        t = lattice.times(qs)
        amps = np.exp(-1j * np.outer(t, theta)) @ w / n
        yield qs, amps


def best_time_on_lattice(
    G: CirculantGraph,
    u: int,
    v: int,
    lattice: TimeLattice,
    q_range: tuple[int, int],
    stop_fidelity: float | None = None,
) -> TransferRecord:
    """The maximal-fidelity record over {time(q) : q in q_range}, ties to smallest q.

    With stop_fidelity set, the scan returns the first record at or above
    that threshold instead of completing the range (deterministic: indices
    are visited in ascending order).
    """
    q_lo, q_hi = _check_q_range(q_range)
    best_q, best_amp, best_fid = q_lo, 0j, -1.0
    for qs, amps in _amplitude_chunks(G, u, v, lattice, q_lo, q_hi):
        fids = np.abs(amps)
        if stop_fidelity is not None:
            hits = np.flatnonzero(fids >= stop_fidelity)
            if hits.size:
                i = int(hits[0])
                q = int(qs[i])
                return TransferRecord(
                    t=lattice.time(q), amplitude=complex(amps[i]), fidelity=float(fids[i]), q=q
                )
        i = int(np.argmax(fids))
        if fids[i] > best_fid:
            best_q, best_amp, best_fid = int(qs[i]), complex(amps[i]), float(fids[i])
    return TransferRecord(t=lattice.time(best_q), amplitude=best_amp, fidelity=best_fid, q=best_q)


def scan_lattice(
    G: CirculantGraph,
    u: int,
    v: int,
    lattice: TimeLattice,
    q_range: tuple[int, int],
    max_points: int = SCAN_CAP,
) -> list[TransferRecord]:
    """One TransferRecord per lattice index, in index order.

    Raises EmptyRange / RangeTooLarge. Output is deterministic and
    independent of the internal chunking.
    """
    q_lo, q_hi = _check_q_range(q_range)
    count = q_hi - q_lo + 1
    if count > max_points:
        raise RangeTooLarge(f"{count} points exceed the scan cap {max_points}")
    records: list[TransferRecord] = []
    for qs, amps in _amplitude_chunks(G, u, v, lattice, q_lo, q_hi):
        fids = np.abs(amps)
        for q, amp, fid in zip(qs, amps, fids):
            records.append(
                TransferRecord(t=lattice.time(int(q)), amplitude=complex(amp), fidelity=float(fid), q=int(q))
            )
    return records
