"""Closed-form circulant spectra in Fourier order.

Eigenvalues of a cycle: lambda_l = 2 cos(2 pi l / n). Eigenvalues of a
general circulant graph Cay(Z_n, S): theta_l = sum over s in S of
cos(2 pi l s / n), obtained here by accumulating the symmetric pairs
{s, n-s} together so cancellations are exact where the underlying cosines
are exactly representable.

Rational angles whose cosine is exact in binary floating point (2l/n in
{0, 1/3, 1/2, 2/3, 1, ...}) are snapped to the exact values 0, +-1, +-2;
everything else is a raw cosine. This keeps integer spectra exactly
integral without a symbolic layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import IndexOutOfRange, NotPowerOfTwo
from .graphs import CirculantGraph

#: default tolerance for "this eigenvalue is an integer"
INTEGRALITY_TOL = 1e-9

#: default tolerance for "these two eigenvalues are equal"
EQUALITY_TOL = 1e-10

# 2 cos(2 pi p / q) for the q where the value is exactly representable
_EXACT_BY_DENOMINATOR = {1: 2.0, 2: -2.0, 3: -1.0, 4: 0.0, 6: 1.0}


def cycle_eigenvalue(n: int, l: int) -> float:
    """The l-th cycle eigenvalue 2 cos(2 pi l / n), with exact special cases.

    Indices l and n - l give bit-identical values. Raises IndexOutOfRange
    unless 0 <= l <= n - 1.
    """
    if n < 2:
        raise IndexOutOfRange(f"cycle order must be >= 2, got {n}")
    if not 0 <= l <= n - 1:
        raise IndexOutOfRange(f"eigenvalue index {l} outside 0..{n - 1}")
    l = min(l, n - l)  # mirror symmetry, exact by construction
    q = n // math.gcd(l, n) if l else 1
    exact = _EXACT_BY_DENOMINATOR.get(q)
    if exact is not None:
        return exact
    return 2.0 * math.cos(2.0 * math.pi * l / n)


@dataclass(frozen=True)
class CycleSpectrum:
    """All n cycle eigenvalues in Fourier order (values[l] = values[n-l])."""

    n: int
    values: np.ndarray


@lru_cache(maxsize=256)
def _cycle_values(n: int) -> np.ndarray:
    values = np.empty(n, dtype=float)
    for l in range(n // 2 + 1):
        values[l] = cycle_eigenvalue(n, l)
        if l:
            values[n - l] = values[l]
    values.flags.writeable = False
    return values


def cycle_spectrum(n: int) -> CycleSpectrum:
    if n < 2:
        raise IndexOutOfRange(f"cycle order must be >= 2, got {n}")
    return CycleSpectrum(n=n, values=_cycle_values(n))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of Cay(Z_n, S) in Fourier order, with an integrality flag."""

    n: int
    values: np.ndarray
    integral: bool


def spectrum(G: CirculantGraph, integrality_tol: float = INTEGRALITY_TOL) -> Spectrum:
    """All n eigenvalues theta_l = sum_{s in S} cos(2 pi l s / n).

    Each unordered pair {s, n-s} contributes one cycle eigenvalue
    2 cos(2 pi l s / n); the self-paired element n/2 contributes (-1)^l.
    Both are looked up in the mirrored cycle table, so theta_l and
    theta_{n-l} are bit-identical and integer spectra come out exact.
    """
    n = G.n
    lam = _cycle_values(n)
    pairs, has_half = G.set_pairs()
    l = np.arange(n)
    theta = np.zeros(n, dtype=float)
    for s in pairs:
        theta += lam[(l * s) % n]
    if has_half:
        theta += lam[(l * (n // 2)) % n] / 2.0  # exactly +-1
    theta.flags.writeable = False
    integral = bool(np.all(np.abs(theta - np.round(theta)) < integrality_tol))
    return Spectrum(n=n, values=theta, integral=integral)


def distinct_positive_cycle_eigenvalues(n: int) -> list[tuple[int, float]]:
    """The n/4 pairs (l, lambda_l) for 0 <= l < n/4, strictly decreasing.

    Defined for powers of two n >= 8 (below that there are no irrational
    cycle eigenvalues to target). Raises NotPowerOfTwo otherwise.
    """
    if n < 8 or n & (n - 1):
        raise NotPowerOfTwo(f"order must be a power of two >= 8, got {n}")
    lam = _cycle_values(n)
    return [(l, float(lam[l])) for l in range(n // 4)]


@dataclass(frozen=True)
class ParityConflict:
    """Two equal eigenvalues sitting at indices of opposite parity.

    Antipodal transfer forces limit phases (-1)^l gamma per index; equal
    eigenvalues at an odd and an even index therefore contradict each
    other, ruling pretty good transfer out.
    """

    l: int
    l_prime: int
    value: float


def parity_conflicts(spec: Spectrum, tol: float = EQUALITY_TOL) -> list[ParityConflict]:
    """All pairs (l, l') with l < l', opposite parity, |theta_l - theta_l'| < tol.

    Pairs are returned in lexicographic order. Equality is numeric; callers
    that act on the result should surface the tolerance caveat.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    values = spec.values
    order = np.argsort(values, kind="stable")
    found: list[ParityConflict] = []
    m = len(order)
    for i in range(m):
        li = int(order[i])
        vi = values[li]
        for j in range(i + 1, m):
            lj = int(order[j])
            if values[lj] - vi >= tol:
                break
            if (li ^ lj) & 1:
                a, b = min(li, lj), max(li, lj)
                found.append(ParityConflict(a, b, float(values[a])))
    found.sort(key=lambda c: (c.l, c.l_prime))
    return found
