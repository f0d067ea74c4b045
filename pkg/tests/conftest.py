"""Shared fixtures and hypothesis strategies."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from circulant_walks import CirculantGraph, make_graph


def symmetric_units(n: int) -> list[tuple[int, ...]]:
    """The indivisible building blocks of symmetric sets: pairs plus n/2."""
    units: list[tuple[int, ...]] = [(s, n - s) for s in range(1, (n + 1) // 2) if s != n - s]
    if n % 2 == 0:
        units.append((n // 2,))
    return units


def graph_from_mask(n: int, mask: int) -> CirculantGraph:
    units = symmetric_units(n)
    members = sorted({x for bit, unit in enumerate(units) if mask >> bit & 1 for x in unit})
    return make_graph(n, members)


@st.composite
def circulant_graphs(draw, min_n: int = 2, max_n: int = 64, even_only: bool = False):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if even_only and n % 2:
        n += 1
    units = symmetric_units(n)
    mask = draw(st.integers(min_value=1, max_value=2 ** len(units) - 1))
    return graph_from_mask(n, mask)


def random_graph(rng: np.random.Generator, min_n: int = 2, max_n: int = 64) -> CirculantGraph:
    n = int(rng.integers(min_n, max_n + 1))
    units = symmetric_units(n)
    mask = int(rng.integers(1, 2 ** len(units)))
    return graph_from_mask(n, mask)
