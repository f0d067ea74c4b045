"""Acceptance suite: one test per release criterion, at pinned tolerances.

Each criterion prints its own PASS/FAIL line (run with -s to see them all
on success). Regression constants marked "frozen" were fixed by the
independent dense-eigendecomposition oracle in tests/oracle.py.
"""

import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

from circulant_walks import (
    Citation,
    TimeLattice,
    Verdict,
    best_time_on_lattice,
    classify,
    fidelity,
    is_gcd_set,
    is_periodic_at,
    make_graph,
    parity_conflicts,
    product_law_check,
    scan_lattice,
    spectrum,
    symmetric_sets,
    transition_entry,
    transition_matrix,
    verify_classification,
)
from circulant_walks.errors import EmptySet

from conftest import random_graph, symmetric_units

HALF_PI = math.pi / 2

# frozen oracle regressions (argmax index, peak fidelity)
EX1_WINDOW_PEAK = (7810, 0.9970725072808377)
EX2_WINDOW_PEAK = (236, 0.9997270879133395)
EX3B_CEILING = (3465, 0.49999999919722604)
C8_LATTICE_PEAK = (40391, 0.9999999999527374)
C16_LATTICE_PEAK = (26665, 0.9995187208510251)


@contextmanager
def criterion(name: str, seconds: float):
    start = time.monotonic()
    try:
        yield
    except Exception:
        print(f"ACCEPTANCE {name}: FAIL")
        raise
    elapsed = time.monotonic() - start
    assert elapsed < seconds, f"{name} took {elapsed:.1f}s, budget {seconds}s"
    print(f"ACCEPTANCE {name}: PASS ({elapsed:.2f}s)")


def test_exact_pst_anchors():
    with criterion("exact-pst-anchors", 1.0):
        c4 = make_graph(4, [1, 3])
        amp = transition_entry(c4, 0, 2, HALF_PI)
        assert abs(fidelity(c4, 0, 2, HALF_PI) - 1.0) < 1e-12
        assert abs(amp - (-1.0)) < 1e-12
        p2 = make_graph(2, [1])
        assert abs(fidelity(p2, 0, 1, HALF_PI) - 1.0) < 1e-12


def test_example_3a_integral_upgrade():
    with criterion("example-3a-pst", 5.0):
        G = make_graph(8, [1, 2, 3, 5, 6, 7])
        c = classify(G)
        assert c.verdict is Verdict.PST
        evidence = verify_classification(G, c, q_budget=10_000, pst_tol=1e-9)
        assert evidence.pst_time is not None
        ratio = evidence.pst_time / HALF_PI
        assert abs(ratio - round(ratio)) < 1e-9 and round(ratio) % 2 == 1
        assert evidence.peak.fidelity >= 1 - 1e-9
        gamma = is_periodic_at(G, 2 * math.pi, tol=1e-9)
        assert gamma is not None
        assert abs(gamma - 1.0) < 1e-9


def test_example_3b_parity_obstruction():
    with criterion("example-3b-obstruction", 30.0):
        G = make_graph(16, [1, 7, 9, 15])
        c = classify(G)
        assert c.verdict is Verdict.NO_PGST
        assert c.citation is Citation.PARITY_OBSTRUCTION
        witness = parity_conflicts(spectrum(G))[0]
        assert (witness.l, witness.l_prime) == (1, 4)
        assert abs(witness.value) < 1e-12
        peak = best_time_on_lattice(G, 0, 8, TimeLattice.TWO_PI_Z, (1, 10_000))
        assert peak.fidelity < 1 - 1e-3
        assert peak.q == EX3B_CEILING[0]
        assert peak.fidelity == pytest.approx(EX3B_CEILING[1], abs=1e-8)


def test_example_1_figure_window():
    with criterion("example-1-figure-1", 30.0):
        G = make_graph(16, [1, 2, 3, 4, 12, 13, 14, 15])
        c = classify(G)
        assert c.verdict is Verdict.PGST
        assert c.citation is Citation.T3
        assert c.witness_divisor == 2
        records = scan_lattice(G, 0, 8, TimeLattice.TWO_PI_Z, (7500, 8000))
        assert len(records) == 501
        best = max(records, key=lambda r: r.fidelity)
        assert best.fidelity >= 0.9
        assert best.q == EX1_WINDOW_PEAK[0]
        assert best.fidelity == pytest.approx(EX1_WINDOW_PEAK[1], abs=1e-8)


def test_example_2_figure_window():
    with criterion("example-2-figure-2", 30.0):
        G = make_graph(16, [1, 3, 4, 12, 13, 15])
        c = classify(G)
        assert c.verdict is Verdict.PGST
        assert c.citation is Citation.T4
        assert c.lattice is TimeLattice.ODD_HALF_PI
        records = scan_lattice(G, 0, 8, TimeLattice.ODD_HALF_PI, (0, 249))
        assert len(records) == 250
        best = max(records, key=lambda r: r.fidelity)
        assert best.fidelity >= 0.9
        assert best.q == EX2_WINDOW_PEAK[0]
        assert best.fidelity == pytest.approx(EX2_WINDOW_PEAK[1], abs=1e-8)


def test_cycle_census_and_search():
    with criterion("cycle-census", 120.0):
        for n in range(2, 65):
            verdict = classify(make_graph(n, [1, n - 1])).verdict
            positive = verdict in (Verdict.PST, Verdict.PGST)
            assert positive == (n & (n - 1) == 0), n
        for n, (frozen_q, frozen_peak) in ((8, C8_LATTICE_PEAK), (16, C16_LATTICE_PEAK)):
            record = best_time_on_lattice(
                make_graph(n, [1, n - 1]), 0, n // 2, TimeLattice.TWO_PI_Z, (1, 100_000)
            )
            assert record.fidelity >= 0.99
            assert record.q == frozen_q
            assert record.fidelity == pytest.approx(frozen_peak, abs=1e-8)


def test_gcd_set_integrality_equivalence():
    with criterion("gcd-set-integrality", 60.0):
        for n in (8, 12, 16):
            for members in symmetric_sets(n):
                G = make_graph(n, members)
                assert spectrum(G, integrality_tol=1e-9).integral == is_gcd_set(G), (n, members)


def test_structural_invariants():
    with criterion("structural-invariants", 60.0):
        rng = np.random.default_rng(2024)

        # unitarity
        for _ in range(30):
            G = random_graph(rng)
            t = float(rng.uniform(0, 100))
            H = transition_matrix(G, t)
            assert np.max(np.abs(H @ H.conj().T - np.eye(G.n))) < 1e-9

        # group law H(t+s) = H(t) H(s)
        for _ in range(20):
            G = random_graph(rng, max_n=48)
            t, s = rng.uniform(0, 50, size=2)
            deviation = np.max(
                np.abs(transition_matrix(G, t + s) - transition_matrix(G, t) @ transition_matrix(G, s))
            )
            assert deviation < 1e-9

        # product law on 200 random disjoint symmetric pairs
        checked = 0
        while checked < 200:
            n = int(rng.integers(4, 65))
            units = symmetric_units(n)
            if len(units) < 2:
                continue
            split = rng.integers(0, 2, size=len(units))
            if split.all() or not split.any():
                continue
            left = sorted({x for u, take in zip(units, split) if take for x in u})
            right = sorted({x for u, take in zip(units, split) if not take for x in u})
            t = float(rng.uniform(0, 20))
            assert product_law_check(make_graph(n, left), make_graph(n, right), t) < 1e-9
            checked += 1

        # circulant shift invariance, bit-exact
        for _ in range(30):
            G = random_graph(rng)
            t = float(rng.uniform(0, 100))
            u = int(rng.integers(0, G.n))
            v = int(rng.integers(0, G.n))
            assert transition_entry(G, u, v, t) == transition_entry(G, 0, (v - u) % G.n, t)

        # antipodal half-turn phase formula
        for _ in range(20):
            G = random_graph(rng)
            if G.n % 2:
                continue
            t = float(rng.uniform(0, 100))
            theta = spectrum(G).values
            explicit = sum(np.exp(-1j * (theta[l] * t + l * math.pi)) for l in range(G.n)) / G.n
            assert abs(transition_entry(G, 0, G.n // 2, t) - explicit) < 1e-12


def test_exhaustive_n16_consistency_harness():
    with criterion("n16-consistency-harness", 600.0):
        budget = 100_000
        counts: dict[str, int] = {}
        total = 0
        for members in symmetric_sets(16, include_empty=True):
            total += 1
            if not members:
                with pytest.raises(EmptySet):
                    make_graph(16, members)
                continue
            G = make_graph(16, members)
            c = classify(G)
            counts[c.verdict.value] = counts.get(c.verdict.value, 0) + 1
            if c.verdict is Verdict.PST:
                evidence = verify_classification(G, c, q_budget=budget)
                assert evidence.pst_time is not None, members
            elif c.verdict is Verdict.PGST:
                lattice = c.lattice
                hit = best_time_on_lattice(
                    G, 0, 8, lattice, (lattice.default_q_min, budget), stop_fidelity=0.98
                )
                assert hit.fidelity >= 0.98, (members, hit.fidelity)
            elif c.verdict is Verdict.NO_PGST:
                for lattice in TimeLattice:
                    ceiling = best_time_on_lattice(
                        G, 0, 8, lattice, (lattice.default_q_min, budget)
                    )
                    assert ceiling.fidelity <= 0.999, (members, lattice, ceiling.fidelity)
        assert total == 256
        print(f"n16 verdict counts: {counts}")
