"""Decision procedure mapping (n, S) to a transfer verdict with a rule tag.

Verdicts: PST (a finite time attains fidelity 1), PGST (fidelity approaches
1 along a time sequence), AlmostPeriodic (the walk returns to a phase of
the identity along a sequence; transfer undecided), NoPGST, Unknown.

The rules fire in a fixed order; the first hit wins:

  1. odd order           -> NoPGST   (tag LemmaL1: transfer needs the
                                      antipodal vertex n/2)
  2. parity obstruction  -> NoPGST   (equal eigenvalues at an odd and an
                                      even index force contradictory limit
                                      phases; numeric equality, so the
                                      verdict carries a caveat flag)
  3. cycles              -> PST for n in {2, 4}, PGST for n = 2^k >= 8
                            (tag T1), NoPGST otherwise
  4. n = 2^k, non-integral spectrum:
       T2  least partially-covered divisor class has size = 2 (mod 4)
       T3  some divisor class is partially covered with size = 2 (mod 4)
           (least such divisor is the witness)
       T4  exactly one of n/2, n/4 lies in S and every other divisor
           class meets S in a multiple of 4 -> quarter-turn lattice
       else AlmostPeriodic (T2's other branch)
  5. n = 2^k, integral: T4's hypothesis upgrades PGST to PST
     (integral -> periodic at 2 pi, and periodic + PGST -> PST);
     tag So_IP2_upgrade. Otherwise Unknown.
  6. everything else     -> Unknown

Positive verdicts always name the pair (0, n/2) and the time lattice that
carries the approach sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .dynamics import TransferRecord
from .graphs import CirculantGraph, DivisorProfile, IntersectionStatus, divisor_profile, proper_divisors
from .spectra import EQUALITY_TOL, INTEGRALITY_TOL, ParityConflict, Spectrum, parity_conflicts, spectrum
from .timesearch import TimeLattice, best_time_on_lattice

#: fidelity-1 detection tolerance used when verifying PST verdicts
PST_TOL = 1e-9

#: default lattice-index budget for verification scans
VERIFY_BUDGET = 100_000


class Verdict(Enum):
    PST = "PST"
    PGST = "PGST"
    ALMOST_PERIODIC = "AlmostPeriodic"
    NO_PGST = "NoPGST"
    UNKNOWN = "Unknown"


class Citation(Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    PARITY_OBSTRUCTION = "ParityObstruction"
    LEMMA_L1 = "LemmaL1"
    SO_IP2_UPGRADE = "So_IP2_upgrade"
    NONE = "None"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    citation: Citation
    witness_divisor: int | None = None
    pair: tuple[int, int] | None = None
    lattice: TimeLattice | None = None
    numeric_caveat: bool = False

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "citation": self.citation.value,
            "witness_divisor": self.witness_divisor,
            "pair": list(self.pair) if self.pair else None,
            "lattice": self.lattice.value if self.lattice else None,
            "numeric_caveat": self.numeric_caveat,
        }


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _half_quarter_parity_holds(G: CirculantGraph, profile: DivisorProfile) -> tuple[bool, str]:
    """The T4 hypothesis: odd |{n/2, n/4} & S| and 0 (mod 4) everywhere else."""
    n = G.n
    special = {n // 2} | ({n // 4} if n % 4 == 0 else set())
    hits = special & set(G.connection_set)
    if len(hits) % 2 == 0:
        return False, f"|{{n/2, n/4}} ∩ S| = {len(hits)} is even"
    for e in profile.entries:
        if e.d in special:
            continue
        if e.intersection_size % 4 != 0:
            return False, (
                f"|S ∩ S_{n}({e.d})| = {e.intersection_size} != 0 (mod 4)"
            )
    return True, f"|{{n/2, n/4}} ∩ S| = {len(hits)} odd; all other classes meet S in multiples of 4"


def classify(
    G: CirculantGraph,
    equality_tol: float = EQUALITY_TOL,
    integrality_tol: float = INTEGRALITY_TOL,
) -> Classification:
    """Apply the decision rules in order; see the module docstring."""
    n = G.n
    antipodal = (0, n // 2) if n % 2 == 0 else None

    # 1: odd order has no antipodal vertex to receive the state
    if n % 2 == 1:
        return Classification(Verdict.NO_PGST, Citation.LEMMA_L1)

    # 2: equal eigenvalues at opposite-parity indices
    spec = spectrum(G, integrality_tol)
    conflicts = parity_conflicts(spec, equality_tol)
    if conflicts:
        exact = all(spec.values[c.l] == spec.values[c.l_prime] for c in conflicts)
        return Classification(
            Verdict.NO_PGST, Citation.PARITY_OBSTRUCTION, numeric_caveat=not exact
        )

    # 3: cycles are fully classified
    if G.is_cycle():
        if n == 2:
            # the single edge: exact transfer at pi/2, integral and periodic
            return Classification(
                Verdict.PST, Citation.SO_IP2_UPGRADE, pair=antipodal, lattice=TimeLattice.ODD_HALF_PI
            )
        if n == 4:
            # integral and periodic, so the cycle rule's PGST is exact here
            return Classification(
                Verdict.PST, Citation.T1, pair=antipodal, lattice=TimeLattice.ODD_HALF_PI
            )
        if _is_power_of_two(n):
            return Classification(
                Verdict.PGST, Citation.T1, pair=antipodal, lattice=TimeLattice.TWO_PI_Z,
                witness_divisor=1,
            )
        return Classification(Verdict.NO_PGST, Citation.T1)

    if not _is_power_of_two(n):
        return Classification(Verdict.UNKNOWN, Citation.NONE)

    profile = divisor_profile(G)
    t4_holds, _ = _half_quarter_parity_holds(G, profile)

    # 4: power-of-two order, non-integral spectrum
    if not spec.integral:
        least = profile.least_proper()
        assert least is not None  # non-integral means some class is partial
        if least.intersection_size % 4 == 2:
            return Classification(
                Verdict.PGST, Citation.T2, witness_divisor=least.d,
                pair=antipodal, lattice=TimeLattice.TWO_PI_Z,
            )
        two_mod_four = profile.least_proper_with_size_2_mod_4()
        if two_mod_four is not None:
            return Classification(
                Verdict.PGST, Citation.T3, witness_divisor=two_mod_four.d,
                pair=antipodal, lattice=TimeLattice.TWO_PI_Z,
            )
        if t4_holds:
            return Classification(
                Verdict.PGST, Citation.T4, pair=antipodal, lattice=TimeLattice.ODD_HALF_PI
            )
        return Classification(
            Verdict.ALMOST_PERIODIC, Citation.T2, witness_divisor=least.d,
            lattice=TimeLattice.TWO_PI_Z,
        )

    # 5: power-of-two order, integral spectrum (gcd-set)
    if t4_holds:
        return Classification(
            Verdict.PST, Citation.SO_IP2_UPGRADE, pair=antipodal, lattice=TimeLattice.ODD_HALF_PI
        )
    return Classification(Verdict.UNKNOWN, Citation.NONE)


@dataclass(frozen=True)
class RuleCheck:
    holds: bool
    detail: str


def theorem_hypotheses(
    G: CirculantGraph,
    equality_tol: float = EQUALITY_TOL,
    integrality_tol: float = INTEGRALITY_TOL,
) -> dict[str, RuleCheck]:
    """Which positive rule hypotheses hold for G, with the failing condition named.

    Purely explanatory; classify() fixes the rule precedence.
    """
    n = G.n
    spec = spectrum(G, integrality_tol)
    profile = divisor_profile(G)
    conflicts = parity_conflicts(spec, equality_tol)
    report: dict[str, RuleCheck] = {}

    if not G.is_cycle():
        report["T1"] = RuleCheck(False, "not a cycle")
    elif _is_power_of_two(n) and n >= 4:
        report["T1"] = RuleCheck(True, f"cycle of order {n} = 2^{n.bit_length() - 1}")
    else:
        report["T1"] = RuleCheck(False, f"cycle order {n} is not a power of two >= 4")

    pow2 = _is_power_of_two(n)
    least = profile.least_proper()
    if not pow2:
        report["T2"] = RuleCheck(False, f"order {n} is not a power of two")
        report["T3"] = RuleCheck(False, f"order {n} is not a power of two")
    elif least is None:
        report["T2"] = RuleCheck(False, "integral: no divisor class is partially covered")
        report["T3"] = RuleCheck(False, "integral: no divisor class is partially covered")
    else:
        size = least.intersection_size
        if size % 4 == 2:
            report["T2"] = RuleCheck(
                True, f"least partially-covered divisor d={least.d}, size {size} = 2 (mod 4)"
            )
        else:
            report["T2"] = RuleCheck(
                False,
                f"least partially-covered divisor d={least.d}, size {size} = 0 (mod 4)"
                " -> almost periodic branch",
            )
        witness = profile.least_proper_with_size_2_mod_4()
        if witness is not None:
            report["T3"] = RuleCheck(
                True,
                f"d={witness.d} has partial intersection of size"
                f" {witness.intersection_size} = 2 (mod 4)",
            )
        else:
            report["T3"] = RuleCheck(False, "no partially-covered class has size 2 (mod 4)")

    if not pow2:
        report["T4"] = RuleCheck(False, f"order {n} is not a power of two")
    else:
        holds, detail = _half_quarter_parity_holds(G, profile)
        report["T4"] = RuleCheck(holds, detail)

    if conflicts:
        c = conflicts[0]
        report["ParityObstruction"] = RuleCheck(
            True, f"theta_{c.l} = theta_{c.l_prime} = {c.value:.12g} with opposite parity"
        )
    else:
        report["ParityObstruction"] = RuleCheck(False, "no equal eigenvalues at opposite parity")
    return report


@dataclass(frozen=True)
class VerificationEvidence:
    """Search evidence attached to a verdict; never changes the verdict."""

    lattice: TimeLattice | None
    peak: TransferRecord | None
    pst_time: float | None
    budget: int
    budget_exhausted: bool
    obstruction: ParityConflict | None

    def to_dict(self) -> dict:
        return {
            "lattice": self.lattice.value if self.lattice else None,
            "peak": self.peak.to_dict() if self.peak else None,
            "pst_time": self.pst_time,
            "budget": self.budget,
            "budget_exhausted": self.budget_exhausted,
            "obstruction": (
                {"l": self.obstruction.l, "l_prime": self.obstruction.l_prime,
                 "value": self.obstruction.value}
                if self.obstruction
                else None
            ),
        }


def verify_classification(
    G: CirculantGraph,
    c: Classification,
    q_budget: int = VERIFY_BUDGET,
    pst_tol: float = PST_TOL,
) -> VerificationEvidence:
    """Scan the declared lattice to back the verdict with numbers.

    PST: look for a time with fidelity 1 within pst_tol (early stop);
    budget_exhausted reports a miss without failing. PGST and the
    undecided verdicts: report the peak over the budget. NoPGST: report
    the obstruction witness if any, and the scan ceiling over both
    lattices for even n.
    """
    n = G.n
    obstruction = None
    if c.citation is Citation.PARITY_OBSTRUCTION:
        conflicts = parity_conflicts(spectrum(G))
        obstruction = conflicts[0] if conflicts else None

    if n % 2 == 1:
        return VerificationEvidence(None, None, None, q_budget, False, obstruction)

    pair = c.pair or (0, n // 2)

    if c.verdict is Verdict.PST:
        lattice = c.lattice or TimeLattice.ODD_HALF_PI
        hit = best_time_on_lattice(
            G, *pair, lattice, (lattice.default_q_min, q_budget), stop_fidelity=1.0 - pst_tol
        )
        found = hit.fidelity >= 1.0 - pst_tol
        return VerificationEvidence(
            lattice, hit, hit.t if found else None, q_budget, not found, obstruction
        )

    if c.verdict is Verdict.PGST:
        lattice = c.lattice or TimeLattice.TWO_PI_Z
        peak = best_time_on_lattice(G, *pair, lattice, (lattice.default_q_min, q_budget))
        return VerificationEvidence(lattice, peak, None, q_budget, False, obstruction)

    # NoPGST / AlmostPeriodic / Unknown: a ceiling over both lattices
    peaks = [
        best_time_on_lattice(G, *pair, lat, (lat.default_q_min, q_budget))
        for lat in TimeLattice
    ]
    peak = max(peaks, key=lambda r: r.fidelity)
    return VerificationEvidence(None, peak, None, q_budget, False, obstruction)
