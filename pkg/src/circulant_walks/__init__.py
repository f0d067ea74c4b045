"""Continuous-time quantum walks on circulant graphs.

Build validated circulant graphs, read their spectra in closed form,
evaluate transition amplitudes and fidelities, search time lattices for
antipodal state transfer, and classify each graph as PST / PGST /
AlmostPeriodic / NoPGST / Unknown with the deciding rule named.
"""

from .classify import (
    Citation,
    Classification,
    RuleCheck,
    Verdict,
    VerificationEvidence,
    classify,
    theorem_hypotheses,
    verify_classification,
)
from .dynamics import (
    TransferRecord,
    fidelity,
    is_periodic_at,
    product_law_check,
    transition_entry,
    transition_matrix,
)
from .errors import CirculantError
from .graphs import (
    CirculantGraph,
    DivisorProfile,
    GcdClass,
    IntersectionStatus,
    divisor_profile,
    euler_phi,
    gcd_class,
    is_gcd_set,
    make_graph,
    parse_connection_set,
    proper_divisors,
    symmetric_sets,
)
from .spectra import (
    CycleSpectrum,
    ParityConflict,
    Spectrum,
    cycle_eigenvalue,
    cycle_spectrum,
    distinct_positive_cycle_eigenvalues,
    parity_conflicts,
    spectrum,
)
from .timesearch import (
    KroneckerTarget,
    TimeLattice,
    best_time_on_lattice,
    cycle_phase_targets,
    kronecker_solve,
    scan_lattice,
)

__version__ = "0.1.0"

__all__ = [
    "CirculantError",
    "CirculantGraph",
    "Citation",
    "Classification",
    "CycleSpectrum",
    "DivisorProfile",
    "GcdClass",
    "IntersectionStatus",
    "KroneckerTarget",
    "ParityConflict",
    "RuleCheck",
    "Spectrum",
    "TimeLattice",
    "TransferRecord",
    "Verdict",
    "VerificationEvidence",
    "best_time_on_lattice",
    "classify",
    "cycle_eigenvalue",
    "cycle_phase_targets",
    "cycle_spectrum",
    "distinct_positive_cycle_eigenvalues",
    "divisor_profile",
    "euler_phi",
    "fidelity",
    "gcd_class",
    "is_gcd_set",
    "is_periodic_at",
    "kronecker_solve",
    "make_graph",
    "parity_conflicts",
    "parse_connection_set",
    "product_law_check",
    "proper_divisors",
    "scan_lattice",
    "spectrum",
    "symmetric_sets",
    "theorem_hypotheses",
    "transition_entry",
    "transition_matrix",
    "verify_classification",
]
