"""Command-line surface: spectrum, classify, census, fidelity, search, scan.

All data goes to stdout (or --out); diagnostics go to stderr. Exit codes:
0 success, 2 usage error, 1 computation error. Formats are stable: JSON
objects for single results, JSON lines for census, CSV with header
q,t,re,im,fidelity (floats at 17 significant digits) for scans.

The environment variable CIRCULANT_TOL, when set, overrides the default
eigenvalue-equality and integrality tolerances.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import IO, Sequence

from . import __version__
from .classify import VERIFY_BUDGET, classify, verify_classification
from .dynamics import TransferRecord, fidelity, transition_entry
from .errors import CirculantError, EmptyRecords
from .graphs import make_graph, parse_connection_set, symmetric_sets
from .spectra import EQUALITY_TOL, INTEGRALITY_TOL, spectrum
from .timesearch import TimeLattice, best_time_on_lattice, scan_lattice

_EXAMPLES = {
    "spectrum": "circulant spectrum --n 8 --set 1,2,3,5,6,7",
    "classify": "circulant classify --n 16 --set 1,7,9,15 --verify --qmax 10000",
    "census": "circulant census --n 16",
    "fidelity": "circulant fidelity --n 4 --set 1,3 --from 0 --to 2 --time 1.5707963267948966",
    "search": "circulant search --n 8 --set 1,7 --pair 0,4 --lattice 2piZ --qmin 1 --qmax 100000",
    "scan": "circulant scan --n 16 --set 1,2,3,4,12,13,14,15 --pair 0,8 --lattice 2piZ"
            " --qmin 7500 --qmax 8000 --out fig1.csv",
}


def _tolerances() -> tuple[float, float]:
    """(equality_tol, integrality_tol), honoring CIRCULANT_TOL."""
    raw = os.environ.get("CIRCULANT_TOL")
    if raw is None:
        return EQUALITY_TOL, INTEGRALITY_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise CirculantError(f"CIRCULANT_TOL must be a float, got {raw!r}")
    if tol <= 0:
        raise CirculantError(f"CIRCULANT_TOL must be positive, got {tol}")
    return tol, tol


def _pair_argument(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'u,v', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"pair entries must be integers: {text!r}")


def _set_argument(text: str) -> list[int]:
    try:
        return parse_connection_set(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _lattice_argument(text: str) -> TimeLattice:
    try:
        return TimeLattice.from_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circulant",
        description="Quantum-walk spectra, transfer classification, and time-lattice "
                    "search on circulant graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="graph order (>= 2)")
        p.add_argument("--set", type=_set_argument, required=True, dest="connection_set",
                       metavar="S", help="comma-separated connection set, e.g. 1,7,9,15")

    p = sub.add_parser("spectrum", help="eigenvalues in Fourier order",
                       epilog=f"example: {_EXAMPLES['spectrum']}")
    add_graph_flags(p)

    p = sub.add_parser("classify", help="transfer verdict with rule tag",
                       epilog=f"example: {_EXAMPLES['classify']}")
    add_graph_flags(p)
    p.add_argument("--verify", action="store_true", help="attach search evidence")
    p.add_argument("--qmax", type=int, default=VERIFY_BUDGET,
                   help="lattice-index budget for --verify (default %(default)s)")

    p = sub.add_parser("census", help="classify every symmetric set of Z_n (JSON lines)",
                       epilog=f"example: {_EXAMPLES['census']}")
    p.add_argument("--n", type=int, required=True, help="graph order (>= 2)")

    p = sub.add_parser("fidelity", help="one transition amplitude and its modulus",
                       epilog=f"example: {_EXAMPLES['fidelity']}")
    add_graph_flags(p)
    p.add_argument("--from", type=int, required=True, dest="from_vertex", help="source vertex")
    p.add_argument("--to", type=int, required=True, dest="to_vertex", help="target vertex")
    p.add_argument("--time", type=float, required=True, help="walk time t")

    def add_search_flags(p: argparse.ArgumentParser) -> None:
        add_graph_flags(p)
        p.add_argument("--pair", type=_pair_argument, default=None,
                       help="vertex pair u,v (default 0,n/2 for even n)")
        p.add_argument("--lattice", type=_lattice_argument, default=TimeLattice.TWO_PI_Z,
                       help="time lattice: 2piZ or oddHalfPi (default %(default)s)")
        p.add_argument("--qmin", type=int, default=None,
                       help="first lattice index (default: 1 on 2piZ, 0 on oddHalfPi)")
        p.add_argument("--qmax", type=int, required=True, help="last lattice index (inclusive)")

    p = sub.add_parser("search", help="best transfer record on a time lattice",
                       epilog=f"example: {_EXAMPLES['search']}")
    add_search_flags(p)
    p.add_argument("--eps", type=float, default=None,
                   help="stop at the first index with fidelity >= 1 - eps "
                        "(default: scan the whole range for the maximum)")

    p = sub.add_parser("scan", help="every record on a lattice window (CSV or JSON lines)",
                       epilog=f"example: {_EXAMPLES['scan']}")
    add_search_flags(p)
    p.add_argument("--out", type=str, default=None, help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="output format (default %(default)s)")

    return parser


def _resolve_pair(pair: tuple[int, int] | None, n: int) -> tuple[int, int]:
    if pair is not None:
        return pair
    if n % 2:
        raise CirculantError("--pair is required for odd n (there is no antipodal vertex)")
    return 0, n // 2


def _print_json(obj: dict, out: IO[str]) -> None:
    out.write(json.dumps(obj) + "\n")


def _format_float(x: float) -> str:
    return format(x, ".17g")


def emit_scan_csv(records: Sequence[TransferRecord], sink: IO[str]) -> int:
    """Write header q,t,re,im,fidelity plus one row per record; return row count."""
    if not records:
        raise EmptyRecords("no records to write")
    sink.write("q,t,re,im,fidelity\n")
    for r in records:
        sink.write(
            f"{r.q},{_format_float(r.t)},{_format_float(r.amplitude.real)},"
            f"{_format_float(r.amplitude.imag)},{_format_float(r.fidelity)}\n"
        )
    return len(records)


def _cmd_spectrum(args: argparse.Namespace, out: IO[str]) -> int:
    _, integrality_tol = _tolerances()
    G = make_graph(args.n, args.connection_set)
    spec = spectrum(G, integrality_tol)
    _print_json(
        {"n": G.n, "set": list(G.connection_set),
         "eigenvalues": [float(v) for v in spec.values], "integral": spec.integral},
        out,
    )
    return 0


def _cmd_classify(args: argparse.Namespace, out: IO[str]) -> int:
    equality_tol, integrality_tol = _tolerances()
    G = make_graph(args.n, args.connection_set)
    result = classify(G, equality_tol, integrality_tol)
    payload = {"n": G.n, "set": list(G.connection_set), **result.to_dict()}
    if args.verify:
        payload["evidence"] = verify_classification(G, result, q_budget=args.qmax).to_dict()
    _print_json(payload, out)
    return 0


def _cmd_census(args: argparse.Namespace, out: IO[str]) -> int:
    equality_tol, integrality_tol = _tolerances()
    if args.n < 2:
        raise CirculantError(f"census needs n >= 2, got {args.n}")
    for members in symmetric_sets(args.n, include_empty=True):
        if not members:
            _print_json({"n": args.n, "set": [], "error": "EmptySet"}, out)
            continue
        G = make_graph(args.n, members)
        result = classify(G, equality_tol, integrality_tol)
        _print_json({"n": G.n, "set": list(G.connection_set), **result.to_dict()}, out)
    return 0


def _cmd_fidelity(args: argparse.Namespace, out: IO[str]) -> int:
    G = make_graph(args.n, args.connection_set)
    amp = transition_entry(G, args.from_vertex, args.to_vertex, args.time)
    _print_json(
        {"t": args.time, "re": amp.real, "im": amp.imag,
         "fidelity": fidelity(G, args.from_vertex, args.to_vertex, args.time)},
        out,
    )
    return 0


def _cmd_search(args: argparse.Namespace, out: IO[str]) -> int:
    G = make_graph(args.n, args.connection_set)
    u, v = _resolve_pair(args.pair, G.n)
    q_min = args.qmin if args.qmin is not None else args.lattice.default_q_min
    stop = None if args.eps is None else 1.0 - args.eps
    record = best_time_on_lattice(G, u, v, args.lattice, (q_min, args.qmax), stop_fidelity=stop)
    _print_json(record.to_dict(), out)
    return 0


def _cmd_scan(args: argparse.Namespace, out: IO[str]) -> int:
    G = make_graph(args.n, args.connection_set)
    u, v = _resolve_pair(args.pair, G.n)
    q_min = args.qmin if args.qmin is not None else args.lattice.default_q_min
    records = scan_lattice(G, u, v, args.lattice, (q_min, args.qmax))

    def write(sink: IO[str]) -> None:
        if args.format == "csv":
            emit_scan_csv(records, sink)
        else:
            for r in records:
                _print_json(r.to_dict(), sink)

    if args.out is None:
        write(out)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write(fh)
    return 0


_HANDLERS = {
    "spectrum": _cmd_spectrum,
    "classify": _cmd_classify,
    "census": _cmd_census,
    "fidelity": _cmd_fidelity,
    "search": _cmd_search,
    "scan": _cmd_scan,
}


def main(argv: Sequence[str] | None = None, out: IO[str] | None = None) -> int:
    """Parse argv and dispatch. Returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out if out is not None else sys.stdout
    try:
        return _HANDLERS[args.command](args, out)
    except CirculantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())
