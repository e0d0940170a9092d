"""Command-line front end.

Subcommands: analyze, verify, row, matrix, spectrum, oeis, routing.

Exit codes: 0 success, 1 bad arguments, 2 size cap exceeded, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closed_forms as cf
from .circulant import build_mc
from .distance import (
    H_CAP_BASE2, H_CAP_BASE3, MATRIX_CAP, bfs_distances, distance_matrix, format_matrix,
    format_row, recursive_row,
)
from .errors import DomainError, SizeLimitError
from .routing import (
    ROUTING_CAP, Graph, figure3_fixture, loads, translation_invariant_loads,
    translation_invariant_routing, validate_routing,
)
from .spectral import circulant_spectrum, spectral_radius_check
from .verify import verify

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3

ANALYZE_CAPS = {2: 20, 3: 12}
ROW_CAPS = {2: H_CAP_BASE2, 3: H_CAP_BASE3}
SECTIONS = ("diameter", "rho", "mu", "xi", "pi-bounds", "spectrum", "routing")
DEFAULT_SECTIONS = ("diameter", "rho", "mu", "xi", "pi-bounds")


class CapExceeded(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cap(args, ok: bool, message: str) -> None:
    if not ok and not args.unsafe_caps:
        raise CapExceeded(f"{message} (pass --unsafe-caps to override)")


def _row_for(args):
    _cap(args, args.h <= ROW_CAPS[args.m], f"h={args.h} exceeds the row cap {ROW_CAPS[args.m]} for m={args.m}")
    if getattr(args, "method", "recursive") == "oracle":
        row, _ = bfs_distances(build_mc(args.m, args.h))
        return row
    return recursive_row(args.m, args.h, cap=args.h)


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def analysis_document(m: int, h: int, sections) -> dict:
    """Report as a flat dict; exact rationals appear as numerator/denominator pairs."""
    rep = cf.closed_form_report(m, h)
    doc = {"n": rep.n, "m": m, "h": h, "regularity": rep.regularity}
    if "diameter" in sections:
        doc["diameter"] = rep.diameter
    if "rho" in sections:
        doc["rho"] = rep.rho
    if "mu" in sections:
        doc["mu_num"], doc["mu_den"] = rep.mu.numerator, rep.mu.denominator
    if "xi" in sections:
        doc["xi"] = rep.xi
    if "pi-bounds" in sections:
        doc["pi_lower_num"], doc["pi_lower_den"] = rep.pi_lower.numerator, rep.pi_lower.denominator
        doc["pi_upper"] = rep.pi_upper
    if "spectrum" in sections:
        check = spectral_radius_check(recursive_row(m, h, cap=h))
        doc["spectral_radius"] = check.radius
        doc["spectral_radius_matches_rho"] = check.ok
    if "routing" in sections:
        prof = translation_invariant_loads(build_mc(m, h))
        doc["routing_xi"] = prof.xi_of_R
        doc["routing_pi"] = prof.pi_of_R
        doc["routing_uniform_vertex_load"] = len(set(prof.vertex_load.values())) == 1
    return doc


def render_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_csv(doc: dict) -> str:
    return "".join(f"{k},{json.dumps(v)}\n" for k, v in sorted(doc.items()))


def render_human(doc: dict) -> str:
    lines = [f"MC({doc['m']}^{doc['h']}): n={doc['n']}, regularity={doc['regularity']}"]
    if "diameter" in doc:
        lines.append(f"diameter: {doc['diameter']}")
    if "rho" in doc:
        lines.append(f"distance spectral radius rho: {doc['rho']}")
    if "mu_num" in doc:
        lines.append(f"average distance mu: {doc['mu_num']}/{doc['mu_den']}")
    if "xi" in doc:
        lines.append(f"vertex-forwarding index xi: {doc['xi']}")
    if "pi_upper" in doc:
        lower = f"{doc['pi_lower_num']}/{doc['pi_lower_den']}" if doc["pi_lower_den"] != 1 else str(doc["pi_lower_num"])
        lines.append(f"edge-forwarding index: {lower} <= pi <= {doc['pi_upper']}")
    if "spectral_radius" in doc:
        lines.append(f"largest eigenvalue: {doc['spectral_radius']:.12g} (matches rho: {doc['spectral_radius_matches_rho']})")
    if "routing_xi" in doc:
        lines.append(f"translation-invariant routing: xi(R)={doc['routing_xi']} pi(R)={doc['routing_pi']}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    sections = [s.strip() for s in args.sections.split(",") if s.strip()]
    unknown = [s for s in sections if s not in SECTIONS]
    if not sections or unknown:
        sys.stderr.write(f"unknown or empty sections: {unknown or sections}\n")
        return EXIT_USAGE
    _cap(args, args.h <= ANALYZE_CAPS[args.m], f"h={args.h} exceeds the analyze cap {ANALYZE_CAPS[args.m]}")
    if "routing" in sections:
        _cap(args, args.m**args.h <= ROUTING_CAP, f"n={args.m**args.h} exceeds the routing cap {ROUTING_CAP}")
    doc = analysis_document(args.m, args.h, sections)
    render = {"json": render_json, "csv": render_csv, "human": render_human}[args.format]
    _write(args, render(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    _cap(args, args.h_max <= ANALYZE_CAPS[args.m], f"h-max={args.h_max} exceeds the verify cap {ANALYZE_CAPS[args.m]}")
    results = verify(args.m, args.h_max, jobs=args.jobs)
    for r in results:
        status = "ok" if r.ok else "MISMATCH: " + "; ".join(r.failures)
        print(f"m={r.m} h={r.h} n={r.n} {status}")
    failed = [r for r in results if not r.ok]
    if failed:
        print(f"FAIL: first mismatch at h={failed[0].h}")
        return EXIT_MISMATCH
    print(f"pass, {len(results)} rows checked")
    return EXIT_OK


def cmd_row(args) -> int:
    _write(args, format_row(_row_for(args)) + "\n")
    return EXIT_OK


def cmd_matrix(args) -> int:
    _cap(args, args.m**args.h <= MATRIX_CAP, f"n={args.m**args.h} exceeds the matrix cap {MATRIX_CAP}")
    row = _row_for(args)
    _write(args, format_matrix(distance_matrix(row, cap=None)))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    row = _row_for(args)
    _write(args, circulant_spectrum(row, method=args.spectrum_method).to_csv())
    return EXIT_OK


def cmd_oeis(args) -> int:
    _write(args, cf.format_bfile(cf.oeis_terms(args.seq, args.count)))
    return EXIT_OK


def figure3_report() -> str:
    g, r1, r2 = figure3_fixture()
    out = [f"Figure-3 graph: {g.n} vertices, {len(g.edges)} edges"]
    for name, r in (("R1", r1), ("R2", r2)):
        rep = validate_routing(g, r)
        prof = loads(g, r)
        out.append(f"{name}: valid={rep.valid} minimal={rep.minimal} symmetric={rep.symmetric}")
        out.append(f"xi({name})={prof.xi_of_R}")
        out.append(f"pi({name})={prof.pi_of_R}")
        out.append(prof.vertex_csv().rstrip("\n"))
    return "\n".join(out) + "\n"


def cmd_routing(args) -> int:
    if args.fixture:
        _write(args, figure3_report())
        return EXIT_OK
    if args.m is None or args.h is None:
        sys.stderr.write("routing needs --m and --h, or --fixture figure3\n")
        return EXIT_USAGE
    g = build_mc(args.m, args.h)
    _cap(args, g.n <= ROUTING_CAP, f"n={g.n} exceeds the routing cap {ROUTING_CAP}")
    if g.n <= ROUTING_CAP:
        r = translation_invariant_routing(g, cap=None)
        prof = loads(Graph.from_circulant(g), r)
    else:
        prof = translation_invariant_loads(g)
    rho = cf.rho_closed(args.m, args.h)
    head = f"xi(R)={prof.xi_of_R} pi(R)={prof.pi_of_R} rho-(n-1)={rho - (g.n - 1)}\n"
    _write(args, head + prof.vertex_csv() + "\n" + prof.edge_csv())
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mcgraphs", description="Distances, spectra and forwarding indices of MC(2^h) and MC(3^h).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_h=True, h_required=True):
        p.add_argument("--m", type=int, choices=(2, 3), required=h_required)
        if need_h:
            p.add_argument("--h", type=_positive, required=h_required)
        p.add_argument("--unsafe-caps", action="store_true", help="lift the default size caps")
        p.add_argument("--output", "-o", help="write to a file instead of stdout")

    p = sub.add_parser("analyze", help="closed-form report")
    common(p)
    p.add_argument("--format", choices=("human", "json", "csv"), default="human")
    p.add_argument("--sections", default=",".join(DEFAULT_SECTIONS),
                   help=f"comma-separated subset of {','.join(SECTIONS)}")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="oracle vs recursion vs closed forms")
    common(p, need_h=False)
    p.add_argument("--h-max", type=_positive, required=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)

    for name, func, text in (("row", cmd_row, "first distance-matrix row"),
                             ("matrix", cmd_matrix, "full distance matrix as CSV"),
                             ("spectrum", cmd_spectrum, "distance eigenvalues as k,eigenvalue CSV")):
        p = sub.add_parser(name, help=text)
        common(p)
        p.add_argument("--method", choices=("recursive", "oracle"), default="recursive",
                       help="how the distance row is computed")
        if name == "spectrum":
            p.add_argument("--spectrum-method", choices=("auto", "direct", "fft"), default="auto")
        p.set_defaults(func=func)

    p = sub.add_parser("oeis", help="b-file of A045883 or A212697")
    p.add_argument("--seq", choices=("a045883", "a212697"), required=True)
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_oeis)

    p = sub.add_parser("routing", help="load tables of the translation-invariant routing")
    common(p, h_required=False)
    p.add_argument("--fixture", choices=("figure3",))
    p.set_defaults(func=cmd_routing)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CapExceeded, SizeLimitError) as exc:
        sys.stderr.write(f"size cap exceeded: {exc}\n")
        return EXIT_CAP
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
