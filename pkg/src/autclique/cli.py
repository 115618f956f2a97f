"""Command-line interface.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from typing import Sequence, TextIO

from .constructions import (
    BoostCertificate,
    ConstructionError,
    RealizationError,
    clique_boost,
    realize_group,
    unbounded_family,
    verify_boost,
)
from .formats import read_graph, write_graph
from .graph import GraphError, induced_subgraph
from .invariants import (
    CHROMATIC_CAP,
    SolverCapExceeded,
    chromatic_number,
    invariant_report,
    max_clique,
)
from .symmetry import (
    ClosureCapExceeded,
    GroupCapExceeded,
    GroupSpecError,
    PermutationError,
    aut_group,
    format_permutation,
    parse_group_spec,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_input(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _group(text: str):
    try:
        return parse_group_spec(text)
    except OSError as exc:
        raise UsageError(f"cannot read group file: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autclique",
        description="Graphs with a prescribed automorphism group and large clique number.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("input", nargs="?", default="-",
                          help="graph file, or '-' for standard input (default)")
    graph_in.add_argument("--in-format", "-f", choices=("graph6", "edges"), default="graph6")

    graph_out = argparse.ArgumentParser(add_help=False)
    graph_out.add_argument("--out-format", "-t", choices=("graph6", "edges", "dot"),
                           default="graph6")

    as_json = argparse.ArgumentParser(add_help=False)
    as_json.add_argument("--json", action="store_true", help="machine-readable output")

    group_arg = argparse.ArgumentParser(add_help=False)
    group_arg.add_argument("--group", "-g", required=True, type=str,
                           help="trivial, cyclic:n, dihedral:n, symmetric:n, klein4, "
                                "cayley:<path> or perms:<path>")

    p = sub.add_parser("boost", parents=[graph_in, graph_out],
                       help="apply the clique boost one or more times")
    p.add_argument("--iterations", "-k", type=int, default=1)
    p.add_argument("--cert-out", help="write certificates here instead of standard output")

    sub.add_parser("realize", parents=[group_arg, graph_out],
                   help="graph whose automorphism group is the given group")

    p = sub.add_parser("family", parents=[group_arg, graph_out, as_json],
                       help="verified graph with given automorphism group and clique number")
    p.add_argument("--clique", "-c", type=int, required=True, help="clique number target")

    sub.add_parser("aut", parents=[graph_in], help="automorphism group generators and order")
    sub.add_parser("omega", parents=[graph_in], help="clique number")
    p = sub.add_parser("chi", parents=[graph_in], help="chromatic number")
    p.add_argument("--cap", type=int, default=CHROMATIC_CAP)
    p = sub.add_parser("report", parents=[graph_in, as_json], help="all invariants")
    p.add_argument("--chi-cap", type=int, default=CHROMATIC_CAP)
    sub.add_parser("verify-boost", parents=[graph_in, as_json],
                   help="check a boosted graph laid out as base 0..n-1, clique n..2n-1")
    sub.add_parser("convert", parents=[graph_in, graph_out], help="transcode graph formats")
    return parser


def _run(args: argparse.Namespace, stdin: TextIO, out: TextIO) -> int:
    cmd = args.command
    if cmd == "realize":
        out.write(write_graph(realize_group(_group(args.group)), args.out_format))
        return EXIT_OK
    if cmd == "family":
        g, report = unbounded_family(_group(args.group), args.clique)
        out.write(write_graph(g, args.out_format))
        out.write(report.to_json() + "\n" if args.json else report.to_text())
        return EXIT_OK if report.passed else EXIT_FAILED

    g = read_graph(_read_input(args.input, stdin), args.in_format)
    if cmd == "boost":
        if args.iterations < 0:
            raise UsageError("--iterations must be non-negative")
        certs = []
        for _ in range(args.iterations):
            g, cert = clique_boost(g)
            certs.append(cert)
        out.write(write_graph(g, args.out_format))
        cert_text = "".join(c.to_text() for c in certs)
        if args.cert_out:
            Path(args.cert_out).write_text(cert_text)
        else:
            out.write(cert_text)
    elif cmd == "aut":
        group = aut_group(g)
        out.write(f"order={group.order}\n")
        out.write("".join(format_permutation(p) + "\n" for p in group.generators))
    elif cmd == "omega":
        out.write(f"{len(max_clique(g))}\n")
    elif cmd == "chi":
        out.write(f"{chromatic_number(g, args.cap)}\n")
    elif cmd == "report":
        report = invariant_report(g, args.chi_cap)
        out.write(report.to_json() + "\n" if args.json else report.to_text())
    elif cmd == "verify-boost":
        if g.n % 2 or g.n < 4:
            raise UsageError("a boosted graph has an even number (at least 4) of vertices")
        cert = BoostCertificate(g.n // 2)
        report = verify_boost(induced_subgraph(g, cert.v1), g, cert)
        out.write(report.to_json() + "\n" if args.json else report.to_text())
        return EXIT_OK if report.passed else EXIT_FAILED
    elif cmd == "convert":
        out.write(write_graph(g, args.out_format))
    return EXIT_OK


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _run(args, stdin, stdout)
    except RealizationError as exc:
        print(f"autclique: verification failed: {exc}", file=stderr)
        return EXIT_FAILED
    except (UsageError, GraphError, GroupSpecError, PermutationError, ConstructionError,
            SolverCapExceeded, ClosureCapExceeded, GroupCapExceeded) as exc:
        print(f"autclique {args.command}: {exc}", file=stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
