"""
Command-line interface.

    cck <subcommand> --surface FILE --arc SPEC [--coeffs FILE]
                     [--budget N] [--jobs N]

Subcommands: expand, fpoly, gvector, chi, oracle, selftest.
Arc specs: "chord a b", "annarc a b w", or
"band d i1 .. id / e e e / ..." (one clockwise edge triple per
traversed triangle; "band 0 e" names an edge of the triangulation).

All output starts with the format version line "cck/1" and is
byte-stable for identical inputs.  Exit codes: 0 success, 1 fixture or
comparison mismatch, 2 parse error (with line diagnostics), 3
invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import TropicalSemifield, serialize
from .arcs import AnnulusArc, ArcError, ExplicitBand, PolygonChord
from .expansion import (
    ExpansionError,
    chi_table,
    expand_principal,
    expand_with_coefficients,
    f_polynomial,
    g_vector,
)
from .harness import OracleError, compare_corpus, oracle_expand, run_selftest
from .surface import FORMAT_VERSION, SurfaceError, read_surface_file

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3


class CliParseError(ValueError):
    pass


def parse_arc_spec(text):
    parts = text.split()
    try:
        if parts[0] == "chord" and len(parts) == 3:
            return PolygonChord(int(parts[1]), int(parts[2]))
        if parts[0] == "annarc" and len(parts) == 4:
            return AnnulusArc(int(parts[1]), int(parts[2]), int(parts[3]))
        if parts[0] == "band":
            d = int(parts[1])
            if d == 0:
                if len(parts) != 3:
                    raise CliParseError('crossing-free band needs "band 0 e"')
                return ExplicitBand((), (), int(parts[2]))
            rest = parts[2:]
            if len(rest) < d or rest[d] != "/":
                raise CliParseError(
                    "band spec needs d crossed ids, then '/'-separated triples"
                )
            crossed = tuple(int(v) for v in rest[:d])
            groups = " ".join(rest[d:]).split("/")
            triples = []
            for group in groups:
                vals = group.split()
                if not vals:
                    continue
                if len(vals) != 3:
                    raise CliParseError(f"triangle {group!r} is not a triple")
                triples.append(tuple(int(v) for v in vals))
            if len(triples) != d + 1:
                raise CliParseError(f"band with d={d} needs {d + 1} triangles")
            return ExplicitBand(crossed, tuple(triples))
    except (ValueError, IndexError) as exc:
        if isinstance(exc, CliParseError):
            raise
        raise CliParseError(f"bad arc spec {text!r}") from None
    raise CliParseError(f"bad arc spec {text!r}")


def parse_coeffs_file(text):
    """Coefficient file: version line, "ell L", then one row of L
    integers per initial y-variable.  Returns (semifield, assignment)."""
    lines = [
        (no, ln.split("#", 1)[0].strip())
        for no, ln in enumerate(text.splitlines(), start=1)
    ]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines or lines[0][1] != FORMAT_VERSION:
        raise CliParseError(
            f"line 1: coefficient file must start with {FORMAT_VERSION!r}"
        )
    if len(lines) < 2 or not lines[1][1].startswith("ell"):
        raise CliParseError("line 2: expected 'ell L'")
    try:
        ell = int(lines[1][1].split()[1])
    except (IndexError, ValueError):
        raise CliParseError("line 2: expected 'ell L'") from None
    semifield = TropicalSemifield(ell)
    assignment = {}
    for i, (no, ln) in enumerate(lines[2:], start=1):
        try:
            row = tuple(int(v) for v in ln.split())
        except ValueError:
            raise CliParseError(f"line {no}: expected {ell} integers") from None
        if len(row) != ell:
            raise CliParseError(
                f"line {no}: row has {len(row)} entries, expected {ell}"
            )
        assignment[i] = semifield.element(row)
    return semifield, assignment


def _load_surface(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliParseError(f"cannot read surface file: {exc}") from None
    return read_surface_file(text)


def _format_gvector(gv):
    out = ["g " + " ".join(str(v) for v in gv.entries)]
    out.append("I+ " + " ".join(str(v) for v in sorted(gv.i_plus)))
    out.append("I- " + " ".join(str(v) for v in sorted(gv.i_minus)))
    return out


def _format_chi(table):
    out = ["theorematic " + ("yes" if table.theorematic else "no")]
    out.append(f"paths {table.path_count}")
    for e in sorted(table.table):
        out.append(
            "chi " + " ".join(str(v) for v in e) + f" {table.table[e]}"
        )
    return out


def cli_run(argv):
    """Run the CLI; returns (exit_status, output_text)."""
    parser = argparse.ArgumentParser(prog="cck", add_help=True)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("expand", "fpoly", "gvector", "chi", "oracle"):
        p = sub.add_parser(name)
        p.add_argument("--surface", required=True)
        p.add_argument("--arc", required=not (name == "oracle"))
        p.add_argument("--coeffs")
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--jobs", type=int, default=1)
        if name == "oracle":
            p.add_argument("--compare", action="store_true")
    sub.add_parser("selftest")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_PARSE if exc.code else EXIT_OK), ""

    lines = [FORMAT_VERSION]
    try:
        if args.command == "selftest":
            failures = run_selftest()
            if failures:
                lines.extend("fail " + f for f in failures)
                return EXIT_MISMATCH, "\n".join(lines) + "\n"
            lines.append("ok fixtures=octagon,annulus")
            return EXIT_OK, "\n".join(lines) + "\n"

        T = _load_surface(args.surface)
        if args.command == "oracle" and args.compare:
            n_cases, mismatches = compare_corpus()
            if mismatches:
                lines.append(f"MISMATCH n_cases={n_cases} bad={len(mismatches)}")
                return EXIT_MISMATCH, "\n".join(lines) + "\n"
            lines.append(f"EQUAL n_cases={n_cases}")
            return EXIT_OK, "\n".join(lines) + "\n"

        arc = parse_arc_spec(args.arc)
        if args.command == "expand":
            if args.coeffs:
                with open(args.coeffs, "r", encoding="utf-8") as fh:
                    semifield, assignment = parse_coeffs_file(fh.read())
                poly = expand_with_coefficients(T, arc, semifield, assignment)
            else:
                poly = expand_principal(T, arc)
            lines.append(serialize(poly))
        elif args.command == "fpoly":
            lines.append(serialize(f_polynomial(T, arc)))
        elif args.command == "gvector":
            lines.extend(_format_gvector(g_vector(T, arc)))
        elif args.command == "chi":
            lines.extend(_format_chi(chi_table(T, arc)))
        elif args.command == "oracle":
            result = oracle_expand(T, arc, budget=args.budget)
            lines.append(serialize(result.value))
            lines.append(
                "flips " + " ".join(str(k) for k in result.flip_sequence)
            )
            lines.append(f"seeds {result.seeds_visited}")
        return EXIT_OK, "\n".join(lines) + "\n"
    except (CliParseError, ArcError) as exc:
        return EXIT_PARSE, f"error: {exc}\n"
    except SurfaceError as exc:
        # file-level problems are parse errors; the parser attaches
        # line numbers
        return (
            EXIT_PARSE if exc.line is not None else EXIT_INVARIANT
        ), f"error: {exc}\n"
    except (ExpansionError, OracleError, ValueError) as exc:
        return EXIT_INVARIANT, f"error: {exc}\n"


def main(argv=None):
    status, output = cli_run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status == EXIT_OK else sys.stderr
    stream.write(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
