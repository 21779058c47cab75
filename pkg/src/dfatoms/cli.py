"""Command-line front end.

Subcommands: witness, atoms, bounds, table, check-ideal, idealize,
crosscheck, dot.  Exit code 0 on success, 1 on domain errors, 2 on usage
errors.  All output is deterministic given the flags.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Iterable

from .atoms import atom_complexity, build_atom_dfa, enumerate_atoms, reachable_pair_states
from .bounds import atom_complexity_bound, build_table, max_atom_count
from .dfa import Dfa, minimize
from .dfaformat import dfa_to_dot, parse_dfa, render_dfa
from .errors import DfatomsError
from .harness import RandomSpec, cross_check, random_dfa
from .ideals import IdealKind, idealize, is_left_ideal, is_right_ideal
from .witnesses import WitnessClass, witness

_CLASS_NAMES = [kind.value for kind in WitnessClass]
_KIND_NAMES = [kind.value for kind in IdealKind]


def _load_dfa(path: str) -> Dfa:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_dfa(handle.read())


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _parse_basis(arg: str) -> frozenset[int]:
    arg = arg.strip()
    if arg in ("", "{}"):
        return frozenset()
    try:
        return frozenset(int(part) for part in arg.split(","))
    except ValueError:
        raise DfatomsError(f"basis must be comma-separated state ids, got {arg!r}") from None


def _format_basis(basis: Iterable[int]) -> str:
    return "{" + ",".join(str(q) for q in sorted(basis)) + "}"


def _cmd_witness(args: argparse.Namespace) -> int:
    dfa = witness(WitnessClass(args.cls), args.n)
    _write(render_dfa(dfa), args.out)
    return 0


def _cmd_atoms(args: argparse.Namespace) -> int:
    dfa = minimize(_load_dfa(args.dfa))
    if args.basis is not None and args.basis != "-":
        basis = _parse_basis(args.basis)
        complexity = atom_complexity(dfa, basis)
        if args.report == "tsv":
            print("basis\tsize\tcomplexity")
            print(f"{_format_basis(basis)}\t{len(basis)}\t{complexity}")
        else:
            print(complexity)
        return 0
    report = enumerate_atoms(dfa)
    if args.report == "tsv":
        print("basis\tsize\tcomplexity")
        for info in report.atoms:
            print(f"{_format_basis(info.basis)}\t{len(info.basis)}\t{info.complexity}")
    else:
        print(f"states {report.state_count}")
        print(f"atoms {report.count}")
        for info in report.atoms:
            print(f"{_format_basis(info.basis)}\t{info.complexity}")
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    kind = WitnessClass(args.cls)
    print(f"class\t{kind.value}")
    print(f"n\t{args.n}")
    print(f"max-atoms\t{max_atom_count(kind, args.n)}")
    values = [atom_complexity_bound(kind, args.n, s) for s in range(args.n + 1)]
    for s, value in enumerate(values):
        print(f"{s}\t{'*' if value is None else value}")
    print(f"max\t{max(v for v in values if v is not None)}")
    return 0


def _ratio_cell(ratio: float | None) -> str:
    return "-" if ratio is None else f"{ratio:.2f}"


def _cmd_table(args: argparse.Namespace) -> int:
    n_max = args.max_n
    if args.compare:
        kinds = [
            WitnessClass.TWO_SIDED_IDEAL,
            WitnessClass.LEFT_IDEAL,
            WitnessClass.REGULAR,
        ]
    elif args.cls is not None:
        kinds = [WitnessClass(args.cls)]
    else:
        raise DfatomsError("table requires --class or --compare")
    columns = [build_table(kind, n_max) for kind in kinds]

    def cell(n: int, s: int) -> str:
        if s > n:
            return ""
        parts = [
            "*" if col[n - 1].rows[s] is None else str(col[n - 1].rows[s])
            for col in columns
        ]
        return "/".join(parts)

    print("n\t" + "\t".join(str(n) for n in range(1, n_max + 1)))
    for s in range(n_max + 1):
        print(f"|S|={s}\t" + "\t".join(cell(n, s) for n in range(1, n_max + 1)))
    print("max\t" + "\t".join(
        "/".join(str(col[n - 1].max_value) for col in columns)
        for n in range(1, n_max + 1)
    ))
    print("ratio\t" + "\t".join(
        "-" if n == 1 else "/".join(_ratio_cell(col[n - 1].ratio) for col in columns)
        for n in range(1, n_max + 1)
    ))
    return 0


def _cmd_check_ideal(args: argparse.Namespace) -> int:
    dfa = _load_dfa(args.dfa)
    right = is_right_ideal(dfa)
    left = is_left_ideal(dfa)
    print(f"right\t{str(right).lower()}")
    print(f"left\t{str(left).lower()}")
    print(f"two-sided\t{str(right and left).lower()}")
    return 0


def _cmd_idealize(args: argparse.Namespace) -> int:
    dfa = _load_dfa(args.dfa)
    closed = idealize(dfa, IdealKind(args.kind))
    _write(render_dfa(closed), args.out)
    return 0


def _cmd_crosscheck(args: argparse.Namespace) -> int:
    failures = 0
    for i in range(args.samples):
        seed = args.seed + i
        spec = RandomSpec(args.n, args.letters, seed)
        report = cross_check(random_dfa(spec), description=f"seed={seed}")
        status = "PASS" if report.passed else "FAIL"
        if not report.passed:
            failures += 1
        print(f"instance {i}\t{report.description}\tatoms {report.atom_count}\t{status}")
    print(f"passed {args.samples - failures}/{args.samples}")
    return 1 if failures else 0


def _cmd_dot(args: argparse.Namespace) -> int:
    dfa = _load_dfa(args.dfa)
    if args.atom is not None:
        basis = _parse_basis(args.atom)
        atom_dfa = build_atom_dfa(dfa, basis)
        labels = []
        for pair in reachable_pair_states(dfa, basis):
            if pair.is_bottom:
                labels.append("⊥")
            else:
                labels.append(f"({_format_basis(pair.x)},{_format_basis(pair.y)})")
        sys.stdout.write(dfa_to_dot(atom_dfa, labels))
    else:
        sys.stdout.write(dfa_to_dot(dfa))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dfatoms",
        description="Atoms of regular languages: witnesses, bounds, checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", help="emit a witness DFA")
    p.add_argument("--class", dest="cls", required=True, choices=_CLASS_NAMES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("atoms", help="atom report for a DFA file")
    p.add_argument("--dfa", required=True)
    p.add_argument("--basis", help="comma-separated ids, '{}' for empty, '-' for all")
    p.add_argument("--report", choices=["tsv", "text"], default="text")
    p.set_defaults(func=_cmd_atoms)

    p = sub.add_parser("bounds", help="per-size complexity bounds for one class")
    p.add_argument("--class", dest="cls", required=True, choices=_CLASS_NAMES)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("table", help="bound tables as TSV")
    p.add_argument("--class", dest="cls", choices=_CLASS_NAMES)
    p.add_argument("--compare", action="store_true",
                   help="three-way two-sided/left/regular table")
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("check-ideal", help="test ideal membership of a DFA file")
    p.add_argument("--dfa", required=True)
    p.set_defaults(func=_cmd_check_ideal)

    p = sub.add_parser("idealize", help="close a DFA's language into an ideal")
    p.add_argument("--dfa", required=True)
    p.add_argument("--kind", required=True, choices=_KIND_NAMES)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_idealize)

    p = sub.add_parser("crosscheck", help="randomized oracle agreement run")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--letters", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_crosscheck)

    p = sub.add_parser("dot", help="Graphviz export of a DFA or one of its atoms")
    p.add_argument("--dfa", required=True)
    p.add_argument("--atom", help="basis of the atom DFA to draw")
    p.set_defaults(func=_cmd_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DfatomsError, ValueError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
