"""Command-line interface.

Exit codes: 0 on success, 1 when any check fails or the input is invalid,
2 on usage or file-format errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify, conformance, spectrum
from .catalog import catalog
from .construct import (
    FiniteTopology,
    QuotientSpec,
    SubgroupError,
    TopologyError,
    direct_product,
    from_topology,
    quotient_hyperring,
)
from .core import (
    DEFAULT_ENUM_CAP,
    EmptyOperandError,
    HypothesisError,
    InvalidStructureError,
    PreconditionError,
    Semihyperring,
    SizeLimitError,
    StructureError,
    subset_sort_key,
)
from .ideals import enumerate_hyperideals, is_hyperideal
from .textio import AxiomError, ParseError, parse_structure, parse_table, serialize_structure


class UsageError(ValueError):
    """Bad command-line argument content (not file content)."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_out(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _labels_json(S, subset):
    return [S.labels[i] for i in sorted(subset)]


def _parse_subset_arg(S: Semihyperring, spec: str):
    body = spec.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    members = set()
    for part in body.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            members.add(S.index_of(part))
        except KeyError:
            raise UsageError(f"unknown element label {part!r}") from None
    if not members:
        raise UsageError("the subset argument is empty")
    return frozenset(members)


def _cmd_verify(args) -> int:
    S = parse_table(_read(args.file))
    report = S.axiom_report
    if args.json:
        checks = []
        for c in report.checks:
            entry = {"id": c.axiom, "verdict": "PASS" if c.ok else "FAIL"}
            if c.witness is not None:
                entry["witness"] = ",".join(S.labels[i] for i in c.witness)
            checks.append(entry)
        _emit_json({"structure": S.name, "checks": checks})
    else:
        print(f"structure {S.name} (order {S.order})")
        print(report.render(S))
    return 0 if report.ok else 1


def _cmd_ideals(args) -> int:
    S = parse_structure(_read(args.file))
    lattice = enumerate_hyperideals(S, args.cap)
    if args.json:
        entries = []
        for I in lattice.ideals:
            entry = {"ideal": _labels_json(S, I)}
            if args.classify:
                c = classify.classify_ideal(S, I, args.cap)
                entry["flags"] = sorted(c.flags())
            entries.append(entry)
        _emit_json({"structure": S.name, "ideals": entries})
        return 0
    print(f"structure {S.name}: {len(lattice)} hyperideals")
    for I in lattice.ideals:
        line = f"  {S.subset_repr(I)}"
        if args.classify:
            c = classify.classify_ideal(S, I, args.cap)
            flags = " ".join(c.flags())
            line += f"  [{flags}]" if flags else "  []"
        print(line)
    return 0


def _cmd_classify(args) -> int:
    S = parse_structure(_read(args.file))
    I = _parse_subset_arg(S, args.ideal)
    if not is_hyperideal(S, I):
        print(f"{S.subset_repr(I)} is not a hyperideal of {S.name}", file=sys.stderr)
        return 1
    c = classify.classify_ideal(S, I, args.cap)
    if args.json:
        _emit_json({
            "structure": S.name,
            "ideal": _labels_json(S, I),
            "flags": sorted(c.flags()),
        })
    else:
        flags = " ".join(c.flags())
        print(f"{S.subset_repr(I)}: {flags if flags else '(no flags)'}")
    return 0


def _cmd_spectrum(args) -> int:
    S = parse_structure(_read(args.file))
    topo = spectrum.spectrum_topology(S, args.cap)
    topo_report = spectrum.verify_topology(S, topo, args.cap)
    map_report = spectrum.lattice_map_check(S, topo, args.cap)
    if args.json:
        opens = []
        for o in topo.opens:
            opens.append({
                "ideal": _labels_json(S, o.ideal),
                "points": [_labels_json(S, p) for p in sorted(o.point_set, key=subset_sort_key)],
            })
        checks = [
            {"id": "topology-axioms", "verdict": "PASS" if topo_report.ok else "FAIL"},
            {"id": "lattice-isomorphism", "verdict": "PASS" if map_report.ok else "FAIL"},
        ]
        if not topo_report.ok:
            checks[0]["witness"] = topo_report.problems[0]
        if not map_report.ok:
            checks[1]["witness"] = map_report.problems[0]
        _emit_json({
            "structure": S.name,
            "spectrum": {
                "points": [_labels_json(S, p) for p in topo.points],
                "opens": opens,
            },
            "checks": checks,
        })
    else:
        print(f"structure {S.name}: {len(topo.points)} spectrum points, {len(topo.opens)} opens")
        for p in topo.points:
            print(f"  point {S.subset_repr(p)}")
        for o in topo.opens:
            inner = ",".join(S.subset_repr(p) for p in sorted(o.point_set, key=subset_sort_key))
            print(f"  open {{{inner}}} from ideal {S.subset_repr(o.ideal)}")
        print(f"topology axioms: {topo_report.render()}")
        print(f"lattice isomorphism: {map_report.render()}")
    return 0 if topo_report.ok and map_report.ok else 1


def _corpus_from_dir(path: str):
    import os

    names = sorted(f for f in os.listdir(path) if f.endswith(".shr"))
    if not names:
        return []
    out = []
    for fname in names:
        with open(os.path.join(path, fname), "r", encoding="utf-8") as fh:
            out.append(parse_structure(fh.read()))
    return out


def _cmd_conformance(args) -> int:
    if args.corpus is not None:
        if args.file is not None:
            raise UsageError("give either a FILE or --corpus, not both")
        structures = (conformance.builtin_corpus() if args.corpus == "@builtin"
                      else _corpus_from_dir(args.corpus))
        report = conformance.run_corpus(structures, args.cap, args.subset_cap)
        if args.json:
            _emit_json(report.to_json_dict())
        else:
            print(report.render())
        return 0 if report.ok else 1
    if args.file is None:
        raise UsageError("conformance needs a FILE or --corpus")
    S = parse_structure(_read(args.file))
    report = conformance.run_suite(S, args.cap, args.subset_cap)
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        print(report.render(timings=args.timings))
    return 0 if report.ok else 1


def _parse_opens_spec(spec: str, points: int):
    opens = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not (chunk.startswith("{") and chunk.endswith("}")):
            raise UsageError(f"open set {chunk!r} must be braced, e.g. {{1,2}}")
        body = chunk[1:-1].strip()
        members = set()
        if body:
            for part in body.split(","):
                try:
                    p = int(part.strip())
                except ValueError:
                    raise UsageError(f"bad point {part.strip()!r} in opens spec") from None
                if not 1 <= p <= points:
                    raise UsageError(f"point {p} out of range 1..{points}")
                members.add(p)
        opens.append(frozenset(members))
    return tuple(opens)


def _cmd_gen(args) -> int:
    if args.kind == "topology":
        opens = _parse_opens_spec(args.opens, args.points)
        S = from_topology(FiniteTopology(args.points, opens))
    elif args.kind == "quotient":
        try:
            subgroup = frozenset(int(x) for x in args.subgroup.split(","))
        except ValueError:
            raise UsageError("subgroup must be a comma-separated list of residues") from None
        S = quotient_hyperring(QuotientSpec(args.mod, subgroup))
    else:
        left = parse_structure(_read(args.left))
        right = parse_structure(_read(args.right))
        S = direct_product(left, right)
    _write_out(serialize_structure(S), args.output)
    return 0


def _cmd_catalog(args) -> int:
    structures = catalog(args.order, commutative=args.commutative,
                         with_unity=args.with_unity)
    text = "\n".join(serialize_structure(S) for S in structures)
    _write_out(text, args.output)
    print(f"{len(structures)} structures of order {args.order}", file=sys.stderr)
    return 0


def _cmd_report(args) -> int:
    from .report import write_report

    S = parse_structure(_read(args.file))
    paths = write_report(S, args.output, fmt=args.format,
                         enum_cap=args.cap, subset_cap=args.subset_cap)
    for p in paths:
        print(p)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semihyper",
        description="Construct, validate, and analyze finite semihyperrings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                       help="enumeration cap on the carrier size (default %(default)s)")

    p = sub.add_parser("verify", help="check the axioms of a structure file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("ideals", help="enumerate the hyperideal lattice")
    p.add_argument("file")
    p.add_argument("--classify", action="store_true",
                   help="flag each ideal (prime, semiprime, irreducible, ...)")
    p.add_argument("--json", action="store_true")
    add_cap(p)
    p.set_defaults(func=_cmd_ideals)

    p = sub.add_parser("classify", help="classify one hyperideal")
    p.add_argument("file")
    p.add_argument("--ideal", required=True, metavar="SET",
                   help="the ideal as labels, e.g. '{e0,e1}'")
    p.add_argument("--json", action="store_true")
    add_cap(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("spectrum", help="irreducible spectrum and its topology")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    add_cap(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("conformance", help="run every theory check")
    p.add_argument("file", nargs="?")
    p.add_argument("--corpus", nargs="?", const="@builtin", metavar="DIR",
                   help="run over a directory of .shr files, or the built-in corpus "
                        "when no directory is given")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true",
                   help="append per-check wall time to the text report")
    p.add_argument("--subset-cap", type=int, default=conformance.DEFAULT_SUBSET_CAP,
                   help="exhaustive subset quantification up to this order (default %(default)s)")
    add_cap(p)
    p.set_defaults(func=_cmd_conformance)

    p = sub.add_parser("gen", help="generate a structure file")
    gen_sub = p.add_subparsers(dest="kind", required=True)
    g = gen_sub.add_parser("topology", help="open-set semihyperring of a finite topology")
    g.add_argument("--points", type=int, required=True)
    g.add_argument("--opens", required=True,
                   help="semicolon-separated opens, e.g. '{};{1};{1,2}'")
    g.add_argument("-o", "--output", default=None)
    g.set_defaults(func=_cmd_gen)
    g = gen_sub.add_parser("quotient", help="quotient of Z_n by a unit subgroup")
    g.add_argument("--mod", type=int, required=True)
    g.add_argument("--subgroup", required=True, help="comma-separated residues, e.g. 1,4")
    g.add_argument("-o", "--output", default=None)
    g.set_defaults(func=_cmd_gen)
    g = gen_sub.add_parser("product", help="direct product of two structure files")
    g.add_argument("left")
    g.add_argument("right")
    g.add_argument("-o", "--output", default=None)
    g.set_defaults(func=_cmd_gen)

    p = sub.add_parser("catalog", help="all valid structures of a small order, up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--commutative", action="store_true")
    p.add_argument("--with-unity", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("report", help="write figures and CSV summaries for one structure")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True, metavar="DIR")
    p.add_argument("--format", choices=("png", "pdf", "svg"), default="png")
    p.add_argument("--subset-cap", type=int, default=conformance.DEFAULT_SUBSET_CAP)
    add_cap(p)
    p.set_defaults(func=_cmd_report)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AxiomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (StructureError, EmptyOperandError, HypothesisError, SizeLimitError,
            PreconditionError, InvalidStructureError, TopologyError,
            SubgroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())
