"""Command-line front end.

One subcommand per library area, stable text output for eyeballs and a
single JSON document per invocation for scripts.  Exit codes: 0 for
success or an accepting verdict, 1 for a rejecting or negative verdict,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from facet.discharging import AuditReport, DischargingError, audit, structure_report
from facet.embedding import (
    EmbeddedGraph,
    EmbeddingError,
    facial_distance,
    generate,
    medial,
    parse_peg,
    random_plane_graph,
    serialize_peg,
)
from facet.facial_coloring import (
    ColoringError,
    SolverBudgetError,
    chromatic_index,
    conflict_graph,
    parse_coloring,
    serialize_coloring,
    verify,
)
from facet.nullstellensatz import ExponentOverflow, coefficient, lemma_polynomial
from facet.reducibility import (
    ConfigurationError,
    catalog,
    check,
    configuration_from_json,
)

_INPUT_ERRORS = (
    OSError,
    EmbeddingError,
    ColoringError,
    ConfigurationError,
    DischargingError,
    SolverBudgetError,
    ExponentOverflow,
    ValueError,
)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> EmbeddedGraph:
    return parse_peg(_read(path))


def _emit(args: argparse.Namespace, doc: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _write_out(args: argparse.Namespace, payload: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _frac(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _elt(e: tuple[str, int]) -> str:
    return f"{e[0]}:{e[1]}"


def _dot_conflicts(g: EmbeddedGraph, ell: int, path: str) -> None:
    cg = conflict_graph(g, ell)
    lines = ["graph conflicts {"]
    for e in range(cg.n_edges):
        lines.append(f"  {e};")
    for a, b in cg.pairs():
        gap = cg.witness[(a, b)][0]
        lines.append(f'  {a} -- {b} [label="{gap}"];')
    lines.append("}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def _positive_int(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


# -- subcommands ------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    coloring = parse_coloring(_read(args.coloring))
    if args.dot:
        _dot_conflicts(g, args.ell, args.dot)
    v = verify(g, args.ell, coloring, require_total=not args.partial)
    doc = {
        "ok": v.ok,
        "chi": None,
        "violations": [
            {
                "e": w.e,
                "f": w.f,
                "color": w.color,
                "face": w.face,
                "gap": w.gap,
            }
            for w in v.violations
        ],
        "missing": list(v.missing),
    }
    lines = [
        f"violation e={w.e} f={w.f} color={w.color} face={w.face} gap={w.gap}"
        for w in v.violations
    ]
    lines += [f"missing e={e}" for e in v.missing]
    lines.append("verdict = accept" if v.ok else "verdict = reject")
    _emit(args, doc, lines)
    return 0 if v.ok else 1


def _cmd_chi(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.dot:
        _dot_conflicts(g, args.ell, args.dot)
    upper = args.palette if args.palette else 3 * args.ell + 1
    chi, witness = chromatic_index(
        g, args.ell, upper_bound=upper, max_nodes=args.budget
    )
    doc = {
        "ok": True,
        "chi": chi,
        "violations": [],
        "witness": {str(e): c for e, c in sorted(witness.items())},
    }
    lines = [f"chi = {chi}"]
    if args.witness:
        lines += serialize_coloring(witness).rstrip("\n").split("\n") if witness else []
    _emit(args, doc, lines)
    return 0


def _parse_pairs_file(text: str) -> tuple[list[tuple[int, int]], tuple[int, ...]]:
    """``p <i> <j>`` conflict lines plus one ``t <k1> ... <kn>`` target."""
    pairs: list[tuple[int, int]] = []
    target: Optional[tuple[int, ...]] = None
    for ln, raw in enumerate(text.splitlines(), 1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        fields = stripped.split()
        if fields[0] == "p" and len(fields) == 3:
            pairs.append((int(fields[1]), int(fields[2])))
        elif fields[0] == "t":
            if target is not None:
                raise ValueError(f"line {ln}: duplicate target line")
            target = tuple(int(x) for x in fields[1:])
        else:
            raise ValueError(f"line {ln}: expected 'p i j' or 't k1 ... kn'")
    if target is None:
        raise ValueError("pairs file has no target line")
    return pairs, target


def _cmd_cn(args: argparse.Namespace) -> int:
    if args.lemma:
        pairs, target, _caps = lemma_polynomial(args.lemma)
    else:
        pairs, target = _parse_pairs_file(_read(args.pairs))
    coeff = coefficient(pairs, target)
    doc = {
        "lemma": args.lemma,
        "coefficient": coeff,
        "nonzero": coeff != 0,
    }
    _emit(args, doc, [f"coefficient = {coeff}"])
    return 0 if coeff != 0 else 1


def _cmd_reduce(args: argparse.Namespace) -> int:
    if args.config_file:
        configs = [configuration_from_json(_read(args.config_file))]
    else:
        configs = catalog()
        if args.config:
            configs = [c for c in configs if c.name == args.config]
            if not configs:
                known = ", ".join(c.name for c in catalog())
                raise ValueError(
                    f"unknown configuration {args.config!r}; known: {known}"
                )
    reports = [check(c) for c in configs]
    doc = {
        "ok": all(r.ok for r in reports),
        "reports": [
            {
                "name": r.name,
                "ok": r.ok,
                "steps": [
                    {"label": s.label, "ok": s.ok, "detail": s.detail}
                    for s in r.steps
                ],
            }
            for r in reports
        ],
    }
    lines = []
    for r in reports:
        if r.ok:
            lines.append(f"PASS {r.name}")
        else:
            first = r.failures()[0]
            lines.append(f"FAIL {r.name}: {first.label} ({first.detail})")
    lines.append("all = pass" if doc["ok"] else "all = fail")
    _emit(args, doc, lines)
    return 0 if doc["ok"] else 1


def _discharge_doc(rep: AuditReport) -> dict:
    led = rep.ledger
    return {
        "initial": {
            "vertices": [_frac(x) for x in led.vertex_initial],
            "faces": [_frac(x) for x in led.face_initial],
        },
        "transfers": [
            {
                "rule": t.rule,
                "src": _elt(t.src),
                "dst": _elt(t.dst),
                "num": t.amount.numerator,
                "den": t.amount.denominator,
            }
            for t in led.transfers
        ],
        "final": {
            "vertices": [_frac(x) for x in led.vertex_final],
            "faces": [_frac(x) for x in led.face_final],
        },
        "total": _frac(rep.total),
        "gaps": list(led.gaps),
        "notes": list(led.notes),
        "negative": [
            {"element": _elt(e), "num": ch.numerator, "den": ch.denominator}
            for e, ch in led.negatives()
        ],
        "structure": {
            "predicates": rep.structure.as_dict(),
            "all_pass": rep.structure.all_pass,
            "failing": list(rep.structure.failing()),
        },
        "verdict": rep.verdict,
    }


def _cmd_discharge(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    rep = audit(g)
    led = rep.ledger
    lines = [
        f"initial total = {led.total_initial}",
        f"final total = {led.total_final}",
        f"transfers = {len(led.transfers)}",
        f"gaps = {len(led.gaps)}",
        f"notes = {len(led.notes)}",
    ]
    for e, ch in led.negatives():
        lines.append(f"negative {_elt(e)} = {ch}")
    failing = rep.structure.failing()
    if failing:
        lines.append("structure failing: " + ", ".join(failing))
    else:
        lines.append("structure failing: none")
    lines.append(f"verdict = {rep.verdict}")
    _emit(args, _discharge_doc(rep), lines)
    return 1 if rep.verdict == "discharging-anomaly" else 0


def _cmd_medial(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    m, corr = medial(g)
    peg = serialize_peg(m)
    if args.json:
        print(json.dumps({"peg": peg, "correspondence": list(corr)}, indent=2))
    else:
        _write_out(args, peg)
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "random":
        if args.params:
            raise ValueError("family 'random' is driven by --seed, not positional parameters")
        g = random_plane_graph(args.seed, max_ops=args.max_ops)
    else:
        g = generate(args.family, *args.params)
    peg = serialize_peg(g)
    if args.json:
        print(json.dumps({"peg": peg}, indent=2))
    else:
        _write_out(args, peg)
    return 0


def _cmd_structure(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    rep = structure_report(g)
    doc = {
        "predicates": rep.as_dict(),
        "all_pass": rep.all_pass,
        "failing": list(rep.failing()),
    }
    lines = [
        ("ok " if ok else "FAIL ") + name for name, ok in rep.as_dict().items()
    ]
    lines.append("all = pass" if rep.all_pass else "all = fail")
    _emit(args, doc, lines)
    return 0 if rep.all_pass else 1


def _cmd_distance(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    d = facial_distance(g, args.e, args.f)
    finite = d != float("inf")
    doc = {"e": args.e, "f": args.f, "distance": int(d) if finite else None}
    _emit(args, doc, [f"distance = {int(d) if finite else 'inf'}"])
    return 0


# -- parser -----------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="facet",
        description="facial edge-coloring toolkit for plane pseudographs",
    )
    sub = top.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser, ell: bool = False) -> None:
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        if ell:
            p.add_argument(
                "--ell",
                type=_positive_int,
                default=3,
                help="facial distance bound (default 3)",
            )

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument(
        "--partial",
        action="store_true",
        help="accept colorings that leave edges uncolored",
    )
    p.add_argument("--dot", metavar="FILE", help="write the conflict graph as DOT")
    common(p, ell=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("chi", help="exact facial chromatic index")
    p.add_argument("--graph", required=True)
    p.add_argument(
        "--palette",
        type=_positive_int,
        default=None,
        help="advisory color budget (default 3*ell+1; never affects exactness)",
    )
    p.add_argument(
        "--budget",
        type=_positive_int,
        default=40,
        help="largest conflict graph the exact solver accepts",
    )
    p.add_argument("--witness", action="store_true", help="print a witness coloring")
    p.add_argument("--dot", metavar="FILE", help="write the conflict graph as DOT")
    common(p, ell=True)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("cn", help="graph-polynomial coefficient checks")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--lemma", help="named certificate from the catalog")
    grp.add_argument(
        "--pairs", metavar="FILE", help="file of 'p i j' lines and one 't ...' target"
    )
    common(p)
    p.set_defaults(func=_cmd_cn)

    p = sub.add_parser("reduce", help="replay reducible-configuration checks")
    p.add_argument("--config", help="run one catalog configuration by name")
    p.add_argument(
        "--config-file", metavar="FILE", help="run one configuration from JSON"
    )
    common(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("discharge", help="run the charge audit on a graph")
    p.add_argument("--graph", required=True)
    common(p)
    p.set_defaults(func=_cmd_discharge)

    p = sub.add_parser("medial", help="emit the medial graph as PEG")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", metavar="FILE", help="write PEG here instead of stdout")
    common(p)
    p.set_defaults(func=_cmd_medial)

    p = sub.add_parser("gen", help="emit a catalog or random graph as PEG")
    p.add_argument(
        "family",
        choices=["cycle", "k4", "prism", "theta", "subdivided_k4", "random"],
    )
    p.add_argument("params", nargs="*", type=int, help="family parameters")
    p.add_argument("--seed", type=int, default=0, help="random family seed")
    p.add_argument(
        "--max-ops", type=_positive_int, default=9, help="random growth steps"
    )
    p.add_argument("--out", metavar="FILE")
    common(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("structure", help="evaluate the structural predicates")
    p.add_argument("--graph", required=True)
    common(p)
    p.set_defaults(func=_cmd_structure)

    p = sub.add_parser("distance", help="facial distance between two edges")
    p.add_argument("--graph", required=True)
    p.add_argument("e", type=int)
    p.add_argument("f", type=int)
    common(p)
    p.set_defaults(func=_cmd_distance)

    return top


def main(argv: Optional[list[str]] = None) -> int:
    raw = os.environ.get("FACET_THREADS", "1")
    try:
        threads = int(raw)
        if threads < 1:
            raise ValueError
    except ValueError:
        print(
            f"error: FACET_THREADS={raw!r} is not a positive integer",
            file=sys.stderr,
        )
        return 2
    if threads > 1:
        print(
            "note: this build searches on one thread; FACET_THREADS ignored",
            file=sys.stderr,
        )
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 0 if code is None else 2
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
