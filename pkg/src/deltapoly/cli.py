"""Command-line surface: interchange documents, operation words, verification.

Documents are JSON with a "type" discriminator (setsystem, graph, matrix,
matroid, representation).  Operation words apply flips and removals left
to right, e.g. "*{p,q}+r~*s\\u".  Exit codes: 0 success, 1 mathematical
failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Any

from .delta import DivisibilityStatus, divisibility, is_delta_matroid, is_even, is_vf_closed
from .errors import (
    CapExceededError,
    DeltaPolyError,
    DocumentError,
    GroundSetError,
    ImproperSystemError,
    NotAGraphError,
    PivotUndefinedError,
    PreconditionError,
    SizeGuardError,
)
from .gf2 import Gf2Matrix, ppt, support_set_system
from .graphs import Graph, graph_poly, graph_to_system, system_to_graph
from .interlace import UniPoly, multivariate_Q, poly_direct, specialize
from .matroids import (
    Matroid,
    Representation,
    bicycle_dimension,
    binary_matroid_from_matrix,
    dual_pivot_min_distance,
    fundamental_graph,
    tutte,
    tutte_dc,
    tutte_diagonal_check,
)
from .recursion import Q1_recursive, q1_recursive, q2_q3_recursive, recursion_consistency
from .setsystem import SetSystem, full_flip_explicit, vf_orbit

EXIT_OK = 0
EXIT_MATH = 1
EXIT_INPUT = 2

MATH_ERRORS = (
    ImproperSystemError,
    PivotUndefinedError,
    NotAGraphError,
    PreconditionError,
    CapExceededError,
)
INPUT_ERRORS = (DocumentError, GroundSetError, SizeGuardError)


# -- documents -----------------------------------------------------------------


def parse_document(text: str):
    """Parse an interchange document into its in-memory value."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "type" not in doc:
        raise DocumentError("document must be an object with a 'type' field")
    kind = doc["type"]
    try:
        if kind == "setsystem":
            return _parse_setsystem(doc)
        if kind == "graph":
            return _parse_graph(doc)
        if kind == "matrix":
            return _parse_matrix(doc)
        if kind == "matroid":
            return _parse_matroid(doc)
        if kind == "representation":
            return _parse_representation(doc)
    except DeltaPolyError:
        raise
    except (TypeError, ValueError, KeyError) as exc:
        raise DocumentError(f"malformed {kind} document: {exc}") from exc
    raise DocumentError(f"unknown document type {kind!r}")


def _parse_setsystem(doc) -> SetSystem:
    ground = doc["ground"]
    sets = doc["sets"]
    seen = set()
    for s in sets:
        key = frozenset(s)
        if len(s) != len(key):
            raise DocumentError(f"set {s} repeats an element")
        if key in seen:
            raise DocumentError(f"duplicate set {s}")
        seen.add(key)
    return SetSystem.from_sets(ground, sets)


def _parse_graph(doc) -> Graph:
    return Graph.from_edges(doc["vertices"], [tuple(e) for e in doc["edges"]], doc.get("loops", []))


def _parse_matrix(doc) -> Gf2Matrix:
    return Gf2Matrix.from_rows(doc["labels"], doc["rows"])


def _parse_matroid(doc) -> Matroid:
    try:
        return Matroid.from_bases(doc["ground"], doc["bases"])
    except PreconditionError as exc:
        raise DocumentError(f"not a matroid: {exc}") from exc


def _parse_representation(doc) -> Representation:
    return Representation.from_rows(doc["columns"], doc["rows"])


def emit_document(value) -> dict:
    if isinstance(value, SetSystem):
        return {
            "type": "setsystem",
            "ground": list(value.ground.labels),
            "sets": [list(s) for s in value.member_sets()],
        }
    if isinstance(value, Graph):
        return {
            "type": "graph",
            "vertices": list(value.vertices()),
            "edges": [list(e) for e in value.edges()],
            "loops": value.loops(),
        }
    if isinstance(value, Gf2Matrix):
        return {"type": "matrix", "labels": list(value.ground.labels), "rows": value.to_lists()}
    if isinstance(value, Matroid):
        return {
            "type": "matroid",
            "ground": list(value.ground.labels),
            "bases": [list(value.ground.labels_of(b)) for b in value.bases()],
        }
    if isinstance(value, Representation):
        return {"type": "representation", "columns": list(value.columns.labels), "rows": value.to_lists()}
    raise TypeError(f"cannot emit {type(value).__name__}")


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- operation words -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(~\*|\*|\+|\\|\[)")
_NAME = re.compile(r"\s*([A-Za-z0-9_]+)")

_WORD_KINDS = {"~*": "dualpivot", "*": "pivot", "+": "loopc", "\\": "delete"}


def parse_operation_word(text: str) -> list[tuple[str, tuple[str, ...]]]:
    """Tokenize an operation word into (operation, element labels) steps.

    Targets are a single label or a braced comma list; `[a,b]` is a
    restriction to the listed elements.
    """
    steps = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise DocumentError(f"cannot read operation at position {pos} in {text!r}")
        op = m.group(1)
        pos = m.end()
        if op == "[":
            end = text.find("]", pos)
            if end < 0:
                raise DocumentError("unterminated restriction bracket")
            inner = text[pos:end].strip()
            labels = _parse_label_list(inner) if inner else ()
            steps.append(("restrict", labels))
            pos = end + 1
            continue
        kind = _WORD_KINDS[op]
        if pos < len(text) and text[pos] == "{":
            end = text.find("}", pos)
            if end < 0:
                raise DocumentError("unterminated brace in operation word")
            labels = _parse_label_list(text[pos + 1 : end])
            pos = end + 1
        else:
            m2 = _NAME.match(text, pos)
            if not m2:
                raise DocumentError(f"operation {op!r} needs a target at position {pos}")
            labels = (m2.group(1),)
            pos = m2.end()
        steps.append((kind, labels))
    return steps


def _parse_label_list(inner: str) -> tuple[str, ...]:
    labels = tuple(part.strip() for part in inner.split(",") if part.strip())
    if not labels:
        raise DocumentError("empty element list")
    return labels


def apply_operation_word(system: SetSystem, word: str) -> SetSystem:
    out = system
    for op, labels in parse_operation_word(word):
        if op == "restrict":
            out = out.restrict(labels)
        elif op == "delete":
            out = out.delete(labels)
        else:
            from .setsystem import apply_vertex_flip

            out = apply_vertex_flip(out, op, labels)
    return out


# -- command handlers ------------------------------------------------------------


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _print_poly(poly: UniPoly, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(poly.coeff_list(), separators=(",", ":")))
    else:
        print(poly.text())


def _as_setsystem(value) -> SetSystem:
    if isinstance(value, SetSystem):
        return value
    if isinstance(value, Graph):
        return graph_to_system(value)
    if isinstance(value, Gf2Matrix):
        return support_set_system(value)
    if isinstance(value, Matroid):
        return value.carrier
    if isinstance(value, Representation):
        return binary_matroid_from_matrix(value).carrier
    raise DocumentError("this command needs a set-system-like input")


def cmd_validate(args) -> int:
    value = parse_document(_read_input(args.input))
    sys.stdout.write(canonical_json(emit_document(value)))
    return EXIT_OK


def cmd_apply(args) -> int:
    system = _as_setsystem(parse_document(_read_input(args.input)))
    result = apply_operation_word(system, args.word)
    sys.stdout.write(canonical_json(emit_document(result)))
    return EXIT_OK


def cmd_poly(args) -> int:
    value = parse_document(_read_input(args.input))
    if args.which == "Q":
        system = _as_setsystem(value)
        table = multivariate_Q(system, force=args.force)
        if args.format == "json":
            print(json.dumps(table.to_records(), separators=(",", ":")))
        else:
            for rec in table.to_records():
                print(rec)
        return EXIT_OK
    if isinstance(value, Graph) and not args.via_system:
        poly = graph_poly(value, args.which)
    else:
        poly = poly_direct(_as_setsystem(value), args.which, force=args.force)
    _print_poly(poly, args.format)
    return EXIT_OK


def cmd_eval(args) -> int:
    system = _as_setsystem(parse_document(_read_input(args.input)))
    poly = poly_direct(system, args.which, force=args.force)
    print(poly.evaluate(args.at))
    return EXIT_OK


def cmd_check(args) -> int:
    system = _as_setsystem(parse_document(_read_input(args.input)))
    if args.predicate == "dm":
        result: Any = is_delta_matroid(system)
    elif args.predicate == "even":
        result = is_even(system)
    elif args.predicate == "vfclosed":
        result = is_vf_closed(system, cap=args.cap)
    elif args.predicate == "divisible":
        if not args.element:
            raise DocumentError("check divisible needs --element")
        status: DivisibilityStatus = divisibility(system, args.element)
        result = {"divisible": status.divisible, "strongly_divisible": status.strongly_divisible}
    else:
        raise DocumentError(f"unknown predicate {args.predicate}")
    print(json.dumps(result, separators=(",", ":")))
    return EXIT_OK


def cmd_orbit(args) -> int:
    system = _as_setsystem(parse_document(_read_input(args.input)))
    gen = "fullV-alternation" if args.generators == "fullv" else "all-single-element-flips"
    systems = vf_orbit(system, gen, cap=args.cap, force=args.force)
    docs = [emit_document(s) for s in systems]
    sys.stdout.write(canonical_json(docs))
    return EXIT_OK


def cmd_tree(args) -> int:
    system = _as_setsystem(parse_document(_read_input(args.input)))
    if args.which == "q1":
        _, trace = q1_recursive(system)
    elif args.which in ("q2", "q3"):
        _, trace = q2_q3_recursive(system, args.which)
    else:
        _, trace = Q1_recursive(system)
    if args.format == "json":
        sys.stdout.write(canonical_json(_trace_doc(trace)))
    else:
        print(trace.render())
    return EXIT_OK


def _trace_doc(trace) -> dict:
    doc = {
        "system": emit_document(trace.system),
        "value": trace.value.coeff_list(),
    }
    if trace.element is not None:
        doc["element"] = trace.element
    if trace.factor is not None:
        doc["factor"] = trace.factor.coeff_list()
    if trace.branches:
        doc["branches"] = [{"op": op, "child": _trace_doc(child)} for op, child in trace.branches]
    return doc


def cmd_from_graph(args) -> int:
    value = parse_document(_read_input(args.input))
    if not isinstance(value, Graph):
        raise DocumentError("from-graph needs a graph document")
    out = {
        "matrix": emit_document(value.matrix),
        "setsystem": emit_document(graph_to_system(value)),
    }
    sys.stdout.write(canonical_json(out))
    return EXIT_OK


def cmd_from_matrix(args) -> int:
    value = parse_document(_read_input(args.input))
    if not isinstance(value, Gf2Matrix):
        raise DocumentError("from-matrix needs a matrix document")
    sys.stdout.write(canonical_json(emit_document(support_set_system(value, force=args.force))))
    return EXIT_OK


def cmd_ppt(args) -> int:
    value = parse_document(_read_input(args.input))
    if not isinstance(value, Gf2Matrix):
        raise DocumentError("ppt needs a matrix document")
    labels = _parse_label_list(args.on)
    result = ppt(value, value.ground.mask_of(labels))
    sys.stdout.write(canonical_json(emit_document(result)))
    return EXIT_OK


def cmd_tutte(args) -> int:
    value = parse_document(_read_input(args.input))
    if isinstance(value, Representation):
        matroid = binary_matroid_from_matrix(value)
    elif isinstance(value, Matroid):
        matroid = value
    else:
        raise DocumentError("tutte needs a matroid or representation document")
    poly = tutte(matroid)
    if args.format == "json":
        print(json.dumps(poly.to_records(), separators=(",", ":")))
    else:
        print(poly.text())
    return EXIT_OK


def cmd_bicycle_dim(args) -> int:
    value = parse_document(_read_input(args.input))
    if not isinstance(value, Representation):
        raise DocumentError("bicycle-dim needs a representation document")
    print(bicycle_dimension(value))
    return EXIT_OK


def cmd_fundamental_graph(args) -> int:
    value = parse_document(_read_input(args.input))
    if isinstance(value, Representation):
        matroid = binary_matroid_from_matrix(value)
    elif isinstance(value, Matroid):
        matroid = value
    else:
        raise DocumentError("fundamental-graph needs a matroid or representation document")
    labels = _parse_label_list(args.basis)
    graph = fundamental_graph(matroid, labels)
    sys.stdout.write(canonical_json(emit_document(graph)))
    return EXIT_OK


def cmd_verify(args) -> int:
    """Cross-oracle identity suites on one input; exit 1 on any mismatch."""
    value = parse_document(_read_input(args.input))
    lines: list[tuple[str, bool]] = []

    def add(name: str, ok: bool) -> None:
        lines.append((name, ok))

    if isinstance(value, (Gf2Matrix,)):
        value = support_set_system(value)
    if isinstance(value, Graph):
        system = graph_to_system(value)
        for which in ("q1", "q2", "q3", "Q1"):
            add(
                f"graph-vs-setsystem {which}",
                graph_poly(value, which) == poly_direct(system, which),
            )
        add("graph roundtrip", system_to_graph(system).matrix == value.matrix)
        value = system
    if isinstance(value, Matroid):
        t1, t2 = tutte(value), tutte_dc(value)
        add("tutte rank-sum vs deletion-contraction", t1 == t2)
        via_t, via_q1, equal = tutte_diagonal_check(value)
        add("tutte diagonal vs shifted q1", equal)
        rep = value.representation
        if rep is not None:
            add(
                "bicycle dimension vs dual-pivot distance",
                bicycle_dimension(rep) == dual_pivot_min_distance(value.carrier),
            )
        value = value.carrier
    if isinstance(value, Representation):
        matroid = binary_matroid_from_matrix(value)
        t1, t2 = tutte(matroid), tutte_dc(matroid)
        add("tutte rank-sum vs deletion-contraction", t1 == t2)
        _, _, equal = tutte_diagonal_check(matroid)
        add("tutte diagonal vs shifted q1", equal)
        add(
            "bicycle dimension vs dual-pivot distance",
            bicycle_dimension(value) == dual_pivot_min_distance(matroid.carrier),
        )
        value = matroid.carrier
    if isinstance(value, SetSystem):
        system = value
        if system.n <= args.limit:
            table = multivariate_Q(system)
            for which in ("Q1", "q1", "q2", "q3"):
                add(
                    f"multivariate specialization {which}",
                    specialize(table, which) == poly_direct(system, which),
                )
            if is_delta_matroid(system):
                add("q1 recursion vs direct", recursion_consistency(system, "q1").equal)
                if is_delta_matroid(full_flip_explicit(system, "dualpivot")):
                    add("q2 recursion vs direct", recursion_consistency(system, "q2").equal)
                if is_delta_matroid(full_flip_explicit(system, "loopc")):
                    add("q3 recursion vs direct", recursion_consistency(system, "q3").equal)
                if is_vf_closed(system):
                    add("Q1 recursion vs direct", recursion_consistency(system, "Q1").equal)
                else:
                    report = recursion_consistency(system, "Q1")
                    note = "differs from" if not report.equal else "happens to match"
                    add(f"input not vf-closed; Q1 three-term sum {note} the direct value", True)

    failed = False
    for name, ok in lines:
        print(f"{'ok' if ok else 'FAIL'}  {name}")
        if not ok:
            failed = True
    return EXIT_MATH if failed else EXIT_OK


# -- argument parsing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deltapoly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_force: bool = True):
        p.add_argument("--input", required=True, help="input document path, or - for stdin")
        p.add_argument("--format", choices=("json", "text"), default="json")
        if with_force:
            p.add_argument("--force", action="store_true", help="override size guards")

    p = sub.add_parser("validate", help="parse and re-emit a document canonically")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("apply", help="apply an operation word to a set system")
    common(p)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("poly", help="compute an interlace-family polynomial")
    common(p)
    p.add_argument("--which", choices=("Q1", "q1", "q2", "q3", "Q"), required=True)
    p.add_argument("--via-system", action="store_true", help="route graphs through the set system")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("eval", help="evaluate a polynomial at an integer")
    common(p)
    p.add_argument("--which", choices=("Q1", "q1", "q2", "q3"), required=True)
    p.add_argument("--at", type=int, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="predicate checks")
    common(p)
    p.add_argument("predicate", choices=("dm", "even", "vfclosed", "divisible"))
    p.add_argument("--element")
    p.add_argument("--cap", type=int, default=100_000)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("orbit", help="vertex-flip orbit of a set system")
    common(p)
    p.add_argument("--generators", choices=("fullv", "single"), default="fullv")
    p.add_argument("--cap", type=int, default=100_000)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("tree", help="recursive computation tree")
    common(p)
    p.add_argument("--which", choices=("Q1", "q1", "q2", "q3"), required=True)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("from-graph", help="graph to matrix and set-system forms")
    common(p)
    p.set_defaults(func=cmd_from_graph)

    p = sub.add_parser("from-matrix", help="support set system of a matrix")
    common(p)
    p.set_defaults(func=cmd_from_matrix)

    p = sub.add_parser("ppt", help="principal pivot transform of a matrix")
    common(p)
    p.add_argument("--on", required=True, help="comma-separated pivot elements")
    p.set_defaults(func=cmd_ppt)

    p = sub.add_parser("tutte", help="Tutte polynomial of a matroid")
    common(p)
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("bicycle-dim", help="bicycle-space dimension of a representation")
    common(p)
    p.set_defaults(func=cmd_bicycle_dim)

    p = sub.add_parser("fundamental-graph", help="fundamental graph of a matroid basis")
    common(p)
    p.add_argument("--basis", required=True, help="comma-separated basis elements")
    p.set_defaults(func=cmd_fundamental_graph)

    p = sub.add_parser("verify", help="run the cross-oracle identity suites")
    common(p)
    p.add_argument("--limit", type=int, default=8, help="skip exponential suites above this size")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MATH_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
