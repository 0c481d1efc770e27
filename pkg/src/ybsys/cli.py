"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when a mathematical
check fails (the failing law and a witness are printed), 2 for input,
parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import interchange
from .entwining import (
    EntwiningStructure,
    check_entwining,
    entwining_from_wxz,
    wxz_from_entwining,
)
from .gluing import check_hecke, glue, hecke_glue
from .report import CheckFailedError, CheckReport
from .scalar import ParseError, parse as parse_scalar, variable
from .structures import (
    Algebra,
    Bialgebra,
    Coalgebra,
    check_algebra,
    check_bialgebra,
    check_coalgebra,
)
from .tensor import LinMap, SingularMapError
from .yang_baxter import WXZSystem, check_braid, check_wxz
from .zoo import accepted_params, get_example, list_examples

__all__ = ["main", "entry_point"]


def _parse_params(text: str | None) -> dict:
    params: dict = {}
    if not text:
        return params
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise ValueError(f"--params entries must look like name=value, got {piece!r}")
        name, value = piece.split("=", 1)
        params[name.strip()] = value.strip()
    return params


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _read_document(path: str | None) -> interchange.Document:
    return interchange.loads(_read_text(path))


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _split_params(args, extra_names: tuple) -> tuple:
    """Route --params between the example and the build step.

    Names the example accepts go to the example; ``extra_names`` are
    resolved here (shared names go to both, which keeps a parameter
    like s meaning the same thing in the structure and in the build).
    """
    params = _parse_params(args.params)
    if args.example:
        accepted = set(accepted_params(args.example))
    else:
        accepted = set()
    example_params = {k: v for k, v in params.items() if k in accepted}
    build_params = {}
    for name in extra_names:
        build_params[name] = parse_scalar(params[name]) if name in params else variable(name)
    unknown = set(params) - accepted - set(extra_names)
    if unknown:
        raise ValueError(f"unknown parameter(s): {', '.join(sorted(unknown))}")
    return example_params, build_params


def _example_payload(args, kinds: tuple):
    entry = get_example(args.example, _parse_params(args.params))
    if entry.kind not in kinds:
        wanted = " or ".join(kinds)
        raise ValueError(f"example {args.example!r} is a {entry.kind}, expected {wanted}")
    return entry


def _entwining_input(args, example_params=None) -> EntwiningStructure:
    if args.example:
        entry = get_example(args.example, example_params if example_params is not None else _parse_params(args.params))
        if entry.kind != "entwining":
            raise ValueError(f"example {args.example!r} is a {entry.kind}, expected entwining")
        return entry.payload
    doc = _read_document(args.file)
    if doc.algebra is None or doc.coalgebra is None:
        raise ValueError("the document must contain both an algebra and a coalgebra")
    _, psi = doc.single_map(getattr(args, "map", None))
    return EntwiningStructure(doc.algebra, doc.coalgebra, psi)


def _system_input(args) -> WXZSystem:
    if args.example:
        return _example_payload(args, ("wxz",)).payload
    doc = _read_document(args.file)
    missing = [name for name in ("W", "X", "Z") if name not in doc.maps]
    if missing:
        raise ValueError(f"the document must contain maps named W, X and Z (missing: {', '.join(missing)})")
    return WXZSystem(doc.maps["W"], doc.maps["X"], doc.maps["Z"])


def _map_input(args) -> tuple:
    if args.example:
        entry = _example_payload(args, ("map",))
        return entry.name, entry.payload
    doc = _read_document(args.file)
    return doc.single_map(getattr(args, "map", None))


def _emit_report(report: CheckReport, as_json: bool, command: str) -> int:
    if as_json:
        payload = {"command": command, **report.to_dict()}
        print(json.dumps(payload, indent=2))
    else:
        print(report)
    return 0 if report.ok else 1


def _cmd_examples(args) -> int:
    if args.action == "list" or args.name is None:
        for info in list_examples():
            signature = f" [{info.signature}]" if info.signature else ""
            print(f"{info.name}  ({info.kind}){signature}  {info.summary}")
        return 0
    entry = get_example(args.name, _parse_params(args.params))
    print(_render_payload(entry.kind, entry.payload), end="")
    return 0


def _combo(pairs) -> str:
    parts = []
    for coeff, label in pairs:
        if coeff.is_zero:
            continue
        text = str(coeff)
        parts.append(label if text == "1" else f"({text})*{label}")
    return " + ".join(parts) if parts else "0"


def _render_algebra(a: Algebra) -> str:
    lines = [f"algebra on {a.space.label}, basis: {' '.join(a.space.basis)}"]
    lines.append(f"unit = {_combo(zip(a.unit, a.space.basis))}")
    n = a.space.dim
    for i in range(n):
        for j in range(n):
            combo = _combo(zip(a.mult[i][j], a.space.basis))
            lines.append(f"{a.space.basis[i]}*{a.space.basis[j]} = {combo}")
    return "\n".join(lines) + "\n"


def _render_coalgebra(c: Coalgebra) -> str:
    lines = [f"coalgebra on {c.space.label}, basis: {' '.join(c.space.basis)}"]
    n = c.space.dim
    for i in range(n):
        pairs = []
        for j in range(n):
            for k in range(n):
                pairs.append(
                    (c.comult[i][j][k], f"{c.space.basis[j]}(x){c.space.basis[k]}")
                )
        lines.append(f"comult({c.space.basis[i]}) = {_combo(pairs)}")
    lines.append(f"counit = {_combo(zip(c.counit, c.space.basis))}")
    return "\n".join(lines) + "\n"


def _render_payload(kind: str, payload) -> str:
    if kind == "map":
        return payload.to_text() + "\n"
    if kind == "algebra":
        return _render_algebra(payload)
    if kind == "coalgebra":
        return _render_coalgebra(payload)
    if kind == "bialgebra":
        return _render_algebra(payload.algebra) + _render_coalgebra(payload.coalgebra)
    if kind == "entwining":
        return (
            _render_algebra(payload.algebra)
            + _render_coalgebra(payload.coalgebra)
            + f"entwining map {payload.entwining_map.domain} -> {payload.entwining_map.codomain}:\n"
            + payload.entwining_map.to_text()
            + "\n"
        )
    if kind == "wxz":
        return (
            "W:\n" + payload.w.to_text() + "\n"
            "X:\n" + payload.x.to_text() + "\n"
            "Z:\n" + payload.z.to_text() + "\n"
        )
    raise ValueError(f"cannot render payload of kind {kind!r}")


def _cmd_check_algebra(args) -> int:
    if args.example:
        entry = _example_payload(args, ("algebra", "bialgebra"))
        payload = entry.payload.algebra if entry.kind == "bialgebra" else entry.payload
    else:
        doc = _read_document(args.file)
        if doc.algebra is None:
            raise ValueError("the document contains no algebra")
        payload = doc.algebra
    return _emit_report(check_algebra(payload), args.json, "check-algebra")


def _cmd_check_coalgebra(args) -> int:
    if args.example:
        entry = _example_payload(args, ("coalgebra", "bialgebra"))
        payload = entry.payload.coalgebra if entry.kind == "bialgebra" else entry.payload
    else:
        doc = _read_document(args.file)
        if doc.coalgebra is None:
            raise ValueError("the document contains no coalgebra")
        payload = doc.coalgebra
    return _emit_report(check_coalgebra(payload), args.json, "check-coalgebra")


def _cmd_check_entwining(args) -> int:
    ent = _entwining_input(args)
    return _emit_report(check_entwining(ent), args.json, "check-entwining")


def _cmd_check_wxz(args) -> int:
    system = _system_input(args)
    return _emit_report(check_wxz(system), args.json, "check-wxz")


def _cmd_build_wxz(args) -> int:
    example_params, build = _split_params(args, ("r", "s", "p", "t"))
    ent = _entwining_input(args, example_params)
    system = wxz_from_entwining(ent, build["r"], build["s"], build["p"], build["t"])
    doc = interchange.system_document(system, ent.algebra, ent.coalgebra)
    _write_text(args.output, interchange.dumps(doc))
    return 0


def _cmd_glue(args) -> int:
    system = _system_input(args)
    glued = glue(system)
    report = check_braid(glued.operator)
    if args.output:
        doc = interchange.map_document("glued", glued.operator)
        _write_text(args.output, interchange.dumps(doc))
    return _emit_report(report, args.json, "glue")


def _cmd_hecke_glue(args) -> int:
    example_params, build = _split_params(args, ("q",))
    ent = _entwining_input(args, example_params)
    glued = hecke_glue(ent, build["q"])
    report = check_hecke(glued.operator, build["q"])
    if args.output:
        doc = interchange.map_document("glued", glued.operator)
        _write_text(args.output, interchange.dumps(doc))
    return _emit_report(report, args.json, "hecke-glue")


def _cmd_check_hecke(args) -> int:
    params = _parse_params(args.params)
    q = parse_scalar(params.pop("q")) if "q" in params else variable("q")
    if not args.example and params:
        raise ValueError(f"unknown parameter(s): {', '.join(sorted(params))}")
    _, operator = _map_input(args)
    return _emit_report(check_hecke(operator, q), args.json, "check-hecke")


def _cmd_export_matrix(args) -> int:
    name, operator = _map_input(args)
    doc = interchange.map_document(name, operator)
    _write_text(args.output, interchange.dumps(doc))
    return 0


def _add_input_options(sub, with_map=True):
    sub.add_argument("file", nargs="?", help="input JSON document ('-' for stdin)")
    sub.add_argument("--example", help="use a registry example instead of a file")
    sub.add_argument("--params", help="comma-separated name=value parameter list")
    if with_map:
        sub.add_argument("--map", help="name of the map to use from the document")
    sub.add_argument("--json", action="store_true", help="emit a JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybsys",
        description="Exact checks and constructions for Yang-Baxter systems and entwining structures.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("examples", help="list registry examples or show one")
    sub.add_argument("action", nargs="?", choices=("list", "show"), default="list")
    sub.add_argument("name", nargs="?", help="example name (for show)")
    sub.add_argument("--params", help="comma-separated name=value parameter list")
    sub.set_defaults(handler=_cmd_examples)

    sub = subs.add_parser("check-algebra", help="verify the algebra axioms")
    _add_input_options(sub, with_map=False)
    sub.set_defaults(handler=_cmd_check_algebra)

    sub = subs.add_parser("check-coalgebra", help="verify the coalgebra axioms")
    _add_input_options(sub, with_map=False)
    sub.set_defaults(handler=_cmd_check_coalgebra)

    sub = subs.add_parser("check-entwining", help="verify the four entwining axioms")
    _add_input_options(sub)
    sub.set_defaults(handler=_cmd_check_entwining)

    sub = subs.add_parser("check-wxz", help="verify the four system equations")
    _add_input_options(sub, with_map=False)
    sub.set_defaults(handler=_cmd_check_wxz)

    sub = subs.add_parser(
        "build-wxz", help="build the W, X, Z system from an entwining structure"
    )
    _add_input_options(sub)
    sub.add_argument("-o", "--output", help="write the system document here (default stdout)")
    sub.set_defaults(handler=_cmd_build_wxz)

    sub = subs.add_parser("glue", help="glue a system into one Yang-Baxter operator")
    _add_input_options(sub, with_map=False)
    sub.add_argument("-o", "--output", help="write the glued operator document here")
    sub.set_defaults(handler=_cmd_glue)

    sub = subs.add_parser(
        "hecke-glue", help="build the Hecke-type operator from an entwining structure"
    )
    _add_input_options(sub)
    sub.add_argument("-o", "--output", help="write the glued operator document here")
    sub.set_defaults(handler=_cmd_hecke_glue)

    sub = subs.add_parser("check-hecke", help="verify braid plus the Hecke quadratic")
    _add_input_options(sub)
    sub.set_defaults(handler=_cmd_check_hecke)

    sub = subs.add_parser("export-matrix", help="write a map as a JSON document")
    _add_input_options(sub)
    sub.add_argument("-o", "--output", help="output path (default stdout)")
    sub.set_defaults(handler=_cmd_export_matrix)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args)
    except CheckFailedError as exc:
        print(exc.report)
        return 1
    except SingularMapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, ValueError, KeyError, OSError, ZeroDivisionError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
