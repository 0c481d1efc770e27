"""JSON interchange for spaces, structure constants and linear maps.

A document is a single JSON object:

    {
      "scalars": ["q", "s"],                        # optional, informative
      "spaces": [{"label": "A", "basis": ["1", "x"]}, ...],
      "algebra": {"space": "A",
                  "mult": [{"i": 0, "j": 0, "k": 0, "coeff": "1"}, ...],
                  "unit": ["1", "0"]},
      "coalgebra": {"space": "C",
                    "comult": [{"i": ..., "j": ..., "k": ..., "coeff": ...}],
                    "counit": ["1", "0"]},
      "maps": {"W": {"domain": ["A", "A"],
                     "codomain": ["A", "A"],
                     "entries": [{"row": 0, "col": 0, "coeff": "1"}, ...]}}
    }

Structure constants and map entries are sparse; omitted entries are
zero.  Coefficients use the scalar grammar.  "domain"/"codomain" list
space labels; an empty list is the scalar line (used by units and
counits).  Reading back a dumped document reproduces the maps exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .scalar import VARIABLES, parse as parse_scalar
from .structures import Algebra, Coalgebra
from .tensor import LinMap, ProductSpace, Space

__all__ = [
    "Document",
    "document_from_dict",
    "document_to_dict",
    "loads",
    "dumps",
    "map_document",
    "system_document",
]


@dataclass
class Document:
    spaces: dict = field(default_factory=dict)  # label -> Space
    algebra: Algebra | None = None
    coalgebra: Coalgebra | None = None
    maps: dict = field(default_factory=dict)  # name -> LinMap
    scalars: tuple = ()

    def single_map(self, name: str | None = None) -> tuple:
        """Pick a map by name, or the only one if the name is omitted."""
        if name is not None:
            if name not in self.maps:
                raise ValueError(f"no map named {name!r} in the document")
            return name, self.maps[name]
        if len(self.maps) != 1:
            have = ", ".join(sorted(self.maps)) or "none"
            raise ValueError(f"need --map to choose among maps: {have}")
        return next(iter(self.maps.items()))


def _space_list(doc: Document, labels, where: str) -> ProductSpace:
    spaces = []
    for label in labels:
        if label not in doc.spaces:
            raise ValueError(f"{where}: unknown space label {label!r}")
        spaces.append(doc.spaces[label])
    return ProductSpace(spaces)


def _coeff(raw, where: str):
    try:
        return parse_scalar(str(raw))
    except ValueError as exc:
        raise ValueError(f"{where}: bad coefficient {raw!r}: {exc}") from None


def _index(entry: Mapping, key: str, bound: int, where: str) -> int:
    value = entry.get(key)
    if not isinstance(value, int) or not 0 <= value < bound:
        raise ValueError(f"{where}: index {key}={value!r} out of range 0..{bound - 1}")
    return value


def document_from_dict(data: Mapping) -> Document:
    if not isinstance(data, Mapping):
        raise ValueError("document must be a JSON object")
    doc = Document()
    for name in data.get("scalars", ()):
        if name not in VARIABLES:
            raise ValueError(f"unknown scalar variable {name!r}")
    doc.scalars = tuple(data.get("scalars", ()))
    for item in data.get("spaces", ()):
        label = item.get("label")
        basis = item.get("basis")
        if not isinstance(label, str) or not isinstance(basis, list):
            raise ValueError("each space needs a label and a basis list")
        if label in doc.spaces:
            raise ValueError(f"duplicate space label {label!r}")
        doc.spaces[label] = Space(label, basis)
    if "algebra" in data:
        doc.algebra = _load_algebra(doc, data["algebra"])
    if "coalgebra" in data:
        doc.coalgebra = _load_coalgebra(doc, data["coalgebra"])
    for name, spec in (data.get("maps") or {}).items():
        doc.maps[name] = _load_map(doc, name, spec)
    return doc


def _load_algebra(doc: Document, data: Mapping) -> Algebra:
    label = data.get("space")
    if label not in doc.spaces:
        raise ValueError(f"algebra: unknown space label {label!r}")
    space = doc.spaces[label]
    n = space.dim
    mult = {}
    for pos, entry in enumerate(data.get("mult", ())):
        where = f"algebra.mult[{pos}]"
        key = (
            _index(entry, "i", n, where),
            _index(entry, "j", n, where),
            _index(entry, "k", n, where),
        )
        mult[key] = _coeff(entry.get("coeff", "0"), where)
    unit = [_coeff(v, "algebra.unit") for v in data.get("unit", ())]
    if len(unit) != n:
        raise ValueError(f"algebra.unit must have {n} coordinates")
    return Algebra.build(space, mult, unit)


def _load_coalgebra(doc: Document, data: Mapping) -> Coalgebra:
    label = data.get("space")
    if label not in doc.spaces:
        raise ValueError(f"coalgebra: unknown space label {label!r}")
    space = doc.spaces[label]
    n = space.dim
    comult = {}
    for pos, entry in enumerate(data.get("comult", ())):
        where = f"coalgebra.comult[{pos}]"
        key = (
            _index(entry, "i", n, where),
            _index(entry, "j", n, where),
            _index(entry, "k", n, where),
        )
        comult[key] = _coeff(entry.get("coeff", "0"), where)
    counit = [_coeff(v, "coalgebra.counit") for v in data.get("counit", ())]
    if len(counit) != n:
        raise ValueError(f"coalgebra.counit must have {n} coordinates")
    return Coalgebra.build(space, comult, counit)


def _load_map(doc: Document, name: str, data: Mapping) -> LinMap:
    domain = _space_list(doc, data.get("domain", ()), f"map {name}")
    codomain = _space_list(doc, data.get("codomain", ()), f"map {name}")
    entries = []
    for pos, entry in enumerate(data.get("entries", ())):
        where = f"map {name}, entry {pos}"
        row = _index(entry, "row", domain.dim, where)
        col = _index(entry, "col", codomain.dim, where)
        entries.append((row, col, _coeff(entry.get("coeff", "0"), where)))
    return LinMap.from_entries(domain, codomain, entries)


def document_to_dict(doc: Document) -> dict:
    out: dict = {}
    if doc.scalars:
        out["scalars"] = list(doc.scalars)
    out["spaces"] = [
        {"label": space.label, "basis": list(space.basis)}
        for space in doc.spaces.values()
    ]
    if doc.algebra is not None:
        a = doc.algebra
        n = a.space.dim
        out["algebra"] = {
            "space": a.space.label,
            "mult": [
                {"i": i, "j": j, "k": k, "coeff": str(a.mult[i][j][k])}
                for i in range(n)
                for j in range(n)
                for k in range(n)
                if not a.mult[i][j][k].is_zero
            ],
            "unit": [str(v) for v in a.unit],
        }
    if doc.coalgebra is not None:
        c = doc.coalgebra
        n = c.space.dim
        out["coalgebra"] = {
            "space": c.space.label,
            "comult": [
                {"i": i, "j": j, "k": k, "coeff": str(c.comult[i][j][k])}
                for i in range(n)
                for j in range(n)
                for k in range(n)
                if not c.comult[i][j][k].is_zero
            ],
            "counit": [str(v) for v in c.counit],
        }
    if doc.maps:
        out["maps"] = {
            name: {
                "domain": [f.label for f in m.domain.factors],
                "codomain": [f.label for f in m.codomain.factors],
                "entries": [
                    {"row": i, "col": j, "coeff": str(v)}
                    for i, j, v in m.nonzero_entries()
                ],
            }
            for name, m in doc.maps.items()
        }
    return out


def loads(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    return document_from_dict(data)


def dumps(doc: Document) -> str:
    return json.dumps(document_to_dict(doc), indent=2) + "\n"


def _collect_spaces(doc: Document, *maps: LinMap):
    for m in maps:
        for space in m.domain.factors + m.codomain.factors:
            known = doc.spaces.get(space.label)
            if known is None:
                doc.spaces[space.label] = space
            elif known != space:
                raise ValueError(f"conflicting spaces share the label {space.label!r}")


def map_document(name: str, m: LinMap) -> Document:
    doc = Document()
    _collect_spaces(doc, m)
    doc.maps[name] = m
    return doc


def system_document(system, algebra=None, coalgebra=None) -> Document:
    doc = Document()
    _collect_spaces(doc, system.w, system.x, system.z)
    doc.algebra = algebra
    doc.coalgebra = coalgebra
    doc.maps = {"W": system.w, "X": system.x, "Z": system.z}
    return doc
