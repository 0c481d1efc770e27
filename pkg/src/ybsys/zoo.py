"""A registry of named, parameterised instances used by tests and the
CLI: the two-dimensional algebra/coalgebra pair with its entwining
maps, the cyclically truncated shift entwining, group bialgebras with
their self Doi-Koppinen data, and small degenerate structures.

Every payload is validated against its structural axioms when it is
built, with whatever parameters were supplied (symbolic by default),
so a successful lookup is already a verified instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .entwining import EntwiningStructure, doi_koppinen_entwining, check_entwining
from .scalar import ONE, ScalarExpr, as_scalar, variable
from .structures import (
    Algebra,
    Bialgebra,
    Coalgebra,
    ComoduleAlgebra,
    ModuleCoalgebra,
    check_algebra,
    check_bialgebra,
    check_coalgebra,
    dualize_algebra,
)
from .tensor import LinMap, ProductSpace, Space, flip
from .yang_baxter import WXZSystem, check_wxz, w_from_algebra, z_from_coalgebra

__all__ = [
    "ExampleEntry",
    "ExampleInfo",
    "get_example",
    "list_examples",
    "accepted_params",
]


@dataclass(frozen=True)
class ExampleEntry:
    name: str
    kind: str
    params: dict
    payload: object


@dataclass(frozen=True)
class ExampleInfo:
    name: str
    kind: str
    signature: str
    summary: str


def _two_dim_algebra(s: ScalarExpr) -> Algebra:
    space = Space("A", ("1", "x"))
    square = ONE / (s + 1)
    return Algebra.build(
        space,
        {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): square},
        ["1", "0"],
    )


def _two_dim_coalgebra(s: ScalarExpr) -> Coalgebra:
    space = Space("C", ("e", "f"))
    weight = ONE / (s + 1)
    return Coalgebra.build(
        space,
        {(0, 0, 0): 1, (0, 1, 1): weight, (1, 0, 1): 1, (1, 1, 0): 1},
        ["1", "0"],
    )


def _two_dim_pair_spaces():
    alg = _two_dim_algebra(variable("s"))
    coa = _two_dim_coalgebra(variable("s"))
    return alg.space, coa.space


def _x56(q: ScalarExpr) -> LinMap:
    a, c = Space("A", ("1", "x")), Space("C", ("e", "f"))
    square = ProductSpace.of(a, c)
    return LinMap.from_dense(
        square,
        square,
        [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, q, 1, 0],
            [0, 0, 0, -1],
        ],
    )


def _x59(q: ScalarExpr, s: ScalarExpr) -> LinMap:
    a, c = Space("A", ("1", "x")), Space("C", ("e", "f"))
    square = ProductSpace.of(a, c)
    s_inv = ONE / s
    return LinMap.from_dense(
        square,
        square,
        [
            [s_inv, 0, 0, q * (1 - s)],
            [0, 1, 0, 0],
            [0, q, s_inv, 0],
            [0, 0, 0, -1],
        ],
    )


def _two_dim_entwining(q: ScalarExpr, s: ScalarExpr) -> EntwiningStructure:
    alg = _two_dim_algebra(s)
    coa = _two_dim_coalgebra(s)
    domain = ProductSpace.of(coa.space, alg.space)
    codomain = ProductSpace.of(alg.space, coa.space)
    # rows (e,1), (e,x), (f,1), (f,x); columns (1,e), (1,f), (x,e), (x,f)
    psi = LinMap.from_dense(
        domain,
        codomain,
        [
            [1, 0, 0, 0],
            [0, q, 1, 0],
            [0, 1, 0, 0],
            [0, 0, 0, -1],
        ],
    )
    return EntwiningStructure(alg, coa, psi)


def _group_bialgebra(n: int) -> Bialgebra:
    space = Space(f"k[Z{n}]", tuple(f"g{i}" for i in range(n)))
    mult = {(i, j, (i + j) % n): 1 for i in range(n) for j in range(n)}
    unit = {0: 1}
    comult = {(i, i, i): 1 for i in range(n)}
    counit = {i: 1 for i in range(n)}
    return Bialgebra(
        Algebra.build(space, mult, unit), Coalgebra.build(space, comult, counit)
    )


def _group_doi_koppinen(n: int) -> EntwiningStructure:
    b = _group_bialgebra(n)
    comodule = ComoduleAlgebra(b.algebra, b, b.coalgebra.comult_map())
    module = ModuleCoalgebra(b.coalgebra, b, b.algebra.mult_map())
    return doi_koppinen_entwining(comodule, module)


def _flip_entwining() -> EntwiningStructure:
    alg = _group_bialgebra(2).algebra
    coa = dualize_algebra(alg)
    return EntwiningStructure(alg, coa, flip(coa.space, alg.space))


def _point_coalgebra() -> Coalgebra:
    space = Space("pt", ("e",))
    return Coalgebra.build(space, {(0, 0, 0): 1}, ["1"])


def _shift_entwining(n: int) -> EntwiningStructure:
    """Square-zero generators cyclically shifted through primitives.

    A has basis 1, x_0..x_{n-1} with all products of generators zero;
    C has a group-like e and primitives y_0..y_{n-1}; the entwining map
    shifts both indices by one, modulo n.
    """
    a_space = Space("A", ("1",) + tuple(f"x{i}" for i in range(n)))
    c_space = Space("C", ("e",) + tuple(f"y{j}" for j in range(n)))
    mult = {(0, 0, 0): 1}
    for i in range(1, n + 1):
        mult[(0, i, i)] = 1
        mult[(i, 0, i)] = 1
    alg = Algebra.build(a_space, mult, {0: 1})
    comult = {(0, 0, 0): 1}
    for j in range(1, n + 1):
        comult[(j, 0, j)] = 1
        comult[(j, j, 0)] = 1
    coa = Coalgebra.build(c_space, comult, {0: 1})
    dim = n + 1
    entries = []
    for c_idx in range(dim):
        for a_idx in range(dim):
            row = c_idx * dim + a_idx
            if a_idx == 0:  # psi(c (x) 1) = 1 (x) c
                entries.append((row, 0 * dim + c_idx, 1))
            elif c_idx == 0:  # psi(e (x) a) = a (x) e
                entries.append((row, a_idx * dim + 0, 1))
            else:  # psi(y_j (x) x_i) = x_{i+1} (x) y_{j+1}, cyclically
                i_next = (a_idx - 1 + 1) % n + 1
                j_next = (c_idx - 1 + 1) % n + 1
                entries.append((row, i_next * dim + j_next, 1))
    psi = LinMap.from_entries(
        ProductSpace.of(c_space, a_space), ProductSpace.of(a_space, c_space), entries
    )
    return EntwiningStructure(alg, coa, psi)


def _system_from_family(resolved: Mapping[str, ScalarExpr]) -> WXZSystem:
    ent = _two_dim_entwining(resolved["q"], resolved["s"])
    return WXZSystem(
        w=w_from_algebra(ent.algebra, resolved["r"], resolved["s"]),
        x=flip(ent.algebra.space, ent.coalgebra.space).then(ent.entwining_map),
        z=z_from_coalgebra(ent.coalgebra, resolved["p"], resolved["t"]),
    )


def _sym(name):
    return lambda resolved: variable(name)

def _copy_of(name):
    return lambda resolved: resolved[name]

def _fixed(value):
    return lambda resolved: as_scalar(value)


# family parameter block of the two-dimensional example: the source
# fixes r = t = 1 and p = s, with s and q free
_FAMILY = (
    ("s", "scalar", _sym("s"), "s"),
    ("q", "scalar", _sym("q"), "q"),
    ("r", "scalar", _fixed(1), "1"),
    ("t", "scalar", _fixed(1), "1"),
    ("p", "scalar", _copy_of("s"), "s"),
)


@dataclass(frozen=True)
class _EntrySpec:
    kind: str
    params: tuple
    build: object
    summary: str


_REGISTRY = {
    "ex28.algebra": _EntrySpec(
        "algebra",
        _FAMILY,
        lambda v: _two_dim_algebra(v["s"]),
        "two-dimensional algebra with x^2 = 1/(s+1)",
    ),
    "ex28.coalgebra": _EntrySpec(
        "coalgebra",
        _FAMILY,
        lambda v: _two_dim_coalgebra(v["s"]),
        "two-dimensional coalgebra paired with ex28.algebra",
    ),
    "ex28.W": _EntrySpec(
        "map",
        _FAMILY,
        lambda v: w_from_algebra(_two_dim_algebra(v["s"]), v["r"], v["s"]),
        "W block of the two-dimensional system",
    ),
    "ex28.Z": _EntrySpec(
        "map",
        _FAMILY,
        lambda v: z_from_coalgebra(_two_dim_coalgebra(v["s"]), v["p"], v["t"]),
        "Z block (the transpose of ex28.W)",
    ),
    "ex28.X56": _EntrySpec(
        "map",
        _FAMILY,
        lambda v: _x56(v["q"]),
        "X block, case 56 of the two-dimensional classification",
    ),
    "ex28.X59": _EntrySpec(
        "map",
        _FAMILY,
        lambda v: _x59(v["q"], v["s"]),
        "X block, case 59; fails the unit side condition unless s=1",
    ),
    "ex28.entwining": _EntrySpec(
        "entwining",
        _FAMILY,
        lambda v: _two_dim_entwining(v["q"], v["s"]),
        "entwining structure recovered from case 56",
    ),
    "ex28.system": _EntrySpec(
        "wxz",
        _FAMILY,
        _system_from_family,
        "the full W, X56, Z system",
    ),
    "ex27.truncated": _EntrySpec(
        "entwining",
        (("N", "int", lambda v: 3, "3"),),
        lambda v: _shift_entwining(v["N"]),
        "cyclic index-shift entwining on square-zero generators",
    ),
    "flip": _EntrySpec(
        "entwining",
        (),
        lambda v: _flip_entwining(),
        "the plain leg swap as an entwining map",
    ),
    "group_bialgebra": _EntrySpec(
        "bialgebra",
        (("n", "int", lambda v: 2, "2"),),
        lambda v: _group_bialgebra(v["n"]),
        "the cyclic group bialgebra k[Z_n]",
    ),
    "doi_koppinen": _EntrySpec(
        "entwining",
        (("n", "int", lambda v: 2, "2"),),
        lambda v: _group_doi_koppinen(v["n"]),
        "self Doi-Koppinen entwining of k[Z_n]",
    ),
    "point.coalgebra": _EntrySpec(
        "coalgebra",
        (),
        lambda v: _point_coalgebra(),
        "one group-like basis element",
    ),
}


def _resolve_params(spec: _EntrySpec, params: Mapping | None) -> dict:
    pending = dict(params or {})
    resolved: dict = {}
    for pname, ptype, default, _ in spec.params:
        if pname in pending:
            raw = pending.pop(pname)
            if ptype == "int":
                if isinstance(raw, bool) or not isinstance(raw, (int, str)):
                    raise ValueError(f"parameter {pname} must be an integer")
                try:
                    value = int(raw)
                except ValueError:
                    raise ValueError(f"parameter {pname} must be an integer") from None
            else:
                value = as_scalar(raw)
        else:
            value = default(resolved)
        resolved[pname] = value
    if pending:
        names = ", ".join(sorted(pending))
        raise ValueError(f"unknown parameter(s) for this example: {names}")
    return resolved


def _validate(kind: str, payload) -> None:
    if kind == "algebra":
        check_algebra(payload).require_ok()
    elif kind == "coalgebra":
        check_coalgebra(payload).require_ok()
    elif kind == "bialgebra":
        check_bialgebra(payload).require_ok()
    elif kind == "entwining":
        check_algebra(payload.algebra).require_ok()
        check_coalgebra(payload.coalgebra).require_ok()
        check_entwining(payload).require_ok()
    elif kind == "wxz":
        check_wxz(payload).require_ok()


def get_example(name: str, params: Mapping | None = None, **kw) -> ExampleEntry:
    """Build and validate a registered example.

    Scalar parameters accept ScalarExpr, int, Fraction or grammar
    strings; integer parameters (dimension counts) accept ints or
    digit strings.  Unknown names or out-of-range values raise
    ValueError; unknown examples raise KeyError.
    """
    if name not in _REGISTRY:
        raise KeyError(f"unknown example {name!r}; see list_examples()")
    spec = _REGISTRY[name]
    merged = dict(params or {})
    merged.update(kw)
    resolved = _resolve_params(spec, merged)
    if name == "ex27.truncated" and resolved["N"] < 1:
        raise ValueError("truncation length N must be at least 1")
    if name in ("group_bialgebra", "doi_koppinen") and resolved["n"] < 1:
        raise ValueError("group order n must be at least 1")
    payload = spec.build(resolved)
    _validate(spec.kind, payload)
    return ExampleEntry(name, spec.kind, resolved, payload)


def accepted_params(name: str) -> tuple:
    """The parameter names an example accepts, in resolution order."""
    if name not in _REGISTRY:
        raise KeyError(f"unknown example {name!r}; see list_examples()")
    return tuple(p[0] for p in _REGISTRY[name].params)


def list_examples() -> list:
    """All registered examples, in name order."""
    out = []
    for name in sorted(_REGISTRY):
        spec = _REGISTRY[name]
        signature = ", ".join(f"{p[0]}={p[3]}" for p in spec.params)
        out.append(ExampleInfo(name, spec.kind, signature, spec.summary))
    return out
