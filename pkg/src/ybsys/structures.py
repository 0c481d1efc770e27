"""Algebras, coalgebras, bialgebras and their (co)module structures,
all given by structure constants over labelled bases.

Multiplication is a tensor mult[i][j][k] with e_i e_j = sum_k
mult[i][j][k] e_k; comultiplication is comult[i][j][k] with
D(e_i) = sum_{j,k} comult[i][j][k] e_j (x) e_k.  Axioms are verified as
exact identities of linear maps, so every failure carries a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .report import CheckReport, law
from .scalar import ScalarExpr, ZERO, as_scalar
from .tensor import (
    LinMap,
    ProductSpace,
    SCALAR_LINE,
    Space,
    SpaceMismatchError,
    identity,
    flip,
)

__all__ = [
    "Algebra",
    "Coalgebra",
    "Bialgebra",
    "ComoduleAlgebra",
    "ModuleCoalgebra",
    "check_algebra",
    "check_coalgebra",
    "check_bialgebra",
    "check_comodule_algebra",
    "check_module_coalgebra",
    "dualize_algebra",
    "dualize_coalgebra",
    "dual_space",
]


def _cube(space: Space, entries, what: str) -> tuple:
    n = space.dim
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    if isinstance(entries, Mapping):
        for (i, j, k), value in entries.items():
            table[i][j][k] = as_scalar(value)
    else:
        rows = list(entries)
        if len(rows) != n:
            raise ValueError(f"{what} must be {n}x{n}x{n}")
        for i, plane in enumerate(rows):
            for j, line in enumerate(plane):
                for k, value in enumerate(line):
                    table[i][j][k] = as_scalar(value)
    return tuple(tuple(tuple(line) for line in plane) for plane in table)


def _vector(space: Space, entries, what: str) -> tuple:
    n = space.dim
    if isinstance(entries, Mapping):
        vec = [ZERO] * n
        for k, value in entries.items():
            vec[k] = as_scalar(value)
        return tuple(vec)
    vec = [as_scalar(v) for v in entries]
    if len(vec) != n:
        raise ValueError(f"{what} must have {n} coordinates")
    return tuple(vec)


@dataclass(frozen=True)
class Algebra:
    """A unital associative algebra as structure constants."""

    space: Space
    mult: tuple
    unit: tuple

    @classmethod
    def build(cls, space: Space, mult, unit) -> "Algebra":
        return cls(space, _cube(space, mult, "mult"), _vector(space, unit, "unit"))

    def mult_map(self) -> LinMap:
        n = self.space.dim
        rows = []
        for i in range(n):
            for j in range(n):
                rows.append(
                    {k: v for k, v in enumerate(self.mult[i][j]) if not v.is_zero}
                )
        return LinMap(ProductSpace.of(self.space, self.space), self.space, rows)

    def unit_map(self) -> LinMap:
        return LinMap(
            SCALAR_LINE,
            self.space,
            [{k: v for k, v in enumerate(self.unit) if not v.is_zero}],
        )


@dataclass(frozen=True)
class Coalgebra:
    """A coassociative counital coalgebra as structure constants."""

    space: Space
    comult: tuple
    counit: tuple

    @classmethod
    def build(cls, space: Space, comult, counit) -> "Coalgebra":
        return cls(
            space, _cube(space, comult, "comult"), _vector(space, counit, "counit")
        )

    def comult_map(self) -> LinMap:
        n = self.space.dim
        rows = []
        for i in range(n):
            entries = {}
            for j in range(n):
                for k in range(n):
                    v = self.comult[i][j][k]
                    if not v.is_zero:
                        entries[j * n + k] = v
            rows.append(entries)
        return LinMap(self.space, ProductSpace.of(self.space, self.space), rows)

    def counit_map(self) -> LinMap:
        return LinMap(
            self.space,
            SCALAR_LINE,
            [({0: v} if not v.is_zero else {}) for v in self.counit],
        )


@dataclass(frozen=True)
class Bialgebra:
    """Compatible algebra and coalgebra structures on one space."""

    algebra: Algebra
    coalgebra: Coalgebra

    def __post_init__(self):
        if self.algebra.space != self.coalgebra.space:
            raise SpaceMismatchError("bialgebra halves live on different spaces")

    @property
    def space(self) -> Space:
        return self.algebra.space


@dataclass(frozen=True)
class ComoduleAlgebra:
    """An algebra with a compatible right coaction of a bialgebra."""

    algebra: Algebra
    over: Bialgebra
    coaction: LinMap  # A -> A (x) B

    def __post_init__(self):
        expected = (self.algebra.space,)
        target = (self.algebra.space, self.over.space)
        if (
            self.coaction.domain.factors != expected
            or self.coaction.codomain.factors != target
        ):
            raise SpaceMismatchError("coaction must map A to A(x)B")


@dataclass(frozen=True)
class ModuleCoalgebra:
    """A coalgebra with a compatible right action of a bialgebra."""

    coalgebra: Coalgebra
    over: Bialgebra
    action: LinMap  # C (x) B -> C

    def __post_init__(self):
        expected = (self.coalgebra.space, self.over.space)
        if (
            self.action.domain.factors != expected
            or self.action.codomain.factors != (self.coalgebra.space,)
        ):
            raise SpaceMismatchError("action must map C(x)B to C")


def check_algebra(algebra: Algebra) -> CheckReport:
    a = algebra.space
    mu = algebra.mult_map()
    iota = algebra.unit_map()
    ida = identity(a)
    return CheckReport(
        f"algebra on {a}",
        [
            law(
                "associativity",
                mu.tensor(ida).then(mu),
                ida.tensor(mu).then(mu),
            ),
            law("left-unit", iota.tensor(ida).then(mu), ida),
            law("right-unit", ida.tensor(iota).then(mu), ida),
        ],
    )


def check_coalgebra(coalgebra: Coalgebra) -> CheckReport:
    c = coalgebra.space
    delta = coalgebra.comult_map()
    eps = coalgebra.counit_map()
    idc = identity(c)
    return CheckReport(
        f"coalgebra on {c}",
        [
            law(
                "coassociativity",
                delta.then(delta.tensor(idc)),
                delta.then(idc.tensor(delta)),
            ),
            law("left-counit", delta.then(eps.tensor(idc)), idc),
            law("right-counit", delta.then(idc.tensor(eps)), idc),
        ],
    )


def check_bialgebra(b: Bialgebra) -> CheckReport:
    space = b.space
    mu = b.algebra.mult_map()
    iota = b.algebra.unit_map()
    delta = b.coalgebra.comult_map()
    eps = b.coalgebra.counit_map()
    idb = identity(space)
    mid_flip = idb.tensor(flip(space, space)).tensor(idb)
    compat = [
        law(
            "comult-multiplicative",
            mu.then(delta),
            delta.tensor(delta).then(mid_flip).then(mu.tensor(mu)),
        ),
        law("comult-unit", iota.then(delta), iota.tensor(iota)),
        law("counit-multiplicative", mu.then(eps), eps.tensor(eps)),
        law("counit-unit", iota.then(eps), identity(SCALAR_LINE)),
    ]
    report = CheckReport(f"bialgebra on {space}", compat)
    report = report.merged(check_algebra(b.algebra), prefix="algebra:")
    report = report.merged(check_coalgebra(b.coalgebra), prefix="coalgebra:")
    return report


def check_comodule_algebra(ca: ComoduleAlgebra) -> CheckReport:
    a = ca.algebra.space
    b = ca.over.space
    rho = ca.coaction
    mu = ca.algebra.mult_map()
    iota = ca.algebra.unit_map()
    delta_b = ca.over.coalgebra.comult_map()
    eps_b = ca.over.coalgebra.counit_map()
    iota_b = ca.over.algebra.unit_map()
    mu_b = ca.over.algebra.mult_map()
    ida = identity(a)
    idb = identity(b)
    mid_flip = ida.tensor(flip(b, a)).tensor(idb)
    return CheckReport(
        f"comodule algebra on {a} over {b}",
        [
            law(
                "coaction-coassociativity",
                rho.then(rho.tensor(idb)),
                rho.then(ida.tensor(delta_b)),
            ),
            law("coaction-counit", rho.then(ida.tensor(eps_b)), ida),
            law(
                "coaction-multiplicative",
                mu.then(rho),
                rho.tensor(rho).then(mid_flip).then(mu.tensor(mu_b)),
            ),
            law("coaction-unit", iota.then(rho), iota.tensor(iota_b)),
        ],
    )


def check_module_coalgebra(mc: ModuleCoalgebra) -> CheckReport:
    c = mc.coalgebra.space
    b = mc.over.space
    act = mc.action
    delta = mc.coalgebra.comult_map()
    eps = mc.coalgebra.counit_map()
    mu_b = mc.over.algebra.mult_map()
    iota_b = mc.over.algebra.unit_map()
    delta_b = mc.over.coalgebra.comult_map()
    eps_b = mc.over.coalgebra.counit_map()
    idc = identity(c)
    idb = identity(b)
    mid_flip = idc.tensor(flip(c, b)).tensor(idb)
    return CheckReport(
        f"module coalgebra on {c} over {b}",
        [
            law(
                "action-associativity",
                act.tensor(idb).then(act),
                idc.tensor(mu_b).then(act),
            ),
            law("action-unit", idc.tensor(iota_b).then(act), idc),
            law(
                "comult-equivariance",
                act.then(delta),
                delta.tensor(delta_b).then(mid_flip).then(act.tensor(act)),
            ),
            law("counit-equivariance", act.then(eps), eps.tensor(eps_b)),
        ],
    )


def dual_space(space: Space) -> Space:
    """The linear dual, with the basis dual to the given one.

    The label toggles a trailing ``*`` so that taking the dual twice
    returns to the original space.
    """
    label = space.label[:-1] if space.label.endswith("*") else space.label + "*"
    return Space(label, space.basis)


def dualize_algebra(algebra: Algebra) -> Coalgebra:
    """Transpose structure constants through the basis-dual pairing."""
    n = algebra.space.dim
    # dual comult[k][i][j] = mult[i][j][k]
    comult = tuple(
        tuple(tuple(algebra.mult[i][j][k] for j in range(n)) for i in range(n))
        for k in range(n)
    )
    return Coalgebra(dual_space(algebra.space), comult, algebra.unit)


def dualize_coalgebra(coalgebra: Coalgebra) -> Algebra:
    """Inverse transposition: dual mult[i][j][k] = comult[k][i][j]."""
    n = coalgebra.space.dim
    mult = tuple(
        tuple(tuple(coalgebra.comult[k][i][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return Algebra(dual_space(coalgebra.space), mult, coalgebra.counit)
