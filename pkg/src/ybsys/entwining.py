"""Entwining structures, their axioms, the equivalence with
WXZ-systems (in both directions), Doi-Koppinen data, algebra
factorisations and finite-dimensional semi-dualisation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .report import CheckFailedError, CheckReport, law
from .structures import (
    Algebra,
    Coalgebra,
    ComoduleAlgebra,
    ModuleCoalgebra,
    check_comodule_algebra,
    check_module_coalgebra,
    dualize_algebra,
    dualize_coalgebra,
)
from .tensor import LinMap, ProductSpace, SpaceMismatchError, flip, identity
from .yang_baxter import WXZSystem, check_wxz, w_from_algebra, z_from_coalgebra

__all__ = [
    "EntwiningStructure",
    "AlgebraFactorisation",
    "check_entwining",
    "wxz_from_entwining",
    "entwining_from_wxz",
    "doi_koppinen_entwining",
    "invert_entwining",
    "dualize_entwining",
    "check_factorisation",
    "wxz_from_factorisation",
]


@dataclass(frozen=True)
class EntwiningStructure:
    """An algebra and a coalgebra linked by a map C(x)A -> A(x)C."""

    algebra: Algebra
    coalgebra: Coalgebra
    entwining_map: LinMap

    def __post_init__(self):
        a, c = self.algebra.space, self.coalgebra.space
        if self.entwining_map.domain.factors != (c, a):
            raise SpaceMismatchError("entwining map must start at C(x)A")
        if self.entwining_map.codomain.factors != (a, c):
            raise SpaceMismatchError("entwining map must land in A(x)C")


@dataclass(frozen=True)
class AlgebraFactorisation:
    """Two algebras with an exchange map B(x)A -> A(x)B."""

    left: Algebra  # A
    right: Algebra  # B
    exchange: LinMap

    def __post_init__(self):
        a, b = self.left.space, self.right.space
        if self.exchange.domain.factors != (b, a):
            raise SpaceMismatchError("exchange map must start at B(x)A")
        if self.exchange.codomain.factors != (a, b):
            raise SpaceMismatchError("exchange map must land in A(x)B")


def check_entwining(ent: EntwiningStructure) -> CheckReport:
    """The four entwining axioms, as exact tensor identities."""
    a = ent.algebra.space
    c = ent.coalgebra.space
    psi = ent.entwining_map
    mu = ent.algebra.mult_map()
    iota = ent.algebra.unit_map()
    delta = ent.coalgebra.comult_map()
    eps = ent.coalgebra.counit_map()
    ida = identity(a)
    idc = identity(c)
    return CheckReport(
        f"entwining of {a} with {c}",
        [
            law(
                "product-compatibility",
                idc.tensor(mu).then(psi),
                psi.tensor(ida).then(ida.tensor(psi)).then(mu.tensor(idc)),
            ),
            law(
                "coproduct-compatibility",
                psi.then(ida.tensor(delta)),
                delta.tensor(ida).then(idc.tensor(psi)).then(psi.tensor(idc)),
            ),
            law("unit-compatibility", idc.tensor(iota).then(psi), iota.tensor(idc)),
            law("counit-compatibility", psi.then(ida.tensor(eps)), eps.tensor(ida)),
        ],
    )


def wxz_from_entwining(ent: EntwiningStructure, r, s, p, t) -> WXZSystem:
    """W, X, Z with X the entwining map read through the leg swap.

    Requires the entwining axioms; the resulting triple satisfies all
    four system equations for every choice of the parameters.
    """
    check_entwining(ent).require_ok()
    a, c = ent.algebra.space, ent.coalgebra.space
    x = flip(a, c).then(ent.entwining_map)
    return WXZSystem(
        w=w_from_algebra(ent.algebra, r, s),
        x=x,
        z=z_from_coalgebra(ent.coalgebra, p, t),
    )


def side_condition_checks(x: LinMap, algebra: Algebra, coalgebra: Coalgebra) -> list:
    """The two hypotheses on X: it fixes 1(x)c and intertwines counits."""
    a, c = algebra.space, coalgebra.space
    iota = algebra.unit_map()
    eps = coalgebra.counit_map()
    ida = identity(a)
    idc = identity(c)
    unit_leg = iota.tensor(idc)
    counit_leg = ida.tensor(eps)
    return [
        law("unit-side-condition", unit_leg.then(x), unit_leg),
        law("counit-side-condition", x.then(counit_leg), counit_leg),
    ]


def entwining_from_wxz(
    system: WXZSystem, algebra: Algebra, coalgebra: Coalgebra
) -> EntwiningStructure:
    """Recover the entwining map from a system whose X fixes 1(x)c.

    Verifies the four system equations and both side conditions and
    rejects with the full report if anything fails; on success the
    recovered map is guaranteed to satisfy the entwining axioms (this
    is re-checked, which guards against W or Z not actually being of
    the algebra/coalgebra form).
    """
    a, c = algebra.space, coalgebra.space
    if system.left_space != a or system.right_space != c:
        raise SpaceMismatchError("system spaces do not carry the given structures")
    report = check_wxz(system)
    report = CheckReport(
        "entwining recovery",
        report.checks + side_condition_checks(system.x, algebra, coalgebra),
    )
    report.require_ok()
    psi = flip(c, a).then(system.x)
    ent = EntwiningStructure(algebra, coalgebra, psi)
    check_entwining(ent).require_ok()
    return ent


def doi_koppinen_entwining(
    comodule: ComoduleAlgebra, module: ModuleCoalgebra
) -> EntwiningStructure:
    """The entwining c(x)a -> a_(0) (x) c.a_(1) of a Doi-Koppinen datum."""
    if comodule.over != module.over:
        raise SpaceMismatchError("comodule and module live over different bialgebras")
    check_comodule_algebra(comodule).require_ok()
    check_module_coalgebra(module).require_ok()
    a = comodule.algebra.space
    c = module.coalgebra.space
    b = comodule.over.space
    idc = identity(c)
    ida = identity(a)
    psi = (
        idc.tensor(comodule.coaction)  # c (x) a_(0) (x) a_(1)
        .then(flip(c, a).tensor(identity(b)))  # a_(0) (x) c (x) a_(1)
        .then(ida.tensor(module.action))  # a_(0) (x) c.a_(1)
    )
    return EntwiningStructure(comodule.algebra, module.coalgebra, psi)


def invert_entwining(ent: EntwiningStructure) -> LinMap:
    """The exact two-sided inverse A(x)C -> C(x)A, if it exists."""
    return ent.entwining_map.invert()


def dualize_entwining(ent: EntwiningStructure) -> EntwiningStructure:
    """Exchange algebra with coalgebra through the basis-dual pairing.

    The dual structure carries the transposed entwining map; applying
    this twice returns the original structure constants.
    """
    dual_alg = dualize_coalgebra(ent.coalgebra)
    dual_coa = dualize_algebra(ent.algebra)
    psi_dual = ent.entwining_map.transposed(
        ProductSpace.of(dual_coa.space, dual_alg.space),
        ProductSpace.of(dual_alg.space, dual_coa.space),
    )
    return EntwiningStructure(dual_alg, dual_coa, psi_dual)


def check_factorisation(fact: AlgebraFactorisation) -> CheckReport:
    """Axioms making A(x)B an algebra with the exchange law."""
    a, b = fact.left.space, fact.right.space
    psi = fact.exchange
    mu_a = fact.left.mult_map()
    iota_a = fact.left.unit_map()
    mu_b = fact.right.mult_map()
    iota_b = fact.right.unit_map()
    ida = identity(a)
    idb = identity(b)
    return CheckReport(
        f"factorisation of {a} with {b}",
        [
            law(
                "left-multiplicativity",
                idb.tensor(mu_a).then(psi),
                psi.tensor(ida).then(ida.tensor(psi)).then(mu_a.tensor(idb)),
            ),
            law(
                "right-multiplicativity",
                mu_b.tensor(ida).then(psi),
                idb.tensor(psi).then(psi.tensor(idb)).then(ida.tensor(mu_b)),
            ),
            law("left-unit", iota_b.tensor(ida).then(psi), ida.tensor(iota_b)),
            law("right-unit", idb.tensor(iota_a).then(psi), iota_a.tensor(idb)),
        ],
    )


def wxz_from_factorisation(fact: AlgebraFactorisation, r, s, r2, s2) -> WXZSystem:
    """A Yang-Baxter system with both W and Z of algebra type."""
    check_factorisation(fact).require_ok()
    a, b = fact.left.space, fact.right.space
    x = flip(a, b).then(fact.exchange)
    return WXZSystem(
        w=w_from_algebra(fact.left, r, s),
        x=x,
        z=w_from_algebra(fact.right, r2, s2),
    )
