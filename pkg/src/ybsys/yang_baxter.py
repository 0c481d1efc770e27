"""Yang-Baxter operators from (co)algebras, braid/QYBE checks,
Yang-Baxter commutators and WXZ-systems.

All identities are checked symbolically: a pass with variable
parameters subsumes every specialisation at once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .report import CheckReport, LawCheck, law
from .scalar import ScalarExpr, as_scalar
from .structures import Algebra, Coalgebra
from .tensor import (
    LinMap,
    ProductSpace,
    Space,
    SpaceMismatchError,
    identity,
    lift12,
    lift13,
    lift23,
)

__all__ = [
    "algebra_operator",
    "algebra_operator_inverse",
    "coalgebra_operator",
    "w_from_algebra",
    "z_from_coalgebra",
    "check_braid",
    "check_qybe",
    "yb_commutator",
    "WXZSystem",
    "check_wxz",
]


def algebra_operator(algebra: Algebra, r, s) -> LinMap:
    """The braid-form operator a(x)b -> s ab(x)1 + r 1(x)ab - s a(x)b."""
    r, s = as_scalar(r), as_scalar(s)
    n = algebra.space.dim
    unit = algebra.unit
    rows = []
    for i in range(n):
        for j in range(n):
            entries: dict = {}
            for k, c in enumerate(algebra.mult[i][j]):
                if c.is_zero:
                    continue
                for m, u in enumerate(unit):
                    if u.is_zero:
                        continue
                    _bump(entries, k * n + m, s * c * u)  # ab (x) 1
                    _bump(entries, m * n + k, r * c * u)  # 1 (x) ab
            _bump(entries, i * n + j, -s)
            rows.append({col: v for col, v in entries.items() if not v.is_zero})
    square = ProductSpace.of(algebra.space, algebra.space)
    return LinMap(square, square, rows)


def algebra_operator_inverse(algebra: Algebra, r, s) -> LinMap:
    """Closed-form inverse: a(x)b -> (1/r) ab(x)1 + (1/s) 1(x)ab - (1/s) a(x)b."""
    r, s = as_scalar(r), as_scalar(s)
    if r.is_zero or s.is_zero:
        raise ZeroDivisionError("the inverse needs r and s nonzero")
    n = algebra.space.dim
    unit = algebra.unit
    r_inv = r ** -1
    s_inv = s ** -1
    rows = []
    for i in range(n):
        for j in range(n):
            entries: dict = {}
            for k, c in enumerate(algebra.mult[i][j]):
                if c.is_zero:
                    continue
                for m, u in enumerate(unit):
                    if u.is_zero:
                        continue
                    _bump(entries, k * n + m, r_inv * c * u)
                    _bump(entries, m * n + k, s_inv * c * u)
            _bump(entries, i * n + j, -s_inv)
            rows.append({col: v for col, v in entries.items() if not v.is_zero})
    square = ProductSpace.of(algebra.space, algebra.space)
    return LinMap(square, square, rows)


def coalgebra_operator(coalgebra: Coalgebra, p, t) -> LinMap:
    """The dual operator c(x)d -> p e(c) D(d) + t e(d) D(c) - p c(x)d."""
    p, t = as_scalar(p), as_scalar(t)
    n = coalgebra.space.dim
    eps = coalgebra.counit
    rows = []
    for i in range(n):
        for j in range(n):
            entries: dict = {}
            if not eps[i].is_zero:
                _scatter_comult(entries, coalgebra, j, p * eps[i], n)
            if not eps[j].is_zero:
                _scatter_comult(entries, coalgebra, i, t * eps[j], n)
            _bump(entries, i * n + j, -p)
            rows.append({col: v for col, v in entries.items() if not v.is_zero})
    square = ProductSpace.of(coalgebra.space, coalgebra.space)
    return LinMap(square, square, rows)


def w_from_algebra(algebra: Algebra, r, s) -> LinMap:
    """The W block of a WXZ-system: a(x)b -> s ba(x)1 + r 1(x)ba - s b(x)a."""
    r, s = as_scalar(r), as_scalar(s)
    n = algebra.space.dim
    unit = algebra.unit
    rows = []
    for i in range(n):
        for j in range(n):
            entries: dict = {}
            for k, c in enumerate(algebra.mult[j][i]):  # ba, not ab
                if c.is_zero:
                    continue
                for m, u in enumerate(unit):
                    if u.is_zero:
                        continue
                    _bump(entries, k * n + m, s * c * u)
                    _bump(entries, m * n + k, r * c * u)
            _bump(entries, j * n + i, -s)
            rows.append({col: v for col, v in entries.items() if not v.is_zero})
    square = ProductSpace.of(algebra.space, algebra.space)
    return LinMap(square, square, rows)


def z_from_coalgebra(coalgebra: Coalgebra, p, t) -> LinMap:
    """The Z block: c(x)d -> t e(c) D(d) + p e(d) D(c) - p d(x)c."""
    p, t = as_scalar(p), as_scalar(t)
    n = coalgebra.space.dim
    eps = coalgebra.counit
    rows = []
    for i in range(n):
        for j in range(n):
            entries: dict = {}
            if not eps[i].is_zero:
                _scatter_comult(entries, coalgebra, j, t * eps[i], n)
            if not eps[j].is_zero:
                _scatter_comult(entries, coalgebra, i, p * eps[j], n)
            _bump(entries, j * n + i, -p)
            rows.append({col: v for col, v in entries.items() if not v.is_zero})
    square = ProductSpace.of(coalgebra.space, coalgebra.space)
    return LinMap(square, square, rows)


def _bump(entries: dict, col: int, value: ScalarExpr):
    if value.is_zero:
        return
    prior = entries.get(col)
    entries[col] = value if prior is None else prior + value


def _scatter_comult(entries: dict, coalgebra: Coalgebra, src: int, weight, n: int):
    for a in range(n):
        for b in range(n):
            c = coalgebra.comult[src][a][b]
            if not c.is_zero:
                _bump(entries, a * n + b, weight * c)


def _require_square_two_legs(m: LinMap, what: str):
    if (
        len(m.domain.factors) != 2
        or m.domain.factors != m.codomain.factors
        or m.domain.factors[0] != m.domain.factors[1]
    ):
        raise SpaceMismatchError(f"{what} needs an endomorphism of V(x)V")


def check_braid(op: LinMap) -> CheckReport:
    """R12 R23 R12 = R23 R12 R23 on the triple product."""
    _require_square_two_legs(op, "braid check")
    leg = op.domain.factors[0]
    r12 = lift12(op, leg)
    r23 = lift23(op, leg)
    return CheckReport(
        "braid equation",
        [law("braid", r12.then(r23).then(r12), r23.then(r12).then(r23))],
    )


def check_qybe(op: LinMap) -> CheckReport:
    """R12 R13 R23 = R23 R13 R12 on the triple product."""
    _require_square_two_legs(op, "QYBE check")
    leg = op.domain.factors[0]
    r12 = lift12(op, leg)
    r13 = lift13(op, leg)
    r23 = lift23(op, leg)
    return CheckReport(
        "quantum Yang-Baxter equation",
        [law("qybe", r23.then(r13).then(r12), r12.then(r13).then(r23))],
    )


def yb_commutator(r: LinMap, s: LinMap, t: LinMap) -> LinMap:
    """[R, S, T] = R12 S13 T23 - T23 S13 R12 on V(x)V'(x)V''.

    R acts on legs 1,2; S on legs 1,3; T on legs 2,3.  The result is
    the difference map; the commutator vanishes exactly when it is the
    zero map.
    """
    for m, what in ((r, "first"), (s, "second"), (t, "third")):
        if len(m.domain.factors) != 2 or m.domain.factors != m.codomain.factors:
            raise SpaceMismatchError(f"{what} commutator argument must fix a two-leg space")
    v, v1 = r.domain.factors
    v2 = s.domain.factors[1]
    if s.domain.factors[0] != v or t.domain.factors != (v1, v2):
        raise SpaceMismatchError("commutator legs do not share the required spaces")
    r12 = lift12(r, v2)
    s13 = lift13(s, v1)
    t23 = lift23(t, v)
    return t23.then(s13).then(r12) - r12.then(s13).then(t23)


@dataclass(frozen=True)
class WXZSystem:
    """Maps W on V(x)V, X on V(x)V', Z on V'(x)V'."""

    w: LinMap
    x: LinMap
    z: LinMap

    def __post_init__(self):
        if len(self.x.domain.factors) != 2 or self.x.domain.factors != self.x.codomain.factors:
            raise SpaceMismatchError("X must fix a two-leg space V(x)V'")
        v, v1 = self.x.domain.factors
        _require_square_two_legs(self.w, "W")
        _require_square_two_legs(self.z, "Z")
        if self.w.domain.factors[0] != v:
            raise SpaceMismatchError("W must act on V(x)V for X on V(x)V'")
        if self.z.domain.factors[0] != v1:
            raise SpaceMismatchError("Z must act on V'(x)V' for X on V(x)V'")

    @property
    def left_space(self) -> Space:
        return self.x.domain.factors[0]

    @property
    def right_space(self) -> Space:
        return self.x.domain.factors[1]


def check_wxz(system: WXZSystem) -> CheckReport:
    """The four commutator equations defining a Yang-Baxter system."""
    w, x, z = system.w, system.x, system.z
    return CheckReport(
        "WXZ system",
        [
            LawCheck("[W,W,W]", yb_commutator(w, w, w)),
            LawCheck("[Z,Z,Z]", yb_commutator(z, z, z)),
            LawCheck("[W,X,X]", yb_commutator(w, x, x)),
            LawCheck("[X,X,Z]", yb_commutator(x, x, z)),
        ],
    )
