"""Gluing a WXZ-system into a single Yang-Baxter operator on the direct
sum, and the Hecke-type operator attached to a bijective entwining map.
"""

from __future__ import annotations

from dataclasses import dataclass

from .entwining import EntwiningStructure, check_entwining
from .report import CheckReport, LawCheck
from .scalar import as_scalar
from .structures import Algebra, Coalgebra
from .tensor import LinMap, ProductSpace, Space, direct_sum, flip, identity
from .yang_baxter import (
    WXZSystem,
    algebra_operator,
    check_braid,
    check_wxz,
    coalgebra_operator,
    w_from_algebra,
    z_from_coalgebra,
)

__all__ = [
    "GluedOperator",
    "glue",
    "hecke_glue",
    "check_hecke",
    "check_algebra_quadratic",
    "check_coalgebra_quadratic",
]


@dataclass(frozen=True)
class GluedOperator:
    """A Yang-Baxter operator on (V + V')(x)(V + V') built from blocks.

    The sum basis lists V's basis first, then V''s; ``restrict`` reads
    back any of the four row/column sectors as a map between the
    original tensor products.
    """

    space: Space
    left: Space
    right: Space
    operator: LinMap

    def _offsets(self, which: str) -> tuple:
        side = {"l": (self.left, 0), "r": (self.right, self.left.dim)}
        (sa, oa), (sb, ob) = side[which[0]], side[which[1]]
        return sa, sb, oa, ob

    def restrict(self, rows: str, cols: str) -> LinMap:
        """The block sending the ``rows`` sector into the ``cols`` sector.

        Sectors are two-letter strings over {'l', 'r'}, e.g. ``'lr'``
        for V(x)V'.  Entries of the operator outside the requested
        column sector are ignored; ``sector_is_exact`` tells whether
        anything was dropped.
        """
        ra, rb, roa, rob = self._offsets(rows)
        ca, cb, coa, cob = self._offsets(cols)
        total = self.space.dim
        out_rows = []
        for i in range(ra.dim):
            for j in range(rb.dim):
                row = self.operator.rows[(i + roa) * total + (j + rob)]
                entries = {}
                for col, value in row.items():
                    col_a, col_b = divmod(col, total)
                    if (
                        coa <= col_a < coa + ca.dim
                        and cob <= col_b < cob + cb.dim
                    ):
                        entries[(col_a - coa) * cb.dim + (col_b - cob)] = value
                out_rows.append(entries)
        return LinMap(ProductSpace.of(ra, rb), ProductSpace.of(ca, cb), out_rows)

    def sector_is_exact(self, rows: str, cols: str) -> bool:
        """True when the ``rows`` sector maps entirely into ``cols``."""
        ra, rb, roa, rob = self._offsets(rows)
        ca, cb, coa, cob = self._offsets(cols)
        total = self.space.dim
        for i in range(ra.dim):
            for j in range(rb.dim):
                row = self.operator.rows[(i + roa) * total + (j + rob)]
                for col in row:
                    col_a, col_b = divmod(col, total)
                    if not (
                        coa <= col_a < coa + ca.dim
                        and cob <= col_b < cob + cb.dim
                    ):
                        return False
        return True


def _assemble(left: Space, right: Space, blocks) -> GluedOperator:
    """Blocks: dict sector-pair -> LinMap contribution, summed into place."""
    total_space = direct_sum(left, right)
    total = total_space.dim
    offsets = {"l": 0, "r": left.dim}
    dims = {"l": left.dim, "r": right.dim}
    rows = [dict() for _ in range(total * total)]
    for (row_sector, col_sector), block in blocks:
        roa, rob = offsets[row_sector[0]], offsets[row_sector[1]]
        coa, cob = offsets[col_sector[0]], offsets[col_sector[1]]
        cb_dim = dims[col_sector[1]]
        for i in range(dims[row_sector[0]]):
            for j in range(dims[row_sector[1]]):
                target = rows[(i + roa) * total + (j + rob)]
                for col, value in block.rows[i * dims[row_sector[1]] + j].items():
                    col_a, col_b = divmod(col, cb_dim)
                    key = (col_a + coa) * total + (col_b + cob)
                    prior = target.get(key)
                    target[key] = value if prior is None else prior + value
    square = ProductSpace.of(total_space, total_space)
    operator = LinMap(square, square, rows)
    return GluedOperator(total_space, left, right, operator)


def glue(system: WXZSystem, validate: bool = True) -> GluedOperator:
    """The Yang-Baxter operator on V + V' glued from a WXZ-system.

    Diagonal sectors act by W and Z composed with the leg swap; the
    mixed sectors act by U = X o swap and its inverse.  Needs X
    invertible; with ``validate`` the four system equations are
    required first.
    """
    if validate:
        check_wxz(system).require_ok()
    v, v1 = system.left_space, system.right_space
    r_block = flip(v, v).then(system.w)
    r2_block = flip(v1, v1).then(system.z)
    u = flip(v1, v).then(system.x)
    u_inv = u.invert()
    return _assemble(
        v,
        v1,
        [
            (("ll", "ll"), r_block),
            (("rr", "rr"), r2_block),
            (("rl", "lr"), u),
            (("lr", "rl"), u_inv),
        ],
    )


def hecke_glue(ent: EntwiningStructure, hecke_param) -> GluedOperator:
    """The Hecke-type Yang-Baxter operator on A + C.

    Uses the parameter choice r = t = hecke_param and s = p = its
    inverse; the A(x)C sector acts by the inverse entwining map, the
    C(x)A sector by the entwining map plus the scalar correction
    (hecke_param - 1/hecke_param) times the identity.
    """
    h = as_scalar(hecke_param)
    if h.is_zero:
        raise ZeroDivisionError("the Hecke parameter must be nonzero")
    check_entwining(ent).require_ok()
    a, c = ent.algebra.space, ent.coalgebra.space
    h_inv = h ** -1
    psi = ent.entwining_map
    psi_inv = psi.invert()
    r_block = flip(a, a).then(w_from_algebra(ent.algebra, h, h_inv))
    r2_block = flip(c, c).then(z_from_coalgebra(ent.coalgebra, h_inv, h))
    correction = (h - h_inv) * identity(ProductSpace.of(c, a))
    return _assemble(
        a,
        c,
        [
            (("ll", "ll"), r_block),
            (("rr", "rr"), r2_block),
            (("lr", "rl"), psi_inv),
            (("rl", "lr"), psi),
            (("rl", "rl"), correction),
        ],
    )


def check_hecke(op: LinMap, hecke_param) -> CheckReport:
    """Braid equation plus the quadratic (R + h^-1 I)(R - h I) = 0."""
    h = as_scalar(hecke_param)
    if h.is_zero:
        raise ZeroDivisionError("the Hecke parameter must be nonzero")
    if op.domain.factors != op.codomain.factors:
        raise ValueError("Hecke check needs an endomorphism")
    ident = identity(op.domain)
    quad = (op + (h ** -1) * ident).then(op - h * ident)
    braid = check_braid(op)
    return CheckReport(
        "Hecke operator",
        braid.checks + [LawCheck("hecke-quadratic", quad)],
    )


def check_algebra_quadratic(algebra: Algebra, r, s) -> CheckReport:
    """(R + s I)(R - r I) annihilates the algebra operator, identically."""
    r, s = as_scalar(r), as_scalar(s)
    op = algebra_operator(algebra, r, s)
    ident = identity(op.domain)
    quad = (op + s * ident).then(op - r * ident)
    return CheckReport(
        f"quadratic relation for the algebra operator on {algebra.space}",
        [LawCheck("(R+sI)(R-rI)", quad)],
    )


def check_coalgebra_quadratic(coalgebra: Coalgebra, p, t) -> CheckReport:
    """(R + p I)(R - t I) annihilates the coalgebra operator, identically."""
    p, t = as_scalar(p), as_scalar(t)
    op = coalgebra_operator(coalgebra, p, t)
    ident = identity(op.domain)
    quad = (op + p * ident).then(op - t * ident)
    return CheckReport(
        f"quadratic relation for the coalgebra operator on {coalgebra.space}",
        [LawCheck("(R+pI)(R-tI)", quad)],
    )
