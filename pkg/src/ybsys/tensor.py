"""Labelled finite-dimensional spaces and exact linear maps between
tensor products.

Matrices follow the row-per-input convention: row i of a map holds the
coordinates of the image of the i-th domain basis vector.  Rows are
stored sparsely (dict column -> nonzero ScalarExpr), which keeps the
64x64 symbolic computations on triple tensor products cheap.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .scalar import ONE, ZERO, ScalarExpr, as_scalar

__all__ = [
    "Space",
    "ProductSpace",
    "LinMap",
    "SpaceMismatchError",
    "SingularMapError",
    "as_product",
    "identity",
    "flip",
    "lift12",
    "lift23",
    "lift13",
    "direct_sum",
]


class SpaceMismatchError(ValueError):
    """Domains or codomains do not line up for the requested operation."""


class SingularMapError(ValueError):
    """The map has no inverse over the rational-function field."""


@dataclass(frozen=True)
class Space:
    """A vector space with an ordered, labelled basis."""

    label: str
    basis: tuple

    def __init__(self, label: str, basis: Sequence[str]):
        basis = tuple(basis)
        if not basis:
            raise ValueError("a space needs at least one basis element")
        if len(set(basis)) != len(basis):
            raise ValueError(f"duplicate basis labels in space {label!r}")
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class ProductSpace:
    """An ordered tensor product of spaces.

    The induced basis is the lexicographic list of label tuples.  The
    empty product is the scalar line (dimension one, basis ()); it is
    what unit and counit maps use as their trivial leg.
    """

    factors: tuple

    def __init__(self, factors: Sequence[Space]):
        factors = tuple(factors)
        if not all(isinstance(f, Space) for f in factors):
            raise TypeError("ProductSpace factors must be Spaces")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def of(cls, *parts) -> "ProductSpace":
        factors = []
        for part in parts:
            if isinstance(part, Space):
                factors.append(part)
            elif isinstance(part, ProductSpace):
                factors.extend(part.factors)
            else:
                raise TypeError(f"not a space: {part!r}")
        return cls(factors)

    @property
    def dim(self) -> int:
        return math.prod(f.dim for f in self.factors)

    @property
    def dims(self) -> tuple:
        return tuple(f.dim for f in self.factors)

    def basis_tuples(self) -> list:
        return list(itertools.product(*(f.basis for f in self.factors)))

    def label_at(self, index: int) -> tuple:
        labels = []
        for dim, space in zip(self._strides(), self.factors):
            labels.append(space.basis[index // dim])
            index %= dim
        return tuple(labels)

    def _strides(self) -> tuple:
        strides = []
        acc = self.dim
        for f in self.factors:
            acc //= f.dim
            strides.append(acc)
        return tuple(strides)

    def __str__(self) -> str:
        return "(x)".join(f.label for f in self.factors) if self.factors else "k"


SpaceLike = Union[Space, ProductSpace]


def as_product(space: SpaceLike) -> ProductSpace:
    if isinstance(space, ProductSpace):
        return space
    if isinstance(space, Space):
        return ProductSpace((space,))
    raise TypeError(f"not a space: {space!r}")


SCALAR_LINE = ProductSpace(())


class LinMap:
    """A linear map between tensor products, row-per-input."""

    __slots__ = ("domain", "codomain", "rows")

    def __init__(self, domain: SpaceLike, codomain: SpaceLike, rows):
        domain = as_product(domain)
        codomain = as_product(codomain)
        nrows, ncols = domain.dim, codomain.dim
        rows = list(rows)
        if len(rows) != nrows:
            raise SpaceMismatchError(
                f"expected {nrows} rows for domain {domain}, got {len(rows)}"
            )
        clean = []
        for row in rows:
            entries = {}
            for col, value in row.items():
                if not 0 <= col < ncols:
                    raise SpaceMismatchError(f"column {col} out of range for {codomain}")
                if not value.is_zero:
                    entries[col] = value
            clean.append(entries)
        self.domain = domain
        self.codomain = codomain
        self.rows = tuple(clean)

    @classmethod
    def from_dense(cls, domain: SpaceLike, codomain: SpaceLike, rows) -> "LinMap":
        sparse = [
            {j: as_scalar(v) for j, v in enumerate(row)}
            for row in rows
        ]
        return cls(domain, codomain, sparse)

    @classmethod
    def from_entries(cls, domain: SpaceLike, codomain: SpaceLike, entries) -> "LinMap":
        domain = as_product(domain)
        rows = [dict() for _ in range(domain.dim)]
        for i, j, value in entries:
            value = as_scalar(value)
            if not value.is_zero:
                rows[i][j] = rows[i].get(j, ZERO) + value
        return cls(domain, codomain, rows)

    @classmethod
    def zero(cls, domain: SpaceLike, codomain: SpaceLike) -> "LinMap":
        return cls(domain, codomain, [{} for _ in range(as_product(domain).dim)])

    def entry(self, i: int, j: int) -> ScalarExpr:
        return self.rows[i].get(j, ZERO)

    def dense(self) -> list:
        ncols = self.codomain.dim
        return [[row.get(j, ZERO) for j in range(ncols)] for row in self.rows]

    def nonzero_entries(self):
        for i, row in enumerate(self.rows):
            for j in sorted(row):
                yield i, j, row[j]

    def is_zero(self) -> bool:
        return all(not row for row in self.rows)

    def then(self, other: "LinMap") -> "LinMap":
        """The composite 'self first, then other'."""
        if self.codomain.factors != other.domain.factors:
            raise SpaceMismatchError(
                f"cannot compose: {self.codomain} does not match {other.domain}"
            )
        rows = []
        for row in self.rows:
            acc: dict = {}
            for k, a in row.items():
                for j, b in other.rows[k].items():
                    prior = acc.get(j)
                    acc[j] = a * b if prior is None else prior + a * b
            rows.append({j: v for j, v in acc.items() if not v.is_zero})
        out = LinMap.__new__(LinMap)
        out.domain = self.domain
        out.codomain = other.codomain
        out.rows = tuple(rows)
        return out

    def tensor(self, other: "LinMap") -> "LinMap":
        domain = ProductSpace.of(self.domain, other.domain)
        codomain = ProductSpace.of(self.codomain, other.codomain)
        ncols_other = other.codomain.dim
        rows = []
        for row_a in self.rows:
            for row_b in other.rows:
                entries = {}
                for j1, a in row_a.items():
                    base = j1 * ncols_other
                    for j2, b in row_b.items():
                        entries[base + j2] = a * b
                rows.append(entries)
        out = LinMap.__new__(LinMap)
        out.domain = domain
        out.codomain = codomain
        out.rows = tuple(rows)
        return out

    def __add__(self, other: "LinMap") -> "LinMap":
        self._require_same_shape(other)
        rows = []
        for ra, rb in zip(self.rows, other.rows):
            acc = dict(ra)
            for j, v in rb.items():
                total = acc.get(j, ZERO) + v
                if total.is_zero:
                    acc.pop(j, None)
                else:
                    acc[j] = total
            rows.append(acc)
        out = LinMap.__new__(LinMap)
        out.domain = self.domain
        out.codomain = self.codomain
        out.rows = tuple(rows)
        return out

    def __neg__(self) -> "LinMap":
        return self.scaled(-ONE)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return self + (-other)

    def scaled(self, factor) -> "LinMap":
        factor = as_scalar(factor)
        if factor.is_zero:
            return LinMap.zero(self.domain, self.codomain)
        rows = [{j: factor * v for j, v in row.items()} for row in self.rows]
        out = LinMap.__new__(LinMap)
        out.domain = self.domain
        out.codomain = self.codomain
        out.rows = tuple(rows)
        return out

    def __rmul__(self, factor):
        return self.scaled(factor)

    __mul__ = scaled

    def apply(self, coords: Sequence) -> tuple:
        """Row-vector action: coordinates of the image of sum_i coords[i] e_i."""
        coords = [as_scalar(c) for c in coords]
        if len(coords) != self.domain.dim:
            raise SpaceMismatchError("coordinate vector has the wrong length")
        acc = [ZERO] * self.codomain.dim
        for i, c in enumerate(coords):
            if c.is_zero:
                continue
            for j, v in self.rows[i].items():
                acc[j] = acc[j] + c * v
        return tuple(acc)

    def transposed(self, domain: SpaceLike, codomain: SpaceLike) -> "LinMap":
        domain = as_product(domain)
        codomain = as_product(codomain)
        if domain.dim != self.codomain.dim or codomain.dim != self.domain.dim:
            raise SpaceMismatchError("transpose spaces have the wrong dimensions")
        rows = [dict() for _ in range(domain.dim)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                rows[j][i] = v
        return LinMap(domain, codomain, rows)

    def invert(self) -> "LinMap":
        """Exact inverse by Gauss-Jordan elimination, first nonzero pivot."""
        n = self.domain.dim
        if self.codomain.dim != n:
            raise SpaceMismatchError("only square maps can be inverted")
        work = self.dense()
        inv = [
            [ONE if i == j else ZERO for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            pivot = next(
                (r for r in range(col, n) if not work[r][col].is_zero), None
            )
            if pivot is None:
                raise SingularMapError("map is singular over the scalar field")
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                inv[col], inv[pivot] = inv[pivot], inv[col]
            scale = ONE / work[col][col]
            if not scale.is_one:
                work[col] = [scale * v for v in work[col]]
                inv[col] = [scale * v for v in inv[col]]
            for r in range(n):
                if r == col:
                    continue
                factor = work[r][col]
                if factor.is_zero:
                    continue
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
                inv[r] = [a - factor * b for a, b in zip(inv[r], inv[col])]
        rows = [
            {j: v for j, v in enumerate(row) if not v.is_zero}
            for row in inv
        ]
        return LinMap(self.codomain, self.domain, rows)

    def _require_same_shape(self, other: "LinMap"):
        if (
            self.domain.factors != other.domain.factors
            or self.codomain.factors != other.codomain.factors
        ):
            raise SpaceMismatchError("maps have different domains or codomains")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.domain.factors == other.domain.factors
            and self.codomain.factors == other.codomain.factors
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(
            (
                self.domain.factors,
                self.codomain.factors,
                tuple(frozenset(r.items()) for r in self.rows),
            )
        )

    def to_text(self) -> str:
        """Dense matrix rendering, one row per line, entries space-separated."""
        return "\n".join(
            " ".join(str(v) for v in row) for row in self.dense()
        )

    def __str__(self) -> str:
        return f"LinMap {self.domain} -> {self.codomain}"

    __repr__ = __str__


def identity(space: SpaceLike) -> LinMap:
    space = as_product(space)
    rows = [{i: ONE} for i in range(space.dim)]
    return LinMap(space, space, rows)


def flip(left: Space, right: Space) -> LinMap:
    """The exchange v (x) w -> w (x) v."""
    rows = []
    for i in range(left.dim):
        for j in range(right.dim):
            rows.append({j * left.dim + i: ONE})
    return LinMap(ProductSpace.of(left, right), ProductSpace.of(right, left), rows)


def _require_two_legs(m: LinMap):
    if len(m.domain.factors) != 2 or len(m.codomain.factors) != 2:
        raise SpaceMismatchError("expected a map between two-factor products")


def lift12(m: LinMap, third: Space) -> LinMap:
    """Act with m on legs 1,2 of a three-fold product, identity on leg 3."""
    _require_two_legs(m)
    return m.tensor(identity(third))


def lift23(m: LinMap, first: Space) -> LinMap:
    """Act with m on legs 2,3, identity on leg 1."""
    _require_two_legs(m)
    return identity(first).tensor(m)


def lift13(m: LinMap, middle: Space) -> LinMap:
    """Act with m on legs 1,3, identity on the middle leg.

    Realised by conjugating the legs-1,2 action with the flip of the
    last two legs, which also covers three distinct factor spaces.
    """
    _require_two_legs(m)
    first_in, last_in = m.domain.factors
    first_out, last_out = m.codomain.factors
    pull = identity(first_in).tensor(flip(middle, last_in))
    push = identity(first_out).tensor(flip(last_out, middle))
    return pull.then(m.tensor(identity(middle))).then(push)


def direct_sum(left: Space, right: Space) -> Space:
    """The space whose basis is left's basis followed by right's."""
    if set(left.basis) & set(right.basis):
        basis = [f"{left.label}.{b}" for b in left.basis]
        basis += [f"{right.label}.{b}" for b in right.basis]
    else:
        basis = list(left.basis) + list(right.basis)
    return Space(f"{left.label}+{right.label}", basis)
