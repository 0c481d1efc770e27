"""Exact scalars: rational functions over Q in the parameters p, q, r, s, t.

Polynomials are sparse dicts from exponent vectors to Fraction
coefficients.  A ScalarExpr is a quotient of two polynomials kept in a
canonical form (numerator and denominator coprime, denominator monic
under the graded-lexicographic term order), so equality of values is
plain equality of representations.  Everything is immutable; operations
return fresh values and are safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "VARIABLES",
    "MultiPoly",
    "ScalarExpr",
    "ParseError",
    "ZERO",
    "ONE",
    "variable",
    "const",
    "parse",
    "as_scalar",
    "poly_gcd",
]

VARIABLES = ("p", "q", "r", "s", "t")

_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)
_ZERO_EXP = (0,) * _NVARS
_F0 = Fraction(0)
_F1 = Fraction(1)


def _grlex(exps):
    return (sum(exps), exps)


def _print_key(exps):
    # ascending degree, then lexicographically by variable (p first);
    # chosen so values print the way the source matrices are written
    # ("1-s", "q", "-s").
    return (sum(exps), tuple(-e for e in exps))


class MultiPoly:
    """Polynomial in the fixed variable set, as sparse canonical terms.

    ``terms`` maps full exponent vectors (one slot per variable, in
    ``VARIABLES`` order) to nonzero Fraction coefficients.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Union[int, Fraction]] | None = None):
        cleaned = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    exps = tuple(exps)
                    if len(exps) != _NVARS or any(e < 0 for e in exps):
                        raise ValueError(f"bad exponent vector {exps!r}")
                    cleaned[exps] = coeff
        self.terms = cleaned
        self._hash = None

    @classmethod
    def const(cls, value) -> "MultiPoly":
        value = Fraction(value)
        return cls({_ZERO_EXP: value}) if value else cls()

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r} (expected one of {', '.join(VARIABLES)})")
        exps = [0] * _NVARS
        exps[_VAR_INDEX[name]] = 1
        return cls({tuple(exps): _F1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    @property
    def is_one(self) -> bool:
        return self.terms.get(_ZERO_EXP) == 1 and len(self.terms) == 1

    def const_value(self) -> Fraction:
        if not self.is_const:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get(_ZERO_EXP, _F0)

    def variables(self) -> set:
        used = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(VARIABLES[i])
        return used

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def lead_exps(self) -> tuple:
        return max(self.terms, key=_grlex)

    def lead_coeff(self) -> Fraction:
        return self.terms[self.lead_exps()]

    def scale(self, factor) -> "MultiPoly":
        factor = Fraction(factor)
        if not factor:
            return MultiPoly()
        return MultiPoly({e: c * factor for e, c in self.terms.items()})

    def monic(self) -> "MultiPoly":
        if self.is_zero:
            return self
        lc = self.lead_coeff()
        return self if lc == 1 else self.scale(1 / lc)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e, _F0) + c
            if acc:
                terms[e] = acc
            else:
                terms.pop(e, None)
        out = MultiPoly.__new__(MultiPoly)
        out.terms = terms
        out._hash = None
        return out

    def __neg__(self) -> "MultiPoly":
        return self.scale(-1)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        if self.is_zero or other.is_zero:
            return MultiPoly()
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(e, _F0) + c1 * c2
                if acc:
                    terms[e] = acc
                else:
                    del terms[e]
        out = MultiPoly.__new__(MultiPoly)
        out.terms = terms
        out._hash = None
        return out

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative exponent on a polynomial")
        acc = MultiPoly.const(1)
        for _ in range(n):
            acc = acc * self
        return acc

    def evaluate(self, values: Mapping[int, Fraction]) -> Fraction:
        total = _F0
        for exps, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(exps):
                if e:
                    term *= values[i] ** e
            total += term
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_print_key):
            coeff = self.terms[exps]
            mono = "*".join(
                f"{VARIABLES[i]}^{e}" if e > 1 else VARIABLES[i]
                for i, e in enumerate(exps)
                if e
            )
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"-{body}" if coeff < 0 else f"+{body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


_POLY_ZERO = MultiPoly()
_POLY_ONE = MultiPoly.const(1)


def _exact_div(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Divide f by g, which must divide it exactly."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if f.is_zero:
        return _POLY_ZERO
    if g.is_const:
        return f.scale(1 / g.const_value())
    g_lead = g.lead_exps()
    g_lc = g.terms[g_lead]
    rem = dict(f.terms)
    quot: dict = {}
    while rem:
        lead = max(rem, key=_grlex)
        exps = tuple(a - b for a, b in zip(lead, g_lead))
        if any(e < 0 for e in exps):
            raise ValueError("inexact polynomial division")
        coeff = rem[lead] / g_lc
        quot[exps] = coeff
        for ge, gc in g.terms.items():
            ke = tuple(a + b for a, b in zip(exps, ge))
            acc = rem.get(ke, _F0) - coeff * gc
            if acc:
                rem[ke] = acc
            else:
                rem.pop(ke, None)
    out = MultiPoly.__new__(MultiPoly)
    out.terms = quot
    out._hash = None
    return out


def _deg_in(f: MultiPoly, v: int) -> int:
    return max((e[v] for e in f.terms), default=-1)

def _coeff_in(f: MultiPoly, v: int, d: int) -> MultiPoly:
    terms = {}
    for e, c in f.terms.items():
        if e[v] == d:
            e2 = list(e)
            e2[v] = 0
            terms[tuple(e2)] = c
    return MultiPoly(terms)

def _shift(f: MultiPoly, v: int, d: int) -> MultiPoly:
    terms = {}
    for e, c in f.terms.items():
        e2 = list(e)
        e2[v] += d
        terms[tuple(e2)] = c
    return MultiPoly(terms)


def _content_primitive(f: MultiPoly, v: int) -> tuple:
    degree = _deg_in(f, v)
    if degree <= 0:
        return f, _POLY_ONE
    content = _POLY_ZERO
    for d in range(degree + 1):
        coeff = _coeff_in(f, v, d)
        if not coeff.is_zero:
            content = poly_gcd(content, coeff)
            if content.is_one:
                break
    return content, _exact_div(f, content)


def _prem(f: MultiPoly, g: MultiPoly, v: int) -> MultiPoly:
    """Pseudo-remainder of f by g in the variable with index v."""
    dg = _deg_in(g, v)
    lc_g = _coeff_in(g, v, dg)
    r = f
    while not r.is_zero:
        dr = _deg_in(r, v)
        if dr < dg:
            break
        lc_r = _coeff_in(r, v, dr)
        r = lc_g * r - _shift(lc_r, v, dr - dg) * g
    return r


def _prs_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Primitive pseudo-remainder sequence; correct but can swell."""
    v = next(i for i in range(_NVARS) if _deg_in(f, i) > 0 or _deg_in(g, i) > 0)
    cont_f, prim_f = _content_primitive(f, v)
    cont_g, prim_g = _content_primitive(g, v)
    scale = poly_gcd(cont_f, cont_g)
    a, b = prim_f, prim_g
    if _deg_in(a, v) < _deg_in(b, v):
        a, b = b, a
    while not b.is_zero:
        rem = _prem(a, b, v)
        if rem.is_zero:
            a = b
            break
        a = b
        b = _content_primitive(rem, v)[1]
    return scale * _content_primitive(a, v)[1]


def _int_scaled(f: MultiPoly) -> MultiPoly:
    """Clear coefficient denominators (the result is an associate)."""
    scale = 1
    for c in f.terms.values():
        d = c.denominator
        scale = scale // _int_gcd(scale, d) * d if scale else d
    return f.scale(scale) if scale != 1 else f


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _int_content(f: MultiPoly) -> int:
    acc = 0
    for c in f.terms.values():
        acc = _int_gcd(acc, c.numerator)
        if acc == 1:
            break
    return acc or 1


def _eval_var(f: MultiPoly, v: int, point: int) -> MultiPoly:
    terms: dict = {}
    for e, c in f.terms.items():
        value = c * point ** e[v]
        e2 = list(e)
        e2[v] = 0
        key = tuple(e2)
        acc = terms.get(key, _F0) + value
        if acc:
            terms[key] = acc
        else:
            terms.pop(key, None)
    out = MultiPoly.__new__(MultiPoly)
    out.terms = terms
    out._hash = None
    return out


def _balanced_mod(f: MultiPoly, modulus: int) -> MultiPoly:
    terms = {}
    half = modulus // 2
    for e, c in f.terms.items():
        residue = int(c) % modulus
        if residue > half:
            residue -= modulus
        if residue:
            terms[e] = Fraction(residue)
    out = MultiPoly.__new__(MultiPoly)
    out.terms = terms
    out._hash = None
    return out


def _heu_gcd(f: MultiPoly, g: MultiPoly):
    """Heuristic gcd for integer-coefficient polynomials.

    Splits off integer contents, evaluates one variable at a large
    integer, recurses, reconstructs the primitive gcd candidate from
    the evaluation-adic expansion and verifies it by exact division.
    Returns None when the heuristic gives up (callers then fall back
    to the pseudo-remainder sequence).
    """
    content_f = _int_content(f)
    content_g = _int_content(g)
    shared = MultiPoly.const(_int_gcd(content_f, content_g))
    if content_f != 1:
        f = f.scale(Fraction(1, content_f))
    if content_g != 1:
        g = g.scale(Fraction(1, content_g))
    present = [
        v for v in range(_NVARS) if _deg_in(f, v) > 0 or _deg_in(g, v) > 0
    ]
    if not present:
        return shared
    v = present[0]
    bound = max(
        max(abs(c.numerator) for c in f.terms.values()),
        max(abs(c.numerator) for c in g.terms.values()),
    )
    point = 2 * bound + 29
    degree_cap = max(_deg_in(f, v), _deg_in(g, v))
    for _ in range(6):
        f_at = _eval_var(f, v, point)
        g_at = _eval_var(g, v, point)
        if not f_at.is_zero and not g_at.is_zero:
            gamma = _heu_gcd(f_at, g_at)
            if gamma is not None:
                candidate = _reconstruct(gamma, v, point, degree_cap)
                if candidate is not None:
                    try:
                        _exact_div(f, candidate)
                        _exact_div(g, candidate)
                        return shared * candidate
                    except ValueError:
                        pass
        point = point * 73794 // 27011 + 1
    return None


def _reconstruct(gamma: MultiPoly, v: int, point: int, degree_cap: int):
    terms: dict = {}
    work = gamma
    power = 0
    while not work.is_zero:
        if power > degree_cap:
            return None
        digit = _balanced_mod(work, point)
        for e, c in digit.terms.items():
            e2 = list(e)
            e2[v] = power
            terms[tuple(e2)] = c
        work = (work - digit).scale(Fraction(1, point))
        power += 1
    if not terms:
        return None
    candidate = MultiPoly(terms)
    content = _int_content(candidate)
    if content != 1:
        candidate = candidate.scale(Fraction(1, content))
    return candidate


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """GCD in Q[p,q,r,s,t], normalised to leading coefficient 1.

    Nonzero constants are units, so their gcd with anything nonzero is
    1.  Tries the evaluation heuristic first (fast, and verified by
    exact division); falls back to the primitive pseudo-remainder
    sequence in the rare cases the heuristic gives up.
    """
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    if f.is_const or g.is_const:
        return _POLY_ONE
    if f.terms == g.terms:
        return f.monic()
    if len(f.terms) == 1 or len(g.terms) == 1:
        exps = None
        for e in list(f.terms) + list(g.terms):
            exps = e if exps is None else tuple(map(min, exps, e))
        return MultiPoly({exps: _F1})
    result = _heu_gcd(_int_scaled(f), _int_scaled(g))
    if result is None:
        result = _prs_gcd(f, g)
    return result.monic()


def _cancel(f: MultiPoly, g: MultiPoly) -> tuple:
    """Divide out the gcd of two polynomials."""
    common = poly_gcd(f, g)
    if common.is_one:
        return f, g
    return _exact_div(f, common), _exact_div(g, common)


ScalarLike = Union["ScalarExpr", int, Fraction, str]


class ScalarExpr:
    """An element of Q(p, q, r, s, t), canonically reduced."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = _POLY_ONE
        if den.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        if num.is_zero:
            num, den = _POLY_ZERO, _POLY_ONE
        elif den.is_const:
            c = den.const_value()
            if c != 1:
                num = num.scale(1 / c)
            den = _POLY_ONE
        else:
            common = poly_gcd(num, den)
            if not common.is_one:
                num = _exact_div(num, common)
                den = _exact_div(den, common)
            if den.is_const:
                c = den.const_value()
                if c != 1:
                    num = num.scale(1 / c)
                den = _POLY_ONE
            else:
                lc = den.lead_coeff()
                if lc != 1:
                    num = num.scale(1 / lc)
                    den = den.scale(1 / lc)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _reduced(cls, num: MultiPoly, den: MultiPoly) -> "ScalarExpr":
        """Skip the gcd step for operands already known to be coprime."""
        out = cls.__new__(cls)
        if num.is_zero:
            num, den = _POLY_ZERO, _POLY_ONE
        elif den.is_const:
            c = den.const_value()
            if c != 1:
                num = num.scale(1 / c)
            den = _POLY_ONE
        else:
            lc = den.lead_coeff()
            if lc != 1:
                num = num.scale(1 / lc)
                den = den.scale(1 / lc)
        out.num = num
        out.den = den
        out._hash = None
        return out

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.is_one and self.den.is_one

    def variables(self) -> set:
        return self.num.variables() | self.den.variables()

    def __add__(self, other):
        # sums and products reduce by gcds of the small, already-reduced
        # components rather than of the expanded results, which keeps the
        # pseudo-remainder sequences off the large products
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.den.terms == other.den.terms:
            return ScalarExpr(self.num + other.num, self.den)
        common = poly_gcd(self.den, other.den)
        if common.is_one:
            num = self.num * other.den + other.num * self.den
            return ScalarExpr._reduced(num, self.den * other.den)
        left = _exact_div(self.den, common)
        right = _exact_div(other.den, common)
        num = self.num * right + other.num * left
        shared = poly_gcd(num, common)
        if not shared.is_one:
            num = _exact_div(num, shared)
            common = _exact_div(common, shared)
        return ScalarExpr._reduced(num, common * left * right)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        out = ScalarExpr.__new__(ScalarExpr)
        out.num = -self.num
        out.den = self.den
        out._hash = None
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        if self.is_one:
            return other
        if other.is_one:
            return self
        num1, den2 = _cancel(self.num, other.den)
        num2, den1 = _cancel(other.num, self.den)
        return ScalarExpr._reduced(num1 * num2, den1 * den2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        if self.is_zero:
            return ZERO
        num1, num2 = _cancel(self.num, other.num)
        den1, den2 = _cancel(self.den, other.den)
        return ScalarExpr._reduced(num1 * den2, den1 * num2)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n == 0:
            return ONE
        if n < 0:
            return ONE / (self ** (-n))
        acc = self
        for _ in range(n - 1):
            acc = acc * self
        return acc

    def evaluate(self, assignment: Mapping[str, Union[int, Fraction]]) -> Fraction:
        """Specialise every variable to a rational number.

        The assignment must cover every variable that occurs; a
        vanishing denominator raises ZeroDivisionError.
        """
        values = {}
        for name, value in assignment.items():
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r}")
            values[_VAR_INDEX[name]] = Fraction(value)
        missing = {name for name in self.variables() if _VAR_INDEX[name] not in values}
        if missing:
            raise ValueError(f"assignment missing variables: {', '.join(sorted(missing))}")
        den_value = self.den.evaluate(values)
        if den_value == 0:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at the given point")
        return self.num.evaluate(values) / den_value

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if self.den.is_one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"ScalarExpr({self})"


ZERO = ScalarExpr(_POLY_ZERO)
ONE = ScalarExpr(_POLY_ONE)


def const(value: Union[int, Fraction]) -> ScalarExpr:
    return ScalarExpr(MultiPoly.const(value))


def variable(name: str) -> ScalarExpr:
    return ScalarExpr(MultiPoly.variable(name))


def _coerce(value):
    if isinstance(value, ScalarExpr):
        return value
    if isinstance(value, (int, Fraction)):
        return const(value)
    return NotImplemented


def as_scalar(value: ScalarLike) -> ScalarExpr:
    """Coerce ints, Fractions and grammar strings into ScalarExpr."""
    if isinstance(value, ScalarExpr):
        return value
    if isinstance(value, (int, Fraction)):
        return const(value)
    if isinstance(value, str):
        return parse(value)
    raise TypeError(f"cannot interpret {value!r} as a scalar")


class ParseError(ValueError):
    """Syntax error in the scalar grammar, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    # expr   := term (('+'|'-') term)*
    # term   := unary (('*'|'/') unary)*
    # unary  := '-' unary | power
    # power  := atom ('^' INT)?
    # atom   := INT | VAR | '(' expr ')'

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> ScalarExpr:
        value = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return value

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> ScalarExpr:
        value = self.term()
        while True:
            op = self.peek()
            if op == "+":
                self.pos += 1
                value = value + self.term()
            elif op == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self) -> ScalarExpr:
        value = self.unary()
        while True:
            op = self.peek()
            if op == "*":
                self.pos += 1
                value = value * self.unary()
            elif op == "/":
                self.pos += 1
                at = self.pos
                divisor = self.unary()
                if divisor.is_zero:
                    raise ParseError("division by zero", at)
                value = value / divisor
            else:
                return value

    def unary(self) -> ScalarExpr:
        if self.peek() == "-":
            self.pos += 1
            return -self.unary()
        return self.power()

    def power(self) -> ScalarExpr:
        value = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            at = self.pos
            digits = self.integer_digits()
            if digits is None:
                raise ParseError("expected a nonnegative integer exponent", at)
            value = value ** int(digits)
        return value

    def atom(self) -> ScalarExpr:
        ch = self.peek()
        at = self.pos
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return value
        digits = self.integer_digits()
        if digits is not None:
            return const(int(digits))
        if ch.isalpha():
            run = self.pos
            while run < len(self.text) and self.text[run].isalpha():
                run += 1
            name = self.text[self.pos : run]
            if name not in _VAR_INDEX:
                raise ParseError(f"unknown variable {name!r}", at)
            self.pos = run
            return variable(name)
        if ch:
            raise ParseError(f"unexpected {ch!r}", self.pos)
        raise ParseError("unexpected end of input", self.pos)

    def integer_digits(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start : self.pos] if self.pos > start else None


def parse(text: str) -> ScalarExpr:
    """Parse the textual scalar grammar into a canonical ScalarExpr."""
    return _Parser(text).parse()
