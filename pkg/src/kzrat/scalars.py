"""Exact scalar arithmetic: rationals, polynomials in z1/z2, and their fractions.

Everything downstream computes over ``ParamScalar``, the field of rational
functions in the two pole parameters z1 and z2 with rational coefficients.
All values are immutable and kept in a unique canonical form, so two scalars
are equal exactly when their representations coincide.  No floating point is
used anywhere in this module.

Canonical form of a ``ParamScalar`` num/den:
  * gcd(num, den) = 1 (polynomial gcd, including content, removed),
  * den has integer coefficients with content 1,
  * the leading coefficient of den (deglex order, z1 > z2) is positive,
  * zero is 0/1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Dict, Iterable, Mapping, Tuple, Union

from .errors import (
    DegenerateScalar,
    DivisionByZero,
    EvaluationAtPole,
    ScalarSyntaxError,
    UnknownVariable,
)

Rational = Fraction

VARIABLES = ("z1", "z2")

# Monomial: (exponent of z1, exponent of z2).
Monomial = Tuple[int, int]


def _deglex_key(m: Monomial) -> Tuple[int, int]:
    # Degree-lexicographic with z1 > z2: total degree first, then z1 exponent.
    return (m[0] + m[1], m[0])


def _monomial_divides(a: Monomial, b: Monomial) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


class ParamPoly:
    """Sparse polynomial in z1, z2 with Fraction coefficients.

    Stored as a map monomial -> coefficient with no zero coefficients.
    Instances are immutable; all operations return new polynomials.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Union[int, Fraction]] = ()):
        cleaned: Dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            c = Fraction(coeff)
            if c != 0:
                e1, e2 = mono
                if e1 < 0 or e2 < 0:
                    raise ValueError(f"negative exponent in monomial {mono}")
                key = (int(e1), int(e2))
                c_new = cleaned.get(key, Fraction(0)) + c
                if c_new:
                    cleaned[key] = c_new
                else:
                    cleaned.pop(key, None)
        self._terms = cleaned

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "ParamPoly":
        return cls()

    @classmethod
    def one(cls) -> "ParamPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, value: Union[int, Fraction]) -> "ParamPoly":
        return cls({(0, 0): Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "ParamPoly":
        if name == "z1":
            return cls({(1, 0): 1})
        if name == "z2":
            return cls({(0, 1): 1})
        raise ValueError(f"unknown variable {name!r}")

    # -- predicates and views ------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or self._terms.keys() == {(0, 0)}

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (0 for the zero polynomial)."""
        if not self.is_constant:
            raise ValueError(f"{self!r} is not constant")
        return self._terms.get((0, 0), Fraction(0))

    def terms(self) -> Iterable[Tuple[Monomial, Fraction]]:
        """Terms in descending deglex order (z1 > z2)."""
        return sorted(self._terms.items(), key=lambda kv: _deglex_key(kv[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=_deglex_key)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(e1 + e2 for e1, e2 in self._terms)

    def degree_in(self, var_index: int) -> int:
        """Degree in z1 (var_index 0) or z2 (var_index 1); -1 for zero."""
        if not self._terms:
            return -1
        return max(m[var_index] for m in self._terms)

    # -- ring operations ------------------------------------------------

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = out.get(mono, Fraction(0)) + coeff
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return _raw(out)

    def __sub__(self, other: "ParamPoly") -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = out.get(mono, Fraction(0)) - coeff
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return _raw(out)

    def __neg__(self) -> "ParamPoly":
        return _raw({m: -c for m, c in self._terms.items()})

    def __mul__(self, other: "ParamPoly") -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for (a1, a2), ca in self._terms.items():
            for (b1, b2), cb in other._terms.items():
                mono = (a1 + b1, a2 + b2)
                c = out.get(mono, Fraction(0)) + ca * cb
                if c:
                    out[mono] = c
                else:
                    out.pop(mono, None)
        return _raw(out)

    def __pow__(self, n: int) -> "ParamPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ParamPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, factor: Union[int, Fraction]) -> "ParamPoly":
        f = Fraction(factor)
        if f == 0:
            return ParamPoly.zero()
        return _raw({m: c * f for m, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def evaluate(self, z1: Fraction, z2: Fraction) -> Fraction:
        total = Fraction(0)
        for (e1, e2), coeff in self._terms.items():
            total += coeff * z1**e1 * z2**e2
        return total

    # -- content and normalization ---------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self = c * (primitive integer polynomial)."""
        if not self._terms:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for c in self._terms.values():
            num_gcd = _int_gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // _int_gcd(den_lcm, c.denominator)
        return Fraction(num_gcd, den_lcm)

    def primitive(self) -> "ParamPoly":
        """self / content(): integer coefficients with content 1, sign kept."""
        if not self._terms:
            return self
        return self.scale(1 / self.content())

    def normalized(self) -> "ParamPoly":
        """Primitive with positive leading coefficient (deglex, z1 > z2)."""
        if not self._terms:
            return self
        p = self.primitive()
        if p.leading_coefficient() < 0:
            p = -p
        return p

    def __repr__(self) -> str:
        return f"ParamPoly({render_poly(self)!r})"


def _raw(terms: Dict[Monomial, Fraction]) -> ParamPoly:
    # Internal fast path: terms already clean (no zeros, valid keys).
    p = ParamPoly.__new__(ParamPoly)
    p._terms = terms
    return p


# ---------------------------------------------------------------------------
# Exact division and gcd
# ---------------------------------------------------------------------------


def divide_exact(f: ParamPoly, g: ParamPoly) -> ParamPoly:
    """Quotient f/g when g divides f exactly; raises ValueError otherwise."""
    if g.is_zero:
        raise ValueError("division by the zero polynomial")
    if f.is_zero:
        return ParamPoly.zero()
    quot: Dict[Monomial, Fraction] = {}
    rem = f
    lm_g = g.leading_monomial()
    lc_g = g.leading_coefficient()
    while not rem.is_zero:
        lm_r = rem.leading_monomial()
        if not _monomial_divides(lm_g, lm_r):
            raise ValueError("inexact polynomial division")
        mono = (lm_r[0] - lm_g[0], lm_r[1] - lm_g[1])
        coeff = rem.leading_coefficient() / lc_g
        quot[mono] = quot.get(mono, Fraction(0)) + coeff
        rem = rem - g * _raw({mono: coeff})
    return _raw({m: c for m, c in quot.items() if c})


def _univariate_in_z2(p: ParamPoly) -> bool:
    return p.degree_in(0) <= 0


def _univ_gcd_z2(f: ParamPoly, g: ParamPoly) -> ParamPoly:
    # Euclid in Q[z2]; result normalized (integer content 1, positive lead).
    a, b = f, g
    while not b.is_zero:
        a, b = b, _univ_rem_z2(a, b)
    return a.normalized()

def _univ_rem_z2(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    db = b.degree_in(1)
    lc_b = b._terms[(0, db)]
    r = a
    while not r.is_zero and r.degree_in(1) >= db:
        dr = r.degree_in(1)
        c = r._terms[(0, dr)] / lc_b
        r = r - b * _raw({(0, dr - db): c})
    return r


def _z1_coefficients(p: ParamPoly) -> Dict[int, ParamPoly]:
    """View as polynomial in z1 with coefficients in Q[z2]."""
    coeffs: Dict[int, Dict[Monomial, Fraction]] = {}
    for (e1, e2), c in p._terms.items():
        coeffs.setdefault(e1, {})[(0, e2)] = c
    return {e1: _raw(t) for e1, t in coeffs.items()}


def _from_z1_coefficients(coeffs: Mapping[int, ParamPoly]) -> ParamPoly:
    terms: Dict[Monomial, Fraction] = {}
    for e1, poly in coeffs.items():
        for (_, e2), c in poly._terms.items():
            terms[(e1, e2)] = c
    return _raw({m: c for m, c in terms.items() if c})


def _content_wrt_z1(p: ParamPoly) -> ParamPoly:
    # gcd in Q[z2] of the z1-coefficients.
    acc = ParamPoly.zero()
    for coeff in _z1_coefficients(p).values():
        acc = _univ_gcd_z2(acc, coeff)
        if acc.is_constant and not acc.is_zero:
            return ParamPoly.one()
    return acc


def _pseudo_rem_z1(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    # Pseudo-remainder of a by b, main variable z1 (deg_z1 a >= deg_z1 b >= 1).
    db = b.degree_in(0)
    lb = _z1_coefficients(b)[db]
    r = a
    while not r.is_zero and r.degree_in(0) >= db:
        dr = r.degree_in(0)
        lr = _z1_coefficients(r)[dr]
        shift = _raw({(dr - db, 0): Fraction(1)})
        r = lb * r - lr * shift * b
    return r


def poly_gcd(f: ParamPoly, g: ParamPoly) -> ParamPoly:
    """Gcd of two polynomials, normalized (primitive, positive leading coeff).

    Content/primitive-part split on the main variable z1 with a primitive
    pseudo-remainder sequence; coefficient gcds are Euclid in Q[z2].
    gcd(0, 0) = 0 by convention.
    """
    if f.is_zero:
        return g.normalized()
    if g.is_zero:
        return f.normalized()
    if f.is_constant or g.is_constant:
        return ParamPoly.one()
    if _univariate_in_z2(f) and _univariate_in_z2(g):
        return _univ_gcd_z2(f, g)
    if _univariate_in_z2(f) or _univariate_in_z2(g):
        # One operand has no z1: the gcd divides the other's z1-content.
        univ, other = (f, g) if _univariate_in_z2(f) else (g, f)
        return _univ_gcd_z2(univ, _content_wrt_z1(other))

    cont_f = _content_wrt_z1(f)
    cont_g = _content_wrt_z1(g)
    cont = _univ_gcd_z2(cont_f, cont_g)
    a = divide_exact(f, cont_f)
    b = divide_exact(g, cont_g)
    if a.degree_in(0) < b.degree_in(0):
        a, b = b, a
    # Primitive PRS on the z1-primitive parts.
    while True:
        if b.is_zero:
            result = a
            break
        if b.degree_in(0) == 0:
            # Nonzero remainder free of z1: the primitive parts are coprime.
            result = ParamPoly.one()
            break
        r = _pseudo_rem_z1(a, b)
        if not r.is_zero:
            r = divide_exact(r, _content_wrt_z1(r))
        a, b = b, r
    pp = divide_exact(result, _content_wrt_z1(result)) if result.degree_in(0) > 0 else result
    return (cont * pp).normalized()


# ---------------------------------------------------------------------------
# The fraction field
# ---------------------------------------------------------------------------

ScalarLike = Union["ParamScalar", ParamPoly, Fraction, int]


class ParamScalar:
    """Element of the fraction field Q(z1, z2), always in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num: ParamPoly, den: ParamPoly = None):
        if den is None:
            den = ParamPoly.one()
        if den.is_zero:
            raise DegenerateScalar("zero denominator")
        if num.is_zero:
            self.num = ParamPoly.zero()
            self.den = ParamPoly.one()
            return
        if den.is_constant:
            # Fast path: purely polynomial value.
            c = den.constant_value()
            self.num = num if c == 1 else num.scale(1 / c)
            self.den = ParamPoly.one()
            return
        g = poly_gcd(num, den)
        if not (g.is_constant and g.constant_value() == 1):
            num = divide_exact(num, g)
            den = divide_exact(den, g)
        # Scale so that den is a primitive integer polynomial, positive lead.
        if den.is_constant:
            factor = den.constant_value()
        else:
            factor = den.content()
            if den.leading_coefficient() < 0:
                factor = -factor
        self.num = num.scale(1 / factor)
        self.den = den.scale(1 / factor)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, value: Union[int, Fraction]) -> "ParamScalar":
        return cls(ParamPoly.constant(Fraction(value)))

    @classmethod
    def from_poly(cls, p: ParamPoly) -> "ParamScalar":
        return cls(p)

    @classmethod
    def variable(cls, name: str) -> "ParamScalar":
        return cls(ParamPoly.variable(name))

    @classmethod
    def zero(cls) -> "ParamScalar":
        return cls(ParamPoly.zero())

    @classmethod
    def one(cls) -> "ParamScalar":
        return cls(ParamPoly.one())

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self!r} is not constant")
        return self.num.constant_value() / self.den.constant_value()

    # -- field operations ----------------------------------------------------

    @staticmethod
    def _coerce(value: ScalarLike) -> "ParamScalar":
        if isinstance(value, ParamScalar):
            return value
        if isinstance(value, ParamPoly):
            return ParamScalar(value)
        if isinstance(value, (int, Fraction)):
            return ParamScalar.from_rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to ParamScalar")

    def __add__(self, other: ScalarLike) -> "ParamScalar":
        o = self._coerce(other)
        return ParamScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "ParamScalar":
        o = self._coerce(other)
        return ParamScalar(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other: ScalarLike) -> "ParamScalar":
        return self._coerce(other) - self

    def __neg__(self) -> "ParamScalar":
        s = ParamScalar.__new__(ParamScalar)
        s.num = -self.num
        s.den = self.den
        return s

    def __mul__(self, other: ScalarLike) -> "ParamScalar":
        o = self._coerce(other)
        return ParamScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "ParamScalar":
        o = self._coerce(other)
        if o.is_zero:
            raise DivisionByZero("division by the zero scalar")
        return ParamScalar(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: ScalarLike) -> "ParamScalar":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "ParamScalar":
        if n < 0:
            if self.is_zero:
                raise DivisionByZero("zero scalar to a negative power")
            return ParamScalar(self.den, self.num) ** (-n)
        return ParamScalar(self.num**n, self.den**n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = self._coerce(other)
        if not isinstance(other, ParamScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def evaluate(self, assignment: Mapping[str, Union[int, Fraction]]) -> Fraction:
        """Exact value at a point; the assignment must cover z1 and z2."""
        missing = [v for v in VARIABLES if v not in assignment]
        if missing:
            raise ValueError(f"assignment missing {missing}")
        unknown = [v for v in assignment if v not in VARIABLES]
        if unknown:
            raise ValueError(f"assignment has unknown names {unknown}")
        v1 = Fraction(assignment["z1"])
        v2 = Fraction(assignment["z2"])
        den = self.den.evaluate(v1, v2)
        if den == 0:
            raise EvaluationAtPole(f"denominator vanishes at z1={v1}, z2={v2}")
        return self.num.evaluate(v1, v2) / den

    def __repr__(self) -> str:
        return f"ParamScalar({render_scalar(self)!r})"

    def __str__(self) -> str:
        return render_scalar(self)


# Convenience module-level constants.
def scalar(value: Union[int, Fraction, str]) -> ParamScalar:
    """Build a scalar from an int, a Fraction, or scalar text."""
    if isinstance(value, str):
        return parse_scalar(value)
    return ParamScalar.from_rational(value)


def canonicalize(s: ParamScalar) -> ParamScalar:
    """Re-run canonicalization; a fixed point for already-canonical scalars."""
    return ParamScalar(s.num, s.den)


Z1 = ParamScalar.variable("z1")
Z2 = ParamScalar.variable("z2")
ZERO = ParamScalar.zero()
ONE = ParamScalar.one()


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _render_coefficient(c: Fraction) -> str:
    # Magnitude only; sign is handled by the term join.
    c = abs(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def _render_monomial(mono: Monomial) -> str:
    parts = []
    for name, exp in zip(VARIABLES, mono):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return "*".join(parts)


def render_poly(p: ParamPoly) -> str:
    """Canonical text: terms in descending deglex order, z1 > z2."""
    if p.is_zero:
        return "0"
    pieces = []
    for i, (mono, coeff) in enumerate(p.terms()):
        sign = "-" if coeff < 0 else "+"
        mono_text = _render_monomial(mono)
        if not mono_text:
            body = _render_coefficient(coeff).strip("()")
            if "/" in body and i > 0:
                body = f"({body})"
        elif abs(coeff) == 1:
            body = mono_text
        else:
            body = f"{_render_coefficient(coeff)}*{mono_text}"
        if i == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def render_scalar(s: ParamScalar) -> str:
    """Canonical text of a scalar; fractions as (num)/(den)."""
    if s.den.is_constant and s.den.constant_value() == 1:
        return render_poly(s.num)
    return f"({render_poly(s.num)})/({render_poly(s.den)})"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN_OPS = set("+-*/^()")


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens = []
        self._scan()
        self.index = 0

    def _scan(self) -> None:
        text = self.text
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch in _TOKEN_OPS:
                self.tokens.append((ch, i))
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.tokens.append(("int", i, int(text[i:j])))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                name = text[i:j]
                if name not in VARIABLES:
                    raise UnknownVariable(f"unknown variable {name!r}", i)
                self.tokens.append(("var", i, name))
                i = j
                continue
            raise ScalarSyntaxError(f"unexpected character {ch!r}", i)

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return ("end", len(self.text))

    def next(self):
        tok = self.peek()
        if tok[0] != "end":
            self.index += 1
        return tok


class _Parser:
    """Recursive descent for: expr := term (('+'|'-') term)*;
    term := unary (('*'|'/') unary)*; unary := '-'* power;
    power := atom ('^' uint)?; atom := int | var | '(' expr ')'.
    """

    def __init__(self, text: str):
        self.toks = _Tokenizer(text)

    def parse(self) -> ParamScalar:
        value = self._expr()
        tok = self.toks.peek()
        if tok[0] != "end":
            raise ScalarSyntaxError(f"unexpected token {tok[0]!r}", tok[1])
        return value

    def _expr(self) -> ParamScalar:
        value = self._term()
        while True:
            tok = self.toks.peek()
            if tok[0] == "+":
                self.toks.next()
                value = value + self._term()
            elif tok[0] == "-":
                self.toks.next()
                value = value - self._term()
            else:
                return value

    def _term(self) -> ParamScalar:
        value = self._unary()
        while True:
            tok = self.toks.peek()
            if tok[0] == "*":
                self.toks.next()
                value = value * self._unary()
            elif tok[0] == "/":
                self.toks.next()
                pos = self.toks.peek()[1]
                divisor = self._unary()
                if divisor.is_zero:
                    raise ScalarSyntaxError("division by zero", pos)
                value = value / divisor
            else:
                return value

    def _unary(self) -> ParamScalar:
        tok = self.toks.peek()
        if tok[0] == "-":
            self.toks.next()
            return -self._unary()
        return self._power()

    def _power(self) -> ParamScalar:
        base = self._atom()
        tok = self.toks.peek()
        if tok[0] == "^":
            self.toks.next()
            exp_tok = self.toks.next()
            if exp_tok[0] != "int":
                raise ScalarSyntaxError("exponent must be a non-negative integer", exp_tok[1])
            return base ** exp_tok[2]
        return base

    def _atom(self) -> ParamScalar:
        tok = self.toks.next()
        if tok[0] == "int":
            return ParamScalar.from_rational(tok[2])
        if tok[0] == "var":
            return ParamScalar.variable(tok[2])
        if tok[0] == "(":
            value = self._expr()
            closing = self.toks.next()
            if closing[0] != ")":
                raise ScalarSyntaxError("expected ')'", closing[1])
            return value
        raise ScalarSyntaxError(f"unexpected token {tok[0]!r}", tok[1])


def parse_scalar(text: str) -> ParamScalar:
    """Parse scalar text (grammar: ints, + - * / ^ ( ), variables z1/z2)."""
    return _Parser(text).parse()
