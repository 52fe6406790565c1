"""Sparse multivariate polynomials over exact rationals.

Monomials are exponent tuples; a polynomial is a map monomial -> Fraction
plus an ordered tuple of variable names.  The module provides the
contraction action of differential operators (X_i acts as d/dx_i), exact
evaluation, and the canonical text grammar both ways.

Convention: contraction is true partial differentiation, so factorial
constants appear (X^2 applied to x^2 gives 2).  Only ranks of the matrices
built from these values are consumed downstream, and rank is blind to
nonzero scalings, so any consistent convention gives the same results.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from agjordan.errors import ParseError, VariableMismatch


def _grlex_key(mono):
    return (sum(mono), mono)


class Poly:
    """Immutable sparse polynomial.  Zero coefficients are never stored."""

    __slots__ = ("var_names", "terms")

    def __init__(self, var_names, terms):
        self.var_names = tuple(var_names)
        n = len(self.var_names)
        clean = {}
        for mono, c in terms.items():
            if len(mono) != n:
                raise ValueError("monomial length does not match variable count")
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c:
                clean[tuple(mono)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, var_names):
        return cls(var_names, {})

    @classmethod
    def constant(cls, var_names, c):
        return cls(var_names, {(0,) * len(tuple(var_names)): Fraction(c)})

    @classmethod
    def monomial(cls, var_names, exponents, coeff=1):
        return cls(var_names, {tuple(exponents): Fraction(coeff)})

    @classmethod
    def variable(cls, var_names, index):
        names = tuple(var_names)
        expo = [0] * len(names)
        expo[index] = 1
        return cls(names, {tuple(expo): Fraction(1)})

    # -- queries -------------------------------------------------------

    @property
    def num_vars(self):
        return len(self.var_names)

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self):
        degrees = {sum(m) for m in self.terms}
        return len(degrees) <= 1

    def homogeneous_degree(self):
        """The common degree of all terms, or None if inhomogeneous/zero."""
        degrees = {sum(m) for m in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def sorted_terms(self):
        """Terms in graded-lex descending order (first variable heaviest)."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    # -- arithmetic ------------------------------------------------------

    def _check_ring(self, other):
        if self.var_names != other.var_names:
            raise VariableMismatch(
                f"polynomials live in different rings: {self.var_names} vs {other.var_names}"
            )

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return Poly(self.var_names, out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) - c
        return Poly(self.var_names, out)

    def __neg__(self):
        return Poly(self.var_names, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.var_names, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Poly(self.var_names, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.var_names, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.var_names == other.var_names and self.terms == other.terms

    def __hash__(self):
        return hash((self.var_names, frozenset(self.terms.items())))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, vars={self.var_names})"


@dataclass(frozen=True)
class LinearForm:
    """l = a_1 X_1 + ... + a_n X_n; the point l_perp is the coefficient vector."""

    var_names: tuple
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in self.coeffs)
        object.__setattr__(self, "var_names", tuple(self.var_names))
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != len(self.var_names):
            raise ValueError("coefficient count does not match variable count")
        if not any(coeffs):
            raise ValueError("linear form must be nonzero")

    @classmethod
    def from_poly(cls, p):
        if p.homogeneous_degree() != 1:
            raise ValueError("linear form text must be homogeneous of degree 1")
        coeffs = [Fraction(0)] * p.num_vars
        for mono, c in p.terms.items():
            coeffs[mono.index(1)] = c
        return cls(p.var_names, tuple(coeffs))

    def as_poly(self):
        terms = {}
        n = len(self.var_names)
        for i, c in enumerate(self.coeffs):
            if c:
                expo = [0] * n
                expo[i] = 1
                terms[tuple(expo)] = c
        return Poly(self.var_names, terms)

    def point(self):
        """The evaluation point l_perp = (a_1, ..., a_n)."""
        return self.coeffs

    def __str__(self):
        return format_poly(self.as_poly())


def monomials_of_degree(num_vars, k):
    """All degree-k exponent tuples, graded-lex with the first variable heaviest."""
    if num_vars == 0:
        return [()] if k == 0 else []
    out = []
    for combo in combinations_with_replacement(range(num_vars), k):
        expo = [0] * num_vars
        for idx in combo:
            expo[idx] += 1
        out.append(tuple(expo))
    return out


def contract(op, f):
    """Apply op in the dual variables to f: X^a sends x^b to (b falling a) x^(b-a)."""
    if op.var_names != f.var_names:
        raise VariableMismatch(
            f"operator variables {op.var_names} do not match the form's {f.var_names}"
        )
    out = {}
    perm = math.perm
    for alpha, a in op.terms.items():
        for beta, c in f.terms.items():
            coef = 1
            key = []
            for ai, bi in zip(alpha, beta):
                if ai > bi:
                    coef = 0
                    break
                if ai:
                    coef *= perm(bi, ai)
                key.append(bi - ai)
            if coef:
                k = tuple(key)
                out[k] = out.get(k, Fraction(0)) + a * c * coef
    return Poly(f.var_names, out)


def evaluate(f, point):
    """Exact value of f at a rational point."""
    if len(point) != f.num_vars:
        raise ValueError(
            f"point has {len(point)} coordinates but the polynomial has {f.num_vars} variables"
        )
    total = Fraction(0)
    for mono, c in f.terms.items():
        v = c
        for coord, e in zip(point, mono):
            if e:
                v *= Fraction(coord) ** e
        total += v
    return total


# -- text format ----------------------------------------------------------
#
# poly   := ws term (ws ('+'|'-') ws term)* ws
# term   := (coeff ('*')?)? factor (('*')? factor)*   | coeff
# factor := var ('^' nat)?
# coeff  := nat ('/' nat)?      (a leading '-' binds to the term)
# var    := [A-Za-z][A-Za-z0-9_]*


def parse_poly(text, var_order=None):
    """Parse the canonical grammar into a Poly.

    Variable index order is var_order when given (unknown names are an
    error); otherwise variables are indexed by first appearance.
    """
    terms, seen_order = _scan(text)
    if var_order is not None:
        names = tuple(var_order)
        known = set(names)
        for name, pos in seen_order:
            if name not in known:
                raise ParseError(f"unknown variable '{name}'", pos)
    else:
        names = tuple(name for name, _ in seen_order)
    index = {name: i for i, name in enumerate(names)}
    n = len(names)
    acc = {}
    for coeff, exps in terms:
        expo = [0] * n
        for name, e in exps.items():
            expo[index[name]] += e
        key = tuple(expo)
        acc[key] = acc.get(key, Fraction(0)) + coeff
    return Poly(names, acc)


def _scan(text):
    i = 0
    n = len(text)
    terms = []
    seen = {}
    seen_order = []

    def skip_ws(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    def scan_nat(i):
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            raise ParseError("expected a number", start)
        return int(text[start:i]), i

    def scan_var(i):
        start = i
        i += 1
        while i < n and (text[i].isalnum() or text[i] == "_"):
            i += 1
        return text[start:i], i

    i = skip_ws(i)
    if i == n:
        raise ParseError("empty input", i)
    sign = 1
    if text[i] in "+-":
        if text[i] == "-":
            sign = -1
        i = skip_ws(i + 1)

    while True:
        # one term
        if i == n:
            raise ParseError("expected a term", i)
        coeff = Fraction(1)
        have_coeff = False
        if text[i].isdigit():
            num, i = scan_nat(i)
            j = skip_ws(i)
            if j < n and text[j] == "/":
                dstart = skip_ws(j + 1)
                den, i = scan_nat(dstart)
                if den == 0:
                    raise ParseError("zero denominator", dstart)
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            have_coeff = True
            i = skip_ws(i)
            if i < n and text[i] == "*":
                i = skip_ws(i + 1)
                if i == n or not text[i].isalpha():
                    raise ParseError("expected a variable after '*'", i)
        exps = {}
        have_factor = False
        while i < n and (text[i].isalpha()):
            vstart = i
            name, i = scan_var(i)
            e = 1
            j = skip_ws(i)
            if j < n and text[j] == "^":
                e, i = scan_nat(skip_ws(j + 1))
            if name not in seen:
                seen[name] = True
                seen_order.append((name, vstart))
            exps[name] = exps.get(name, 0) + e
            have_factor = True
            i = skip_ws(i)
            if i < n and text[i] == "*":
                i = skip_ws(i + 1)
                if i == n or not text[i].isalpha():
                    raise ParseError("expected a variable after '*'", i)
        if not have_factor and not have_coeff:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        terms.append((sign * coeff, exps))
        i = skip_ws(i)
        if i == n:
            break
        if text[i] == "+":
            sign = 1
        elif text[i] == "-":
            sign = -1
        else:
            raise ParseError(f"expected '+' or '-', found {text[i]!r}", i)
        i = skip_ws(i + 1)
    return terms, seen_order


def format_poly(f):
    """Canonical text: graded-lex descending terms, '*' between all factors,
    '^' only for exponents above 1, coefficients in lowest terms."""
    if not f.terms:
        return "0"
    pieces = []
    for mono, c in f.sorted_terms():
        factors = []
        for name, e in zip(f.var_names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        pieces.append(("-" if c < 0 else "+", body))
    sign0, body0 = pieces[0]
    out = [("-" + body0) if sign0 == "-" else body0]
    for sign, body in pieces[1:]:
        out.append(f" {sign} {body}")
    return "".join(out)
