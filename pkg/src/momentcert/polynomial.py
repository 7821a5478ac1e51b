"""Exact sparse multivariate polynomials over rational coefficients.

Polynomials live on variables x1..xN and are the carrier for propensity
functions, drift vectors and the symbolic constraint systems used by the
certificate checkers.  Coefficients are `fractions.Fraction`, so every
operation here is exact; floating point never enters this module.

A monomial is represented by its exponent tuple, e.g. ``(2, 1)`` is
``x1^2*x2`` in a two-variable ring.  Terms are stored in a dict mapping
exponent tuples to nonzero coefficients (canonical form: no zero
coefficient is ever stored, so equality is dict equality).
"""

from __future__ import annotations

from fractions import Fraction


def total_degree(exps):
    return sum(exps)


def degree_in(exps, subset):
    """Degree of a monomial restricted to the given variable indices."""
    return sum(exps[i] for i in subset)


def grlex_key(exps):
    """Graded lexicographic sort key (degree first, then lex)."""
    return (total_degree(exps), exps)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        canonical = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(
                    f"monomial {exps} has {len(exps)} exponents, expected {nvars}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in monomial {exps}")
            coef = Fraction(coef)
            if coef:
                canonical[exps] = canonical.get(exps, Fraction(0)) + coef
                if not canonical[exps]:
                    del canonical[exps]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars, index):
        """The polynomial x_{index+1} (0-based index)."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for nvars={nvars}")
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, nvars, exps, coef=1):
        return cls(nvars, {tuple(exps): Fraction(coef)})

    # -- ring operations ----------------------------------------------

    def _check_same_ring(self, other):
        if self.nvars != other.nvars:
            raise ValueError(
                f"dimension mismatch: {self.nvars} vs {other.nvars} variables"
            )

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        self._check_same_ring(other)
        terms = dict(self.terms)
        for exps, coef in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coef
        return Polynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_same_ring(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.nvars, terms)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        return Polynomial(self.nvars, {e: k * c for e, k in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    # -- queries ------------------------------------------------------

    def evaluate(self, x):
        """Exact value at a lattice point (any integer/rational sequence)."""
        if len(x) != self.nvars:
            raise ValueError(f"point has {len(x)} coordinates, expected {self.nvars}")
        total = Fraction(0)
        for exps, coef in self.terms.items():
            v = coef
            for xi, e in zip(x, exps):
                if e:
                    v *= Fraction(xi) ** e
            total += v
        return total

    def degree(self):
        """Total degree; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(total_degree(e) for e in self.terms)

    def degree_in(self, subset):
        """Max degree over monomials restricted to a variable index set."""
        subset = sorted(set(subset))
        for i in subset:
            if not 0 <= i < self.nvars:
                raise ValueError(f"variable index {i} out of range")
        if not self.terms:
            return 0
        return max(degree_in(e, subset) for e in self.terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self):
        """Terms in descending graded-lex order (deterministic rendering)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # -- division by linear factors ------------------------------------

    def divide_by_linear(self, var, c):
        """Synthetic division by (x_var - c).

        Returns (quotient, remainder) with remainder a polynomial in the
        other variables (degree 0 in x_var), such that
        self == quotient * (x_var - c) + remainder, exactly.
        """
        if not 0 <= var < self.nvars:
            raise ValueError(f"variable index {var} out of range")
        c = Fraction(c)
        # coefficients of self viewed as a univariate polynomial in x_var
        by_deg = {}
        for exps, coef in self.terms.items():
            d = exps[var]
            rest = exps[:var] + (0,) + exps[var + 1:]
            by_deg.setdefault(d, {})[rest] = coef
        if not by_deg:
            return Polynomial.zero(self.nvars), Polynomial.zero(self.nvars)
        top = max(by_deg)
        # synthetic division: b_{k} = a_{k+1} + c * b_{k+1}
        quotient_terms = {}
        carry = {}
        for d in range(top, 0, -1):
            a_d = by_deg.get(d, {})
            b = dict(carry)
            for exps, coef in a_d.items():
                b[exps] = b.get(exps, Fraction(0)) + coef
            for exps, coef in b.items():
                if coef:
                    e = exps[:var] + (d - 1,) + exps[var + 1:]
                    quotient_terms[e] = coef
            carry = {e: c * k for e, k in b.items() if k}
        remainder_terms = dict(by_deg.get(0, {}))
        for exps, coef in carry.items():
            remainder_terms[exps] = remainder_terms.get(exps, Fraction(0)) + coef
        return (
            Polynomial(self.nvars, quotient_terms),
            Polynomial(self.nvars, remainder_terms),
        )

    def divisible_by_falling_factorial(self, var, order):
        """True iff x_var*(x_var-1)*...*(x_var-order+1) divides self.

        Decided by repeated exact synthetic division, never by sampling:
        a zero remainder at each step certifies vanishing on the
        hyperplane x_var = k.
        """
        if order < 1:
            raise ValueError("order must be >= 1")
        p = self
        for k in range(order):
            p, rem = p.divide_by_linear(var, k)
            if not rem.is_zero():
                return False
        return True

    # -- rendering ------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, coef in self.sorted_terms():
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            mag = abs(coef)
            if factors:
                body = "*".join(factors)
                if mag != 1:
                    body = f"{mag}*{body}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(body if coef > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self})"


def falling_factorial(nvars, var, order):
    """x_var*(x_var-1)*...*(x_var-order+1) as a Polynomial; 1 for order 0."""
    p = Polynomial.constant(nvars, 1)
    x = Polynomial.variable(nvars, var)
    for k in range(order):
        p = p * (x - k)
    return p


class PolynomialParseError(ValueError):
    pass


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            tokens.append((ch, ch))
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
        elif ch == "/":
            tokens.append(("/", "/"))
            i += 1
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        else:
            raise PolynomialParseError(f"unexpected character {ch!r}")
    tokens.append(("end", ""))
    return tokens


def parse_polynomial(text, nvars, var_names=None):
    """Parse an expression like "x1^2 - 2*x1*x2 + 3/2" into a Polynomial.

    Variables are x1..xN; additional names (e.g. species names) can be
    mapped to indices via var_names.  Supports +, -, *, ^, parentheses
    and rational literals p/q.  Unknown names raise PolynomialParseError.
    """
    names = dict(var_names or {})
    for i in range(nvars):
        names.setdefault(f"x{i + 1}", i)
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]]

    def advance():
        tok = tokens[pos[0]]
        pos[0] += 1
        return tok

    def parse_int():
        kind, val = advance()
        if kind != "int":
            raise PolynomialParseError(f"expected integer, got {val!r}")
        return int(val)

    def parse_atom():
        kind, val = peek()
        if kind == "int":
            advance()
            num = int(val)
            if peek()[0] == "/":
                advance()
                den = parse_int()
                if den == 0:
                    raise PolynomialParseError("zero denominator")
                return Polynomial.constant(nvars, Fraction(num, den))
            return Polynomial.constant(nvars, num)
        if kind == "name":
            advance()
            if val not in names:
                raise PolynomialParseError(f"unknown variable {val!r}")
            return Polynomial.variable(nvars, names[val])
        if kind == "(":
            advance()
            p = parse_expr()
            if advance()[0] != ")":
                raise PolynomialParseError("missing closing parenthesis")
            return p
        if kind == "-":
            advance()
            return -parse_atom()
        raise PolynomialParseError(f"unexpected token {val!r}")

    def parse_power():
        base = parse_atom()
        if peek()[0] == "^":
            advance()
            exp = parse_int()
            result = Polynomial.constant(nvars, 1)
            for _ in range(exp):
                result = result * base
            return result
        return base

    def parse_term():
        p = parse_power()
        while peek()[0] == "*":
            advance()
            p = p * parse_power()
        return p

    def parse_expr():
        kind, _ = peek()
        negate = False
        if kind in ("+", "-"):
            advance()
            negate = kind == "-"
        p = parse_term()
        if negate:
            p = -p
        while peek()[0] in ("+", "-"):
            kind, _ = advance()
            q = parse_term()
            p = p - q if kind == "-" else p + q
        return p

    p = parse_expr()
    if peek()[0] != "end":
        raise PolynomialParseError(f"trailing input at token {peek()[1]!r}")
    return p
