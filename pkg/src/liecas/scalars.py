"""Exact scalars: rationals, sparse multivariate polynomials, rational functions.

A polynomial is a mapping from exponent tuples to nonzero Fraction
coefficients over an ordered tuple of variable names.  The term order used
everywhere (printing, leading terms, pivot selection) is graded
lexicographic.  A rational function keeps a numerator/denominator pair of
polynomials; normalization strips the common monomial factor, folds constant
denominators into the numerator, makes the denominator integer-primitive
with positive leading coefficient, and reduces a/b to a polynomial when b
divides a exactly.  Full multivariate gcd is deliberately not required:
equality of rational functions is decided by cross-multiplication, and rank
or kernel computations clear denominators and run fraction-free.

Basis indices in the rest of the package are 1-based (e1, e2, ...); only raw
matrix/vector containers are 0-based.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Union

Rational = Fraction

Exponent = tuple[int, ...]

#: Reserved indeterminate used by char_poly; rejected in user input.
CHARPOLY_VAR = "X_charpoly"


class ScalarError(ValueError):
    """Raised for malformed scalar arithmetic (zero denominators, bad contexts)."""


def _merge_vars(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    if a == b:
        return a
    return tuple(sorted(set(a) | set(b)))


def _grlex_key(exp: Exponent) -> tuple:
    return (sum(exp), exp)


class MPoly:
    """Sparse multivariate polynomial with Fraction coefficients.

    ``vars`` is a sorted tuple of variable names; ``terms`` maps exponent
    tuples (one entry per variable) to nonzero coefficients.
    """

    __slots__ = ("vars", "terms", "_red")

    def __init__(self, vars: Iterable[str], terms: Mapping[Exponent, Fraction]):
        vs = tuple(vars)
        if list(vs) != sorted(vs) or len(set(vs)) != len(vs):
            raise ScalarError(f"variable context must be sorted and duplicate-free: {vs}")
        clean: dict[Exponent, Fraction] = {}
        for exp, c in terms.items():
            if len(exp) != len(vs):
                raise ScalarError(f"exponent {exp} does not match context {vs}")
            c = Fraction(c)
            if c != 0:
                clean[tuple(exp)] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_red", None)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("MPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(value, vars: Iterable[str] = ()) -> "MPoly":
        vs = tuple(sorted(set(vars)))
        c = Fraction(value)
        if c == 0:
            return MPoly(vs, {})
        return MPoly(vs, {(0,) * len(vs): c})

    @staticmethod
    def variable(name: str) -> "MPoly":
        return MPoly((name,), {(1,): Fraction(1)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def const_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_const():
            raise ScalarError(f"not a constant: {self}")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def leading(self) -> tuple[Exponent, Fraction]:
        """Graded-lex leading term (exponent, coefficient)."""
        if not self.terms:
            raise ScalarError("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def used_vars(self) -> tuple[str, ...]:
        used = [False] * len(self.vars)
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def _reduced(self):
        """Canonical (minimal-context, sorted) form for hashing and equality."""
        red = object.__getattribute__(self, "_red")
        if red is not None:
            return red
        keep = [i for i, v in enumerate(self.vars) if v in self.used_vars()]
        vs = tuple(self.vars[i] for i in keep)
        items = tuple(
            sorted(
                ((tuple(exp[i] for i in keep), c) for exp, c in self.terms.items()),
                key=lambda t: _grlex_key(t[0]),
            )
        )
        red = (vs, items)
        object.__setattr__(self, "_red", red)
        return red

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_const() and self.const_value() == other
        if isinstance(other, MPoly):
            return self._reduced() == other._reduced()
        if isinstance(other, RatFunc):
            return RatFunc.of(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._reduced())

    # -- context handling --------------------------------------------------

    def extend(self, vars: tuple[str, ...]) -> "MPoly":
        """Re-express on a larger (sorted) context."""
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        for v in self.vars:
            if v not in pos:
                raise ScalarError(f"context {vars} does not contain {v}")
        n = len(vars)
        terms: dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            new = [0] * n
            for v, e in zip(self.vars, exp):
                new[pos[v]] = e
            terms[tuple(new)] = c
        return MPoly(vars, terms)

    def _align(self, other: "MPoly") -> tuple["MPoly", "MPoly"]:
        if self.vars == other.vars:
            return self, other
        vs = _merge_vars(self.vars, other.vars)
        return self.extend(vs), other.extend(vs)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "MPoly":
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def _coerce(self, other) -> Union["MPoly", None]:
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other, self.vars)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return MPoly(a.vars, terms)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return MPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if not isinstance(n, int) or n < 0:
            raise ScalarError("MPoly power wants a nonnegative integer")
        out = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                raise ScalarError("division by zero")
            return MPoly(self.vars, {e: v / c for e, v in self.terms.items()})
        if isinstance(other, (MPoly, RatFunc)):
            return RatFunc.of(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        return RatFunc.of(other) / RatFunc.of(self)

    def exact_div(self, divisor: "MPoly") -> Union["MPoly", None]:
        """Exact polynomial quotient self/divisor, or None if not divisible."""
        if divisor.is_zero():
            raise ScalarError("division by zero polynomial")
        if self.is_zero():
            return MPoly(self.vars, {})
        a, d = self._align(divisor)
        if d.is_const():
            return a / d.const_value()
        dexp, dc = d.leading()
        quo: dict[Exponent, Fraction] = {}
        rem = a
        while not rem.is_zero():
            rexp, rc = rem.leading()
            qexp = tuple(r - s for r, s in zip(rexp, dexp))
            if any(e < 0 for e in qexp):
                return None
            qc = rc / dc
            quo[qexp] = qc
            rem = rem - MPoly(a.vars, {qexp: qc}) * d
        return MPoly(a.vars, quo)

    def content(self) -> Fraction:
        """Positive rational content (gcd of coefficients over Q); 0 for zero."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def monomial_gcd_exp(self) -> Exponent:
        """Exponentwise minimum over all terms (the common monomial factor)."""
        if not self.terms:
            return (0,) * len(self.vars)
        mins = None
        for exp in self.terms:
            mins = exp if mins is None else tuple(min(a, b) for a, b in zip(mins, exp))
        return mins

    def shift_down(self, shift: Exponent) -> "MPoly":
        return MPoly(
            self.vars,
            {tuple(e - s for e, s in zip(exp, shift)): c for exp, c in self.terms.items()},
        )

    def derivative(self, name: str) -> "MPoly":
        if name not in self.vars:
            return MPoly(self.vars, {})
        i = self.vars.index(name)
        terms: dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            if exp[i] == 0:
                continue
            new = list(exp)
            new[i] -= 1
            terms[tuple(new)] = c * exp[i]
        return MPoly(self.vars, terms)

    def coeff_of(self, name: str, power: int) -> "MPoly":
        """Coefficient of name**power, as a polynomial in the remaining variables."""
        if name not in self.vars:
            return self if power == 0 else MPoly(self.vars, {})
        i = self.vars.index(name)
        vs = self.vars[:i] + self.vars[i + 1:]
        terms: dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            if exp[i] == power:
                terms[exp[:i] + exp[i + 1:]] = c
        return MPoly(vs, terms)

    def subs(self, mapping: Mapping[str, "ScalarLike"]) -> "RatFunc":
        """Substitute values (scalars of any kind) for variables."""
        values = {k: RatFunc.of(v) for k, v in mapping.items()}
        keep = tuple(v for v in self.vars if v not in values)
        out = RatFunc.of(MPoly.const(0, keep))
        for exp, c in self.terms.items():
            term = RatFunc.of(MPoly.const(c, keep))
            for v, e in zip(self.vars, exp):
                if e == 0:
                    continue
                if v in values:
                    term = term * values[v] ** e
                else:
                    term = term * RatFunc.of(MPoly((v,), {(e,): Fraction(1)}))
            out = out + term
        return out

    def eval_rational(self, mapping: Mapping[str, Fraction]) -> Fraction:
        """Fast full evaluation at rational values."""
        out = Fraction(0)
        vals = [Fraction(mapping[v]) for v in self.vars]
        for exp, c in self.terms.items():
            t = c
            for val, e in zip(vals, exp):
                if e:
                    t *= val ** e
            out += t
        return out

    # -- printing ----------------------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def _monomial_str(self, exp: Exponent) -> str:
        parts = []
        for v, e in zip(self.vars, exp):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (exp, c) in enumerate(self._sorted_terms()):
            mono = self._monomial_str(exp)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if i == 0:
                if c > 0:
                    pieces.append(body)
                else:
                    # "-p^2" would reparse as (-p)^2, so keep the coefficient explicit
                    pieces.append(f"-{mag}*{mono}" if mono else f"-{mag}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"MPoly({self})"


class RatFunc:
    """Quotient of two MPoly values, normalized as described in the module docstring."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly):
        num, den = num._align(den)
        if den.is_zero():
            raise ScalarError("division by the zero polynomial")
        num, den = _normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def of(value: "ScalarLike", vars: Iterable[str] = ()) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, MPoly):
            return RatFunc(value, MPoly.const(1, value.vars))
        if isinstance(value, (int, Fraction)):
            p = MPoly.const(value, vars)
            return RatFunc(p, MPoly.const(1, p.vars))
        raise ScalarError(f"cannot interpret {value!r} as a scalar")

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_const() and self.den.const_value() == 1

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def as_mpoly(self) -> MPoly:
        if not self.is_poly():
            raise ScalarError(f"not a polynomial: {self}")
        return self.num

    def const_value(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    def leading_sign(self) -> int:
        """Sign of the numerator's graded-lex leading coefficient (0 for zero)."""
        if self.num.is_zero():
            return 0
        return 1 if self.num.leading()[1] > 0 else -1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, MPoly)):
            other = RatFunc.of(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    __hash__ = None  # representation is not canonical without full gcd

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> Union["RatFunc", None]:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, MPoly)):
            return RatFunc.of(other)
        return None

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ScalarError("division by zero")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ScalarError("zero has no inverse")
        return RatFunc(self.den, self.num)

    def __pow__(self, n: int) -> "RatFunc":
        if not isinstance(n, int):
            raise ScalarError("RatFunc power wants an integer")
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def subs(self, mapping: Mapping[str, "ScalarLike"]) -> "RatFunc":
        num = self.num.subs(mapping)
        den = self.den.subs(mapping)
        if den.is_zero():
            raise ScalarError(f"substitution makes the denominator {self.den} vanish")
        return num / den

    def eval_rational(self, mapping: Mapping[str, Fraction]) -> Fraction:
        den = self.den.eval_rational(mapping)
        if den == 0:
            raise ScalarError(f"denominator {self.den} vanishes at {mapping}")
        return self.num.eval_rational(mapping) / den

    def __str__(self) -> str:
        if self.is_poly():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


ScalarLike = Union[int, Fraction, MPoly, RatFunc]


def _normalize(num: MPoly, den: MPoly) -> tuple[MPoly, MPoly]:
    if num.is_zero():
        return MPoly(num.vars, {}), MPoly.const(1, num.vars)
    # strip the common monomial factor
    shift = tuple(
        min(a, b) for a, b in zip(num.monomial_gcd_exp(), den.monomial_gcd_exp())
    )
    if any(shift):
        num = num.shift_down(shift)
        den = den.shift_down(shift)
    if den.is_const():
        c = den.const_value()
        return num / c, MPoly.const(1, num.vars)
    # integer-primitive denominator with positive leading coefficient
    scale = den.content()
    if den.leading()[1] < 0:
        scale = -scale
    num = num / scale
    den = den / scale
    q = num.exact_div(den)
    if q is not None:
        return q, MPoly.const(1, num.vars)
    if not num.is_const():
        q = den.exact_div(num)
        if q is not None:
            return _normalize(MPoly.const(1, num.vars), q)
    return num, den


def var(name: str) -> MPoly:
    """Convenience constructor for a polynomial variable."""
    if name == CHARPOLY_VAR:
        raise ScalarError(f"{CHARPOLY_VAR} is reserved")
    return MPoly.variable(name)


def scalar(value: ScalarLike, vars: Iterable[str] = ()) -> RatFunc:
    """Coerce a value into a RatFunc."""
    return RatFunc.of(value, vars)


ZERO = scalar(0)
ONE = scalar(1)
