"""Exact coefficient fields: Q, prime fields, and function fields in q.

A field is described by a :class:`FieldDescriptor` and realized with
:func:`make_field`.  Elements are :class:`Scalar` objects kept in a canonical
reduced form, so ``==`` is field equality.

>>> K = make_field(FieldDescriptor(0))
>>> q = K.q
>>> (q + 1) / q * (q / (q + 1)) == K.one
True
>>> K.signed_power_form(-q**3)
(-1, 3)
>>> str(K.parse("(q+1)/(q-1)"))
'(q+1)/(q-1)'

The default is ``q`` transcendental.  A numeric mode (``q`` a rational value
other than 0, 1, -1) exists for specialized computations in characteristic 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from flint import fmpq, fmpq_poly, nmod, nmod_poly
from sympy import isprime

__all__ = [
    "FieldDescriptor",
    "Field",
    "Scalar",
    "make_field",
    "FieldError",
    "RootOfUnityError",
    "InconclusiveError",
    "ParseError",
    "DEFAULT_SEARCH_BOUND",
]

DEFAULT_SEARCH_BOUND = 64


class FieldError(ValueError):
    """Invalid field description."""


class RootOfUnityError(FieldError):
    """The requested numeric q is a root of unity."""


class InconclusiveError(ArithmeticError):
    """Membership in the signed powers of q could not be decided within the bound."""


class ParseError(ValueError):
    """Malformed scalar text."""


@dataclass(frozen=True)
class FieldDescriptor:
    """Characteristic plus the mode of ``q``.

    ``q=None`` means ``q`` is an indeterminate; otherwise ``q`` is the given
    rational number (characteristic 0 only).
    """

    characteristic: int = 0
    q: Fraction | None = None

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p > 0 and not isprime(p)) or (p == 1):
            raise FieldError(f"characteristic must be 0 or a prime, got {p}")
        if self.q is not None:
            if p != 0:
                raise FieldError("numeric q requires characteristic 0; every nonzero "
                                 "element of a prime field is a root of unity")
            q = Fraction(self.q)
            object.__setattr__(self, "q", q)
            if q in (0, 1, -1):
                raise RootOfUnityError(f"q = {q} is zero or a root of unity")

    @property
    def transcendental(self) -> bool:
        return self.q is None

    def to_json(self) -> dict:
        if self.q is None:
            qv: object = "transcendental"
        elif self.q.denominator == 1:
            qv = self.q.numerator
        else:
            qv = str(self.q)
        return {"characteristic": self.characteristic, "q": qv}

    @classmethod
    def from_json(cls, data: dict) -> "FieldDescriptor":
        qv = data.get("q", "transcendental")
        return cls(int(data["characteristic"]), None if qv == "transcendental" else Fraction(qv))

    def __str__(self):
        p = self.characteristic
        base = "Q" if p == 0 else f"F{p}"
        return f"{base}(q)" if self.q is None else f"{base}[q={self.q}]"


class Scalar:
    """An element of a :class:`Field`, stored as a reduced fraction ``num/den``.

    Numerator and denominator are flint polynomials (function field modes) or
    ``fmpq`` values with ``den == 1`` (numeric mode).  The denominator is monic
    and coprime to the numerator; zero is ``0/1``.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field: "Field", num, den):
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise TypeError(f"mixing scalars of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        if f.numeric:
            return Scalar(f, self.num + other.num, f._one_raw)
        if self.den == other.den:
            return f._reduce(self.num + other.num, self.den)
        return f._reduce(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, -self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        if f.numeric:
            return Scalar(f, self.num * other.num, f._one_raw)
        if not self.num or not other.num:
            return f.zero
        return f._reduce(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        f = self.field
        if f.numeric:
            return Scalar(f, 1 / self.num, f._one_raw)
        return f._reduce(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        f = self.field
        if f.numeric:
            return Scalar(f, self.num ** k, f._one_raw)
        return Scalar(f, self.num ** k, self.den ** k)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field is other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((str(self.num), str(self.den)))

    def size(self) -> int:
        """Rough representation size, used to prefer small pivots."""
        if self.field.numeric:
            return int(self.num.numer()).bit_length() + int(self.num.denom()).bit_length()
        return self.num.degree() + self.den.degree() + 2

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"Scalar({self.field.descriptor}, {self})"


_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|(.))")


class _Parser:
    # expr := term (('+'|'-') term)* ; term := unary (('*'|'/'|implicit) unary)*
    # unary := ('+'|'-') unary | power ; power := atom ('^' [sign] INT)?
    # atom := INT | 'q' | '(' expr ')'

    def __init__(self, field: "Field", text: str):
        self.field = field
        self.text = text
        self.tokens = []
        for m in _TOKEN.finditer(text):
            if m.group(1):
                self.tokens.append(("int", int(m.group(1))))
            elif m.group(2):
                self.tokens.append(("q", None))
            elif m.group(3) and not m.group(3).isspace():
                self.tokens.append(("op", m.group(3)))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, op=None):
        tok = self.peek()
        if op is not None and tok != ("op", op):
            raise ParseError(f"expected {op!r} in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> Scalar:
        if not self.tokens:
            raise ParseError("empty scalar")
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while True:
            tok = self.peek()
            if tok in (("op", "*"), ("op", "/")):
                self.take()
                rhs = self.unary()
                if tok[1] == "*":
                    value = value * rhs
                else:
                    if not rhs:
                        raise ZeroDivisionError(f"division by zero in {self.text!r}")
                    value = value / rhs
            elif tok[0] == "q" or tok == ("op", "(") or tok[0] == "int":
                value = value * self.unary()
            else:
                return value

    def unary(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() in (("op", "-"), ("op", "+")):
                sign = -1 if self.take()[1] == "-" else 1
            kind, k = self.take()
            if kind != "int":
                raise ParseError(f"integer exponent expected in {self.text!r}")
            if sign < 0 and not base:
                raise ZeroDivisionError("negative power of zero")
            base = base ** (sign * k)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return self.field(val)
        if kind == "q":
            return self.field.q
        if (kind, val) == ("op", "("):
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


class Field:
    """An immutable exact field context; create with :func:`make_field`."""

    def __init__(self, descriptor: FieldDescriptor, search_bound: int = DEFAULT_SEARCH_BOUND):
        self.descriptor = descriptor
        self.search_bound = search_bound
        p = descriptor.characteristic
        self.numeric = descriptor.q is not None
        if self.numeric:
            self._one_raw = fmpq(1)
            self._zero_raw = fmpq(0)
            qv = descriptor.q
            self._q = Scalar(self, fmpq(qv.numerator, qv.denominator), self._one_raw)
        elif p == 0:
            self._one_raw = fmpq_poly([1])
            self._zero_raw = fmpq_poly([])
            self._q = Scalar(self, fmpq_poly([0, 1]), self._one_raw)
        else:
            self._one_raw = nmod_poly([1], p)
            self._zero_raw = nmod_poly([], p)
            self._q = Scalar(self, nmod_poly([0, 1], p), self._one_raw)
        self.zero = Scalar(self, self._zero_raw, self._one_raw)
        self.one = Scalar(self, self._one_raw, self._one_raw)

    @property
    def characteristic(self) -> int:
        return self.descriptor.characteristic

    @property
    def transcendental(self) -> bool:
        return not self.numeric

    @property
    def q(self) -> Scalar:
        return self._q

    def __repr__(self):
        return f"Field({self.descriptor})"

    def __str__(self):
        return str(self.descriptor)

    def __reduce__(self):
        return (make_field, (self.descriptor,))

    # construction

    def __call__(self, value) -> Scalar:
        if isinstance(value, Scalar):
            return value if value.field is self else self.convert(value)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot make a scalar from {value!r}")
        value = Fraction(value)
        p = self.characteristic
        if p:
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in characteristic {p}")
            c = value.numerator * pow(value.denominator, -1, p) % p
            return Scalar(self, nmod_poly([c], p), self._one_raw)
        c = fmpq(value.numerator, value.denominator)
        if self.numeric:
            return Scalar(self, c, self._one_raw)
        return Scalar(self, fmpq_poly([c]), self._one_raw)

    def parse(self, text: str) -> Scalar:
        return _Parser(self, text).parse()

    def convert(self, a: Scalar) -> Scalar:
        """Image of a scalar from another field, via its text form.

        Going from Q(q) to a numeric field substitutes the value of q.
        """
        return self.parse(a.field.format(a))

    def q_power(self, s: int) -> Scalar:
        return self._q ** s

    def _reduce(self, num, den) -> Scalar:
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num / g
                den = den / g
        lc = den.leading_coefficient()
        if lc != 1:
            inv = lc ** -1 if self.characteristic else 1 / lc
            num = num * inv
            den = den * inv
        return Scalar(self, num, den)

    def ring_exquo(self, a, b):
        """Exact quotient of raw numerators (used by fraction-free elimination)."""
        return a / b

    # Sigma membership

    def signed_power_form(self, a: Scalar) -> tuple[int, int] | None:
        """Return ``(sign, s)`` with ``a == sign * q**s``, or ``None``.

        In characteristic 2 the sign is always reported as ``+1``.
        """
        if not a:
            raise ZeroDivisionError("zero is not a signed power")
        p = self.characteristic
        if self.numeric:
            return self._numeric_signed_power(a)
        nz_den = [k for k, c in enumerate(a.den.coeffs()) if c != 0]
        nz_num = [(k, c) for k, c in enumerate(a.num.coeffs()) if c != 0]
        if len(nz_den) != 1 or len(nz_num) != 1:
            return None
        k, c = nz_num[0]
        s = k - nz_den[0]
        if p:
            c = int(c)
            if c == 1:
                return (1, s)
            if c == p - 1:
                return (-1 if p != 2 else 1, s)
            return None
        if c == 1:
            return (1, s)
        if c == -1:
            return (-1, s)
        return None

    def _numeric_signed_power(self, a: Scalar):
        v = Fraction(int(a.num.numer()), int(a.num.denom()))
        c = self.descriptor.q
        hv = max(abs(v.numerator), v.denominator)
        hc = max(abs(c.numerator), c.denominator)
        # the height of c**s is hc**|s|, so |s| is pinned down by the height of v
        k, h = 0, 1
        while h < hv:
            if k >= self.search_bound:
                raise InconclusiveError(f"{v} not decided within |s| <= {self.search_bound}")
            h *= hc
            k += 1
        if h != hv:
            return None
        for s in ((k, -k) if k else (0,)):
            ratio = v / c ** s
            if ratio == 1:
                return (1, s)
            if ratio == -1:
                return (-1, s)
        return None

    # text form

    def format(self, a: Scalar) -> str:
        if self.numeric:
            return str(Fraction(int(a.num.numer()), int(a.num.denom())))
        num = [_coeff(c, self.characteristic) for c in a.num.coeffs()]
        den = [_coeff(c, self.characteristic) for c in a.den.coeffs()]
        if not self.characteristic:
            scale = lcm(*(c.denominator for c in num + den))
            num = [int(c * scale) for c in num]
            den = [int(c * scale) for c in den]
            g = gcd(*num, *den)
            num = [c // g for c in num]
            den = [c // g for c in den]
            if den[-1] < 0:
                num = [-c for c in num]
                den = [-c for c in den]
        ns = _poly_str(num)
        if den == [1]:
            return ns
        ds = _poly_str(den)
        if sum(1 for c in num if c) > 1:
            ns = f"({ns})"
        if not re.fullmatch(r"\d+|q(\^\d+)?", ds):
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def random_scalar(self, rng, degree: int = 2, height: int = 3) -> Scalar:
        """A random element, for property tests and sampling."""
        def poly():
            return sum((self(rng.randint(-height, height)) * self._q ** k
                        for k in range(degree + 1)), self.zero) if not self.numeric else \
                self(Fraction(rng.randint(-height, height)))
        num = poly()
        den = poly()
        while not den:
            den = poly()
        return num / den


def _coeff(c, p):
    if p:
        r = int(c)
        return r - p if r > p // 2 and p > 2 else r
    return Fraction(int(c.numer()), int(c.denom()))


def _poly_str(coeffs) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


@lru_cache(maxsize=None)
def _cached_field(descriptor: FieldDescriptor, search_bound: int) -> Field:
    return Field(descriptor, search_bound)


def make_field(descriptor: FieldDescriptor | int = 0, search_bound: int = DEFAULT_SEARCH_BOUND) -> Field:
    """Return the (shared, immutable) field for ``descriptor``.

    An integer is shorthand for that characteristic with ``q`` transcendental.
    """
    if isinstance(descriptor, int):
        descriptor = FieldDescriptor(descriptor)
    return _cached_field(descriptor, search_bound)
