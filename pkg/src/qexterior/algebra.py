"""The algebra k<x,y>/(x^2, xy+qyx, y^2) and its diagonal automorphisms.

Elements are coordinate vectors over the fixed basis ``(1, x, y, yx)``.  The
only nontrivial products of basis elements are ``y*x = yx`` and
``x*y = -q*yx``; everything of degree three or more vanishes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .fields import Field, Scalar, make_field

__all__ = [
    "ONE", "X", "Y", "YX", "BASIS_NAMES", "DEGREE", "WEIGHT",
    "AlgebraElement", "QuantumExteriorAlgebra", "basis_product", "multiply",
    "SignedPower", "ScalarValue", "AutParam", "DiagonalAutomorphism",
    "parse_aut_param", "generic_witness", "nakayama", "compose", "invert",
    "apply_automorphism", "automorphism_from_images", "frobenius_functional",
    "NotDegreePreservingError", "NotAutomorphismError",
]

ONE, X, Y, YX = 0, 1, 2, 3
BASIS_NAMES = ("1", "x", "y", "yx")
DEGREE = (0, 1, 1, 2)
# (#x, #y) bidegree; the relations and every diagonal automorphism respect it
WEIGHT = ((0, 0), (1, 0), (0, 1), (1, 1))

# basis_i * basis_j = sign * q^e * basis_k
_PRODUCTS = {(ONE, j): (j, 1, 0) for j in range(4)}
_PRODUCTS.update({(i, ONE): (i, 1, 0) for i in range(4)})
_PRODUCTS[(Y, X)] = (YX, 1, 0)
_PRODUCTS[(X, Y)] = (YX, -1, 1)


class NotDegreePreservingError(ValueError):
    pass


class NotAutomorphismError(ValueError):
    pass


@lru_cache(maxsize=None)
def _product_table(field: Field):
    table = {}
    for (i, j), (k, sign, e) in _PRODUCTS.items():
        table[(i, j)] = (k, field.q_power(e) * sign)
    return table


def basis_product(i: int, j: int, field: Field) -> tuple[int, Scalar] | None:
    """``basis_i * basis_j`` as ``(k, c)`` meaning ``c * basis_k``, or None if zero."""
    return _product_table(field).get((i, j))


class AlgebraElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords):
        coords = tuple(field(c) for c in coords)
        if len(coords) != 4:
            raise ValueError("an element has four coordinates (1, x, y, yx)")
        self.field = field
        self.coords = coords

    @property
    def c1(self):
        return self.coords[ONE]

    @property
    def cx(self):
        return self.coords[X]

    @property
    def cy(self):
        return self.coords[Y]

    @property
    def cyx(self):
        return self.coords[YX]

    @classmethod
    def basis(cls, field: Field, k: int) -> "AlgebraElement":
        coords = [field.zero] * 4
        coords[k] = field.one
        return cls(field, coords)

    def __add__(self, other):
        return AlgebraElement(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return AlgebraElement(self.field, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return AlgebraElement(self.field, [-a for a in self.coords])

    def scale(self, c) -> "AlgebraElement":
        c = self.field(c)
        return AlgebraElement(self.field, [c * a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def homogeneous_part(self, degree: int) -> "AlgebraElement":
        return AlgebraElement(self.field, [c if DEGREE[k] == degree else self.field.zero
                                           for k, c in enumerate(self.coords)])

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            cs = str(c)
            if k == ONE:
                terms.append(cs)
            elif cs == "1":
                terms.append(BASIS_NAMES[k])
            elif cs == "-1":
                terms.append("-" + BASIS_NAMES[k])
            else:
                terms.append(f"({cs})*{BASIS_NAMES[k]}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def __repr__(self):
        return f"AlgebraElement({self})"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Product in the algebra, expanded bilinearly over the basis."""
    field = a.field
    table = _product_table(field)
    out = [field.zero] * 4
    for i, ca in enumerate(a.coords):
        if not ca:
            continue
        for j, cb in enumerate(b.coords):
            if not cb:
                continue
            hit = table.get((i, j))
            if hit is not None:
                k, c = hit
                out[k] = out[k] + c * ca * cb
    return AlgebraElement(field, out)


_TERM = re.compile(r"^(?P<coef>.*?)\*?(?P<basis>yx|x|y)$")


class QuantumExteriorAlgebra:
    """Convenience handle bundling a field with the four basis elements.

    >>> A = QuantumExteriorAlgebra(make_field(0))
    >>> print(A.x * A.y)
    (-q)*yx
    >>> print(A.parse("2 + q*x - yx"))
    2+(q)*x-yx
    """

    def __init__(self, field: Field):
        self.field = field
        self.basis = tuple(AlgebraElement.basis(field, k) for k in range(4))
        self.one, self.x, self.y, self.yx = self.basis

    def element(self, c1=0, cx=0, cy=0, cyx=0) -> AlgebraElement:
        return AlgebraElement(self.field, (c1, cx, cy, cyx))

    def parse(self, text: str) -> AlgebraElement:
        """Parse ``c1 + cx*x + cy*y + cyx*yx`` (any subset of terms, any order)."""
        coords = [self.field.zero] * 4
        for term in _split_terms(text):
            m = _TERM.match(term)
            if m is None:
                coords[ONE] = coords[ONE] + self.field.parse(term)
                continue
            coef = m.group("coef").strip()
            if coef in ("", "+"):
                c = self.field.one
            elif coef == "-":
                c = -self.field.one
            else:
                c = self.field.parse(coef)
            k = BASIS_NAMES.index(m.group("basis"))
            coords[k] = coords[k] + c
        return AlgebraElement(self.field, coords)


def _split_terms(text: str) -> list[str]:
    terms, depth, start = [], 0, 0
    s = text.replace(" ", "")
    for pos, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and pos > start and s[pos - 1] not in "^*/":
            terms.append(s[start:pos])
            start = pos
    terms.append(s[start:])
    return [t for t in terms if t not in ("", "+")]


# automorphism parameters


@dataclass(frozen=True)
class SignedPower:
    """The parameter ``sign * q**exponent``, kept symbolic."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def realize(self, field: Field) -> Scalar:
        return field.q_power(self.exponent) * self.sign

    def inverse(self) -> "SignedPower":
        return SignedPower(self.sign, -self.exponent)

    def __str__(self):
        return f"{'-' if self.sign < 0 else ''}q^{self.exponent}"


@dataclass(frozen=True)
class ScalarValue:
    """An explicit nonzero scalar parameter."""

    value: Scalar

    def __post_init__(self):
        if not self.value:
            raise NotAutomorphismError("automorphism parameters must be nonzero")

    def realize(self, field: Field) -> Scalar:
        return self.value if self.value.field is field else field.convert(self.value)

    def inverse(self) -> "ScalarValue":
        return ScalarValue(self.value.inverse())

    def __str__(self):
        return str(self.value)


AutParam = Union[SignedPower, ScalarValue]

_SIGNED_POWER = re.compile(r"^\s*([+-]?)\s*q(?:\^([+-]?\d+))?\s*$")


def generic_witness(field: Field) -> Scalar:
    """A fixed scalar outside the signed powers of q.

    2 over Q(q), q+1 in positive characteristic; at a numeric q, the least
    integer >= 2 that is not a signed power of that q.
    """
    if field.characteristic:
        return field.q + 1
    if not field.numeric:
        return field(2)
    m = 2
    while field.signed_power_form(field(m)) is not None:
        m += 1
    return field(m)


def parse_aut_param(text: str, field: Field | None = None) -> AutParam:
    """``[+|-]q^<int>`` (symbolic), ``generic``, or a scalar literal."""
    m = _SIGNED_POWER.match(text)
    if m:
        return SignedPower(-1 if m.group(1) == "-" else 1, int(m.group(2) or 1))
    field = field or make_field(0)
    if text.strip() == "generic":
        return ScalarValue(generic_witness(field))
    return ScalarValue(field.parse(text))


def _mul_params(a: AutParam, b: AutParam) -> AutParam:
    if isinstance(a, SignedPower) and isinstance(b, SignedPower):
        return SignedPower(a.sign * b.sign, a.exponent + b.exponent)
    field = a.value.field if isinstance(a, ScalarValue) else b.value.field
    return ScalarValue(a.realize(field) * b.realize(field))


@dataclass(frozen=True)
class DiagonalAutomorphism:
    """The automorphism ``x -> alpha*x, y -> beta*y``.

    Every degree preserving automorphism has this form.
    """

    alpha: AutParam
    beta: AutParam

    @classmethod
    def identity(cls) -> "DiagonalAutomorphism":
        return cls(SignedPower(1, 0), SignedPower(1, 0))

    @classmethod
    def parse(cls, alpha: str, beta: str, field: Field | None = None) -> "DiagonalAutomorphism":
        return cls(parse_aut_param(alpha, field), parse_aut_param(beta, field))

    @classmethod
    def from_scalars(cls, alpha: Scalar, beta: Scalar) -> "DiagonalAutomorphism":
        return cls(ScalarValue(alpha), ScalarValue(beta))

    @property
    def symbolic(self) -> bool:
        return isinstance(self.alpha, SignedPower) and isinstance(self.beta, SignedPower)

    def realize(self, field: Field) -> tuple[Scalar, Scalar]:
        return self.alpha.realize(field), self.beta.realize(field)

    def compose(self, other: "DiagonalAutomorphism") -> "DiagonalAutomorphism":
        return DiagonalAutomorphism(_mul_params(self.alpha, other.alpha),
                                    _mul_params(self.beta, other.beta))

    def inverse(self) -> "DiagonalAutomorphism":
        return DiagonalAutomorphism(self.alpha.inverse(), self.beta.inverse())

    def __call__(self, a: AlgebraElement) -> AlgebraElement:
        return apply_automorphism(self, a)

    def equals(self, other: "DiagonalAutomorphism", field: Field) -> bool:
        return self.realize(field) == other.realize(field)

    def __str__(self):
        return f"(x -> {self.alpha}*x, y -> {self.beta}*y)"


def nakayama() -> DiagonalAutomorphism:
    """``x -> -q^-1 x, y -> -q y``: the Nakayama automorphism for the functional below."""
    return DiagonalAutomorphism(SignedPower(-1, -1), SignedPower(-1, 1))


def compose(psi: DiagonalAutomorphism, chi: DiagonalAutomorphism) -> DiagonalAutomorphism:
    return psi.compose(chi)


def invert(psi: DiagonalAutomorphism) -> DiagonalAutomorphism:
    return psi.inverse()


def apply_automorphism(psi: DiagonalAutomorphism, a: AlgebraElement) -> AlgebraElement:
    alpha, beta = psi.realize(a.field)
    c1, cx, cy, cyx = a.coords
    return AlgebraElement(a.field, (c1, alpha * cx, beta * cy, alpha * beta * cyx))


def automorphism_from_images(img_x: AlgebraElement, img_y: AlgebraElement) -> DiagonalAutomorphism:
    """Recover the automorphism with ``x -> img_x``, ``y -> img_y``.

    Raises NotDegreePreservingError if an image has a component of degree 0
    or 2, and NotAutomorphismError unless the images are ``alpha*x`` and
    ``beta*y`` with both scalars nonzero (a mixed image such as ``x -> y``
    squares the relations onto something that misses ``x`` or ``y``).
    """
    for img in (img_x, img_y):
        if img.c1 or img.cyx:
            raise NotDegreePreservingError(f"{img} is not homogeneous of degree 1")
    a1, a2 = img_x.cx, img_x.cy
    b1, b2 = img_y.cx, img_y.cy
    if a2 or b1:
        raise NotAutomorphismError("x must map into k*x and y into k*y")
    if not a1 or not b2:
        raise NotAutomorphismError("diagonal coefficients must be nonzero")
    return DiagonalAutomorphism(ScalarValue(a1), ScalarValue(b2))


def frobenius_functional(a: AlgebraElement) -> Scalar:
    """The yx-coordinate; this functional makes the algebra Frobenius."""
    return a.cyx
