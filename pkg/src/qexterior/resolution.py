"""The minimal bimodule resolution (P, delta) of the algebra.

``P^n`` is free over the enveloping algebra on generators ``f~^n_i``
(``i = 0..n``), so as a vector space it has basis ``u * f~^n_i * v`` with
``u, v`` running over ``(1, x, y, yx)``: dimension ``16(n+1)``.  Coordinates
are generator-major, then left basis element, then right basis element.

The generators themselves live in the n-fold tensor power and satisfy

    f^n_i = f^{n-1}_{i-1} (x) y + q^i f^{n-1}_i (x) x,

with ``f^0_0 = 1``, ``f^1_0 = x``, ``f^1_1 = y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .algebra import ONE, X, Y, basis_product
from .fields import Field, Scalar, make_field
from .linalg import ExactMatrix, multiply_matrices, rank

__all__ = [
    "TensorElement", "build_generator", "delta_generator_image", "delta_k_matrix",
    "augmentation_matrix", "layer_index", "layer_dim", "verify_resolution",
    "ResolutionReport",
]


class TensorElement(dict):
    """Sparse element of the n-fold tensor power in letters ``'x'``, ``'y'``.

    Keys are words (strings of length n), values nonzero scalars.
    """

    def __init__(self, arity: int, terms=None):
        super().__init__()
        self.arity = arity
        for word, c in (terms or {}).items():
            if len(word) != arity:
                raise ValueError(f"word {word!r} does not have length {arity}")
            if c:
                self[word] = c


@lru_cache(maxsize=None)
def _generator(n: int, i: int, field: Field) -> tuple:
    if i < 0 or i > n:
        return ()
    if n == 0:
        return (("", field.one),)
    terms: dict[str, Scalar] = {}
    for word, c in _generator(n - 1, i - 1, field):
        terms[word + "y"] = terms.get(word + "y", field.zero) + c
    qi = field.q_power(i)
    for word, c in _generator(n - 1, i, field):
        terms[word + "x"] = terms.get(word + "x", field.zero) + qi * c
    return tuple(sorted((w, c) for w, c in terms.items() if c))


def build_generator(n: int, i: int, field: Field | None = None) -> TensorElement:
    """``f^n_i`` as a sparse tensor; its support is the words with ``i`` letters y."""
    if not 0 <= i <= n:
        raise IndexError(f"generator index {i} outside 0..{n}")
    field = field or make_field(0)
    return TensorElement(n, dict(_generator(n, i, field)))


def layer_dim(n: int) -> int:
    return 16 * (n + 1)


def layer_index(i: int, u: int, v: int) -> int:
    return 16 * i + 4 * u + v


def delta_generator_image(n: int, i: int, field: Field | None = None) -> dict[tuple[int, int, int], Scalar]:
    """``delta_n(f~^n_i)`` as ``{(j, u, v): c}`` meaning ``c * u f~^{n-1}_j v``.

    Terms on the nonexistent generators ``f~^{n-1}_{-1}`` and ``f~^{n-1}_n``
    are dropped.
    """
    if n < 1 or not 0 <= i <= n:
        raise IndexError(f"no generator f~^{n}_{i} with a boundary")
    field = field or make_field(0)
    sign = 1 if n % 2 == 0 else -1
    image: dict[tuple[int, int, int], Scalar] = {}
    if i <= n - 1:
        image[(i, X, ONE)] = field.one
        image[(i, ONE, X)] = field.q_power(i) * sign
    if i >= 1:
        image[(i - 1, Y, ONE)] = field.q_power(n - i)
        image[(i - 1, ONE, Y)] = field(sign)
    return image


@lru_cache(maxsize=None)
def delta_k_matrix(n: int, field: Field | None = None) -> ExactMatrix:
    """``delta_n`` as a ``16n x 16(n+1)`` matrix over the field."""
    if n < 1:
        raise ValueError("delta_n is defined for n >= 1")
    field = field or make_field(0)
    m = ExactMatrix(field, layer_dim(n - 1), layer_dim(n))
    for i in range(n + 1):
        image = delta_generator_image(n, i, field)
        for u in range(4):
            for v in range(4):
                col = layer_index(i, u, v)
                for (j, a, b), c in image.items():
                    left = basis_product(u, a, field)
                    right = basis_product(b, v, field)
                    if left is None or right is None:
                        continue
                    m.add(layer_index(j, left[0], right[0]), col, c * left[1] * right[1])
    return m


def augmentation_matrix(field: Field | None = None) -> ExactMatrix:
    """Multiplication ``P^0 = A (x) A -> A``, ``u (x) v -> uv``."""
    field = field or make_field(0)
    m = ExactMatrix(field, 4, 16)
    for u in range(4):
        for v in range(4):
            hit = basis_product(u, v, field)
            if hit is not None:
                m.add(hit[0], layer_index(0, u, v), hit[1])
    return m


@dataclass
class ResolutionReport:
    max_degree: int
    complex_ok: dict[int, bool] = dc_field(default_factory=dict)
    exact_ok: dict[int, bool] = dc_field(default_factory=dict)
    ranks: dict[int, int] = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.complex_ok.values()) and all(self.exact_ok.values())

    def to_json(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "complex_ok": {str(n): v for n, v in sorted(self.complex_ok.items())},
            "exact_ok": {str(n): v for n, v in sorted(self.exact_ok.items())},
            "ranks": {str(n): v for n, v in sorted(self.ranks.items())},
        }


def verify_resolution(max_degree: int, exact_degree: int | None = None,
                      field: Field | None = None) -> ResolutionReport:
    """Check ``delta_n delta_{n+1} = 0`` and exactness at ``P^n``.

    Degree 0 is checked against the augmentation: ``mu delta_1 = 0`` and
    ``rank delta_1 = dim ker mu = 12``.  Exactness is checked for
    ``n <= exact_degree`` (default ``max_degree``).
    """
    field = field or make_field(0)
    exact_degree = max_degree if exact_degree is None else exact_degree
    top = max(max_degree, exact_degree) + 1
    report = ResolutionReport(max_degree)
    mu = augmentation_matrix(field)
    deltas = {n: delta_k_matrix(n, field) for n in range(1, top + 1)}
    report.ranks = {n: rank(d) for n, d in deltas.items()}
    report.ranks[0] = rank(mu)
    report.complex_ok[0] = multiply_matrices(mu, deltas[1]).is_zero()
    for n in range(1, max_degree + 1):
        report.complex_ok[n] = multiply_matrices(deltas[n], deltas[n + 1]).is_zero()
    report.exact_ok[0] = report.ranks[0] == 4 and report.ranks[1] == mu.cols - report.ranks[0]
    for n in range(1, exact_degree + 1):
        report.exact_ok[n] = layer_dim(n) - report.ranks[n] == report.ranks[n + 1]
    return report
