"""Normalized Hochschild (co)chains with twisted coefficients.

An independent route to the same dimensions: no resolution, just the
classical complexes over the augmentation ideal ``span{x, y, yx}``.

Cochains of degree n are maps from words ``a_1 ... a_n`` to the algebra,

    (d f)(a_1..a_{n+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.. a_i a_{i+1} ..)
                          + (-1)^{n+1} f(a_1..a_n) psi(a_{n+1}),

and chains of degree n are ``m (x) a_1 .. a_n`` with

    d(m (x) a) = m theta(a_1) (x) a_2.. + sum_i (-1)^i m (x) .. a_i a_{i+1} ..
                 + (-1)^n a_n m (x) a_1 .. a_{n-1}.

Basis vectors are indexed ``4 * word_index + k`` where words are ordered
lexicographically over the letters ``(x, y, yx)``.  Both complexes split by
(#x, #y)-weight, which keeps elimination cheap even over Q(q).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .algebra import ONE, X, Y, YX, DiagonalAutomorphism, basis_product
from .cochains import homology_source, homology_transfer
from .fields import Field, make_field
from .linalg import ExactMatrix, rank
from .report import DegreeRecord, DimensionReport

__all__ = [
    "LETTERS", "MAX_BAR_DEGREE", "DegreeTooLargeError", "words", "word_index",
    "bar_cochain_matrix", "bar_chain_matrix", "bar_cohomology_dims", "bar_homology_dims",
]

LETTERS = (X, Y, YX)
MAX_BAR_DEGREE = 6


class DegreeTooLargeError(ValueError):
    pass


def _check_words(length: int) -> None:
    # degree N needs words one letter longer than N
    if length > MAX_BAR_DEGREE + 1:
        raise DegreeTooLargeError(f"bar degree {length - 1} exceeds {MAX_BAR_DEGREE}")


@lru_cache(maxsize=None)
def words(n: int) -> tuple[tuple[int, ...], ...]:
    """All words of length n in the letters, in index order (3**n of them)."""
    return tuple(product(LETTERS, repeat=n))


@lru_cache(maxsize=None)
def _word_positions(n: int) -> dict[tuple[int, ...], int]:
    return {w: i for i, w in enumerate(words(n))}


def word_index(w: tuple[int, ...]) -> int:
    return _word_positions(len(w))[w]


def _reduced_product(a: int, b: int, field: Field):
    hit = basis_product(a, b, field)
    if hit is not None and hit[0] == ONE:
        raise AssertionError("product of augmentation-ideal letters landed in k*1")
    return hit


def _twist(psi: DiagonalAutomorphism, field: Field) -> dict[int, object]:
    alpha, beta = psi.realize(field)
    return {X: alpha, Y: beta, YX: alpha * beta}


def bar_cochain_matrix(psi: DiagonalAutomorphism, n: int, field: Field | None = None) -> ExactMatrix:
    """``d^n``: cochains of degree n to degree n+1, a ``4*3^(n+1) x 4*3^n`` matrix."""
    _check_words(n + 1)
    field = field or make_field(0)
    tw = _twist(psi, field)
    src = _word_positions(n)
    m = ExactMatrix(field, 4 * 3 ** (n + 1), 4 * 3 ** n)
    last_sign = 1 if (n + 1) % 2 == 0 else -1
    for ai, a in enumerate(words(n + 1)):
        row0 = 4 * ai
        head = 4 * src[a[1:]]
        for b in range(4):
            hit = basis_product(a[0], b, field)
            if hit is not None:
                m.add(row0 + hit[0], head + b, hit[1])
        for i in range(1, n + 1):
            hit = _reduced_product(a[i - 1], a[i], field)
            if hit is None:
                continue
            col0 = 4 * src[a[:i - 1] + (hit[0],) + a[i + 1:]]
            c = hit[1] if i % 2 == 0 else -hit[1]
            for b in range(4):
                m.add(row0 + b, col0 + b, c)
        tail = 4 * src[a[:n]]
        twist = tw[a[n]] * last_sign
        for b in range(4):
            hit = basis_product(b, a[n], field)
            if hit is not None:
                m.add(row0 + hit[0], tail + b, twist * hit[1])
    return m


def bar_chain_matrix(theta: DiagonalAutomorphism, n: int, field: Field | None = None) -> ExactMatrix:
    """Boundary from chains of degree n to degree n-1 (``n >= 1``)."""
    if n < 1:
        raise ValueError("boundary is defined for n >= 1")
    _check_words(n)
    field = field or make_field(0)
    tw = _twist(theta, field)
    dst = _word_positions(n - 1)
    m = ExactMatrix(field, 4 * 3 ** (n - 1), 4 * 3 ** n)
    end_sign = 1 if n % 2 == 0 else -1
    for wi, w in enumerate(words(n)):
        col0 = 4 * wi
        head = 4 * dst[w[1:]]
        tail = 4 * dst[w[:n - 1]]
        for b in range(4):
            col = col0 + b
            hit = basis_product(b, w[0], field)
            if hit is not None:
                m.add(head + hit[0], col, tw[w[0]] * hit[1])
            hit = basis_product(w[n - 1], b, field)
            if hit is not None:
                m.add(tail + hit[0], col, hit[1] * end_sign)
        for i in range(1, n):
            hit = _reduced_product(w[i - 1], w[i], field)
            if hit is None:
                continue
            row0 = 4 * dst[w[:i - 1] + (hit[0],) + w[i + 1:]]
            c = hit[1] if i % 2 == 0 else -hit[1]
            for b in range(4):
                m.add(row0 + b, col0 + b, c)
    return m


@lru_cache(maxsize=1024)
def _cochain_rank(psi: DiagonalAutomorphism, n: int, field: Field) -> int:
    return rank(bar_cochain_matrix(psi, n, field))


@lru_cache(maxsize=1024)
def _chain_rank(theta: DiagonalAutomorphism, n: int, field: Field) -> int:
    return rank(bar_chain_matrix(theta, n, field))


def _homology_series(theta: DiagonalAutomorphism, max_degree: int, field: Field) -> list[int]:
    _check_words(max_degree + 1)
    ranks = {n: _chain_rank(theta, n, field) for n in range(1, max_degree + 2)}
    ranks[0] = 0
    return [4 * 3 ** n - ranks[n] - ranks[n + 1] for n in range(max_degree + 1)]


def bar_cohomology_dims(psi: DiagonalAutomorphism, max_degree: int, field: Field | None = None,
                        with_homology: bool = False) -> DimensionReport:
    """dim HH^n(A, 1_A_psi) for ``n <= max_degree`` from the normalized cochains.

    With ``with_homology`` the chain complex of theta = (nu psi)^-1 is reduced
    too and ``hh_homology`` is filled in independently.
    """
    _check_words(max_degree + 1)
    field = field or make_field(0)
    ranks = {n: _cochain_rank(psi, n, field) for n in range(max_degree + 1)}
    theta = homology_transfer(psi)
    homology = _homology_series(theta, max_degree, field) if with_homology else None
    series = []
    for n in range(max_degree + 1):
        dim_ker = 4 * 3 ** n - ranks[n]
        dim_im = ranks[n - 1] if n >= 1 else 0
        series.append(DegreeRecord(n=n, hh=dim_ker - dim_im, dim_ker=dim_ker, dim_im=dim_im,
                                   hh_homology=homology[n] if homology else None))
    return DimensionReport(automorphism=psi, field=field.descriptor, method="bar_oracle",
                           series=series, homology_coefficient=theta, ranks=ranks)


def bar_homology_dims(theta: DiagonalAutomorphism, max_degree: int,
                      field: Field | None = None) -> DimensionReport:
    """dim HH_n(A, 1_A_theta) for ``n <= max_degree`` from the normalized chains.

    The report is indexed by psi = nu^-1 theta^-1, the cohomology coefficient
    dual to theta; only ``hh_homology`` is filled in.
    """
    field = field or make_field(0)
    homology = _homology_series(theta, max_degree, field)
    series = [DegreeRecord(n=n, hh_homology=h) for n, h in enumerate(homology)]
    return DimensionReport(automorphism=homology_source(theta), field=field.descriptor,
                           method="bar_oracle", series=series, homology_coefficient=theta)
