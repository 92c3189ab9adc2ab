"""The small cochain complex computing HH^*(A, 1_A_psi).

Applying Hom over the enveloping algebra to the minimal resolution turns
``P^{n-1}`` into ``n`` copies of the coefficient bimodule.  Its basis is
``(e_i, x e_i, y e_i, yx e_i)`` for ``i = 0..n-1`` (block-major), and the
induced differential ``d_n`` maps ``lambda e_i`` to

    [x lambda + (-1)^n q^i lambda psi(x)] e_i + [q^(n-i-1) y lambda + (-1)^n lambda psi(y)] e_(i+1).

Then ``HH^0 = ker d_1`` and ``HH^n = ker d_{n+1} / im d_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (ONE, X, Y, YX, BASIS_NAMES, AlgebraElement, DiagonalAutomorphism,
                      apply_automorphism, multiply, nakayama)
from .fields import Field, make_field
from .linalg import ExactMatrix, rank
from .report import DegreeRecord, DimensionReport

__all__ = [
    "CochainBasisLayout", "d_matrix", "d_rank", "cohomology_dims",
    "homology_transfer", "homology_source", "homology_dims",
]


@dataclass(frozen=True)
class CochainBasisLayout:
    """Coordinates on n copies of the bimodule: index ``4*i + k`` is ``basis_k e_i``."""

    n: int

    @property
    def dim(self) -> int:
        return 4 * self.n

    def index(self, i: int, k: int) -> int:
        if not (0 <= i < self.n and 0 <= k < 4):
            raise IndexError((i, k))
        return 4 * i + k

    def label(self, index: int) -> str:
        i, k = divmod(index, 4)
        name = "" if k == ONE else BASIS_NAMES[k]
        return f"{name}e{self.n - 1}_{i}"


def _sign(n: int) -> int:
    return 1 if n % 2 == 0 else -1


def _specialized(psi: DiagonalAutomorphism, n: int, field: Field) -> ExactMatrix:
    alpha, beta = psi.realize(field)
    q = field.q
    s = _sign(n)
    src, dst = CochainBasisLayout(n), CochainBasisLayout(n + 1)
    m = ExactMatrix(field, dst.dim, src.dim)
    for i in range(n):
        qi = field.q_power(i)
        qn = field.q_power(n - i - 1)
        m.add(dst.index(i, X), src.index(i, ONE), 1 + s * qi * alpha)
        m.add(dst.index(i + 1, Y), src.index(i, ONE), qn + s * beta)
        m.add(dst.index(i + 1, YX), src.index(i, X), qn - s * q * beta)
        m.add(dst.index(i, YX), src.index(i, Y), -q + s * qi * alpha)
    return m


def _general(psi: DiagonalAutomorphism, n: int, field: Field) -> ExactMatrix:
    s = _sign(n)
    basis = [AlgebraElement.basis(field, k) for k in range(4)]
    x, y = basis[X], basis[Y]
    psi_x, psi_y = apply_automorphism(psi, x), apply_automorphism(psi, y)
    src, dst = CochainBasisLayout(n), CochainBasisLayout(n + 1)
    m = ExactMatrix(field, dst.dim, src.dim)
    for i in range(n):
        for k, lam in enumerate(basis):
            same = multiply(x, lam) + multiply(lam, psi_x).scale(field.q_power(i) * s)
            nxt = multiply(y, lam).scale(field.q_power(n - i - 1)) + multiply(lam, psi_y).scale(s)
            col = src.index(i, k)
            for j, c in enumerate(same.coords):
                m.add(dst.index(i, j), col, c)
            for j, c in enumerate(nxt.coords):
                m.add(dst.index(i + 1, j), col, c)
    return m


def d_matrix(psi: DiagonalAutomorphism, n: int, field: Field | None = None,
             form: str = "specialized") -> ExactMatrix:
    """The ``4(n+1) x 4n`` matrix of ``d_n``, columns = images of basis vectors.

    ``form="specialized"`` uses the four closed-form column images;
    ``form="general"`` evaluates the defining formula through the algebra's
    multiplication.  The two must agree entrywise.
    """
    if n < 1:
        raise ValueError("d_n is defined for n >= 1")
    field = field or make_field(0)
    if form == "specialized":
        return _specialized(psi, n, field)
    if form == "general":
        return _general(psi, n, field)
    raise ValueError(f"unknown form {form!r}")


@lru_cache(maxsize=4096)
def d_rank(psi: DiagonalAutomorphism, n: int, field: Field) -> int:
    return rank(d_matrix(psi, n, field))


def cohomology_dims(psi: DiagonalAutomorphism, max_degree: int, field: Field | None = None,
                    d_matrix_fn=None) -> DimensionReport:
    """dim HH^n(A, 1_A_psi) for ``0 <= n <= max_degree`` from exact ranks of d_n.

    ``d_matrix_fn(psi, n, field)`` replaces the matrix builder (used for
    negative controls).
    """
    field = field or make_field(0)
    if d_matrix_fn is None:
        ranks = {n: d_rank(psi, n, field) for n in range(1, max_degree + 2)}
    else:
        ranks = {n: rank(d_matrix_fn(psi, n, field)) for n in range(1, max_degree + 2)}
    series = []
    for n in range(max_degree + 1):
        dim_ker = 4 * (n + 1) - ranks[n + 1]
        dim_im = ranks[n] if n >= 1 else 0
        hh = dim_ker - dim_im
        series.append(DegreeRecord(n=n, hh=hh, dim_ker=dim_ker, dim_im=dim_im, hh_homology=hh))
    return DimensionReport(automorphism=psi, field=field.descriptor, method="complex",
                           series=series, homology_coefficient=homology_transfer(psi),
                           ranks=ranks)


def homology_transfer(psi: DiagonalAutomorphism) -> DiagonalAutomorphism:
    """theta = (nu psi)^-1, with HH^n(A, 1_A_psi) dual to HH_n(A, 1_A_theta)."""
    return nakayama().compose(psi).inverse()


def homology_source(theta: DiagonalAutomorphism) -> DiagonalAutomorphism:
    """The psi whose transfer is theta: psi = nu^-1 theta^-1."""
    return nakayama().inverse().compose(theta.inverse())


def homology_dims(theta: DiagonalAutomorphism, max_degree: int,
                  field: Field | None = None) -> DimensionReport:
    """dim HH_n(A, 1_A_theta), read off the cohomology of psi = nu^-1 theta^-1.

    The returned report is the cohomology report of that psi; its
    ``homology_coefficient`` is theta and ``hh_homology`` the requested values.
    """
    return cohomology_dims(homology_source(theta), max_degree, field)
