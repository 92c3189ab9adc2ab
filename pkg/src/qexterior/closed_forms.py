"""Closed-form dimensions of HH^n(A, 1_A_psi) by case analysis.

Everything is decided by whether alpha and beta are signed powers of q,
i.e. lie in Sigma = {+-q^i}.  Write alpha = eps_a q^s, beta = eps_b q^t when
they do.  For n >= 1 (signs collapse in characteristic 2):

==================  =======================================  ================
case                condition                                dim HH^n
==================  =======================================  ================
generic-generic     alpha, beta not in Sigma                 0
alpha-sigma/i       alpha in Sigma, alpha != +-q             0
alpha-sigma/ii,iii  alpha = q, resp. -q                      1 (char 2: 2)
beta-sigma/mirror   mirror image of alpha-sigma with s = -t  as mirrored
both-sigma/i        alpha = +-q, beta = +-q^-1               2 (char 2: 4)
both-sigma/ii,iii   exactly one of alpha = +-q, beta = +-q^-1  1 (char 2: 2)
both-sigma/iv/C2    s <= 0 <= t, eps_a = eps_b = (-1)^(t-s)  1, 2, 1 at
                    (char 2: s <= 0 <= t)                    n = t-s, +1, +2
both-sigma/iv/none  otherwise                                0
==================  =======================================  ================

HH^0 is 1 + [alpha = beta = 1] + [alpha = -q] + [beta = -q^-1].
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import DiagonalAutomorphism, SignedPower
from .cochains import homology_source, homology_transfer
from .fields import Field, InconclusiveError, make_field
from .report import DegreeRecord, DimensionReport

__all__ = [
    "CaseLabel", "Classification", "UnclassifiableError", "classify",
    "predicted_hh0", "predicted_hh", "predicted_series", "predicted_homology",
]


class UnclassifiableError(ValueError):
    """Membership of a parameter in Sigma could not be decided."""


class CaseLabel(enum.Enum):
    GENERIC_GENERIC = "generic-generic"
    ALPHA_SIGMA_I = "alpha-sigma/i"
    ALPHA_SIGMA_II = "alpha-sigma/ii"
    ALPHA_SIGMA_III = "alpha-sigma/iii"
    BETA_SIGMA_MIRROR = "beta-sigma/mirror"
    BOTH_SIGMA_I = "both-sigma/i"
    BOTH_SIGMA_II = "both-sigma/ii"
    BOTH_SIGMA_III = "both-sigma/iii"
    BOTH_SIGMA_IV_C2 = "both-sigma/iv/C2"
    BOTH_SIGMA_IV_NOC = "both-sigma/iv/none"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classification:
    label: CaseLabel
    characteristic: int
    s: int | None = None
    t: int | None = None
    eps_alpha: int | None = None
    eps_beta: int | None = None

    def __str__(self):
        return self.label.value


def _field_for(field_or_char) -> Field:
    if isinstance(field_or_char, Field):
        return field_or_char
    return make_field(int(field_or_char))


def _sigma_form(param, field: Field):
    if isinstance(param, SignedPower):
        form = (param.sign, param.exponent)
    else:
        try:
            form = field.signed_power_form(param.realize(field))
        except InconclusiveError as exc:
            raise UnclassifiableError(str(exc)) from exc
    if form is not None and field.characteristic == 2:
        form = (1, form[1])
    return form


def classify(psi: DiagonalAutomorphism, field_or_char=0) -> Classification:
    """The unique case label of ``psi`` over the given field (or characteristic)."""
    field = _field_for(field_or_char)
    p = field.characteristic
    a = _sigma_form(psi.alpha, field)
    b = _sigma_form(psi.beta, field)
    ea, s = a if a else (None, None)
    eb, t = b if b else (None, None)
    if a is None and b is None:
        label = CaseLabel.GENERIC_GENERIC
    elif b is None:
        if s != 1:
            label = CaseLabel.ALPHA_SIGMA_I
        elif ea == 1:
            label = CaseLabel.ALPHA_SIGMA_II
        else:
            label = CaseLabel.ALPHA_SIGMA_III
    elif a is None:
        label = CaseLabel.BETA_SIGMA_MIRROR
    elif s == 1 and t == -1:
        label = CaseLabel.BOTH_SIGMA_I
    elif s == 1:
        label = CaseLabel.BOTH_SIGMA_II
    elif t == -1:
        label = CaseLabel.BOTH_SIGMA_III
    else:
        matched = s <= 0 <= t
        if p != 2:
            sign = 1 if (t - s) % 2 == 0 else -1
            matched = matched and ea == sign and eb == sign
        label = CaseLabel.BOTH_SIGMA_IV_C2 if matched else CaseLabel.BOTH_SIGMA_IV_NOC
    return Classification(label, p, s, t, ea, eb)


def predicted_hh0(psi: DiagonalAutomorphism, field_or_char=0) -> int:
    c = classify(psi, field_or_char)
    minus = 1 if c.characteristic == 2 else -1
    alpha_is_one = c.s == 0 and c.eps_alpha == 1
    beta_is_one = c.t == 0 and c.eps_beta == 1
    alpha_is_minus_q = c.s == 1 and c.eps_alpha == minus
    beta_is_minus_qinv = c.t == -1 and c.eps_beta == minus
    return 1 + (alpha_is_one and beta_is_one) + alpha_is_minus_q + beta_is_minus_qinv


def _alpha_sigma_dim(s: int, char: int) -> int:
    # alpha in Sigma, beta outside: only row yx e_0 of d_n can drop out
    if s != 1:
        return 0
    return 2 if char == 2 else 1


def _dim_for(c: Classification, n: int) -> int:
    p = c.characteristic
    label = c.label
    if label in (CaseLabel.GENERIC_GENERIC, CaseLabel.BOTH_SIGMA_IV_NOC):
        return 0
    if label in (CaseLabel.ALPHA_SIGMA_I, CaseLabel.ALPHA_SIGMA_II, CaseLabel.ALPHA_SIGMA_III):
        return _alpha_sigma_dim(c.s, p)
    if label is CaseLabel.BETA_SIGMA_MIRROR:
        # swapping x and y identifies the algebra with the one for q^-1
        return _alpha_sigma_dim(-c.t, p)
    if label is CaseLabel.BOTH_SIGMA_I:
        return 4 if p == 2 else 2
    if label in (CaseLabel.BOTH_SIGMA_II, CaseLabel.BOTH_SIGMA_III):
        return 2 if p == 2 else 1
    offset = n - (c.t - c.s)
    return {0: 1, 1: 2, 2: 1}.get(offset, 0)


def predicted_hh(psi: DiagonalAutomorphism, n: int, field_or_char=0) -> int:
    """dim HH^n(A, 1_A_psi); degree 0 is delegated to :func:`predicted_hh0`."""
    if n < 0:
        raise ValueError("negative degree")
    if n == 0:
        return predicted_hh0(psi, field_or_char)
    return _dim_for(classify(psi, field_or_char), n)


def predicted_homology(theta: DiagonalAutomorphism, n: int, field_or_char=0) -> int:
    """dim HH_n(A, 1_A_theta) through the duality with psi = nu^-1 theta^-1."""
    return predicted_hh(homology_source(theta), n, field_or_char)


def predicted_series(psi: DiagonalAutomorphism, max_degree: int, field_or_char=0) -> DimensionReport:
    field = _field_for(field_or_char)
    c = classify(psi, field)
    series = []
    for n in range(max_degree + 1):
        hh = predicted_hh0(psi, field) if n == 0 else _dim_for(c, n)
        series.append(DegreeRecord(n=n, hh=hh, hh_homology=hh))
    return DimensionReport(automorphism=psi, field=field.descriptor, method="closed_form",
                           series=series, case=c.label.value,
                           homology_coefficient=homology_transfer(psi))
