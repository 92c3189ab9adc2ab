"""Sample automorphisms, the three-way verification runner, and tables.

Samples are kept as text pairs in the AutParam grammar, so ``generic`` is
re-resolved in each field it is realized in (its witness must avoid Sigma
at every specialization, and 2 = q when q = 2).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .algebra import DiagonalAutomorphism
from .bar import bar_cohomology_dims
from .closed_forms import CaseLabel, classify, predicted_series
from .cochains import cohomology_dims, d_matrix
from .fields import FieldDescriptor, make_field
from .linalg import ExactMatrix, multiply_matrices

__all__ = [
    "SAMPLES", "sample_suite", "oracle_fields", "Mismatch", "VerificationResult",
    "verify_automorphism", "verify_suite", "complex_degree",
    "hh0_table", "iv_pattern_table", "auslander_table", "asymmetry_pair",
    "corrupted_d_matrix", "labels_covered", "reachable_labels",
]

_COMMON = [
    ("generic", "generic"),
    ("q^-1", "generic"), ("q^2", "generic"), ("q^-3", "generic"),
    ("q^1", "generic"),
    ("generic", "q^-1"), ("generic", "q^2"), ("generic", "-q^3"),
    ("q^1", "q^-1"),
    ("q^1", "q^2"), ("q^1", "-q^-3"),
    ("q^-2", "q^-1"), ("q^0", "q^-1"),
    ("q^0", "q^0"), ("-q^-1", "-q^0"), ("q^-1", "q^1"), ("q^-3", "q^3"), ("-q^-2", "-q^1"),
    ("q^2", "q^0"), ("q^0", "q^-2"), ("q^3", "q^3"),
]

SAMPLES = {
    0: _COMMON + [
        ("-q^1", "generic"), ("-q^1", "q^2"),
        ("generic", "-q^-1"),
        ("-q^1", "-q^-1"), ("q^1", "-q^-1"), ("-q^1", "q^-1"),
        ("q^-2", "-q^-1"), ("q^0", "-q^-1"),
        ("-q^0", "q^0"), ("-q^-1", "q^1"), ("q^-1", "-q^0"),
    ],
    2: _COMMON + [("q^-1", "q^0"), ("q^-2", "q^3")],
}


def sample_suite(characteristic: int) -> list[tuple[str, str]]:
    """Built-in samples; every case label reachable in this characteristic occurs."""
    return list(SAMPLES[2 if characteristic == 2 else 0])


def oracle_fields(characteristic: int):
    """Fields the bar oracle runs over: q = 2, 3 and Q(q) in char 0, else F_p(q)."""
    if characteristic == 0:
        return [make_field(FieldDescriptor(0, Fraction(2))),
                make_field(FieldDescriptor(0, Fraction(3))),
                make_field(0)]
    return [make_field(characteristic)]


def complex_degree(alpha: str, beta: str, characteristic: int, floor: int = 12) -> int:
    """``max(floor, t - s + 4)``: far enough to see a late-starting pattern die out."""
    c = classify(DiagonalAutomorphism.parse(alpha, beta, make_field(characteristic)), characteristic)
    if c.s is None or c.t is None:
        return floor
    return max(floor, c.t - c.s + 4)


@dataclass
class Mismatch:
    check: str
    alpha: str
    beta: str
    n: int
    complex: int | None
    closed_form: int | None
    oracle: int | None
    field: str = ""

    @property
    def differential(self) -> int:
        """Lowest d_k involved: degree n reads d_n and d_(n+1), degree 0 only d_1."""
        return max(self.n, 1)

    def __str__(self):
        where = f" over {self.field}" if self.field else ""
        return (f"{self.check} fails for psi = ({self.alpha}, {self.beta}) at n = {self.n}{where} "
                f"(d_{self.differential}): "
                f"complex={self.complex} closed_form={self.closed_form} oracle={self.oracle}")

    def to_json(self) -> dict:
        return {"check": self.check, "alpha": self.alpha, "beta": self.beta, "n": self.n,
                "differential": self.differential, "field": self.field, "complex": self.complex,
                "closed_form": self.closed_form, "oracle": self.oracle}


@dataclass
class VerificationResult:
    alpha: str
    beta: str
    characteristic: int
    case: str | None
    max_degree: int
    oracle_degree: int
    checks: dict[str, bool] = dc_field(default_factory=dict)
    mismatches: list[Mismatch] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def counterexample(self) -> Mismatch | None:
        return min(self.mismatches, key=lambda m: (m.n, m.differential)) if self.mismatches else None

    def to_json(self) -> dict:
        cx = self.counterexample()
        return {"automorphism": {"alpha": self.alpha, "beta": self.beta},
                "characteristic": self.characteristic, "case": self.case,
                "max_degree": self.max_degree, "oracle_degree": self.oracle_degree,
                "ok": self.ok, "checks": dict(self.checks),
                "counterexample": cx.to_json() if cx else None}


def corrupted_d_matrix(psi: DiagonalAutomorphism, n: int, field) -> ExactMatrix:
    """Negative control: ``d_n`` with the twist sign wrong in odd degrees.

    Flipping ``(-1)^n`` in front of the psi-terms is the same as twisting by
    ``(-alpha, -beta)``.
    """
    if n % 2 == 0:
        return d_matrix(psi, n, field)
    alpha, beta = psi.realize(field)
    return d_matrix(DiagonalAutomorphism.from_scalars(-alpha, -beta), n, field)


def _dd_zero(psi, n_max, field, builder) -> int | None:
    for n in range(1, n_max + 1):
        if not multiply_matrices(builder(psi, n + 1, field), builder(psi, n, field)).is_zero():
            return n
    return None


def verify_automorphism(alpha: str, beta: str, characteristic: int = 0,
                        max_degree: int | None = None, oracle_degree: int = 4,
                        d_matrix_fn=None, fields=None) -> VerificationResult:
    """Complex vs closed form for ``n <= max_degree``, complex vs bar oracle
    (cohomology and, through duality, homology) for ``n <= oracle_degree``,
    plus ``d d = 0`` and the rank bound ``dim Im d_n <= 2n + 1``."""
    K = make_field(characteristic)
    psi = DiagonalAutomorphism.parse(alpha, beta, K)
    if max_degree is None:
        max_degree = complex_degree(alpha, beta, characteristic)
    builder = d_matrix_fn or d_matrix
    complex_report = cohomology_dims(psi, max_degree, K, d_matrix_fn=d_matrix_fn)
    closed = predicted_series(psi, max_degree, K)
    result = VerificationResult(alpha, beta, characteristic, closed.case, max_degree, oracle_degree)
    bad = result.mismatches

    ok = True
    for n, (a, b) in enumerate(zip(complex_report.hh, closed.hh)):
        if a != b:
            ok = False
            bad.append(Mismatch("closed_form", alpha, beta, n, a, b, None, str(K)))
    result.checks["closed_form"] = ok

    fail = _dd_zero(psi, max_degree, K, builder)
    result.checks["dd_zero"] = fail is None
    if fail is not None:
        bad.append(Mismatch("dd_zero", alpha, beta, fail, complex_report.hh[fail], closed.hh[fail], None, str(K)))

    ok = True
    for n, r in complex_report.ranks.items():
        if n <= max_degree and r > 2 * n + 1:
            ok = False
            bad.append(Mismatch("rank_bound", alpha, beta, n, r, 2 * n + 1, None, str(K)))
    for problem in complex_report.invariant_violations():
        ok = False
        bad.append(Mismatch(f"rank_nullity: {problem}", alpha, beta, 0, None, None, None, str(K)))
    result.checks["rank_bound"] = ok

    top = min(oracle_degree, max_degree)
    oracle_ok = duality_ok = True
    if top >= 0:
        for F in fields or oracle_fields(characteristic):
            psi_F = DiagonalAutomorphism.parse(alpha, beta, F)
            local = complex_report if F is K else cohomology_dims(psi_F, top, F, d_matrix_fn=d_matrix_fn)
            bar = bar_cohomology_dims(psi_F, top, F, with_homology=True)
            for n in range(top + 1):
                if bar.hh[n] != local.hh[n] or local.hh[n] != complex_report.hh[n]:
                    oracle_ok = False
                    bad.append(Mismatch("oracle", alpha, beta, n, local.hh[n], closed.hh[n], bar.hh[n], str(F)))
                if bar.hh_homology[n] != local.hh[n]:
                    duality_ok = False
                    bad.append(Mismatch("duality", alpha, beta, n, local.hh[n], closed.hh[n],
                                        bar.hh_homology[n], str(F)))
    result.checks["oracle"] = oracle_ok
    result.checks["duality"] = duality_ok
    return result


def verify_suite(characteristic: int = 0, samples=None, max_degree: int | None = None,
                 oracle_degree: int = 4, d_matrix_fn=None) -> list[VerificationResult]:
    return [verify_automorphism(a, b, characteristic, max_degree, oracle_degree, d_matrix_fn)
            for a, b in (samples or sample_suite(characteristic))]


def labels_covered(results) -> set[str]:
    return {r.case for r in results}


def reachable_labels(characteristic: int) -> set[str]:
    labels = {c.value for c in CaseLabel}
    if characteristic == 2:
        labels.discard(CaseLabel.ALPHA_SIGMA_III.value)
    return labels


# tables

HH0_ROWS = {
    0: [("-q^1", "-q^-1", 3), ("q^0", "q^0", 2), ("-q^1", "2", 2), ("2", "-q^-1", 2), ("2", "3", 1)],
    # -q = q and 2 = 0 in characteristic 2; q+1 and q^2+q+1 stand in for 2 and 3
    2: [("q^1", "q^-1", 3), ("q^0", "q^0", 2), ("q^1", "q+1", 2), ("q+1", "q^-1", 2),
        ("q+1", "q^2+q+1", 1)],
}


def hh0_table(characteristic: int = 0) -> list[dict]:
    """dim Ker d_1 = dim HH^0 on the five representative inputs."""
    K = make_field(characteristic)
    rows = []
    for alpha, beta, expected in HH0_ROWS[2 if characteristic == 2 else 0]:
        psi = DiagonalAutomorphism.parse(alpha, beta, K)
        computed = cohomology_dims(psi, 0, K).series[0].dim_ker
        rows.append({"alpha": alpha, "beta": beta, "expected": expected, "dim_ker_d1": computed,
                     "closed_form": predicted_series(psi, 0, K).hh[0]})
    return rows


def _series_row(alpha: str, beta: str, K, N: int) -> dict:
    psi = DiagonalAutomorphism.parse(alpha, beta, K)
    hh = cohomology_dims(psi, N, K).hh
    nonzero = [n for n in range(1, N + 1) if hh[n]]
    return {"alpha": alpha, "beta": beta, "case": classify(psi, K).label.value, "hh": hh,
            "nonzero_degrees": nonzero, "last_nonzero": nonzero[-1] if nonzero else None}


def iv_pattern_table(characteristic: int = 0, span: int = 2, tail: int = 4) -> list[dict]:
    """Twists with ``-span <= s <= 0 <= t <= span`` and signs ``(-1)^(t-s)`` (none in char 2)."""
    K = make_field(characteristic)
    rows = []
    for s in range(0, -span - 1, -1):
        for t in range(0, span + 1):
            if s == 1 or t == -1:
                continue
            sign = "-" if (t - s) % 2 and characteristic != 2 else ""
            row = _series_row(f"{sign}q^{s}", f"{sign}q^{t}", K, t - s + 2 + tail)
            row.update(s=s, t=t, start=t - s)
            rows.append(row)
    return rows


def auslander_table(T: int = 3, characteristic: int = 0, tail: int = 10) -> list[dict]:
    """Rows M_t, psi = (q^-t, q^t): dims 1, 2, 1 at n = 2t..2t+2, then zero."""
    K = make_field(characteristic)
    rows = []
    for t in range(1, T + 1):
        row = _series_row(f"q^{-t}", f"q^{t}", K, 2 * t + tail)
        row["t"] = t
        rows.append(row)
    return rows


def asymmetry_pair(characteristic: int = 0, alpha: str = "q^-1", beta: str = "generic",
                   N: int = 10) -> dict:
    """HH^n for psi and psi^-1: vanishing for one does not force it for the other."""
    K = make_field(characteristic)
    psi = DiagonalAutomorphism.parse(alpha, beta, K)
    inv = psi.inverse()
    return {"forward": {"alpha": str(psi.alpha), "beta": str(psi.beta),
                        "hh": cohomology_dims(psi, N, K).hh},
            "inverse": {"alpha": str(inv.alpha), "beta": str(inv.beta),
                        "hh": cohomology_dims(inv, N, K).hh}}
