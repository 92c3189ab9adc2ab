"""Per-degree dimension records shared by every computation method."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import DiagonalAutomorphism, parse_aut_param
from .fields import FieldDescriptor, make_field

__all__ = ["DegreeRecord", "DimensionReport", "automorphism_to_json", "automorphism_from_json"]

METHODS = ("complex", "closed_form", "bar_oracle")


@dataclass
class DegreeRecord:
    """Degree n: ``hh = dim_ker - dim_im`` where ``dim_ker`` is the kernel of
    the differential leaving degree n and ``dim_im`` the image arriving there.
    ``hh_homology`` is the homology of the report's homology coefficient."""

    n: int
    hh: int | None = None
    dim_ker: int | None = None
    dim_im: int | None = None
    hh_homology: int | None = None

    def to_json(self) -> dict:
        return {"n": self.n, "dim_ker": self.dim_ker, "dim_im": self.dim_im,
                "hh": self.hh, "hh_homology": self.hh_homology}


def automorphism_to_json(psi: DiagonalAutomorphism) -> dict:
    return {"alpha": str(psi.alpha), "beta": str(psi.beta)}


def automorphism_from_json(data: dict, descriptor: FieldDescriptor) -> DiagonalAutomorphism:
    field = make_field(descriptor)
    return DiagonalAutomorphism(parse_aut_param(data["alpha"], field),
                                parse_aut_param(data["beta"], field))


@dataclass
class DimensionReport:
    """Dimensions of HH^n(A, 1_A_psi) for n = 0..N, from one method.

    ``homology_coefficient`` is theta = (nu psi)^-1; ``hh_homology`` holds
    dim HH_n(A, 1_A_theta), which duality makes equal to ``hh``.
    """

    automorphism: DiagonalAutomorphism
    field: FieldDescriptor
    method: str
    series: list[DegreeRecord]
    case: str | None = None
    homology_coefficient: DiagonalAutomorphism | None = None
    ranks: dict[int, int] = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    @property
    def max_degree(self) -> int:
        return self.series[-1].n if self.series else -1

    @property
    def hh(self) -> list[int | None]:
        return [rec.hh for rec in self.series]

    @property
    def hh_homology(self) -> list[int | None]:
        return [rec.hh_homology for rec in self.series]

    def __getitem__(self, n: int) -> DegreeRecord:
        return self.series[n]

    def invariant_violations(self) -> list[str]:
        """Rank bookkeeping checks for the small cochain complex.

        ``dim_ker(n)`` is the kernel of d_{n+1} on a space of dimension
        4(n+1), and the image of d_n has dimension at most 2n+1.
        """
        problems = []
        if self.method != "complex":
            return problems
        for rec in self.series:
            n = rec.n
            if rec.dim_ker is not None and n + 1 in self.ranks:
                if rec.dim_ker + self.ranks[n + 1] != 4 * (n + 1):
                    problems.append(f"rank-nullity fails for d_{n + 1}")
            if rec.dim_im is not None and n >= 1 and rec.dim_im > 2 * n + 1:
                problems.append(f"dim Im d_{n} = {rec.dim_im} exceeds {2 * n + 1}")
        return problems

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "automorphism": automorphism_to_json(self.automorphism),
            "homology_coefficient": (automorphism_to_json(self.homology_coefficient)
                                     if self.homology_coefficient else None),
            "method": self.method,
            "case": self.case,
            "series": [rec.to_json() for rec in self.series],
            "ranks": {str(k): v for k, v in sorted(self.ranks.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "DimensionReport":
        desc = FieldDescriptor.from_json(data["field"])
        theta = data.get("homology_coefficient")
        return cls(
            automorphism=automorphism_from_json(data["automorphism"], desc),
            field=desc,
            method=data["method"],
            case=data.get("case"),
            series=[DegreeRecord(n=r["n"], hh=r["hh"], dim_ker=r.get("dim_ker"),
                                 dim_im=r.get("dim_im"), hh_homology=r.get("hh_homology"))
                    for r in data["series"]],
            homology_coefficient=automorphism_from_json(theta, desc) if theta else None,
            ranks={int(k): v for k, v in data.get("ranks", {}).items()},
        )
