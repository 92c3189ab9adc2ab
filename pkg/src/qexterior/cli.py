# Command-line front end.
#   qexterior compute --char 0 --alpha q^0 --beta q^0 --max-degree 6
#   qexterior verify --char 2
#   qexterior table --which auslander --format text
#   qexterior resolution-check --max-degree 8
# Exit codes: 0 ok, 1 verification failure, 2 bad configuration, 3 unclassifiable.

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .algebra import DiagonalAutomorphism, NotAutomorphismError
from .bar import MAX_BAR_DEGREE, DegreeTooLargeError, bar_cohomology_dims
from .closed_forms import UnclassifiableError, predicted_series
from .cochains import cohomology_dims, d_matrix
from .fields import FieldDescriptor, FieldError, ParseError, make_field
from .linalg import multiply_matrices
from .report import automorphism_to_json
from .resolution import verify_resolution
from . import suite

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_UNCLASSIFIABLE = 0, 1, 2, 3

CSV_HEADER = ["n", "dim_ker", "dim_im", "hh", "hh_homology", "closed_form", "oracle"]
TABLES = ("hh0", "iv", "auslander", "asymmetry")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    characteristic: int = 0
    q: Fraction | None = None
    alpha: str | None = None
    beta: str | None = None
    max_degree: int | None = None
    oracle_degree: int = 3
    format: str = "json"
    seed: int = 0

    def validate(self) -> None:
        if self.max_degree is not None and self.max_degree < 0:
            raise ConfigError("--max-degree must be >= 0")
        if self.oracle_degree > MAX_BAR_DEGREE:
            raise ConfigError(f"--oracle-degree must be <= {MAX_BAR_DEGREE}")
        if (self.alpha is None) != (self.beta is None):
            raise ConfigError("--alpha and --beta go together")

    @property
    def descriptor(self) -> FieldDescriptor:
        return FieldDescriptor(self.characteristic, self.q)


def _q_arg(text: str) -> Fraction | None:
    if text == "transcendental":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"q must be 'transcendental' or a rational number, got {text!r}")


def _emit(text: str, out) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _dumps(data) -> str:
    return json.dumps(data, indent=2)


# compute

def compute_report(cfg: RunConfig) -> dict:
    """The JSON document of ``compute``: three methods side by side plus checks."""
    field = make_field(cfg.descriptor)
    psi = DiagonalAutomorphism.parse(cfg.alpha or "q^0", cfg.beta or "q^0", field)
    N = 6 if cfg.max_degree is None else cfg.max_degree
    cx = cohomology_dims(psi, N, field)
    closed = predicted_series(psi, N, field)

    top = min(cfg.oracle_degree, N)
    bar = bar_cohomology_dims(psi, max(top, 0), field, with_homology=True)
    oracle = bar.hh if top >= 0 else None
    duality = all(bar.hh_homology[n] == cx.hh[n] for n in range(max(top, 0) + 1))

    dd_zero = all(multiply_matrices(d_matrix(psi, n + 1, field), d_matrix(psi, n, field)).is_zero()
                  for n in range(1, N + 1))
    rank_bound = not cx.invariant_violations()
    return {
        "field": cfg.descriptor.to_json(),
        "automorphism": automorphism_to_json(psi),
        "homology_coefficient": automorphism_to_json(cx.homology_coefficient),
        "case": closed.case,
        "max_degree": N,
        "oracle_degree": top if top >= 0 else None,
        "series": [rec.to_json() for rec in cx.series],
        "methods": {"complex": cx.hh, "closed_form": closed.hh, "oracle": oracle},
        "checks": {"dd_zero": dd_zero, "rank_bound": rank_bound, "duality": duality},
    }


def _compute_ok(doc: dict) -> bool:
    m = doc["methods"]
    agree = m["complex"] == m["closed_form"]
    if m["oracle"] is not None:
        agree = agree and m["oracle"] == m["complex"][:len(m["oracle"])]
    return agree and all(doc["checks"].values())


def _compute_text(doc: dict) -> str:
    lines = [f"field      {FieldDescriptor.from_json(doc['field'])}",
             f"psi        alpha={doc['automorphism']['alpha']} beta={doc['automorphism']['beta']}",
             f"theta      alpha={doc['homology_coefficient']['alpha']} beta={doc['homology_coefficient']['beta']}",
             f"case       {doc['case']}",
             " n  ker  im  hh  hh_hom  closed  oracle"]
    oracle = doc["methods"]["oracle"] or []
    for rec, cf in zip(doc["series"], doc["methods"]["closed_form"]):
        n = rec["n"]
        o = str(oracle[n]) if n < len(oracle) else "-"
        lines.append(f"{n:>2} {rec['dim_ker']:>4} {rec['dim_im']:>3} {rec['hh']:>3} "
                     f"{rec['hh_homology']:>7} {cf:>7} {o:>7}")
    lines.append("checks     " + " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in doc["checks"].items()))
    return "\n".join(lines)


def _compute_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    oracle = doc["methods"]["oracle"] or []
    for rec, cf in zip(doc["series"], doc["methods"]["closed_form"]):
        n = rec["n"]
        w.writerow([n, rec["dim_ker"], rec["dim_im"], rec["hh"], rec["hh_homology"], cf,
                    oracle[n] if n < len(oracle) else ""])
    return buf.getvalue()


def cmd_compute(cfg: RunConfig, out) -> int:
    doc = compute_report(cfg)
    render = {"json": _dumps, "text": _compute_text, "csv": _compute_csv}[cfg.format]
    _emit(render(doc), out)
    return EXIT_OK if _compute_ok(doc) else EXIT_FAIL


# verify

def _random_samples(k: int, seed: int, characteristic: int) -> list[tuple[str, str]]:
    rng = random.Random(seed)
    signs = ("",) if characteristic == 2 else ("", "-")

    def param():
        if rng.random() < 0.2:
            return "generic"
        return f"{rng.choice(signs)}q^{rng.randint(-3, 3)}"

    return [(param(), param()) for _ in range(k)]


def verify_document(cfg: RunConfig, samples: int = 0, d_matrix_fn=None) -> dict:
    p = cfg.characteristic
    if cfg.alpha is not None:
        pairs = [(cfg.alpha, cfg.beta)]
    else:
        pairs = suite.sample_suite(p) + _random_samples(samples, cfg.seed, p)
    fields = [make_field(cfg.descriptor)] if cfg.q is not None else None
    oracle_degree = 4 if cfg.oracle_degree is None else cfg.oracle_degree
    results = [suite.verify_automorphism(a, b, p, cfg.max_degree, oracle_degree, d_matrix_fn, fields)
               for a, b in pairs]
    failing = [r.counterexample() for r in results if not r.ok]
    worst = min(failing, key=lambda m: (m.n, m.differential)) if failing else None
    return {
        "characteristic": p,
        "ok": worst is None,
        "labels": sorted(suite.labels_covered(results)),
        "results": [r.to_json() for r in results],
        "counterexample": worst.to_json() if worst else None,
    }


def _verify_text(doc: dict) -> str:
    lines = []
    for r in doc["results"]:
        a = r["automorphism"]
        status = "ok  " if r["ok"] else "FAIL"
        lines.append(f"{status} ({a['alpha']}, {a['beta']})  {r['case']}  n<={r['max_degree']}"
                     f"  oracle n<={r['oracle_degree']}")
    lines.append(f"labels covered: {len(doc['labels'])}")
    cx = doc["counterexample"]
    if cx:
        lines.append(f"counterexample: {cx['check']} psi=({cx['alpha']}, {cx['beta']}) n={cx['n']} "
                     f"d_{cx['differential']} over {cx['field']}: complex={cx['complex']} "
                     f"closed_form={cx['closed_form']} oracle={cx['oracle']}")
    lines.append("PASS" if doc["ok"] else "FAIL")
    return "\n".join(lines)


def _verify_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["alpha", "beta", "case", "ok", "closed_form", "dd_zero", "rank_bound", "oracle", "duality"])
    for r in doc["results"]:
        c = r["checks"]
        w.writerow([r["automorphism"]["alpha"], r["automorphism"]["beta"], r["case"], r["ok"],
                    c["closed_form"], c["dd_zero"], c["rank_bound"], c["oracle"], c["duality"]])
    return buf.getvalue()


def cmd_verify(cfg: RunConfig, out, samples: int = 0, d_matrix_fn=None) -> int:
    doc = verify_document(cfg, samples, d_matrix_fn)
    render = {"json": _dumps, "text": _verify_text, "csv": _verify_csv}[cfg.format]
    _emit(render(doc), out)
    return EXIT_OK if doc["ok"] else EXIT_FAIL


# table

def table_document(cfg: RunConfig, which=TABLES, span: int = 2, T: int = 3) -> dict:
    p = cfg.characteristic
    doc = {"characteristic": p}
    if "hh0" in which:
        doc["hh0"] = suite.hh0_table(p)
    if "iv" in which:
        doc["iv"] = suite.iv_pattern_table(p, span)
    if "auslander" in which:
        doc["auslander"] = suite.auslander_table(T, p)
    if "asymmetry" in which:
        if cfg.alpha is not None:
            doc["asymmetry"] = suite.asymmetry_pair(p, cfg.alpha, cfg.beta)
        else:
            doc["asymmetry"] = suite.asymmetry_pair(p)
    return doc


def _table_rows(doc: dict):
    for row in doc.get("hh0", []):
        yield "hh0", row["alpha"], row["beta"], [row["dim_ker_d1"]]
    for row in doc.get("iv", []):
        yield "iv", row["alpha"], row["beta"], row["hh"]
    for row in doc.get("auslander", []):
        yield f"auslander M_{row['t']}", row["alpha"], row["beta"], row["hh"]
    if "asymmetry" in doc:
        for key in ("forward", "inverse"):
            side = doc["asymmetry"][key]
            yield f"asymmetry {key}", side["alpha"], side["beta"], side["hh"]


def _table_text(doc: dict) -> str:
    lines = [f"characteristic {doc['characteristic']}"]
    for name, a, b, dims in _table_rows(doc):
        lines.append(f"{name:<20} ({a}, {b})  " + " ".join(map(str, dims)))
    return "\n".join(lines)


def _table_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["table", "alpha", "beta", "dims"])
    for name, a, b, dims in _table_rows(doc):
        w.writerow([name, a, b, " ".join(map(str, dims))])
    return buf.getvalue()


def _table_ok(doc: dict) -> bool:
    return all(row["dim_ker_d1"] == row["expected"] for row in doc.get("hh0", []))


def cmd_table(cfg: RunConfig, out, which=TABLES, span: int = 2, T: int = 3) -> int:
    doc = table_document(cfg, which, span, T)
    render = {"json": _dumps, "text": _table_text, "csv": _table_csv}[cfg.format]
    _emit(render(doc), out)
    return EXIT_OK if _table_ok(doc) else EXIT_FAIL


# resolution-check

def cmd_resolution_check(cfg: RunConfig, out, exact_degree: int | None = None) -> int:
    N = 8 if cfg.max_degree is None else cfg.max_degree
    report = verify_resolution(N, exact_degree, make_field(cfg.characteristic))
    doc = report.to_json()
    doc["ok"] = report.ok
    if cfg.format == "json":
        _emit(_dumps(doc), out)
    elif cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "rank", "complex_ok", "exact_ok"])
        for n in sorted(report.ranks):
            w.writerow([n, report.ranks[n], report.complex_ok.get(n, ""), report.exact_ok.get(n, "")])
        _emit(buf.getvalue(), out)
    else:
        lines = []
        for n in sorted(report.ranks):
            what = "rank mu" if n == 0 else f"rank delta_{n}"
            flags = []
            if n in report.complex_ok:
                flags.append("delta delta = 0" if n else "mu delta_1 = 0")
                flags[-1] += " ok" if report.complex_ok[n] else " FAIL"
            if n in report.exact_ok:
                flags.append("exact " + ("ok" if report.exact_ok[n] else "FAIL"))
            lines.append(f"{n:>2}  {what} = {report.ranks[n]:<4} " + "  ".join(flags))
        lines.append("PASS" if report.ok else "FAIL")
        _emit("\n".join(lines), out)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", dest="characteristic", type=int, default=0,
                        help="characteristic of the ground field (0 or a prime)")
    common.add_argument("--q", type=_q_arg, default=None,
                        help="'transcendental' (default) or a rational value, char 0 only")
    common.add_argument("--alpha", help="image scale of x: [+|-]q^k, generic, or a scalar")
    common.add_argument("--beta", help="image scale of y")
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--oracle-degree", type=int, default=None,
                        help=f"bar oracle degree (<= {MAX_BAR_DEGREE}; -1 disables it in compute)")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(prog="qexterior",
                                 description="Twisted Hochschild (co)homology of the quantum exterior algebra.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("compute", parents=[common], help="dimensions by complex, closed form and oracle")
    v = sub.add_parser("verify", parents=[common], help="three-way agreement on a sample suite")
    v.add_argument("--samples", type=int, default=0, help="extra random samples drawn with --seed")
    t = sub.add_parser("table", parents=[common], help="reproduce the reference tables")
    t.add_argument("--which", nargs="+", choices=TABLES, default=list(TABLES))
    t.add_argument("--span", type=int, default=2, help="|s|, t range of the iv table")
    t.add_argument("--T", type=int, default=3, help="last Auslander row")
    r = sub.add_parser("resolution-check", parents=[common], help="check the bimodule resolution")
    r.add_argument("--exact-degree", type=int, default=None)
    return ap


_VALUE_FLAGS = ("--alpha", "--beta", "--q")


def _attach_values(argv: list[str]) -> list[str]:
    # "--alpha -q^1" would otherwise read -q^1 as an option
    fixed, i = [], 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv):
            fixed.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            fixed.append(argv[i])
            i += 1
    return fixed


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = ap.parse_args(_attach_values(argv))
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    defaults = {"compute": 3, "verify": 4}
    oracle_degree = args.oracle_degree if args.oracle_degree is not None else defaults.get(args.command, 0)
    cfg = RunConfig(args.command, args.characteristic, args.q, args.alpha, args.beta,
                    args.max_degree, oracle_degree, args.format, args.seed)
    try:
        cfg.validate()
        cfg.descriptor  # field checks
        if args.command == "compute":
            return cmd_compute(cfg, out)
        if args.command == "verify":
            return cmd_verify(cfg, out, samples=args.samples)
        if args.command == "table":
            return cmd_table(cfg, out, args.which, args.span, args.T)
        return cmd_resolution_check(cfg, out, args.exact_degree)
    except UnclassifiableError as exc:
        print(f"unclassifiable: {exc}", file=sys.stderr)
        return EXIT_UNCLASSIFIABLE
    except (ConfigError, FieldError, ParseError, NotAutomorphismError, DegreeTooLargeError,
            ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
