"""Command-line interface: exact tables of cycle index sums, Betti numbers and characters.

stdout carries data, stderr diagnostics.  Exit codes: 0 ok, 1 a verification
identity failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import factorial

from . import checks, oracle
from .series import (
    CycleIndexSeries,
    LaurentCoeff,
    evaluate_coeff,
    extract_arity,
    pmono,
    render_mono,
    specialize_egf,
)
from .theorems import (
    GRADED_FACTOR_NOTE,
    InvalidParams,
    ModelParams,
    egf_poincare,
    k2_product,
    pipeline,
    theorem1_closed,
    theorem2_closed,
)

COMMANDS = ("compute", "betti", "characters", "decompose", "verify")


class UsageError(ValueError):
    pass


@dataclass
class JobSpec:
    command: str
    d: int | None = None
    k: int | None = None
    trunc: int | None = None
    n: int | None = None
    xorder: int | None = None
    refined: bool = False
    method: str = "closed"
    format: str = "json"
    at_q: str | None = None
    at_u: str | None = None
    at_w: str | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.command == "verify":
            if self.d is not None and self.d < 1:
                raise UsageError(f"d must be >= 1, got {self.d}")
            if self.k is not None and self.k < 2:
                raise UsageError(f"k must be >= 2, got {self.k}")
            return
        if self.d is None or self.k is None:
            raise UsageError(f"{self.command} needs --d and --k")
        size = {"compute": self.trunc, "betti": self.xorder}.get(self.command, self.n)
        try:
            ModelParams(self.d, self.k, size if size is not None else 0)
        except InvalidParams as exc:
            raise UsageError(str(exc)) from exc
        if self.method == "k2" and self.k != 2:
            raise UsageError("method k2 computes the ordinary configuration space; it needs --k 2")
        if self.method == "k2" and self.refined:
            raise UsageError("method k2 has no refined form")
        if self.command not in ("compute", "characters") and any(self.evaluation()):
            raise UsageError("--at-q/--at-u/--at-w apply only to compute and characters")
        for value in self.evaluation():
            if value is not None and value == 0:
                raise UsageError("evaluation points must be nonzero")

    def evaluation(self) -> tuple[Fraction | None, Fraction | None, Fraction | None]:
        try:
            return tuple(None if v is None else Fraction(v) for v in (self.at_q, self.at_u, self.at_w))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad rational: {exc}") from exc

    def params(self, size: int) -> ModelParams:
        return ModelParams(self.d, self.k, size)


# --------------------------------------------------------------------------
# serialization


def coeff_to_json(c: LaurentCoeff) -> list[dict]:
    return [{"q": a, "u": b, "w": w, "num": str(v.numerator), "den": str(v.denominator)}
            for (a, b, w), v in c.sorted_items()]


def coeff_from_json(entries: list[dict]) -> LaurentCoeff:
    return LaurentCoeff({(e["q"], e["u"], e["w"]): Fraction(int(e["num"]), int(e["den"]))
                         for e in entries})


def series_to_json(s: CycleIndexSeries) -> dict:
    return {
        "trunc": s.trunc,
        "terms": [{"p": {str(i): e for i, e in m}, "coeff": coeff_to_json(c)}
                  for m, c in s.sorted_terms()],
    }


def series_from_json(doc: dict) -> CycleIndexSeries:
    terms = {}
    for t in doc["terms"]:
        terms[pmono({int(i): e for i, e in t["p"].items()})] = coeff_from_json(t["coeff"])
    return CycleIndexSeries(terms, doc["trunc"])


def render_rational(v: Fraction) -> str:
    return str(v)


def render_coeff(c: LaurentCoeff) -> str:
    return str(c)


def dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# --------------------------------------------------------------------------
# commands


def _header(spec: JobSpec, params: ModelParams | None = None) -> dict:
    head = {"job": {k: v for k, v in asdict(spec).items()}}
    if params is not None:
        head["graded_factor_only"] = params.graded_factor_only
        if spec.refined and params.graded_factor_only:
            head["note"] = GRADED_FACTOR_NOTE
    return head


def _text_header(head: dict) -> list[str]:
    lines = [f"# {key}: {value}" for key, value in sorted(head["job"].items())]
    for key in ("graded_factor_only", "note"):
        if key in head:
            lines.append(f"# {key}: {head[key]}")
    return lines


def _series_for(spec: JobSpec, size: int) -> tuple[ModelParams, CycleIndexSeries]:
    params = spec.params(size)
    if spec.method == "k2":
        return params, k2_product(spec.d, size)
    if spec.method == "pipeline":
        return params, pipeline(params, refined=spec.refined)
    return params, (theorem2_closed(params) if spec.refined else theorem1_closed(params))


def _evaluate(spec: JobSpec, c: LaurentCoeff) -> LaurentCoeff:
    q, u, w = spec.evaluation()
    if q is None and u is None and w is None:
        return c
    return c.substitute(q, u, w)


def cmd_compute(spec: JobSpec) -> tuple[str, int]:
    params, series = _series_for(spec, spec.trunc)
    series = series.map_coeffs(lambda m, c: _evaluate(spec, c))
    dims = specialize_egf(series)
    head = _header(spec, params)
    arities = []
    for n in range(series.trunc + 1):
        block = extract_arity(series, n)
        arities.append({"n": n, "graded_dimension": dims[n] * factorial(n), "series": block})
    if spec.format == "json":
        doc = dict(head)
        doc["series"] = series_to_json(series)
        doc["arities"] = [{"n": a["n"], "graded_dimension": coeff_to_json(a["graded_dimension"]),
                           "terms": series_to_json(a["series"])["terms"]} for a in arities]
        return dump(doc), 0
    lines = _text_header(head)
    for a in arities:
        lines.append(f"arity {a['n']}  dimension {render_coeff(a['graded_dimension'])}")
        for m, c in a["series"].sorted_terms():
            lines.append(f"  {render_mono(m)}  {render_coeff(c)}")
    return "\n".join(lines) + "\n", 0


def betti_rows(params: ModelParams, xorder: int) -> list[dict]:
    rows = []
    for n, c in enumerate(egf_poincare(params, xorder)):
        poly = c * factorial(n)
        degrees = [e[0] for e in poly.terms]
        top = max(degrees, default=0)
        betti = [int(poly.terms.get((i, 0, 0), 0)) for i in range(top + 1)]
        rows.append({"n": n, "poincare": poly, "betti": betti,
                     "euler": evaluate_coeff(poly, -1)})
    return rows


def cmd_betti(spec: JobSpec) -> tuple[str, int]:
    params = spec.params(spec.xorder)
    rows = betti_rows(params, spec.xorder)
    head = _header(spec, params)
    if spec.format == "json":
        doc = dict(head)
        doc["rows"] = [{"n": r["n"], "poincare": coeff_to_json(r["poincare"]), "betti": r["betti"],
                        "euler": render_rational(r["euler"])} for r in rows]
        return dump(doc), 0
    table = [("n", "poincare", "betti", "euler")]
    table += [(str(r["n"]), _poly_text(r["poincare"]), ",".join(map(str, r["betti"])),
               render_rational(r["euler"])) for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(4)]
    lines = _text_header(head)
    lines += ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in table]
    return "\n".join(lines) + "\n", 0


def _poly_text(c: LaurentCoeff) -> str:
    """Compact ``1 + 4q^3 + 3q^4`` rendering for univariate q-polynomials."""
    parts = []
    for (a, _, _), v in c.sorted_items():
        mono = "" if a == 0 else ("q" if a == 1 else f"q^{a}")
        coef = str(v) if (v != 1 or not mono) else ""
        parts.append(coef + mono)
    return " + ".join(parts).replace("+ -", "- ") or "0"


def _shape(parts) -> str:
    return "(" + ",".join(map(str, parts)) + ")"


def cmd_characters(spec: JobSpec) -> tuple[str, int]:
    params, series = _series_for(spec, spec.n)
    chi = oracle.character_from_cycle_index(series, spec.n)
    head = _header(spec, params)
    classes = oracle.partitions(spec.n)
    values = {mu: _evaluate(spec, chi(mu)) for mu in classes}
    if spec.format == "json":
        doc = dict(head)
        doc["characters"] = [{"class": list(mu), "class_size": factorial(spec.n) // oracle.z_lambda(mu),
                              "value": coeff_to_json(values[mu])} for mu in classes]
        return dump(doc), 0
    lines = _text_header(head)
    width = max(len(_shape(mu)) for mu in classes)
    lines += [f"{_shape(mu).ljust(width)}  {render_coeff(values[mu])}" for mu in classes]
    return "\n".join(lines) + "\n", 0


def cmd_decompose(spec: JobSpec) -> tuple[str, int]:
    params, series = _series_for(spec, spec.n)
    chi = oracle.character_from_cycle_index(series, spec.n)
    mults = oracle.decompose(chi, genuine=True)
    head = _header(spec, params)
    entries = [(shape, e, m) for (shape, e), m in mults.items() if m]
    entries.sort(key=lambda t: (t[1], tuple(-x for x in t[0])))
    if spec.format == "json":
        doc = dict(head)
        doc["decomposition"] = [{"shape": list(s), "q": e[0], "u": e[1], "w": e[2],
                                 "multiplicity": str(m)} for s, e, m in entries]
        return dump(doc), 0
    lines = _text_header(head)
    lines += [f"q^{e[0]} u^{e[1]} w^{e[2]}  V{_shape(s)}  x{m}" for s, e, m in entries]
    return "\n".join(lines) + "\n", 0


def cmd_verify(spec: JobSpec) -> tuple[str, int]:
    trunc = spec.trunc if spec.trunc is not None else 8
    results = checks.run_all(spec.d, spec.k, trunc)
    ok = all(r.passed for r in results)
    head = _header(spec)
    if spec.format == "json":
        doc = dict(head)
        doc["checks"] = [asdict(r) for r in results]
        doc["passed"] = ok
        return dump(doc), 0 if ok else 1
    lines = _text_header(head) + [r.line() for r in results]
    lines.append("all checks passed" if ok else "verification FAILED")
    return "\n".join(lines) + "\n", 0 if ok else 1


HANDLERS = {
    "compute": cmd_compute,
    "betti": cmd_betti,
    "characters": cmd_characters,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
}


# --------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kequal",
        description="Exact cycle index sums for the homology of non-k-equal configuration spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_dk=True):
        p.add_argument("--d", type=int, required=need_dk, help="ambient dimension (>= 1)")
        p.add_argument("--k", type=int, required=need_dk, help="non-k-equal threshold (>= 2)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", "-o", help="write to this file instead of stdout")

    def model(p):
        p.add_argument("--refined", action="store_true",
                       help="track short (u) and long (w) bracket gradings")
        p.add_argument("--method", choices=("closed", "pipeline", "k2"), default="closed",
                       help="closed-form product, stepwise composition product, or the k=2 product")

    def at(p):
        for var in "quw":
            p.add_argument(f"--at-{var}", dest=f"at_{var}", metavar="RATIONAL",
                           help=f"evaluate at {var} = RATIONAL")

    p = sub.add_parser("compute", help="the cycle index sum truncated at --trunc")
    common(p)
    model(p)
    at(p)
    p.add_argument("--trunc", type=int, required=True)

    p = sub.add_parser("betti", help="Poincare polynomials, Betti numbers, Euler characteristics")
    common(p)
    p.add_argument("--xorder", type=int, required=True, help="largest arity n")

    for name, text in (("characters", "graded character in arity --n"),
                       ("decompose", "irreducible multiplicities in arity --n")):
        p = sub.add_parser(name, help=text)
        common(p)
        model(p)
        if name == "characters":
            at(p)
        p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", help="run the exact cross-check battery")
    common(p, need_dk=False)
    p.add_argument("--trunc", type=int, default=8)
    return parser


def spec_from_args(args: argparse.Namespace) -> JobSpec:
    fields = JobSpec.__dataclass_fields__
    return JobSpec(**{k: v for k, v in vars(args).items() if k in fields and v is not None})


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    spec = spec_from_args(args)
    try:
        spec.validate()
        text, code = HANDLERS[spec.command](spec)
    except oracle.OracleError as exc:
        print(f"kequal: {exc}", file=sys.stderr)
        return 1
    except (UsageError, InvalidParams, ValueError) as exc:
        print(f"kequal: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
