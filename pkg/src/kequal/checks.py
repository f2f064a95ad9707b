"""Cross-check battery run by ``kequal verify``.

Each check compares two independently computed objects for exact equality
and reports the first place they differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Callable, Iterable

from . import oracle
from .operads import z_com, z_hook, z_lie
from .series import (
    Q,
    CycleIndexSeries,
    extract_arity,
    mono_key,
    plethysm,
    render_mono,
    specialize_egf,
)
from .theorems import (
    ModelParams,
    egf_poincare,
    k2_product,
    pipeline,
    theorem1_closed,
    theorem2_closed,
)

DEFAULT_DS = (1, 2, 3, 4)
DEFAULT_KS = (2, 3, 4, 5)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  -- {self.detail}" if self.detail else "")


def first_difference(a: CycleIndexSeries, b: CycleIndexSeries) -> str | None:
    """Describe the first monomial (canonical order) where two series disagree."""
    if a.trunc != b.trunc:
        return f"trunc {a.trunc} != {b.trunc}"
    for m in sorted(set(a.terms) | set(b.terms), key=mono_key):
        if a.coeff(m) != b.coeff(m):
            return f"{render_mono(m)}: {a.coeff(m)} != {b.coeff(m)}"
    return None


def _compare_lists(xs, ys, label: str) -> str | None:
    for n, (x, y) in enumerate(zip(xs, ys)):
        if x != y:
            return f"{label} {n}: {x} != {y}"
    if len(xs) != len(ys):
        return f"length {len(xs)} != {len(ys)}"
    return None


def _series_check(name: str, cases: Iterable[tuple[str, Callable[[], str | None]]]) -> CheckResult:
    for label, run in cases:
        diff = run()
        if diff is not None:
            return CheckResult(name, False, f"{label}: {diff}")
    return CheckResult(name, True)


def check_closed_vs_pipeline(grid, trunc):
    return _series_check("closed form == composition pipeline", (
        (f"d={d} k={k}", lambda d=d, k=k: first_difference(
            theorem1_closed(ModelParams(d, k, trunc)), pipeline(ModelParams(d, k, trunc))))
        for d, k in grid))


def check_egf(grid, trunc):
    return _series_check("specialized cycle index == Poincare EGF", (
        (f"d={d} k={k}", lambda d=d, k=k: _compare_lists(
            specialize_egf(theorem1_closed(ModelParams(d, k, trunc))),
            egf_poincare(ModelParams(d, k, trunc), trunc), "x^"))
        for d, k in grid))


def check_k2(ds, trunc):
    return _series_check("k=2 closed form == configuration space product", (
        (f"d={d}", lambda d=d: first_difference(
            theorem1_closed(ModelParams(d, 2, trunc)), k2_product(d, trunc)))
        for d in ds))


def check_refinement(grid, trunc):
    def run(d, k):
        p = ModelParams(d, k, trunc)
        refined = theorem2_closed(p)
        diff = first_difference(refined.substitute(u=1, w=1), theorem1_closed(p))
        if diff:
            return "u=w=1 " + diff
        diff = first_difference(pipeline(p, refined=True), refined)
        return "refined pipeline " + diff if diff else None

    return _series_check("refined closed form: u=w=1 erasure and refined pipeline",
                         ((f"d={d} k={k}", lambda d=d, k=k: run(d, k)) for d, k in grid))


def check_hooks(n_max, trunc):
    def run(n, k):
        mn = oracle.irreducible(oracle.hook_shape(n, k))
        for other, label in ((oracle.hook_char_alternating(n, k), "exterior powers"),
                             (oracle.hook_char_induced(n, k), "induced sum")):
            for mu in oracle.partitions(n):
                if mn(mu) != other(mu):
                    return f"{label} at class {mu}: {other(mu)} != {mn(mu)}"
        assembled = oracle.cycle_index_from_character(mn).scale(Q ** (k - 2))
        return first_difference(extract_arity(z_hook(k, trunc), n), assembled)

    return _series_check("hook characters agree and match the hook series", (
        (f"n={n} k={k}", lambda n=n, k=k: run(n, k))
        for n in range(2, n_max + 1) for k in range(2, n + 1)))


def check_character_table(n_max):
    for n in range(1, n_max + 1):
        shapes = oracle.partitions(n)
        chars = {s: oracle.irreducible(s) for s in shapes}
        for a in shapes:
            for b in shapes:
                if oracle.hall_inner(chars[a], chars[b]) != (1 if a == b else 0):
                    return CheckResult("character orthonormality", False, f"<{a},{b}> wrong")
        if sum(oracle.mn_char(s, (1,) * n) ** 2 for s in shapes) != factorial(n):
            return CheckResult("character orthonormality", False, f"sum of squared dims n={n}")
    return CheckResult("character orthonormality", True)


def check_integrality(grid, n_max):
    def run(d, k):
        series = theorem1_closed(ModelParams(d, k, n_max))
        for n in range(n_max + 1):
            chi = oracle.character_from_cycle_index(series, n)
            for mu, v in chi.values.items():
                if not v.is_polynomial() or any(c.denominator != 1 for c in v.terms.values()):
                    return f"arity {n} class {mu}: {v}"
            try:
                oracle.decompose(chi, genuine=True)
            except oracle.OracleError as exc:
                return f"arity {n}: {exc}"
        return None

    return _series_check("main theorem decomposes into genuine modules",
                         ((f"d={d} k={k}", lambda d=d, k=k: run(d, k)) for d, k in grid))


def check_com_lie(trunc=5):
    regular = CycleIndexSeries({((1, n),) if n else (): 1 for n in range(trunc + 1)}, trunc)
    diff = first_difference(plethysm(z_com(trunc), z_lie(trunc)), regular)
    return CheckResult("Com o Lie is the regular representation", diff is None, diff or "")


def run_all(d: int | None = None, k: int | None = None, trunc: int = 8) -> list[CheckResult]:
    ds = (d,) if d is not None else DEFAULT_DS
    ks = (k,) if k is not None else DEFAULT_KS
    grid = [(a, b) for a in ds for b in ks]
    hook_n = min(trunc, 8)
    integral_grid = grid if d is not None or k is not None else [(2, 3), (2, 4), (3, 3), (3, 4)]
    return [
        check_closed_vs_pipeline(grid, trunc),
        check_egf(grid, trunc),
        check_k2(ds, trunc),
        check_refinement(grid, trunc),
        check_hooks(hook_n, trunc),
        check_character_table(hook_n),
        check_integrality(integral_grid, min(trunc, 7)),
        check_com_lie(),
    ]

