"""Cycle index sums of Com, Lie, the hook sequence, and operadic suspension."""

from __future__ import annotations

from fractions import Fraction

from .series import (
    ONE,
    Q,
    U,
    W,
    CycleIndexSeries,
    LaurentCoeff,
    card,
    exp_series,
    ln_series,
    mul,
    polynomial_part,
)


class InvalidK(ValueError):
    pass


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def power_sum_log(trunc: int, sign: int = 1, weight: LaurentCoeff = ONE) -> CycleIndexSeries:
    """``sign * sum_{i <= trunc} weight^i p_i / i``; the exponent of Z_Com."""
    return CycleIndexSeries(
        {((i, 1),): weight ** i * Fraction(sign, i) for i in range(1, trunc + 1)}, trunc)


def z_com(trunc: int) -> CycleIndexSeries:
    return exp_series(power_sum_log(trunc))


def _lie(trunc: int, refined: bool) -> CycleIndexSeries:
    out = CycleIndexSeries.zero(trunc)
    for i in range(1, trunc + 1):
        mu = mobius(i)
        if not mu:
            continue
        coeff = -U ** i if refined else LaurentCoeff.const(-1)
        log = ln_series(CycleIndexSeries({(): 1, ((i, 1),): coeff}, trunc))
        weight = LaurentCoeff.const(Fraction(-mu, i))
        if refined:
            weight = weight * U ** -1
        out = out + log.scale(weight)
    return out


def z_lie(trunc: int) -> CycleIndexSeries:
    return _lie(trunc, refined=False)


def z_lie_refined(trunc: int) -> CycleIndexSeries:
    """Z_Lie with ``u`` counting brackets: arity n carries ``u^(n-1)``."""
    return _lie(trunc, refined=True)


def _hook(k: int, trunc: int, refined: bool) -> CycleIndexSeries:
    if k < 2:
        raise InvalidK(f"hook sequence needs k >= 2, got k={k}")
    weight = U if refined else ONE
    work = max(trunc, k - 1)
    full = exp_series(power_sum_log(trunc, 1, weight))
    head = polynomial_part(exp_series(power_sum_log(work, -1, weight)), k - 1)
    sign = (-Q) ** (k - 2)
    out = CycleIndexSeries.constant(sign, trunc) - mul(head, full).scale(sign)
    if refined:
        out = out.scale(W * U ** -k)
    return out


def z_hook(k: int, trunc: int) -> CycleIndexSeries:
    """``(-q)^(k-2) (1 - exp(-P)_{<=k-1} exp(P))`` with ``P = sum p_i/i``.

    Zero below cardinality k; in arity ``n >= k`` it is ``(-q)^(k-2)`` times the
    cycle index of the hook ``V_(n-k+1, 1^(k-1))``.
    """
    return _hook(k, trunc, refined=False)


def z_hook_refined(k: int, trunc: int) -> CycleIndexSeries:
    return _hook(k, trunc, refined=True)


def suspend(a: CycleIndexSeries, d: int) -> CycleIndexSeries:
    """Operadic ``{d-1}`` suspension, applied monomial-wise.

    Assumes each arity-n part consists of cardinality-n monomials, so the
    global ``q^(1-d)`` folds into a per-monomial shift ``q^((n-1)(d-1))``.
    """
    if d < 1:
        raise ValueError(f"suspension needs d >= 1, got d={d}")
    if d == 1:
        return a
    s = d - 1

    def shift(m, c):
        n = card(m)
        flips = sum((i - 1) * e for i, e in m) * s
        factor = LaurentCoeff.mono(-1 if flips % 2 else 1, q=(n - 1) * s)
        return c * factor

    return a.map_coeffs(shift)


def unit_series() -> CycleIndexSeries:
    return CycleIndexSeries.p(1)

