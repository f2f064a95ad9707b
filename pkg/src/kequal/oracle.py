"""Brute-force symmetric group characters, used as ground truth for the series engine.

Everything here is computed from first principles over conjugacy classes:
Murnaghan-Nakayama for irreducibles, exterior powers of the permutation
representation, and induced characters from Young subgroups.  None of it
touches exp/ln/plethysm.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import comb, factorial, prod

from .series import (
    ZERO,
    CycleIndexSeries,
    Exps,
    LaurentCoeff,
    PrecisionExceeded,
    extract_arity,
    from_partition,
)

CycleType = tuple[int, ...]

MAX_N = 25


class OracleError(ValueError):
    pass


class TooLarge(OracleError):
    pass


class ShapeMismatch(OracleError):
    pass


class InvalidRange(OracleError):
    pass


class ArityMismatch(OracleError):
    pass


class NonIntegralMultiplicity(OracleError):
    pass


class NegativeMultiplicity(OracleError):
    pass


@dataclass
class GradedCharacter:
    n: int
    values: dict[CycleType, LaurentCoeff] = field(default_factory=dict)

    def __call__(self, mu: CycleType) -> LaurentCoeff:
        return self.values.get(tuple(mu), ZERO)

    @classmethod
    def from_ints(cls, n: int, fn) -> GradedCharacter:
        return cls(n, {mu: LaurentCoeff.const(fn(mu)) for mu in partitions(n)})

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.n == other.n and all(self(mu) == other(mu) for mu in partitions(self.n))


@cache
def _partitions(n: int, largest: int) -> tuple[CycleType, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def partitions(n: int) -> list[CycleType]:
    """All partitions of n, reverse lexicographic: ``(n)`` first, ``(1^n)`` last."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_N:
        raise TooLarge(f"refusing to enumerate partitions of {n} > {MAX_N}")
    return list(_partitions(n, n))


def z_lambda(mu: CycleType) -> int:
    """Centralizer order ``prod j^e_j e_j!``; the class of mu has ``n!/z_mu`` elements."""
    return prod(j ** e * factorial(e) for j, e in Counter(mu).items())


def sign(mu: CycleType) -> int:
    return -1 if sum(j - 1 for j in mu) % 2 else 1


@cache
def _mn(shape: CycleType, mu: CycleType) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    # beta-set of the shape: removing an r-rim hook moves one bead from b to b - r
    length = len(shape)
    beta = [shape[i] + (length - 1 - i) for i in range(length)]
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in beads:
            continue
        height = sum(1 for c in beads if b - r < c < b)
        new = sorted((beads - {b}) | {b - r}, reverse=True)
        new_shape = tuple(x - (length - 1 - i) for i, x in enumerate(new))
        new_shape = tuple(p for p in new_shape if p > 0)
        total += (-1) ** height * _mn(new_shape, rest)
    return total


def mn_char(shape: CycleType, mu: CycleType) -> int:
    """Irreducible character value chi_shape(mu) by Murnaghan-Nakayama."""
    shape, mu = tuple(shape), tuple(sorted(mu, reverse=True))
    if sum(shape) != sum(mu):
        raise ShapeMismatch(f"|{shape}| != |{mu}|")
    return _mn(shape, mu)


def irreducible(shape: CycleType) -> GradedCharacter:
    n = sum(shape)
    return GradedCharacter.from_ints(n, lambda mu: mn_char(shape, mu))


def hook_shape(n: int, k: int) -> CycleType:
    return (n - k + 1,) + (1,) * (k - 1)


def ext_power_chars(n: int, sigma: CycleType) -> list[int]:
    """Traces of sigma on the exterior powers of the permutation module: index k holds ``tr on /\\^k W_n``.

    Each j-cycle contributes a factor ``1 - (-t)^j`` to ``det(1 + t sigma)``.
    """
    if sum(sigma) != n:
        raise ShapeMismatch(f"{sigma} is not a cycle type of {n}")
    poly = [1]
    for j in sigma:
        factor = [0] * (j + 1)
        factor[0] = 1
        factor[j] = -((-1) ** j)
        out = [0] * (len(poly) + j)
        for a, x in enumerate(poly):
            for b, y in enumerate(factor):
                out[a + b] += x * y
        poly = out
    return poly + [0] * (n + 1 - len(poly))


def induced_hook_char(n: int, j: int, sigma: CycleType) -> int:
    """Character of ``Ind_{S_j x S_(n-j)}^{S_n} sign (x) trivial`` at sigma.

    Sums over sigma-stable j-subsets, i.e. choices of whole cycles, the sign of
    sigma restricted to the chosen cycles.
    """
    if not 0 <= j <= n or sum(sigma) != n:
        raise InvalidRange(f"need 0 <= j <= n and |sigma| = n, got n={n}, j={j}, sigma={sigma}")
    counts = sorted(Counter(sigma).items())
    total = 0

    def walk(idx: int, remaining: int, weight: int):
        nonlocal total
        if idx == len(counts):
            if remaining == 0:
                total += weight
            return
        length, e = counts[idx]
        for a in range(e + 1):
            if a * length > remaining:
                break
            s = -1 if (length - 1) * a % 2 else 1
            walk(idx + 1, remaining - a * length, weight * comb(e, a) * s)

    walk(0, j, 1)
    return total


def hook_char_alternating(n: int, k: int) -> GradedCharacter:
    """Hook ``(n-k+1, 1^(k-1))`` as ``sum_i (-1)^i /\\^(k-1-i) W_n``."""
    if not 1 <= k <= n:
        raise InvalidRange(f"need 1 <= k <= n, got n={n}, k={k}")

    def value(mu):
        ext = ext_power_chars(n, mu)
        return sum((-1) ** i * ext[k - 1 - i] for i in range(k))

    return GradedCharacter.from_ints(n, value)


def hook_char_induced(n: int, k: int) -> GradedCharacter:
    """Hook character as ``(-1)^(k-1) sum_j (-1)^j Ind(sign_j (x) trivial_(n-j))``."""
    if not 1 <= k <= n:
        raise InvalidRange(f"need 1 <= k <= n, got n={n}, k={k}")

    def value(mu):
        s = sum((-1) ** j * induced_hook_char(n, j, mu) for j in range(k))
        return s if k % 2 else -s

    return GradedCharacter.from_ints(n, value)


def cycle_index_from_character(chi: GradedCharacter) -> CycleIndexSeries:
    """``sum_mu chi(mu) p_mu / z_mu``; an exact homogeneous polynomial of cardinality n."""
    terms = {}
    for mu in partitions(chi.n):
        v = chi(mu)
        if v:
            terms[from_partition(mu)] = v * Fraction(1, z_lambda(mu))
    return CycleIndexSeries(terms)


def character_from_cycle_index(a: CycleIndexSeries, n: int) -> GradedCharacter:
    if a.trunc is not None and n > a.trunc:
        raise PrecisionExceeded(f"arity {n} exceeds known precision {a.trunc}")
    part = extract_arity(a, n)
    return GradedCharacter(n, {mu: part.coeff(from_partition(mu)) * z_lambda(mu)
                               for mu in partitions(n)})


def hall_inner(a: GradedCharacter, b: GradedCharacter) -> LaurentCoeff:
    if a.n != b.n:
        raise ArityMismatch(f"arities differ: {a.n} vs {b.n}")
    total = LaurentCoeff()
    for mu in partitions(a.n):
        total = total + a(mu) * b(mu) * Fraction(1, z_lambda(mu))
    return total


def decompose(chi: GradedCharacter, genuine: bool = True) -> dict[tuple[CycleType, Exps], int | Fraction]:
    """Multiplicity of each irreducible in each (q, u, w) degree.

    With ``genuine`` set, any non-integral or negative multiplicity raises;
    otherwise virtual characters are decomposed as they are.
    """
    out = {}
    for shape in partitions(chi.n):
        mult = hall_inner(chi, irreducible(shape))
        for e, c in mult.sorted_items():
            if genuine and c.denominator != 1:
                raise NonIntegralMultiplicity(f"V{shape} has multiplicity {c} in degree {e}")
            if genuine and c < 0:
                raise NegativeMultiplicity(f"V{shape} has multiplicity {c} in degree {e}")
            out[(shape, e)] = int(c) if c.denominator == 1 else c
    return out
