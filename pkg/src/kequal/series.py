"""Sparse truncated cycle index series with exact Laurent coefficients.

A series is a finite sum of power-sum monomials ``p_1^e1 p_2^e2 ...`` whose
coefficients are Laurent polynomials over the rationals in three grading
variables: ``q`` (homological degree), ``u`` and ``w``.  Every series carries a
truncation ``trunc``: coefficients of all monomials with cardinality degree
``sum(i * e_i) <= trunc`` are exact, nothing is claimed beyond that.  A
``trunc`` of ``None`` marks an exact polynomial (infinite precision).
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import cache
from typing import Iterable, Mapping, Union

Exps = tuple[int, int, int]
PMonomial = tuple[tuple[int, int], ...]
Scalar = Union[int, Fraction]


class SeriesError(ValueError):
    pass


class NonzeroConstantTerm(SeriesError):
    pass


class ConstantTermNotOne(SeriesError):
    pass


class PrecisionExceeded(SeriesError):
    pass


class UnboundedPrecision(SeriesError):
    """An infinite expansion was requested of an exact polynomial without a truncation."""


class InnerConstantTerm(SeriesError):
    pass


class ZeroEvaluationPoint(SeriesError):
    pass


# --------------------------------------------------------------------------
# Laurent coefficients


class LaurentCoeff:
    """Laurent polynomial in q, u, w with rational coefficients.

    ``terms`` maps an exponent triple ``(a, b, c)`` to the coefficient of
    ``q^a u^b w^c``.  Zero coefficients are never stored, so equality is a
    dictionary comparison.  Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exps, Scalar] | None = None):
        self.terms: dict[Exps, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[e] = Fraction(c)
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exps, Fraction]) -> LaurentCoeff:
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, value: Scalar) -> LaurentCoeff:
        return cls({(0, 0, 0): value})

    @classmethod
    def mono(cls, coeff: Scalar = 1, q: int = 0, u: int = 0, w: int = 0) -> LaurentCoeff:
        return cls({(q, u, w): coeff})

    @classmethod
    def coerce(cls, value) -> LaurentCoeff:
        if isinstance(value, LaurentCoeff):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"cannot interpret {value!r} as a Laurent coefficient")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentCoeff.const(other)
        if not isinstance(other, LaurentCoeff):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, LaurentCoeff):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = LaurentCoeff.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentCoeff._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentCoeff._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (LaurentCoeff, int, Fraction)):
            return NotImplemented
        return self + (-LaurentCoeff.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return LaurentCoeff._raw({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentCoeff):
            return NotImplemented
        out: dict[Exps, Fraction] = {}
        _acc_product(out, self.terms, other.terms, 1)
        return LaurentCoeff._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only Laurent monomials have negative powers")
            (e, c), = self.terms.items()
            return LaurentCoeff._raw({(e[0] * n, e[1] * n, e[2] * n): Fraction(1) / c ** -n})
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def constant(self) -> Fraction:
        return self.terms.get((0, 0, 0), Fraction(0))

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0) for e in self.terms)

    def is_polynomial(self) -> bool:
        return all(min(e) >= 0 for e in self.terms)

    def twist(self, i: int, refined: bool = False) -> LaurentCoeff:
        """Apply ``q -> (-1)^(i-1) q^i`` and, if refined, ``u -> u^i, w -> w^i``."""
        out = {}
        for (a, b, c), v in self.terms.items():
            if (i - 1) * a % 2:
                v = -v
            out[(i * a, i * b, i * c) if refined else (i * a, b, c)] = v
        return LaurentCoeff._raw(out)

    def substitute(self, q=None, u=None, w=None) -> LaurentCoeff:
        """Partially evaluate: each given variable is replaced by a nonzero rational."""
        points = (q, u, w)
        for p in points:
            if p is not None and Fraction(p) == 0:
                raise ZeroEvaluationPoint("evaluation point must be nonzero")
        out: dict[Exps, Fraction] = defaultdict(Fraction)
        for e, c in self.terms.items():
            key = list(e)
            for slot, p in enumerate(points):
                if p is not None:
                    c = c * Fraction(p) ** e[slot]
                    key[slot] = 0
            out[tuple(key)] += c
        return LaurentCoeff(out)

    def map_exponents(self, fn) -> LaurentCoeff:
        out: dict[Exps, Fraction] = defaultdict(Fraction)
        for e, c in self.terms.items():
            out[fn(e)] += c
        return LaurentCoeff(out)

    def sorted_items(self) -> list[tuple[Exps, Fraction]]:
        return sorted(self.terms.items())

    def __repr__(self):
        return f"LaurentCoeff({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(_render_term(e, c) for e, c in self.sorted_items())


def _render_term(e: Exps, c: Fraction) -> str:
    parts = [f"({c})"]
    for name, k in zip("quw", e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _acc_product(out: dict, x: Mapping[Exps, Fraction], y: Mapping[Exps, Fraction], scale):
    for (a1, b1, c1), v1 in x.items():
        if scale != 1:
            v1 = v1 * scale
        for (a2, b2, c2), v2 in y.items():
            key = (a1 + a2, b1 + b2, c1 + c2)
            out[key] = out.get(key, 0) + v1 * v2


def _prune(raw: dict[Exps, Fraction]) -> LaurentCoeff:
    return LaurentCoeff._raw({e: c for e, c in raw.items() if c})


ZERO = LaurentCoeff()
ONE = LaurentCoeff.const(1)
Q = LaurentCoeff.mono(q=1)
U = LaurentCoeff.mono(u=1)
W = LaurentCoeff.mono(w=1)


def evaluate_coeff(c: LaurentCoeff, q0: Scalar = 1, u0: Scalar = 1, w0: Scalar = 1) -> Fraction:
    """Exact value of ``c`` at ``(q0, u0, w0)``; all three points must be nonzero."""
    return c.substitute(q0, u0, w0).constant()


# --------------------------------------------------------------------------
# p-monomials


def pmono(exponents: Mapping[int, int] | None = None) -> PMonomial:
    """Canonical monomial ``prod p_i^e_i`` from a map ``i -> e_i``."""
    if not exponents:
        return ()
    for i, e in exponents.items():
        if i < 1 or e < 0:
            raise ValueError(f"bad power-sum exponent p_{i}^{e}")
    return tuple(sorted((i, e) for i, e in exponents.items() if e))


def from_partition(parts: Iterable[int]) -> PMonomial:
    counts: dict[int, int] = defaultdict(int)
    for i in parts:
        counts[i] += 1
    return pmono(counts)


def to_partition(m: PMonomial) -> tuple[int, ...]:
    return tuple(sorted((i for i, e in m for _ in range(e)), reverse=True))


def card(m: PMonomial) -> int:
    return sum(i * e for i, e in m)


@cache
def mono_mul(x: PMonomial, y: PMonomial) -> PMonomial:
    if not x:
        return y
    if not y:
        return x
    out = dict(x)
    for i, e in y:
        out[i] = out.get(i, 0) + e
    return tuple(sorted(out.items()))


def mono_key(m: PMonomial) -> tuple:
    """Sort key: cardinality first, then the exponent vector (e_1, e_2, ...)."""
    n = card(m)
    vec = [0] * n
    for i, e in m:
        vec[i - 1] = e
    return (n, tuple(vec))


def render_mono(m: PMonomial) -> str:
    if not m:
        return "1"
    return "*".join(f"p{i}" if e == 1 else f"p{i}^{e}" for i, e in m)


# --------------------------------------------------------------------------
# series


def _min_trunc(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _fits(n: int, trunc: int | None) -> bool:
    return trunc is None or n <= trunc


class CycleIndexSeries:
    """Truncated formal sum of p-monomials with Laurent coefficients."""

    __slots__ = ("trunc", "terms")

    def __init__(self, terms: Mapping[PMonomial, object] | None = None, trunc: int | None = None):
        if trunc is not None and trunc < 0:
            raise ValueError("trunc must be non-negative")
        self.trunc = trunc
        self.terms: dict[PMonomial, LaurentCoeff] = {}
        if terms:
            for m, c in terms.items():
                c = LaurentCoeff.coerce(c)
                if c and _fits(card(m), trunc):
                    self.terms[m] = c

    @classmethod
    def _raw(cls, terms: dict[PMonomial, LaurentCoeff], trunc: int | None) -> CycleIndexSeries:
        obj = cls.__new__(cls)
        obj.trunc = trunc
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, value=1, trunc: int | None = None) -> CycleIndexSeries:
        return cls({(): value}, trunc)

    @classmethod
    def zero(cls, trunc: int | None = None) -> CycleIndexSeries:
        return cls(None, trunc)

    @classmethod
    def p(cls, i: int, coeff=1, trunc: int | None = None) -> CycleIndexSeries:
        return cls({((i, 1),): coeff}, trunc)

    # python operators delegate to the module functions
    def __add__(self, other):
        return add(self, _as_series(other))

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return add(self, -_as_series(other))

    def __rsub__(self, other):
        return add(_as_series(other), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentCoeff)):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if not isinstance(other, CycleIndexSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.terms == other.terms

    def __hash__(self):
        return hash((self.trunc, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"CycleIndexSeries({self}, trunc={self.trunc})"

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for m, c in self.sorted_terms():
            chunks.append(f"[{c}]" if not m else f"[{c}]*{render_mono(m)}")
        return " + ".join(chunks)

    def coeff(self, m: PMonomial) -> LaurentCoeff:
        return self.terms.get(m, ZERO)

    def constant_term(self) -> LaurentCoeff:
        return self.terms.get((), ZERO)

    def sorted_terms(self) -> list[tuple[PMonomial, LaurentCoeff]]:
        return sorted(self.terms.items(), key=lambda t: mono_key(t[0]))

    def min_card(self, skip_constant: bool = False) -> int | None:
        cards = [card(m) for m in self.terms if m or not skip_constant]
        return min(cards) if cards else None

    def max_card(self) -> int:
        return max((card(m) for m in self.terms), default=0)

    def scale(self, c) -> CycleIndexSeries:
        c = LaurentCoeff.coerce(c)
        if not c:
            return CycleIndexSeries.zero(self.trunc)
        out = {}
        for m, v in self.terms.items():
            v = v * c
            if v:
                out[m] = v
        return CycleIndexSeries._raw(out, self.trunc)

    def with_trunc(self, trunc: int | None) -> CycleIndexSeries:
        """Reinterpret precision; callers assert the new bound is justified."""
        return CycleIndexSeries(self.terms, trunc)

    def map_coeffs(self, fn) -> CycleIndexSeries:
        out = {}
        for m, c in self.terms.items():
            c = fn(m, c)
            if c:
                out[m] = c
        return CycleIndexSeries._raw(out, self.trunc)

    def substitute(self, q=None, u=None, w=None) -> CycleIndexSeries:
        return self.map_coeffs(lambda m, c: c.substitute(q, u, w))


def _as_series(x) -> CycleIndexSeries:
    if isinstance(x, CycleIndexSeries):
        return x
    return CycleIndexSeries.constant(x)


def add(a: CycleIndexSeries, b: CycleIndexSeries) -> CycleIndexSeries:
    trunc = _min_trunc(a.trunc, b.trunc)
    out = {m: c for m, c in a.terms.items() if _fits(card(m), trunc)}
    for m, c in b.terms.items():
        if not _fits(card(m), trunc):
            continue
        v = out[m] + c if m in out else c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return CycleIndexSeries._raw(out, trunc)


def _graded(a: CycleIndexSeries) -> dict[int, list[tuple[PMonomial, LaurentCoeff]]]:
    parts: dict[int, list] = defaultdict(list)
    for m, c in a.terms.items():
        parts[card(m)].append((m, c))
    return parts


def _hmul(acc: dict, xs, ys, scale=1):
    """Accumulate ``scale * xs * ys`` into ``acc`` (monomial -> raw coefficient dict)."""
    for m1, c1 in xs:
        for m2, c2 in ys:
            target = acc.setdefault(mono_mul(m1, m2), {})
            _acc_product(target, c1.terms, c2.terms, scale)


def _finish(acc: dict, trunc: int | None) -> CycleIndexSeries:
    out = {}
    for m, raw in acc.items():
        c = _prune(raw)
        if c:
            out[m] = c
    return CycleIndexSeries._raw(out, trunc)


def mul(a: CycleIndexSeries, b: CycleIndexSeries) -> CycleIndexSeries:
    trunc = _min_trunc(a.trunc, b.trunc)
    ga, gb = _graded(a), _graded(b)
    acc: dict = {}
    for na, xs in ga.items():
        for nb, ys in gb.items():
            if _fits(na + nb, trunc):
                _hmul(acc, xs, ys)
    return _finish(acc, trunc)


def truncate(a: CycleIndexSeries, n: int) -> CycleIndexSeries:
    if not _fits(n, a.trunc):
        raise PrecisionExceeded(f"cannot truncate at {n}: series only known to {a.trunc}")
    return CycleIndexSeries._raw({m: c for m, c in a.terms.items() if card(m) <= n}, n)


def polynomial_part(a: CycleIndexSeries, n: int) -> CycleIndexSeries:
    """The cardinality <= n part of ``a`` as an exact polynomial (``trunc=None``).

    This is the truncation operator used inside formulas, where ``(F)_{<=n}``
    denotes a polynomial rather than a loss of precision.
    """
    return truncate(a, n).with_trunc(None)


def extract_arity(a: CycleIndexSeries, n: int) -> CycleIndexSeries:
    """Homogeneous cardinality-n part, returned as an exact polynomial."""
    if not _fits(n, a.trunc):
        raise PrecisionExceeded(f"arity {n} exceeds known precision {a.trunc}")
    return CycleIndexSeries._raw({m: c for m, c in a.terms.items() if card(m) == n}, None)


def _require_trunc(a: CycleIndexSeries, what: str) -> int:
    if a.trunc is None:
        raise UnboundedPrecision(f"{what} of an exact polynomial needs a truncation; use with_trunc")
    return a.trunc


def _homogeneous_parts(a: CycleIndexSeries, trunc: int) -> list[list]:
    g = _graded(a)
    return [g.get(n, []) for n in range(trunc + 1)]


def exp_series(a: CycleIndexSeries) -> CycleIndexSeries:
    """``exp(a)`` for ``a`` without constant term.

    Uses the Euler-operator recurrence ``n g_n = sum_j j f_j g_(n-j)``, which
    is exact over any Q-algebra and equal to the truncated sum of ``a^j/j!``.
    """
    if a.constant_term():
        raise NonzeroConstantTerm("exp needs a series with zero constant term")
    N = _require_trunc(a, "exp")
    f = _homogeneous_parts(a, N)
    g: list[list] = [[((), ONE)]]
    for n in range(1, N + 1):
        acc: dict = {}
        for j in range(1, n + 1):
            if f[j] and g[n - j]:
                _hmul(acc, f[j], g[n - j], Fraction(j, n))
        g.append(list(_finish(acc, None).terms.items()))
    return CycleIndexSeries._raw({m: c for part in g for m, c in part}, N)


def ln_series(a: CycleIndexSeries) -> CycleIndexSeries:
    """``ln(a)`` for ``a`` with constant term exactly 1."""
    if a.constant_term() != ONE:
        raise ConstantTermNotOne(f"ln needs constant term 1, got {a.constant_term()}")
    N = _require_trunc(a, "ln")
    g = _homogeneous_parts(a, N)
    f: list[list] = [[]]
    for n in range(1, N + 1):
        acc: dict = {}
        _hmul(acc, g[n], [((), ONE)])
        for j in range(1, n):
            if f[j] and g[n - j]:
                _hmul(acc, f[j], g[n - j], Fraction(-j, n))
        f.append(list(_finish(acc, None).terms.items()))
    return CycleIndexSeries._raw({m: c for part in f for m, c in part}, N)


def pow_by_coeff(base: CycleIndexSeries, expo) -> CycleIndexSeries:
    """``base ** expo = exp(expo * ln(base))`` for a Laurent-coefficient exponent.

    Computed by the power recurrence ``n h_n = sum_j (expo*j - (n-j)) g_j h_(n-j)``.
    """
    expo = LaurentCoeff.coerce(expo)
    if base.constant_term() != ONE:
        raise ConstantTermNotOne(f"power needs constant term 1, got {base.constant_term()}")
    N = _require_trunc(base, "power")
    g = _homogeneous_parts(base, N)
    h: list[list] = [[((), ONE)]]
    for n in range(1, N + 1):
        acc: dict = {}
        for j in range(1, n + 1):
            if not (g[j] and h[n - j]):
                continue
            factor = (expo * j - (n - j)) / n
            if not factor:
                continue
            inner: dict = {}
            _hmul(inner, g[j], h[n - j])
            for m, raw in inner.items():
                _acc_product(acc.setdefault(m, {}), raw, factor.terms, 1)
        h.append(list(_finish(acc, None).terms.items()))
    return CycleIndexSeries._raw({m: c for part in h for m, c in part}, N)


def twist_power(inner: CycleIndexSeries, i: int, refined: bool = False,
                trunc: int | None = None) -> CycleIndexSeries:
    """``p_i * inner``: ``q -> (-1)^(i-1) q^i``, ``p_j -> p_(ij)``, refined also ``u -> u^i, w -> w^i``."""
    out = {}
    for m, c in inner.terms.items():
        if _fits(i * card(m), trunc):
            out[tuple((i * j, e) for j, e in m)] = c.twist(i, refined)
    if inner.trunc is not None:
        trunc = _min_trunc(trunc, i * inner.trunc + i - 1)
    return CycleIndexSeries._raw(out, trunc)


def plethysm(outer: CycleIndexSeries, inner: CycleIndexSeries, refined: bool = False) -> CycleIndexSeries:
    """Graded plethysm ``outer o inner``: substitute ``p_i -> p_i * inner`` in ``outer``."""
    if inner.constant_term():
        raise InnerConstantTerm("plethysm needs an inner series with zero constant term")
    trunc = _min_trunc(outer.trunc, inner.trunc)
    c0 = inner.min_card()
    images: dict[PMonomial, CycleIndexSeries] = {(): CycleIndexSeries.constant(1, trunc)}
    powers: dict[int, CycleIndexSeries] = {}

    def image(m: PMonomial) -> CycleIndexSeries:
        if m in images:
            return images[m]
        i, e = m[-1]
        rest = m[:-1] + (((i, e - 1),) if e > 1 else ())
        if i not in powers:
            powers[i] = twist_power(inner, i, refined, trunc)
        images[m] = mul(image(rest), powers[i])
        return images[m]

    acc: dict[PMonomial, LaurentCoeff] = {}
    for m, c in sorted(outer.terms.items(), key=lambda t: mono_key(t[0])):
        if m and (c0 is None or not _fits(card(m) * c0, trunc)):
            continue
        for m2, c2 in image(m).terms.items():
            v = c * c2
            acc[m2] = acc[m2] + v if m2 in acc else v
    return CycleIndexSeries._raw({m: c for m, c in acc.items() if c}, trunc)


def specialize_egf(a: CycleIndexSeries) -> list[LaurentCoeff]:
    """Set ``p_1 = x`` and ``p_i = 0`` for ``i >= 2``; entry n is the coefficient of x^n."""
    n_max = a.trunc if a.trunc is not None else a.max_card()
    out = [ZERO] * (n_max + 1)
    for m, c in a.terms.items():
        if not m:
            out[0] = c
        elif len(m) == 1 and m[0][0] == 1:
            out[m[0][1]] = c
    return out
