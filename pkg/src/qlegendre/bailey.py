"""Bailey pairs with the kernel [2L+a choose L-j], lemma iteration and limits.

A Bailey state pairs a closed-form alpha sequence with a function F(L) such
that F(L) = sum_j alpha_j [2L+a choose L-j] in base q^b.  One lemma step
multiplies alpha_j by q^{b(j^2+aj)} and replaces F by the weighted r-sum

    F'(L) = sum_{r=0}^{L} q^{b(r^2+ar)} (q^b)_{2L+a} / ((q^b)_{L-r} (q^b)_{2r+a}) F(r).

Exponents of alpha are always expressed in q itself, so states built over
q^2 carry their base separately.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable

from .exactalg import ONE, ZERO, QAlgebraError, QPoly, QSeries
from .qkit import (
    QuadraticExponent,
    divide_by_qpoch,
    euler_inverse,
    legendre3,
    pochhammer_quotient,
    qbinom,
    theta_sum,
    theta_weight,
)


class ConventionMismatch(QAlgebraError):
    """A seed does not satisfy its defining relation in the stated convention."""


@dataclass(frozen=True)
class AlphaSpec:
    """alpha_j = sign * (-1)^j [if alternating] * ((j+shift)/3) [if shift] * q^{exponent(j)}."""

    exponent: QuadraticExponent
    character_shift: int | None = None
    alternating: bool = False
    sign: int = 1
    base: int = 1

    def weight(self, j: int) -> int:
        return theta_weight(j, self.alternating, self.character_shift, self.sign)

    def term(self, j: int) -> tuple[int, int] | None:
        """(coefficient, q-exponent) of alpha_j, or None when alpha_j = 0."""
        w = self.weight(j)
        if not w:
            return None
        return w, self.exponent(j)

    def is_integral(self) -> bool:
        if self.character_shift is None:
            residues = {0}
            modulus = 1
        else:
            residues = {r for r in range(3) if legendre3(r + self.character_shift)}
            modulus = 3
        return self.exponent.is_integral_on(residues, modulus)

    def reflected(self) -> "AlphaSpec":
        """The sequence j -> alpha_{-j}."""
        shift, sign = self.character_shift, self.sign
        if shift is not None:
            # ((s - j)/3) = -((j - s)/3)
            shift, sign = (-shift) % 3, -sign
        return replace(self, exponent=self.exponent.reflected(), character_shift=shift, sign=sign)

    def bumped(self, a: int, times: int = 1) -> "AlphaSpec":
        """alpha_j * q^{times * base * (j^2 + a j)}."""
        b = self.base * times
        return replace(self, exponent=self.exponent.plus(A=b, B=b * a))

    def binomial_sum(self, L: int, a: int, slot: str = "L-j") -> QPoly:
        """sum_j alpha_j [2L+a choose L-j] (or L+j) in base q^base."""
        top = 2 * L + a
        acc: list = []
        for j in range(-L - a, L + a + 1):
            bottom = L - j if slot == "L-j" else L + j
            if bottom < 0 or bottom > top:
                continue
            t = self.term(j)
            if t is None:
                continue
            w, e = t
            if e < 0:
                raise QAlgebraError(f"alpha_{j} has negative exponent {e}")
            b = qbinom(top, bottom, self.base).coeffs
            need = e + len(b)
            if len(acc) < need:
                acc.extend([0] * (need - len(acc)))
            if w == 1:
                for i, x in enumerate(b, e):
                    acc[i] += x
            else:
                for i, x in enumerate(b, e):
                    acc[i] += w * x
        return QPoly._raw(acc)

    def theta(self, order: int) -> QSeries:
        return theta_sum(self.exponent, order, alternating=self.alternating,
                         character_shift=self.character_shift, sign=self.sign)


@dataclass(frozen=True)
class SeedDescriptor:
    """A closed-form evaluation sum_j alpha_j [2L+a choose L+-j] = F(L) as printed."""

    name: str
    alpha: AlphaSpec
    a: int
    F: Callable[[int], QPoly]
    slot: str = "L-j"

    @property
    def base(self) -> int:
        return self.alpha.base

    def lhs(self, L: int) -> QPoly:
        return self.alpha.binomial_sum(L, self.a, self.slot)


class BaileyState:
    """alpha together with a memoized F(L); the pair satisfies the kernel relation."""

    def __init__(self, a: int, alpha: AlphaSpec, F: Callable[[int], QPoly],
                 depth: int = 0, seed: SeedDescriptor | None = None):
        if a not in (0, 1):
            raise ValueError("a must be 0 or 1")
        self.a = a
        self.alpha = alpha
        self._F = F
        self._memo: dict[int, QPoly] = {}
        self._lock = threading.Lock()
        self.depth = depth
        self.seed = seed

    @property
    def base(self) -> int:
        return self.alpha.base

    def F(self, L: int) -> QPoly:
        hit = self._memo.get(L)
        if hit is None:
            hit = self._F(L)
            with self._lock:
                self._memo.setdefault(L, hit)
        return hit

    def relation_rhs(self, L: int) -> QPoly:
        return self.alpha.binomial_sum(L, self.a, "L-j")

    def __repr__(self) -> str:
        name = self.seed.name if self.seed else "?"
        return f"BaileyState(seed={name}, a={self.a}, depth={self.depth}, alpha={self.alpha})"


@lru_cache(maxsize=None)
def bailey_weight(L: int, r: int, a: int, base: int) -> QPoly:
    """q^{b(r^2+ar)} (q^b)_{2L+a} / ((q^b)_{L-r} (q^b)_{2r+a})."""
    return pochhammer_quotient(2 * L + a, (L - r, 2 * r + a), base).shift(base * (r * r + a * r))


def canonicalize_seed(seed: SeedDescriptor, probes=range(3)) -> BaileyState:
    """Re-index a printed seed into the [2L+a choose L-j] convention and probe it."""
    for L in probes:
        if seed.lhs(L) != seed.F(L):
            raise ConventionMismatch(f"{seed.name}: printed identity fails at L={L}")
    alpha = seed.alpha.reflected() if seed.slot == "L+j" else seed.alpha
    state = BaileyState(seed.a, alpha, seed.F, seed=seed)
    for L in probes:
        if state.relation_rhs(L) != state.F(L):
            raise ConventionMismatch(f"{seed.name}: re-indexed relation fails at L={L}")
    return state


def bailey_step(state: BaileyState) -> BaileyState:
    a, b, prev = state.a, state.base, state

    def F(L: int) -> QPoly:
        acc = ZERO
        for r in range(L + 1):
            f = prev.F(r)
            if not f.is_zero():
                acc = acc + bailey_weight(L, r, a, b) * f
        return acc

    return BaileyState(a, state.alpha.bumped(a), F, depth=state.depth + 1, seed=state.seed)


def iterate(state: BaileyState, v: int) -> BaileyState:
    for _ in range(v):
        state = bailey_step(state)
    return state


@dataclass
class StateReport:
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.rows)

    @property
    def first_failure(self):
        for row in self.rows:
            if not row[1]:
                return row
        return None


def verify_state(state: BaileyState, L_max: int) -> StateReport:
    """Check F(L) == sum_j alpha_j [2L+a choose L-j] for L = 0..L_max."""
    report = StateReport()
    for L in range(L_max + 1):
        lhs, rhs = state.F(L), state.relation_rhs(L)
        mismatch = None
        if lhs != rhs:
            for e in range(max(len(lhs), len(rhs))):
                if lhs[e] != rhs[e]:
                    mismatch = (e, lhs[e], rhs[e])
                    break
        report.rows.append((L, mismatch is None, mismatch))
    return report


# ---------------------------------------------------------------------------
# multisums
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultisumSpec:
    """Shape of a v-fold sum over n_1..n_v >= 0 with N_i = n_i + ... + n_v.

    Series form:  prefactor * sum q^{base * sum_i N_i (N_i + c)} tail(n_v)
                  / ((q^b)_{n_1} ... (q^b)_{n_{v-1}} (q^b)_{2 n_v + d})
    Finite form:  the same summand times (q^b)_{2L+a} / (q^b)_{L-s-N_1}.

    ``tail`` returns a polynomial in q (it carries any q^{n_v} factor).
    ``tail_den(n)``, when given, is an exponent k: the series form also
    divides the summand by (1 - q^k).  The finite form does not accept it.
    """

    base: int
    c: int
    d: int
    tail: Callable[[int], QPoly]
    a: int = 0
    s: int = 0
    prefactor: QPoly = ONE
    label: str = ""
    tail_den: Callable[[int], int] | None = None


def _k_max(base: int, c: int, bound: int) -> int:
    K = 0
    while base * (K + 1) * (K + 1 + c) <= bound:
        K += 1
    return K


def multisum_lhs(spec: MultisumSpec, v: int, order: int, cutoff: int | None = None) -> QSeries:
    """Series form of the multisum to q^order, skipping branches with exponent > cutoff."""
    if v < 1:
        raise ValueError("v must be positive")
    cutoff = order if cutoff is None else cutoff
    b, c = spec.base, spec.c
    kmax = _k_max(b, c, cutoff)

    def lead(K: int) -> int:
        return b * K * (K + c)

    level: list[QSeries | None] = []
    for K in range(kmax + 1):
        e = lead(K)
        if e > order:
            level.append(None)
            continue
        t = QSeries.from_poly(spec.tail(K), order - e)
        if spec.tail_den is not None:
            t = t.div_binomial(spec.tail_den(K), -1)
        level.append(divide_by_qpoch(t, 2 * K + spec.d, b))
    for _ in range(v - 1):
        nxt: list[QSeries | None] = []
        for K in range(kmax + 1):
            e = lead(K)
            if e > order:
                nxt.append(None)
                continue
            n = order - e
            acc = QSeries.zero(n)
            for K2 in range(K + 1):
                g = level[K2]
                if g is None:
                    continue
                # level entries are stored divided by their leading power
                e2 = lead(K2)
                if e2 > n:
                    continue
                part = divide_by_qpoch(g.truncate(n - e2), K - K2, b)
                acc = acc + QSeries._raw(n, [0] * e2 + list(part.coeffs))
            nxt.append(acc)
        level = nxt
    total = QSeries.zero(order)
    for K, g in enumerate(level):
        if g is None:
            continue
        e = lead(K)
        total = total + QSeries._raw(order, [0] * e + list(g.coeffs))
    if spec.prefactor != ONE:
        total = total * QSeries.from_poly(spec.prefactor, order)
    return total


class _FiniteMultisum:
    """Inner polynomial tables for the finite form, shared across L."""

    def __init__(self, spec: MultisumSpec, v: int):
        self.spec, self.v = spec, v
        self.tables: list[list[QPoly]] = [[] for _ in range(v)]
        self._lock = threading.Lock()

    def _extend(self, kmax: int) -> None:
        sp = self.spec
        b, c, d = sp.base, sp.c, sp.d
        inner = self.tables[self.v - 1]
        while len(inner) <= kmax:
            K = len(inner)
            inner.append(sp.tail(K).shift(b * K * (K + c)))
        for lvl in range(self.v - 2, -1, -1):
            below, here = self.tables[lvl + 1], self.tables[lvl]
            while len(here) <= kmax:
                K = len(here)
                acc = ZERO
                for K2 in range(K + 1):
                    p = below[K2]
                    if not p.is_zero():
                        w = pochhammer_quotient(2 * K + d, (K - K2, 2 * K2 + d), b)
                        acc = acc + w * p
                here.append(acc.shift(b * K * (K + c)))

    def value(self, L: int) -> QPoly:
        sp = self.spec
        top = L - sp.s
        if top < 0:
            return ZERO
        with self._lock:
            self._extend(top)
        outer = self.tables[0]
        acc = ZERO
        for K in range(top + 1):
            p = outer[K]
            if not p.is_zero():
                acc = acc + pochhammer_quotient(2 * L + sp.a, (top - K, 2 * K + sp.d), sp.base) * p
        return acc * sp.prefactor if sp.prefactor != ONE else acc


_FINITE_CACHE: dict[tuple[MultisumSpec, int], _FiniteMultisum] = {}


def multisum_finite(spec: MultisumSpec, v: int, L: int) -> QPoly:
    """Finite (polynomial) form of the multisum at a given L."""
    if v < 1:
        raise ValueError("v must be positive")
    if spec.tail_den is not None:
        raise ValueError("finite multisums need a polynomial tail")
    key = (spec, v)
    table = _FINITE_CACHE.get(key)
    if table is None:
        table = _FINITE_CACHE.setdefault(key, _FiniteMultisum(spec, v))
    return table.value(L)


def limit_rhs(alpha: AlphaSpec, order: int) -> QSeries:
    """L -> oo image of sum_j alpha_j [2L+a choose L-j]: theta(alpha) / (q^b; q^b)_oo."""
    return alpha.theta(order) * euler_inverse(order, alpha.base)


def engine_multisum_spec(state: BaileyState) -> MultisumSpec:
    """Multisum obtained by iterating the lemma on a seed state and letting L -> oo.

    ``state`` must be the undifferentiated seed state (depth 0); its F becomes
    the innermost tail.
    """
    if state.depth:
        raise ValueError("engine multisums start from a seed state")
    name = state.seed.name if state.seed else "?"
    return MultisumSpec(base=state.base, c=state.a, d=state.a, tail=state.F,
                        a=state.a, s=0, label=f"engine:{name}")
