"""Executable catalog of identities and the verification driver.

Every record carries two independent evaluators.  A record is checked by
evaluating both sides at a parameter point and comparing them exactly
(polynomials, Laurent polynomials, integer tuples) or coefficient-wise up to
the truncation order (series).
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Callable, Iterable

from . import __version__
from .bailey import (
    AlphaSpec,
    MultisumSpec,
    SeedDescriptor,
    canonicalize_seed,
    engine_multisum_spec,
    iterate,
    limit_rhs,
    multisum_finite,
    multisum_lhs,
)
from .exactalg import DEFAULT_ORDER, ONE, QPoly, QSeries, XLaurentPoly, poly_exact_div, series_inv
from .qkit import (
    QuadraticExponent,
    divide_by_qpoch,
    eisenstein_chi,
    inv_qpoch_infinite,
    jacobi_triple_product_sides,
    legendre3,
    poch,
    pochhammer_quotient,
    q3q3_ratio,
    q3q6_ratio,
    qbinomial_theorem_sides,
    quintuple_product,
    quintuple_sum,
    triple_product_poly_sides,
)
from .seeds import CHAINS, CHAIN_SLOTS, PLUSPLUS, SEEDS, plusplus_quintuple


class UnknownIdentity(KeyError):
    pass


class ParamsOutOfRange(ValueError):
    pass


class UnknownSeed(KeyError):
    pass


Params = dict


@dataclass(frozen=True)
class Multiplier:
    """The rational function num/den applied to one side before comparison."""

    num: QPoly = ONE
    den: QPoly = ONE

    def apply(self, value):
        if isinstance(value, QSeries):
            out = value * QSeries.from_poly(self.num, value.order)
            if self.den != ONE:
                out = out * series_inv(QSeries.from_poly(self.den, value.order))
            return out
        return poly_exact_div(value * self.num, self.den)

    def __str__(self) -> str:
        return f"({self.num})/({self.den})" if self.den != ONE else f"({self.num})"


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    kind: str                                   # "polynomial" | "series" | "structural"
    lhs: Callable[[Params], Any]
    rhs: Callable[[Params], Any]
    grid: Callable[[int, int, int], list]       # (L_max, v_max, order) -> [params]
    ranges: dict = field(default_factory=dict)  # name -> (lo, hi); hi None = unbounded
    paper_ref: str = ""
    display: str = ""
    provenance_note: str = ""
    lhs_multiplier: Multiplier | None = None
    rhs_multiplier: Multiplier | None = None

    def check_params(self, params: Params) -> None:
        for name, (lo, hi) in self.ranges.items():
            if name not in params:
                raise ParamsOutOfRange(f"{self.id}: missing parameter {name!r}")
            x = params[name]
            if not isinstance(x, int) or x < lo or (hi is not None and x > hi):
                raise ParamsOutOfRange(f"{self.id}: {name}={x!r} outside [{lo}, {'oo' if hi is None else hi}]")

    def sides(self, params: Params):
        self.check_params(params)
        lhs, rhs = self.lhs(params), self.rhs(params)
        if self.lhs_multiplier is not None:
            lhs = self.lhs_multiplier.apply(lhs)
        if self.rhs_multiplier is not None:
            rhs = self.rhs_multiplier.apply(rhs)
        return lhs, rhs

    def default_params(self, L_max: int = 25, v_max: int = 3, order: int = DEFAULT_ORDER) -> Params:
        grid = self.grid(L_max, v_max, order)
        if not grid:
            raise ParamsOutOfRange(f"{self.id}: no parameters in range")
        return grid[-1] if self.kind == "polynomial" else grid[0]

    def describe(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "paper_ref": self.paper_ref,
            "quote": self.display,
            "ranges": {k: [lo, hi] for k, (lo, hi) in self.ranges.items()},
            "provenance_note": self.provenance_note,
        }


def first_mismatch(lhs, rhs) -> tuple[Any, Any, Any] | None:
    """(position, lhs coefficient, rhs coefficient) of the first difference."""
    if isinstance(lhs, QSeries) or isinstance(rhs, QSeries):
        return lhs.first_mismatch(rhs)
    if isinstance(lhs, XLaurentPoly):
        return lhs.first_mismatch(rhs)
    if isinstance(lhs, QPoly):
        if lhs == rhs:
            return None
        for e in range(max(len(lhs), len(rhs))):
            if lhs[e] != rhs[e]:
                return e, lhs[e], rhs[e]
    if isinstance(lhs, tuple):
        for i, (x, y) in enumerate(zip(lhs, rhs)):
            if x != y:
                return i, x, y
        if len(lhs) != len(rhs):
            return min(len(lhs), len(rhs)), None, None
        return None
    return None if lhs == rhs else (0, lhs, rhs)


@dataclass
class Evaluation:
    id: str
    params: Params
    lhs: Any = None
    rhs: Any = None
    equal: bool = False
    first_mismatch: tuple | None = None
    millis: float = 0.0
    error: str | None = None

    def as_dict(self) -> dict:
        mm = None
        if self.first_mismatch is not None:
            pos, a, b = self.first_mismatch
            mm = {"exponent": list(pos) if isinstance(pos, tuple) else pos,
                  "lhs_coeff": None if a is None else str(a),
                  "rhs_coeff": None if b is None else str(b)}
        out = {"id": self.id, "params": dict(self.params), "pass": self.equal,
               "first_mismatch": mm, "millis": round(self.millis, 3)}
        if self.error:
            out["error"] = self.error
        return out


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------

def _grid_L(cap: int | None = None, lo: int = 0):
    def grid(L_max, v_max, order):
        top = L_max if cap is None else min(L_max, cap)
        return [{"L": L} for L in range(lo, top + 1)]
    return grid


def _grid_vL(L_max, v_max, order):
    return [{"v": v, "L": L} for v in range(1, v_max + 1) for L in range(L_max + 1)]


def _grid_order(L_max, v_max, order):
    return [{"order": order}]


def _grid_v_order(L_max, v_max, order):
    return [{"v": v, "order": order} for v in range(1, v_max + 1)]


def _grid_nm(L_max, v_max, order):
    top = min(L_max, 12)
    return [{"n": n, "m": m} for n in range(top + 1) for m in range(top + 1)]


def _grid_j(L_max, v_max, order):
    return [{"j_min": -1000, "j_max": 1000}]


JTP_SPECIALIZATIONS = [(1, 1, 0), (1, -1, 0), (2, 1, 1), (2, -1, 1), (3, 1, 1), (3, -1, 2), (4, 1, 3), (5, -1, 2)]


def _grid_jtp(L_max, v_max, order):
    return [{"A": A, "x_sign": s, "B": B, "order": order} for A, s, B in JTP_SPECIALIZATIONS]


def quintuple_specializations(v_max: int) -> list[tuple[int, int, int]]:
    """Every Q(q^A, z_sign q^B) the catalog evaluates for v = 1..v_max."""
    specs = [(6, -1, 1), (9, 1, 2), (9, 1, 4), (9, 1, 1)]
    for v in range(1, v_max + 1):
        for chain in CHAINS.values():
            specs.append(chain.quintuple(v))
        specs.append(plusplus_quintuple(v))
    seen, out = set(), []
    for s in specs:
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


def _grid_qpi(L_max, v_max, order):
    return [{"A": A, "z_sign": s, "B": B, "order": order}
            for A, s, B in quintuple_specializations(max(v_max, 1))]


_ORDER = {"order": (0, None)}
_V_ORDER = {"v": (1, None), "order": (0, None)}


# ---------------------------------------------------------------------------
# evaluators
# ---------------------------------------------------------------------------

def _q(k: int) -> QPoly:
    return QPoly.monomial(k)


def _binom(k: int, c: int = -1) -> QPoly:
    return ONE.mul_binomial(k, c)


def product_side(A: int, z_sign: int, B: int, euler: tuple[int, int], order: int,
                 divisor: QPoly = ONE) -> QSeries:
    """Q(q^A, z_sign q^B) / ((q^offset; q^step)_oo * divisor)."""
    s = quintuple_product(A, z_sign, B, order) * inv_qpoch_infinite(euler[0], euler[1], order)
    if divisor != ONE:
        s = s * series_inv(QSeries.from_poly(divisor, order))
    return s


def cap_poly_lhs(L: int) -> QPoly:
    """sum_{m,n} q^{2m^2+6mn+6n^2} (q)_L / ((q)_{L-3n-2m} (q)_m (q^3;q^3)_n)."""
    acc = QPoly()
    for n in range(L // 3 + 1):
        # (q)_{3n} / (q^3;q^3)_n
        rest = poch(1, 3, n) * poch(2, 3, n)
        for m in range((L - 3 * n) // 2 + 1):
            t = pochhammer_quotient(L, (L - 3 * n - 2 * m, m, 3 * n)) * rest
            acc = acc + t.shift(2 * m * m + 6 * m * n + 6 * n * n)
    return acc


def cap_series_lhs(order: int) -> QSeries:
    """sum_{m,n >= 0} q^{2m^2+6mn+6n^2} / ((q)_m (q^3;q^3)_n)."""
    total = QSeries.zero(order)
    n = 0
    while 6 * n * n <= order:
        m = 0
        while 2 * m * m + 6 * m * n + 6 * n * n <= order:
            e = 2 * m * m + 6 * m * n + 6 * n * n
            t = divide_by_qpoch(QSeries.one(order - e), m)
            t = divide_by_qpoch(t, n, 3)
            total = total + QSeries._raw(order, [0] * e + list(t.coeffs))
            m += 1
        n += 1
    return total


def cap_poly_rhs(L: int) -> QPoly:
    return AlphaSpec(QuadraticExponent(1), character_shift=1).binomial_sum(L, 0, "L-j")


def single_sum(order: int, lead: Callable[[int], int], numerator: Callable[[int], QPoly],
               start: int = 1, constant: int = 1) -> QSeries:
    """constant + sum_{r >= start} q^{lead(r)} numerator(r) / (q^2; q)_{2r}."""
    total = QSeries._raw(order, [constant])
    r = start
    while lead(r) <= order:
        e = lead(r)
        t = QSeries.from_poly(numerator(r), order - e)
        for k in range(2, 2 * r + 2):
            if k > order - e:
                break
            t = t.div_binomial(k, -1)
        total = total + QSeries._raw(order, [0] * e + list(t.coeffs))
        r += 1
    return total


def lim_g_lhs(order: int) -> QSeries:
    return single_sum(order, lambda r: r * r + r,
                      lambda r: q3q3_ratio(r - 1) * QPoly.from_terms(
                          [(0, 2), (r, 1), (r + 1, 1), (2 * r + 1, -1)]))


def lim_h_lhs(order: int) -> QSeries:
    return single_sum(order, lambda r: r * r + r - 1,
                      lambda r: q3q3_ratio(r - 1) * QPoly.from_terms(
                          [(0, -1), (r, 1), (r + 1, 1), (2 * r + 1, 2)]))


def lim_i_lhs(order: int) -> QSeries:
    def num(r: int) -> QPoly:
        part = poly_exact_div(_binom(2 * r + 1, 1), QPoly([1, 1]))
        return q3q3_ratio(r - 1) * (part + QPoly.monomial(r, 2))
    return single_sum(order, lambda r: r * r + r, num)


def seed_state(seed_id: str, seeds: dict[str, SeedDescriptor] | None = None):
    seeds = SEEDS if seeds is None else seeds
    if seed_id not in seeds:
        raise UnknownSeed(seed_id)
    return canonicalize_seed(seeds[seed_id])


_STATES: dict[str, Any] = {}


def _state(seed_id: str):
    st = _STATES.get(seed_id)
    if st is None:
        st = _STATES.setdefault(seed_id, seed_state(seed_id))
    return st


# literal form of the series in MS2: (q^3;q^6)_n / (q;q^2)_{n+1} over (q^2;q^2)_{2n}
MS2_SERIES = MultisumSpec(base=2, c=1, d=0, tail=q3q6_ratio, tail_den=lambda n: 2 * n + 1, label="ms2")


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

_SEED_DISPLAYS = {
    "SEED-A": (r"\sum_j (\tfrac{j}{3}) q^{\binom{j-1}{2}} {2L \brack L+j}_q = "
               r"\frac{(-1;q^3)_{L-1}}{(-1;q)_{L-1}} q^{L-1} \frac{1-q^3}{1-q}(1-q^L)\ (L>0),\ 0\ (L=0)", "(*)"),
    "SEED-B": (r"\sum_j q^{\binom{j-1}{2}} (\tfrac{j}{3}) {2L+1 \brack L+j}_q = "
               r"q^L \frac{(-1;q^3)_L}{(-1;q)_L}(1+q-q^{L+1})", "(**)"),
    "SEED-C": (r"\sum_j (-1)^j q^{j^2} (\tfrac{j+1}{3}) {2L+1 \brack L+j}_{q^2} = "
               r"\frac{(q^3;q^6)_L}{(q;q^2)_{L+1}}(1-q^{2(1+2L)})", "Thm T1.8; also the first display of the introduction"),
    "SEED-D": (r"\sum_j (-1)^j q^{j^2} (\tfrac{j+1}{3}) {2L \brack L+j}_{q^2} = \frac{(q^3;q^6)_L}{(q;q^2)_L}", "(r)"),
    "SEED-E": (r"\sum_j (-1)^j q^{j^2} (\tfrac{j+1}{3}) {2L+1 \brack L-j}_{q^2} = \frac{(q^3;q^6)_L}{(q;q^2)_L}", "LS(124)"),
    "SEED-F": (r"\sum_j (-1)^j (\tfrac{j}{3}) {2L+1 \brack L-j}_{q^2} q^{j^2} = q^{1+2L}\frac{(q^3;q^6)_L}{(q;q^2)_L}", "SL(125)"),
    "SEED-G": (r"\sum_j (-1)^j (\tfrac{j+1}{3}) q^{\binom{j}{2}} {2L+1 \brack L-j}_q = "
               r"\frac{(q^3;q^3)_{L-1}}{(q)_{L-1}}(2+q^L(1+q)-q^{2L+1})\ (L>0),\ 1\ (L=0)", "(y)"),
    "SEED-H": (r"\sum_j (-1)^j (\tfrac{j}{3}) q^{\binom{j}{2}} {2L+1 \brack L-j}_q = "
               r"\frac{(q^3;q^3)_{L-1}}{(q)_{L-1}}(-1+q^L(1+q)+2q^{2L+1})\ (L>0),\ q\ (L=0)", "(z)"),
    "SEED-I": (r"\sum_j (-1)^{j+1} (\tfrac{j+2}{3}) q^{\binom{j}{2}} {2L+1 \brack L-j}_q = "
               r"\frac{(q^3;q^3)_{L-1}}{(q)_{L-1}}(1+q^{2L+1}+2q^L(1+q))\ (L>0),\ 1+q\ (L=0)", "(xy)"),
}

_CHAIN_REFS = {"A": "(l)", "B": "a=1 hierarchy of (**)", "C": "a=1, q->q^2 hierarchy of T1.8",
               "D": "q->q^2 hierarchy of (r)", "E": "a=1, q->q^2 hierarchy of LS(124)",
               "F": "a=1, q->q^2 hierarchy of SL(125)"}

_CHAIN_LIMIT_DISPLAYS = {
    "A": r"\sum \frac{q^{\sum (N_i+2)N_i+n_v}(1-q^{1+n_v})}{(q)_{n_1}\cdots(q)_{n_{v-1}}(q)_{2n_v+2}}"
         r"\frac{(-1;q^3)_{n_v}}{(-1;q)_{n_v}} = \frac{(q^{6v+3},q^{3v},q^{3v+3};q^{6v+3})_\infty"
         r"(q^{12v+3},q^{12v+9};q^{12v+6})_\infty}{(q^2;q)_\infty}",
    "B": r"\sum \frac{q^{\sum N_i(N_i+1)+n_v}}{(q)_{n_1}\cdots(q)_{n_{v-1}}(q)_{1+2n_v}}"
         r"\frac{(-1;q^3)_{n_v}}{(-1;q)_{n_v}}(1+q-q^{1+n_v}) = \frac{Q(q^{6v+3},-q^{2v})}{(q)_\infty}",
    "C": r"\sum \frac{\tilde q^{\sum N_i(N_i+1)}}{(\tilde q)_{n_1}\cdots(\tilde q)_{n_{v-1}}(\tilde q)_{2n_v}}"
         r"\frac{(q^3;q^6)_{n_v}}{(q;q^2)_{1+n_v}} = \frac{Q(q^{12v+6},q)}{(\tilde q)_\infty}",
    "D": r"\sum \frac{\tilde q^{\sum N_i^2}}{(\tilde q)_{n_1}\cdots(\tilde q)_{n_{v-1}}(\tilde q)_{2n_v}}"
         r"\frac{(q^3;q^6)_{n_v}}{(q;q^2)_{n_v}} = \frac{Q(q^{12v+6},q^{2v+1})}{(\tilde q)_\infty}",
    "E": r"\sum \frac{\tilde q^{\sum N_i(N_i+1)}}{(\tilde q)_{n_1}\cdots(\tilde q)_{n_{v-1}}(\tilde q)_{2n_v+1}}"
         r"\frac{(q^3;q^6)_{n_v}}{(q;q^2)_{n_v}} = \frac{Q(q^{12v+6},q^{4v+1})}{(\tilde q)_\infty}",
    "F": r"\sum \frac{\tilde q^{\sum N_i(N_i+1)+n_v}}{(\tilde q)_{n_1}\cdots(\tilde q)_{n_{v-1}}(\tilde q)_{2n_v+1}}"
         r"\frac{(q^3;q^6)_{n_v}}{(q;q^2)_{n_v}} = \frac{Q(q^{12v+6},q^{4v+3})}{(\tilde q)_\infty}",
}


def _seed_record(seed: SeedDescriptor) -> IdentityRecord:
    display, ref = _SEED_DISPLAYS.get(seed.name, ("", ""))
    note = ""
    if seed.name in ("SEED-G", "SEED-H", "SEED-I"):
        note = "printed without proof; verified here, not derived"
    if seed.name == "SEED-C":
        note = "displayed twice (introduction and its own theorem); one record"
    return IdentityRecord(
        id=seed.name, kind="polynomial",
        lhs=lambda p, s=seed: s.lhs(p["L"]),
        rhs=lambda p, s=seed: s.F(p["L"]),
        grid=_grid_L(), ranges={"L": (0, None)},
        paper_ref=ref, display=display, provenance_note=note,
    )


def _chain_poly_record(key: str) -> IdentityRecord:
    chain = CHAINS[key]
    seed = SEEDS[chain.seed]
    slot = CHAIN_SLOTS[key]
    note = ""
    if chain.normalized:
        note = ("printed display normalized: the printed exponent is garbled; "
                "(2v+1)j^2+2vj is used, as the lemma dictates")
    if key == "C":
        note = ("1/((q^2;q^2)_{2n}(q;q^2)_{n+1}) is evaluated as "
                "(1+q^{2n+1})/((q^2;q^2)_{2n+1}(q;q^2)_n)")
    return IdentityRecord(
        id=f"CHAIN-{key}-POLY", kind="polynomial",
        lhs=lambda p, c=chain: multisum_finite(c.finite, p["v"], p["L"]),
        rhs=lambda p, c=chain, s=seed, sl=slot: c.printed_alpha(p["v"]).binomial_sum(p["L"], s.a, sl),
        grid=_grid_vL, ranges={"v": (1, None), "L": (0, None)},
        paper_ref=_CHAIN_REFS[key],
        display=f"v-fold polynomial identity from {chain.seed}", provenance_note=note,
    )


def _chain_lim_record(key: str, rid: str | None = None, series: MultisumSpec | None = None,
                      paper_ref: str = "", note: str = "") -> IdentityRecord:
    chain = CHAINS[key]
    series = chain.series if series is None else series

    def rhs(p, c=chain):
        A, z, B = c.quintuple(p["v"])
        return product_side(A, z, B, c.euler, p["order"], c.product_divisor)

    return IdentityRecord(
        id=rid or f"CHAIN-{key}-LIM", kind="series",
        lhs=lambda p, s=series: multisum_lhs(s, p["v"], p["order"]),
        rhs=rhs, grid=_grid_v_order, ranges=_V_ORDER,
        paper_ref=paper_ref or f"L->oo limit of {_CHAIN_REFS[key]}",
        display=_CHAIN_LIMIT_DISPLAYS[key], provenance_note=note,
    )


def _named_limit(rid: str, seed_id: str, quint: tuple[int, int, int], display: str, ref: str,
                 rhs_multiplier: Multiplier | None = None, note: str = "") -> IdentityRecord:
    """v = 1 member of a hierarchy: the engine derives the sum side from the seed."""

    def lhs(p):
        return multisum_lhs(engine_multisum_spec(_state(seed_id)), 1, p["order"])

    def rhs(p):
        return product_side(*quint, (2, 2), p["order"])

    return IdentityRecord(
        id=rid, kind="series", lhs=lhs, rhs=rhs, grid=_grid_order, ranges=_ORDER,
        paper_ref=ref, display=display, rhs_multiplier=rhs_multiplier,
        provenance_note=note or f"sum side derived by one lemma step from {seed_id}",
    )


def build_catalog(seeds: dict[str, SeedDescriptor] | None = None) -> dict[str, IdentityRecord]:
    """All records, keyed by id.  ``seeds`` replaces the seed table (used for mutation runs)."""
    seeds = SEEDS if seeds is None else seeds
    recs: list[IdentityRecord] = []

    def jtp_poly_lhs(p):
        return triple_product_poly_sides(p["n"], p["m"])[0]

    def jtp_poly_rhs(p):
        return triple_product_poly_sides(p["n"], p["m"])[1]

    recs.append(IdentityRecord(
        id="JTP-POLY", kind="structural", lhs=jtp_poly_lhs, rhs=jtp_poly_rhs, grid=_grid_nm,
        ranges={"n": (0, None), "m": (0, None)}, paper_ref="(1.4)",
        display=r"\sum_{i=-n}^{m} q^{i^2} x^i {n+m \brack n+i}_{q^2} = (-q/x;q^2)_n(-qx;q^2)_m"))
    recs.append(IdentityRecord(
        id="QBT", kind="structural",
        lhs=lambda p: qbinomial_theorem_sides(p["L"])[0],
        rhs=lambda p: qbinomial_theorem_sides(p["L"])[1],
        grid=_grid_L(cap=20), ranges={"L": (0, None)}, paper_ref="(1.4a)",
        display=r"\sum_{i=0}^{L} q^{i^2} x^i {L \brack i}_{q^2} = (-xq;q^2)_L"))
    recs.append(IdentityRecord(
        id="JTP", kind="series",
        lhs=lambda p: jacobi_triple_product_sides(p["A"], p["x_sign"], p["B"], p["order"])[0],
        rhs=lambda p: jacobi_triple_product_sides(p["A"], p["x_sign"], p["B"], p["order"])[1],
        grid=_grid_jtp, ranges={"A": (1, None), "x_sign": (-1, 1), "B": (-10 ** 9, None), "order": (0, None)},
        paper_ref="(1.5)", display=r"\sum_i q^{i^2} x^i = (-q/x,-qx,q^2;q^2)_\infty",
        provenance_note="checked at q -> q^A, x -> x_sign q^B with |B| < A"))
    recs.append(IdentityRecord(
        id="QPI", kind="series",
        lhs=lambda p: quintuple_sum(p["A"], p["z_sign"], p["B"], p["order"]),
        rhs=lambda p: quintuple_product(p["A"], p["z_sign"], p["B"], p["order"]),
        grid=_grid_qpi, ranges={"A": (1, None), "z_sign": (-1, 1), "B": (1, None), "order": (0, None)},
        paper_ref="(qpi) with (capid)",
        display=r"\sum_k (-1)^k q^{\frac{3k^2-k}{2}} z^{3k}(1+zq^k) = (q,-z,-\frac{q}{z};q)_\infty"
                r"(\frac{q}{z^2},z^2q;q^2)_\infty",
        provenance_note="checked at every specialization q -> q^A, z -> z_sign q^B used by the catalog"))
    recs.append(IdentityRecord(
        id="EISEN3", kind="structural",
        lhs=lambda p: tuple(legendre3(j) for j in range(p["j_min"], p["j_max"] + 1)),
        rhs=lambda p: tuple(eisenstein_chi(j) for j in range(p["j_min"], p["j_max"] + 1)),
        grid=_grid_j, ranges={"j_min": (-10 ** 9, None), "j_max": (-10 ** 9, None)}, paper_ref="(1.6)",
        display=r"(\tfrac{j}{3}) = \frac{w^j-\bar w^j}{w-\bar w},\ w = e^{2\pi i/3}"))
    recs.append(IdentityRecord(
        id="CHARSUM", kind="structural",
        lhs=lambda p: tuple(legendre3(j) + legendre3(j + 1) + legendre3(j + 2)
                            for j in range(p["j_min"], p["j_max"] + 1)),
        rhs=lambda p: tuple(0 for _ in range(p["j_min"], p["j_max"] + 1)),
        grid=_grid_j, ranges={"j_min": (-10 ** 9, None), "j_max": (-10 ** 9, None)},
        paper_ref="character relation before (xy)",
        display=r"(\tfrac{j}{3})+(\tfrac{j+1}{3})+(\tfrac{j+2}{3}) = 0"))
    recs.append(IdentityRecord(
        id="CAP-POLY", kind="polynomial", lhs=lambda p: cap_poly_lhs(p["L"]),
        rhs=lambda p: cap_poly_rhs(p["L"]), grid=_grid_L(), ranges={"L": (0, None)}, paper_ref="(1.3)",
        display=r"\sum_{m,n\ge0} \frac{q^{2m^2+6mn+6n^2}(q;q)_L}{(q;q)_{L-3n-2m}(q;q)_m(q^3;q^3)_n}"
                r" = \sum_{j=-L}^{L} (\tfrac{j+1}{3}) q^{j^2} {2L \brack L-j}_q"))
    recs.append(IdentityRecord(
        id="CAP", kind="series", lhs=lambda p: cap_series_lhs(p["order"]),
        rhs=lambda p: product_side(6, -1, 1, (1, 1), p["order"]),
        grid=_grid_order, ranges=_ORDER, paper_ref="(cpi)",
        display=r"\sum_{m,n\ge0} \frac{q^{2m^2+6mn+6n^2}}{(q;q)_m(q^3;q^3)_n} = \frac{Q(q^6,-q)}{(q)_\infty}"))

    for name in ("SEED-A", "SEED-B", "SEED-C", "SEED-D", "SEED-E", "SEED-F", "SEED-G", "SEED-H", "SEED-I"):
        recs.append(_seed_record(seeds[name]))

    for key in CHAINS:
        recs.append(_chain_poly_record(key))
    for key in CHAINS:
        recs.append(_chain_lim_record(key))

    recs.append(_chain_lim_record("B", rid="MS-PLUS", paper_ref="(+)"))
    recs.append(IdentityRecord(
        id="MS-PLUSPLUS", kind="series",
        lhs=lambda p: multisum_lhs(PLUSPLUS, p["v"], p["order"]),
        rhs=lambda p: product_side(*plusplus_quintuple(p["v"]), (1, 1), p["order"]),
        grid=_grid_v_order, ranges=_V_ORDER, paper_ref="(++)",
        display=r"\sum \frac{q^{\sum N_i^2}}{(q)_{n_1}\cdots(q)_{n_{v-1}}(q)_{2n_v}}"
                r"\frac{(-1;q^3)_{n_v}}{(-1;q)_{n_v}} = \frac{Q(q^{6v+3},-q^{v+1})}{(q)_\infty}",
        provenance_note="external result, verified not derived"))
    recs.append(_chain_lim_record("C", rid="MS2", series=MS2_SERIES, paper_ref="(ms2)",
                                  note="sum side evaluated literally with the (q;q^2)_{1+n_v} denominator"))

    recs.append(_named_limit(
        "RAMANUJAN", "SEED-D", (18, 1, 3),
        r"\sum_{n\ge0} \frac{q^{2n^2}}{(\tilde q)_{2n}}\frac{(q^3;q^6)_n}{(q;q^2)_n} = \frac{Q(q^{18},q^3)}{(\tilde q)_\infty}",
        "v=1 case of the (r) hierarchy"))
    recs.append(_named_limit(
        "SLATER-124", "SEED-E", (18, 1, 5),
        r"\sum_{n\ge0} \frac{q^{2n(n+1)}}{(\tilde q)_{2n+1}}\frac{(q^3;q^6)_n}{(q;q^2)_n} = \frac{Q(q^{18},q^5)}{(\tilde q)_\infty}",
        "v=1 case of the LS(124) hierarchy"))
    recs.append(_named_limit(
        "SLATER-125", "SEED-F", (18, 1, 7),
        r"\sum_{n\ge0} \frac{\tilde q^{n(n+2)}}{(\tilde q)_{2n+1}}\frac{(q^3;q^6)_n}{(q;q^2)_n} = \frac{Q(q^{18},q^7)}{(\tilde q)_\infty}",
        "v=1 case of the SL(125) hierarchy", rhs_multiplier=Multiplier(QPoly.monomial(1)),
        note="sum side derived by one lemma step from SEED-F; it carries the seed's extra factor q"))

    recs.append(IdentityRecord(
        id="LIM-G", kind="series", lhs=lambda p: lim_g_lhs(p["order"]),
        rhs=lambda p: product_side(9, 1, 2, (2, 1), p["order"]),
        grid=_grid_order, ranges=_ORDER, paper_ref="limit following (y)",
        display=r"1+\sum_{r\ge1}\frac{q^{r^2+r}}{(q^2;q)_{2r}}\frac{(q^3;q^3)_{r-1}}{(q)_{r-1}}(2+q^r(1+q)-q^{1+2r})"
                r" = \frac{(q^9,-q^2,-q^7;q^9)_\infty(q^5,q^{13};q^{18})_\infty}{(q^2;q)_\infty}"))
    recs.append(IdentityRecord(
        id="LIM-H", kind="series", lhs=lambda p: lim_h_lhs(p["order"]),
        rhs=lambda p: product_side(9, 1, 4, (2, 1), p["order"]),
        grid=_grid_order, ranges=_ORDER, paper_ref="limit following (z)",
        display=r"1+\sum_{r\ge1}\frac{q^{r^2+r-1}}{(q^2;q)_{2r}}\frac{(q^3;q^3)_{r-1}}{(q)_{r-1}}(-1+q^r(1+q)+2q^{2r+1})"
                r" = \frac{(q^9,-q^4,-q^5;q^9)_\infty(q,q^{17};q^{18})_\infty}{(q^2;q)_\infty}"))
    recs.append(IdentityRecord(
        id="LIM-I", kind="series", lhs=lambda p: lim_i_lhs(p["order"]),
        rhs=lambda p: product_side(9, 1, 1, (2, 1), p["order"]),
        grid=_grid_order, ranges=_ORDER, paper_ref="(w)",
        rhs_multiplier=Multiplier(ONE, QPoly([1, 1])),
        display=r"1+\sum_{r\ge1}\frac{q^{r^2+r}}{(q^2;q)_{2r}}\frac{(q^3;q^3)_{r-1}}{(q)_{r-1}}(\frac{1+q^{1+2r}}{1+q}+2q^r)"
                r" = \frac{(q^9,-q^8,-q^{10};q^9)_\infty(q^7,q^{11};q^{18})_\infty}{(q^2;q)_\infty}",
        provenance_note="product side is Q(q^9, q) / (q^2;q)_oo divided by 1+q"))
    return {r.id: r for r in recs}


CATALOG: dict[str, IdentityRecord] = build_catalog()

# equation label -> record id, for every labelled display
LABEL_COVERAGE = {
    "1.3": "CAP-POLY", "T1.3": "CAP-POLY", "cpi": "CAP", "capid": "QPI", "qpi": "QPI", "T1.6": "QPI",
    "1.4": "JTP-POLY", "T1.4": "JTP-POLY", "1.4a": "QBT", "1.5": "JTP", "1.6": "EISEN3",
    "*": "SEED-A", "T1.5": "SEED-A", "**": "SEED-B", "T1.7": "SEED-B", "T1.8": "SEED-C",
    "r": "SEED-D", "T1.9": "SEED-D", "LS(124)": "SEED-E", "T1.10": "SEED-E",
    "SL(125)": "SEED-F", "T1.11": "SEED-F", "y": "SEED-G", "z": "SEED-H", "xy": "SEED-I",
    "l": "CHAIN-A-POLY", "+": "MS-PLUS", "++": "MS-PLUSPLUS", "ms2": "MS2", "w": "LIM-I",
}

# displays that are deliberately not records, with where they live instead
OUT_OF_SCOPE = {
    "T1.1": "statement of the special Bailey lemma: bailey.bailey_step / verify_state",
    "eq:Binom_rec": "q-binomial recurrence: qkit.qbinom (table fill)",
    "1.7": "q -> q^2 image of SEED-A inside its proof",
    "Eisenstein sine product for a general odd prime p": "only p = 3 is implemented (EISEN3)",
    "1/(q;q)_n = 0 for n < 0": "convention, built into pochhammer_quotient",
    "definition of the q-binomial coefficient": "qkit.qbinom / qbinom_product",
    "two limits of q-binomials": "property tests of qkit",
    "definition of the Legendre symbol mod 3": "qkit.legendre3",
    "intermediate 2Re(...) proof lines": "proof steps; their conclusions are records",
    "definition of N_i": "bailey.MultisumSpec",
    "single application of the lemma to (*)": "CHAIN-A-POLY at v=1",
}


def get_record(rid: str, catalog: dict[str, IdentityRecord] | None = None) -> IdentityRecord:
    catalog = CATALOG if catalog is None else catalog
    try:
        return catalog[rid]
    except KeyError:
        raise UnknownIdentity(rid) from None


def evaluate_identity(rid: str, params: Params, catalog: dict[str, IdentityRecord] | None = None,
                      keep_values: bool = True) -> Evaluation:
    record = get_record(rid, catalog)
    record.check_params(params)
    ev = Evaluation(rid, dict(params))
    t0 = time.perf_counter()
    try:
        lhs, rhs = record.sides(params)
        ev.first_mismatch = first_mismatch(lhs, rhs)
        ev.equal = ev.first_mismatch is None
        if keep_values:
            ev.lhs, ev.rhs = lhs, rhs
    except (ArithmeticError, ValueError) as exc:
        if isinstance(exc, ParamsOutOfRange):
            raise
        ev.error = f"{type(exc).__name__}: {exc}"
        ev.equal = False
    ev.millis = (time.perf_counter() - t0) * 1000.0
    return ev


def _params_key(params: Params) -> tuple:
    return tuple(sorted(params.items()))


@dataclass
class Report:
    config: dict
    results: list[Evaluation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.equal for r in self.results)

    def failures(self) -> list[Evaluation]:
        return [r for r in self.results if not r.equal]

    def failed_ids(self) -> set[str]:
        return {r.id for r in self.failures()}

    def as_dict(self) -> dict:
        return {"engine_version": __version__, "config": dict(self.config),
                "results": [r.as_dict() for r in self.results]}


def _run_task(task: tuple[str, Params]) -> Evaluation:
    rid, params = task
    return evaluate_identity(rid, params, keep_values=False)


def verify_all(L_max: int = 25, v_max: int = 3, order: int = DEFAULT_ORDER,
               ids: Iterable[str] | None = None, catalog: dict[str, IdentityRecord] | None = None,
               jobs: int = 1) -> Report:
    """Check every selected record over its parameter grid clipped to the given bounds."""
    if L_max < 0 or v_max < 0 or order < 0 or jobs < 1:
        raise ValueError("L_max, v_max, order must be >= 0 and jobs >= 1")
    custom = catalog is not None
    catalog = CATALOG if catalog is None else catalog
    selected = list(catalog) if ids is None else list(ids)
    tasks = []
    for rid in selected:
        record = get_record(rid, catalog)
        for params in record.grid(L_max, v_max, order):
            tasks.append((rid, params))
    config = {"ids": selected, "L_max": L_max, "v_max": v_max, "order": order, "jobs": jobs}
    report = Report(config)
    if jobs > 1 and not custom and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            report.results = list(pool.map(_run_task, tasks, chunksize=4))
    else:
        report.results = [evaluate_identity(rid, p, catalog, keep_values=False) for rid, p in tasks]
    report.results.sort(key=lambda r: (r.id, _params_key(r.params)))
    return report


# ---------------------------------------------------------------------------
# hierarchy derivation
# ---------------------------------------------------------------------------

def _monomial_ratio(engine: QPoly, printed: QPoly) -> int | None:
    """k with engine == q^k * printed, if it exists."""
    if engine.is_zero() or printed.is_zero():
        return 0 if engine == printed else None
    k = engine.valuation - printed.valuation
    try:
        return k if (printed.shift(k) == engine if k >= 0 else engine.shift(-k) == printed) else None
    except ArithmeticError:
        return None


def derive_chain(seed_id: str, v: int, seeds: dict[str, SeedDescriptor] | None = None) -> IdentityRecord:
    """v-fold polynomial identity produced by the lemma from a seed.

    The sum side is the lemma's r-sum evaluated recursively; the bilateral
    side uses the bumped alpha.  If the catalog prints the same hierarchy, the
    two bilateral sides are compared and any monomial factor is noted.
    """
    if v < 1:
        raise ValueError("v must be positive")
    state = iterate(seed_state(seed_id, seeds), v)
    key = next((k for k, c in CHAINS.items() if c.seed == seed_id), None)
    note = "no printed hierarchy"
    if key is not None:
        chain = CHAINS[key]
        seed = SEEDS[seed_id]
        ks = set()
        for L in (1, 2, 3):
            printed = chain.printed_alpha(v).binomial_sum(L, seed.a, CHAIN_SLOTS[key])
            ks.add(_monomial_ratio(state.relation_rhs(L), printed))
        if ks == {0}:
            note = f"agrees with CHAIN-{key}-POLY"
        elif len(ks) == 1 and None not in ks:
            k = ks.pop()
            note = f"engine form = q^{k} * printed CHAIN-{key}-POLY form"
        else:
            note = f"differs from CHAIN-{key}-POLY by more than a monomial"
        if chain.normalized:
            note += "; printed display normalized"
    return IdentityRecord(
        id=f"{seed_id}-CHAIN", kind="polynomial",
        lhs=lambda p, st=state: st.F(p["L"]),
        rhs=lambda p, st=state: st.relation_rhs(p["L"]),
        grid=lambda L_max, v_max, order: [{"L": L} for L in range(L_max + 1)],
        ranges={"L": (0, None)}, paper_ref=f"lemma applied {v} times to {seed_id}",
        display=f"F^({v})(L) = sum_j alpha^({v})_j [2L+{state.a} choose L-j]_(q^{state.base})",
        provenance_note=note,
    )


def derive_chain_limit(seed_id: str, v: int, seeds: dict[str, SeedDescriptor] | None = None) -> IdentityRecord:
    """L -> oo of :func:`derive_chain`: engine multisum against theta(alpha) / (q^b;q^b)_oo."""
    seed = seed_state(seed_id, seeds)
    state = iterate(seed, v)
    return IdentityRecord(
        id=f"{seed_id}-CHAIN-LIM", kind="series",
        lhs=lambda p, s=seed: multisum_lhs(engine_multisum_spec(s), v, p["order"]),
        rhs=lambda p, st=state: limit_rhs(st.alpha, p["order"]),
        grid=_grid_order, ranges=_ORDER,
        paper_ref=f"lemma applied {v} times to {seed_id}, L -> oo",
        display=f"engine multisum = theta(alpha^({v})) / (q^{state.base};q^{state.base})_oo",
    )


def mutated_seeds(seed_id: str, alpha: AlphaSpec) -> dict[str, SeedDescriptor]:
    """Copy of the seed table with one alpha replaced."""
    table = dict(SEEDS)
    table[seed_id] = replace(table[seed_id], alpha=alpha)
    return table


def catalog_json() -> list[dict]:
    return [r.describe() for r in CATALOG.values()]


def as_coefficient_rows(value) -> list[tuple[int, int, int]]:
    """(exponent, numerator, denominator) rows of a QPoly or QSeries."""
    rows = []
    for e, c in enumerate(value.coeffs):
        f = Fraction(c)
        rows.append((e, f.numerator, f.denominator))
    return rows
