"""q-Pochhammer symbols, Gaussian binomials, the mod-3 character and theta sums."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import (
    ONE,
    ZERO,
    InvalidExponent,
    QAlgebraError,
    QPoly,
    QSeries,
    XLaurentPoly,
    poly_exact_div,
    series_inv,
    substitute_power,
)


class DivergentSpec(QAlgebraError):
    """An infinite product contains the vanishing factor (1 - q^0)."""


class NonIntegralExponent(QAlgebraError):
    pass


class IllSpecialized(QAlgebraError):
    """A quintuple-product specialization leaves a factor without positive exponent."""


# ---------------------------------------------------------------------------
# q-Pochhammer symbols
# ---------------------------------------------------------------------------

INFINITE = None


@dataclass(frozen=True)
class PochhammerSpec:
    """(sign * q^offset; q^step)_length.  ``length=None`` means infinite.

    ``sign=-1, offset=0`` is the symbol (-1; q^step)_n.
    """

    sign: int = 1
    offset: int = 1
    step: int = 1
    length: int | None = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.offset < 0 or self.step < 1:
            raise ValueError("offset must be >= 0 and step >= 1")
        if self.length is not None and self.length < 0:
            raise ValueError("length must be non-negative")

    def exponents(self, limit: int | None = None):
        k = 0
        while self.length is None or k < self.length:
            e = self.offset + k * self.step
            if limit is not None and e > limit:
                return
            yield e
            k += 1


def pochhammer_finite(spec: PochhammerSpec) -> QPoly:
    """Expand prod_{k<n} (1 - sign q^{c + k d}) exactly."""
    if spec.length is None:
        raise ValueError("pochhammer_finite needs a finite length")
    p = ONE
    for e in spec.exponents():
        if e == 0:
            p = p * (1 - spec.sign)
        else:
            p = p.mul_binomial(e, -spec.sign)
    return p


def pochhammer_infinite(spec: PochhammerSpec, order: int) -> QSeries:
    """Truncated expansion of (sign q^c; q^d)_oo (or of a finite symbol) to q^order."""
    if spec.sign == 1 and spec.offset == 0:
        raise DivergentSpec("(1; q)_oo contains the factor 1 - q^0 = 0")
    s = QSeries.one(order)
    for e in spec.exponents(order):
        if e == 0:
            s = s * 2
        else:
            s = s.mul_binomial(e, -spec.sign)
    return s


def poch(offset: int, step: int, length: int, sign: int = 1) -> QPoly:
    """Shorthand for the finite symbol (sign q^offset; q^step)_length."""
    return pochhammer_finite(PochhammerSpec(sign, offset, step, length))


def qpoch(n: int, base: int = 1) -> QPoly:
    """(q^b; q^b)_n."""
    return poch(base, base, n)


def inv_qpoch_infinite(offset: int, step: int, order: int) -> QSeries:
    """1/(q^offset; q^step)_oo by repeated division by binomials."""
    if offset < 1:
        raise DivergentSpec("(1; q)_oo is not invertible")
    s = QSeries.one(order)
    e = offset
    while e <= order:
        s = s.div_binomial(e, -1)
        e += step
    return s


def divide_by_qpoch(s: QSeries, n: int, base: int = 1) -> QSeries:
    """s / (q^b; q^b)_n in O(n * order)."""
    for k in range(1, n + 1):
        if base * k > s.order:
            break
        s = s.div_binomial(base * k, -1)
    return s


# closed factorizations of the Pochhammer ratios that occur in the seeds

def minus_one_ratio(n: int) -> QPoly:
    """(-1; q^3)_n / (-1; q)_n = prod_{k=1}^{n-1} (1 - q^k + q^{2k})."""
    p = ONE
    for k in range(1, n):
        p = p * QPoly.from_terms([(0, 1), (k, -1), (2 * k, 1)])
    return p


def q3q6_ratio(n: int) -> QPoly:
    """(q^3; q^6)_n / (q; q^2)_n = prod_{k=1}^{n} (1 + q^{2k-1} + q^{2(2k-1)})."""
    p = ONE
    for k in range(1, n + 1):
        e = 2 * k - 1
        p = p * QPoly.from_terms([(0, 1), (e, 1), (2 * e, 1)])
    return p


def q3q3_ratio(n: int) -> QPoly:
    """(q^3; q^3)_n / (q; q)_n = prod_{k=1}^{n} (1 + q^k + q^{2k})."""
    p = ONE
    for k in range(1, n + 1):
        p = p * QPoly.from_terms([(0, 1), (k, 1), (2 * k, 1)])
    return p


# ---------------------------------------------------------------------------
# Gaussian binomials
# ---------------------------------------------------------------------------

class _BinomialTable:
    """Rows of [n choose k]_q filled by the Pascal-type recurrence."""

    def __init__(self):
        self._rows: list[list[QPoly]] = [[ONE]]
        self._by_base: dict[tuple[int, int, int], QPoly] = {}
        self._lock = threading.Lock()

    def _extend(self, top: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= top:
                t = len(rows)
                prev = rows[-1]
                row = [ONE]
                for k in range(1, t):
                    # [t, k] = [t-1, k] + q^{t-k} [t-1, k-1]
                    a = prev[k].coeffs
                    b = prev[k - 1].coeffs
                    s = t - k
                    out = list(a) + [0] * max(0, s + len(b) - len(a))
                    for i, x in enumerate(b):
                        out[i + s] += x
                    row.append(QPoly._raw(out))
                row.append(ONE)
                rows.append(row)

    def get(self, top: int, bottom: int, base: int = 1) -> QPoly:
        if top < 0 or bottom < 0 or bottom > top:
            return ZERO
        if len(self._rows) <= top:
            self._extend(top)
        p = self._rows[top][bottom]
        if base == 1:
            return p
        key = (base, top, bottom)
        hit = self._by_base.get(key)
        if hit is None:
            hit = substitute_power(p, base)
            self._by_base[key] = hit
        return hit

    def clear(self) -> None:
        with self._lock:
            self._rows = [[ONE]]
            self._by_base.clear()


_BINOMIALS = _BinomialTable()


def qbinom(top: int, bottom: int, base_power: int = 1) -> QPoly:
    """Gaussian binomial [top choose bottom] in q^base_power; zero off the triangle."""
    if base_power < 1:
        raise InvalidExponent("binomial base must be a positive power of q")
    return _BINOMIALS.get(top, bottom, base_power)


def qbinom_product(top: int, bottom: int, base_power: int = 1) -> QPoly:
    """Same value as :func:`qbinom`, via (q)_{m+n} / ((q)_m (q)_n) and exact division."""
    if top < 0 or bottom < 0 or bottom > top:
        return ZERO
    num = qpoch(top, base_power)
    den = qpoch(bottom, base_power) * qpoch(top - bottom, base_power)
    return poly_exact_div(num, den)


def pochhammer_quotient(top: int, bottoms, base: int = 1) -> QPoly:
    """(q^b;q^b)_top / prod (q^b;q^b)_k for k in bottoms, as a polynomial.

    Evaluated as a q-multinomial (a product of binomials) times
    (q^{b(s+1)}; q^b)_{top-s} where s = sum(bottoms); requires s <= top.
    """
    bottoms = list(bottoms)
    if any(k < 0 for k in bottoms):
        # 1/(q)_k = 0 for negative k
        return ZERO
    s = sum(bottoms)
    if s > top:
        raise ValueError(f"(q)_{top} / prod (q)_k is not a polynomial for sum {s} > {top}")
    p = poch(base * (s + 1), base, top - s)
    acc = 0
    for k in bottoms:
        acc += k
        p = p * qbinom(acc, k, base)
    return p


# ---------------------------------------------------------------------------
# the character (j/3) and its Eisenstein-integer realization
# ---------------------------------------------------------------------------

def legendre3(j: int) -> int:
    return (0, 1, -1)[j % 3]


@dataclass(frozen=True)
class EisensteinInt:
    """a + b*w with w = exp(2 pi i / 3), so w^2 = -1 - w."""

    a: int
    b: int = 0

    def __add__(self, o: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.a + o.a, self.b + o.b)

    def __sub__(self, o: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.a - o.a, self.b - o.b)

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, o) -> "EisensteinInt":
        if isinstance(o, int):
            return EisensteinInt(self.a * o, self.b * o)
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        return EisensteinInt(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1 - b1 * b2)

    __rmul__ = __mul__

    def conj(self) -> "EisensteinInt":
        # conj(w) = w^2 = -1 - w
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def __pow__(self, n: int) -> "EisensteinInt":
        if n < 0:
            if self.norm() != 1:
                raise ValueError("only units have negative powers")
            return self.conj() ** (-n)
        result, base = EisensteinInt(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, o: "EisensteinInt") -> "EisensteinInt":
        num = self * o.conj()
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[w]")
        if num.a % n or num.b % n:
            raise ValueError(f"{o} does not divide {self} in Z[w]")
        return EisensteinInt(num.a // n, num.b // n)

    def is_rational(self) -> bool:
        return self.b == 0


OMEGA = EisensteinInt(0, 1)
OMEGA_BAR = OMEGA.conj()


def eisenstein_chi(j: int) -> int:
    """(w^j - wbar^j) / (w - wbar), computed in Z[w]."""
    val = (OMEGA ** (j % 3) - OMEGA_BAR ** (j % 3)).exact_div(OMEGA - OMEGA_BAR)
    if not val.is_rational():
        raise ArithmeticError(f"non-rational character value {val}")
    return val.a


# ---------------------------------------------------------------------------
# quadratic exponents and bilateral sums
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticExponent:
    """e(j) = (A j^2 + B j + C) / D."""

    A: int
    B: int = 0
    C: int = 0
    D: int = 1

    def __post_init__(self):
        if self.D < 1:
            raise ValueError("denominator must be positive")

    def numerator(self, j: int) -> int:
        return self.A * j * j + self.B * j + self.C

    def __call__(self, j: int) -> int:
        n = self.numerator(j)
        if n % self.D:
            raise NonIntegralExponent(f"exponent ({self}) at j={j} is {Fraction(n, self.D)}")
        return n // self.D

    def is_integral_on(self, residues, modulus: int) -> bool:
        """Integer-valued on every j that is congruent mod ``modulus`` to a residue."""
        period = modulus * self.D
        return all(self.numerator(j) % self.D == 0
                   for j in range(period) if j % modulus in residues)

    def reflected(self) -> "QuadraticExponent":
        return QuadraticExponent(self.A, -self.B, self.C, self.D)

    def plus(self, A: int = 0, B: int = 0, C: int = 0) -> "QuadraticExponent":
        """Add the integer quadratic A j^2 + B j + C."""
        d = self.D
        return QuadraticExponent(self.A + d * A, self.B + d * B, self.C + d * C, d)

    def j_range(self, bound: int) -> range:
        """All integers j with numerator(j) <= bound * D (A > 0 required)."""
        if self.A <= 0:
            raise ValueError("bilateral sums need a positive leading coefficient")
        # walk outward from the vertex; the quadratic is increasing past it
        v = -self.B // (2 * self.A)
        if self.numerator(v + 1) < self.numerator(v):
            v += 1
        lim = bound * self.D
        lo = hi = v
        if self.numerator(v) > lim:
            return range(0)
        while self.numerator(hi + 1) <= lim:
            hi += 1
        while self.numerator(lo - 1) <= lim:
            lo -= 1
        return range(lo, hi + 1)

    def __str__(self) -> str:
        body = f"{self.A}j^2 + {self.B}j + {self.C}"
        return body if self.D == 1 else f"({body})/{self.D}"


def theta_weight(j: int, alternating: bool = False, character_shift: int | None = None,
                 sign: int = 1) -> int:
    w = sign
    if alternating and j % 2:
        w = -w
    if character_shift is not None:
        w *= legendre3(j + character_shift)
    return w


def theta_sum(exponent: QuadraticExponent, order: int, *, alternating: bool = False,
              character_shift: int | None = None, sign: int = 1) -> QSeries:
    """Sum over all integers j of weight(j) q^{exponent(j)}, truncated at q^order.

    weight(j) = sign * (-1)^j (if alternating) * ((j + shift)/3) (if a shift is given).
    """
    out = [0] * (order + 1)
    for j in exponent.j_range(order):
        w = theta_weight(j, alternating, character_shift, sign)
        if not w:
            continue
        e = exponent(j)
        if e < 0:
            raise InvalidExponent(f"negative exponent {e} at j={j}")
        if e <= order:
            out[e] += w
    return QSeries._raw(order, out)


# ---------------------------------------------------------------------------
# triple and quintuple products
# ---------------------------------------------------------------------------

def _x_binomial(qexp: int, xpow: int) -> XLaurentPoly:
    """1 + q^qexp x^xpow."""
    return XLaurentPoly.from_dict({0: ONE, xpow: QPoly.monomial(qexp)})


def triple_product_poly_sides(n: int, m: int) -> tuple[XLaurentPoly, XLaurentPoly]:
    """Finite Jacobi triple product: bilateral binomial sum and (-q/x;q^2)_n (-qx;q^2)_m."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    lhs = XLaurentPoly.from_dict({
        i: qbinom(n + m, n + i, 2).shift(i * i) for i in range(-n, m + 1)
    })
    rhs = XLaurentPoly.x_power(0)
    for k in range(n):
        rhs = rhs * _x_binomial(2 * k + 1, -1)
    for k in range(m):
        rhs = rhs * _x_binomial(2 * k + 1, 1)
    return lhs, rhs


def qbinomial_theorem_sides(L: int) -> tuple[XLaurentPoly, XLaurentPoly]:
    """sum_i q^{i^2} x^i [L choose i]_{q^2} and (-xq; q^2)_L."""
    lhs = XLaurentPoly.from_dict({i: qbinom(L, i, 2).shift(i * i) for i in range(L + 1)})
    rhs = XLaurentPoly.x_power(0)
    for k in range(L):
        rhs = rhs * _x_binomial(2 * k + 1, 1)
    return lhs, rhs


def jacobi_triple_product_sides(A: int, x_sign: int, B: int, order: int) -> tuple[QSeries, QSeries]:
    """Theta series and triple product with q -> q^A and x -> x_sign * q^B."""
    if A < 1 or abs(B) >= A or x_sign not in (1, -1):
        raise IllSpecialized(f"need A >= 1, |B| < A and x_sign = +-1; got {(A, x_sign, B)}")
    out = [0] * (order + 1)
    for i in QuadraticExponent(A, B).j_range(order):
        e = A * i * i + B * i
        out[e] += x_sign ** (i % 2)
    lhs = QSeries._raw(order, out)
    rhs = (pochhammer_infinite(PochhammerSpec(-x_sign, A - B, 2 * A), order)
           * pochhammer_infinite(PochhammerSpec(-x_sign, A + B, 2 * A), order)
           * pochhammer_infinite(PochhammerSpec(1, 2 * A, 2 * A), order))
    return lhs, rhs


def _check_quintuple(A: int, z_sign: int, B: int) -> None:
    if z_sign not in (1, -1):
        raise ValueError("z_sign must be +1 or -1")
    leading = {"q": A, "-z": B, "-q/z": A - B, "q/z^2": A - 2 * B, "z^2 q": A + 2 * B}
    bad = {k: v for k, v in leading.items() if v < 1}
    if bad:
        raise IllSpecialized(f"Q(q^{A}, {z_sign:+d}q^{B}): factors {sorted(bad)} lack a positive exponent")


def quintuple_sum(A: int, z_sign: int, B: int, order: int) -> QSeries:
    """sum_k (-1)^k q^{A(3k^2-k)/2} z^{3k} (1 + z q^{Ak}) at q -> q^A, z -> z_sign q^B."""
    _check_quintuple(A, z_sign, B)
    out = [0] * (order + 1)
    # k-range: both exponents grow like 3A k^2 / 2
    first = QuadraticExponent(3 * A, 6 * B - A, 0, 2)
    second = QuadraticExponent(3 * A, 6 * B + A, 2 * B, 2)
    ks = set(first.j_range(order)) | set(second.j_range(order))
    for k in ks:
        w = (-1) ** (k % 2) * z_sign ** (k % 2)
        e1 = first(k)
        e2 = second(k)
        if e1 < 0 or e2 < 0:
            raise InvalidExponent(f"negative exponent in quintuple sum at k={k}")
        if e1 <= order:
            out[e1] += w
        if e2 <= order:
            out[e2] += w * z_sign
    return QSeries._raw(order, out)


def quintuple_product(A: int, z_sign: int, B: int, order: int) -> QSeries:
    """(p, -z, -p/z; p)_oo (p/z^2, z^2 p; p^2)_oo at p = q^A, z = z_sign q^B."""
    _check_quintuple(A, z_sign, B)
    specs = [
        PochhammerSpec(1, A, A),
        PochhammerSpec(-z_sign, B, A),
        PochhammerSpec(-z_sign, A - B, A),
        PochhammerSpec(1, A - 2 * B, 2 * A),
        PochhammerSpec(1, A + 2 * B, 2 * A),
    ]
    s = QSeries.one(order)
    for spec in specs:
        for e in spec.exponents(order):
            s = s.mul_binomial(e, -spec.sign)
    return s


def quintuple_sides(A: int, z_sign: int, B: int, order: int) -> tuple[QSeries, QSeries]:
    return quintuple_sum(A, z_sign, B, order), quintuple_product(A, z_sign, B, order)


def euler_inverse(order: int, base: int = 1) -> QSeries:
    """1 / (q^b; q^b)_oo."""
    return inv_qpoch_infinite(base, base, order)


__all__ = [
    "DivergentSpec", "NonIntegralExponent", "IllSpecialized", "PochhammerSpec",
    "pochhammer_finite", "pochhammer_infinite", "poch", "qpoch", "inv_qpoch_infinite",
    "divide_by_qpoch", "minus_one_ratio", "q3q6_ratio", "q3q3_ratio", "qbinom",
    "qbinom_product", "pochhammer_quotient", "legendre3", "EisensteinInt", "OMEGA",
    "OMEGA_BAR", "eisenstein_chi", "QuadraticExponent", "theta_weight", "theta_sum",
    "triple_product_poly_sides", "qbinomial_theorem_sides", "jacobi_triple_product_sides",
    "quintuple_sum", "quintuple_product", "quintuple_sides", "euler_inverse", "series_inv",
]
