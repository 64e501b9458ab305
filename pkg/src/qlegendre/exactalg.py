"""Exact polynomial and truncated power-series arithmetic in one variable q.

Coefficients are Python ints, promoted to :class:`fractions.Fraction` only when
a division leaves a non-integral value; a fraction with denominator 1 is
always folded back to an int.  All containers are immutable.

Three multiplication kernels are available:

* sparse shift-and-add, used when one operand has few nonzero terms
  (products of binomials ``1 - q^k`` dominate this code base);
* Kronecker substitution, used for integer operands: both polynomials are
  packed into one big integer each and multiplied as bignums (GMP through
  gmpy2 when it is importable);
* Karatsuba, used for large operands with rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

try:
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover - pure-Python fallback
    _bigint = int

Coeff = Union[int, Fraction]

SPARSE_TERMS = 12
KARATSUBA_THRESHOLD = 64
KRONECKER_THRESHOLD = 24
DEFAULT_ORDER = 200


class QAlgebraError(ArithmeticError):
    """Base class for exact-arithmetic failures."""


class NonzeroRemainder(QAlgebraError):
    pass


class DivisionByZero(QAlgebraError, ZeroDivisionError):
    pass


class NonInvertible(QAlgebraError):
    pass


class InvalidExponent(QAlgebraError, ValueError):
    pass


def as_coeff(x) -> Coeff:
    """Normalize an int/Fraction (or anything Fraction accepts) to a Coeff."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return int(x)
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _is_int_list(c: Sequence) -> bool:
    return all(type(x) is int for x in c)


# ---------------------------------------------------------------------------
# multiplication kernels (operate on plain lists, no trimming)
# ---------------------------------------------------------------------------

def _mul_sparse(a: Sequence, b: Sequence, limit: int | None) -> list:
    """Product where ``a`` is the sparse operand."""
    n = len(a) + len(b) - 1
    if limit is not None:
        n = min(n, limit + 1)
    out = [0] * max(n, 0)
    for i, ai in enumerate(a):
        if not ai or i >= n:
            continue
        top = min(len(b), n - i)
        if ai == 1:
            for k in range(top):
                bk = b[k]
                if bk:
                    out[i + k] += bk
        elif ai == -1:
            for k in range(top):
                bk = b[k]
                if bk:
                    out[i + k] -= bk
        else:
            for k in range(top):
                bk = b[k]
                if bk:
                    out[i + k] += ai * bk
    return out


def _mul_schoolbook(a: Sequence, b: Sequence) -> list:
    if len(a) > len(b):
        a, b = b, a
    return _mul_sparse(a, b, None)


def _mul_karatsuba(a: Sequence, b: Sequence) -> list:
    if len(a) < KARATSUBA_THRESHOLD or len(b) < KARATSUBA_THRESHOLD:
        return _mul_schoolbook(a, b)
    m = max(len(a), len(b)) // 2
    a0, a1 = list(a[:m]), list(a[m:])
    b0, b1 = list(b[:m]), list(b[m:])
    z0 = _mul_karatsuba(a0, b0) if a0 and b0 else []
    z2 = _mul_karatsuba(a1, b1) if a1 and b1 else []
    sa = _add_lists(a0, a1)
    sb = _add_lists(b0, b1)
    z1 = _mul_karatsuba(sa, sb) if sa and sb else []
    z1 = _sub_lists(_sub_lists(z1, z0), z2)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(z0):
        out[i] += x
    for i, x in enumerate(z1):
        out[i + m] += x
    for i, x in enumerate(z2):
        out[i + 2 * m] += x
    return out


def _mul_kronecker(a: Sequence[int], b: Sequence[int]) -> list:
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    if not ma or not mb:
        return [0] * (len(a) + len(b) - 1)
    bound = ma * mb * min(len(a), len(b))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    half = 1 << (8 * nbytes - 1)
    zero = bytes(nbytes)

    def pack(c: Sequence[int]) -> int:
        pos = b"".join(x.to_bytes(nbytes, "little") if x > 0 else zero for x in c)
        neg = b"".join((-x).to_bytes(nbytes, "little") if x < 0 else zero for x in c)
        return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")

    n = len(a) + len(b) - 1
    z = int(_bigint(pack(a)) * _bigint(pack(b)))
    offset = int.from_bytes((bytes(nbytes - 1) + b"\x80") * n, "little")
    raw = (z + offset).to_bytes(n * nbytes, "little")
    fb = int.from_bytes
    return [fb(raw[i:i + nbytes], "little") - half for i in range(0, n * nbytes, nbytes)]


def _nnz(c: Sequence) -> int:
    return sum(1 for x in c if x)


def mul_lists(a: Sequence, b: Sequence, limit: int | None = None) -> list:
    """Coefficient list of ``a*b``, optionally truncated to exponents <= limit."""
    if not a or not b:
        return []
    if limit is not None:
        a = a[:limit + 1]
        b = b[:limit + 1]
    na, nb = _nnz(a), _nnz(b)
    if na == 0 or nb == 0:
        return []
    if min(na, nb) <= SPARSE_TERMS or min(len(a), len(b)) < KRONECKER_THRESHOLD:
        return _mul_sparse(a, b, limit) if na <= nb else _mul_sparse(b, a, limit)
    if _is_int_list(a) and _is_int_list(b):
        out = _mul_kronecker(a, b)
    else:
        out = [as_coeff(x) for x in _mul_karatsuba(a, b)]
    if limit is not None:
        del out[limit + 1:]
    return out


def _add_lists(a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        if x:
            out[i] += x
    return out


def _sub_lists(a: Sequence, b: Sequence) -> list:
    out = list(a) + [0] * (len(b) - len(a))
    for i, x in enumerate(b):
        if x:
            out[i] -= x
    return out


def _format_terms(items: Iterable[tuple[int, Coeff]], var: str = "q") -> str:
    parts = []
    for k, c in items:
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


# ---------------------------------------------------------------------------
# QPoly
# ---------------------------------------------------------------------------

class QPoly:
    """Polynomial in q with exact coefficients, dense from exponent 0."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = tuple(_trim([as_coeff(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs: list) -> "QPoly":
        # trusted constructor: entries are already normalized Coeffs
        p = object.__new__(cls)
        p.coeffs = tuple(_trim(coeffs))
        return p

    @classmethod
    def monomial(cls, k: int, c: Coeff = 1) -> "QPoly":
        if k < 0:
            raise InvalidExponent(f"negative exponent {k}")
        return cls._raw([0] * k + [as_coeff(c)])

    @classmethod
    def const(cls, c: Coeff) -> "QPoly":
        return cls._raw([as_coeff(c)])

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, Coeff]]) -> "QPoly":
        """Build from (exponent, coefficient) pairs; repeated exponents add up."""
        acc: dict[int, Coeff] = {}
        for k, c in terms:
            if k < 0:
                raise InvalidExponent(f"negative exponent {k}")
            acc[k] = acc.get(k, 0) + c
        if not acc:
            return ZERO
        out = [0] * (max(acc) + 1)
        for k, c in acc.items():
            out[k] = as_coeff(c)
        return cls._raw(out)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return _is_int_list(self.coeffs)

    def __getitem__(self, k: int) -> Coeff:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Coeff]:
        return iter(self.coeffs)

    def terms(self) -> Iterator[tuple[int, Coeff]]:
        return ((k, c) for k, c in enumerate(self.coeffs) if c)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == QPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("QPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"QPoly({_format_terms(self.terms())})"

    def __str__(self) -> str:
        return _format_terms(self.terms())

    def _coerce(self, other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly.const(other)
        raise TypeError(f"cannot combine QPoly with {type(other).__name__}")

    def __add__(self, other) -> "QPoly":
        if isinstance(other, QSeries):
            return NotImplemented
        return QPoly._raw(_add_lists(self.coeffs, self._coerce(other).coeffs))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other) -> "QPoly":
        if isinstance(other, QSeries):
            return NotImplemented
        return QPoly._raw(_sub_lists(self.coeffs, self._coerce(other).coeffs))

    def __rsub__(self, other) -> "QPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, QSeries):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            c = as_coeff(other)
            return QPoly._raw([as_coeff(c * x) for x in self.coeffs]) if c else ZERO
        return QPoly._raw(mul_lists(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise InvalidExponent("negative power of a polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k.  Negative k is allowed only if q^-k divides self."""
        if not self.coeffs or k == 0:
            return self
        if k > 0:
            return QPoly._raw([0] * k + list(self.coeffs))
        v = self.valuation
        if v < -k:
            raise InvalidExponent(f"q^{-k} does not divide {self}")
        return QPoly._raw(list(self.coeffs[-k:]))

    def mul_binomial(self, k: int, c: Coeff = -1) -> "QPoly":
        """Multiply by (1 + c q^k) in linear time."""
        out = list(self.coeffs) + [0] * k
        for i, x in enumerate(self.coeffs):
            if x:
                out[i + k] += c * x
        return QPoly._raw(out)

    def exact_div(self, other: "QPoly") -> "QPoly":
        return poly_exact_div(self, other)

    def substitute_power(self, k: int) -> "QPoly":
        return substitute_power(self, k)

    def to_series(self, order: int) -> "QSeries":
        return QSeries(order, self.coeffs[:order + 1])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


ZERO = QPoly._raw([])
ONE = QPoly._raw([1])
Q = QPoly._raw([0, 1])


# ---------------------------------------------------------------------------
# QSeries
# ---------------------------------------------------------------------------

class QSeries:
    """Power series in q known exactly through q^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        c = [as_coeff(x) for x in list(coeffs)[:order + 1]]
        c.extend([0] * (order + 1 - len(c)))
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, order: int, coeffs: list) -> "QSeries":
        s = object.__new__(cls)
        if len(coeffs) > order + 1:
            del coeffs[order + 1:]
        elif len(coeffs) < order + 1:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        s.order = order
        s.coeffs = tuple(coeffs)
        return s

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls._raw(order, [])

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls._raw(order, [1])

    @classmethod
    def from_poly(cls, p: QPoly, order: int) -> "QSeries":
        return cls._raw(order, list(p.coeffs[:order + 1]))

    def __getitem__(self, k: int) -> Coeff:
        if k > self.order:
            raise IndexError(f"q^{k} is beyond truncation order {self.order}")
        return self.coeffs[k] if k >= 0 else 0

    def __iter__(self) -> Iterator[Coeff]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_integral(self) -> bool:
        return _is_int_list(self.coeffs)

    @property
    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(f"cannot extend series known to order {self.order} to {order}")
        return QSeries._raw(order, list(self.coeffs[:order + 1]))

    def first_mismatch(self, other: "QSeries") -> tuple[int, Coeff, Coeff] | None:
        n = min(self.order, other.order)
        for k in range(n + 1):
            if self.coeffs[k] != other.coeffs[k]:
                return k, self.coeffs[k], other.coeffs[k]
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            other = QSeries.from_poly(other, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None

    def __repr__(self) -> str:
        return f"QSeries({_format_terms(enumerate(self.coeffs))} + O(q^{self.order + 1}))"

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        if isinstance(other, QPoly):
            return QSeries.from_poly(other, self.order)
        if isinstance(other, (int, Fraction)):
            return QSeries._raw(self.order, [as_coeff(other)])
        raise TypeError(f"cannot combine QSeries with {type(other).__name__}")

    def __add__(self, other) -> "QSeries":
        o = self._coerce(other)
        n = min(self.order, o.order)
        return QSeries._raw(n, _add_lists(self.coeffs[:n + 1], o.coeffs[:n + 1]))

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries._raw(self.order, [-c for c in self.coeffs])

    def __sub__(self, other) -> "QSeries":
        o = self._coerce(other)
        n = min(self.order, o.order)
        return QSeries._raw(n, _sub_lists(self.coeffs[:n + 1], o.coeffs[:n + 1]))

    def __rsub__(self, other) -> "QSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            c = as_coeff(other)
            return QSeries._raw(self.order, [as_coeff(c * x) for x in self.coeffs])
        o = self._coerce(other)
        n = min(self.order, o.order)
        return QSeries._raw(n, mul_lists(self.coeffs, o.coeffs, n))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division of a series by zero")
            return QSeries._raw(self.order, [as_coeff(Fraction(x) / other) for x in self.coeffs])
        return self * series_inv(self._coerce(other))

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k (k >= 0), keeping the truncation order."""
        if k < 0:
            raise InvalidExponent("negative shift of a truncated series")
        return QSeries._raw(self.order, [0] * k + list(self.coeffs[:self.order + 1 - k]))

    def mul_binomial(self, k: int, c: Coeff = -1) -> "QSeries":
        """Multiply by (1 + c q^k) in linear time."""
        out = list(self.coeffs)
        for i in range(self.order, k - 1, -1):
            x = out[i - k]
            if x:
                out[i] += c * x
        return QSeries._raw(self.order, out)

    def div_binomial(self, k: int, c: Coeff = -1) -> "QSeries":
        """Divide by (1 + c q^k), k >= 1, in linear time."""
        if k < 1:
            raise NonInvertible("binomial divisor must have positive exponent")
        out = list(self.coeffs)
        neg = -c
        for i in range(k, self.order + 1):
            x = out[i - k]
            if x:
                out[i] += neg * x
        return QSeries._raw(self.order, out)

    def substitute_power(self, k: int) -> "QSeries":
        return substitute_power(self, k)


# ---------------------------------------------------------------------------
# named operations
# ---------------------------------------------------------------------------

def poly_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def poly_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def poly_exact_div(a: QPoly, b: QPoly) -> QPoly:
    """Return c with b*c == a, raising NonzeroRemainder if b does not divide a."""
    if b.is_zero():
        raise DivisionByZero("polynomial division by zero")
    if a.is_zero():
        return ZERO
    vb = b.valuation
    va = a.valuation
    if va < vb:
        raise NonzeroRemainder(f"{b} does not divide {a}")
    ac = a.coeffs[vb:]
    bc = b.coeffs[vb:]
    nq = len(ac) - len(bc) + 1
    if nq <= 0:
        raise NonzeroRemainder(f"{b} does not divide {a}")
    b0 = bc[0]
    inv0 = Fraction(1, b0) if b0 not in (1, -1) else b0
    support = [(k, x) for k, x in enumerate(bc) if x and k]
    out = [0] * nq
    for n in range(nq):
        s = ac[n]
        for k, x in support:
            if k > n:
                break
            y = out[n - k]
            if y:
                s -= x * y
        out[n] = as_coeff(s * inv0) if s else 0
    c = QPoly._raw(out)
    if QPoly._raw(mul_lists(out, bc)) != QPoly._raw(list(ac)):
        raise NonzeroRemainder(f"{b} does not divide {a}")
    return c


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def series_inv(a: QSeries) -> QSeries:
    """Multiplicative inverse of a series with nonzero constant term."""
    a0 = a.coeffs[0]
    if not a0:
        raise NonInvertible("constant term is zero")
    n = a.order
    inv0 = Fraction(1, 1) / a0
    support = [(k, x) for k, x in enumerate(a.coeffs) if x and k]
    out = [0] * (n + 1)
    out[0] = as_coeff(inv0)
    for m in range(1, n + 1):
        s = 0
        for k, x in support:
            if k > m:
                break
            y = out[m - k]
            if y:
                s += x * y
        out[m] = as_coeff(-s * inv0) if s else 0
    return QSeries._raw(n, out)


def substitute_power(a, k: int):
    """Apply q -> q^k.  Series keep their truncation order."""
    if not isinstance(k, int) or k < 1:
        raise InvalidExponent(f"substitution power must be a positive integer, got {k}")
    if k == 1:
        return a
    if isinstance(a, QPoly):
        if a.is_zero():
            return a
        out = [0] * (k * (len(a.coeffs) - 1) + 1)
        for i, c in enumerate(a.coeffs):
            out[i * k] = c
        return QPoly._raw(out)
    if isinstance(a, QSeries):
        out = [0] * (a.order + 1)
        for i in range(a.order // k + 1):
            out[i * k] = a.coeffs[i]
        return QSeries._raw(a.order, out)
    raise TypeError(f"cannot substitute into {type(a).__name__}")


# ---------------------------------------------------------------------------
# Laurent polynomials in x over Z[q]
# ---------------------------------------------------------------------------

class XLaurentPoly:
    """Laurent polynomial in x whose coefficients are QPoly."""

    __slots__ = ("min_x_power", "coeffs")

    def __init__(self, min_x_power: int = 0, coeffs: Iterable[QPoly] = ()):
        c = [p if isinstance(p, QPoly) else QPoly.const(p) for p in coeffs]
        lo = 0
        while lo < len(c) and c[lo].is_zero():
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1].is_zero():
            hi -= 1
        self.coeffs = tuple(c[lo:hi])
        self.min_x_power = min_x_power + lo if self.coeffs else 0

    @classmethod
    def from_dict(cls, terms: dict[int, QPoly]) -> "XLaurentPoly":
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(i, ZERO) for i in range(lo, hi + 1)])

    @classmethod
    def x_power(cls, k: int, c: QPoly = ONE) -> "XLaurentPoly":
        return cls(k, [c])

    def coefficient(self, k: int) -> QPoly:
        i = k - self.min_x_power
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    @property
    def max_x_power(self) -> int | None:
        return self.min_x_power + len(self.coeffs) - 1 if self.coeffs else None

    def items(self) -> Iterator[tuple[int, QPoly]]:
        for i, p in enumerate(self.coeffs):
            if not p.is_zero():
                yield self.min_x_power + i, p

    def __add__(self, other: "XLaurentPoly") -> "XLaurentPoly":
        acc: dict[int, QPoly] = dict(self.items())
        for k, p in other.items():
            acc[k] = acc.get(k, ZERO) + p
        return XLaurentPoly.from_dict(acc)

    def __neg__(self) -> "XLaurentPoly":
        return XLaurentPoly(self.min_x_power, [-p for p in self.coeffs])

    def __sub__(self, other: "XLaurentPoly") -> "XLaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "XLaurentPoly":
        if isinstance(other, (QPoly, int, Fraction)):
            return XLaurentPoly(self.min_x_power, [p * other for p in self.coeffs])
        acc: dict[int, QPoly] = {}
        for i, p in self.items():
            for j, r in other.items():
                acc[i + j] = acc.get(i + j, ZERO) + p * r
        return XLaurentPoly.from_dict(acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, XLaurentPoly):
            return NotImplemented
        return self.min_x_power == other.min_x_power and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("XLaurentPoly", self.min_x_power, self.coeffs))

    def first_mismatch(self, other: "XLaurentPoly") -> tuple[tuple[int, int], Coeff, Coeff] | None:
        """Lowest (x-power, q-power) where the two differ."""
        keys = sorted(set(k for k, _ in self.items()) | set(k for k, _ in other.items()))
        for k in keys:
            a, b = self.coefficient(k), other.coefficient(k)
            if a != b:
                n = max(len(a), len(b))
                for e in range(n):
                    if a[e] != b[e]:
                        return (k, e), a[e], b[e]
        return None

    def __repr__(self) -> str:
        if not self.coeffs:
            return "XLaurentPoly(0)"
        body = " + ".join(f"({p})*x^{k}" for k, p in self.items())
        return f"XLaurentPoly({body})"


def xlaurent_mul(a: XLaurentPoly, b: XLaurentPoly) -> XLaurentPoly:
    return a * b


def xlaurent_eq(a: XLaurentPoly, b: XLaurentPoly) -> bool:
    return a == b
