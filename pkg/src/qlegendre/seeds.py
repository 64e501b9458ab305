"""The nine seed evaluations and the printed shapes of their hierarchies.

Each seed is a :class:`SeedDescriptor` in the orientation it is printed in
(binomial slot ``L+j`` or ``L-j``).  Each hierarchy has a :class:`ChainForm`
describing the printed finite multisum, the printed bilateral side as a
function of v, the printed series multisum and the quintuple specialization
of its product side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .bailey import AlphaSpec, MultisumSpec, SeedDescriptor
from .exactalg import ONE, ZERO, QPoly, poly_exact_div
from .qkit import QuadraticExponent, minus_one_ratio, q3q3_ratio, q3q6_ratio

q = QPoly.monomial


def _binom(k: int, c: int = -1) -> QPoly:
    """1 + c q^k."""
    return ONE.mul_binomial(k, c)


# ---------------------------------------------------------------------------
# closed forms of the seed right-hand sides
# ---------------------------------------------------------------------------

def _F_a(L: int) -> QPoly:
    if L == 0:
        return ZERO
    return minus_one_ratio(L - 1) * q(L - 1) * QPoly([1, 1, 1]) * _binom(L)


def _F_b(L: int) -> QPoly:
    return minus_one_ratio(L) * q(L) * QPoly.from_terms([(0, 1), (1, 1), (L + 1, -1)])


def _F_c(L: int) -> QPoly:
    # (q^3;q^6)_L / (q;q^2)_{L+1} * (1 - q^{2(1+2L)})
    return q3q6_ratio(L) * poly_exact_div(_binom(2 * (2 * L + 1)), _binom(2 * L + 1))


def _F_d(L: int) -> QPoly:
    return q3q6_ratio(L)


def _F_f(L: int) -> QPoly:
    return q3q6_ratio(L).shift(2 * L + 1)


def _F_g(L: int) -> QPoly:
    if L == 0:
        return ONE
    return q3q3_ratio(L - 1) * QPoly.from_terms([(0, 2), (L, 1), (L + 1, 1), (2 * L + 1, -1)])


def _F_h(L: int) -> QPoly:
    if L == 0:
        return q(1)
    return q3q3_ratio(L - 1) * QPoly.from_terms([(0, -1), (L, 1), (L + 1, 1), (2 * L + 1, 2)])


def _F_i(L: int) -> QPoly:
    if L == 0:
        return QPoly([1, 1])
    return q3q3_ratio(L - 1) * QPoly.from_terms([(0, 1), (2 * L + 1, 1), (L, 2), (L + 1, 2)])


# exponents written as (A j^2 + B j + C)/D
_BINOM_J1_2 = QuadraticExponent(1, -3, 2, 2)   # (j-1 choose 2)
_BINOM_J_2 = QuadraticExponent(1, -1, 0, 2)    # (j choose 2)
_SQUARE = QuadraticExponent(1)

SEEDS: dict[str, SeedDescriptor] = {
    "SEED-A": SeedDescriptor("SEED-A", AlphaSpec(_BINOM_J1_2, character_shift=0), a=0, F=_F_a, slot="L+j"),
    "SEED-B": SeedDescriptor("SEED-B", AlphaSpec(_BINOM_J1_2, character_shift=0), a=1, F=_F_b, slot="L+j"),
    "SEED-C": SeedDescriptor("SEED-C", AlphaSpec(_SQUARE, character_shift=1, alternating=True, base=2),
                             a=1, F=_F_c, slot="L+j"),
    "SEED-D": SeedDescriptor("SEED-D", AlphaSpec(_SQUARE, character_shift=1, alternating=True, base=2),
                             a=0, F=_F_d, slot="L+j"),
    "SEED-E": SeedDescriptor("SEED-E", AlphaSpec(_SQUARE, character_shift=1, alternating=True, base=2),
                             a=1, F=_F_d, slot="L-j"),
    "SEED-F": SeedDescriptor("SEED-F", AlphaSpec(_SQUARE, character_shift=0, alternating=True, base=2),
                             a=1, F=_F_f, slot="L-j"),
    "SEED-G": SeedDescriptor("SEED-G", AlphaSpec(_BINOM_J_2, character_shift=1, alternating=True),
                             a=1, F=_F_g, slot="L-j"),
    "SEED-H": SeedDescriptor("SEED-H", AlphaSpec(_BINOM_J_2, character_shift=0, alternating=True),
                             a=1, F=_F_h, slot="L-j"),
    "SEED-I": SeedDescriptor("SEED-I", AlphaSpec(_BINOM_J_2, character_shift=2, alternating=True, sign=-1),
                             a=1, F=_F_i, slot="L-j"),
}

HIERARCHY_SEEDS = ("SEED-A", "SEED-B", "SEED-C", "SEED-D", "SEED-E", "SEED-F")
SINGLE_SUM_SEEDS = ("SEED-G", "SEED-H", "SEED-I")


# ---------------------------------------------------------------------------
# printed hierarchies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainForm:
    """Printed v-fold identities grown from one seed.

    ``finite`` is the printed polynomial multisum; ``printed_alpha(v)`` the
    printed bilateral side in the seed's orientation; ``series`` the printed
    multisum of the L -> oo limit and ``quintuple(v)`` the (A, z_sign, B)
    specialization of its product side, which is divided by
    (q^offset; q^step)_oo for ``euler = (offset, step)`` and by
    ``product_divisor``.
    """

    seed: str
    finite: MultisumSpec
    printed_alpha: Callable[[int], AlphaSpec]
    series: MultisumSpec
    quintuple: Callable[[int], tuple[int, int, int]]
    euler: tuple[int, int] = (1, 1)
    product_divisor: QPoly = ONE
    normalized: bool = False


def _tail_a(n: int) -> QPoly:
    return minus_one_ratio(n).shift(n) * _binom(n + 1)


def _tail_b(n: int) -> QPoly:
    return minus_one_ratio(n).shift(n) * QPoly.from_terms([(0, 1), (1, 1), (n + 1, -1)])


def _tail_c(n: int) -> QPoly:
    # (q^3;q^6)_n / (q;q^2)_{n+1} over (q^2;q^2)_{2n}, rewritten over (q^2;q^2)_{2n+1}
    return q3q6_ratio(n) * _binom(2 * n + 1, 1)


def _tail_f(n: int) -> QPoly:
    return q3q6_ratio(n).shift(2 * n)


CHAINS: dict[str, ChainForm] = {
    "A": ChainForm(
        seed="SEED-A",
        finite=MultisumSpec(base=1, c=2, d=2, tail=_tail_a, a=0, s=1, prefactor=QPoly([1, 1, 1]), label="A"),
        printed_alpha=lambda v: AlphaSpec(QuadraticExponent(2 * v + 1, -3, -2 * (v - 1), 2), character_shift=0),
        series=MultisumSpec(base=1, c=2, d=2, tail=_tail_a, label="A"),
        quintuple=lambda v: (6 * v + 3, -1, 3 * v),
        euler=(2, 1),
        product_divisor=_binom(3),
    ),
    "B": ChainForm(
        seed="SEED-B",
        finite=MultisumSpec(base=1, c=1, d=1, tail=_tail_b, a=1, s=0, label="B"),
        printed_alpha=lambda v: AlphaSpec(QuadraticExponent(2 * v + 1, -(2 * v + 3), 2, 2), character_shift=0),
        series=MultisumSpec(base=1, c=1, d=1, tail=_tail_b, label="B"),
        quintuple=lambda v: (6 * v + 3, -1, 2 * v),
    ),
    "C": ChainForm(
        seed="SEED-C",
        finite=MultisumSpec(base=2, c=1, d=1, tail=_tail_c, a=1, s=0, label="C"),
        printed_alpha=lambda v: AlphaSpec(QuadraticExponent(2 * v + 1, -2 * v), character_shift=1,
                                          alternating=True, base=2),
        series=MultisumSpec(base=2, c=1, d=1, tail=_tail_c, label="C"),
        quintuple=lambda v: (12 * v + 6, 1, 1),
        euler=(2, 2),
    ),
    "D": ChainForm(
        seed="SEED-D",
        finite=MultisumSpec(base=2, c=0, d=0, tail=q3q6_ratio, a=0, s=0, label="D"),
        printed_alpha=lambda v: AlphaSpec(QuadraticExponent(2 * v + 1), character_shift=1,
                                          alternating=True, base=2),
        series=MultisumSpec(base=2, c=0, d=0, tail=q3q6_ratio, label="D"),
        quintuple=lambda v: (12 * v + 6, 1, 2 * v + 1),
        euler=(2, 2),
    ),
    "E": ChainForm(
        seed="SEED-E",
        finite=MultisumSpec(base=2, c=1, d=1, tail=q3q6_ratio, a=1, s=0, label="E"),
        printed_alpha=lambda v: AlphaSpec(QuadraticExponent(2 * v + 1, 2 * v), character_shift=1,
                                          alternating=True, base=2),
        series=MultisumSpec(base=2, c=1, d=1, tail=q3q6_ratio, label="E"),
        quintuple=lambda v: (12 * v + 6, 1, 4 * v + 1),
        euler=(2, 2),
        normalized=True,
    ),
    "F": ChainForm(
        seed="SEED-F",
        finite=MultisumSpec(base=2, c=1, d=1, tail=_tail_f, a=1, s=0, label="F"),
        printed_alpha=lambda v: AlphaSpec(QuadraticExponent(2 * v + 1, 2 * v, -1), character_shift=0,
                                          alternating=True, base=2),
        series=MultisumSpec(base=2, c=1, d=1, tail=_tail_f, label="F"),
        quintuple=lambda v: (12 * v + 6, 1, 4 * v + 3),
        euler=(2, 2),
    ),
}

# slot of the printed bilateral side of each chain (same as its seed)
CHAIN_SLOTS = {k: SEEDS[c.seed].slot for k, c in CHAINS.items()}

# the external multisum with denominators (q)_{n_1}..(q)_{n_{v-1}} (q)_{2 n_v}
PLUSPLUS = MultisumSpec(base=1, c=0, d=0, tail=minus_one_ratio, label="++")


def plusplus_quintuple(v: int) -> tuple[int, int, int]:
    return 6 * v + 3, -1, v + 1
