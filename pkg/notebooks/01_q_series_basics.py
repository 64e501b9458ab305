"""
Exact q-series arithmetic
=========================

Polynomials and truncated power series in q with exact integer or rational
coefficients, and the building blocks used by the identity catalog.
"""

from qlegendre.exactalg import QPoly, QSeries, poly_exact_div, series_inv
from qlegendre.qkit import (
    QuadraticExponent,
    PochhammerSpec,
    eisenstein_chi,
    legendre3,
    pochhammer_infinite,
    qbinom,
    quintuple_sides,
    theta_sum,
)

# polynomials are immutable and compare by value
a = QPoly([1, 1, 1])
b = QPoly([1, -1])
print("(1+q+q^2)(1-q) =", a * b)
print("(1-q^3)/(1-q)  =", poly_exact_div(a * b, b))

# a series is known exactly up to its truncation order
geo = series_inv(QSeries.from_poly(b, 8))
print("1/(1-q)        =", geo)

# Euler's product (q;q)_oo and the pentagonal number theorem
N = 40
euler = pochhammer_infinite(PochhammerSpec(1, 1, 1), N)
pent = theta_sum(QuadraticExponent(3, -1, 0, 2), N, alternating=True)
print("(q;q)_oo == pentagonal sum:", euler == pent)

# Gaussian binomials come from the Pascal recurrence
print("[4 choose 2]_q =", qbinom(4, 2))
print("[4 choose 2]_q at q=1:", qbinom(4, 2)(1))

# the mod-3 character two ways: residues and Eisenstein integers
print([legendre3(j) for j in range(-4, 5)])
print([eisenstein_chi(j) for j in range(-4, 5)])

# quintuple product: bilateral sum against the five-factor product
lhs, rhs = quintuple_sides(6, -1, 1, 60)
print("Q(q^6, -q) sum == product:", lhs == rhs)
