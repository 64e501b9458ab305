"""
Growing a hierarchy from a seed
===============================

A seed is a closed-form evaluation of a bilateral sum against the kernel
[2L+a choose L-j].  Each lemma step multiplies alpha_j by q^{j^2+aj} and
replaces F by a weighted r-sum, so one seed yields a polynomial identity for
every depth v, and an L -> oo limit in which the bilateral side becomes a
quintuple product.
"""

from qlegendre.bailey import (
    bailey_step,
    canonicalize_seed,
    engine_multisum_spec,
    limit_rhs,
    multisum_lhs,
    verify_state,
)
from qlegendre.qkit import euler_inverse, quintuple_product
from qlegendre.seeds import SEEDS

seed = SEEDS["SEED-D"]
print(seed.name, "as printed, L = 0..3:")
for L in range(4):
    print("  ", seed.F(L))

# the printed slot is L+j; canonicalization reflects j -> -j and probes
state = canonicalize_seed(seed)
print("canonical alpha:", state.alpha)

# each step preserves the defining relation
for v in range(1, 4):
    state = bailey_step(state)
    print(f"v={v}: relation holds for L <= 10:", verify_state(state, 10).passed)

# L -> oo for v = 1: multisum against theta(alpha) / (q^2;q^2)_oo
N = 120
seed_state = canonicalize_seed(seed)
lhs = multisum_lhs(engine_multisum_spec(seed_state), 1, N)
rhs = limit_rhs(bailey_step(seed_state).alpha, N)
print("multisum == theta / euler:", lhs == rhs)

# and the theta series is a quintuple product
print("== Q(q^18, q^3) / (q^2;q^2)_oo:", rhs == quintuple_product(18, 1, 3, N) * euler_inverse(N, 2))
print("first coefficients:", lhs.coeffs[:16])
