"""
Projective presentations and zero-cokernel morphisms
====================================================
"""

import random

from brickwork import io
from brickwork.p1 import build_special, canonical_decomposition, cokernel, is_isomorphic, is_zero_coker
from brickwork.poly import RatFunField
from brickwork.sampling import random_object, random_zero_coker_morphism

alg = io.load_algebra(io.load_fixture("example25.algebra.json"))
print("algebra of dimension", alg.dim, "with vertices", alg.vertices)

# The special objects attached to each vertex, and the modules they present.
special = {t: build_special(alg, t) for t in alg.vertices}
for t, sp in special.items():
    print(f"vertex {t}: L presents {cokernel(sp.L).module.dims}, "
          f"R = (P{sp.R.P1} -> P{sp.R.P2})")

print("L(e1) ~ R(e2):", is_isomorphic(special[1].L, special[2].R))
print("L(et) ~ R(et) for some t:", any(is_isomorphic(sp.L, sp.R) for sp in special.values()))

# gamma_t itself decomposes as a single term through gamma_t
dec = canonical_decomposition(special[1].gamma)
print("gamma_1 splits into", len(dec.gamma_terms), "gamma-term(s) and", len(dec.s_terms), "S-term(s)")

# Random morphisms with zero cokernel, with scalars in k(x)
rng = random.Random(0)
K = RatFunField(alg.K)
for _ in range(5):
    X, Y = random_object(alg, rng, K), random_object(alg, rng, K)
    u = random_zero_coker_morphism(X, Y, rng)
    dec = canonical_decomposition(u)
    print(f"  P{X.P1}->P{X.P2}  to  P{Y.P1}->P{Y.P2}: zero cokernel {is_zero_coker(u)}, "
          f"{len(dec.gamma_terms)} gamma / {len(dec.s_terms)} S terms, "
          f"recomposes {dec.recompose(X, Y) == u}")
