"""
Truncated projectives and BGG reciprocity
=========================================

For zero charge the projective cover of L(lam - k h) exists among modules
with weights below lam.  Its Verma flag matches composition multiplicities
of Verma modules, and its pq-degree layers split as sl2-modules.
"""

from fractions import Fraction

from schrodinger import Weight, bgg_check, findim_projective, truncated_projective
from schrodinger.blocks import graded_layer_highest_weights, graded_hom_counts, verma_flag

lam = Weight(Fraction(1, 3), 0)
for k in range(4):
    P = truncated_projective(lam, k, 12)
    print(f"P({k}): character {P.character()[:8]}  Verma flag {verma_flag(P, 6)}  BGG: {bgg_check(lam, k, 12)}")

P1 = truncated_projective(lam, 1, 10)
print("degree-1 layer of P(1) has highest weights", [str(w) for w in graded_layer_highest_weights(P1, 1)])
print("graded homs around P(1):", graded_hom_counts(lam, 1, 10))

# integral weight: the flag has a repeated factor
P = truncated_projective(Weight(0, 0), 2, 10)
print("\nP(0,0;2) Verma flag:", verma_flag(P, 4))

# finite-dimensional part: the j-th layer is a tensor product of simples
for j, row in findim_projective(2, 4).items():
    print(f"layer {j}: dim {row['dim']:2d}  highest weights {row['decomposition']}")
