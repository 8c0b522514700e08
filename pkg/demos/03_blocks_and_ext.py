"""
Blocks, quivers and Ext groups
==============================

Each weight falls into one of five kinds of block.  For zero charge the
block is described by a quiver; its arrows are recovered from Ext^1 between
simple modules, computed as homomorphisms out of radicals of Verma modules.
"""

from fractions import Fraction

from schrodinger import Weight, classify
from schrodinger.blocks import ext_table, half_integer_block_check

for lam in [Weight(Fraction(1, 3), 1), Weight(Fraction(-1, 2), 1), Weight(2, 1),
            Weight(Fraction(1, 3), 0), Weight(0, 0)]:
    d = classify(lam)
    print(f"{str(lam):>12}  {d.block_type.value:<20} theta={d.central_character.theta}  "
          f"primitive ideals: {d.primitive_ideal_count}")

print()
print(classify(Weight(Fraction(-1, 2), 1)).quiver.to_dot())

# Ext^1 between L(lam - i h) and L(lam - j h), non-integral zero charge
table = ext_table(Weight(Fraction(1, 3), 0), range(5), 12)
for i in range(5):
    print(" ".join(str(table[f"{i},{j}"]) for j in range(5)))

# the half-integral block: two vertices, one composite path vanishes
print("\n", half_integer_block_check())
