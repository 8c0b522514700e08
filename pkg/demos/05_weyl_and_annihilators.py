"""
Weyl algebra realization and annihilators
=========================================

With nonzero charge the Heisenberg part becomes a Weyl algebra and sl2
embeds into it.  Tensoring sl2 Verma modules with the Fock module gives
Verma modules.  Finally, annihilators of Verma modules are generated by the
center, checked degree by degree.
"""

from fractions import Fraction

from schrodinger import Weight, compare_slices, intersection_check, phi, tensor_with_M, verma
from schrodinger.annihilators import annihilator_slice
from schrodinger.modules import module_hom
from schrodinger.pbw import generator

c = Fraction(2)
for g in "efhpqz":
    print(f"phi({g}) =", phi(generator(g), c))

a = Fraction(1, 3)
T = tensor_with_M(a, 10, c)
V = verma(T.top, 10)
print("\ntensor character:", T.character())
print("Verma character: ", V.character())
print("maps Verma -> tensor:", module_hom(V, T).dim)

lam = Weight(1, 1)
print("\nannihilator of Verma(1, 1) in degree <= 3 has dimension", annihilator_slice(lam, 3).dim)
for lam in [Weight(Fraction(1, 3), 1), Weight(Fraction(-1, 2), 1), Weight(0, 0)]:
    print(lam, [compare_slices(lam, d) for d in (1, 2, 3)])
sample = [Weight(Fraction(k, 3), Fraction(k + 1, 2)) for k in (1, 2, 4, 5, 7, 8, 10, 11)]
print("common annihilator in degree <= 2:", intersection_check(sample, 2))
