"""
Verma modules and their simple quotients
========================================

Weight spaces of a Verma module have dimension floor(i/2) + 1.  The
contravariant form detects the maximal submodule; singular vectors show
where Verma modules embed into one another.
"""

from fractions import Fraction

from schrodinger import Weight, simple_character, singular_vectors, verma
from schrodinger.verma import composition_multiplicities, format_vector, gram_matrix

# nonzero charge, generic weight: the Verma module is simple
lam = Weight(Fraction(1, 3), 1)
print(lam, "Verma :", verma(lam, 10).character())
print(lam, "simple:", simple_character(lam, 10))

# half-integral weight: one singular vector, two steps down
lam1 = Weight(Fraction(-1, 2), 1)
M = verma(lam1, 4)
for i in range(1, 5):
    for v in singular_vectors(M, i):
        print(f"singular vector at depth {i}:", format_vector(M, i, v))
print("dot partner:", lam1.dot())
print("composition factors:", {str(k): m for k, m in composition_multiplicities(lam1, 10).items() if m})

# zero charge: q v is singular, so the Verma module has a long chain of submodules
lam0 = Weight(Fraction(1, 3), 0)
M = verma(lam0, 6)
print("\nGram matrix at depth 2:", [[str(x) for x in row] for row in gram_matrix(M, 2)])
print("simple character:", simple_character(lam0, 10))
