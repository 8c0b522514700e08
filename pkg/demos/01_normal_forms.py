"""
Normal forms and the Casimir element
====================================

Products in the enveloping algebra are rewritten into the ordered basis
f^a q^b h^c z^d p^s e^t.  Everything is exact.
"""

from schrodinger import casimir, center_basis, generator, hc_homomorphism, parse_element, sigma, verify_central

f, q, h, z, p, e = (generator(g) for g in "fqhzpe")

# a product of generators is normal-ordered on the fly
print("e f      =", e * f)
print("p q      =", p * q)
print("e q^2    =", e * q * q)

# text input works too; juxtaposition is the product
u = parse_element("(e + f)^2 - 1/2*h p q")
print("u        =", u)
print("sigma(u) =", sigma(u))

# the Casimir commutes with every generator
c = casimir()
print("\nc =", c)
print("central:", verify_central(c))
print("image in C[h, z]:", hc_homomorphism(c))

# the center in low degree is spanned by monomials in z and c
for d in range(7):
    print(f"dim Z cap U_<={d}:", len(center_basis(d)))
