"""Exact finite-field arithmetic.

Builds a few fields, shows how elements are indexed, and checks a couple
of classical identities by hand.
"""

from finlat import make_field, poly_str

# A prime field: GF(7) is plain arithmetic mod 7.
gf7 = make_field(7)
a, b = gf7.element(3), gf7.element(5)
print(f"in {gf7}: 3 + 5 = {a + b}, 3 * 5 = {a * b}, 3^-1 = {a.inverse()}")

# An extension field: GF(9) = Z_3[x]/(x^2+1).  The default modulus is the
# lexicographically smallest irreducible, so runs are reproducible.
gf9 = make_field(3, 2)
print(f"\n{gf9} uses modulus {poly_str(gf9.modulus)}")
x = gf9.element(3)  # index i encodes base-3 digits, so index 3 is x
print(f"x * x = {x * x}   (the modulus makes x^2 = -1 = 2)")
print(f"x^-1  = {x.inverse()}")

# Every element is a polynomial in x with coefficients mod 3:
print("\nall nine elements:", ", ".join(str(e) for e in gf9.all_elements()))

# Nonzero elements form a cyclic group of order q-1.
print("\nFermat check: a^(q-1) for every nonzero a of GF(9):",
      {str(e): str(e ** 8) for e in gf9.all_elements() if e.index})

# Other presentations of GF(9) exist; they are distinct values and their
# elements deliberately do not mix.
alt9 = make_field(3, 2, (2, 1, 1))  # x^2 + x + 2
print(f"\nalternative presentation: modulus {poly_str(alt9.modulus)}; equal to the default? {alt9 == gf9}")
