"""Exact numbers from roots of unity.

Gamma = exp(2 pi i / 3) and i = exp(2 pi i / 4) live in cyclotomic fields;
square roots of integers are built from Gauss sums, so normalizations like
1/sqrt(66) stay exact too.
"""

from cyclodft import cyclotomic_polynomial, root_of_unity, sqrt_positive_integer, to_complex_float

G = root_of_unity(3, 1)
print("Gamma           =", G, "~", to_complex_float(G))
print("1 + G + G^2     =", 1 + G + G**2)
print("conj(G)         =", G.conjugate(), " (equal to G^2:", G.conjugate() == G**2, ")")

# |2G + 1|^2 and |2 + G^2|^2 are the diagonal moduli of the equatorial gate
for z in (2 * G + 1, 2 + G**2):
    print(f"|{z}|^2 =", z * z.conjugate())

# Square roots: sqrt(2) from zeta_8, sqrt(3) and sqrt(11) from Gauss sums with a factor i
for m in (2, 3, 11, 66):
    s = sqrt_positive_integer(m)
    print(f"sqrt({m}) lives at conductor {s.conductor}; s*s == {m}: {s * s == m}; float {to_complex_float(s).real:.12f}")

# Equality is decided by reduction modulo the cyclotomic polynomial
print("Phi_12 coefficients:", cyclotomic_polynomial(12))
print("zeta_12^4 == Gamma:", root_of_unity(12, 4) == G)
