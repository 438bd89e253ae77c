"""Why a generalized qutrit DFT cannot exist for arbitrary orthonormal triples.

If U acted as the DFT pattern on two orthonormal triples v and w, it would
have to preserve <v_0|w_0>. The residual below is the difference between
that inner product and the one forced by the DFT pattern; it is a nonzero
phase polynomial, so no such U exists.
"""

import math

from cyclodft.claims import check_T1_impossibility, dft_coefficient_rows, preservation_sides
from cyclodft.qstates import counterexample_families, gram

v, w = counterexample_families()
for fam in (v, w):
    ok = all((x - int(r == c)).is_zero() for r, row in enumerate(gram(fam)) for c, x in enumerate(row))
    print(f"family {fam.label}: orthonormal for all phases: {ok}")

lhs, rhs = preservation_sides(dft_coefficient_rows(3), v, w)
residual = lhs - rhs
print("residual <v0|w0> - <Uv0|Uw0>:")
for mono, coeff in residual.sorted_terms():
    print("   ", mono or "(constant)", "->", complex(coeff))

zero = {name: 0.0 for name in residual.variables}
print("at zero phase:", residual.evaluate(zero))
print("a few other phase points (delta_k, phi_k, delta_j, phi_j):")
for point in ((0.5, 1.0, 2.0, 3.0), (1.0, 0.0, 0.0, 1.0), (3.1, 4.2, 0.3, 2.2)):
    a = dict(zip(("delta_k", "phi_k", "delta_j", "phi_j"), point))
    print(f"   {point}:", residual.evaluate(a))

res = check_T1_impossibility()
print("claim", res.claim_id, "->", res.status, "|", res.detail)
print("Sanity: 4/sqrt(18) - (1/sqrt 3)(1/sqrt 6 + 1/sqrt 11 + 7/sqrt 66) =",
      4 / math.sqrt(18) - (1 / math.sqrt(6) + 1 / math.sqrt(11) + 7 / math.sqrt(66)) / math.sqrt(3))
