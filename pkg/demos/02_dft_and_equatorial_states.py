"""The qudit DFT and equatorial state families, checked symbolically.

Phases e^{i delta}, e^{i phi} are formal unimodular variables, so a Gram
matrix equal to the identity here holds for every choice of phases.
"""

from cyclodft import apply, dft_matrix, equatorial_family, gram, is_unitary
from cyclodft.qstates import basis_state, matrix_to_numpy

F = dft_matrix(3)
print("DFT(3) entries (times 1/sqrt 3):")
for row in F.entries:
    print("   ", [str(x) for x in row])
print("numerically:\n", matrix_to_numpy(F).round(6))

for n in range(1, 13):
    ok, _ = is_unitary(dft_matrix(n))
    assert ok
print("DFT(n) is exactly unitary for n = 1..12")

out = apply(F, basis_state(3, 1))
print("DFT(3)|1> amplitudes:", [str(a) for a in out.amplitudes], "over sqrt", out.norm_d)

psi = equatorial_family(3, ("delta", "phi"))
for r, state in enumerate(psi):
    print(f"psi_{r} =", [str(a) for a in state.amplitudes], "/ sqrt 3")
print("Gram of the equatorial family:")
for row in gram(psi):
    print("   ", [str(x) for x in row])
