"""The pairwise Hadamard-type operator U = diag(1 + i Gamma^k)/sqrt 2.

The cyclic actions U psi_r = (psi_r + i psi_{r+1})/sqrt 2 hold in every
dimension. The exact residual U^dagger U - I tells whether the operator is
actually unitary; it is recorded rather than assumed.
"""

import numpy as np

from cyclodft.claims import check_P1_pairwise, pairwise_matrix
from cyclodft.qstates import matrix_to_numpy

for n in (2, 3, 4, 5, 6):
    res = check_P1_pairwise(n)
    actions = all(r.exact_zero for r in res.residuals if r.name.startswith("action"))
    audits = [r for r in res.residuals if r.kind == "audit"]
    diag = [complex(audits[k * n + k].value.constant_value()) for k in range(n)]
    print(f"n={n}: actions hold {actions}; status {res.status}")
    print("     diag(U^dag U) - 1 =", np.round(np.array(diag).real, 6))

U = matrix_to_numpy(pairwise_matrix(3))
print("float singular values of the qutrit operator:", np.linalg.svd(U, compute_uv=False).round(6))
print("float singular values at n=4:", np.linalg.svd(matrix_to_numpy(pairwise_matrix(4)), compute_uv=False).round(6))
