"""Which (alpha, beta) make U psi_0 = (psi_0 + alpha psi_1 + beta psi_2)/sqrt 3 consistent?

For equatorial families the preservation condition collapses to three
equations in alpha and beta. The exact search runs over roots of unity; the
float grid sweep is a heuristic cross-check over all unit-modulus pairs.
"""

from cyclodft.claims import grid_probe_coefficients, solve_E2_coefficients

for order in (3, 6, 12, 24):
    sols, res = solve_E2_coefficients(order)
    print(f"{order:>2}-th roots: {len(sols)} solutions -> {[s.label() for s in sols]}  [{res.status}]")

hits = grid_probe_coefficients(360, 1e-6)
print("1-degree float grid, pairs (a, b) in degrees with alpha = e^{ia}, beta = e^{ib}:")
print("   ", hits)
