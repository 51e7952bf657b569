# Certifying schemes with the brute-force simulator.
#
# The simulator builds the reflection vectors explicitly, applies the oracle
# and the reflection literally, and checks that final states for weight r/N
# and r'/N are orthogonal.  A perturbed scheme is a negative control.

import dataclasses

from weightdecision import WeightPair, min_iterations_pair
from weightdecision.simulator import rationalize, verify_scheme

for rho, rho_p in [(0.95, 0.45), (0.75, 0.125), (0.8, 0.35), (0.3, 0.9)]:
    m, scheme = min_iterations_pair(WeightPair(rho, rho_p))
    r, rp, n = rationalize(rho, rho_p)
    report = verify_scheme(scheme, r, rp, n)
    print(f"({rho}, {rho_p}) m={m}: t={report.t_values} max|ip|={report.max_abs_inner_product:.1e}")

m, scheme = min_iterations_pair(WeightPair(0.75, 0.125))
print(verify_scheme(scheme, 6, 1, 8, mode="exhaustive").to_text())

broken = dataclasses.replace(scheme, mu1=scheme.mu1 + 0.05)
print(verify_scheme(broken, 6, 1, 8).to_text())
