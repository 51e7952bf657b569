# Telling a weight-rho function from the all-zero function.
#
# With one reflection vector the condition is cos(m * theta) = 0, so the
# threshold weight for m iterations has a closed form.  The weight-1/2 case
# with a single query is the Deutsch-Jozsa style problem.

import math

from weightdecision import min_iterations_zero, min_weight_zero, zero_scheme
from weightdecision.simulator import verify_scheme

print(" m   rho_min(m)")
for m in (1, 2, 3, 4, 5, 10):
    print(f"{m:2d}   {min_weight_zero(m):.4f}")

# The inverse question: how many queries does a small weight need?
# For rho << 1 the count grows like pi / (4 sqrt(rho)).
for rho in (1e-2, 1e-3, 1e-4, 1e-5):
    m = min_iterations_zero(rho)
    print(f"rho={rho:g}: m_min={m}  pi/(4 sqrt(rho))={math.pi / (4 * math.sqrt(rho)):.1f}")

# Build the scheme for rho = 3/10 and check it against every weight-3
# function on 10 inputs with the state-vector simulator.
scheme = zero_scheme(0.3, min_iterations_zero(0.3))
print(scheme)
print(verify_scheme(scheme, 3, 0, 10, mode="exhaustive").to_text())
