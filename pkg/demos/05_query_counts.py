# Classical versus quantum query counts for nearby weights.
#
# The numerically found minimal m tracks 2 sqrt(rho (1 - rho)) / |rho - rho'|,
# the square root of the classical sampling estimate.

from weightdecision import WeightPair, min_iterations_pair, query_estimates

print(" delta  m_min  m_quant  m_cl,prb  m_cl,prb/m_min^2")
for delta in (0.1, 0.05, 0.04, 0.03, 0.02, 0.01):
    w = WeightPair(0.5, 0.5 - delta)
    m, _ = min_iterations_pair(w, m_max=300)
    est = query_estimates(w, n_inputs=10_000)
    print(f"{delta:6.2f} {m:6d} {est.m_quantum:8.1f} {est.m_classical_prob:9.0f} {est.m_classical_prob / m**2:10.2f}")
