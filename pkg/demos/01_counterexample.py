"""
The off-lattice bound that does not hold
========================================

A q-Ostrowski bound proved at lattice points a + q^m (b - a) was once
extended to every x in [a, b] by replacing q^m with (x - a)/(b - a).
A three-breakpoint tent at q = 1/2 shows that extension is false.
"""

# %%
# The Jackson integral only samples f on the lattice 1, 1/2, 1/4, ...
# The tent rises to 9/10 and drops back to 0 at t = 1, so the sample at
# t = 1 contributes nothing.
import numpy as np

from qostrowski import (
    check_ostrowski,
    disproved_bound,
    full_ostrowski_bound,
    make_tent_counterexample,
    q_integral,
    sup_norm_qderiv,
)
from qostrowski.oracle import riemann_integral

q = 0.5
f = make_tent_counterexample()
I = q_integral(f, q, (0, 1), 1.0, sup_f=1.0, tol=1e-14)
print(f"q-integral      = {I.value:.15f}  (1/6 = {1/6:.15f}, tail <= {I.tail_bound:.1e})")
print(f"Riemann integral= {riemann_integral(f, (0, 1), 100_000):.6f}")

# %%
# The q-derivative norm is exactly 1. The breakpoints and their lattice
# preimages are enough to certify it.
norm = sup_norm_qderiv(f, q)
print(f"sup |D_q f| = {norm.estimate}  (exact: {norm.exact})")

# %%
# At x = 9/10 the deviation from the q-mean is 9/10 - 1/6 = 11/15.
# The extended bound gives 23/75, which is smaller.
for kind in ("DISPROVED", "FULL"):
    r = check_ostrowski(f, 0.9, q, (0, 1), norm.estimate, kind)
    verdict = "holds" if r.satisfied else "VIOLATED"
    print(f"{kind:9s}: lhs = {r.lhs:.6f}, rhs = {r.rhs:.6f} -> {verdict}")

# %%
# Along the whole interval the tent's deviation stays below the valid bound
# (x - a) + (b - a)/(1 + q). It exceeds the extended parabola on the upper part.
xs = np.linspace(0.0, 1.0, 11)
dev = np.array([abs(f(x) - I.value) for x in xs])
bad = np.array([disproved_bound(x, q, (0, 1)) for x in xs])
good = np.array([full_ostrowski_bound(x, q, (0, 1)) for x in xs])
for x, d, b, g in zip(xs, dev, bad, good):
    flag = "  <-- extended bound fails" if d > b else ""
    print(f"x={x:.1f}  deviation={d:.4f}  extended={b:.4f}  full={g:.4f}{flag}")
