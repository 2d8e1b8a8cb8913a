"""
The q-midpoint and the mean value inequality
============================================

The lattice constant (1 + 2q^(2m+1))/(1 + q) - q^m is smallest at
m = floor(log_q 1/2): the lattice point closest to the midpoint from above.
Afterwards, the classical mean value theorem is compared with its q-analogue.
"""

# %%
import math

import numpy as np

from qostrowski import (
    check_mvt,
    classical_ostrowski_bound,
    find_lagrange_witness,
    lattice_ostrowski_bound,
    make_step_counterexample,
    midpoint_index,
    naive_mvt_violation_search,
)

for q in (0.1, 0.3, 0.5, 0.7, 0.9, 0.99):
    m = midpoint_index(q)
    consts = np.array([lattice_ostrowski_bound(k, q, (0, 1)) for k in range(200)])
    # at q = 1/2 the constants for m = 0 and m = 1 tie at 1/3
    ties = np.flatnonzero(consts <= consts.min() + 1e-15).tolist()
    print(f"q={q:<5} m*={m:<3d} point={q**m:.4f} constant={consts[m]:.6f} minimisers={ties}")

# %%
# As q -> 1 the constant approaches the classical midpoint value 1/4.
for q in (0.9, 0.99, 0.999):
    m = midpoint_index(q)
    print(f"q={q}: {lattice_ostrowski_bound(m, q, (0, 1)):.6f}  vs  {classical_ostrowski_bound(0.5, (0, 1))}")

# %%
# A step function has sup |D_q f| = 1/(1-q) on [0, 2], yet jumps by 1
# across an arbitrarily short gap. So the ordinary MVT fails for pairs
# straddling t = 1 with y in (q, 1).
q = 0.5
step = make_step_counterexample()
pair = naive_mvt_violation_search(step, q, (0, 2), 1 / (1 - q), grid=1000)
print(f"naive MVT violated at x={pair.x}, y={pair.y}: excess {pair.excess:.4f}")

# %%
# The q-version only compares x with its lattice images a + q^n (x - a),
# and there it holds.
for n in range(4):
    r = check_mvt(step, 1.0, n, q, (0, 2), 1 / (1 - q))
    print(f"n={n}: |f(x)-f(y)|={r.lhs:.3f} <= {r.rhs:.3f}: {r.satisfied}")

# %%
# For continuous f a Lagrange point exists on [y, x].
c = find_lagrange_witness(lambda t: math.sin(3 * t), 1.0, 3, 0.7, (0, 1))
print(f"Lagrange point for sin(3t), x=1, n=3, q=0.7: c={c:.10f}")
