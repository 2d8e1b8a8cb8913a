"""
Functions that reach the bounds
===============================

On the lattice, |t - q^m| gives equality. Off the lattice, a self-similar
zig-zag f_x reaches (x - a) + (b - a)/(1 + q) exactly, but it is not
q-differentiable at 0. The family f_{x,eps} repairs that and misses the
bound by exactly eps.
"""

# %%
from qostrowski import (
    certify_unit_norm,
    check_ostrowski,
    make_absdev,
    make_fx_eps,
    make_gx,
    make_selfsim_fx,
    q_derivative,
    q_derivative_at_a,
    rescale_abscissa,
)

q, x = 0.6, 0.8

# %%
# Lattice points: equality for every m.
for m in range(6):
    r = check_ostrowski(make_absdev(m, q), q**m, q, (0, 1), 1.0, "LATTICE", m=m)
    print(f"m={m}: lhs={r.lhs:.12f} rhs={r.rhs:.12f}")

# %%
# The self-similar witness. Its values on the two interleaved lattices
# q^n and x q^n are -q^n and +x q^n, so D_q f(t) = f(t)/t swings between -1 and +1.
fx = make_selfsim_fx(x, q)
r = check_ostrowski(fx, x, q, (0, 1), 1.0, "FULL")
print(f"f_x at x={x}: lhs={r.lhs:.12f} bound={r.rhs:.12f}")
print("certified |D_q f_x| <= 1:", certify_unit_norm(fx))

probe = q_derivative_at_a(fx, q, (0, 1))
print(f"limit probe at 0: converged={probe.converged}, spread={probe.spread:.3f}")

# %%
# Smaller x reuse the same function: scale x into (q, 1) first.
for xs in (0.5, 0.288, 0.05):
    n, xt = rescale_abscissa(xs, q)
    r = check_ostrowski(make_selfsim_fx(xt, q), xs, q, (0, 1), 1.0, "FULL")
    print(f"x={xs}: n={n}, x~={xt:.4f}, margin={r.margin:.2e}")

# %%
# The q-differentiable family: below q^(m+1) it is just -t.
for eps in (0.2, 0.05, 0.01):
    fe = make_fx_eps(x, q, eps)
    r = check_ostrowski(fe, x, q, (0, 1), 1.0, "FULL")
    t = x * q**fe.m
    print(
        f"eps={eps:<5g} m={fe.m}  margin={r.margin:.12f}  "
        f"D_q f(x q^m)={q_derivative(fe, t, q):+.6f}  "
        f"D_q f(0+)={q_derivative_at_a(fe, q, (0, 1)).limit:+.6f}  "
        f"certified={certify_unit_norm(fe)}"
    )

# %%
# Dropping continuity at 0 breaks everything: g_x keeps |D_q g| <= 1 but
# its upper nodes are lifted by C, so the deviation grows with C.
for C in (1.0, 10.0, 100.0):
    r = check_ostrowski(make_gx(x, q, C), x, q, (0, 1), 1.0, "FULL")
    print(f"C={C:>5g}: deviation={r.lhs:9.4f}  bound={r.rhs:.4f}  holds={r.satisfied}")
