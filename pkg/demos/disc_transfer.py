"""One-variable transfer: everything about the averaged upper bound
reduces, after substituting z = 2^{-s}, to the explicit operator of
composition with z/(2 - z) on the unit disc.

Run:  python3 demos/disc_transfer.py
"""

import numpy as np

from h2comp.disc import (
    PowerSeries,
    compose_truncated,
    littlewood_check,
    mobius_comp_norm_sq,
    psi_matrix,
    psi_z2z,
    shapiro_bound_check,
)

# the operator matrix and its two identities
N = 40
M = psi_matrix(N)
col1 = float(np.sum(M[:, 1] ** 2))
print(f"matrix of composition with z/(2-z), truncated at degree {N}:")
print(f"  first-column square sum = {col1:.12f}  (exactly (1 - 4^-N)/3)")
print(f"  column mass sums: {[round(float(M[:, k].sum()), 12) for k in range(1, 6)]}  (each -> 1)")
print()

# the halved-norm bound and its near-extremal witness
rng = np.random.default_rng(5)
f = PowerSeries(rng.standard_normal(N + 1) + 1j * rng.standard_normal(N + 1))
lhs = float(np.sum(np.abs(M @ f.coeffs) ** 2))
cap = 0.5 * (abs(f.coeffs[0]) ** 2 + f.norm_sq())
print(f"random series: ||C f||^2 = {lhs:.6f} <= (|f(0)|^2 + ||f||^2)/2 = {cap:.6f}")

ne = 2000
g = PowerSeries(0.99 ** np.arange(ne + 1, dtype=float))
lhs = float(np.sum(np.abs(psi_matrix(ne) @ g.coeffs) ** 2))
cap = 0.5 * (abs(g.coeffs[0]) ** 2 + g.norm_sq())
print(f"geometric series, ratio 0.99: saturation {lhs / cap:.4%} of the bound")
print()

# plain subordination and the level-set upgrade
chk = littlewood_check(PowerSeries([0.0, 0.0, 1.0]), PowerSeries([1.0, 2.0, 3.0]), N=8)
print(f"composing with z^2 preserves the norm: {chk.lhs:.6f} = {chk.rhs:.6f}")

sh = shapiro_bound_check(psi_z2z(48), 0.6, PowerSeries([1.0, 1.0, 0.5]))
print(f"level-set upgrade at delta = 0.6: constant {sh.c_delta:.6f}, "
      f"level measure {sh.level_measure:.4f}, bound holds: {sh.ok}")
print()

# the sharp Mobius norms
print("disc automorphisms (0 -> w) have exact composition norms:")
for w in (0.0, 1.0 / 3.0, 0.5, 0.9):
    print(f"  |w| = {w:.3f}: ||C||^2 = {mobius_comp_norm_sq(w):.6f}")
print()

# truncated composition is an honest Taylor expansion
comp = compose_truncated(PowerSeries([0.0, 1.0]), psi_z2z(10), 10)
print("z composed with z/(2-z) expands geometrically:")
print("  coefficients:", [round(float(c.real), 6) for c in comp.coeffs[:6]], "...")
