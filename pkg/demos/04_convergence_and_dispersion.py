"""
Convergence and non-concentration
=================================

Exact power sums approach their asymptotic form, slowly for ``ell = 1``
because a second singularity sits close to the dominant ones.  Meanwhile
the ratio E(N^2)/E(N)^2 grows without bound, so no rescaling of the norm
has a non-trivial limit law.
"""

import mpmath

from pnorm import convergence_table, dispersion, hardy_ramanujan_p, partition_count, predicted_moment

# %%
for ell in (1, 2, 3):
    for rec in convergence_table(ell, 100, 700, 150, 8):
        print(f"ell={ell} n={rec.n:4d}  rel_dev={mpmath.nstr(rec.rel_dev, 3)}")

# %%
# Prediction of the moment itself, with exact p(n) and with the leading
# p(n) asymptotic.
n = 600
print(predicted_moment(1, n, 10), predicted_moment(1, n, 10, use_hardy_ramanujan=True))
print("p(n) estimate error:", mpmath.nstr(hardy_ramanujan_p(n) / partition_count(n) - 1, 4))

# %%
for n in (10, 50, 100, 200, 300):
    var, cv2 = dispersion(n)
    print(f"n={n:3d}  E(N^2)/E(N)^2 = {float(cv2):.4g}")
