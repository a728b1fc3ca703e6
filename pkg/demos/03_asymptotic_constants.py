"""
Asymptotic constants
====================

``S_ell(n) * 3**(-ell n / 3)`` approaches a constant that depends on
``n mod 3``.  The constants come from the three poles nearest the origin
of prod_k 1/(1 - k**ell q**k).
"""

import mpmath

from pnorm import ConstantRequest, constant_table, evaluate_constant

# %%
# A table to three decimals; column k holds the class n = k mod 3
# (with 3 standing for multiples of 3).
table = constant_table(10, 6)
for ell in range(1, 11):
    print(ell, *(f"{float(table[ell, k]):12.3f}" for k in (1, 2, 3)))

# %%
# Diagnostics for one constant at 30 digits: truncation index, rigorous tail
# bound, and the change seen when halving the truncation.
ev = evaluate_constant(ConstantRequest(1, 2, 28, prec_bits=192))
print(mpmath.nstr(ev.value, 28))
print("K =", ev.K, "tail bound =", ev.tail_bound, "stability =", ev.stability)
