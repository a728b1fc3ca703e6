"""
Other multiplicative statistics
===============================

Any statistic of the form prod_j w(lambda_j) has a generating function
prod_k 1/(1 - w(k) q^k), so the same expansion computes its power sums.
"""

from math import gcd

from pnorm import WeightSpec, enumerate_partitions, expand_euler_product

# %%
# 2**(number of parts): w(k) = 2 for every k.
twos = expand_euler_product(WeightSpec.custom([2] * 20), 20)
print(twos.coeffs[:10])

# %%
# Euler's totient of each part, multiplied together.
phi = [sum(1 for m in range(1, k + 1) if gcd(m, k) == 1) for k in range(1, 21)]
series = expand_euler_product(WeightSpec.custom(phi), 20)

# %%
# Check against enumeration at n = 12.
direct = 0
for lam in enumerate_partitions(12):
    term = 1
    for part in lam:
        term *= phi[part - 1]
    direct += term
print(series[12], direct)
