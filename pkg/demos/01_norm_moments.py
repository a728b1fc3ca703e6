"""
Moments of the partition norm
=============================

The norm of a partition is the product of its parts.  Averaging its powers
over all partitions of ``n`` gives the moments ``E_n(N^ell)``.
"""

from pnorm import Partition, enumerate_partitions, moment, norm, norm_power_sum

# %%
# The seven partitions of 5 and their norms.
for lam in enumerate_partitions(5):
    print(f"{str(lam):>10}  N = {norm(lam)}")

# %%
# Summing norms directly agrees with the coefficient of q^5 in
# prod_k 1/(1 - k q^k), which is what ``norm_power_sum`` expands.
print("brute force:", sum(norm(lam) for lam in enumerate_partitions(5)))
print("Euler product:", norm_power_sum(1, 5))

# %%
# Moments are exact fractions.
for n in range(1, 9):
    print(n, moment(1, n), moment(2, n))

# %%
# The sums grow fast: S_1(300) already has dozens of digits.
print(len(str(norm_power_sum(1, 300))), "digits")
print(norm(Partition([4, 3, 1, 1])))
