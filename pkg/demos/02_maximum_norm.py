"""
The largest norm
================

Among partitions of ``n`` the norm is maximised by using as many 3s as
possible.  A leftover 1 is absorbed by turning a 3 into a 4 and a leftover
2 stays as a part.
"""

from pnorm import brute_max_norm, max_norm

# %%
for n in range(0, 16):
    res = max_norm(n)
    print(f"n={n:2d}  M={res.value:4d}  witness={res.witness}")

# %%
# Brute force agrees.  For n = 1 mod 3 there are two maximisers (4+3+3 and
# 3+3+2+2 at n = 10); enumeration order puts the one with a 4 first.
for n in (10, 13, 20):
    print(n, brute_max_norm(n), max_norm(n).witness)
