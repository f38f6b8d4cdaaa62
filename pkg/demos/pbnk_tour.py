"""
The polynomials p^B_{n,k}
=========================

Build the table of p^B_{n,k}, check that every route lands on the same
polynomials, and look at where the coefficients peak.
"""

import numpy as np

from cubarix.pbnk import pbnk_table, route_table
from cubarix.polynomial import pretty, reverse
from cubarix.realroots import check_interlacing_sequence, peak_position

# %% the first few levels
for n in range(4):
    print(f"n = {n}")
    for k, p in enumerate(pbnk_table(n)):
        print(f"  k = {k}: {pretty(p)}")

# %% four routes, one answer
for n in range(5):
    rec = route_table(n, "rec")
    print(n, all(route_table(n, r) == rec for r in ("def", "gf", "step")))

# %% each level is symmetric under k -> n+1-k
n = 6
table = pbnk_table(n)
print(all(table[n + 1 - k] == reverse(p, n + 1) for k, p in enumerate(table)))

# %% coefficients as an integer matrix (row k, column = power of x)
M = np.array([[int(p[i]) for i in range(n + 2)] for p in table], dtype=object)
print(M)
print("row sums:", M.sum(axis=1))
print("column sums give B_7:", M.sum(axis=0))

# %% peaks move right once k passes n/2 (for even n)
print([sorted(peak_position(p)) for p in table])

# %% and consecutive members interlace
print(check_interlacing_sequence(table).ok)
