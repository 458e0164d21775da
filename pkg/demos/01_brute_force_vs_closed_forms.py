# %% [markdown]
# # Brute force against closed forms
#
# Every sum in `abssum.oracle` is evaluated term by term with exact integers.
# The closed forms in `abssum.closed_forms` should reproduce them exactly.

# %%
from math import comb

from abssum import centered_double_sum, double_diff_sum, single_sum
from abssum import closed_forms as cf

# %% [markdown]
# The motivating sum: binomial weights times |k^2 - l^2|, compared with
# 2 n^2 C(2n, n)^2.

# %%
for n in range(8):
    brute = centered_double_sum(2, 1, n)
    closed = 2 * n * n * comb(2 * n, n) ** 2
    print(f"n={n:2d}  {brute:>16d}  {closed:>16d}  {'ok' if brute == closed else 'MISMATCH'}")

# %% [markdown]
# Double sums with weight |k - l|^beta collapse to single sums of size m + n.

# %%
for beta in range(4):
    row = [double_diff_sum(beta, 2, n) == single_sum(beta, 2 + n) for n in range(6)]
    print(f"beta={beta}: {row}")

# %% [markdown]
# The alpha = 1..8 family with beta = 1. Odd alpha involves C(4n - c, 2n - c);
# alpha = 7 needs a special value at n = 1.

# %%
for alpha in range(1, 9):
    vals = [cf.s_alpha1_closed(alpha, n) for n in range(1, 6)]
    ok = all(v == centered_double_sum(alpha, 1, n) for n, v in enumerate(vals, start=1))
    print(f"alpha={alpha}: {vals}  {'ok' if ok else 'MISMATCH'}")

# %% [markdown]
# The three-dimensional Vandermonde weight.

# %%
from abssum import triple_vandermonde_sum

for n in range(6):
    print(n, triple_vandermonde_sum(n), cf.triple_closed(n))
