# %% [markdown]
# # Sums as random-walk expectations
#
# Dividing a d-fold sum by 4^(n_1 + ... + n_d) gives the expected weight at the
# endpoint of d independent symmetric walks with 2 n_i steps each.

# %%
from abssum import estimate_expectation, make_config

configs = [
    ([3], "abs(k1)"),
    ([3, 3], "abs(k1^2-k2^2)"),
    ([2, 4], "abs(k1-k2)^3"),
    ([3, 3, 3], "abs((i^2-j^2)*(i^2-k^2)*(j^2-k^2))"),
]

# %%
for dims, weight in configs:
    res = estimate_expectation(make_config(dims, weight, samples=200_000, seed=42))
    z = (res.mean - float(res.exact)) / res.std_error if res.std_error else 0.0
    print(f"{weight:40s} dims={dims}  mc={res.mean:.4f} +- {res.std_error:.4f}  "
          f"exact={float(res.exact):.4f}  z={z:+.2f}")
