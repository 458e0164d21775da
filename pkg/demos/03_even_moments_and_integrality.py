# %% [markdown]
# # Even powers and an integrality pattern
#
# For even exponents the absolute value disappears and W_{2r}(n) splits into
# products of single sums. The scaled value 2^(r - 4n) W_{2r}(n) appears to be
# an integer polynomial in n; here we test that for r <= 6.

# %%
from abssum import centered_double_sum, even_integrality_check
from abssum import closed_forms as cf

# %%
for r in range(4):
    s_route, q_route = cf.w_even_routes(r, 5)
    print(f"r={r}: S-products {s_route}, Q-products {q_route}, "
          f"brute {centered_double_sum(2, 2 * r, 5)}")

# %%
report = even_integrality_check(6)
print(report.to_text())
