# %% [markdown]
# # Odd powers of |k^2 - l^2| through rational-function recurrences
#
# The gamma_{k,j}(n) are built symbolically; omega_k(n) then gives
# W_{2k+1}(n) = omega_k(n) C(2n, n)^2 for every n at once.

# %%
from math import comb

from abssum import centered_double_sum, gamma_funcs, omega, p_poly
from abssum.exact import format_poly

# %% [markdown]
# The P polynomials come from interpolating brute-force single sums.

# %%
for beta in range(6):
    print(f"P_{beta}(n) =", p_poly(beta))

# %% [markdown]
# gamma_{k,j}(n): the coefficient of m^(2j) in g_k(n, m).

# %%
for k in range(3):
    for j in range(k + 1):
        num, den = gamma_funcs(k)[j].integer_parts()
        print(f"gamma_{k},{j} = ({format_poly(num)}) / ({format_poly(den)})")

# %% [markdown]
# omega_k(n) with integer coefficients, and a spot check against the oracle.

# %%
for k in range(5):
    num, den = omega(k).omega.integer_parts()
    print(f"omega_{k} = ({format_poly(num)}) / ({format_poly(den)})")

for k in range(5):
    n = 7
    closed = omega(k)(n) * comb(2 * n, n) ** 2
    print(k, closed == centered_double_sum(2, 2 * k + 1, n))
