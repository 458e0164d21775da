# %% [markdown]
# # Sequence output and timing
#
# Centered double sums as b-file text, and a comparison of brute force with
# the closed form as n grows.

# %%
from abssum import bench, emit_sequence

print(emit_sequence("S21", 8, "bfile"))

# %%
for n in (25, 50, 100, 200):
    rec = bench("W1", n, repetitions=3)
    print(f"n={n:3d}  oracle {rec.oracle_seconds * 1e3:8.2f} ms  "
          f"closed {rec.closed_seconds * 1e6:7.1f} us  speedup {rec.speedup:8.0f}x")
