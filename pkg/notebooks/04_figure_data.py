# %% [markdown]
# # Curve data behind the figures
#
# `export_curves` samples S_n(t) for a range of n and returns the zero
# heights drawn as vertical lines. Plotting needs matplotlib, which is not
# a dependency of the library.

# %%
from collections import defaultdict

from critline import export_curves, s_arg_at_zero, find_zero

samples, lines = export_curves(0, 14, 10.0, 65.0, 0.05)
curves = defaultdict(list)
for s in samples:
    curves[s.n].append((s.t, s.s_n_value))
print(len(samples), "samples;", len(lines), "zero lines")

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(11, 5))
    for n, pts in curves.items():
        ts, vs = zip(*pts)
        ax.plot(ts, vs, lw=0.8)
    for _, t in lines:
        ax.axvline(t, color="k", lw=0.4)
    ax.set_xlabel("t")
    ax.set_ylabel("S_n(t)")
    fig.savefig("fig1_sn_curves.png", dpi=120)

# %% [markdown]
# Convergence of the one-sided half-sum around the first zero.

# %%
arg = s_arg_at_zero(find_zero(1).t_n, (1e-1, 1e-2, 1e-3, 1e-4, 1e-5))
for eps, left, right in arg.ladder:
    print(f"eps={eps:.0e}  half-sum={(left + right) / 2:+.12f}  half-diff={(right - left) / 2:+.9f}")
