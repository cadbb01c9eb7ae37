# %% [markdown]
# # Theta, its Lambert-W inverse and Gram points
#
# `theta` is evaluated from the complex log-Gamma; `theta_approx` is the
# Stirling closed form. Inverting the closed form with Lambert W gives an
# approximation to every Gram point that is good to a few thousandths.

# %%
import math

from critline import classify_gram, gram_approx, gram_exact, theta, theta_approx, theta_approx_inv

for t in (20.0, 100.0, 1000.0):
    print(f"t={t:7.1f}  theta={theta(t):14.9f}  approx={theta_approx(t):14.9f}  "
          f"gap={theta(t) - theta_approx(t):.3e}")

# %% [markdown]
# The closed-form inverse undoes `theta_approx` exactly.

# %%
print(theta_approx_inv(theta_approx(1234.5)))

# %% [markdown]
# Gram points: exact root of theta(t) = (n-1) pi versus the closed form.
# The gap shrinks monotonically; the first two are 0.00223698 and 0.00137812.

# %%
for n in (1, 2, 3, 10, 100):
    rec = classify_gram(n)
    print(f"n={n:4d}  exact={rec.exact:.10f}  approx={rec.approx:.10f}  delta={rec.delta:.8f}")

# %% [markdown]
# Bad Gram points (zeta negative there) up to n = 200.

# %%
print([n for n in range(1, 201) if classify_gram(n).is_bad])
print(abs(theta(gram_exact(137)) - 136 * math.pi))
