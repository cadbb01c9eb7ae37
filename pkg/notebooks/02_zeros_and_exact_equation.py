# %% [markdown]
# # Zeros on the critical line and the exact equation
#
# Zeros are found as sign changes of Hardy's Z between Gram points. At each
# zero the argument S(t_n) is the half-sum of its one-sided limits, and the
# residual theta(t_n) + S(t_n) - (n - 3/2) pi is recorded.

# %%
from critline import find_zero, solve_asymptotic, verify_exact_equation, zeros_below

for n in range(1, 6):
    rec = find_zero(n)
    print(f"n={n}  t_n={rec.t_n:.12f}  theta={rec.theta_at:+.6f}  S={rec.s_at:+.6f}  "
          f"residual={rec.exact_residual:+.1e}")

# %% [markdown]
# Over the first 200 zeros the equation holds except where the principal
# argument wraps (|S| would exceed pi); those show residuals of exactly +-pi.

# %%
report = verify_exact_equation(1, 200)
print(report.passed, "/", report.checked)
for f in report.failures:
    print(f"  n={f.key}  residual={f.residual:+.6f}")

# %% [markdown]
# The asymptotic equation, solved independently of the scanner, lands on the same zeros.

# %%
for n in (1, 10, 100):
    print(n, solve_asymptotic(n) - find_zero(n).t_n)
print(len(zeros_below(100.0)), "zeros below t = 100")
