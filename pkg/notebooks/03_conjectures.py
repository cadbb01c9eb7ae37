# %% [markdown]
# # The closed-form argument and the membership quantity
#
# `verify_arg_conjecture` compares S(t_n) against theta_sign(t_n) * S_n(t_n)
# for a chosen reading of the closed form; every row carries all three
# readings for comparison.

# %%
from collections import Counter

import numpy as np

from critline import Variant, verify_arg_conjecture, verify_membership

for variant in Variant:
    rep = verify_arg_conjecture(1, 140, variant)
    print(f"{variant.value:14s} {rep.passed}/{rep.checked}  failing n: {[f.key for f in rep.failures][:8]}")

# %% [markdown]
# frac(theta/pi) + S/pi, sampled on a grid. Since Z is real this is always
# an integer; the report shows how often each of -1, 0, 1 occurs.

# %%
rep = verify_membership(np.arange(10.0, 100.0, 0.1), skip_zeros=True)
print(rep.distribution["nearest"], "max distance", rep.max_abs_residual)
