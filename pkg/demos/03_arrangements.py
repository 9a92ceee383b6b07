# %% [markdown]
# # Generic hyperplane arrangements: lc status and threshold

# %%
from fractions import Fraction as F

from brieskorn import Arrangement, lc_status, lct

examples = [
    Arrangement(3, (F(11, 22), F(15, 22), F(20, 22), F(21, 22), F(21, 22))),
    Arrangement(3, (1, 1, 1, 1)),
    Arrangement(1, (F(3, 2),)),
    Arrangement(3, (F(1, 2), F(2, 3), F(10, 11), F(16, 17), F(18, 19))),
]
for arr in examples:
    res = lc_status(arr)
    print([str(c) for c in arr.coefficients], res.status.value, "worst flat", res.worst_flat, "lct", lct(arr))

# %% [markdown]
# Scaling by t divides the threshold by t.

# %%
arr = examples[3]
for t in (F(1, 2), F(2), F(19, 18)):
    print(t, lct(arr.scaled(t)), lc_status(arr.scaled(t)).status.value)
