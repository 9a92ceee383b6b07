# %% [markdown]
# # Terminality of x1^a1 + ... + xk^ak = 0
#
# Scan the discrepancy lower bound over one period of d and compare with an
# exhaustive search over a box of lattice vectors.

# %%
from brieskorn import (
    brute_force_min_discrepancy,
    discrepancy,
    discrepancy_lower_bound,
    is_terminal,
    lcm_list,
)

a = (2, 3, 11, 17, 19)
verdict = is_terminal(a)
print(verdict.status, "min h =", verdict.min_scanned_h, "over d <=", verdict.scan_bound_used)

# %% [markdown]
# The paper scans up to the product of the exponents; here that equals the lcm.

# %%
print(is_terminal(a, "product").status)

# %%
# the first few values of the bound
print([discrepancy_lower_bound(d, a) for d in range(1, 13)])

# %% [markdown]
# Non-terminal tuples come with an explicit interior witness.

# %%
for b in [(2, 2, 2), (2, 3, 5), (2, 3, 7, 41)]:
    v = is_terminal(b)
    print(b, v.status, "witness", v.witness.coordinates, "discrepancy", discrepancy(v.witness, b))

# %% [markdown]
# Cross-check with the brute-force oracle on a box of side lcm(a).

# %%
for b in [(2, 3, 5), (3, 3, 4), (2, 4, 5), (2, 3, 7)]:
    box = lcm_list(b)
    value, argmin = brute_force_min_discrepancy(b, box)
    print(b, "oracle min", value, "at", argmin.coordinates, "| scan says", is_terminal(b).status)
