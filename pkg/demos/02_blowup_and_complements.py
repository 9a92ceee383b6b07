# %% [markdown]
# # Weighted blow-up and minimal complements
#
# The blow-up with weights proportional to 1/a_i gives P^{k-2} with boundary
# sum (a_i - 1)/a_i H_i. We look for the smallest n such that
# floor((n+1)c)/n is an lc complement.

# %%
from brieskorn import (
    blowup_weights,
    complement_coefficient_bounds,
    diff_boundary,
    exceptional_discrepancy,
    format_rational,
    is_log_fano,
    minimal_complement_index,
    n_complement,
    NoComplement,
)

a = (2, 3, 11, 17, 19)
print("weights", blowup_weights(a).weights)
print("discrepancy of E:", exceptional_discrepancy(a))

pair = diff_boundary(a)
print("boundary:", " + ".join(f"{format_rational(c)} {h}" for c, h in zip(pair.coefficients, pair.labels)))
print("log Fano:", is_log_fano(pair))

# %%
bounds = complement_coefficient_bounds(pair)
print("d_max =", bounds.d_max, " h_max =", [format_rational(h) for h in bounds.h_max], " pass:", bounds.passed)

# %% [markdown]
# Why n = 21 fails and n = 22 works.

# %%
for n in (21, 22):
    try:
        div = n_complement(pair, n)
        print(n, [int(c * n) for c in div.rounded_coefficients], "degree", div.total_degree, div.lc.status.value)
    except NoComplement as exc:
        print(n, "fails:", exc.reason)

# %%
for b in [(2, 3, 11, 17, 19), (2, 3, 11, 17, 23), (2, 3, 11, 17, 25),
          (2, 3, 11, 17, 29), (2, 5, 7, 9, 11), (2, 5, 7, 9, 13)]:
    n, div = minimal_complement_index(diff_boundary(b))
    print(b, "minimal index", n, div.lc.status.value)
