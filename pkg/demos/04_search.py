# %% [markdown]
# # Sweeping exponent tuples
#
# Enumerate nondecreasing 5-tuples and keep the exceptional candidates:
# terminal, log Fano, and every complement coefficient forced below 1.
# The full k=5, max_exp=30 sweep takes a few seconds; pass a smaller bound
# on the command line to go faster.

# %%
import sys

from brieskorn import SearchConfig, search
from brieskorn.pipeline import SearchStats

max_exp = int(sys.argv[1]) if len(sys.argv) > 1 else 19
stats = SearchStats()
candidates = [r for r in search(SearchConfig(k=5, max_exp=max_exp), stats) if r.exceptional_candidate]
print(stats.to_dict())
for r in candidates:
    print(r.tuple, "minimal index", r.minimal_index, "" if r.coprimality else "(not coprime)")
