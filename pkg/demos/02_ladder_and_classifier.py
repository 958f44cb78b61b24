# %% [markdown]
# Closed forms for the largest leaders
#
# For each supported m the five largest leaders have closed forms.  We put
# them next to a brute-force scan.

# %%
from bch_atlas import CodeLength, classify_leader, delta_ladder, envelope, top_leaders

for m in (10, 11, 12, 13, 14):
    L = CodeLength(m)
    closed = delta_ladder(L).deltas
    brute = tuple(r.leader for r in top_leaders(L, 5))
    print(m, L.family.value, closed, "ok" if closed == brute else f"brute {brute}")

# %% [markdown]
# The form d4 - 38 would make the fifth value for m = 12 equal 653.  It
# shares a coset with 411, so it cannot be a leader.

# %%
from bch_atlas import coset_of

L = CodeLength(12)
print(delta_ladder(L, uncorrected=True).deltas[4], min(coset_of(653, L).elements))

# %% [markdown]
# Below the envelope the classifier needs no orbit at all.

# %%
L = CodeLength(13)
print("envelope", envelope(L))
print([classify_leader(x, L).value for x in (1, 125, 127, 129, 131)])
