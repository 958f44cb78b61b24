# %% [markdown]
# Cyclotomic cosets modulo n = 2^m + 1
#
# Multiplying by 2 permutes the residues mod n.  Each orbit is a coset and
# its smallest element is the leader.

# %%
from bch_atlas import CodeLength, coset_of, enumerate_leaders, top_leaders

L = CodeLength(3)  # n = 9
for x in (0, 1, 3):
    c = coset_of(x, L)
    print(f"C_{x} = {set(c.elements)}  (size {c.size})")

# %% [markdown]
# Every odd residue below the first gap is a leader.  For m = 11 the first
# non-leaders appear just around 2^(t+1) = 64.

# %%
L = CodeLength(11)
print([r.leader for r in enumerate_leaders(L, 55, 75)])

# %% [markdown]
# The top of the range is much sparser.

# %%
for r in top_leaders(L, 6):
    print(r.leader, r.size)
