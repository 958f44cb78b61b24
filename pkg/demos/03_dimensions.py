# %% [markdown]
# Dimensions and Bose distances
#
# Inside each closed-form row, the dimension is affine in delta or constant.
# Here the two computations run side by side.

# %%
from bch_atlas import CodeLength, dimension_brute, dimension_closed
from bch_atlas.params import dimension_rows

L = CodeLength(11)
for row in dimension_rows(L):
    d = row.lo | 1
    c, o = dimension_closed(L, d, 1), dimension_brute(L, d, 1)
    print(f"{row.label:10s} [{row.lo}, {row.hi}]  delta={d}: k={c.dimension} (brute {o.dimension}), bose={c.bose}")

# %% [markdown]
# Adding C_0 drops the dimension by one and doubles the distance bound.

# %%
for b in (1, 0):
    s = dimension_brute(L, 67, b)
    print(b, s.dimension, s.bose, s.distance_bound)
