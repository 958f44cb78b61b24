# %% [markdown]
# Generator polynomials and LCD codes
#
# The generator is built from minimal polynomials over GF(2^(2m)).  Since
# every coset is closed under negation, each generator is self-reciprocal
# and the code is LCD.

# %%
from bch_atlas import (
    CodeLength, build_field, encode, generator_polynomial, is_self_reciprocal, min_weight_exhaustive,
)

L = CodeLength(4)  # n = 17
F = build_field(L)
print("modulus", F.modulus_polynomial)
for delta, b in [(2, 1), (3, 0), (5, 1)]:
    g = generator_polynomial(F, L, delta, b)
    print(delta, b, g, "| LCD:", is_self_reciprocal(g), "| d =", min_weight_exhaustive(g, L.n))

# %% [markdown]
# Systematic encoding puts the message in the top positions.

# %%
g = generator_polynomial(F, L, 2, 1)
print(encode([1, 0, 1, 1, 0, 0, 0, 0, 1], g, L.n))
