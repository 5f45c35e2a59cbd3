# %% [markdown]
# # ZDB functions on a product of finite fields
#
# Build GF(7^2) x GF(13^2), split every support class into cosets of the
# order-e subgroup, and check the result exhaustively.

# %%
import numpy as np

from zdb import GroupSpec, build_field, construct_product, coset_decompose, verify_pdf, verify_zdb
from zdb.group import support_mask

# %% [markdown]
# The fields are built deterministically: lowest irreducible modulus, smallest
# primitive element.

# %%
for q in (49, 169):
    f = build_field(q)
    print(f, "modulus (low->high):", f.modulus, "generator:", f.generator)

# %% [markdown]
# gcd(48, 168) = 24, so every divisor e > 1 of 24 is admissible.

# %%
print(np.gcd(48, 168))

# %%
f = construct_product([49, 169], 24)
params = verify_zdb(f)
print(params.triple, "tau has", len(params.tau), "entries:", params.tau[:4], "...")
print("partition-side check:", verify_pdf(f, params))

# %% [markdown]
# A small case to look at by hand: GF(4) x GF(7) with e = 3.

# %%
g = GroupSpec.product([4, 7])
for coset in coset_decompose(g, support_mask({1, 2}), 3):
    print([g.decode(x) for x in coset])

# %%
for e in (2, 3, 4, 6, 8, 12, 24):
    print(e, verify_zdb(construct_product([49, 169], e)).triple)
