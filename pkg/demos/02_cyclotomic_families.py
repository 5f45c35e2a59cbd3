# %% [markdown]
# # Coset-leader functions on Z_(2^m - 1)

# %%
from zdb import build_coset_table, build_paired_table, construct_coset_zdb, construct_pair_coset_zdb, verify_zdb

# %%
t = build_coset_table(3)
print("leaders:", t.leaders)
print("cosets:", t.cosets())

# %% [markdown]
# Each x maps to the leader of its doubling orbit. For prime m every nonzero
# orbit has exactly m elements.

# %%
for m in (2, 3, 5, 7, 11, 13):
    p = verify_zdb(construct_coset_zdb(m))
    print(f"m={m:2d}", p.triple, "predicted", (2**m - 1, (2**m + m - 2) // m, m - 1))

# %% [markdown]
# Pairing each orbit B with -B doubles the class size and needs m odd.

# %%
print(build_paired_table(5).cosets()[:3])
for m in (3, 5, 7, 11):
    p = verify_zdb(construct_pair_coset_zdb(m))
    print(f"m={m:2d}", p.triple, "predicted", (2**m - 1, (2**(m - 1) + m - 1) // m, 2 * m - 1))
