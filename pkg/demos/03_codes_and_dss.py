# %% [markdown]
# # Optimal constant composition codes and difference systems of sets

# %%
from zdb import build_ccc, build_dss, construct_coset_zdb, construct_pair_coset_zdb, verify_ccc, verify_zdb

# %%
f = construct_coset_zdb(3)
p = verify_zdb(f)
code = build_ccc(f, p)
print(code.summary(), "bound:", code.bound, "optimal:", code.optimal)
print(code.codewords)
print("brute-force check:", bool(verify_ccc(code, brute_force=True)))

# %% [markdown]
# The preimage sets form a perfect DSS with rho = n - lambda. Optimality is
# decided by comparing r with the lower bound directly; the condition
# ell * lambda <= n is only reported alongside.

# %%
for make, ms in ((construct_coset_zdb, (3, 5, 7, 11, 13)), (construct_pair_coset_zdb, (3, 5, 7, 11, 13))):
    for m in ms:
        g = make(m)
        dss = build_dss(g, verify_zdb(g))
        print(make.__name__, m, dss.summary() if dss.n < 100 else (dss.n, dss.rho),
              "perfect", dss.perfect, "r", dss.r, "bound", dss.bound,
              "optimal", dss.optimal, "ell*lambda<=n", dss.lemma_condition)
