# %% [markdown]
# # n-th products and OPE coefficients
#
# The engine keeps alpha and c symbolic, so every product below is an
# exact polynomial identity.

# %%
from rectw import Instance, OpeSuite, WAlgebra, nth_product

wa = WAlgebra(Instance(3, 0, 2))

# %%
e11 = wa.e(1, 1)
print("e11_(1) e11 =", nth_product(e11, 1, e11))

# %%
W1, W2 = wa.W(1, 1, 2), wa.W(2, 2, 1)
for n in range(3):
    print(f"(W1_12)_({n}) W2_21 =", nth_product(W1, n, W2))

# %%
res = OpeSuite(wa).run()
print(f"{len(res.checks)} OPE checks, all pass: {res.passed}")
