# %% [markdown]
# # W generators from the column determinant
#
# Build the generators at (m, n, l) = (2, 1, 2), compare them with the
# closed forms and confirm that the differential kills them.

# %%
from rectw import Instance, WAlgebra, closed_form_W1, closed_form_W2

wa = WAlgebra(Instance(2, 1, 2))
N = wa.inst.N
print(wa.inst, "N =", N)

# %%
# the quadratic generator with both indices even
print("W2_{1,1} =", wa.W(2, 1, 1))

# %%
agree = all(
    wa.W(1, i, j) == closed_form_W1(wa, i, j) and wa.W(2, i, j) == closed_form_W2(wa, i, j)
    for i in range(1, N + 1)
    for j in range(1, N + 1)
)
print("determinant == closed forms:", agree)

# %%
# d0 is an odd derivation; it vanishes on every generator but not on a bare current
print("d0 kills all W:", not any(wa.d0(u) for u in wa.all_W().values()))
print("d0(e_{2,3}[-1]) =", wa.d0(wa.e(2, 3)))
