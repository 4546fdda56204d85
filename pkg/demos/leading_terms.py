# %% [markdown]
# # Leading components in the nilpotent grading
#
# Grade of e_{A,B} is (column block) - (row block).  The claims of the
# appendix only control the lowest grade part of each product.

# %%
from rectw import AppendixSuite, Grading, Instance, WAlgebra

wa = WAlgebra(Instance(3, 0, 3))
grading = Grading(wa)
suite = AppendixSuite(wa)

# %%
chain = suite.t1_chain(2, 1, 3)
parts = grading.components(chain)
print("grades present:", sorted(parts))
print("leading part:", parts[min(parts)])

# %%
# the alpha coefficient of the last claim, for r = 1, 2
for r in (1, 2):
    lead = grading.leading_component(suite.t3_lhs(r, 1))
    print(f"r={r}:", lead)
    print("   printed  :", suite.t3_rhs(r, 1))
    print("   corrected:", AppendixSuite(wa, t3_alpha="corrected").t3_rhs(r, 1))
