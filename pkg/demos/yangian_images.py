# %% [markdown]
# # Yangian images
#
# Check the relations of the affine Yangian on the image of Phi at
# (3, 0, 2) up to weight 1, then the same with the printed images.

# %%
from rectw import Instance, WAlgebra, phi_check

wa = WAlgebra(Instance(3, 0, 2), c_zero=True)


def failures(**readings):
    yc = phi_check(wa, 1, **readings)
    res = yc.verify_all(yc.prop(), "phi")
    return [c.id for c in res.failures()]


# %%
print("adopted images:", failures() or "all relations hold")

# %%
for readings in ({"x01": "printed"}, {"xp01": "printed"}):
    bad = failures(**readings)
    print(readings, f"{len(bad)} failing, e.g. {bad[:3]}")
