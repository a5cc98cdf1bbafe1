"""
Reading a decomposition matrix off the character degrees
=========================================================

The principal 2-blocks of several sporadic groups have dihedral or
semidihedral defect groups. Only the ordinary degrees go in.
"""

# %%
from tameblocks import load_bundled, match_templates, classify_dihedral_shortcut

dihedral = load_bundled("sporadic-dihedral")
for rec in dihedral.records:
    sols = match_templates(rec.block)
    print(f"{rec.block.group:8}", [s.tag for s in sols], "shortcut:", classify_dihedral_shortcut(rec.block).tag)

# %% [markdown]
# The Held group: five characters, one of height one. The solver also
# recovers the Brauer degrees.

# %%
he = next(r.block for r in dihedral.records if r.block.group == "He")
(sol,) = match_templates(he)
print(sol)
print(sol.matrix.to_text())

# %% [markdown]
# ### The Monster
# Degrees alone leave two classes. Both read the same block, with
# different Brauer degrees.

# %%
semi = load_bundled("sporadic-semidihedral")
monster = next(r.block for r in semi.records if r.block.group == "M")
for s in match_templates(monster):
    print(s.tag, s.brauer)
