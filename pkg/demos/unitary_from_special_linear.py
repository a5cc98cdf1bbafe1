"""
Index two: from SU2(q) to GU2(q), and from Sym(9) to Alt(9)
============================================================
"""

# %%
from tameblocks import family_block, template
from tameblocks.clifford import duplicate_rows, induce_candidates, restrict_candidates
from tameblocks.matrices import DecompMatrix, Row

# SU2(q) times a cyclic 2-group: every row of the SL2 matrix, repeated a/2 times
q = 7
a = (q + 1) & -(q + 1)
below = duplicate_rows(family_block("sl2", q).matrix, a // 2)
print(below.to_text())

# %%
# one candidate with k = a^2/2 + 2a and two Brauer characters
cands = induce_candidates(below, a * a // 2 + 2 * a, 2)
for pattern, m in cands:
    print(pattern.column_orbits, pattern.split_rows, "split,", pattern.fused_pairs, "fused")
    print(m.to_text())
print("same as the GU2 table:", cands[0][1].same_as(family_block("gu2", q).matrix, heights=False))

# %% [markdown]
# ### Going down
# The weight-3 block of Sym(9) with core (2,1): ten characters in
# conjugate pairs.

# %%
sym9 = DecompMatrix((Row(8, (1, 0, 0), 2), Row(56, (1, 1, 0), 2), Row(168, (1, 0, 1), 2),
                     Row(216, (1, 1, 1), 2), Row(48, (0, 1, 0), 2)), (8, 48, 160))
((_, alt9),) = restrict_candidates(sym9, 5, 3)
print(alt9.to_text())
print(alt9.same_as(template("dihedral", "3B", 3).instantiate((8, 48, 160)), heights=False))
