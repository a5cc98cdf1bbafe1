"""
Which Alt(n) have a 2-block with dihedral defect group of order 8?
==================================================================

Blocks of Sym(n) are labelled by 2-cores, and 2-cores are the staircase
partitions. Weight 3 is what we need.
"""

# %%
from tameblocks.partitions import (Partition, alt_dihedral_block_exists, ell_core,
                                   partitions_with_core, character_degree, sym_blocks_of_weight)

print(ell_core(Partition.parse("8,1"), 2))

# %%
hits = [n for n in range(5, 61) if alt_dihedral_block_exists(n)]
print(hits)
print([n - 6 for n in hits])    # 0, then the triangular numbers

# %%
for n in (9, 12):
    for core in sym_blocks_of_weight(n, 3):
        block = partitions_with_core(core, 2, 3)
        print(n, core, sorted(character_degree(lam) for lam in block))
