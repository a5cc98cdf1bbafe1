"""Tame 2-blocks: decomposition-matrix catalog, degree classifier, index-2
Clifford calculus, partition cores and exact polynomial checks."""
from .blocks import FAMILIES, BlockData, TameBlockError
from .catalog import (
    BlockCounts,
    DecompTemplate,
    MoritaClass,
    classes,
    counts,
    family_block,
    get_class,
    is_realizable,
    template,
)
from .classifier import TemplateSolution, classify_dihedral_shortcut, infer_heights, match_templates
from .clifford import FusionPattern, SearchCapExceeded, duplicate_rows, induce_candidates, restrict_candidates
from .datasets import Dataset, load_blockdata, load_bundled, load_dataset, run_batch
from .matrices import DecompMatrix, Row
from .partitions import Partition, alt_dihedral_block_exists, ell_core, is_triangular, sym_blocks_of_weight
from .polyq import IntPoly, cyclotomic, degree_coincides, is_cyclotomic, parse_poly, positive_integer_roots, root_bound, v2

__version__ = "0.1.0"
