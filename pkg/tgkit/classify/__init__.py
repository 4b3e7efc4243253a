# classify runs recognize_basic on a torus graph, and otherwise reduces it at a double edge
# (reduce_multi_edge) or at a singular facet (reduce_singular_facet) and recurses;
# fold_tree sums the pieces back together

from tgkit.classify._leaf_ import Leaf, LEAF_KINDS, recognize_basic, normalize_sb_params, sb_normal_form
from tgkit.classify._reduce_ import reduce_multi_edge, reduce_singular_facet
from tgkit.classify._tree_ import DecompositionTree, classify, fold_tree, tree_leaves, tree_summary, leaf_frame
from tgkit.classify._tree_ import distinct_leaves
from tgkit.classify._enumerate_ import enumerate_characteristic, candidate_grid, DEDUP_MODES
