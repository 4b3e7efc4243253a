from tgkit.lattice._lattice_ import LatticeVector, LatticeCovector, SignClass
from tgkit.lattice._lattice_ import E1, E2, E3, DUAL_E1, DUAL_E2, DUAL_E3
from tgkit.lattice._lattice_ import det3, is_unimodular_basis, solve_dual, dual_basis, pairing, multiple_of, cross
from tgkit.lattice._lattice_ import coordinates, change_of_basis, apply_matrix, random_unimodular
