"""
Date: 261018

{Description: characteristic functions on the facets of a rotation graph, either
omnioriented (a lattice vector per facet) or unoriented (a sign class per facet)}
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Sequence, Tuple, Union

from tgkit._report_ import Diagnostic
from tgkit.graph import RotationGraph
from tgkit.lattice import LatticeVector, SignClass, det3

@dataclass(frozen=True)
class CharacteristicData:
    """values[i] is assigned to facet i of the graph (facet order of RotationGraph.faces)"""
    values: Tuple[Union[LatticeVector, SignClass], ...]

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(self.values))

    @classmethod
    def of(cls, vectors):
        return cls(tuple(v if isinstance(v, (LatticeVector, SignClass)) else LatticeVector(tuple(v)) for v in vectors))

    @property
    def oriented(self):
        return all(isinstance(v, LatticeVector) for v in self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def vector(self, i) -> LatticeVector:
        v = self.values[i]
        return v.representative if isinstance(v, SignClass) else v

    def unoriented(self) -> "CharacteristicData":
        return CharacteristicData(tuple(SignClass(self.vector(i)) for i in range(len(self))))

    def canonical_lift(self) -> "CharacteristicData":
        """The lift whose vectors all have their first nonzero coordinate positive"""
        return CharacteristicData(tuple(SignClass(self.vector(i)).representative for i in range(len(self))))

def is_characteristic(g: RotationGraph, lam: CharacteristicData) -> Tuple[bool, List[Diagnostic]]:
    """Determinant +-1 at every vertex (any sign lift for unoriented data)"""
    diagnostics = []
    if len(lam) != len(g.faces):
        return False, [Diagnostic('facet-count', 'graph', '%d values for %d facets' % (len(lam), len(g.faces)))]
    for v in g.vertices:
        i, j, k = g.facets_at(v)
        d = det3(lam.vector(i), lam.vector(j), lam.vector(k))
        if d not in (1, -1):
            diagnostics.append(Diagnostic('unimodular', 'vertex %d' % v,
                                          'facets %d %d %d have determinant %d' % (i, j, k, d)))
    return not diagnostics, diagnostics

def lift_signs(lam: CharacteristicData, choice: Sequence[int]) -> CharacteristicData:
    """Omnioriented data from a sign per facet"""
    assert len(choice) == len(lam), "one sign per facet"
    return CharacteristicData(tuple(lam.vector(i) * s for i, s in enumerate(choice)))

def omniorientations(lam: CharacteristicData) -> Iterator[CharacteristicData]:
    """All 2^m sign lifts of the data, m = number of facets"""
    for choice in product((1, -1), repeat=len(lam)):
        yield lift_signs(lam, choice)
