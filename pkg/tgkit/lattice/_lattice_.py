"""
Date: 261018

{Description: exact integer linear algebra over Z^3 and its dual lattice.
LatticeVector holds values of characteristic functions (facet vectors),
LatticeCovector holds axial labels; both are immutable integer triples}
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import sympy

from tgkit._errors_ import NotUnimodular

@dataclass(frozen=True, order=True)
class _Triple:
    coords: Tuple[int, int, int]

    def __post_init__(self):
        for c in self.coords:
            assert not isinstance(c, bool) and hasattr(c, '__index__'), "coordinate %r is not an integer" % (c,)
        coords = tuple(operator.index(c) for c in self.coords)
        assert len(coords) == 3, "lattice elements have exactly 3 coordinates, got %d" % len(coords)
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def of(cls, x, y, z):
        return cls((x, y, z))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __neg__(self):
        return type(self)(tuple(-c for c in self.coords))

    def __add__(self, other):
        return type(self)(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return type(self)(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, k):
        return type(self)(tuple(k * c for c in self.coords))

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coords)

    def __str__(self):
        return "(%d,%d,%d)" % self.coords

class LatticeVector(_Triple):
    """An element of the lattice Z^3 (values of a characteristic function)"""

class LatticeCovector(_Triple):
    """An element of the dual lattice (axial labels)"""

# standard bases
E1, E2, E3 = LatticeVector.of(1, 0, 0), LatticeVector.of(0, 1, 0), LatticeVector.of(0, 0, 1)
DUAL_E1, DUAL_E2, DUAL_E3 = LatticeCovector.of(1, 0, 0), LatticeCovector.of(0, 1, 0), LatticeCovector.of(0, 0, 1)

@dataclass(frozen=True, order=True)
class SignClass:
    """A nonzero lattice vector up to sign, stored with its first nonzero coordinate positive"""
    representative: LatticeVector

    def __post_init__(self):
        v = self.representative
        if not isinstance(v, LatticeVector):
            v = LatticeVector(tuple(v))
        if v.is_zero():
            raise ValueError("the zero vector has no sign class")
        lead = next(c for c in v.coords if c != 0)
        object.__setattr__(self, 'representative', v if lead > 0 else -v)

    def lift(self, sign):
        assert sign in (1, -1), "sign must be +1 or -1, got %r" % (sign,)
        return self.representative * sign

    def __str__(self):
        return "±" + str(self.representative)

def pairing(alpha, v):
    """<alpha, v> for a covector alpha and a vector v"""
    return alpha[0] * v[0] + alpha[1] * v[1] + alpha[2] * v[2]

def cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])

def det3(a, b, c):
    """Determinant of the 3x3 matrix with columns a, b, c (exact)"""
    return pairing(cross(a, b), c)

def is_unimodular_basis(a, b, c):
    return det3(a, b, c) in (1, -1)

def solve_dual(a1, a2, a3):
    """The unique integer covector alpha with <alpha,a1> = <alpha,a2> = 0 and <alpha,a3> = 1

    Parameters
    ----------
        a1, a2 : LatticeVector
            vectors of the two facets containing the edge
        a3 : LatticeVector
            vector of the normal facet
    Returns
    -------
    LatticeCovector
    """
    d = det3(a1, a2, a3)
    if d not in (1, -1):
        raise NotUnimodular("vectors %s %s %s have determinant %d" % (_fmt(a1), _fmt(a2), _fmt(a3), d))
    # third row of the adjugate, divided by det = +-1
    return LatticeCovector(tuple(d * c for c in cross(a1, a2)))

def multiple_of(v, w) -> Optional[int]:
    """Integer k with v = k*w, or None. w must be nonzero"""
    assert any(w), "cannot divide by the zero vector"
    if any(cross(v, w)):
        return None
    i = next(j for j in range(3) if w[j] != 0)
    k, r = divmod(v[i], w[i])
    return k if r == 0 else None

def to_matrix(columns: Sequence[Iterable[int]]):
    """sympy Matrix whose columns are the given triples"""
    return sympy.Matrix([list(col) for col in columns]).T

def coordinates(v, basis):
    """Coordinates of v in a unimodular basis (exact, integer)"""
    m = to_matrix(basis)
    assert m.det() in (1, -1), "basis is not unimodular"
    x = m.adjugate() * sympy.Matrix(list(v)) * m.det()
    return tuple(int(c) for c in x)

def change_of_basis(src, dst):
    """Unimodular integer matrix M with M*src[i] = dst[i] for i = 0,1,2"""
    s, t = to_matrix(src), to_matrix(dst)
    if s.det() not in (1, -1) or t.det() not in (1, -1):
        raise NotUnimodular("change of basis between non-unimodular triples")
    # s^-1 = det(s) * adj(s) because det(s) = +-1
    return t * s.adjugate() * s.det()

def apply_matrix(m, v):
    out = m * sympy.Matrix(list(v))
    return type(v)(tuple(int(c) for c in out))

def random_unimodular(rng, steps=6):
    """Random element of GL(3,Z) as a product of elementary moves (rng is a random.Random)"""
    m = sympy.eye(3)
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        e = sympy.eye(3)
        e[i, j] = rng.choice([-2, -1, 1, 2])
        m = e * m
    if rng.random() < 0.5:
        m = sympy.diag(-1, 1, 1) * m
    return m

def _fmt(v):
    return "(%d,%d,%d)" % tuple(v)

def dual_basis(basis):
    """Vectors w_i with <basis[j], w_i> = delta_ij, for a unimodular triple of covectors

    Parameters
    ----------
        basis : sequence of 3 LatticeCovector
    Returns
    -------
    list of LatticeVector
    """
    a, b, c = basis
    d = det3(a, b, c)
    if d not in (1, -1):
        raise NotUnimodular("labels %s %s %s have determinant %d" % (_fmt(a), _fmt(b), _fmt(c), d))
    return [LatticeVector(tuple(d * x for x in w)) for w in (cross(b, c), cross(c, a), cross(a, b))]
