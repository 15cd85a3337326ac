"""
Canonical complexes, labelings and point sets: the worked examples and the
generators behind the fuzz families and the bootstrap command.
"""
from fractions import Fraction

from .complexes import (
    OrientedComplex,
    build_complex,
    induced_boundary_orientation,
    manifold_boundary,
    orient,
    oriented_subdivision,
)
from .covers import STAR, Cover, cover_from_labeling
from .geometry import make_point, standard_simplex
from .labelings import Labeling, SpernerContext

UNIT_SQUARE = tuple(make_point(v) for v in [(0, 0), (1, 0), (1, 1), (0, 1)])
# Affinely regular, so every coordinate stays rational.
HEXAGON = tuple(
    make_point(v) for v in [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
)
TRIANGLE = standard_simplex(2)
HEPTAGON_LABELS = (0, 1, 2, 3, 2, 1, 3)


def simplex(m):
    return build_complex([range(m + 1)])


def oriented_simplex(m):
    K = simplex(m)
    return OrientedComplex(K, {K.top_simplices[0]: 1})


def sphere(m):
    return build_complex(
        [tuple(v for v in range(m + 1) if v != i) for i in range(m + 1)]
    )


def oriented_sphere(m):
    return induced_boundary_orientation(oriented_simplex(m))


def sperner_sphere(m, depth):
    subdivision = oriented_subdivision(oriented_sphere(m), depth)
    return subdivision.oriented, SpernerContext.from_subdivision(subdivision, m)


def sperner_simplex(m, depth):
    subdivision = oriented_subdivision(oriented_simplex(m), depth)
    return subdivision.oriented, SpernerContext.from_subdivision(subdivision, m)


def cycle(n):
    """The n-cycle 0, 1, ..., n-1, oriented in increasing vertex order."""
    if n < 3:
        raise ValueError("A cycle needs at least 3 vertices.")
    K = build_complex([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    signs = {(i, i + 1): 1 for i in range(n - 1)}
    signs[(0, n - 1)] = -1
    return OrientedComplex(K, signs)


def heptagon():
    return cycle(7), Labeling(HEPTAGON_LABELS, 3)


def ring_disk(n, rings=1):
    """
    A disk made of concentric rings of n vertices around a center. Ring r holds
    the vertices r*n .. r*n+n-1, the outer ring 0 is the boundary, and the
    boundary is traversed in increasing vertex order.
    """
    if n < 3 or rings < 1:
        raise ValueError("A ring disk needs n >= 3 and at least one ring.")
    center = rings * n
    triangles = []
    for r in range(rings):
        for i in range(n):
            a, b = r * n + i, r * n + (i + 1) % n
            if r + 1 < rings:
                c, d = (r + 1) * n + i, (r + 1) * n + (i + 1) % n
                triangles.append((a, b, c))
                triangles.append((b, d, c))
            else:
                triangles.append((a, b, center))
    oriented = orient(build_complex(triangles))
    if induced_boundary_orientation(oriented).sign((0, 1)) != 1:
        oriented = oriented.negated()
    return oriented


def disk_boundary(M):
    return manifold_boundary(M.complex).as_complex()


def mobius_band():
    return build_complex(
        [(0, 1, 3), (1, 3, 4), (1, 2, 4), (2, 4, 5), (2, 3, 5), (0, 3, 5)]
    )


def three_fins():
    return build_complex([(0, 1, 2), (0, 1, 3), (0, 1, 4)])


def doubled_simplex():
    """The 2-sphere boundary of Delta^3 labeled 0, 1, 2, 0 over a triangle."""
    return sphere(3), Labeling((0, 1, 2, 0), 2), TRIANGLE


def winding_labels(n, k, q=3):
    """
    Labels of an n-cycle that run around the q corners of a polygon k times;
    consecutive labels differ by at most one step.
    """
    if q * abs(k) > n:
        raise ValueError(
            "Need at least {} vertices for winding {}.".format(q * abs(k), k)
        )
    labels = [(q * abs(k) * i // n) % q for i in range(n)]
    if k < 0:
        labels = [-label % q for label in labels]
    return labels


def disk_labeling(M, n, boundary, m, rng):
    interior = [rng.randint(0, m) for _ in range(M.complex.vertex_count - n)]
    return Labeling(tuple(boundary) + tuple(interior), m)


def tucker_labels(n):
    """Four arcs labeled +1, +2, -1, -2 in cyclic order, as set indices 0, 2, 1, 3."""
    if n % 4:
        raise ValueError("The arc count must divide the cycle length.")
    return [(0, 2, 1, 3)[4 * i // n] for i in range(n)]


def boundary_covers(M, L):
    F = cover_from_labeling(M.complex, L)
    A = disk_boundary(M)
    return F.restrict(A), F, A


def grow_cover(F, A, rng, extra=4):
    """Adds the open stars of random simplices off A to random sets of F."""
    if F.semantics != STAR:
        raise ValueError("Only star covers grow by open stars.")
    free = sorted(F.ambient.simplices - A.simplices)
    sets = [set(cells) for cells in F.sets]
    for s in rng.sample(free, min(extra, len(free))):
        sets[rng.randrange(F.size)] |= F.ambient.up_closure([s])
    return Cover(F.ambient, tuple(sets), F.semantics)


def tetrahedron_realization():
    return {v: p for v, p in enumerate(standard_simplex(3))}


def inner_tetrahedron():
    # shrunk copy of the standard tetrahedron around its centroid
    c = Fraction(1, 4)
    return {
        v: tuple(c + (x - c) / 2 for x in p) for v, p in enumerate(standard_simplex(3))
    }
