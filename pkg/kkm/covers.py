"""
Covers of a triangulated space by indexed families of simplex sets.

Two semantics are supported. A star cover is a family of open sets; in the face
poset an open set is upward closed, so each set is stored as the simplices whose
relative interiors it contains (the open star of a vertex u is every simplex
having u as a vertex). A closed cover is a family of subcomplexes, stored
downward closed. With this storage a family of sets has a common point exactly
when some simplex lies in all of them, for either semantics.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .complexes import (
    SimplicialComplex,
    closure,
    make_simplex,
    maximal_of,
    oriented_subdivision,
)
from .exceptions import (
    AmbientMismatchError,
    ComplexError,
    DimensionMismatchError,
    HypothesisError,
    UnsupportedClassError,
    UnsupportedCoverError,
)
from .geometry import (
    PointConfig,
    cov_v,
    dimension_of,
    make_point,
    point_in_hull,
    signed_ray_crossings,
    winding_number_of_edges,
)
from .labelings import Labeling, degree_labeling
from .utils import HypothesisItem, Verdict

logger = logging.getLogger(__name__)

STAR = "star"
CLOSED = "closed"
SEMANTICS = (STAR, CLOSED)


@dataclass(frozen=True)
class Cover:
    ambient: SimplicialComplex
    sets: tuple
    semantics: str

    def __post_init__(self):
        if self.semantics not in SEMANTICS:
            raise ValueError("Unknown cover semantics {!r}.".format(self.semantics))
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        universe = self.ambient.simplices
        for i, cells in enumerate(sets):
            stray = sorted(cells - universe)
            if stray:
                raise ComplexError(
                    "Set {} holds {}, which is not an ambient simplex.".format(
                        i, stray[0]
                    )
                )
            if self.semantics == STAR:
                closed = self.ambient.up_closure(cells)
            else:
                closed = closure(cells)
            if closed != cells:
                raise ComplexError(
                    "Set {} is not {} closed.".format(
                        i, "upward" if self.semantics == STAR else "downward"
                    )
                )
        uncovered = sorted(universe.difference(*sets)) if sets else sorted(universe)
        if uncovered:
            raise ComplexError(
                "Simplex {} lies in no set of the cover.".format(uncovered[0])
            )

    @property
    def size(self):
        return len(self.sets)

    @property
    def m(self):
        return len(self.sets) - 1

    def membership(self, simplex):
        simplex = tuple(simplex)
        return frozenset(i for i, cells in enumerate(self.sets) if simplex in cells)

    def common_simplices(self, J=None):
        J = range(self.size) if J is None else J
        cells = self.ambient.simplices.intersection(*(self.sets[j] for j in J))
        return sorted(cells, key=lambda s: (len(s), s))

    def restrict(self, A):
        if not A.is_subcomplex_of(self.ambient):
            raise AmbientMismatchError("Not a subcomplex of the cover's ambient.")
        sets = tuple(cells & A.simplices for cells in self.sets)
        return Cover(A, sets, self.semantics)


def make_cover(ambient, sets, semantics=STAR):
    """
    Builds a cover from generating simplices: star sets are expanded to their
    upward closure in the ambient, closed sets to the subcomplex they span.
    """
    universe = ambient.simplices
    normalized = []
    for i, generators in enumerate(sets):
        generators = [make_simplex(s) for s in generators]
        stray = [s for s in generators if s not in universe]
        if stray:
            raise ComplexError(
                "Set {} names {}, which is not an ambient simplex.".format(i, stray[0])
            )
        if semantics == STAR:
            normalized.append(ambient.up_closure(generators))
        else:
            normalized.append(closure(generators))
    return Cover(ambient, tuple(normalized), semantics)


def cover_from_labeling(K, L):
    L.attach(K)
    sets = tuple(
        frozenset(s for s in K.simplices if any(L[u] == label for u in s))
        for label in range(L.m + 1)
    )
    return Cover(K, sets, STAR)


@dataclass(frozen=True)
class Nerve:
    simplices: frozenset
    size: int

    @cached_property
    def maximal(self):
        return sorted(maximal_of(self.simplices), key=lambda s: (len(s), s))

    @property
    def dimension(self):
        return max((len(s) for s in self.simplices), default=0) - 1

    def __contains__(self, J):
        return tuple(sorted(J)) in self.simplices

    @property
    def has_top_cell(self):
        return tuple(range(self.size)) in self.simplices

    @property
    def complex(self):
        return SimplicialComplex(frozenset(maximal_of(self.simplices)), self.size)


def nerve(c):
    realized = {tuple(sorted(c.membership(s))) for s in c.ambient.simplices}
    return Nerve(closure(J for J in realized if J), c.size)


@dataclass(frozen=True)
class PartitionWeights:
    # vertex -> weight vector over the sets of the cover
    weights: tuple

    @classmethod
    def canonical(cls, c):
        rows = []
        for u in range(c.ambient.vertex_count):
            if (u,) not in c.ambient.simplices:
                rows.append((Fraction(0),) * c.size)
                continue
            own = min(c.membership((u,)), default=0)
            rows.append(tuple(Fraction(int(i == own)) for i in range(c.size)))
        return cls(tuple(rows))

    @classmethod
    def uniform(cls, c):
        rows = []
        for u in range(c.ambient.vertex_count):
            J = c.membership((u,))
            if not J:
                rows.append((Fraction(0),) * c.size)
                continue
            rows.append(
                tuple(
                    Fraction(1, len(J)) if i in J else Fraction(0)
                    for i in range(c.size)
                )
            )
        return cls(tuple(rows))

    def validate(self, c):
        if c.semantics != STAR:
            raise UnsupportedCoverError(
                "Partition weights are defined for star covers."
            )
        problems = []
        if len(self.weights) != c.ambient.vertex_count:
            problems.append({"vertex": None, "problem": "row count"})
        for u in c.ambient.vertices:
            row = self.weights[u] if u < len(self.weights) else ()
            if len(row) != c.size:
                problems.append({"vertex": u, "problem": "length"})
            elif any(w < 0 for w in row):
                problems.append({"vertex": u, "problem": "negative"})
            elif sum(row) != 1:
                problems.append({"vertex": u, "problem": "sum"})
            elif any(w > 0 and (u,) not in c.sets[i] for i, w in enumerate(row)):
                problems.append({"vertex": u, "problem": "support"})
        return Verdict.from_violations(problems)


def _require_weights(c, w):
    if w is None:
        w = PartitionWeights.canonical(c)
    check = w.validate(c)
    if not check:
        raise ValueError(
            "Weights are not subordinate to the cover: {}".format(check.violations)
        )
    return w


def _require_point_per_set(c, V):
    if len(V) != c.size:
        raise DimensionMismatchError(
            "{} points given for a cover with {} sets.".format(len(V), c.size)
        )


def _vertex_images(c, w, V):
    V = [make_point(v) for v in V]
    _require_point_per_set(c, V)
    dimension_of(V)
    d = len(V[0])
    return [
        tuple(sum(wi * v[k] for wi, v in zip(row, V)) for k in range(d))
        for row in w.weights
    ]


def rho_eval(c, w, V, x):
    """
    rho(x) = sum phi_i(x) v_i, with x given as (carrier simplex, barycentric
    coordinates) and phi interpolated linearly from the vertex weights.
    """
    if c.semantics != STAR:
        raise UnsupportedCoverError("rho is evaluated on star covers only.")
    w = _require_weights(c, w)
    carrier, coords = x
    carrier = tuple(carrier)
    coords = [Fraction(t) for t in coords]
    if tuple(sorted(carrier)) not in c.ambient.simplices:
        raise ComplexError("{} is not a simplex of the ambient.".format(carrier))
    if len(coords) != len(carrier) or any(t < 0 for t in coords) or sum(coords) != 1:
        raise ValueError("Barycentric coordinates must be non-negative and sum to 1.")
    images = _vertex_images(c, w, V)
    d = len(images[0])
    return tuple(
        sum(t * images[u][k] for t, u in zip(coords, carrier)) for k in range(d)
    )


@dataclass(frozen=True)
class ImagePolyhedron:
    V: tuple
    # maximal nerve simplices; the image is the union of conv(V_J) over them
    pieces: tuple

    def contains(self, p):
        return any(point_in_hull([self.V[j] for j in J], p) for J in self.pieces)

    def segments(self):
        return [tuple(self.V[j] for j in J) for J in self.pieces]


def image_polyhedron(c, V):
    V = tuple(make_point(v) for v in V)
    _require_point_per_set(c, V)
    return ImagePolyhedron(V, tuple(nerve(c).maximal))


def p_in_complement(c, V, p):
    """
    p avoids the image of rho exactly when, for every minimal J of cov_V(p), the
    sets indexed by J have no common point.
    """
    _require_point_per_set(c, V)
    family = cov_v(PointConfig(V, p))
    return Verdict.from_violations(J for J in family if c.common_simplices(J))


def extension_check(S, F, A=None):
    A = S.ambient if A is None else A
    if not A.is_subcomplex_of(F.ambient):
        raise AmbientMismatchError("A is not a subcomplex of F's ambient.")
    if S.ambient.simplices != A.simplices:
        raise AmbientMismatchError("S is not a cover of A.")
    if S.size != F.size:
        raise AmbientMismatchError(
            "S has {} sets, F has {}.".format(S.size, F.size)
        )
    if S.semantics != F.semantics:
        raise AmbientMismatchError("S and F have different semantics.")
    diffs = []
    for i, (s_cells, f_cells) in enumerate(zip(S.sets, F.sets)):
        restricted = f_cells & A.simplices
        if restricted != s_cells:
            diffs.append(
                {
                    "index": i,
                    "missing": sorted(s_cells - restricted),
                    "extra": sorted(restricted - s_cells),
                }
            )
    return Verdict.from_violations(diffs)


def collapse_cover(c, M):
    """
    A labeling whose induced map lands in the nerve of c and is homotopic to its
    canonical map: star covers label a vertex by the least set holding its open
    star; closed covers label the barycenter of each simplex of one barycentric
    subdivision by the least set holding that simplex.
    """
    if c.ambient.simplices != M.complex.simplices:
        raise AmbientMismatchError("The cover is not a cover of the oriented ambient.")
    if c.semantics == STAR:
        labels = tuple(
            min(c.membership((u,)), default=0) for u in range(M.complex.vertex_count)
        )
        return M, Labeling(labels, c.m)
    subdivision = oriented_subdivision(M)
    labels = tuple(min(c.membership(cell)) for cell in subdivision.provenance)
    return subdivision.oriented, Labeling(labels, c.m)


def _require_empty_intersection(c):
    common = c.common_simplices()
    if common:
        raise HypothesisError(
            "The sets of the cover have a common point.",
            [HypothesisItem.check("empty-total-intersection", False, common[:10])],
        )


def cover_degree(c, M, target=None, per_component=False):
    if c.size != M.dimension + 2:
        raise UnsupportedClassError(
            "A cover of an {}-dimensional ambient needs {} sets for a degree.".format(
                M.dimension, M.dimension + 2
            )
        )
    _require_empty_intersection(c)
    K, L = collapse_cover(c, M)
    return degree_labeling(K, L, target, per_component)


def h_class(c, M, V, p, weights=None):
    """
    The degree of x -> (rho(x) - p) / |rho(x) - p| on the closed oriented ambient M:
    a winding number for 1-dimensional M with V in the plane, a radial degree for
    2-dimensional M with V in 3-space.
    """
    n = M.dimension
    V = [make_point(v) for v in V]
    _require_point_per_set(c, V)
    p = make_point(p)
    if n not in (1, 2) or dimension_of(V + [p]) != n + 1:
        raise UnsupportedClassError(
            "h is computed for 1-dimensional ambients in the plane and 2-dimensional "
            "ambients in 3-space."
        )
    if not M.is_cycle:
        raise HypothesisError(
            "h needs a closed ambient.",
            [HypothesisItem.check("closed", False, sorted(M.boundary_chain())[:10])],
        )
    if weights is None:
        K, L = collapse_cover(c, M)
        points = {u: V[L[u]] for u in K.complex.vertices}
    else:
        if c.ambient.simplices != M.complex.simplices:
            raise AmbientMismatchError(
                "The cover is not a cover of the oriented ambient."
            )
        K = M
        images = _vertex_images(c, _require_weights(c, weights), V)
        points = dict(enumerate(images))
    cells = []
    for s, sign in sorted(K.signs.items()):
        image = [points[u] for u in s]
        if sign < 0:
            image[0], image[1] = image[1], image[0]
        cells.append(tuple(image))
    if n == 1:
        return winding_number_of_edges(cells, p)
    return signed_ray_crossings(cells, p)
