import itertools
import logging
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property

from .exceptions import ComplexError, NonOrientableError, NotManifoldError, NotPureError

logger = logging.getLogger(__name__)


def make_simplex(vertices):
    vertices = list(vertices)
    if not vertices:
        raise ComplexError("A simplex needs at least one vertex.")
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ComplexError("Invalid vertex identifier {!r}.".format(v))
    simplex = tuple(sorted(vertices))
    if len(set(simplex)) != len(simplex):
        raise ComplexError("Duplicate vertex in simplex {}.".format(vertices))
    return simplex


def faces(simplex):
    for k in range(1, len(simplex) + 1):
        yield from itertools.combinations(simplex, k)


def boundary_faces(simplex):
    """Yields (i, face) for every codimension-one face, i the omitted position."""
    if len(simplex) < 2:
        return
    for i in range(len(simplex)):
        yield i, simplex[:i] + simplex[i + 1 :]


def permutation_sign(sequence):
    sign = 1
    sequence = list(sequence)
    for i, a in enumerate(sequence):
        for b in sequence[i + 1 :]:
            if a > b:
                sign = -sign
    return sign


def closure(simplices):
    return frozenset(f for s in simplices for f in faces(s))


def maximal_of(simplices):
    simplices = frozenset(simplices)
    covered = {f for s in simplices for _, f in boundary_faces(s)}
    return simplices - covered


@dataclass(frozen=True)
class SimplicialComplex:
    maximal_simplices: frozenset
    vertex_count: int

    @cached_property
    def dimension(self):
        return max((len(s) for s in self.maximal_simplices), default=0) - 1

    @cached_property
    def simplices(self):
        return closure(self.maximal_simplices)

    @cached_property
    def vertices(self):
        return tuple(sorted({v for s in self.maximal_simplices for v in s}))

    @cached_property
    def top_simplices(self):
        d = self.dimension
        return tuple(sorted(s for s in self.maximal_simplices if len(s) == d + 1))

    @property
    def is_pure(self):
        return all(len(s) == self.dimension + 1 for s in self.maximal_simplices)

    @cached_property
    def cofaces(self):
        # (d-1)-face -> [(d-simplex, position of the omitted vertex)]
        parents = defaultdict(list)
        for top in self.top_simplices:
            for i, face in boundary_faces(top):
                parents[face].append((top, i))
        return dict(parents)

    @property
    def incidence(self):
        return {face: len(parents) for face, parents in self.cofaces.items()}

    @cached_property
    def components(self):
        # maximal simplices grouped by connected component, in vertex order
        by_vertex = defaultdict(list)
        for s in self.maximal_simplices:
            for v in s:
                by_vertex[v].append(s)
        seen, found = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            seen.add(v)
            part, queue = set(), deque([v])
            while queue:
                for s in by_vertex[queue.popleft()]:
                    part.add(s)
                    for u in s:
                        if u not in seen:
                            seen.add(u)
                            queue.append(u)
            found.append(tuple(sorted(part)))
        return tuple(found)

    def __contains__(self, simplex):
        return tuple(sorted(simplex)) in self.simplices

    def simplices_of_dimension(self, k):
        return sorted(s for s in self.simplices if len(s) == k + 1)

    @cached_property
    def parents(self):
        # simplex -> simplices having it as a codimension-one face
        found = defaultdict(list)
        for s in self.simplices:
            for _, face in boundary_faces(s):
                found[face].append(s)
        return dict(found)

    def up_closure(self, simplices):
        found = set(simplices)
        stack = list(found)
        while stack:
            for parent in self.parents.get(stack.pop(), ()):
                if parent not in found:
                    found.add(parent)
                    stack.append(parent)
        return frozenset(found)

    def star(self, vertex):
        return self.up_closure([(vertex,)])

    def subcomplex(self, simplices):
        simplices = [make_simplex(s) for s in simplices]
        missing = [s for s in simplices if s not in self.simplices]
        if missing:
            raise ComplexError("{} is not a simplex of the complex.".format(missing[0]))
        return SimplicialComplex(maximal_of(closure(simplices)), self.vertex_count)

    def is_subcomplex_of(self, other):
        return self.simplices <= other.simplices


def build_complex(maximal, vertex_count=None):
    simplices = [make_simplex(s) for s in maximal]
    top = maximal_of(closure(simplices))
    used = {v for s in top for v in s}
    if vertex_count is None:
        vertex_count = max(used) + 1 if used else 0
    for v in sorted(used):
        if v >= vertex_count:
            raise ComplexError(
                "Vertex {} out of range for {} vertices.".format(v, vertex_count)
            )
    unused = sorted(set(range(vertex_count)) - used)
    if unused:
        raise ComplexError("Vertex {} does not occur in any simplex.".format(unused[0]))
    return SimplicialComplex(top, vertex_count)


def _require_pure(K):
    if not K.is_pure:
        raise NotPureError(
            "Complex is not pure: it has maximal simplices below dimension {}.".format(
                K.dimension
            )
        )


@dataclass(frozen=True)
class BoundaryComplex:
    faces: frozenset
    parity: dict = field(compare=False)
    vertex_count: int = 0

    def __bool__(self):
        return bool(self.faces)

    def __len__(self):
        return len(self.faces)

    @cached_property
    def simplices(self):
        return closure(self.faces)

    def as_complex(self):
        return SimplicialComplex(maximal_of(self.simplices), self.vertex_count)


def manifold_boundary(K):
    _require_pure(K)
    counts = K.incidence
    found = frozenset(f for f, n in counts.items() if n == 1)
    return BoundaryComplex(found, {f: counts[f] for f in found}, K.vertex_count)


def bloch_boundary(K):
    """
    The (d-1)-simplices lying in an odd number of d-simplices, together with their
    faces.
    """
    _require_pure(K)
    counts = K.incidence
    found = frozenset(f for f, n in counts.items() if n % 2 == 1)
    return BoundaryComplex(found, {f: counts[f] for f in found}, K.vertex_count)


@dataclass(frozen=True)
class OrientedComplex:
    complex: SimplicialComplex
    signs: dict = field(hash=False)

    def __post_init__(self):
        _require_pure(self.complex)
        tops = set(self.complex.top_simplices)
        if set(self.signs) != tops:
            raise ComplexError("Orientation must assign a sign to every top simplex.")
        if any(s not in (1, -1) for s in self.signs.values()):
            raise ComplexError("Orientation signs must be +1 or -1.")
        for face, parents in self.complex.cofaces.items():
            if len(parents) != 2:
                continue
            (a, i), (b, j) = parents
            if self.signs[a] * (-1) ** i + self.signs[b] * (-1) ** j != 0:
                raise NonOrientableError(
                    "Induced orientations of {} and {} do not cancel on {}.".format(
                        a, b, face
                    )
                )

    @property
    def dimension(self):
        return self.complex.dimension

    @property
    def top_simplices(self):
        return self.complex.top_simplices

    def sign(self, simplex):
        return self.signs[tuple(sorted(simplex))]

    def negated(self):
        return OrientedComplex(self.complex, {s: -v for s, v in self.signs.items()})

    def components(self):
        return [
            OrientedComplex(
                SimplicialComplex(frozenset(part), self.complex.vertex_count),
                {s: self.signs[s] for s in part},
            )
            for part in self.complex.components
        ]

    def boundary_chain(self):
        chain = defaultdict(int)
        for top, sign in self.signs.items():
            for i, face in boundary_faces(top):
                chain[face] += sign * (-1) ** i
        return {face: value for face, value in chain.items() if value}

    @property
    def is_cycle(self):
        return not self.boundary_chain()


def orient(K, seed_sign=1, seed=None):
    """
    Propagates an orientation from a seed top simplex across shared (d-1)-faces so
    that induced orientations cancel. Each connected component is seeded from its
    lexicographically smallest top simplex (the given seed goes first).
    """
    if seed_sign not in (1, -1):
        raise ValueError("seed_sign must be +1 or -1")
    _require_pure(K)
    cofaces = K.cofaces
    for face, parents in cofaces.items():
        if len(parents) > 2:
            raise NotManifoldError(
                "Face {} lies in {} top simplices.".format(face, len(parents))
            )
    roots = list(K.top_simplices)
    if seed is not None:
        seed = make_simplex(seed)
        if seed not in roots:
            raise ComplexError("Seed {} is not a top simplex.".format(seed))
        roots.remove(seed)
        roots.insert(0, seed)
    signs = {}
    for root in roots:
        if root in signs:
            continue
        signs[root] = seed_sign
        queue = deque([root])
        while queue:
            sigma = queue.popleft()
            for i, face in boundary_faces(sigma):
                for tau, j in cofaces.get(face, ()):
                    if tau == sigma:
                        continue
                    required = -signs[sigma] * (-1) ** (i + j)
                    if tau not in signs:
                        signs[tau] = required
                        queue.append(tau)
                    elif signs[tau] != required:
                        raise NonOrientableError(
                            "Orientation conflict across {} between {} and {}.".format(
                                face, sigma, tau
                            )
                        )
    return OrientedComplex(K, signs)


def induced_boundary_orientation(M):
    """
    Orients every boundary face by its unique parent: parent sign times (-1)^i, with
    i the position of the omitted vertex.
    """
    found = manifold_boundary(M.complex)
    if not found:
        raise ComplexError("The complex is closed; it has no boundary to orient.")
    cofaces = M.complex.cofaces
    signs = {}
    for face in found.faces:
        ((parent, i),) = cofaces[face]
        signs[face] = M.signs[parent] * (-1) ** i
    return OrientedComplex(found.as_complex(), signs)


@dataclass(frozen=True)
class Subdivision:
    complex: SimplicialComplex
    # new vertex -> simplex of the original complex whose relative interior holds it
    provenance: tuple
    oriented: OrientedComplex = None

    def carrier(self, vertex):
        return self.provenance[vertex]


def _subdivide_once(K, signs=None):
    # Vertices are numbered by (dimension, vertices) of the cell they are the
    # barycenter of: every flag is increasing, and when K uses every vertex id the
    # original vertices keep their ids.
    cells = sorted(K.simplices, key=lambda s: (len(s), s))
    index = {s: n for n, s in enumerate(cells)}
    maximal = set()
    new_signs = None if signs is None else {}
    for top in K.maximal_simplices:
        for order in itertools.permutations(top):
            chain = tuple(
                index[tuple(sorted(order[: k + 1]))] for k in range(len(order))
            )
            maximal.add(chain)
            if new_signs is not None:
                new_signs[chain] = signs[top] * permutation_sign(order)
    return SimplicialComplex(frozenset(maximal), len(cells)), cells, new_signs


def barycentric_subdivision(K, depth=1, signs=None):
    if depth < 0:
        raise ValueError("depth must be non-negative")
    provenance = tuple((v,) for v in range(K.vertex_count))
    for level in range(depth):
        K, cells, signs = _subdivide_once(K, signs)
        provenance = tuple(
            tuple(sorted({c for v in cell for c in provenance[v]})) for cell in cells
        )
        logger.debug(
            "Subdivision level %d: %d vertices, %d maximal simplices",
            level + 1,
            K.vertex_count,
            len(K.maximal_simplices),
        )
    oriented = OrientedComplex(K, signs) if signs is not None else None
    return Subdivision(K, provenance, oriented)


def oriented_subdivision(M, depth=1):
    return barycentric_subdivision(M.complex, depth, signs=dict(M.signs))
