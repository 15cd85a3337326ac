"""
Exact rational geometry: hull membership, the cov_V(p) family, winding numbers and
radial degrees, polytope facets and pebble sets. No floating point is used in any
decision.
"""
import functools
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from more_itertools import pairwise

from .conf import get_hook, get_setting
from .exceptions import (
    DimensionMismatchError,
    OnImageError,
    PebbleConstructionError,
)

logger = logging.getLogger(__name__)

RAY_DIRECTIONS = ("+x", "-x", "+y", "-y")


def rational(value):
    if isinstance(value, float):
        raise TypeError("Floating-point values are not accepted; use exact rationals.")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def make_point(coordinates):
    return tuple(rational(c) for c in coordinates)


def dimension_of(points):
    dims = {len(p) for p in points}
    if len(dims) > 1:
        raise DimensionMismatchError("Points do not share a dimension: {}".format(dims))
    return dims.pop() if dims else 0


def _require_dimension(points, d):
    if dimension_of(points) not in (d, 0):
        raise DimensionMismatchError("Expected points in {}-space.".format(d))


def centroid(points):
    points = list(points)
    n = len(points)
    return tuple(sum(c) / n for c in zip(*points))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _det3(a, b, c):
    return _dot(a, _cross(b, c))


def _solve(rows, rhs):
    """
    Solves rows * x = rhs exactly by Gauss-Jordan elimination. Returns the unique
    solution, or None when the columns are dependent or the system inconsistent.
    """
    n_rows, n_cols = len(rows), len(rows[0])
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n_cols):
        pivot = next((r for r in range(col, n_rows) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        head = a[col][col]
        a[col] = [x / head for x in a[col]]
        for r in range(n_rows):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    if any(a[r][n_cols] != 0 for r in range(n_cols, n_rows)):
        return None
    return [a[r][n_cols] for r in range(n_cols)]


def determinant(rows):
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def orientation_sign(points):
    base = points[0]
    det = determinant([_sub(q, base) for q in points[1:]])
    return (det > 0) - (det < 0)


def barycentric(points, p):
    d = dimension_of(list(points) + [p])
    rows = [[q[c] for q in points] for c in range(d)] + [[1] * len(points)]
    return _solve(rows, list(p) + [1])


def point_in_hull(S, p):
    """
    Exact membership of p in conv(S), boundary included: by Caratheodory it suffices
    to find an affinely independent subset of at most d+1 points holding p as a
    convex combination.
    """
    S = list(dict.fromkeys(tuple(q) for q in S))
    d = dimension_of(S + [tuple(p)])
    for k in range(1, min(len(S), d + 1) + 1):
        for subset in itertools.combinations(S, k):
            coords = barycentric(subset, p)
            if coords is not None and all(x >= 0 for x in coords):
                return True
    return False


@dataclass(frozen=True)
class PointConfig:
    V: tuple
    p: tuple

    def __post_init__(self):
        object.__setattr__(self, "V", tuple(make_point(v) for v in self.V))
        object.__setattr__(self, "p", make_point(self.p))
        dimension_of(list(self.V) + [self.p])

    @property
    def dimension(self):
        return len(self.p)

    def with_point(self, p):
        return PointConfig(self.V, p)


@dataclass(frozen=True)
class CovFamily:
    minimal_sets: tuple
    size: int

    def __iter__(self):
        return iter(self.minimal_sets)

    def __len__(self):
        return len(self.minimal_sets)

    def __bool__(self):
        return bool(self.minimal_sets)

    def __contains__(self, J):
        J = set(J)
        return any(J.issuperset(m) for m in self.minimal_sets)

    def up_closure(self):
        found = []
        for k in range(1, self.size + 1):
            for J in itertools.combinations(range(self.size), k):
                if J in self:
                    found.append(J)
        return found


@functools.lru_cache(maxsize=4096)
def _minimal_cov(V, p):
    n, d = len(V), len(p)
    minimal = []
    for k in range(1, min(n, d + 1) + 1):
        for J in itertools.combinations(range(n), k):
            if any(set(m) <= set(J) for m in minimal):
                continue
            # No proper subset holds p, so p is in conv(V_J) only as a combination
            # of every point of an affinely independent V_J.
            coords = barycentric([V[j] for j in J], p)
            if coords is not None and all(x >= 0 for x in coords):
                minimal.append(J)
    return tuple(minimal)


def cov_v(config):
    """
    The inclusion-minimal index sets J with p in conv{v_j : j in J}; the full
    cov_V(p) is their up-closure.
    """
    return CovFamily(_minimal_cov(config.V, config.p), len(config.V))


# Winding numbers in the plane.


def _is_left(p, a, b):
    return (b[0] - a[0]) * (p[1] - a[1]) - (p[0] - a[0]) * (b[1] - a[1])


def on_segment(p, a, b):
    if _is_left(p, a, b) != 0:
        return False
    return all(min(a[i], b[i]) <= p[i] <= max(a[i], b[i]) for i in (0, 1))


def _rotate(q, direction):
    x, y = q
    if direction == "+x":
        return (x, y)
    if direction == "-x":
        return (-x, -y)
    if direction == "+y":
        return (y, -x)
    if direction == "-y":
        return (-y, x)
    raise ValueError("Unknown ray direction {!r}".format(direction))


def _crossing(p, a, b):
    # Half-open rule: vertices on the ray count as lying just above it.
    if a[1] <= p[1]:
        if b[1] > p[1] and _is_left(p, a, b) > 0:
            return 1
    elif b[1] <= p[1] and _is_left(p, a, b) < 0:
        return -1
    return 0


def winding_number_of_edges(edges, p, direction="+x"):
    p = make_point(p)
    _require_dimension([p], 2)
    total = 0
    for a, b in edges:
        if on_segment(p, a, b):
            raise OnImageError("Point {} lies on the segment {} - {}.".format(p, a, b))
        total += _crossing(
            _rotate(p, direction), _rotate(a, direction), _rotate(b, direction)
        )
    return total


def winding_number(loop, p, direction="+x"):
    loop = [make_point(q) for q in loop]
    _require_dimension(loop, 2)
    if not loop:
        return 0
    return winding_number_of_edges(pairwise(loop + loop[:1]), p, direction)


# Radial degree in 3-space.


def generic_direction(p, points, segments):
    """
    A direction from the moment curve (1, k, k^2) such that the ray from p meets no
    given point and no given segment.
    """
    rel_points = [_sub(q, p) for q in points]
    normals = []
    for a, b in segments:
        n = _cross(_sub(a, p), _sub(b, p))
        if any(n):
            normals.append(n)
    k = 1
    while True:
        d = (Fraction(1), Fraction(k), Fraction(k * k))
        if all(_dot(n, d) != 0 for n in normals) and all(
            any(_cross(q, d)) for q in rel_points
        ):
            return d
        k += 1


def signed_ray_crossings(triangles, p):
    """
    Degree of the radial projection from p of a closed oriented triangle surface,
    given as ordered point triples.
    """
    p = make_point(p)
    _require_dimension([p], 3)
    for tri in triangles:
        if point_in_hull(list(tri), p):
            raise OnImageError("Point {} lies on the triangle {}.".format(p, tri))
    points = {q for tri in triangles for q in tri}
    segments = {(tri[i], tri[(i + 1) % 3]) for tri in triangles for i in range(3)}
    d = generic_direction(p, points, segments)
    total = 0
    for a, b, c in triangles:
        A, B, C = _sub(a, p), _sub(b, p), _sub(c, p)
        det = _det3(A, B, C)
        if det == 0:
            continue
        if (
            _det3(d, B, C) / det > 0
            and _det3(A, d, C) / det > 0
            and _det3(A, B, d) / det > 0
        ):
            total += 1 if det > 0 else -1
    return total


def sphere_degree_from_point(surface, realization, p):
    if surface.dimension != 2:
        raise DimensionMismatchError("Radial degree needs a 2-dimensional surface.")
    points = {v: make_point(realization[v]) for v in surface.complex.vertices}
    _require_dimension(list(points.values()), 3)
    triangles = []
    for (a, b, c), sign in sorted(surface.signs.items()):
        if sign > 0:
            triangles.append((points[a], points[b], points[c]))
        else:
            triangles.append((points[a], points[c], points[b]))
    return signed_ray_crossings(triangles, p)


# Polytopes and hyperplane arrangements.


def hyperplane(points):
    d = len(points[0])
    if d == 2:
        a, b = points
        normal = (a[1] - b[1], b[0] - a[0])
    elif d == 3:
        a, b, c = points
        normal = _cross(_sub(b, a), _sub(c, a))
    else:
        raise DimensionMismatchError("Hyperplanes are supported in 2- and 3-space.")
    lead = next((x for x in normal if x != 0), None)
    if lead is None:
        return None
    normal = tuple(Fraction(x) / lead for x in normal)
    return normal, _dot(normal, points[0])


@dataclass(frozen=True)
class Facet:
    indices: tuple
    normal: tuple
    offset: Fraction


def polytope_facets(P):
    P = [make_point(v) for v in P]
    d = dimension_of(P)
    found = {}
    for subset in itertools.combinations(range(len(P)), d):
        plane = hyperplane([P[i] for i in subset])
        if plane is None:
            continue
        normal, offset = plane
        sides = [_dot(normal, v) - offset for v in P]
        if all(s >= 0 for s in sides) or all(s <= 0 for s in sides):
            on = tuple(i for i, s in enumerate(sides) if s == 0)
            found.setdefault(on, Facet(on, normal, offset))
    return [found[k] for k in sorted(found)]


def convex_position(P):
    P = [make_point(v) for v in P]
    d = dimension_of(P)
    if len(P) < d + 1:
        return False
    if not any(
        orientation_sign(list(s)) != 0 for s in itertools.combinations(P, d + 1)
    ):
        return False
    return not any(point_in_hull(P[:i] + P[i + 1 :], v) for i, v in enumerate(P))


def boundary_in_facets(simplices, labels, P):
    """
    The simplices whose label points do not lie in a common facet of P, i.e. the
    offenders against f_{L,P}(simplices) being contained in the boundary of P.
    """
    facets = [set(f.indices) for f in polytope_facets(P)]
    offenders = []
    for s in sorted(simplices):
        used = {labels[u] for u in s}
        if not any(used <= f for f in facets):
            offenders.append(s)
    return offenders


def facet_witness(P, facet):
    """
    A point in the relative interior of a facet that lies on no affine span of
    d-1 of the facet's vertices, so no degenerate or boundary piece of a simplex
    image inside the facet can hold it.
    """
    P = [make_point(v) for v in P]
    d = dimension_of(P)
    pts = [P[i] for i in facet.indices]
    spans = [s for s in itertools.combinations(pts, d - 1) if len(set(s)) == d - 1]
    for t in itertools.count(2):
        weights = [Fraction(t) ** j for j in range(len(pts))]
        total = sum(weights)
        x = tuple(sum(w * q[c] for w, q in zip(weights, pts)) / total for c in range(d))
        if d == 2:
            clear = all(x != a for (a,) in spans)
        else:
            clear = all(any(_cross(_sub(b, a), _sub(x, a))) for a, b in spans)
        if clear:
            return x


def signed_basis(n):
    """e_1, -e_1, e_2, -e_2, ... in n-space."""
    V = []
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        V.append(tuple(e))
        V.append(tuple(-x for x in e))
    return tuple(V)


def standard_simplex(m):
    origin = tuple(Fraction(0) for _ in range(m))
    units = [tuple(Fraction(int(i == j)) for j in range(m)) for i in range(m)]
    return (origin,) + tuple(units)


@dataclass(frozen=True)
class PebbleCell:
    point: tuple
    # (d+1)-index sets whose simplex contains the point
    footprint: tuple


@dataclass(frozen=True)
class PebbleSet:
    points: tuple
    footprints: tuple
    bound: int
    candidates: int

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _arrangement(V, d):
    planes = set()
    for subset in itertools.combinations(V, d):
        plane = hyperplane(list(subset))
        if plane is not None:
            planes.add(plane)
    return sorted(planes)


def _sample_plane(lines, lo, hi):
    """
    One point in every cell of a planar line arrangement that crosses the strip
    lo < x < hi. Lines are (a, b, c) meaning a*x + b*y = c.
    """
    breaks = {lo, hi}
    for (a1, b1, c1), (a2, b2, c2) in itertools.combinations(lines, 2):
        det = a1 * b2 - a2 * b1
        if det != 0:
            x = (c1 * b2 - c2 * b1) / det
            if lo < x < hi:
                breaks.add(x)
    for a, b, c in lines:
        if b == 0 and lo < c / a < hi:
            breaks.add(c / a)
    for x0, x1 in pairwise(sorted(breaks)):
        mid = (x0 + x1) / 2
        ys = sorted({(c - a * mid) / b for a, b, c in lines if b != 0})
        for y0, y1 in pairwise(ys):
            yield mid, (y0 + y1) / 2


def _sample_space(planes, V):
    xs = [v[0] for v in V]
    ys = [v[1] for v in V]
    lo, hi = min(xs), max(xs)
    breaks = set(xs)
    for triple in itertools.combinations(planes, 3):
        solution = _solve([n for n, _ in triple], [e for _, e in triple])
        if solution is not None and lo < solution[0] < hi:
            breaks.add(solution[0])
    for (a, b, c), e in planes:
        if b == 0 and c == 0 and lo < e / a < hi:
            breaks.add(e / a)
    for x0, x1 in pairwise(sorted(breaks)):
        mid = (x0 + x1) / 2
        lines = [(b, c, e - a * mid) for (a, b, c), e in planes if (b, c) != (0, 0)]
        for y, z in _sample_plane(lines, min(ys), max(ys)):
            yield mid, y, z


@functools.lru_cache(maxsize=64)
def arrangement_cells(V):
    """
    One generic representative per full-dimensional cell of the arrangement of all
    hyperplanes spanned by d points of V, restricted to the interior of conv(V).
    """
    d = dimension_of(V)
    planes = _arrangement(V, d)
    if d == 2:
        xs = [v[0] for v in V]
        lines = [(n[0], n[1], e) for n, e in planes]
        samples = _sample_plane(lines, min(xs), max(xs))
    else:
        samples = _sample_space(planes, V)
    seen = set()
    cells = []
    for point in samples:
        signature = tuple(_dot(n, point) > e for n, e in planes)
        if signature in seen:
            continue
        seen.add(signature)
        footprint = _minimal_cov(V, point)
        if footprint:
            cells.append(PebbleCell(point, footprint))
    logger.debug(
        "Arrangement of %d hyperplanes has %d interior cells", len(planes), len(cells)
    )
    return tuple(cells)


def _search_pebbles(cells, bound, budget):
    nodes = 0

    def extend(start, chosen, used):
        nonlocal nodes
        if len(chosen) >= bound:
            return chosen
        if len(chosen) + len(cells) - start < bound:
            return None
        for i in range(start, len(cells)):
            nodes += 1
            if nodes > budget:
                return None
            cell = cells[i]
            if used.isdisjoint(cell.footprint):
                found = extend(i + 1, chosen + [cell], used | set(cell.footprint))
                if found:
                    return found
        return None

    return extend(0, [], frozenset()) or []


def select_pebbles(cells, bound):
    """
    Greedy selection of pairwise cov-disjoint cells, smallest footprints first, with
    an exact bounded search as fallback when greedy falls short of the bound.
    """
    order = sorted(cells, key=lambda c: (len(c.footprint), c.point))
    chosen, used = [], set()
    for cell in order:
        if used.isdisjoint(cell.footprint):
            chosen.append(cell)
            used.update(cell.footprint)
    if len(chosen) >= bound:
        return chosen
    logger.debug("Greedy pebble selection found %d of %d", len(chosen), bound)
    found = _search_pebbles(order, bound, get_setting("KKM_PEBBLE_SEARCH_BUDGET"))
    return found if len(found) > len(chosen) else chosen


def pebbles_disjoint(footprints):
    return all(
        set(a).isdisjoint(b) for a, b in itertools.combinations(footprints, 2)
    )


def pebble_set(V, d=None):
    """
    Interior points of conv(V), pairwise lying in no common simplex spanned by d+1
    points of V, certified to number at least |V| - d.
    """
    V = tuple(make_point(v) for v in V)
    if d is not None and dimension_of(V) != d:
        raise DimensionMismatchError("Points are not in {}-space.".format(d))
    d = dimension_of(V)
    if d not in (2, 3):
        raise DimensionMismatchError("Pebble sets are built in 2- and 3-space only.")
    if len(V) < d + 1:
        raise DimensionMismatchError("Need at least {} points.".format(d + 1))
    bound = len(V) - d
    cells = arrangement_cells(V)
    chosen = get_hook("KKM_PEBBLE_SELECTOR")(cells, bound)
    footprints = [c.footprint for c in chosen]
    if len(chosen) < bound or not pebbles_disjoint(footprints):
        raise PebbleConstructionError(
            "Could not certify a pebble set of size {}.".format(bound),
            report={
                "bound": bound,
                "candidates": len(cells),
                "best": len(chosen),
            },
        )
    chosen = sorted(chosen, key=lambda c: c.point)
    return PebbleSet(
        tuple(c.point for c in chosen),
        tuple(c.footprint for c in chosen),
        bound,
        len(cells),
    )
