"""
Vertex labelings of simplicial complexes: the Sperner rules, the induced maps f_L
into the boundary of a simplex and f_{L,P} into a polytope, fully labeled simplices,
and the degrees attached to a labeling.
"""
import itertools
import logging
from dataclasses import dataclass, field, replace

from .complexes import (
    OrientedComplex,
    bloch_boundary,
    build_complex,
    induced_boundary_orientation,
    manifold_boundary,
    permutation_sign,
)
from .exceptions import (
    ComplexError,
    DimensionMismatchError,
    FalsificationAlarm,
    HypothesisError,
    UnsupportedClassError,
)
from .geometry import (
    boundary_in_facets,
    convex_position,
    facet_witness,
    make_point,
    point_in_hull,
    polytope_facets,
)
from .utils import HypothesisItem, Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Labeling:
    labels: tuple
    m: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.m < 0:
            raise ValueError("m must be non-negative")
        for v, label in enumerate(self.labels):
            if isinstance(label, bool) or not isinstance(label, int):
                raise ValueError("Label of vertex {} is not an integer.".format(v))
            if not 0 <= label <= self.m:
                raise ValueError(
                    "Label {} of vertex {} is outside 0..{}.".format(label, v, self.m)
                )

    def __getitem__(self, vertex):
        return self.labels[vertex]

    def __len__(self):
        return len(self.labels)

    def label_set(self, simplex):
        return frozenset(self.labels[u] for u in simplex)

    def vertices_labeled(self, label):
        return [v for v, lab in enumerate(self.labels) if lab == label]

    def attach(self, K):
        if len(self.labels) < K.vertex_count:
            raise DimensionMismatchError(
                "Labeling covers {} vertices, the complex has {}.".format(
                    len(self.labels), K.vertex_count
                )
            )
        return self


@dataclass(frozen=True)
class SpernerContext:
    """
    A subdivision of the m-simplex Delta^m with, for every vertex, the face of
    Delta^m (as a tuple of corner indices) whose relative interior holds it.
    """

    m: int
    carriers: tuple
    corners: tuple = field(init=False)

    def __post_init__(self):
        corners = []
        for i in range(self.m + 1):
            found = [v for v, c in enumerate(self.carriers) if tuple(c) == (i,)]
            if len(found) != 1:
                raise ComplexError(
                    "Corner {} must be carried by exactly one vertex.".format(i)
                )
            corners.append(found[0])
        object.__setattr__(self, "corners", tuple(corners))

    @classmethod
    def from_subdivision(cls, subdivision, m):
        return cls(m, subdivision.provenance)

    def canonical_labeling(self):
        return Labeling(tuple(min(c) for c in self.carriers), self.m)

    def random_labeling(self, rng):
        return Labeling(tuple(rng.choice(c) for c in self.carriers), self.m)


def validate_sperner(context, L):
    violations = []
    for i, v in enumerate(context.corners):
        if L[v] != i:
            violations.append(
                {"rule": "corner", "vertex": v, "label": L[v], "expected": i}
            )
    for v, carrier in enumerate(context.carriers):
        if L[v] not in carrier:
            violations.append(
                {
                    "rule": "carrier",
                    "vertex": v,
                    "label": L[v],
                    "carrier": list(carrier),
                }
            )
    return Verdict.from_violations(violations)


def max_label_check(K, L):
    if K.dimension < L.m:
        return Verdict(True)
    offenders = [
        s for s in K.simplices_of_dimension(L.m) if len(L.label_set(s)) == L.m + 1
    ]
    return Verdict.from_violations(offenders)


@dataclass(frozen=True)
class LabelMatches:
    containing: list
    exact: list

    def __len__(self):
        return len(self.containing)


def fully_labeled(K, L, J):
    J = frozenset(J)
    containing, exact = [], []
    for s in sorted(K.simplices, key=lambda s: (len(s), s)):
        labels = L.label_set(s)
        if J <= labels:
            containing.append(s)
            if labels == J:
                exact.append(s)
    return LabelMatches(containing, exact)


def signed_preimage_count(K, L, target):
    """
    Sum of sign(sigma) * sign(label permutation) over the top simplices of an
    oriented complex whose label set is exactly the target face.
    """
    target = frozenset(target)
    total = 0
    for s, sign in K.signs.items():
        labels = [L[u] for u in s]
        if frozenset(labels) == target and len(labels) == len(target):
            total += sign * permutation_sign(labels)
    return total


@dataclass(frozen=True)
class DegreeReport:
    value: int
    target_used: tuple
    cross_checked: list = field(default_factory=list)
    # one value per connected component, filled only when requested
    components: tuple = ()


def _require_closed_target(K, L, per_component=False):
    n = K.dimension
    if n not in (1, 2):
        raise UnsupportedClassError(
            "Degrees are computed for 1- and 2-dimensional complexes, not {}.".format(n)
        )
    if L.m != n + 1:
        raise UnsupportedClassError(
            "A labeling of an {}-complex into 0..{} has no degree representation; "
            "it needs m = {}.".format(n, L.m, n + 1)
        )
    L.attach(K.complex)
    items = []
    chain = K.boundary_chain()
    items.append(HypothesisItem.check("closed", not chain, sorted(chain)[:10]))
    check = max_label_check(K.complex, L)
    items.append(
        HypothesisItem.check("no-full-label-simplex", check.ok, check.violations)
    )
    if not per_component:
        parts = len(K.complex.components)
        items.append(
            HypothesisItem.check("connected", parts == 1, {"components": parts})
        )
    failed = [item for item in items if not item.holds]
    if failed:
        raise HypothesisError(
            "Labeling degree hypotheses fail: {}.".format(
                ", ".join(item.name for item in failed)
            ),
            items,
        )


def degree_labeling(K, L, target=None, per_component=False):
    """
    Simplicial degree of f_L from the closed oriented K to the boundary of
    Delta^{n+1}, counted over one target face and cross-checked over the others.
    A disconnected K is refused unless per_component is set; the value is then the
    sum of the component degrees, which are reported alongside.
    """
    _require_closed_target(K, L, per_component)
    report = _face_degrees(K, L, target)
    if not per_component:
        return report
    values = tuple(_face_degrees(part, L, target).value for part in K.components())
    return replace(report, components=values)


def _face_degrees(K, L, target):
    n = K.dimension
    faces = list(itertools.combinations(range(n + 2), n + 1))
    if target is None:
        target = faces[-1]
    target = tuple(sorted(target))
    if target not in faces:
        raise ValueError(
            "{} is not an {}-face of the target simplex.".format(target, n)
        )
    values = {}
    for face in faces:
        (omitted,) = set(range(n + 2)) - set(face)
        values[face] = (-1) ** omitted * signed_preimage_count(K, L, face)
    value = values[target]
    mismatched = [face for face, v in values.items() if v != value]
    if mismatched:
        logger.error("Degree differs across target faces: %s", values)
        raise FalsificationAlarm(
            "Degree differs across target faces {} and {}.".format(
                target, mismatched[0]
            )
        )
    return DegreeReport(
        value, target, [(face, values[face]) for face in faces if face != target]
    )


def boundary_degree(M, L, target=None, per_component=False):
    return degree_labeling(induced_boundary_orientation(M), L, target, per_component)


def f_LP_image(simplex, L, P):
    if any(L[u] >= len(P) for u in simplex):
        raise ValueError(
            "Simplex {} has a label with no polytope vertex.".format(simplex)
        )
    return [make_point(P[L[u]]) for u in simplex]


def dg2(K, L, P):
    """
    Degree mod 2 of f_{L,P} on Bloch's boundary Bd K: the parity of the number of
    boundary simplices whose image holds a generic point of a facet of P.
    """
    P = [make_point(v) for v in P]
    bd = bloch_boundary(K)
    items = [HypothesisItem.check("convex-position", convex_position(P))]
    offenders = boundary_in_facets(bd.faces, L, P)
    items.append(HypothesisItem.check("boundary-in-facets", not offenders, offenders))
    if not all(item.holds for item in items):
        raise HypothesisError(
            "f_{L,P} does not map Bd K into the polytope boundary.", items
        )
    witness = facet_witness(P, polytope_facets(P)[0])
    count = sum(1 for f in bd.faces if point_in_hull(f_LP_image(f, L, P), witness))
    logger.debug(
        "dg2 witness %s met by %d of %d boundary simplices", witness, count, len(bd)
    )
    return count % 2


def construct_winding_labeling(k, m=2):
    """
    A labeled cycle whose labeling has degree k: 3*max(|k|, 1) vertices labeled
    0, 1, 2 repeating (reversed for negative k, and missing label 2 for k = 0).
    """
    if m != 2:
        raise UnsupportedClassError("Winding labelings map circles into 0..2 only.")
    n = 3 * max(abs(k), 1)
    K = build_complex([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    signs = {(i, i + 1): 1 for i in range(n - 1)}
    signs[(0, n - 1)] = -1
    if k > 0:
        labels = tuple(i % 3 for i in range(n))
    elif k < 0:
        labels = tuple(-i % 3 for i in range(n))
    else:
        labels = (0, 1, 1)
    return OrientedComplex(K, signs), Labeling(labels, m)


def hopf_hypotheses(K, L):
    """
    The checkable hypotheses on a labeling of a 3-sphere into 0..3 whose class lives
    in pi_3(S^2): K a closed pure 3-pseudomanifold, no simplex with four labels and
    an empty total intersection of the star cover.
    """
    from .covers import cover_from_labeling

    items = []
    closed = K.is_pure and K.dimension == 3 and not manifold_boundary(K)
    pseudo = closed and all(n == 2 for n in K.incidence.values())
    items.append(
        HypothesisItem.check(
            "closed-3-pseudomanifold", pseudo, {"dimension": K.dimension}
        )
    )
    check = max_label_check(K, L) if L.m == 3 else Verdict(False, ["m is not 3"])
    items.append(
        HypothesisItem.check("no-four-label-simplex", check.ok, check.violations)
    )
    common = cover_from_labeling(K, L).common_simplices()
    items.append(
        HypothesisItem.check("empty-total-intersection", not common, common[:10])
    )
    return items
