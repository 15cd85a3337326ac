"""
Verifiers for the KKM- and Sperner-type theorems on concrete inputs.

Every verifier first itemizes its hypotheses and only then searches for the
conclusion, so a report distinguishes an instance where the theorem says nothing
from one where it was exercised. A search that comes back empty although every
hypothesis holds is reported as a falsification.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import (
    bloch_boundary,
    induced_boundary_orientation,
    manifold_boundary,
    orient,
)
from .covers import (
    cover_degree,
    cover_from_labeling,
    extension_check,
    h_class,
    p_in_complement,
)
from .exceptions import (
    ComplexError,
    DimensionMismatchError,
    HypothesisError,
    OnImageError,
    UnsupportedClassError,
)
from .geometry import (
    PointConfig,
    boundary_in_facets,
    centroid,
    convex_position,
    cov_v,
    dimension_of,
    make_point,
    orientation_sign,
    pebble_set,
    point_in_hull,
    signed_basis,
)
from .labelings import (
    boundary_degree,
    dg2,
    f_LP_image,
    fully_labeled,
    signed_preimage_count,
)
from .utils import ASSERTED, SATISFIED, VIOLATED, HypothesisItem

logger = logging.getLogger(__name__)

VERIFIED = "verified"
NO_CLAIM = "no-claim"
HYPOTHESIS_VIOLATED = "hypothesis-violated"
FALSIFIED = "falsified"


@dataclass
class TheoremReport:
    theorem: str
    hypotheses: list
    verdict: str
    witness: object = None
    counts: dict = field(default_factory=dict)

    @property
    def hypotheses_hold(self):
        return all(item.holds for item in self.hypotheses)

    def violations(self):
        return [item for item in self.hypotheses if item.status == VIOLATED]

    def as_dict(self):
        return {
            "theorem": self.theorem,
            "verdict": self.verdict,
            "hypotheses": [
                {"name": i.name, "status": i.status, "evidence": i.evidence}
                for i in self.hypotheses
            ],
            "witness": self.witness,
            "counts": self.counts,
        }


def _conclude(theorem, items, claim_items, search):
    """
    items are structural hypotheses; claim_items are the nonvanishing conditions
    whose failure leaves the theorem silent rather than misapplied.
    """
    hypotheses = list(items) + list(claim_items)
    if not all(item.holds for item in items):
        return TheoremReport(theorem, hypotheses, HYPOTHESIS_VIOLATED)
    if not all(item.holds for item in claim_items):
        return TheoremReport(theorem, hypotheses, NO_CLAIM)
    witness, counts, sound = search()
    if not sound:
        logger.error(
            "%s: every hypothesis holds but the conclusion fails: %s", theorem, counts
        )
        return TheoremReport(theorem, hypotheses, FALSIFIED, witness, counts)
    return TheoremReport(theorem, hypotheses, VERIFIED, witness, counts)


def _first(simplices):
    return simplices[0] if simplices else None


def ep_pair(X, A, n=None, asserted=False):
    """
    Detects (X, A) as an oriented manifold with boundary A, which is EP_n for n the
    dimension of A; otherwise membership is taken from the caller. Every map of A
    into a sphere above its own dimension extends, so a larger n always fails.
    """
    n = A.dimension if n is None else n
    try:
        structural = (
            X.is_pure
            and X.dimension == A.dimension + 1
            and manifold_boundary(X).as_complex().simplices == A.simplices
        )
        oriented = orient(X) if structural else None
    except ComplexError as exc:
        structural, oriented = False, None
        logger.debug("Pair is not an oriented manifold with boundary: %s", exc)
    if n > A.dimension:
        index = {"required": n, "boundary_dimension": A.dimension}
        return HypothesisItem("ep-pair", VIOLATED, index), None
    if structural and n == A.dimension:
        item = HypothesisItem("ep-pair", SATISFIED, "oriented manifold with boundary")
        return item, induced_boundary_orientation(oriented)
    if asserted:
        return HypothesisItem("ep-pair", ASSERTED, "declared by the caller"), None
    return HypothesisItem("ep-pair", VIOLATED, "not detected and not declared"), None


def _oriented_subspace(A, oriented):
    if oriented is not None:
        return oriented
    return orient(A)


def _degree_item(name, compute, asserted):
    try:
        value = compute()
    except (UnsupportedClassError, ComplexError) as exc:
        if asserted:
            evidence = "asserted, not computed: {}".format(exc)
            return HypothesisItem(name, ASSERTED, evidence)
        return HypothesisItem(name, VIOLATED, str(exc))
    except OnImageError as exc:
        return HypothesisItem(name, VIOLATED, "point on image: {}".format(exc))
    except HypothesisError as exc:
        return HypothesisItem(name, VIOLATED, str(exc))
    return HypothesisItem.check(name, value != 0, {"value": value})


def kkm_verify(S, F, A=None, ep_asserted=False, degree_asserted=False):
    A = S.ambient if A is None else A
    ext = extension_check(S, F, A)
    ep_item, oriented = ep_pair(F.ambient, A, S.m - 1, ep_asserted)
    common = S.common_simplices()
    items = [
        HypothesisItem.check("extension", ext.ok, ext.violations),
        HypothesisItem.check("boundary-intersection-empty", not common, common[:10]),
        ep_item,
    ]
    claims = []
    if not common:
        claims.append(
            _degree_item(
                "degree-nonzero",
                lambda: cover_degree(S, _oriented_subspace(A, oriented)).value,
                degree_asserted,
            )
        )

    def search():
        found = F.common_simplices()
        return {"simplex": _first(found)}, {"common": len(found)}, bool(found)

    return _conclude("kkm", items, claims, search)


def generalized_kkm_verify(S, F, A, V, p, ep_asserted=False, degree_asserted=False):
    A = S.ambient if A is None else A
    ext = extension_check(S, F, A)
    ep_item, oriented = ep_pair(F.ambient, A, dimension_of(V) - 1, ep_asserted)
    complement = p_in_complement(S, V, p)
    items = [
        HypothesisItem.check("extension", ext.ok, ext.violations),
        HypothesisItem.check("p-in-complement", complement.ok, complement.violations),
        ep_item,
    ]
    claims = []
    if complement:
        claims.append(
            _degree_item(
                "h-nonzero",
                lambda: h_class(S, _oriented_subspace(A, oriented), V, p),
                degree_asserted,
            )
        )

    def search():
        for J in cov_v(PointConfig(V, p)):
            found = F.common_simplices(J)
            if found:
                return {"J": J, "simplex": found[0]}, {}, True
        return None, {}, False

    return _conclude("generalized-kkm", items, claims, search)


def generalized_sperner_verify(K, Q, L, V, p, ep_asserted=False, degree_asserted=False):
    if L.m + 1 != len(V):
        raise DimensionMismatchError(
            "Labels 0..{} need {} points, {} given.".format(L.m, L.m + 1, len(V))
        )
    family = cov_v(PointConfig(V, p))
    labeled = [(J, fully_labeled(Q, L, J).containing) for J in family]
    offenders = [{"J": J, "simplex": found[0]} for J, found in labeled if found]
    ep_item, oriented = ep_pair(K, Q, dimension_of(V) - 1, ep_asserted)
    items = [
        HypothesisItem.check("q-avoids-cov-labels", not offenders, offenders),
        ep_item,
    ]
    claims = []
    if not offenders:
        claims.append(
            _degree_item(
                "h-nonzero",
                lambda: h_class(
                    cover_from_labeling(Q, L), _oriented_subspace(Q, oriented), V, p
                ),
                degree_asserted,
            )
        )

    def search():
        for J in family:
            found = fully_labeled(K, L, J).containing
            if found:
                return {"J": J, "simplex": found[0]}, {}, True
        return None, {}, False

    return _conclude("generalized-sperner", items, claims, search)


def deg_lower_bound_verify(M, L):
    n = M.dimension
    items = [HypothesisItem.check("labels-0-to-n", L.m == n, {"m": L.m, "n": n})]
    degree = None
    try:
        degree = boundary_degree(M, L).value
    except HypothesisError as exc:
        items.extend(
            exc.items or [HypothesisItem("boundary-degree", VIOLATED, str(exc))]
        )
    except (UnsupportedClassError, ComplexError) as exc:
        items.append(HypothesisItem("boundary-degree", VIOLATED, str(exc)))

    def search():
        exact = fully_labeled(M.complex, L, range(n + 1)).exact
        full = [s for s in exact if len(s) == n + 1]
        signed = signed_preimage_count(M, L, range(n + 1))
        counts = {
            "degree": degree,
            "fully_labeled": len(full),
            "signed": signed,
            "bound": abs(degree),
        }
        sound = len(full) >= abs(degree) and signed == degree
        return {"simplices": full}, counts, sound

    return _conclude("degree-lower-bound", items, [], search)


def _polytope_items(K, L, P, boundary_faces):
    d = K.dimension
    items = [
        HypothesisItem.check(
            "dimension", dimension_of(P) == d and d in (2, 3), {"d": d}
        ),
        HypothesisItem.check(
            "labels-index-polytope", L.m == len(P) - 1, {"m": L.m, "vertices": len(P)}
        ),
        HypothesisItem.check("convex-position", convex_position(P)),
    ]
    if all(item.holds for item in items):
        offenders = boundary_in_facets(boundary_faces, L, P)
        items.append(
            HypothesisItem.check("boundary-in-facets", not offenders, offenders)
        )
    return items


def _preimages(K, L, P, x):
    found = []
    for s in K.top_simplices:
        image = f_LP_image(s, L, P)
        if point_in_hull(image, x):
            found.append(s)
    return found


def polytope_sperner_verify(M, L, P):
    P = [make_point(v) for v in P]
    d = M.dimension
    bd = manifold_boundary(M.complex)
    items = [HypothesisItem.check("has-boundary", bool(bd), {"faces": len(bd)})]
    items.extend(_polytope_items(M.complex, L, P, bd.faces))
    degree = None
    if all(item.holds for item in items):
        boundary = induced_boundary_orientation(M)
        cover = cover_from_labeling(boundary.complex, L)
        degree = h_class(cover, boundary, P, centroid(P))

    def search():
        pebbles = pebble_set(P)
        per_pebble = []
        for x in pebbles:
            found = _preimages(M.complex, L, P, x)
            signed = sum(
                M.signs[s] * orientation_sign(f_LP_image(s, L, P)) for s in found
            )
            per_pebble.append({"point": x, "signed": signed, "simplices": found})
        full = [s for s in M.top_simplices if len(L.label_set(s)) == d + 1]
        bound = (len(P) - d) * abs(degree)
        counts = {
            "degree": degree,
            "fully_labeled": len(full),
            "bound": bound,
            "pebbles": len(pebbles),
        }
        sound = len(full) >= bound and all(e["signed"] == degree for e in per_pebble)
        return {"pebbles": per_pebble}, counts, sound

    return _conclude("polytope-sperner", items, [], search)


def bloch_sperner_verify(K, L, P):
    P = [make_point(v) for v in P]
    d = K.dimension
    items = _polytope_items(K, L, P, bloch_boundary(K).faces)
    claims = []
    parity = None
    if all(item.holds for item in items):
        parity = dg2(K, L, P)
        claims.append(HypothesisItem.check("dg2-odd", parity == 1, {"dg2": parity}))

    def search():
        pebbles = pebble_set(P)
        per_pebble = []
        for x in pebbles:
            found = _preimages(K, L, P, x)
            per_pebble.append({"point": x, "count": len(found), "simplices": found})
        full = [s for s in K.top_simplices if len(L.label_set(s)) == d + 1]
        counts = {"dg2": parity, "fully_labeled": len(full), "bound": len(P) - d}
        sound = len(full) >= len(P) - d and all(e["count"] % 2 == 1 for e in per_pebble)
        return {"pebbles": per_pebble}, counts, sound

    return _conclude("bloch-sperner", items, claims, search)


def tucker_bacon_verify(S, F, A=None, ep_asserted=False, degree_asserted=False):
    """
    Set 2k of the covers stands for +(k+1) and set 2k+1 for -(k+1); V is
    e_1, -e_1, e_2, -e_2, ... and p is the origin.
    """
    A = S.ambient if A is None else A
    if S.size % 2:
        raise ValueError("Tucker-Bacon covers need an even number of sets.")
    n = S.size // 2
    V = signed_basis(n)
    origin = tuple(Fraction(0) for _ in range(n))
    ext = extension_check(S, F, A)
    ep_item, oriented = ep_pair(F.ambient, A, n - 1, ep_asserted)
    antipodal = [k + 1 for k in range(n) if S.common_simplices((2 * k, 2 * k + 1))]
    items = [
        HypothesisItem.check("extension", ext.ok, ext.violations),
        HypothesisItem.check("antipodal-disjoint", not antipodal, antipodal),
        ep_item,
    ]
    claims = []
    if not antipodal:
        claims.append(
            _degree_item(
                "h-nonzero",
                lambda: h_class(S, _oriented_subspace(A, oriented), V, origin),
                degree_asserted,
            )
        )

    def search():
        for k in range(n):
            found = F.common_simplices((2 * k, 2 * k + 1))
            if found:
                return {"index": k + 1, "simplex": found[0]}, {}, True
        return None, {}, False

    return _conclude("tucker-bacon", items, claims, search)


def classical_kkm_verify(F, context):
    """
    F covers a subdivided m-simplex so that every simplex carried by the face with
    corners J lies in a set indexed by J; then all sets share a point.
    """
    offenders = []
    for s in sorted(F.ambient.simplices):
        carrier = {c for u in s for c in context.carriers[u]}
        if not carrier & F.membership(s):
            offenders.append(s)
    items = [
        HypothesisItem.check("size", F.size == context.m + 1, {"sets": F.size}),
        HypothesisItem.check("kkm-covering", not offenders, offenders[:10]),
    ]

    def search():
        found = F.common_simplices()
        return {"simplex": _first(found)}, {"common": len(found)}, bool(found)

    return _conclude("classical-kkm", items, [], search)
