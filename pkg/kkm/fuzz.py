"""
Seeded instance families for the theorem verifiers. Every instance draws from its
own random generator derived from (seed, family, index), so results do not depend
on the number of workers or the order instances run in.
"""
import functools
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import build_complex
from .conf import get_setting
from .fixtures import (
    HEPTAGON_LABELS,
    HEXAGON,
    UNIT_SQUARE,
    boundary_covers,
    disk_boundary,
    disk_labeling,
    grow_cover,
    ring_disk,
    sperner_simplex,
    tucker_labels,
    winding_labels,
)
from .labelings import Labeling
from .theorems import (
    FALSIFIED,
    bloch_sperner_verify,
    deg_lower_bound_verify,
    generalized_kkm_verify,
    generalized_sperner_verify,
    kkm_verify,
    polytope_sperner_verify,
    tucker_bacon_verify,
)
from .utils import instance_random

logger = logging.getLogger(__name__)

cached_disk = functools.lru_cache(maxsize=None)(ring_disk)


@functools.lru_cache(maxsize=None)
def _sperner_triangle():
    return sperner_simplex(2, 2)


def sperner_instance(rng):
    M, context = _sperner_triangle()
    return deg_lower_bound_verify(M, context.random_labeling(rng))


def degbound_instance(rng):
    M = cached_disk(18, 2)
    boundary = winding_labels(18, rng.randint(-3, 3))
    return deg_lower_bound_verify(M, disk_labeling(M, 18, boundary, 2, rng))


def polytope_instance(rng):
    M = cached_disk(12, 2)
    boundary = winding_labels(12, 1, q=len(HEXAGON))
    L = disk_labeling(M, 12, boundary, len(HEXAGON) - 1, rng)
    return polytope_sperner_verify(M, L, HEXAGON)


def bloch_complex(rng, n=16):
    """
    A labeled disk over the square with pairs of extra triangles glued along some
    boundary edges, which makes those edges non-manifold.
    """
    M = cached_disk(n, 1)
    L = disk_labeling(M, n, winding_labels(n, rng.randint(-2, 2), q=4), 3, rng)
    triangles = list(M.complex.maximal_simplices)
    labels = list(L.labels)
    for i in rng.sample(range(n - 1), rng.randint(1, 3)):
        for _ in range(2):
            w = len(labels)
            triangles.append((i, i + 1, w))
            labels.append(labels[rng.choice((i, i + 1))])
    return build_complex(triangles), Labeling(tuple(labels), 3)


def bloch_instance(rng):
    K, L = bloch_complex(rng)
    return bloch_sperner_verify(K, L, UNIT_SQUARE)


def kkm_instance(rng):
    M = cached_disk(9, 2)
    k = rng.choice((-3, -2, -1, 1, 2, 3))
    L = disk_labeling(M, 9, winding_labels(9, k), 2, rng)
    S, F, A = boundary_covers(M, L)
    F = grow_cover(F, A, rng)
    return kkm_verify(S, F, A)


def chamber_point(rng):
    """A point of the open triangle v0 v1 v3 of the unit square off its diagonals."""
    while True:
        i, j = rng.randint(1, 48), rng.randint(1, 48)
        if i + j < 50 and i != j:
            return (Fraction(i, 50), Fraction(j, 50))


def gkkm_instance(rng):
    M = cached_disk(7, 2)
    L = disk_labeling(M, 7, HEPTAGON_LABELS, 3, rng)
    S, F, A = boundary_covers(M, L)
    F = grow_cover(F, A, rng)
    return generalized_kkm_verify(S, F, A, UNIT_SQUARE, chamber_point(rng))


def gsperner_instance(rng):
    M = cached_disk(7, 2)
    L = disk_labeling(M, 7, HEPTAGON_LABELS, 3, rng)
    return generalized_sperner_verify(
        M.complex, disk_boundary(M), L, UNIT_SQUARE, chamber_point(rng)
    )


def tucker_instance(rng):
    M = cached_disk(8, 2)
    L = disk_labeling(M, 8, tucker_labels(8), 3, rng)
    S, F, A = boundary_covers(M, L)
    F = grow_cover(F, A, rng)
    return tucker_bacon_verify(S, F, A)


FAMILIES = {
    "degbound": degbound_instance,
    "sperner": sperner_instance,
    "polytope": polytope_instance,
    "bloch": bloch_instance,
    "kkm": kkm_instance,
    "gkkm": gkkm_instance,
    "gsperner": gsperner_instance,
    "tucker": tucker_instance,
}


def run_instance(family, seed, index):
    return FAMILIES[family](instance_random(seed, family, index))


@dataclass
class FuzzSummary:
    seed: object
    count: int
    verdicts: dict = field(default_factory=dict)
    falsified: list = field(default_factory=list)

    def as_dict(self):
        return {
            "seed": self.seed,
            "count": self.count,
            "verdicts": self.verdicts,
            "falsified": self.falsified,
        }


def run_fuzz(families=None, count=None, seed=None, workers=None):
    families = list(families or FAMILIES)
    unknown = [f for f in families if f not in FAMILIES]
    if unknown:
        raise ValueError("Unknown fuzz family {!r}.".format(unknown[0]))
    count = get_setting("KKM_FUZZ_COUNT") if count is None else count
    seed = get_setting("KKM_SEED") if seed is None else seed
    workers = get_setting("KKM_FUZZ_WORKERS") if workers is None else workers
    jobs = [(family, index) for family in families for index in range(count)]

    def work(job):
        return run_instance(job[0], seed, job[1])

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(work, jobs))
    else:
        reports = [work(job) for job in jobs]
    summary = FuzzSummary(seed, count)
    for family in families:
        tally = Counter(r.verdict for (f, _), r in zip(jobs, reports) if f == family)
        summary.verdicts[family] = dict(sorted(tally.items()))
    for (family, index), report in zip(jobs, reports):
        if report.verdict == FALSIFIED:
            logger.error("Falsified instance %s #%d: %s", family, index, report.counts)
            summary.falsified.append({"family": family, "index": index})
    return summary
