"""
Batch jobs behind the management commands: one handler per command, each turning
a JobSpec into an exit status and a JSON-ready report.
"""
import logging
import os
from dataclasses import dataclass, field

from .complexes import (
    OrientedComplex,
    barycentric_subdivision,
    bloch_boundary,
    manifold_boundary,
    orient,
)
from .covers import (
    cover_degree,
    extension_check,
    image_polyhedron,
    nerve,
    p_in_complement,
)
from .exceptions import (
    FalsificationAlarm,
    HypothesisError,
    InputError,
    KKMError,
    PebbleConstructionError,
)
from .fuzz import run_fuzz
from .geometry import PointConfig, cov_v, pebble_set, winding_number
from .labelings import (
    SpernerContext,
    boundary_degree,
    degree_labeling,
    dg2,
    fully_labeled,
    hopf_hypotheses,
    validate_sperner,
)
from .serializers import (
    complex_from_data,
    complex_to_data,
    config_from_data,
    cover_from_data,
    format_point,
    labeling_from_data,
    load_json,
    parse_point,
)
from .theorems import (
    FALSIFIED,
    HYPOTHESIS_VIOLATED,
    bloch_sperner_verify,
    classical_kkm_verify,
    deg_lower_bound_verify,
    generalized_kkm_verify,
    generalized_sperner_verify,
    kkm_verify,
    polytope_sperner_verify,
    tucker_bacon_verify,
)

logger = logging.getLogger(__name__)

OK = 0
INPUT_ERROR = 1
HYPOTHESIS_FAILURE = 2
FALSIFICATION = 3


@dataclass
class JobSpec:
    command: str
    inputs: dict = field(default_factory=dict)
    output: str = None
    options: dict = field(default_factory=dict)

    def validate(self):
        if self.command not in HANDLERS:
            raise InputError("unknown command {!r}.".format(self.command))
        for name, path in self.inputs.items():
            if path is not None and not os.path.exists(path):
                raise InputError("no such file.", path, name)

    def path(self, name):
        path = self.inputs.get(name)
        if path is None:
            raise InputError("--{} is required.".format(name.replace("_", "-")))
        return path

    def option(self, name, default=None):
        value = self.options.get(name)
        return default if value is None else value


HANDLERS = {}


def handler(name):
    def register(func):
        HANDLERS[name] = func
        return func

    return register


def run(job):
    """Runs a job and returns (exit status, report)."""
    try:
        job.validate()
        return HANDLERS[job.command](job)
    except InputError as exc:
        return INPUT_ERROR, {"error": str(exc)}
    except HypothesisError as exc:
        return HYPOTHESIS_FAILURE, {
            "error": str(exc),
            "hypotheses": [
                {"name": i.name, "status": i.status, "evidence": i.evidence}
                for i in exc.items
            ],
        }
    except FalsificationAlarm as exc:
        logger.error("%s: %s", job.command, exc)
        return FALSIFICATION, {"error": str(exc)}
    except PebbleConstructionError as exc:
        return INPUT_ERROR, {"error": str(exc), "report": exc.report}
    except (KKMError, ValueError) as exc:
        return INPUT_ERROR, {"error": str(exc)}


def _theorem_status(report):
    if report.verdict == FALSIFIED:
        return FALSIFICATION
    if report.verdict == HYPOTHESIS_VIOLATED:
        return HYPOTHESIS_FAILURE
    return OK


def _complex(job, name="complex"):
    path = job.path(name)
    return complex_from_data(load_json(path), path)


def _oriented(job, name="complex"):
    K, signs, _ = _complex(job, name)
    if signs is not None:
        return OrientedComplex(K, signs)
    return orient(K, job.option("seed_sign", 1))


def _labeling(job, name="labels"):
    path = job.path(name)
    return labeling_from_data(load_json(path), path)


def _config(job, name="config"):
    path = job.path(name)
    V, p, loop = config_from_data(load_json(path), path)
    if job.option("p"):
        p = parse_point(job.option("p"), field="p")
    return V, p, loop


def _cover(job, name="cover"):
    path = job.path(name)
    return cover_from_data(load_json(path), path)


def _indices(value, name):
    try:
        return tuple(int(x) for x in str(value).split(",") if x.strip())
    except ValueError:
        raise InputError("expected comma-separated integers.", field=name)


def _degree_report(report):
    return {
        "value": report.value,
        "target_used": report.target_used,
        "cross_checked": [{"target": t, "value": v} for t, v in report.cross_checked],
        "components": list(report.components),
    }


@handler("build")
def build_job(job):
    K, signs, carriers = _complex(job)
    oriented = None
    if job.option("orient"):
        oriented = orient(K, job.option("seed_sign", 1))
    elif signs is not None:
        oriented = OrientedComplex(K, signs)
    data = complex_to_data(K, oriented, carriers)
    data["dimension"] = K.dimension
    data["simplex_count"] = len(K.simplices)
    return OK, data


@handler("subdivide")
def subdivide_job(job):
    K, signs, _ = _complex(job)
    subdivision = barycentric_subdivision(K, job.option("depth", 1), signs)
    return OK, complex_to_data(
        subdivision.complex, subdivision.oriented, subdivision.provenance
    )


@handler("sperner_check")
def sperner_check_job(job):
    K, _, carriers = _complex(job)
    if carriers is None:
        raise InputError(
            "a Sperner check needs carriers.", job.path("complex"), "carriers"
        )
    L = _labeling(job)
    verdict = validate_sperner(SpernerContext(L.m, carriers), L)
    return OK, {"valid": verdict.ok, "violations": verdict.violations}


def _degree_options(job):
    target = job.option("target")
    return {
        "target": _indices(target, "target") if target else None,
        "per_component": job.option("per_component", False),
    }


@handler("degree")
def degree_job(job):
    report = degree_labeling(_oriented(job), _labeling(job), **_degree_options(job))
    return OK, _degree_report(report)


@handler("boundary_degree")
def boundary_degree_job(job):
    report = boundary_degree(_oriented(job), _labeling(job), **_degree_options(job))
    return OK, _degree_report(report)


@handler("winding")
def winding_job(job):
    V, p, loop = _config(job)
    if p is None:
        raise InputError("a point is required.", field="p")
    if loop is None:
        raise InputError("the config has no loop.", job.path("config"), "loop")
    direction = job.option("direction", "+x")
    return OK, {
        "p": format_point(p),
        "winding_number": winding_number(loop, p, direction),
    }


@handler("cov")
def cov_job(job):
    V, p, _ = _config(job)
    if p is None:
        raise InputError("a point is required.", field="p")
    family = cov_v(PointConfig(V, p))
    return OK, {
        "p": format_point(p),
        "minimal_sets": list(family),
        "up_closure_size": len(family.up_closure()),
    }


@handler("complement_check")
def complement_check_job(job):
    c = _cover(job)
    V, p, _ = _config(job)
    verdict = p_in_complement(c, V, p)
    return OK, {
        "in_complement": verdict.ok,
        "violating_sets": verdict.violations,
        "on_image": image_polyhedron(c, V).contains(p),
    }


@handler("nerve")
def nerve_job(job):
    N = nerve(_cover(job))
    return OK, {
        "size": N.size,
        "dimension": N.dimension,
        "maximal_simplices": N.maximal,
        "has_top_cell": N.has_top_cell,
    }


@handler("cover_degree")
def cover_degree_job(job):
    c = _cover(job)
    if job.inputs.get("complex"):
        M = _oriented(job)
    else:
        M = orient(c.ambient, job.option("seed_sign", 1))
    report = cover_degree(c, M, **_degree_options(job))
    return OK, _degree_report(report)


@handler("extension_check")
def extension_check_job(job):
    verdict = extension_check(_cover(job), _cover(job, "extension"))
    return OK, {"extends": verdict.ok, "diffs": verdict.violations}


@handler("fully_labeled")
def fully_labeled_job(job):
    K, _, _ = _complex(job)
    J = _indices(job.option("label_set", ""), "label_set")
    matches = fully_labeled(K, _labeling(job), J)
    return OK, {
        "count": len(matches.containing),
        "containing": matches.containing,
        "exact": matches.exact,
    }


@handler("pebble")
def pebble_job(job):
    V, _, _ = _config(job, "V")
    pebbles = pebble_set(V)
    return OK, {
        "bound": pebbles.bound,
        "candidates": pebbles.candidates,
        "pebbles": [
            {"point": format_point(x), "cov": list(footprint)}
            for x, footprint in zip(pebbles.points, pebbles.footprints)
        ],
    }


@handler("bloch")
def bloch_job(job):
    K, _, _ = _complex(job)
    bd = bloch_boundary(K)
    return OK, {
        "faces": sorted(bd.faces),
        "parity": [{"face": f, "incidence": n} for f, n in sorted(bd.parity.items())],
        "manifold_boundary": sorted(manifold_boundary(K).faces),
    }


@handler("dg2")
def dg2_job(job):
    K, _, _ = _complex(job)
    P, _, _ = _config(job, "polytope")
    return OK, {"dg2": dg2(K, _labeling(job), P)}


def _theorem(report):
    return _theorem_status(report), report.as_dict()


@handler("verify_kkm")
def verify_kkm_job(job):
    return _theorem(
        kkm_verify(
            _cover(job, "boundary_cover"),
            _cover(job),
            ep_asserted=job.option("ep_asserted", False),
            degree_asserted=job.option("degree_asserted", False),
        )
    )


@handler("verify_gkkm")
def verify_gkkm_job(job):
    V, p, _ = _config(job)
    return _theorem(
        generalized_kkm_verify(
            _cover(job, "boundary_cover"),
            _cover(job),
            None,
            V,
            p,
            ep_asserted=job.option("ep_asserted", False),
            degree_asserted=job.option("degree_asserted", False),
        )
    )


@handler("verify_sperner")
def verify_sperner_job(job):
    K, _, _ = _complex(job)
    V, p, _ = _config(job)
    return _theorem(
        generalized_sperner_verify(
            K,
            manifold_boundary(K).as_complex(),
            _labeling(job),
            V,
            p,
            ep_asserted=job.option("ep_asserted", False),
            degree_asserted=job.option("degree_asserted", False),
        )
    )


@handler("verify_degbound")
def verify_degbound_job(job):
    return _theorem(deg_lower_bound_verify(_oriented(job), _labeling(job)))


@handler("verify_polytope")
def verify_polytope_job(job):
    P, _, _ = _config(job, "polytope")
    return _theorem(polytope_sperner_verify(_oriented(job), _labeling(job), P))


@handler("verify_bloch")
def verify_bloch_job(job):
    K, _, _ = _complex(job)
    P, _, _ = _config(job, "polytope")
    return _theorem(bloch_sperner_verify(K, _labeling(job), P))


@handler("verify_tucker")
def verify_tucker_job(job):
    return _theorem(
        tucker_bacon_verify(
            _cover(job, "boundary_cover"),
            _cover(job),
            ep_asserted=job.option("ep_asserted", False),
            degree_asserted=job.option("degree_asserted", False),
        )
    )


@handler("verify_classical_kkm")
def verify_classical_kkm_job(job):
    _, _, carriers = _complex(job)
    if carriers is None:
        raise InputError("carriers are required.", job.path("complex"), "carriers")
    c = _cover(job)
    return _theorem(classical_kkm_verify(c, SpernerContext(c.m, carriers)))


@handler("hopf_check")
def hopf_check_job(job):
    K, _, _ = _complex(job)
    items = hopf_hypotheses(K, _labeling(job))
    status = OK if all(i.holds for i in items) else HYPOTHESIS_FAILURE
    return status, {
        "hypotheses": [
            {"name": i.name, "status": i.status, "evidence": i.evidence} for i in items
        ]
    }


@handler("fuzz")
def fuzz_job(job):
    families = job.option("families")
    summary = run_fuzz(
        families=families.split(",") if families else None,
        count=job.option("fuzz_count"),
        seed=job.option("seed"),
        workers=job.option("workers"),
    )
    return (FALSIFICATION if summary.falsified else OK), summary.as_dict()
