"""
JSON file formats. Rationals are written as "numerator/denominator" strings (plain
integers are accepted on input); floating-point numbers are rejected.
"""
import dataclasses
import json
import os
from fractions import Fraction

from django.core.serializers.json import DjangoJSONEncoder

from .complexes import (
    OrientedComplex,
    build_complex,
    make_simplex,
    manifold_boundary,
    maximal_of,
)
from .covers import CLOSED, SEMANTICS, STAR, make_cover
from .exceptions import ComplexError, InputError
from .labelings import Labeling


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def format_point(point):
    return [format_rational(c) for c in point]


def parse_rational(value, path=None, field=None):
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError("{!r} is not an exact rational.".format(value), path, field)
    try:
        return Fraction(value.strip() if isinstance(value, str) else value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError("{!r} is not an exact rational.".format(value), path, field)


def parse_point(value, path=None, field=None):
    if isinstance(value, str):
        value = value.split(",")
    if not isinstance(value, list) or not value:
        raise InputError("expected a list of coordinates.", path, field)
    return tuple(parse_rational(c, path, field) for c in value)


def load_json(path):
    try:
        with open(path) as fp:
            return json.load(fp)
    except OSError as exc:
        raise InputError(exc.strerror or str(exc), path)
    except json.JSONDecodeError as exc:
        raise InputError(
            "line {} column {}: {}".format(exc.lineno, exc.colno, exc.msg), path
        )


def _require(data, key, kind, path):
    if not isinstance(data, dict):
        raise InputError("expected a JSON object.", path)
    if key not in data:
        raise InputError("missing.", path, key)
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InputError("has the wrong type.", path, key)
    return value


def _simplices(value, path, field):
    if not isinstance(value, list):
        raise InputError("expected a list of simplices.", path, field)
    found = []
    for s in value:
        if not isinstance(s, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in s
        ):
            raise InputError(
                "simplex {!r} is not a list of integers.".format(s), path, field
            )
        try:
            found.append(make_simplex(s))
        except ComplexError as exc:
            raise InputError(str(exc), path, field)
    return found


def complex_from_data(data, path=None):
    """
    Returns (complex, orientation signs or None, carriers or None). The optional
    "orientation" lists one sign per maximal simplex, in the listed order.
    """
    count = _require(data, "vertices", int, path)
    listed = _require(data, "maximal_simplices", list, path)
    listed = _simplices(listed, path, "maximal_simplices")
    try:
        K = build_complex(listed, count)
    except ComplexError as exc:
        raise InputError(str(exc), path, "maximal_simplices")
    signs = None
    if "orientation" in data:
        orientation = data["orientation"]
        if not isinstance(orientation, list) or len(orientation) != len(listed):
            raise InputError("needs one sign per maximal simplex.", path, "orientation")
        if any(s not in (1, -1) or isinstance(s, bool) for s in orientation):
            raise InputError("signs must be 1 or -1.", path, "orientation")
        signs = dict(zip(listed, orientation))
    carriers = None
    if "carriers" in data:
        carriers = _simplices(data["carriers"], path, "carriers")
        if len(carriers) != count:
            raise InputError("needs one carrier per vertex.", path, "carriers")
    return K, signs, carriers


def oriented_from_data(data, path=None):
    K, signs, _ = complex_from_data(data, path)
    if signs is None:
        raise InputError("an oriented complex is required.", path, "orientation")
    try:
        return OrientedComplex(K, signs)
    except ComplexError as exc:
        raise InputError(str(exc), path, "orientation")


def complex_to_data(K, oriented=None, carriers=None):
    maximal = sorted(K.maximal_simplices, key=lambda s: (len(s), s))
    data = {"vertices": K.vertex_count, "maximal_simplices": [list(s) for s in maximal]}
    if oriented is not None:
        data["orientation"] = [oriented.signs[s] for s in maximal]
    if carriers is not None:
        data["carriers"] = [list(c) for c in carriers]
    return data


def labeling_from_data(data, path=None):
    m = _require(data, "m", int, path)
    labels = _require(data, "labels", list, path)
    try:
        return Labeling(tuple(labels), m)
    except ValueError as exc:
        raise InputError(str(exc), path, "labels")


def labeling_to_data(L):
    return {"m": L.m, "labels": list(L.labels)}


def config_from_data(data, path=None):
    V = [parse_point(v, path, "V") for v in _require(data, "V", list, path)]
    p = parse_point(data["p"], path, "p") if data.get("p") is not None else None
    loop = None
    if data.get("loop") is not None:
        loop = [parse_point(v, path, "loop") for v in data["loop"]]
    dims = {len(v) for v in V + ([p] if p else []) + (loop or [])}
    if len(dims) > 1:
        raise InputError("points do not share a dimension.", path, "V")
    return V, p, loop


def config_to_data(V, p=None, loop=None):
    data = {"V": [format_point(v) for v in V]}
    if p is not None:
        data["p"] = format_point(p)
    if loop is not None:
        data["loop"] = [format_point(v) for v in loop]
    return data


def _narrow(K, subcomplex, path):
    if subcomplex is None:
        return K
    try:
        if subcomplex == "boundary":
            return manifold_boundary(K).as_complex()
        return K.subcomplex(_simplices(subcomplex, path, "subcomplex"))
    except ComplexError as exc:
        raise InputError(str(exc), path, "subcomplex")


def cover_from_data(data, path=None):
    """
    "ambient" is a complex object or a path relative to the cover file, optionally
    narrowed by "subcomplex" (the string "boundary" or a list of simplices). Each
    set lists generating simplices: open stars of the listed simplices for star
    covers, the spanned subcomplex for closed covers.
    """
    ambient = data.get("ambient") if isinstance(data, dict) else None
    if isinstance(ambient, str):
        base = os.path.dirname(path) if path else ""
        ambient_path = os.path.join(base, ambient)
        K, _, _ = complex_from_data(load_json(ambient_path), ambient_path)
    elif isinstance(ambient, dict):
        K, _, _ = complex_from_data(ambient, path)
    else:
        raise InputError("expected a complex or a path.", path, "ambient")
    K = _narrow(K, data.get("subcomplex"), path)
    semantics = data.get("semantics", STAR)
    if semantics not in SEMANTICS:
        raise InputError("must be 'star' or 'closed'.", path, "semantics")
    sets = [
        _simplices(s, path, "sets") for s in _require(data, "sets", list, path)
    ]
    try:
        return make_cover(K, sets, semantics)
    except ComplexError as exc:
        raise InputError(str(exc), path, "sets")


def _generators(cover, cells):
    if cover.semantics == CLOSED:
        return sorted(maximal_of(cells))
    # minimal elements of an upward closed set
    return sorted(
        s for s in cells if not any(s[:i] + s[i + 1 :] in cells for i in range(len(s)))
    )


def cover_to_data(cover, ambient, subcomplex=None):
    """ambient is either a file path or None to inline the complex."""
    data = {
        "ambient": ambient if ambient is not None else complex_to_data(cover.ambient),
        "semantics": cover.semantics,
        "sets": [[list(s) for s in _generators(cover, cells)] for cells in cover.sets],
    }
    if subcomplex is not None:
        data["subcomplex"] = subcomplex
    return data


class ReportEncoder(DjangoJSONEncoder):
    """
    JSONEncoder subclass that knows how to encode exact rationals, sets and report
    dataclasses on top of what DjangoJSONEncoder handles.
    """

    def default(self, o):
        if isinstance(o, Fraction):
            return format_rational(o)
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        if hasattr(o, "as_dict"):
            return o.as_dict()
        if dataclasses.is_dataclass(o) and not isinstance(o, type):
            return {f.name: getattr(o, f.name) for f in dataclasses.fields(o)}
        return super().default(o)


def dumps(report, indent=None):
    return json.dumps(report, cls=ReportEncoder, indent=indent, sort_keys=True)
