"""Request-level operations shared by the CLI and the HTTP service.

Every function takes a plain dict (parsed JSON) and returns a plain
dict; both front ends render results through ``encode`` so their output
is byte-identical. Field order in responses is fixed by construction.
"""

from __future__ import annotations

import json

from . import garside, surface
from .errors import ParseError
from .ginzburg import verify_relations_k0
from .mutation_maps import phi, phi_inverse, standardize
from .presentations import coxeter_presentation_of, presentation_of
from .qp import QP, is_canonical_form, qp_mutate
from .quivers import Quiver, mutate, mutation_class
from .weyl import DynkinType
from .words import parse_word


def encode(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def _quiver(body: dict) -> Quiver:
    if "quiver" not in body:
        raise ParseError("missing field: quiver")
    return Quiver.from_json(body["quiver"])


def _vertex(body: dict) -> int:
    if "vertex" not in body:
        raise ParseError("missing field: vertex")
    try:
        return int(body["vertex"])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad vertex: {body['vertex']!r}") from exc


def _word(value) -> tuple[int, ...]:
    if isinstance(value, str):
        return parse_word(value)
    if isinstance(value, list) and all(isinstance(x, int) and x != 0 for x in value):
        return tuple(value)
    raise ParseError(f"bad word: {value!r}")


def op_mutate(body: dict) -> dict:
    quiver = _quiver(body)
    return {"quiver": mutate(quiver, _vertex(body)).to_json()}


def op_class(body: dict) -> dict:
    quiver = _quiver(body)
    budget = int(body["budget"]) if "budget" in body else None
    workers = int(body.get("workers", 1))
    cls = mutation_class(quiver, budget=budget, workers=workers)
    return {
        "count": len(cls),
        "members": [
            {"quiver": m.quiver.to_json(), "path": list(m.path)} for m in cls.members
        ],
    }


def op_presentation(body: dict) -> dict:
    quiver = _quiver(body)
    if body.get("coxeter"):
        return coxeter_presentation_of(quiver).to_json()
    return presentation_of(quiver).to_json()


def op_phi(body: dict) -> dict:
    quiver = _quiver(body)
    k = _vertex(body)
    hom = phi_inverse(quiver, k) if body.get("inverse") else phi(quiver, k)
    return {
        "images": {str(i): list(w) for i, w in sorted(hom.images.items())},
        "quiver": mutate(quiver, k).to_json(),
    }


def op_wordeq(body: dict) -> dict:
    if "w1" not in body or "w2" not in body:
        raise ParseError("missing fields: w1, w2")
    w1 = _word(body["w1"])
    w2 = _word(body["w2"])
    if "quiver" in body:
        std = standardize(_quiver(body))
        dtype = std.dtype
        w1 = std.to_weyl_word(w1)
        w2 = std.to_weyl_word(w2)
    elif "type" in body:
        dtype = DynkinType.parse(body["type"])
    else:
        raise ParseError("missing field: type or quiver")
    equal = garside.equal(dtype, w1, w2)
    return {"equal": equal, "normal_form_trivial": equal}


def op_normal_form(body: dict) -> dict:
    if "type" not in body or "word" not in body:
        raise ParseError("missing fields: type, word")
    dtype = DynkinType.parse(body["type"])
    nf = garside.normal_form(dtype, _word(body["word"]))
    return nf.to_json()


def _triangulation(body: dict) -> surface.Triangulation:
    if "triangulation" not in body:
        raise ParseError("missing field: triangulation")
    return surface.Triangulation.from_json(body["triangulation"])


def op_surface_flip(body: dict) -> dict:
    tri = _triangulation(body)
    if "arc" not in body:
        raise ParseError("missing field: arc")
    arc = surface.arc_from_json(body["arc"])
    replacement = surface.flip_replacement(tri, arc)
    return {
        "triangulation": tri.replace(arc, replacement).to_json(),
        "replacement": replacement.to_json(),
    }


def op_surface_quiver(body: dict) -> dict:
    tri = _triangulation(body)
    labels = tri.labels()
    return {
        "quiver": surface.quiver_of(tri, labels).to_json(),
        "arcs": [arc.to_json() for arc in tri.arcs],
    }


def op_surface_initial(body: dict) -> dict:
    if "type" not in body:
        raise ParseError("missing field: type")
    tri = surface.initial_triangulation(DynkinType.parse(body["type"]))
    return {"triangulation": tri.to_json()}


def op_surface_enumerate(body: dict) -> dict:
    if "type" not in body:
        raise ParseError("missing field: type")
    tris = surface.enumerate_triangulations(DynkinType.parse(body["type"]))
    return {"count": len(tris), "triangulations": [t.to_json() for t in tris]}


def op_qp_mutate(body: dict) -> dict:
    if "qp" not in body:
        raise ParseError("missing field: qp")
    qp = QP.from_json(body["qp"])
    return {"qp": qp_mutate(qp, _vertex(body)).to_json()}


def op_qp_check(body: dict) -> dict:
    if "qp" not in body:
        raise ParseError("missing field: qp")
    return is_canonical_form(QP.from_json(body["qp"])).to_json()


def op_k0_verify(body: dict) -> dict:
    return verify_relations_k0(_quiver(body)).to_json()


ROUTES = {
    "/api/mutate": op_mutate,
    "/api/class": op_class,
    "/api/presentation": op_presentation,
    "/api/phi": op_phi,
    "/api/wordeq": op_wordeq,
    "/api/normalform": op_normal_form,
    "/api/surface/flip": op_surface_flip,
    "/api/surface/quiver": op_surface_quiver,
    "/api/surface/initial": op_surface_initial,
    "/api/qp/mutate": op_qp_mutate,
    "/api/qp/check": op_qp_check,
    "/api/k0/verify": op_k0_verify,
}
