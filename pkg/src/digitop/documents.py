"""JSON image documents.

An image document looks like::

    {
      "name": "interval02",
      "dimension": 1,
      "points": [[0], [1], [2]],
      "adjacency": {"kind": "cu", "u": 1}
    }

``adjacency.kind`` is ``"cu"`` (with ``u``), ``"np"`` (with ``u`` and a list
of factor documents under ``factors``; the point list must be exactly the
product of the factor point sets) or ``"edges"`` (index pairs into ``points``
as written).  Points are put in canonical order on load and written in
canonical order, so ``serialize(parse(text))`` canonicalizes.
"""
from __future__ import annotations

import itertools
import json
import re
from typing import Optional

from .lattice import CU, NP, DigitalImage, Explicit, build_image


class DocumentError(ValueError):
    pass


def image_to_dict(X: DigitalImage, name: Optional[str] = None) -> dict:
    spec = X.adjacency
    if isinstance(spec, CU):
        adj = {"kind": "cu", "u": spec.u}
    elif isinstance(spec, NP):
        adj = {"kind": "np", "u": spec.u, "factors": [image_to_dict(F) for F in spec.factors]}
    else:
        adj = {"kind": "edges", "edges": [list(e) for e in X.edges()]}
    doc = {}
    if name is not None:
        doc["name"] = name
    doc["dimension"] = X.dimension
    doc["points"] = [list(p) for p in X.points]
    doc["adjacency"] = adj
    return doc


_NUMBER_ARRAY = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")
_ROW_ARRAY = re.compile(r"\[\s*(\[[^\[\]]*\](?:,\s*\[[^\[\]]*\])*)\s*\]")


def serialize(X: DigitalImage, name: Optional[str] = None) -> str:
    text = json.dumps(image_to_dict(X, name), indent=2)
    text = _NUMBER_ARRAY.sub(lambda m: "[" + ", ".join(s.strip() for s in m.group(1).split(",")) + "]", text)
    text = _ROW_ARRAY.sub(lambda m: "[" + re.sub(r",\s*\[", ", [", m.group(1)) + "]", text)
    return text + "\n"


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise DocumentError(f"{what} must be an integer")
    return v


def image_from_dict(doc) -> DigitalImage:
    if not isinstance(doc, dict):
        raise DocumentError("an image document must be an object")
    for key in ("dimension", "points", "adjacency"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    n = _int(doc["dimension"], "dimension")
    pts = doc["points"]
    if not isinstance(pts, list) or not pts:
        raise DocumentError("points must be a nonempty array")
    points = []
    for p in pts:
        if not isinstance(p, list) or len(p) != n:
            raise DocumentError(f"point {p!r} does not have {n} integer coordinates")
        points.append(tuple(_int(c, "coordinate") for c in p))
    if len(set(points)) != len(points):
        raise DocumentError("duplicate points")
    adj = doc["adjacency"]
    if not isinstance(adj, dict) or "kind" not in adj:
        raise DocumentError("adjacency must be an object with a kind")
    kind = adj["kind"]
    try:
        if kind == "cu":
            return build_image(points, CU(_int(adj.get("u"), "u")))
        if kind == "np":
            factors = [image_from_dict(f) for f in adj.get("factors") or []]
            if not factors:
                raise DocumentError("np adjacency needs factors")
            expected = {sum(c, ()) for c in itertools.product(*(F.points for F in factors))}
            if set(points) != expected:
                raise DocumentError("points are not the product of the declared factors")
            return build_image(points, NP(_int(adj.get("u"), "u"), tuple(factors)))
        if kind == "edges":
            order = sorted(range(len(points)), key=lambda i: points[i])
            canon = {old: new for new, old in enumerate(order)}
            edges = []
            for e in adj.get("edges", []):
                if not isinstance(e, list) or len(e) != 2:
                    raise DocumentError(f"bad edge {e!r}")
                p, q = (_int(v, "edge index") for v in e)
                if not (0 <= p < len(points) and 0 <= q < len(points)) or p == q:
                    raise DocumentError(f"bad edge {e!r}")
                edges.append((canon[p], canon[q]))
            return build_image(points, Explicit(edges))
    except DocumentError:
        raise
    except (ValueError, KeyError) as exc:
        raise DocumentError(str(exc)) from exc
    raise DocumentError(f"unknown adjacency kind {kind!r}")


def parse_image_document(text: str) -> DigitalImage:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    return image_from_dict(doc)


def document_name(text: str) -> Optional[str]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        return None
    return doc.get("name") if isinstance(doc, dict) else None
