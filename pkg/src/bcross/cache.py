"""On-disk facet cache: ``<dir>/<mode>_<n>_<k>.facets.json``."""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Optional

from .complexes import (
    DEFAULT_MAX_NODES,
    SimplicialComplex,
    _canonical,
    crossing_structure,
    enumerate_facets,
    face_from_indices,
)
from .polygon import GroundSet

SCHEMA = 1
log = logging.getLogger(__name__)


def cache_dir(explicit: Optional[str] = None) -> Path:
    return Path(explicit or os.environ.get("BCROSS_CACHE") or "cache")


def cache_path(ground: GroundSet, directory) -> Path:
    return Path(directory) / f"{ground.mode.value}_{ground.n}_{ground.k}.facets.json"


def complex_to_json(cx: SimplicialComplex) -> dict:
    g = cx.ground
    return {
        "schema": SCHEMA,
        "mode": g.mode.value,
        "n": g.n,
        "k": g.k,
        "vertices": g.labels(),
        "facets": [list(f) for f in cx.facet_indices()],
    }


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def cache_facets(cx: SimplicialComplex, directory) -> Path:
    path = cache_path(cx.ground, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(dumps(complex_to_json(cx)))
    tmp.replace(path)
    return path


def load_cached(ground: GroundSet, directory, spot_checks: int = 5) -> Optional[SimplicialComplex]:
    path = cache_path(ground, directory)
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
        if data.get("schema") != SCHEMA:
            log.warning("%s: schema %r, expected %d; recomputing", path, data.get("schema"), SCHEMA)
            return None
        if (data["mode"], data["n"], data["k"]) != (ground.mode.value, ground.n, ground.k):
            log.warning("%s: parameters do not match; recomputing", path)
            return None
        if data["vertices"] != ground.labels():
            log.warning("%s: vertex order differs; recomputing", path)
            return None
        m = len(ground)
        facets = []
        for f in data["facets"]:
            if any(not (0 <= i < m) for i in f) or len(set(f)) != len(f):
                raise ValueError(f"bad facet {f}")
            facets.append(face_from_indices(f))
        size = ground.expected_facet_size
        if any(f.bit_count() != size for f in facets):
            raise ValueError("cached facets are not pure of the expected size")
        st = crossing_structure(ground)
        for f in facets[:spot_checks]:
            if not st.is_face_atoms(st.atoms_of(f)):
                raise ValueError("cached facet is not a face")
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        log.warning("%s: corrupt cache (%s); recomputing", path, exc)
        return None
    return SimplicialComplex(_canonical(facets), m, ground)


def facets_cached(ground: GroundSet, directory=None, use_cache: bool = True,
                  max_nodes: int = DEFAULT_MAX_NODES) -> SimplicialComplex:
    """Load the facet list from the cache, or enumerate and store it."""
    if use_cache and directory is not None:
        cx = load_cached(ground, directory)
        if cx is not None:
            return cx
    cx = enumerate_facets(ground, max_nodes=max_nodes)
    if use_cache and directory is not None:
        cache_facets(cx, directory)
    return cx
