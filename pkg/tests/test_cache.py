import json

import pytest

from bcross import cache
from bcross.complexes import enumerate_facets
from bcross.polygon import Mode, ground_set


def test_roundtrip(tmp_path):
    g = ground_set(Mode.B, 3, 1)
    cx = enumerate_facets(g)
    path = cache.cache_facets(cx, tmp_path)
    assert path.name == "B_3_1.facets.json"
    data = json.loads(path.read_text())
    assert data["schema"] == 1 and data["vertices"] == g.labels()
    assert cache.load_cached(g, tmp_path).facets == cx.facets


def test_env_override(cache_env):
    assert cache.cache_dir() == cache_env
    assert str(cache.cache_dir("elsewhere")) == "elsewhere"


def _boom(*a, **kw):
    raise AssertionError("should have been served from the cache")


def test_reuse_skips_enumeration(tmp_path, monkeypatch):
    g = ground_set(Mode.B, 4, 2)
    first = cache.facets_cached(g, tmp_path)
    monkeypatch.setattr(cache, "enumerate_facets", _boom)
    assert cache.facets_cached(g, tmp_path).facets == first.facets


@pytest.mark.parametrize("mutate", [
    lambda d: d.update(schema=2),
    lambda d: d.update(k=2),
    lambda d: d["vertices"].reverse(),
    lambda d: d["facets"].append([0, 99]),
    lambda d: d["facets"].__setitem__(0, [0]),
    lambda d: d["facets"].__setitem__(0, [0, 3]),
])
def test_bad_cache_is_recomputed(tmp_path, mutate, caplog):
    g = ground_set(Mode.B, 3, 1)
    cx = enumerate_facets(g)
    path = cache.cache_facets(cx, tmp_path)
    data = json.loads(path.read_text())
    mutate(data)
    path.write_text(json.dumps(data))
    assert cache.load_cached(g, tmp_path) is None
    assert caplog.records
    assert cache.facets_cached(g, tmp_path).facets == cx.facets
    assert json.loads(path.read_text())["schema"] == 1


def test_garbage_file(tmp_path):
    g = ground_set(Mode.B, 3, 1)
    cache.cache_path(g, tmp_path).write_text("{not json")
    assert cache.load_cached(g, tmp_path) is None
