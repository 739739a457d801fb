import pytest

from supersingular.field import auto_ideal, build_tower


@pytest.fixture(scope="session")
def tower_cache():
    cache = {}

    def get(q, p=None, d=None):
        key = (q, tuple(p) if p else None, d)
        if key not in cache:
            cache[key] = build_tower(q, p if p else auto_ideal(q, d))
        return cache[key]

    return get
