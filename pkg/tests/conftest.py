import pytest

from finlat import build_lattice, make_field


@pytest.fixture(scope="session")
def lattice_cache():
    """Session-wide cache of built lattices keyed by (p, n, modulus, m)."""
    cache = {}

    def get(p, n=1, m=2, modulus=None):
        key = (p, n, modulus, m)
        if key not in cache:
            cache[key] = build_lattice(make_field(p, n, modulus), m)
        return cache[key]

    return get
