import pytest

from powerlaw_blasius import make_parameter, solve


@pytest.fixture(scope="session")
def solve_cached():
    """Memoized transform solves; several test modules share the slow runs."""
    cache = {}

    def get(p, **kwargs):
        key = (p, tuple(sorted(kwargs.items())))
        if key not in cache:
            cache[key] = solve(make_parameter(p), **kwargs)
        return cache[key]

    return get
