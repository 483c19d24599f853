"""Shared fixtures: anchor curves and the deterministic test corpus.

The corpus is every valid imaginary model over F_2 and F_3 plus the first
curves (in enumeration order) over F_4 and F_5; the acceptance sweep over
the *full* F_4/F_5 census has its own session fixture so unit-test runs
stay quick.
"""

from __future__ import annotations

import itertools

import pytest

from jacobicode.curves import CurveModel, validate_curve
from jacobicode.explore import SearchSpace, enumerate_curves
from jacobicode.fields import make_field

CORPUS_SLICE = {2: None, 3: None, 4: 12, 5: 12}


@pytest.fixture(scope="session")
def f2():
    return make_field(2, 1)


@pytest.fixture(scope="session")
def f4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def curve_e1(f2) -> CurveModel:
    """y^2 + y = x^5 over F_2."""
    return validate_curve(f2, (1,), (0, 0, 0, 0, 0, 1))


@pytest.fixture(scope="session")
def curve_e2(f2) -> CurveModel:
    """y^2 + y = x^5 + x^3 over F_2."""
    return validate_curve(f2, (1,), (0, 0, 0, 1, 0, 1))


def field_for(q: int):
    for p in (2, 3, 5, 7, 11, 13):
        a = 0
        n = q
        while n % p == 0:
            n //= p
            a += 1
        if n == 1:
            return make_field(p, a)
    raise ValueError(q)


def corpus_for(q: int) -> list[CurveModel]:
    space = SearchSpace(field=field_for(q))
    limit = CORPUS_SLICE[q]
    stream = enumerate_curves(space)
    if limit is None:
        return list(stream)
    return list(itertools.islice(stream, limit))


@pytest.fixture(scope="session")
def corpus() -> dict[int, list[CurveModel]]:
    return {q: corpus_for(q) for q in (2, 3, 4, 5)}
