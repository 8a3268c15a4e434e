import os

import pytest

os.environ["TAULAB_VALIDATE_MODULES"] = "1"

from taulab.algebra import kupisch_algebra  # noqa: E402
from taulab.algebra.builder import build_algebra  # noqa: E402
from taulab.algebra.kupisch import KupischSeries  # noqa: E402
from taulab.algebra.quiver import AlgebraPresentation, Arrow, Quiver  # noqa: E402
from taulab.config import get_settings  # noqa: E402
from taulab.core.field import PrimeField  # noqa: E402
from taulab.repositories import algebra_repository  # noqa: E402

P = 1009


@pytest.fixture(autouse=True)
def settings(monkeypatch):
    """Fresh settings per test; modules are checked against the relations on construction."""
    for key in list(os.environ):
        if key.startswith("TAULAB_") and key != "TAULAB_VALIDATE_MODULES":
            monkeypatch.delenv(key)
    monkeypatch.setenv("TAULAB_VALIDATE_MODULES", "1")
    get_settings.cache_clear()
    yield get_settings()
    get_settings.cache_clear()


@pytest.fixture(scope="session")
def field():
    return PrimeField(P)


@pytest.fixture(scope="session")
def linear_2221(field):
    return kupisch_algebra([2, 2, 2, 1], field=field)


@pytest.fixture(scope="session")
def cyclic_334(field):
    return kupisch_algebra([3, 3, 4], cyclic=True, field=field)


@pytest.fixture(scope="session")
def cyclic_22(field):
    return kupisch_algebra([2, 2], cyclic=True, field=field)


@pytest.fixture(scope="session")
def semisimple(field):
    return kupisch_algebra([1], field=field)


@pytest.fixture(scope="session")
def a2(field):
    return algebra_repository.builtin_algebra("a2_path", P)


@pytest.fixture(scope="session")
def commutative_square(field):
    return algebra_repository.builtin_algebra("commutative_square", P)


@pytest.fixture(scope="session")
def gentle(field):
    return algebra_repository.builtin_algebra("gentle_2ig", P)


@pytest.fixture(scope="session")
def a3_source(field):
    """1 <- 0 -> 2 without relations: no projective-injective module."""
    quiver = Quiver(3, (Arrow("a", 0, 1), Arrow("b", 0, 2)))
    return build_algebra(AlgebraPresentation(quiver, label="a3_source"), field)


@pytest.fixture
def algebra_file(tmp_path):
    """Write a Kupisch series to an algebra file and return its path."""

    def write(lengths, cyclic=False, name=None):
        spec = algebra_repository.kupisch_file(KupischSeries(tuple(lengths), cyclic))
        kind = "cyclic" if cyclic else "linear"
        path = tmp_path / f"{name or kind + '_' + '_'.join(map(str, lengths))}.json"
        return str(algebra_repository.save(path, spec))

    return write
