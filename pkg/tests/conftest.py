import pytest

from quiverhecke import QuiverSpec, preset_half_integral, preset_klr, preset_nilhecke, preset_skew
from quiverhecke.localize import Localization


@pytest.fixture(scope="session")
def nilhecke_a2():
    return preset_nilhecke("A2").build()


@pytest.fixture(scope="session")
def nilhecke_b2():
    return preset_nilhecke("B2").build()


@pytest.fixture(scope="session")
def skew_a2():
    return preset_skew("A2").build()


@pytest.fixture(scope="session")
def skew_b2():
    return preset_skew("B2").build()


@pytest.fixture(scope="session")
def half_integral():
    return preset_half_integral().build()


@pytest.fixture(scope="session")
def arrow_quiver():
    """ ``1 → 2`` with dimension ``(1, 1)``. """
    return QuiverSpec(vertices=[1, 2], arrows=[(1, 2)], dimension={1: 1, 2: 1})


@pytest.fixture(scope="session")
def arrow_quiver_21():
    return QuiverSpec(vertices=[1, 2], arrows=[(1, 2)], dimension={1: 2, 2: 1})


@pytest.fixture(scope="session")
def jordan_quiver():
    return QuiverSpec(vertices=["q"], arrows=[("q", "q")], dimension={"q": 2})


@pytest.fixture(scope="session")
def arrow_klr(arrow_quiver):
    return preset_klr(arrow_quiver).build()


@pytest.fixture(scope="session")
def jordan_klr(jordan_quiver):
    return preset_klr(jordan_quiver).build()


@pytest.fixture(params=["nilhecke_a2", "skew_a2", "half_integral", "nilhecke_b2", "skew_b2"])
def any_ctx(request):
    return request.getfixturevalue(request.param)


@pytest.fixture
def localization(any_ctx):
    return Localization(any_ctx)
