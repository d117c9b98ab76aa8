import pytest

from qplasma.params import EvalSettings


@pytest.fixture(scope="session")
def rational():
    return EvalSettings(backend="rational")


@pytest.fixture(scope="session")
def quadrature():
    return EvalSettings(backend="quadrature")


@pytest.fixture(scope="session")
def zgrid():
    from qplasma.verify import upper_half_plane_grid

    return upper_half_plane_grid()


@pytest.fixture(scope="session")
def grid27():
    from qplasma.verify import acceptance_grid

    return acceptance_grid()
