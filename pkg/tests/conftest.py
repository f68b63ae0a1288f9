import pytest

from apnkit import build_field, kernels


def pytest_addoption(parser):
    parser.addoption(
        "--kernel-backend",
        choices=["cython", "python"],
        help="run the whole suite on one kernel backend",
    )


@pytest.fixture(scope="session", autouse=True)
def _session_backend(request):
    name = request.config.getoption("--kernel-backend")
    if name is None:
        yield
        return
    prev = kernels.use_backend(name)
    yield
    kernels.use_backend(prev)


@pytest.fixture(scope="session")
def gf125():
    return build_field(5, 3)


@pytest.fixture(scope="session")
def gf243():
    return build_field(3, 5)


@pytest.fixture(scope="session")
def gf2187():
    return build_field(3, 7)


@pytest.fixture(scope="session")
def gf3125():
    return build_field(5, 5)


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    prev = kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(prev)
