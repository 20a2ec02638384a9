import pytest

from hopfact.workspace import load_bundled


@pytest.fixture(scope="session")
def ws():
    """Bundled corpus, loaded once with full verification."""
    return load_bundled(verify=True)
