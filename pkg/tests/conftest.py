import pytest

from ascpart import CountContext


@pytest.fixture(scope="session")
def ctx():
    """One shared count context; tables only ever grow."""
    return CountContext()
