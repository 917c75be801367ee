import pytest

from spindimer.verify import run_all_checks


@pytest.fixture(scope="session")
def verification_report():
    """Full cross-validation suite, run once per session (it is not cheap)."""
    return run_all_checks()
