import os
import sys

import pytest

# make the suite runnable straight from a checkout, installed or not
_SRC = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")
if _SRC not in sys.path:
    sys.path.insert(0, _SRC)

try:
    from hypothesis import HealthCheck, settings
except ImportError:
    pass
else:
    settings.register_profile(
        "circulant4",
        deadline=None,
        max_examples=50,
        suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
    )
    settings.load_profile("circulant4")


@pytest.fixture(scope="session")
def report_line(pytestconfig):
    """Write a line to the terminal even under output capture."""
    reporter = pytestconfig.pluginmanager.getplugin("terminalreporter")

    def write(text):
        if reporter is not None:
            reporter.write_line(text)
        else:
            print(text)

    return write
