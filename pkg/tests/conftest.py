import subprocess
import sys

import pytest


@pytest.fixture(scope="session")
def run_cli():
    """Invoke the installed CLI in a subprocess and capture everything."""

    def _run(*argv: str):
        return subprocess.run(
            [sys.executable, "-m", "besselpow", *argv],
            capture_output=True,
            text=True,
            timeout=300,
        )

    return _run
