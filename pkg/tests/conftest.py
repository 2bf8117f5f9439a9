from __future__ import annotations

import pytest

from g2zeta.config import Config, using

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(autouse=True)
def default_config(tmp_path):
    """Every test runs on defaults with a private cache directory."""
    with using(Config(cache_dir=str(tmp_path / "cache"))) as cfg:
        yield cfg


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
