"""Shared pytest configuration: the ``slow`` marker and its opt-in flag."""

import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run exhaustive n = 7, 8 checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive checks at the largest sizes")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def in_tmp(tmp_path, monkeypatch):
    """Run inside an empty directory so logs and reports land there."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("CHARGEBASIS_THREADS", raising=False)
    return tmp_path
