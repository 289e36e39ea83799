from pathlib import Path

import pytest

from wgmconv.materials import MaterialLibrary
from wgmconv.resonator import ResonatorGeometry
from wgmconv.scenario.config import load_scenario

ROOT = Path(__file__).resolve().parents[1]
PAPER_CONFIG = ROOT / "paper.config"


@pytest.fixture(scope="session")
def library():
    return MaterialLibrary()


@pytest.fixture(scope="session")
def linbo3_e(library):
    return library.get("LiNbO3", "extraordinary")


@pytest.fixture(scope="session")
def linbo3_o(library):
    return library.get("LiNbO3", "ordinary")


@pytest.fixture(scope="session")
def diamond(library):
    return library.get("diamond", "isotropic")


@pytest.fixture(scope="session")
def disk(linbo3_e):
    return ResonatorGeometry(1.8e-3, 0.356e-3, 0.22e-3, linbo3_e)


@pytest.fixture(scope="session")
def paper_config_path():
    return PAPER_CONFIG


@pytest.fixture(scope="session")
def paper_scenario():
    return load_scenario(PAPER_CONFIG)


_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _criteria[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        terminalreporter.write_line(f"{'PASS' if _criteria[name] == 'passed' else 'FAIL'}  {name}")
