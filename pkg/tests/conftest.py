import os
import random

import pytest

from pdchow import groebner

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SYSTEMS = os.path.join(ROOT, "demos", "systems")


def pytest_configure(config):
    groebner.CHECK_BASES = True


@pytest.fixture
def seeded(request):
    """A seeded Random; the seed is printed so failures can be replayed."""
    seed = int(os.environ.get("PDCHOW_SEED", "20261016"))
    print(f"[seed] {request.node.name}: {seed}")
    return random.Random(seed)


def system_path(name):
    return os.path.join(SYSTEMS, name)


VERDICTS = []


def record_verdict(number: int, ok: bool, detail: str) -> str:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    VERDICTS.append(line)
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(VERDICTS, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
