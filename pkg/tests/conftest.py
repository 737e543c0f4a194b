from __future__ import annotations

import time

import pytest

from tropenum.engine import KINDS, CountRequest, count
from tropenum.order import LAMBDA0
from tropenum.surfaces import parse_spec


class CountStore:
    """Memoized single-worker counts with wall time of the first run."""

    def __init__(self):
        self._runs: dict = {}

    def get(self, spec: str, genus: int = 0, order=LAMBDA0, cremona: bool = True):
        key = (spec, genus, str(order), cremona)
        if key not in self._runs:
            req = CountRequest(parse_spec(spec), genus, order, KINDS, ack_noninvariant=True, cremona=cremona)
            t0 = time.perf_counter()
            rep = count(req, workers=1)
            self._runs[key] = (rep, time.perf_counter() - t0)
        return self._runs[key][0]

    def seconds(self, spec: str, genus: int = 0, order=LAMBDA0, cremona: bool = True) -> float:
        self.get(spec, genus, order, cremona)
        return self._runs[(spec, genus, str(order), cremona)][1]


@pytest.fixture(scope="session")
def counts() -> CountStore:
    return CountStore()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
