import time

import pytest

from prok.builtins import cusp, node, swan, truncated


@pytest.fixture(scope="session")
def cusp_situation():
    return cusp()


@pytest.fixture(scope="session")
def node_situation():
    return node()


@pytest.fixture(scope="session")
def swan3():
    return swan(3)


@pytest.fixture(scope="session")
def swan5():
    return swan(5)


@pytest.fixture(scope="session")
def truncated3():
    return truncated(3)


# acceptance bookkeeping: one pass/fail line per criterion -----------------------

_RESULTS = pytest.StashKey()


class _Criterion:
    def __init__(self, results, number, title, limit):
        self.results, self.number, self.title, self.limit = results, number, title, limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        seconds = time.perf_counter() - self.start
        ok = exc_type is None and seconds < self.limit
        line = (f"criterion {self.number:>2}: {'PASS' if ok else 'FAIL'}  "
                f"{seconds:6.2f} s (limit {self.limit} s)  {self.title}")
        if exc_type is None and not ok:
            line += "  [over time limit]"
        self.results[self.number] = line
        print(line)
        if exc_type is None and not ok:
            raise AssertionError(f"criterion {self.number} took {seconds:.2f} s")
        return False


@pytest.fixture
def criterion(request):
    results = request.config.stash.setdefault(_RESULTS, {})

    def make(number, title, limit):
        return _Criterion(results, number, title, limit)

    return make


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_RESULTS, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
