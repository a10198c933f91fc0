import pytest

from compnum.graph import Graph

DOMINO_EDGES = "ab bc de ef ad be cf".split()


def make(edges, vertices=()):
    """Graph from ``"ab bc"``-style two-letter edges or explicit pairs."""
    return Graph(vertices, [tuple(e) for e in edges])


def cycle_graph(names):
    names = list(names)
    return Graph((), [(names[i], names[(i + 1) % len(names)]) for i in range(len(names))])


@pytest.fixture
def c4():
    return cycle_graph("abcd")


@pytest.fixture
def c5():
    return cycle_graph("abcde")


@pytest.fixture
def domino():
    return make(DOMINO_EDGES)


@pytest.fixture
def housex():
    return Graph((), [("v0", "v1"), ("v1", "v2"), ("v2", "v3"), ("v3", "v0"),
                      ("v2", "x"), ("x", "v0"), ("v3", "x")])


@pytest.fixture
def wheel5():
    rim = [f"r{i}" for i in range(5)]
    return cycle_graph(rim).union(Graph((), [("hub", r) for r in rim]))


@pytest.fixture
def k3():
    return make(["xy", "yz", "xz"])


# -- acceptance reporting ---------------------------------------------------------

_ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


@pytest.fixture
def criterion(request):
    """``criterion(label, ok, detail)`` records one acceptance line."""
    lines = request.config.stash[_ACCEPTANCE]

    def record(label, ok, detail=""):
        lines.append(f"{'PASS' if ok else 'FAIL'} {label}" + (f" -- {detail}" if detail else ""))
        return ok
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
