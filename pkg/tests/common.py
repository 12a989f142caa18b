"""Shared graph builders for the test suite."""

from __future__ import annotations

from critindep import BuildScript, Graph


def cycle(n: int) -> Graph:
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph.build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    return Graph.build(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    return Graph.build(n, [])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.build(10, outer + inner + spokes)


def witness_graph() -> Graph:
    """Vertex 0 isolated; 1 and 2 each adjacent to 3 and 4.

    Its only inclusion-minimal positive set is {0}, while {0,1,2} has
    d = 1 and survives every single-vertex-removal test, so it witnesses
    that single removals do not certify minimality.
    """
    return Graph.build(5, [(1, 3), (1, 4), (2, 3), (2, 4)])


def c3_with_pendant() -> Graph:
    return Graph.build(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def figure1_graph() -> tuple[Graph, list[int]]:
    """A ten-vertex host with the independent set {0,1,2,3} whose
    neighborhood is {4,5,6}; the remaining vertices 7,8,9 fill out the
    host but stay outside X and N(X)."""
    g = Graph.build(10, [(0, 4), (1, 4), (2, 5), (3, 5), (3, 6), (5, 6),
                         (4, 7), (4, 8), (7, 8), (8, 9), (6, 9)])
    return g, [0, 1, 2, 3]


def figure2_script() -> BuildScript:
    """Cycle of five plus seven path attachments and two leaf
    attachments: 21 vertices, 9 black, 7 red, critical difference 2."""
    return BuildScript(cycle_length=5, steps=(
        ("p2", 2),    # adds 5 (red), 6 (black)
        ("leaf", 5),  # adds 7 (black)
        ("p2", 1),    # adds 8 (red), 9 (black)
        ("leaf", 8),  # adds 10 (black)
        ("p2", 8),    # adds 11 (red), 12 (black)
        ("p2", 9),    # adds 13 (red), 14 (black)
        ("p2", 2),    # adds 15 (red), 16 (black)
        ("p2", 9),    # adds 17 (red), 18 (black)
        ("p2", 3),    # adds 19 (red), 20 (black)
    ))
