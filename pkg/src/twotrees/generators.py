"""Named 2-tree families, seeded random 2-trees, and the small exhaustive corpus.

Randomness comes from the standard library's Mersenne Twister
(``random.Random(seed)``) drawing via ``randrange``; identical seeds produce
identical constructions on any platform.  Random construction sequences are
uniform over attach-edge choices, which is NOT uniform over isomorphism
classes; consumers here only need coverage and determinism.
"""

from __future__ import annotations

import random

from .errors import OutOfRangeError, TooLargeError
from .graph import Edge, SimpleGraph, TwoTreeConstruction, edge

Seed = int

ALL_LABELED_MAX_N = 9  # (2*9-5)!! = 135135 attach sequences


def book(n: int) -> TwoTreeConstruction:
    """Every added vertex glued onto the base edge {0, 1}."""
    _require_n(n, 2)
    return TwoTreeConstruction(n, (0, 1), tuple((k, (0, 1)) for k in range(2, n)))


def path_square(n: int) -> TwoTreeConstruction:
    """The n-path with extra edges between vertices at distance two."""
    _require_n(n, 2)
    return TwoTreeConstruction(n, (0, 1), tuple((k, (k - 2, k - 1)) for k in range(2, n)))


def fan(n: int) -> TwoTreeConstruction:
    """Vertex 0 joined to every vertex of the path 1 .. n-1."""
    _require_n(n, 2)
    return TwoTreeConstruction(n, (0, 1), tuple((k, (0, k - 1)) for k in range(2, n)))


def random_chain(n: int, seed: Seed) -> TwoTreeConstruction:
    """Random 2-tree with exactly two degree-2 vertices (n >= 4).

    Each vertex after the first glues onto an edge incident to its
    predecessor, chosen by a fair coin between the predecessor's two
    attach endpoints.
    """
    _require_n(n, 3)
    rng = random.Random(seed)
    attachments: list[tuple[int, Edge]] = [(2, (0, 1))]
    prev_attach: Edge = (0, 1)
    for k in range(3, n):
        other = prev_attach[rng.randrange(2)]
        prev_attach = edge(k - 1, other)
        attachments.append((k, prev_attach))
    return TwoTreeConstruction(n, (0, 1), tuple(attachments))


def random_two_tree(n: int, seed: Seed) -> TwoTreeConstruction:
    """Uniform attach-edge choice at every step, deterministic per seed."""
    _require_n(n, 2)
    rng = random.Random(seed)
    edges: list[Edge] = [(0, 1)]
    attachments: list[tuple[int, Edge]] = []
    for k in range(2, n):
        attach = edges[rng.randrange(len(edges))]
        attachments.append((k, attach))
        edges.append(edge(k, attach[0]))
        edges.append(edge(k, attach[1]))
    return TwoTreeConstruction(n, (0, 1), tuple(attachments))


def all_labeled_two_trees(n: int) -> list[SimpleGraph]:
    """All distinct edge sets reachable from base {0, 1} by adding 2 .. n-1.

    Vertex k always arrives at step k - 2, so this enumerates constructions
    with a distinguished base, deduplicated by edge set.  Every 2-tree on n
    vertices is isomorphic to at least one output, which is what the
    extremal sweeps need.
    """
    if n < 3:
        raise OutOfRangeError(f"all_labeled_two_trees needs n >= 3, got {n}")
    if n > ALL_LABELED_MAX_N:
        raise TooLargeError(
            f"all_labeled_two_trees capped at n = {ALL_LABELED_MAX_N}, got {n}"
        )
    seen: set[frozenset[Edge]] = set()
    edges: list[Edge] = [(0, 1)]

    def grow(k: int) -> None:
        if k == n:
            seen.add(frozenset(edges))
            return
        for i in range(len(edges)):
            x, y = edges[i]
            edges.append(edge(k, x))
            edges.append(edge(k, y))
            grow(k + 1)
            edges.pop()
            edges.pop()

    grow(2)
    graphs = [SimpleGraph.from_edges(n, es) for es in seen]
    graphs.sort(key=lambda g: tuple(g.edges()))
    return graphs


def extend_with_chain(
    g: SimpleGraph, start_edge: Edge, steps: int, seed: Seed
) -> tuple[SimpleGraph, list[tuple[int, Edge]]]:
    """Grow a random chain of ``steps`` vertices out of ``start_edge``.

    New vertices take labels ``g.n``, ``g.n + 1``, ...; each one after the
    first glues onto an edge incident to its predecessor.  Returns the grown
    graph and the (vertex, attach-edge) records in order.
    """
    if steps < 1:
        raise OutOfRangeError(f"need at least one chain step, got {steps}")
    x, y = edge(*start_edge)
    if not g.has_edge(x, y):
        raise OutOfRangeError(f"start edge ({x}, {y}) not in graph")
    rng = random.Random(seed)
    edges = list(g.edges())
    records: list[tuple[int, Edge]] = []
    attach: Edge = (x, y)
    for i in range(steps):
        w = g.n + i
        records.append((w, attach))
        edges.append(edge(w, attach[0]))
        edges.append(edge(w, attach[1]))
        attach = edge(w, attach[rng.randrange(2)])
    return SimpleGraph.from_edges(g.n + steps, edges), records


def _require_n(n: int, minimum: int) -> None:
    if n < minimum:
        raise OutOfRangeError(f"need n >= {minimum}, got {n}")
