"""List every spanning tree of a 2-tree exactly once.

The build order makes this mechanical.  When vertex v arrives glued onto
edge {x, y}, every spanning tree of the previous graph extends in two ways
with v as a leaf (add vx, or add vy), and, when the tree contains xy, in one
further way with v internal (swap xy for vx plus vy).  Every tree of the
larger graph arises from exactly one parent this way, so walking the choices
yields each tree once.

Two modes are offered.  ``streaming`` runs a depth-first walk over the choice
vectors with O(n) state beyond the consumer, applying and undoing one choice
at a time; total work is proportional to n times the number of trees.
``faithful-list`` materialises the per-level lists instead (memory grows with
the output) and exists to cross-check the streaming walk.  Within one parent
the order is always: leaf at the smaller endpoint, leaf at the larger
endpoint, then the swap.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator

from .errors import IllegalSplitError, InvalidTreeError, OutOfRangeError
from .graph import (
    Edge,
    SpanningTree,
    TwoTreeConstruction,
    edge,
    spanning_forest_components,
    tree_vertex_span,
)


class ExtensionChoice(enum.Enum):
    """How one added vertex v with attach edge {x, y} joins the tree."""

    USE_VX = "use-vx"
    USE_VY = "use-vy"
    SPLIT_XY = "split-xy"


MODES = ("streaming", "faithful-list")


def extend_tree(tree: Iterable[Edge], new_vertex: int, attach: Edge) -> list[SpanningTree]:
    """All spanning trees of the one-vertex-larger graph extending ``tree``.

    Returns two trees (new vertex as a leaf on either attach endpoint), plus
    a third with the attach edge swapped out when the tree contains it.
    """
    current = frozenset(edge(*e) for e in tree)
    span = tree_vertex_span(current)
    if spanning_forest_components(1 + max(span, default=0), current) is None:
        raise InvalidTreeError("edge set contains a cycle")
    if len(current) != len(span) - 1:
        raise InvalidTreeError(
            f"{len(current)} edges cannot span {len(span)} vertices as a tree"
        )
    x, y = edge(*attach)
    if x not in span or y not in span:
        raise InvalidTreeError(f"attach edge ({x}, {y}) does not lie in the tree's graph")
    if new_vertex in span:
        raise InvalidTreeError(f"vertex {new_vertex} is already spanned")
    out = [current | {edge(new_vertex, x)}, current | {edge(new_vertex, y)}]
    if (x, y) in current:
        out.append(current - {(x, y)} | {edge(new_vertex, x), edge(new_vertex, y)})
    return out


def enumerate_spanning_trees(
    c: TwoTreeConstruction, mode: str = "streaming"
) -> Iterator[SpanningTree]:
    """Yield every spanning tree of ``c.realize()`` exactly once.

    Both modes emit the same multiset of trees; only the order differs.
    """
    if mode not in MODES:
        raise OutOfRangeError(f"mode must be one of {MODES}, got {mode!r}")
    c.realize()  # validate before streaming anything
    if mode == "streaming":
        return _stream(c)
    return iter(spanning_trees_levelwise(c))


def spanning_trees_levelwise(c: TwoTreeConstruction) -> list[SpanningTree]:
    """The list-growing formulation: one fully materialised list per level."""
    level: list[frozenset] = [frozenset({c.base})]
    for v, (x, y) in c.attachments:
        evx, evy, exy = edge(v, x), edge(v, y), (x, y)
        nxt: list[frozenset] = []
        for tree in level:
            nxt.append(tree | {evx})
            nxt.append(tree | {evy})
            if exy in tree:
                nxt.append(tree - {exy} | {evx, evy})
        level = nxt
    return level


def _stream(c: TwoTreeConstruction) -> Iterator[SpanningTree]:
    steps = [(edge(v, x), edge(v, y), (x, y)) for v, (x, y) in c.attachments]
    tree = {c.base}
    k = len(steps)
    if k == 0:
        yield frozenset(tree)
        return
    alt = [0] * k
    undo: list = [None] * k
    last = k - 1
    level = 0
    while True:
        evx, evy, exy = steps[level]
        a = alt[level]
        descended = False
        while a < 3:
            if a == 0:
                added, removed = evx, None
            elif a == 1:
                added, removed = evy, None
            elif exy in tree:
                added, removed = None, exy  # split: remove xy, add both v-edges
            else:
                a = 3
                break
            a += 1
            if removed is None:
                tree.add(added)
            else:
                tree.remove(removed)
                tree.add(evx)
                tree.add(evy)
            if level == last:
                yield frozenset(tree)
                if removed is None:
                    tree.discard(added)
                else:
                    tree.discard(evx)
                    tree.discard(evy)
                    tree.add(removed)
            else:
                alt[level] = a
                undo[level] = (added, removed)
                level += 1
                alt[level] = 0
                descended = True
                break
        if descended:
            continue
        level -= 1
        if level < 0:
            return
        added, removed = undo[level]
        if removed is None:
            tree.discard(added)
        else:
            evx, evy, _ = steps[level]
            tree.discard(evx)
            tree.discard(evy)
            tree.add(removed)


def choice_vector_decode(
    c: TwoTreeConstruction, choices: Iterable[ExtensionChoice]
) -> SpanningTree:
    """Apply one extension choice per attachment and return the unique tree."""
    picks = list(choices)
    if len(picks) != c.n - 2:
        raise OutOfRangeError(
            f"need exactly {c.n - 2} choices for n={c.n}, got {len(picks)}"
        )
    tree = {c.base}
    for (v, (x, y)), pick in zip(c.attachments, picks):
        if pick is ExtensionChoice.USE_VX:
            tree.add(edge(v, x))
        elif pick is ExtensionChoice.USE_VY:
            tree.add(edge(v, y))
        else:
            if (x, y) not in tree:
                raise IllegalSplitError(
                    f"attach edge ({x}, {y}) not in tree when adding vertex {v}"
                )
            tree.remove((x, y))
            tree.add(edge(v, x))
            tree.add(edge(v, y))
    return frozenset(tree)


def count_stream(trees: Iterable[SpanningTree]) -> int:
    """Drain a tree stream into a bare count (the cheapest possible sink)."""
    total = 0
    for _ in trees:
        total += 1
    return total


def expected_tree_count(c: TwoTreeConstruction) -> int:
    """Stream length prediction used by the CLI header."""
    from .counting import count_via_construction

    return count_via_construction(c)
