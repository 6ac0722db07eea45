"""R-graph and corona constructions with a fixed vertex-ordering contract.

Output vertex order is always: the base graph's vertices ("old",
0..n-1), then one new vertex per base edge ("new", n..n+m-1), then n
contiguous copies of the first attachment graph, then m contiguous copies
of the second.  Copy i of the first graph is joined completely to old
vertex i; copy j of the second to new vertex j.  Copies preserve the
input's internal vertex order, so the output adjacency matrix read in
this order has the expected block structure.
"""

from dataclasses import dataclass
import json

from .errors import HypothesisError
from .graphs import Graph, build_graph, is_connected

__all__ = [
    "CoronaLayout",
    "r_graph",
    "double_corona",
    "r_vertex_corona",
    "r_edge_corona",
]


@dataclass(frozen=True)
class CoronaLayout:
    """Index intervals (half-open) locating each vertex group in the output."""

    old_vertex_range: tuple[int, int]
    new_vertex_range: tuple[int, int]
    g1_copy_ranges: tuple[tuple[int, int], ...]
    g2_copy_ranges: tuple[tuple[int, int], ...]

    @property
    def total(self) -> int:
        last = self.new_vertex_range
        if self.g1_copy_ranges:
            last = self.g1_copy_ranges[-1]
        if self.g2_copy_ranges:
            last = self.g2_copy_ranges[-1]
        return last[1]

    def to_json(self) -> str:
        return json.dumps(
            {
                "old": list(self.old_vertex_range),
                "new": list(self.new_vertex_range),
                "g1_copies": [list(r) for r in self.g1_copy_ranges],
                "g2_copies": [list(r) for r in self.g2_copy_ranges],
            }
        )


def _assemble(g: Graph, g1: Graph, g2: Graph) -> tuple[Graph, CoronaLayout]:
    n, m = g.vertex_count, g.edge_count
    n1, n2 = g1.vertex_count, g2.vertex_count

    edges: list[tuple[int, int]] = list(g.edges)
    for j, (u, v) in enumerate(g.edges):
        edges.append((u, n + j))
        edges.append((v, n + j))

    g1_base = n + m
    for i in range(n):
        off = g1_base + i * n1
        edges.extend((off + a, off + b) for a, b in g1.edges)
        edges.extend((i, off + t) for t in range(n1))

    g2_base = g1_base + n * n1
    for j in range(m):
        off = g2_base + j * n2
        edges.extend((off + a, off + b) for a, b in g2.edges)
        edges.extend((n + j, off + t) for t in range(n2))

    total = g2_base + m * n2
    layout = CoronaLayout(
        old_vertex_range=(0, n),
        new_vertex_range=(n, n + m),
        g1_copy_ranges=tuple((g1_base + i * n1, g1_base + (i + 1) * n1) for i in range(n)),
        g2_copy_ranges=tuple((g2_base + j * n2, g2_base + (j + 1) * n2) for j in range(m)),
    )
    return build_graph(total, edges), layout


def r_graph(g: Graph) -> tuple[Graph, CoronaLayout]:
    """Add one vertex per edge, joined to that edge's two endpoints.

    The null graph maps to itself.  Output: n+m vertices, 3m edges.
    """
    return _assemble(g, build_graph(0, []), build_graph(0, []))


def double_corona(
    g: Graph, g1: Graph, g2: Graph, *, allow_disconnected: bool = False
) -> tuple[Graph, CoronaLayout]:
    """Corona of the R-graph: each old vertex joined to its own copy of g1,
    each new vertex to its own copy of g2.  Either copy graph may be null.

    The base graph must be connected and nonempty; pass
    ``allow_disconnected=True`` to bypass the connectivity check for
    exploration (closed-form results are then unguaranteed).
    """
    if g.is_null:
        raise HypothesisError("corona base graph must be nonempty")
    if not allow_disconnected and not is_connected(g):
        raise HypothesisError("corona base graph must be connected")
    return _assemble(g, g1, g2)


def r_vertex_corona(
    g: Graph, g1: Graph, *, allow_disconnected: bool = False
) -> tuple[Graph, CoronaLayout]:
    """Double corona with the second copy graph null."""
    return double_corona(g, g1, build_graph(0, []), allow_disconnected=allow_disconnected)


def r_edge_corona(
    g: Graph, g2: Graph, *, allow_disconnected: bool = False
) -> tuple[Graph, CoronaLayout]:
    """Double corona with the first copy graph null."""
    return double_corona(g, build_graph(0, []), g2, allow_disconnected=allow_disconnected)
