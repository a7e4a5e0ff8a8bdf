"""Multigraph model, text serialization, and gadget edge replacement.

Graphs are undirected multigraphs on vertices 0..vertex_count-1. Parallel
edges are allowed and keep stable indices (their position in the edge list);
self-loops are rejected everywhere. A GadgetGraph is a multigraph plus an
ordered list of dangling half-edges, each recorded by its attachment vertex.
The order of the dangling list is the external variable order of the gadget.

Text format, one directive per line:

    # comment
    v <vertex_count>        exactly once, before any e/d line
    e <u> <v>               one edge occurrence
    d <u>                   one dangling half-edge at u, in external order

Blank lines are ignored, LF and CRLF both accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import ParseError, PreconditionError


@dataclass(frozen=True)
class MultiGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]]):
        norm = []
        for k, e in enumerate(edges):
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError("edge %d is a self-loop at vertex %d" % (k, u))
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(
                    "edge %d endpoints (%d, %d) out of range for %d vertices"
                    % (k, u, v, vertex_count)
                )
            norm.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for a, b in self.edges if a == v or b == v)

    def degrees(self) -> tuple[int, ...]:
        d = [0] * self.vertex_count
        for a, b in self.edges:
            d[a] += 1
            d[b] += 1
        return tuple(d)

    def incidence_lists(self) -> list[list[int]]:
        """Edge indices incident to each vertex, ascending per vertex."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (a, b) in enumerate(self.edges):
            inc[a].append(i)
            inc[b].append(i)
        return inc

    def is_regular(self, r: int) -> bool:
        return all(d == r for d in self.degrees())

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def is_connected(self) -> bool:
        """Every vertex reachable from vertex 0 (vacuously true if empty)."""
        if self.vertex_count == 0:
            return True
        seen = [False] * self.vertex_count
        seen[0] = True
        stack = [0]
        adj = self.incidence_lists()
        while stack:
            v = stack.pop()
            for i in adj[v]:
                a, b = self.edges[i]
                w = b if a == v else a
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        return all(seen)

    def parallel_edge_indices(self) -> tuple[int, ...]:
        """Indices of edges that have at least one parallel twin."""
        by_pair: dict[tuple[int, int], list[int]] = {}
        for i, e in enumerate(self.edges):
            by_pair.setdefault(e, []).append(i)
        out = [i for grp in by_pair.values() if len(grp) > 1 for i in grp]
        return tuple(sorted(out))

    def has_bridge(self) -> bool:
        """True iff removing some single edge disconnects its component.

        Standard lowpoint search; the traversal tracks the edge index used
        to enter a vertex, so one member of a parallel pair serves as the
        back edge for the other and parallel pairs are never bridges.
        """
        n = self.vertex_count
        disc = [-1] * n
        low = [0] * n
        adj = self.incidence_lists()
        timer = 0
        for root in range(n):
            if disc[root] != -1:
                continue
            # iterative DFS: (vertex, entering edge index, iterator position)
            disc[root] = low[root] = timer
            timer += 1
            stack = [(root, -1, 0)]
            while stack:
                v, in_edge, ptr = stack.pop()
                if ptr < len(adj[v]):
                    stack.append((v, in_edge, ptr + 1))
                    i = adj[v][ptr]
                    if i == in_edge:
                        continue
                    a, b = self.edges[i]
                    w = b if a == v else a
                    if disc[w] == -1:
                        disc[w] = low[w] = timer
                        timer += 1
                        stack.append((w, i, 0))
                    else:
                        low[v] = min(low[v], disc[w])
                else:
                    if in_edge != -1:
                        a, b = self.edges[in_edge]
                        parent = a if disc[a] < disc[b] else b
                        low[parent] = min(low[parent], low[v])
                        if low[v] > disc[parent]:
                            return True
        return False

    def render(self) -> str:
        lines = ["v %d" % self.vertex_count]
        lines += ["e %d %d" % e for e in self.edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GadgetGraph:
    """A multigraph plus ordered dangling half-edges (attachment vertices)."""

    base: MultiGraph
    dangling: tuple[int, ...]

    def __init__(self, base: MultiGraph, dangling: Iterable[int]):
        dang = tuple(int(v) for v in dangling)
        for v in dang:
            if not (0 <= v < base.vertex_count):
                raise ValueError("dangling attachment %d out of range" % v)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "dangling", dang)

    @property
    def vertex_count(self) -> int:
        return self.base.vertex_count

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.base.edges

    def degree(self, v: int) -> int:
        """Degree counting dangling half-edges."""
        return self.base.degree(v) + sum(1 for d in self.dangling if d == v)

    def degrees(self) -> tuple[int, ...]:
        d = list(self.base.degrees())
        for v in self.dangling:
            d[v] += 1
        return tuple(d)

    def is_regular(self, r: int) -> bool:
        return all(d == r for d in self.degrees())

    def is_simple(self) -> bool:
        return self.base.is_simple()

    def render(self) -> str:
        lines = ["v %d" % self.base.vertex_count]
        lines += ["e %d %d" % e for e in self.base.edges]
        lines += ["d %d" % v for v in self.dangling]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Union[MultiGraph, GadgetGraph]:
    """Parse the text format. Returns a GadgetGraph iff any d line appears.

    Errors name the offending 1-based line.
    """
    vertex_count = None
    edges: list[tuple[int, int]] = []
    dangling: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        try:
            args = [int(p) for p in parts[1:]]
        except ValueError:
            raise ParseError("line %d: non-integer argument in %r" % (lineno, raw))
        if tag == "v":
            if vertex_count is not None:
                raise ParseError("line %d: duplicate v directive" % lineno)
            if len(args) != 1 or args[0] < 0:
                raise ParseError("line %d: v takes one nonnegative count" % lineno)
            vertex_count = args[0]
        elif tag == "e":
            if vertex_count is None:
                raise ParseError("line %d: e before v directive" % lineno)
            if len(args) != 2:
                raise ParseError("line %d: e takes two vertex ids" % lineno)
            u, v = args
            if u == v:
                raise ParseError("line %d: self-loop at vertex %d" % (lineno, u))
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ParseError("line %d: vertex out of range" % lineno)
            edges.append((u, v))
        elif tag == "d":
            if vertex_count is None:
                raise ParseError("line %d: d before v directive" % lineno)
            if len(args) != 1:
                raise ParseError("line %d: d takes one vertex id" % lineno)
            if not (0 <= args[0] < vertex_count):
                raise ParseError("line %d: vertex out of range" % lineno)
            dangling.append(args[0])
        else:
            raise ParseError("line %d: unknown directive %r" % (lineno, tag))
    if vertex_count is None:
        raise ParseError("no v directive found")
    g = MultiGraph(vertex_count, edges)
    if dangling:
        return GadgetGraph(g, dangling)
    return g


def render_graph(g: Union[MultiGraph, GadgetGraph]) -> str:
    return g.render()


@dataclass(frozen=True)
class EdgeSelector:
    """Selects edge indices of a graph: all, parallel-only, or explicit."""

    mode: str
    indices: tuple[int, ...] = ()

    ALL = "all"
    PARALLEL = "parallel"
    EXPLICIT = "explicit"

    def __post_init__(self):
        if self.mode not in (self.ALL, self.PARALLEL, self.EXPLICIT):
            raise ValueError("unknown selector mode %r" % self.mode)

    @classmethod
    def all_edges(cls) -> "EdgeSelector":
        return cls(cls.ALL)

    @classmethod
    def parallel_only(cls) -> "EdgeSelector":
        return cls(cls.PARALLEL)

    @classmethod
    def explicit(cls, indices: Iterable[int]) -> "EdgeSelector":
        return cls(cls.EXPLICIT, tuple(int(i) for i in indices))

    def select(self, g: MultiGraph) -> tuple[int, ...]:
        if self.mode == self.ALL:
            return tuple(range(len(g.edges)))
        if self.mode == self.PARALLEL:
            return g.parallel_edge_indices()
        seen = set()
        for i in self.indices:
            if not (0 <= i < len(g.edges)):
                raise PreconditionError("edge index %d out of range" % i)
            if i in seen:
                raise PreconditionError("edge index %d selected twice" % i)
            seen.add(i)
        return tuple(sorted(self.indices))


@dataclass(frozen=True)
class ReplacedBlock:
    """Where one replaced edge went: the inserted copy's vertex offset, the
    two connector edge indices, and the indices of the copied base edges."""

    vertex_offset: int
    entry_edge: int
    internal_edges: tuple[int, ...]
    exit_edge: int


def replace_edges(
    g: MultiGraph, gadget: GadgetGraph, selector: EdgeSelector
) -> tuple[MultiGraph, dict[int, ReplacedBlock]]:
    """Replace each selected edge (u, v) with a fresh copy of the gadget.

    The edge is removed; the copy's base is inserted on a new vertex block;
    the copy's first dangling attachment is joined to u and its second to v.
    The result lists unselected edges first (original relative order), then
    one block per selected edge in ascending selected order: entry connector,
    copied base edges, exit connector. Original vertices keep their ids.
    """
    if len(gadget.dangling) != 2:
        raise PreconditionError(
            "replacement gadget must have exactly 2 dangling edges, got %d"
            % len(gadget.dangling)
        )
    selected = set(selector.select(g))
    new_edges: list[tuple[int, int]] = [
        e for i, e in enumerate(g.edges) if i not in selected
    ]
    blocks: dict[int, ReplacedBlock] = {}
    offset = g.vertex_count
    a1, a2 = gadget.dangling
    for s in sorted(selected):
        u, v = g.edges[s]
        entry_idx = len(new_edges)
        new_edges.append((u, offset + a1))
        internal = []
        for x, y in gadget.base.edges:
            internal.append(len(new_edges))
            new_edges.append((offset + x, offset + y))
        exit_idx = len(new_edges)
        new_edges.append((offset + a2, v))
        blocks[s] = ReplacedBlock(offset, entry_idx, tuple(internal), exit_idx)
        offset += gadget.vertex_count
    return MultiGraph(offset, new_edges), blocks
