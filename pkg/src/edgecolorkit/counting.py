"""Exact counters for proper edge colorings.

A proper edge coloring with palette {0..kappa-1} assigns every edge a color
so that edges sharing a vertex always differ. All counters here are exact
over Python integers. The workhorse is a backtracking search that always
branches on the uncolored edge with the fewest remaining colors (ties broken
by smallest edge index), pruning as soon as any edge has none left; the
search order is therefore deterministic for a given graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError
from .graphs import GadgetGraph, MultiGraph


def _search(edges, vertex_count, kappa, masks, on_leaf=None):
    """Count completions of a partial coloring.

    masks holds, per vertex, the bitmask of colors already used there. When
    on_leaf is given it is called once per completed coloring (with the color
    list by edge index) and the return value is the number of leaves visited;
    otherwise leaves are just counted.
    """
    n_edges = len(edges)
    full = (1 << kappa) - 1
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    colored = bytearray(n_edges)
    colors = [0] * n_edges
    total = 0

    def rec(remaining):
        nonlocal total
        if remaining == 0:
            total += 1
            if on_leaf is not None:
                on_leaf(colors)
            return
        best = -1
        best_avail = 0
        best_n = kappa + 1
        for e in range(n_edges):
            if colored[e]:
                continue
            avail = full & ~(masks[eu[e]] | masks[ev[e]])
            cnt = avail.bit_count()
            if cnt < best_n:
                if cnt == 0:
                    return
                best_n = cnt
                best = e
                best_avail = avail
                if cnt == 1:
                    break
        u = eu[best]
        v = ev[best]
        colored[best] = 1
        a = best_avail
        while a:
            bit = a & -a
            a ^= bit
            masks[u] |= bit
            masks[v] |= bit
            colors[best] = bit.bit_length() - 1
            rec(remaining - 1)
            masks[u] ^= bit
            masks[v] ^= bit
        colored[best] = 0

    rec(n_edges)
    return total


def _frontier_edge_order(vertex_count: int, edges) -> list[int]:
    """A static edge order that keeps the set of partially colored, still
    constrained vertices small: at each step pick the edge opening the
    fewest new vertices net of the vertices it closes, smallest index on
    ties."""
    m = len(edges)
    remaining = [0] * vertex_count
    for u, v in edges:
        remaining[u] += 1
        remaining[v] += 1
    is_open = [False] * vertex_count
    unused = list(range(m))
    order = []
    for _ in range(m):
        best = -1
        best_key = None
        for e in unused:
            u, v = edges[e]
            opens = (not is_open[u]) + (not is_open[v])
            closes = (remaining[u] == 1) + (remaining[v] == 1)
            key = (opens - closes, opens, e)
            if best_key is None or key < best_key:
                best_key = key
                best = e
        unused.remove(best)
        order.append(best)
        u, v = edges[best]
        remaining[u] -= 1
        remaining[v] -= 1
        is_open[u] = remaining[u] > 0
        is_open[v] = remaining[v] > 0
    return order


def _frontier_count(vertex_count: int, edges, kappa: int, seed_masks) -> int:
    """Count completions by dynamic programming over a static edge order.

    The state after a prefix is the used-color mask of every vertex still
    touched by a remaining edge; states are canonicalized under palette
    permutation (the per-color usage patterns over those vertices, sorted),
    which is sound because the distinctness constraints never name a color.
    Memoizing on the canonical state makes structured instances polynomial
    where leaf enumeration is linear in the count itself.
    """
    m = len(edges)
    if m == 0:
        return 1
    order = _frontier_edge_order(vertex_count, edges)
    oe = [edges[i] for i in order]
    active: list[tuple[int, ...]] = [()] * (m + 1)
    cur: list[int] = []
    seen = [False] * vertex_count
    for pos in range(m - 1, -1, -1):
        for w in oe[pos]:
            if not seen[w]:
                seen[w] = True
                cur.append(w)
        active[pos] = tuple(cur)
    masks = list(seed_masks)
    full = (1 << kappa) - 1
    memo: dict = {}

    def state_key(pos: int):
        pats = [0] * kappa
        for wi, w in enumerate(active[pos]):
            mw = masks[w]
            while mw:
                bit = mw & -mw
                mw ^= bit
                pats[bit.bit_length() - 1] |= 1 << wi
        pats.sort()
        return (pos, tuple(pats))

    def rec(pos: int) -> int:
        if pos == m:
            return 1
        key = state_key(pos)
        got = memo.get(key)
        if got is not None:
            return got
        u, v = oe[pos]
        avail = full & ~(masks[u] | masks[v])
        total = 0
        while avail:
            bit = avail & -avail
            avail ^= bit
            masks[u] |= bit
            masks[v] |= bit
            total += rec(pos + 1)
            masks[u] ^= bit
            masks[v] ^= bit
        memo[key] = total
        return total

    return rec(0)


def count_assignments(g: MultiGraph, kappa: int) -> int:
    """Number of proper edge colorings of g with palette {0..kappa-1}.

    kappa = 0 is permitted and yields 1 for an edgeless graph, else 0.
    """
    if isinstance(g, GadgetGraph):
        raise PreconditionError("gadget graphs are counted via count_extensions")
    if kappa < 0:
        raise ValueError("kappa must be nonnegative")
    if not g.edges:
        return 1
    if kappa == 0:
        return 0
    return _frontier_count(g.vertex_count, g.edges, kappa, [0] * g.vertex_count)


def count_extensions(g: GadgetGraph, kappa: int, boundary: Sequence[int]) -> int:
    """Proper colorings of the gadget's internal edges given dangling colors.

    boundary lists one color per dangling half-edge, in dangling order. The
    dangling colors participate in the distinctness constraint at their
    attachment vertices (so two danglers at one vertex with equal colors give
    zero immediately).
    """
    if len(boundary) != len(g.dangling):
        raise PreconditionError(
            "boundary has %d colors for %d dangling edges"
            % (len(boundary), len(g.dangling))
        )
    if kappa < 1:
        raise ValueError("kappa must be positive")
    masks = [0] * g.vertex_count
    for v, c in zip(g.dangling, boundary):
        c = int(c)
        if not (0 <= c < kappa):
            raise PreconditionError("boundary color %d outside palette" % c)
        bit = 1 << c
        if masks[v] & bit:
            return 0
        masks[v] |= bit
    return _frontier_count(g.vertex_count, g.base.edges, kappa, masks)


def extension_matrix(g: GadgetGraph, kappa: int) -> tuple[tuple[int, ...], ...]:
    """All extension counts of a 2-dangler gadget in one sweep.

    Returns M with M[c1][c2] = count_extensions(g, kappa, [c1, c2]). Computed
    by enumerating internal colorings once and crediting every compatible
    boundary pair, which is much cheaper than kappa**2 separate searches.
    """
    if len(g.dangling) != 2:
        raise PreconditionError("extension_matrix needs exactly 2 dangling edges")
    if kappa < 1:
        raise ValueError("kappa must be positive")
    a1, a2 = g.dangling
    full = (1 << kappa) - 1
    masks = [0] * g.vertex_count
    out = [[0] * kappa for _ in range(kappa)]

    def credit(_colors):
        avail1 = full & ~masks[a1]
        while avail1:
            bit1 = avail1 & -avail1
            avail1 ^= bit1
            c1 = bit1.bit_length() - 1
            row = out[c1]
            avail2 = full & ~masks[a2]
            if a2 == a1:
                avail2 &= ~bit1
            while avail2:
                bit2 = avail2 & -avail2
                avail2 ^= bit2
                row[bit2.bit_length() - 1] += 1

    _search(g.base.edges, g.vertex_count, kappa, masks, on_leaf=credit)
    return tuple(tuple(row) for row in out)


def decompose_extension(g: GadgetGraph, kappa: int) -> tuple[int, int]:
    """(diagonal, off-diagonal) of a 2-dangler gadget's extension matrix
    from just two pinned boundaries.

    Sound without computing the full matrix: permuting the palette bijects
    internal colorings while permuting the boundary pair, so the extension
    count depends only on whether the two boundary colors coincide. The
    matrix is therefore always a*I + b*(J - I), and (a, b) determines it.
    """
    if len(g.dangling) != 2:
        raise PreconditionError("decomposition needs exactly 2 dangling edges")
    if kappa < 2:
        raise PreconditionError("need at least 2 colors to separate a from b")
    a = count_extensions(g, kappa, (0, 0))
    b = count_extensions(g, kappa, (0, 1))
    return a, b


def enumerate_perfect_matchings(g: MultiGraph) -> tuple[tuple[int, ...], ...]:
    """All perfect matchings, each as a sorted tuple of edge indices.

    Parallel edges yield distinct matchings. Deterministic order.
    """
    n = g.vertex_count
    if n % 2:
        return ()
    adj = g.incidence_lists()
    edges = g.edges
    covered = [False] * n
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def rec():
        v = -1
        for w in range(n):
            if not covered[w]:
                v = w
                break
        if v == -1:
            out.append(tuple(chosen))
            return
        covered[v] = True
        for i in adj[v]:
            a, b = edges[i]
            w = b if a == v else a
            if not covered[w]:
                covered[w] = True
                chosen.append(i)
                rec()
                chosen.pop()
                covered[w] = False
        covered[v] = False

    rec()
    return tuple(out)


def count_by_matching_decomposition(g: MultiGraph, kappa: int, r: int) -> int:
    """Count colorings of an r-regular graph at kappa = r by decomposition.

    Every proper r-coloring of an r-regular graph splits the edges into r
    color classes that are each perfect matchings. The counter enumerates
    perfect matchings once, counts exact covers of the edge set by disjoint
    matchings, and multiplies by r! for the color orderings. Agrees with
    count_assignments wherever both apply.
    """
    if kappa != r:
        raise PreconditionError(
            "matching decomposition not applicable (kappa=%d, r=%d)" % (kappa, r)
        )
    if not g.is_regular(r):
        raise PreconditionError("matching decomposition requires an r-regular graph")
    n_edges = len(g.edges)
    if n_edges == 0:
        return 1
    pms = enumerate_perfect_matchings(g)
    if not pms:
        return 0
    pm_masks = [sum(1 << i for i in pm) for pm in pms]
    by_edge: list[list[int]] = [[] for _ in range(n_edges)]
    for idx, mask in enumerate(pm_masks):
        for i in range(n_edges):
            if mask >> i & 1:
                by_edge[i].append(idx)
    all_mask = (1 << n_edges) - 1

    def covers(used: int, start_hint: int) -> int:
        if used == all_mask:
            return 1
        e = start_hint
        while used >> e & 1:
            e += 1
        total = 0
        for idx in by_edge[e]:
            m = pm_masks[idx]
            if not (m & used):
                total += covers(used | m, e + 1)
        return total

    return covers(0, 0) * math.factorial(r)


@dataclass(frozen=True)
class PartitionSpectrum:
    """counts[m] = number of ways to split the edge set into exactly m
    nonempty pairwise-disjoint matchings, for m = 0..kappa."""

    kappa: int
    counts: tuple[int, ...]

    def total(self) -> int:
        return sum(self.counts)

    def assignment_count(self, j: int) -> int:
        """Reconstruct the proper-coloring count with a j-color palette."""
        return sum(p * math.perm(j, m) for m, p in enumerate(self.counts))


def partition_spectrum(g: MultiGraph, kappa: int) -> PartitionSpectrum:
    """Partition counts P_0..P_kappa recovered from assignment counts.

    A proper coloring with palette size j is a partition into m nonempty
    matchings together with an injection of the m classes into the palette,
    so A(j) = sum_m P_m * j(j-1)...(j-m+1). The triangular system inverts
    exactly over the integers.
    """
    if kappa < 0:
        raise ValueError("kappa must be nonnegative")
    a = [count_assignments(g, j) for j in range(kappa + 1)]
    counts: list[int] = []
    for m in range(kappa + 1):
        rem = a[m] - sum(counts[t] * math.perm(m, t) for t in range(m))
        q, leftover = divmod(rem, math.factorial(m))
        if leftover or q < 0:
            raise RuntimeError(
                "internal: falling-factorial inversion produced P_%d = %s/%d"
                % (m, rem, math.factorial(m))
            )
        counts.append(q)
    return PartitionSpectrum(kappa, tuple(counts))


def _count_partitions_capped(g: MultiGraph, kappa: int, limit: int) -> int:
    """Number of partitions of the edge set into at most kappa matchings,
    counted in canonical first-fit order and cut off once limit is reached.
    """
    edges = g.edges
    n = len(edges)
    if n == 0:
        return min(1, limit)
    max_class = g.vertex_count // 2
    if max_class == 0 or n > kappa * max_class:
        return 0
    found = 0
    classes: list[list[int]] = []

    def disjoint(i: int, cls) -> bool:
        a, b = edges[i]
        for j in cls:
            c, d = edges[j]
            if a == c or a == d or b == c or b == d:
                return False
        return True

    def rec(i: int):
        nonlocal found
        if found >= limit:
            return
        if i == n:
            found += 1
            return
        remaining = n - i
        capacity = sum(max_class - len(cls) for cls in classes)
        capacity += (kappa - len(classes)) * max_class
        if capacity < remaining:
            return
        for cls in classes:
            if disjoint(i, cls):
                cls.append(i)
                rec(i + 1)
                cls.pop()
                if found >= limit:
                    return
        if len(classes) < kappa:
            classes.append([i])
            rec(i + 1)
            classes.pop()

    rec(0)
    return found


def is_uniquely_partition_colorable(g: MultiGraph, kappa: int) -> bool:
    """Whether g has exactly one partition into at most kappa matchings.

    Only defined for kappa >= 4 (below that, use partition_spectrum
    directly). Isolated vertices are irrelevant.

    With n <= kappa edges the all-singletons partition is valid, so
    uniqueness holds iff no two edges are vertex-disjoint (any disjoint
    pair could be merged into a second partition): the edges must pairwise
    intersect, which on simple graphs means a star K_{1,j} with j <= kappa,
    the triangle, or the empty graph, and on multigraphs also admits
    parallel bundles and triangles with repeated edges. With n > kappa no
    closed shape list survives (forced-merge configurations exist), so the
    decision falls back to counting partitions with an early exit at two.
    """
    if kappa < 4:
        raise PreconditionError(
            "uniqueness classifier requires kappa >= 4; "
            "use partition_spectrum for smaller palettes"
        )
    edges = g.edges
    n = len(edges)
    if n == 0:
        return True
    if n <= kappa:
        for i in range(n):
            a, b = edges[i]
            for j in range(i + 1, n):
                c, d = edges[j]
                if a != c and a != d and b != c and b != d:
                    return False
        return True
    return _count_partitions_capped(g, kappa, 2) == 1
