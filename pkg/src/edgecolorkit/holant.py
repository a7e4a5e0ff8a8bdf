"""Signatures over a color domain and exact Holant evaluation on grids.

A signature grid assigns every vertex of a multigraph a signature whose
arity equals the vertex degree; an edge assignment maps every edge to a
color in {0..k-1}; the Holant value is the sum over all edge assignments of
the product of vertex signature values. Everything here is exact integer
arithmetic.

The evaluator backtracks over edges, ordered so vertices complete early,
and prunes a branch as soon as any vertex value is known to be zero. For
the all-distinct and equality signature families the zero is detected
already on partial inputs, which is what makes coloring-style grids cheap;
arbitrary signatures are checked once fully assigned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .errors import PreconditionError
from .graphs import EdgeSelector, GadgetGraph, MultiGraph

GENERIC = "generic"
ALL_DISTINCT = "all_distinct"
EQUALITY = "equality"

Matrix = tuple[tuple[int, ...], ...]


def _tuple_index(values: Sequence[int], k: int) -> int:
    idx = 0
    for y in values:
        idx = idx * k + y
    return idx


@dataclass(frozen=True)
class Signature:
    """Dense signature table over {0..domain_size-1}**arity.

    values is in lexicographic order of the input tuple (first input most
    significant). symmetric is verified when claimed and auto-detected when
    omitted. kind is a pruning hint (the table stays authoritative).
    """

    arity: int
    domain_size: int
    values: tuple[int, ...]
    symmetric: bool
    kind: str

    def __init__(
        self,
        arity: int,
        domain_size: int,
        values: Sequence[int],
        symmetric: Optional[bool] = None,
        kind: str = GENERIC,
    ):
        vals = tuple(int(x) for x in values)
        if arity < 0 or domain_size < 0:
            raise ValueError("arity and domain size must be nonnegative")
        if len(vals) != domain_size**arity:
            raise ValueError(
                "table has %d entries, expected %d" % (len(vals), domain_size**arity)
            )
        if kind not in (GENERIC, ALL_DISTINCT, EQUALITY):
            raise ValueError("unknown signature kind %r" % kind)
        detected = _table_symmetric(arity, domain_size, vals)
        if symmetric is None:
            symmetric = detected
        elif symmetric and not detected:
            raise ValueError("signature declared symmetric but table is not")
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "domain_size", domain_size)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "symmetric", bool(symmetric))
        object.__setattr__(self, "kind", kind)

    def value(self, assignment: Sequence[int]) -> int:
        if len(assignment) != self.arity:
            raise ValueError("assignment length does not match arity")
        return self.values[_tuple_index(assignment, self.domain_size)]

    def matrix(self) -> Matrix:
        if self.arity != 2:
            raise PreconditionError("matrix form needs arity 2")
        k = self.domain_size
        return tuple(
            tuple(self.values[i * k + j] for j in range(k)) for i in range(k)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.values)


def _table_symmetric(arity: int, k: int, vals: Sequence[int]) -> bool:
    if arity <= 1 or k == 0:
        return True
    # symmetric iff the value only depends on the multiset of inputs
    def tuples(prefix, depth):
        if depth == arity:
            yield prefix
            return
        for c in range(k):
            yield from tuples(prefix + (c,), depth + 1)

    for t in tuples((), 0):
        if vals[_tuple_index(t, k)] != vals[_tuple_index(tuple(sorted(t)), k)]:
            return False
    return True


def ad_signature(arity: int, kappa: int) -> Signature:
    """All-distinct: 1 on pairwise-distinct inputs, else 0.

    Identically zero when arity > kappa; the arity-0 table is the scalar 1.
    """
    vals = []
    for idx in range(kappa**arity):
        t = []
        x = idx
        for _ in range(arity):
            t.append(x % kappa)
            x //= kappa
        vals.append(1 if len(set(t)) == arity else 0)
    return Signature(arity, kappa, vals, symmetric=True, kind=ALL_DISTINCT)


def equality_signature(arity: int, kappa: int) -> Signature:
    """1 on constant input tuples, else 0. Arity 1 is the all-ones unary."""
    vals = []
    for idx in range(kappa**arity):
        t = []
        x = idx
        for _ in range(arity):
            t.append(x % kappa)
            x //= kappa
        vals.append(1 if len(set(t)) <= 1 else 0)
    return Signature(arity, kappa, vals, symmetric=True, kind=EQUALITY)


def signature_from_matrix(matrix: Sequence[Sequence[int]]) -> Signature:
    k = len(matrix)
    vals = []
    for row in matrix:
        if len(row) != k:
            raise ValueError("matrix must be square")
        vals.extend(int(x) for x in row)
    return Signature(2, k, vals)


@dataclass(frozen=True)
class SignatureGrid:
    """A multigraph with one signature per vertex and per-vertex input order.

    incidences[v] lists the edge indices feeding v's signature inputs, in
    input order; it must be a permutation of the edges incident to v.
    """

    graph: MultiGraph
    signatures: tuple[Signature, ...]
    incidences: tuple[tuple[int, ...], ...]


def make_grid(
    graph: MultiGraph,
    signatures: Sequence[Signature],
    incidences: Optional[Sequence[Sequence[int]]] = None,
) -> SignatureGrid:
    if len(signatures) != graph.vertex_count:
        raise ValueError("need one signature per vertex")
    default = graph.incidence_lists()
    if incidences is None:
        inc = tuple(tuple(lst) for lst in default)
    else:
        inc = tuple(tuple(lst) for lst in incidences)
        if len(inc) != graph.vertex_count:
            raise ValueError("need one incidence tuple per vertex")
        for v in range(graph.vertex_count):
            if sorted(inc[v]) != default[v]:
                raise ValueError(
                    "incidence order at vertex %d is not a permutation of its edges"
                    % v
                )
    sizes = {s.domain_size for s in signatures}
    if len(sizes) > 1:
        raise ValueError("signatures disagree on domain size")
    for v, s in enumerate(signatures):
        if s.arity != len(inc[v]):
            raise ValueError(
                "vertex %d has degree %d but signature arity %d"
                % (v, len(inc[v]), s.arity)
            )
    return SignatureGrid(graph, tuple(signatures), inc)


def ad_grid(graph: MultiGraph, kappa: int) -> SignatureGrid:
    """Grid with the all-distinct signature at every vertex; its Holant is
    exactly the proper edge coloring count."""
    degs = graph.degrees()
    return make_grid(graph, [ad_signature(d, kappa) for d in degs])


def _run_grid(grid: SignatureGrid, on_leaf: Callable[[int, list[int]], None]) -> None:
    """Backtrack over edge assignments; call on_leaf(product, colors) once
    per assignment whose vertex products are all nonzero."""
    graph = grid.graph
    n_edges = len(graph.edges)
    n_vertices = graph.vertex_count
    if n_vertices == 0:
        on_leaf(1, [])
        return
    k = grid.signatures[0].domain_size

    # scalar vertices contribute a constant factor
    const = 1
    for v in range(n_vertices):
        if grid.signatures[v].arity == 0:
            const *= grid.signatures[v].values[0]
    if n_edges == 0:
        if const != 0:
            on_leaf(const, [])
        return
    if k == 0:
        return

    # edge slot per endpoint: (vertex, input position)
    slots: list[list[tuple[int, int]]] = [[] for _ in range(n_edges)]
    for v in range(n_vertices):
        for pos, e in enumerate(grid.incidences[v]):
            slots[e].append((v, pos))

    # static order: repeatedly take the edge whose endpoints are closest to
    # completion, so vertex checks fire early
    rem = [len(grid.incidences[v]) for v in range(n_vertices)]
    chosen = [False] * n_edges
    order: list[int] = []
    for _ in range(n_edges):
        best, best_key = -1, None
        for e in range(n_edges):
            if chosen[e]:
                continue
            (u, _), (v, _) = slots[e]
            key = (min(rem[u], rem[v]), max(rem[u], rem[v]), e)
            if best_key is None or key < best_key:
                best, best_key = e, key
        order.append(best)
        chosen[best] = True
        (u, _), (v, _) = slots[best]
        rem[u] -= 1
        rem[v] -= 1

    sigs = grid.signatures
    arities = [s.arity for s in sigs]
    kinds = [s.kind for s in sigs]
    assigned: list[list[Optional[int]]] = [[None] * arities[v] for v in range(n_vertices)]
    filled = [0] * n_vertices
    colors = [0] * n_edges

    def vertex_ok(v: int, c: int) -> bool:
        kind = kinds[v]
        if kind == ALL_DISTINCT:
            return c not in assigned[v]
        if kind == EQUALITY:
            for x in assigned[v]:
                if x is not None and x != c:
                    return False
        return True

    def place(v: int, pos: int, c: int):
        """Returns (ok, multiplier) and mutates state; caller must unplace."""
        assigned[v][pos] = c
        filled[v] += 1
        if filled[v] == arities[v]:
            val = sigs[v].values[_tuple_index(assigned[v], k)]
            return val
        return 1

    def unplace(v: int, pos: int):
        assigned[v][pos] = None
        filled[v] -= 1

    def rec(i: int, acc: int):
        if i == n_edges:
            on_leaf(acc, colors)
            return
        e = order[i]
        (u, pu), (v, pv) = slots[e]
        for c in range(k):
            if not vertex_ok(u, c) or not vertex_ok(v, c):
                continue
            mu = place(u, pu, c)
            if mu == 0:
                unplace(u, pu)
                continue
            mv = place(v, pv, c)
            if mv == 0:
                unplace(v, pv)
                unplace(u, pu)
                continue
            colors[e] = c
            rec(i + 1, acc * mu * mv)
            unplace(v, pv)
            unplace(u, pu)

    rec(0, const)
    # note: if const == 0 every leaf product would be zero; skip entirely
    return


def _permuted_table(kappa: int, vars_: Sequence[int], table: Sequence[int],
                    new_order: Sequence[int]) -> list:
    """Reindex a dense tensor table to a new variable order (first variable
    most significant), via a mixed-radix odometer over the new order."""
    r = len(vars_)
    pos = {v: i for i, v in enumerate(vars_)}
    old_stride = [kappa ** (r - 1 - i) for i in range(r)]
    strides = [old_stride[pos[v]] for v in new_order]
    out = [0] * len(table)
    digits = [0] * r
    idx_old = 0
    for idx_new in range(len(table)):
        out[idx_new] = table[idx_old]
        for d in range(r - 1, -1, -1):
            if digits[d] + 1 < kappa:
                digits[d] += 1
                idx_old += strides[d]
                break
            digits[d] = 0
            idx_old -= strides[d] * (kappa - 1)
    return out


def _contract_pair(kappa, vars1, tab1, vars2, tab2):
    """Merge two tensors, summing out every variable they share. Reduces to
    one integer matrix product after reshaping both tables."""
    shared_set = set(vars1) & set(vars2)
    shared = [v for v in vars1 if v in shared_set]
    out1 = [v for v in vars1 if v not in shared_set]
    out2 = [v for v in vars2 if v not in shared_set]
    a = _permuted_table(kappa, vars1, tab1, out1 + shared)
    b = _permuted_table(kappa, vars2, tab2, shared + out2)
    no1 = kappa ** len(out1)
    ns = kappa ** len(shared)
    no2 = kappa ** len(out2)
    out_tab = [0] * (no1 * no2)
    for i in range(no1):
        row = i * no2
        base_a = i * ns
        for k in range(ns):
            av = a[base_a + k]
            if av:
                base_b = k * no2
                for j in range(no2):
                    bv = b[base_b + j]
                    if bv:
                        out_tab[row + j] += av * bv
    return tuple(out1 + out2), out_tab


def eval_grid(grid: SignatureGrid) -> int:
    """Exact Holant value of the grid.

    Greedy pairwise tensor contraction: each vertex starts as a dense
    tensor over its incident edge variables; repeatedly the pair sharing at
    least one variable whose merge yields the smallest result is contracted
    until only scalars remain. Cost is governed by the largest intermediate
    boundary, not by the value, so sparse and chain-like grids evaluate
    quickly even when the Holant itself is astronomical.
    """
    const = 1
    tensors: list[tuple[tuple[int, ...], list]] = []
    kappa = 0
    for v, sig in enumerate(grid.signatures):
        kappa = sig.domain_size
        if sig.arity == 0:
            const *= sig.values[0]
        else:
            tensors.append((tuple(grid.incidences[v]), list(sig.values)))
        if const == 0:
            return 0
    while tensors:
        remaining = []
        for vars_, tab in tensors:
            if vars_:
                remaining.append((vars_, tab))
            else:
                const *= tab[0]
        tensors = remaining
        if const == 0 or not tensors:
            break
        best_key = None
        best_pair = (0, 0)
        for i in range(len(tensors)):
            vi = set(tensors[i][0])
            ri = len(tensors[i][0])
            for j in range(i + 1, len(tensors)):
                s = len(vi.intersection(tensors[j][0]))
                if s == 0:
                    continue
                rj = len(tensors[j][0])
                key = (ri + rj - 2 * s, ri + rj - s, i, j)
                if best_key is None or key < best_key:
                    best_key = key
                    best_pair = (i, j)
        if best_key is None:
            raise RuntimeError(
                "internal: tensors with free variables but no shared edge"
            )
        i, j = best_pair
        merged = _contract_pair(
            kappa, tensors[i][0], tensors[i][1], tensors[j][0], tensors[j][1]
        )
        tensors[i] = merged
        del tensors[j]
    return const


def gate_signature(
    gadget: GadgetGraph, signatures: Optional[Sequence[Signature]], kappa: int
) -> Signature:
    """Signature of a gadget: sum over internal assignments per boundary.

    signatures lists one signature per internal vertex whose arity must be
    the vertex degree counting dangling edges; None means all-distinct at
    every vertex. The output's variable order is the gadget's dangling
    order. The whole table is filled in one sweep by attaching each dangler
    to an unconstrained unary carrier and classifying leaves by the dangler
    edge colors.
    """
    d = len(gadget.dangling)
    n = gadget.vertex_count
    if signatures is None:
        signatures = [ad_signature(gadget.degree(v), kappa) for v in range(n)]
    if len(signatures) != n:
        raise ValueError("need one signature per internal vertex")
    for v in range(n):
        if signatures[v].arity != gadget.degree(v):
            raise ValueError(
                "vertex %d has degree %d (dangling included) but arity %d"
                % (v, gadget.degree(v), signatures[v].arity)
            )
    base_edges = list(gadget.base.edges)
    ext_edges = base_edges + [
        (att, n + j) for j, att in enumerate(gadget.dangling)
    ]
    ext_graph = MultiGraph(n + d, ext_edges)
    carriers = [equality_signature(1, kappa) for _ in range(d)]
    grid = make_grid(ext_graph, list(signatures) + carriers)
    n_base = len(base_edges)
    table = [0] * (kappa**d)

    def leaf(acc, colors):
        idx = 0
        for j in range(d):
            idx = idx * kappa + colors[n_base + j]
        table[idx] += acc

    _run_grid(grid, leaf)
    return Signature(d, kappa, table)


def place_binary_on_edges(
    grid: SignatureGrid, selector: EdgeSelector, sig: Signature
) -> SignatureGrid:
    """Split each selected edge (u, v) into (u, w), (w, v) with a fresh
    vertex w carrying sig. Requires a symmetric binary signature, since an
    undirected edge has no orientation to hang an asymmetric table on.
    """
    if sig.arity != 2:
        raise PreconditionError("placed signature must be binary")
    k = grid.signatures[0].domain_size if grid.signatures else sig.domain_size
    if sig.domain_size != k:
        raise PreconditionError("placed signature domain size mismatch")
    m = sig.matrix()
    if any(m[i][j] != m[j][i] for i in range(k) for j in range(k)):
        raise PreconditionError(
            "placed signature must be symmetric on an undirected edge"
        )
    graph = grid.graph
    selected = sorted(selector.select(graph))
    if not selected:
        return grid
    n = graph.vertex_count
    new_edges: list[tuple[int, int]] = list(graph.edges)
    remap: dict[int, tuple[int, int]] = {}
    # entry connector keeps the old index (u side); exit connector appended
    for s_pos, e in enumerate(selected):
        u, v = graph.edges[e]
        w = n + s_pos
        new_edges[e] = (u, w)
        exit_idx = len(new_edges)
        new_edges.append((v, w))
        remap[e] = (w, exit_idx)
    new_graph = MultiGraph(n + len(selected), new_edges)

    new_inc: list[tuple[int, ...]] = []
    for v in range(n):
        row = []
        for e in grid.incidences[v]:
            if e in remap:
                u0, v0 = graph.edges[e]
                if v == v0 and v != u0:
                    row.append(remap[e][1])
                else:
                    row.append(e)
            else:
                row.append(e)
        new_inc.append(tuple(row))
    for s_pos, e in enumerate(selected):
        new_inc.append((e, remap[e][1]))
    new_sigs = list(grid.signatures) + [sig] * len(selected)
    return make_grid(new_graph, new_sigs, new_inc)


# ---------------------------------------------------------------------------
# small exact matrix helpers over the color domain


def matrix_identity(k: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def matrix_ones(k: int) -> Matrix:
    return tuple(tuple(1 for _ in range(k)) for _ in range(k))


def matrix_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    k = len(a)
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def matrix_power(a: Sequence[Sequence[int]], n: int) -> Matrix:
    if n < 0:
        raise ValueError("negative matrix power")
    k = len(a)
    result = matrix_identity(k)
    base = tuple(tuple(int(x) for x in row) for row in a)
    while n:
        if n & 1:
            result = matrix_mul(result, base)
        base = matrix_mul(base, base)
        n >>= 1
    return result


def decompose_domain_invariant(
    sig_or_matrix: Union[Signature, Sequence[Sequence[int]]],
) -> Optional[tuple[int, int]]:
    """(a, b) when the binary table is a on the diagonal and b off it."""
    if isinstance(sig_or_matrix, Signature):
        m = sig_or_matrix.matrix()
    else:
        m = tuple(tuple(int(x) for x in row) for row in sig_or_matrix)
    k = len(m)
    if k < 2:
        raise PreconditionError("domain invariance needs domain size >= 2")
    if any(len(row) != k for row in m):
        raise ValueError("matrix must be square")
    a = m[0][0]
    b = m[0][1]
    for i in range(k):
        for j in range(k):
            if (m[i][j] != a) if i == j else (m[i][j] != b):
                return None
    return a, b


def eigenvalues_ab(a: int, b: int, kappa: int) -> tuple[int, int]:
    """Eigenvalues of (a-b)I + bJ: the all-ones direction gives a+(kappa-1)b
    (multiplicity 1), every difference direction gives a-b."""
    return a + (kappa - 1) * b, a - b
