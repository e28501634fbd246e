"""Abrams' discretized configuration space D_n(G) as an integer cubical complex.

Cells are n-slot tuples of vertices and edges with pairwise disjoint
closures; the dimension is the number of edge slots.  Both the ordered
variant (all tuples) and the unordered one (sorted orbit representatives
of the free symmetric-group action) are supported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import BadParamsError, NotASubgraphError
from .graphs import SimpleGraph, SubdivisionRecord, make_graph, subdivide_uniform
from .homology import ChainMap, IntegerChainComplex, Sparse

# slot encodings sort edges before vertices, matching the orbit representative
Slot = tuple  # ('e', a, b) or ('v', v)


def edge_slot(a: int, b: int) -> Slot:
    return ("e", a, b) if a < b else ("e", b, a)


def vertex_slot(v: int) -> Slot:
    return ("v", v)


def slot_closure(slot: Slot) -> tuple[int, ...]:
    return slot[1:] if slot[0] == "e" else (slot[1],)


@dataclass(frozen=True)
class CubicalComplex:
    graph: SimpleGraph
    n: int
    ordered: bool
    cells: tuple[tuple[tuple[Slot, ...], ...], ...]  # per dimension, sorted
    chain: IntegerChainComplex

    @cached_property
    def cell_index(self) -> dict[tuple[Slot, ...], tuple[int, int]]:
        out = {}
        for d, layer in enumerate(self.cells):
            for idx, key in enumerate(layer):
                out[key] = (d, idx)
        return out

    def cell_counts(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.cells)

    def euler_characteristic(self) -> int:
        return self.chain.euler_characteristic()


def build_discretized(g: SimpleGraph, n: int, ordered: bool = True) -> CubicalComplex:
    """Enumerate cells and assemble boundary matrices for D_n(G)."""
    if n < 1:
        raise BadParamsError("n must be >= 1")
    slots = [edge_slot(a, b) for a, b in g.edges] + [vertex_slot(v) for v in g.vertices]
    slots.sort()

    per_dim: list[list[tuple[Slot, ...]]] = [[] for _ in range(n + 1)]

    if ordered:
        chosen: list[Slot] = []
        used: set[int] = set()

        def rec_ord():
            if len(chosen) == n:
                key = tuple(chosen)
                per_dim[sum(1 for s in key if s[0] == "e")].append(key)
                return
            for s in slots:
                cl = slot_closure(s)
                if any(v in used for v in cl):
                    continue
                chosen.append(s)
                used.update(cl)
                rec_ord()
                used.difference_update(cl)
                chosen.pop()

        rec_ord()
    else:
        chosen = []
        used = set()

        def rec_unord(start: int):
            if len(chosen) == n:
                key = tuple(chosen)
                per_dim[sum(1 for s in key if s[0] == "e")].append(key)
                return
            if n - len(chosen) > len(slots) - start:
                return
            for idx in range(start, len(slots)):
                s = slots[idx]
                cl = slot_closure(s)
                if any(v in used for v in cl):
                    continue
                chosen.append(s)
                used.update(cl)
                rec_unord(idx + 1)
                used.difference_update(cl)
                chosen.pop()

        rec_unord(0)

    for layer in per_dim:
        layer.sort()
    index = [
        {key: i for i, key in enumerate(layer)} for layer in per_dim
    ]

    boundaries: list[Sparse] = [dict() for _ in range(n + 1)]
    for d in range(1, n + 1):
        bd: Sparse = {}
        for col, key in enumerate(per_dim[d]):
            edge_rank = 0
            for pos, s in enumerate(key):
                if s[0] != "e":
                    continue
                _, a, b = s
                sign = -1 if edge_rank % 2 else 1
                for endpoint, coeff in ((b, sign), (a, -sign)):
                    face = _face_key(key, pos, endpoint, ordered)
                    row = index[d - 1][face]
                    cur = bd.get((row, col), 0) + coeff
                    if cur:
                        bd[(row, col)] = cur
                    else:
                        bd.pop((row, col), None)
                edge_rank += 1
        boundaries[d] = bd

    chain = IntegerChainComplex(
        tuple(len(layer) for layer in per_dim), tuple(boundaries)
    )
    return CubicalComplex(g, n, ordered, tuple(tuple(l) for l in per_dim), chain)


def _face_key(key: tuple[Slot, ...], pos: int, endpoint: int, ordered: bool):
    repl = list(key)
    repl[pos] = vertex_slot(endpoint)
    if not ordered:
        repl.sort()
    return tuple(repl)


# -- sufficiency of subdivision ----------------------------------------------


def _arcs_and_girth(g: SimpleGraph) -> tuple[list[int], int | None]:
    """Lengths of maximal degree-2-interior paths between non-degree-2
    endpoints, and the girth (None when acyclic)."""
    arcs: list[int] = []
    essential = [v for v in g.vertices if g.degree(v) != 2]
    seen_edges: set[tuple[int, int]] = set()
    for v in essential:
        for w in g.adjacency[v]:
            e = (v, w)
            if e in seen_edges:
                continue
            # walk from v through w across degree-2 vertices
            path = [v, w]
            seen_edges.add((v, w))
            seen_edges.add((w, v))
            while g.degree(path[-1]) == 2 and path[-1] not in essential:
                prev, cur = path[-2], path[-1]
                nxt = next(x for x in g.adjacency[cur] if x != prev)
                seen_edges.add((cur, nxt))
                seen_edges.add((nxt, cur))
                path.append(nxt)
            if path[-1] == v:
                continue  # closed walk back to v: a cycle, handled by girth
            arcs.append(len(path) - 1)
    girth = _girth(g)
    return arcs, girth


def _girth(g: SimpleGraph) -> int | None:
    best: int | None = None
    from collections import deque

    for a, b in g.edges:
        # shortest a-b path avoiding the edge (a, b)
        dist = {a: 0}
        dq = deque([a])
        found = None
        while dq:
            x = dq.popleft()
            if best is not None and dist[x] + 1 >= best:
                continue
            for y in g.adjacency[x]:
                if x == a and y == b:
                    continue
                if y == b:
                    found = dist[x] + 1
                    dq.clear()
                    break
                if y not in dist:
                    dist[y] = dist[x] + 1
                    dq.append(y)
        if found is not None:
            cyc = found + 1
            if best is None or cyc < best:
                best = cyc
    return best


def is_sufficiently_subdivided(g: SimpleGraph, n: int) -> bool:
    """Abrams' condition: every essential arc and every cycle has >= n+1 edges."""
    if n < 1:
        raise BadParamsError("n must be >= 1")
    arcs, girth = _arcs_and_girth(g)
    if any(a < n + 1 for a in arcs):
        return False
    if girth is not None and girth < n + 1:
        return False
    return True


def sufficient_subdivision(g: SimpleGraph, n: int) -> SubdivisionRecord:
    """Subdivide every edge into n+1 edges; always sufficient for n."""
    if n < 1:
        raise BadParamsError("n must be >= 1")
    rec = subdivide_uniform(g, n + 1)
    assert is_sufficiently_subdivided(rec.subdivided, n) or not g.edges
    return rec


# -- chain maps from subgraph inclusions --------------------------------------


def inclusion_chain_map(
    h: SimpleGraph,
    g: SimpleGraph,
    n: int,
    ordered: bool = True,
    source_complex: CubicalComplex | None = None,
    target_complex: CubicalComplex | None = None,
) -> ChainMap:
    """The degreewise 0/1 map sending each cell of D_n(H) to itself in D_n(G)."""
    if not h.is_subgraph_of(g):
        raise NotASubgraphError("H is not a subgraph of G")
    src = source_complex or build_discretized(h, n, ordered)
    tgt = target_complex or build_discretized(g, n, ordered)
    mats: list[Sparse] = []
    for d in range(n + 1):
        mat: Sparse = {}
        for col, key in enumerate(src.cells[d]):
            dd, row = tgt.cell_index[key]
            assert dd == d
            mat[(row, col)] = 1
        mats.append(mat)
    return ChainMap(src.chain, tgt.chain, tuple(mats))


# -- generator-graph surjectivity check ---------------------------------------


def generator_graph(i: int, n: int) -> SimpleGraph:
    """i isolated edges plus n-i isolated vertices."""
    if not 0 <= i <= n:
        raise BadParamsError("need 0 <= i <= n")
    verts = list(range(2 * i + (n - i)))
    edges = [(2 * k, 2 * k + 1) for k in range(i)]
    return make_graph(verts, edges)


@dataclass(frozen=True)
class CellGeneratorsReport:
    graph: SimpleGraph
    i: int
    n: int
    total_cells: int
    witnessed: int
    failures: tuple

    @property
    def all_witnessed(self) -> bool:
        return self.witnessed == self.total_cells


def cell_generators_check(g: SimpleGraph, i: int, n: int) -> CellGeneratorsReport:
    """Verify every i-cell of ordered D_n(G) is hit from the generator graph.

    The witness is the morphism sending the k-th isolated edge to the k-th
    edge slot and the isolated vertices to the vertex slots; its validity
    is exactly pairwise disjointness of the slot closures.
    """
    from .graphs import Path
    from .morphisms import TopMinorMorphism, validate_tm

    cx = build_discretized(g, n, ordered=True)
    src = generator_graph(i, n)
    total = len(cx.cells[i]) if i < len(cx.cells) else 0
    witnessed = 0
    failures = []
    for key in cx.cells[i]:
        edge_slots = [s for s in key if s[0] == "e"]
        vert_slots = [s for s in key if s[0] == "v"]
        rho_v = []
        rho_e = []
        for k, (_, a, b) in enumerate(edge_slots):
            rho_v.append((2 * k, a))
            rho_v.append((2 * k + 1, b))
            rho_e.append(((2 * k, 2 * k + 1), Path((a, b))))
        for k, (_, v) in enumerate(vert_slots):
            rho_v.append((2 * i + k, v))
        rho = TopMinorMorphism(src, g, tuple(sorted(rho_v)), tuple(rho_e))
        ok, violations = validate_tm(rho)
        if ok:
            witnessed += 1
        else:
            failures.append((key, tuple(violations)))
    return CellGeneratorsReport(g, i, n, total, witnessed, tuple(failures))


# -- export --------------------------------------------------------------------


def complex_to_json_obj(cx: CubicalComplex) -> dict:
    return {
        "n": cx.n,
        "ordered": cx.ordered,
        "cells": [
            ["|".join("-".join(map(str, s)) for s in key) for key in layer]
            for layer in cx.cells
        ],
        "boundaries": [
            sorted([r, c, v] for (r, c), v in cx.chain.boundaries[d].items())
            for d in range(len(cx.cells))
        ],
    }


def cell_count_table(cx: CubicalComplex) -> str:
    counts = cx.cell_counts()
    lines = ["dim\tcells"]
    lines += [f"{d}\t{c}" for d, c in enumerate(counts)]
    lines.append(f"chi\t{cx.euler_characteristic()}")
    return "\n".join(lines)
