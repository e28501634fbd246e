"""Topological minor morphisms: validation, composition, enumeration.

A morphism is a vertex injection plus an edge-to-path assignment subject
to four conditions; embeddings and subdivisions are the special cases
where the paths are single edges, resp. where the image exhausts the
target.  Enumeration is exhaustive backtracking, deterministic, and
deliberately exponential: desk scale only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import CompositionMismatchError, InvalidMorphismError
from .graphs import Edge, Path, SimpleGraph, family, norm_edge

KINDS = ("simplicial", "full", "tm", "subdivision")


@dataclass(frozen=True)
class TopMinorMorphism:
    source: SimpleGraph
    target: SimpleGraph
    rho_v_items: tuple[tuple[int, int], ...]
    rho_e_items: tuple[tuple[Edge, Path], ...]

    @cached_property
    def rho_v(self) -> dict[int, int]:
        return dict(self.rho_v_items)

    @cached_property
    def rho_e(self) -> dict[Edge, Path]:
        return dict(self.rho_e_items)

    @cached_property
    def image_edges(self) -> frozenset[Edge]:
        out: set[Edge] = set()
        for p in self.rho_e.values():
            out.update(p.edges)
        return frozenset(out)

    @cached_property
    def image_vertices(self) -> frozenset[int]:
        out = set(self.rho_v.values())
        for p in self.rho_e.values():
            out.update(p.vertices)
        return frozenset(out)

    def image_subgraph(self) -> SimpleGraph:
        return self.target.subgraph(self.image_edges, self.image_vertices)

    def is_simplicial(self) -> bool:
        return all(p.edge_count == 1 for p in self.rho_e.values())

    def to_json_obj(self) -> dict:
        return {
            "rho_V": {str(a): b for a, b in sorted(self.rho_v.items())},
            "rho_E": {
                f"{e[0]}-{e[1]}": list(p.oriented_from(self.rho_v[e[0]]))
                for e, p in sorted(self.rho_e.items())
            },
        }


def identity_morphism(g: SimpleGraph) -> TopMinorMorphism:
    return TopMinorMorphism(
        g,
        g,
        tuple((v, v) for v in g.vertices),
        tuple((e, Path(e)) for e in g.edges),
    )


def validate_tm(rho: TopMinorMorphism) -> tuple[bool, list[tuple[int, str]]]:
    """Check the four defining conditions; violations carry witnesses."""
    src, tgt = rho.source, rho.target
    violations: list[tuple[int, str]] = []
    rv, re = rho.rho_v, rho.rho_e
    if set(rv) != set(src.vertices) or set(re) != set(src.edges):
        raise InvalidMorphismError("rho_V / rho_E not total on the source")
    for v, w in rv.items():
        if w not in tgt.vertex_set:
            raise InvalidMorphismError(f"rho_V({v}) = {w} not in target")
    for e, p in re.items():
        if not p.validates_in(tgt):
            raise InvalidMorphismError(f"rho_E({e}) is not a path of the target")
    # (1) injectivity
    if len(set(rv.values())) != len(rv):
        violations.append((1, "rho_V is not injective"))
    # (2) endpoints
    for e, p in re.items():
        want = {rv[e[0]], rv[e[1]]}
        if set(p.endpoints) != want:
            violations.append((2, f"rho_E({e}) has endpoints {p.endpoints}, expected {tuple(want)}"))
    # (3) incidence
    for e, p in re.items():
        on_path = p.vertex_set
        for v, w in rv.items():
            incident = v in e
            if (w in on_path) != incident:
                violations.append((3, f"rho_V({v}) on rho_E({e}) mismatch"))
    # (4) path intersections
    edges = sorted(re)
    for i, e1 in enumerate(edges):
        for e2 in edges[i + 1 :]:
            inter = re[e1].vertex_set & re[e2].vertex_set
            shared = set(e1) & set(e2)
            if shared:
                want = {rv[next(iter(shared))]}
            else:
                want = set()
            if inter != want:
                violations.append((4, f"rho_E({e1}) and rho_E({e2}) meet in {sorted(inter)}"))
    return (not violations, violations)


def extend_to_path(rho: TopMinorMorphism, p: Path) -> Path:
    """The canonical extension rho_P applied to a path of the source."""
    vs = p.vertices
    if len(vs) == 1:
        return Path((rho.rho_v[vs[0]],))
    out = [rho.rho_v[vs[0]]]
    for i in range(len(vs) - 1):
        e = norm_edge(vs[i], vs[i + 1])
        seg = rho.rho_e[e].oriented_from(rho.rho_v[vs[i]])
        out.extend(seg[1:])
    return Path(tuple(out))


def compose_tm(sigma: TopMinorMorphism, rho: TopMinorMorphism) -> TopMinorMorphism:
    """sigma after rho (paths of rho mapped through sigma's path extension)."""
    if rho.target.vertices != sigma.source.vertices or rho.target.edges != sigma.source.edges:
        raise CompositionMismatchError("target of rho is not the source of sigma")
    rho_v = tuple((v, sigma.rho_v[w]) for v, w in rho.rho_v_items)
    rho_e = tuple((e, extend_to_path(sigma, p)) for e, p in rho.rho_e_items)
    out = TopMinorMorphism(rho.source, sigma.target, rho_v, rho_e)
    ok, violations = validate_tm(out)
    if not ok:
        raise InvalidMorphismError(f"composite is not a morphism: {violations}")
    return out


def is_subdivision(rho: TopMinorMorphism) -> bool:
    """True iff the image exhausts the target (a homeomorphism on realizations)."""
    ok, violations = validate_tm(rho)
    if not ok:
        raise InvalidMorphismError(f"not a morphism: {violations}")
    if rho.image_vertices != rho.target.vertex_set:
        return False
    counts: dict[Edge, int] = {}
    for p in rho.rho_e.values():
        for e in p.edges:
            counts[e] = counts.get(e, 0) + 1
    return set(counts) == set(rho.target.edges) and all(c == 1 for c in counts.values())


class MorphismList(list):
    """Result list for enumerate_tm; ``truncated`` flags a reached limit."""

    truncated: bool = False


def enumerate_tm(source: SimpleGraph, target: SimpleGraph, kind: str = "tm",
                 limit: int | None = None) -> MorphismList:
    """All morphisms of the requested kind, in deterministic order."""
    if kind not in KINDS:
        raise InvalidMorphismError(f"unknown kind {kind!r}")
    out = MorphismList()
    for rho in iter_tm(source, target, kind):
        out.append(rho)
        if limit is not None and len(out) >= limit:
            out.truncated = True
            break
    return out


def iter_tm(source: SimpleGraph, target: SimpleGraph, kind: str = "tm"):
    """Generator behind enumerate_tm."""
    if kind in ("simplicial", "full"):
        yield from _iter_simplicial(source, target, reflect=(kind == "full"))
        return
    for rho in _iter_tm_general(source, target):
        if kind == "subdivision" and not is_subdivision(rho):
            continue
        yield rho


def _iter_simplicial(source: SimpleGraph, target: SimpleGraph, reflect: bool):
    svs = sorted(source.vertices, key=lambda v: (-source.degree(v), v))
    assign: dict[int, int] = {}
    used: set[int] = set()

    def ok(v: int, w: int) -> bool:
        for u, x in assign.items():
            adj_s = source.has_edge(u, v)
            adj_t = target.has_edge(x, w)
            if adj_s and not adj_t:
                return False
            if reflect and adj_t and not adj_s:
                return False
        return True

    def rec(k: int):
        if k == len(svs):
            rho_v = tuple(sorted(assign.items()))
            rho_e = tuple(
                (e, Path((assign[e[0]], assign[e[1]]))) for e in source.edges
            )
            yield TopMinorMorphism(source, target, rho_v, rho_e)
            return
        v = svs[k]
        for w in target.vertices:
            if w in used or target.degree(w) < source.degree(v):
                continue
            if ok(v, w):
                assign[v] = w
                used.add(w)
                yield from rec(k + 1)
                used.discard(w)
                del assign[v]

    yield from rec(0)


def _iter_tm_general(source: SimpleGraph, target: SimpleGraph):
    svs = sorted(source.vertices, key=lambda v: (-source.degree(v), v))
    assign: dict[int, int] = {}
    used: set[int] = set()

    def feasible(v: int, w: int) -> bool:
        # necessary condition: every already-assigned neighbor must still be
        # reachable through vertices that are not images of other vertices
        images = set(assign.values()) | {w}
        for u in source.adjacency[v]:
            x = assign.get(u)
            if x is None:
                continue
            blocked = images - {w, x}
            if not _connected_avoiding(target, w, x, blocked):
                return False
        return True

    def rec(k: int):
        if k == len(svs):
            yield from _assign_paths(source, target, dict(assign))
            return

        v = svs[k]
        for w in target.vertices:
            if w in used or target.degree(w) < source.degree(v):
                continue
            if feasible(v, w):
                assign[v] = w
                used.add(w)
                yield from rec(k + 1)
                used.discard(w)
                del assign[v]

    yield from rec(0)


def _connected_avoiding(g: SimpleGraph, a: int, b: int, blocked: set[int]) -> bool:
    if a == b:
        return True
    seen = {a}
    dq = deque([a])
    while dq:
        x = dq.popleft()
        for y in g.adjacency[x]:
            if y == b:
                return True
            if y not in seen and y not in blocked:
                seen.add(y)
                dq.append(y)
    return False


def _assign_paths(source: SimpleGraph, target: SimpleGraph, rho_v: dict[int, int]):
    """Edge-by-edge path assignment once rho_V is fixed.

    Interiors of chosen paths must avoid every vertex image and every
    vertex already covered by another path; endpoints shared between
    source edges coincide automatically at the shared image.
    """
    images = set(rho_v.values())
    edges = sorted(source.edges)
    chosen: list[tuple[Edge, Path]] = []

    def used_vertices() -> set[int]:
        out = set()
        for _, p in chosen:
            out.update(p.vertices)
        return out

    def rec(k: int):
        if k == len(edges):
            yield TopMinorMorphism(
                source, target, tuple(sorted(rho_v.items())), tuple(chosen)
            )
            return
        e = edges[k]
        a, b = rho_v[e[0]], rho_v[e[1]]
        if a == b:
            return
        forbidden = (images | used_vertices()) - {a, b}
        paths: list[tuple[int, ...]] = []

        def dfs(seq: list[int], seen: set[int]):
            last = seq[-1]
            for w in sorted(target.adjacency[last]):
                if w == b:
                    paths.append(tuple(seq) + (b,))
                    continue
                if w in seen or w in forbidden:
                    continue
                seq.append(w)
                seen.add(w)
                dfs(seq, seen)
                seen.discard(w)
                seq.pop()

        dfs([a], {a})
        paths.sort(key=lambda p: (len(p), p))
        for seq in paths:
            chosen.append((e, Path(seq)))
            yield from rec(k + 1)
            chosen.pop()

    yield from rec(0)


def has_topological_minor(pattern: SimpleGraph, host: SimpleGraph) -> bool:
    return bool(enumerate_tm(pattern, host, "tm", limit=1))


def gtm_k_member(g: SimpleGraph, k: int) -> bool:
    """True iff g admits no k-th Robertson chain as a topological minor."""
    if k < 1:
        raise InvalidMorphismError("k must be >= 1")
    return not has_topological_minor(family("robertson_chain", k), g)


# -- homeomorphism-type utilities ---------------------------------------------


def smooth(g: SimpleGraph) -> SimpleGraph:
    """Minimal simplicial representative: suppress degree-2 vertices while
    no loop or parallel edge would be created."""
    cur = g
    while True:
        pick = None
        for v in cur.vertices:
            nb = cur.adjacency[v]
            if len(nb) == 2:
                u, w = nb
                if u != w and not cur.has_edge(u, w):
                    pick = (v, u, w)
                    break
        if pick is None:
            return cur
        v, u, w = pick
        verts = tuple(x for x in cur.vertices if x != v)
        edges = tuple(sorted(
            [e for e in cur.edges if v not in e] + [norm_edge(u, w)]
        ))
        cur = SimpleGraph(verts, edges)


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Exhaustive isomorphism test with degree pruning (desk scale)."""
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return False
    gvs = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    assign: dict[int, int] = {}
    used: set[int] = set()

    def rec(k: int) -> bool:
        if k == len(gvs):
            return True
        v = gvs[k]
        for w in h.vertices:
            if w in used or h.degree(w) != g.degree(v):
                continue
            if all(
                g.has_edge(u, v) == h.has_edge(x, w) for u, x in assign.items()
            ):
                assign[v] = w
                used.add(w)
                if rec(k + 1):
                    return True
                used.discard(w)
                del assign[v]
        return False

    return rec(0)


def is_homeomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    return is_isomorphic(smooth(g), smooth(h))


def morphism_to_json(rho: TopMinorMorphism) -> dict:
    return rho.to_json_obj()
