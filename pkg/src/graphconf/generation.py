"""Finite-generation checks for homology of graph configuration spaces.

Decides whether H_i of the n-strand configuration space of G is spanned
by classes supported on topological subgraphs homeomorphic to members of
a finite generator list, and computes the Betti-number and
Robertson-chain filtration stages for a fixed target graph.  Everything
is computed in the discretized model on a sufficiently subdivided copy
of G; a negative verdict is only valid for the subdivision level used,
which every report records.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .discretized import (
    CubicalComplex,
    build_discretized,
    inclusion_chain_map,
    is_sufficiently_subdivided,
)
from .errors import BadParamsError
from .graphs import SimpleGraph, betti1, subdivide_uniform
from .homology import (
    HomologyPresentation,
    Subgroup,
    cycle_image_subgroup,
    presentation,
    span_and_test,
)
from .morphisms import (
    TopMinorMorphism,
    gtm_k_member,
    is_homeomorphic,
    iter_tm,
    smooth,
)
from .snf import snf


@dataclass(frozen=True)
class GeneratorList:
    graphs: tuple[SimpleGraph, ...]

    def __post_init__(self):
        for a, b in itertools.combinations(self.graphs, 2):
            if is_homeomorphic(a, b):
                raise BadParamsError("generator list contains homeomorphic entries")
        for g in self.graphs:
            if g != smooth(g):
                raise BadParamsError(
                    "generators must be minimal representatives (no degree-2 vertices)"
                )

    @staticmethod
    def of(*graphs: SimpleGraph) -> "GeneratorList":
        """Smooth the inputs to minimal representatives, then validate."""
        return GeneratorList(tuple(smooth(g) for g in graphs))


@dataclass
class AmbientContext:
    """The subdivided target graph with its complex and H_i presentation."""

    graph: SimpleGraph
    i: int
    n: int
    extra_subdivision: int
    ordered: bool
    subdivided: SimpleGraph
    complex: CubicalComplex
    pres: HomologyPresentation
    _image_cache: dict = field(default_factory=dict)

    def image_of_subgraph(self, h: SimpleGraph) -> Subgroup:
        """Image of H_i(D_n(H)) -> H_i(D_n(G'')) for a subgraph H."""
        key = (h.vertices, h.edges)
        cached = self._image_cache.get(key)
        if cached is not None:
            return cached
        fmap = inclusion_chain_map(
            h, self.subdivided, self.n, self.ordered, target_complex=self.complex
        )
        src = fmap.source
        if self.i == 0:
            kernel = [{j: 1} for j in range(src.rank(0))]
        else:
            res = snf(src.boundary(self.i),
                      (src.rank(self.i - 1), src.rank(self.i)), track_v=True)
            kernel = res.kernel_basis()
        cycles = [fmap.apply(self.i, vec) for vec in kernel]
        sub = cycle_image_subgroup(self.pres, cycles)
        self._image_cache[key] = sub
        return sub


def build_ambient(
    g: SimpleGraph, i: int, n: int, extra_subdivision: int = 0, ordered: bool = True
) -> AmbientContext:
    if n < 1 or i < 0 or extra_subdivision < 0:
        raise BadParamsError("need n >= 1, i >= 0, extra_subdivision >= 0")
    sub = subdivide_uniform(g, n + 1 + extra_subdivision).subdivided
    cx = build_discretized(sub, n, ordered)
    return AmbientContext(g, i, n, extra_subdivision, ordered, sub, cx,
                          presentation(cx.chain, i))


# -- generator images ----------------------------------------------------------


def _subgraph_key(h: SimpleGraph):
    return (h.vertices, h.edges)


def generator_images(
    ctx: AmbientContext, gen: SimpleGraph
) -> tuple[list[SimpleGraph], int, TopMinorMorphism | None]:
    """Distinct image subgraphs of morphisms gen -> G'' whose images are
    sufficiently subdivided, plus the raw morphism count and one witness."""
    images: dict = {}
    count = 0
    witness = None
    for rho in iter_tm(gen, ctx.subdivided, kind="tm"):
        count += 1
        img = rho.image_subgraph()
        if not is_sufficiently_subdivided(img, ctx.n):
            continue
        if witness is None:
            witness = rho
        images.setdefault(_subgraph_key(img), img)
    return list(images.values()), count, witness


@dataclass(frozen=True)
class GenerationReport:
    graph: SimpleGraph
    i: int
    n: int
    extra_subdivision: int
    ordered: bool
    per_generator: tuple  # (generator, morphism count, image-subgraph count, image rank)
    achieved: Subgroup
    is_generated: bool
    witnesses: tuple  # one contributing morphism per generator, or None

    def to_json_obj(self) -> dict:
        from .morphisms import morphism_to_json

        return {
            "i": self.i,
            "n": self.n,
            "extra_subdivision": self.extra_subdivision,
            "ordered": self.ordered,
            "ambient_betti": self.achieved.ambient.betti,
            "ambient_torsion": self.achieved.ambient.torsion,
            "is_generated": self.is_generated,
            "achieved_rank": self.achieved.free_rank(),
            "generators": [
                {
                    "vertices": len(gen.vertices),
                    "edges": len(gen.edges),
                    "morphisms": cnt,
                    "image_subgraphs": imgs,
                    "image_rank": rank,
                }
                for gen, cnt, imgs, rank in self.per_generator
            ],
            "witnesses": [
                morphism_to_json(w) if w is not None else None for w in self.witnesses
            ],
        }

    def table(self) -> str:
        lines = ["generator\tmorphisms\timages\timage_rank"]
        for idx, (gen, cnt, imgs, rank) in enumerate(self.per_generator):
            lines.append(f"g{idx}({len(gen.vertices)}v,{len(gen.edges)}e)"
                         f"\t{cnt}\t{imgs}\t{rank}")
        lines.append(f"achieved rank {self.achieved.free_rank()} of "
                     f"{self.achieved.ambient.betti}; "
                     f"generated={self.is_generated}")
        return "\n".join(lines)


def generation_check(
    g: SimpleGraph,
    i: int,
    n: int,
    gens: GeneratorList,
    extra_subdivision: int = 0,
    ordered: bool = True,
    ctx: AmbientContext | None = None,
) -> GenerationReport:
    """Span the images of H_i over all sufficiently subdivided topological
    copies of the generators inside the subdivided target, and test fullness.

    Stops early once the span is the whole group.
    """
    ctx = ctx or build_ambient(g, i, n, extra_subdivision, ordered)
    acc = Subgroup.zero(ctx.pres)
    per_gen = []
    witnesses = []
    done = acc.is_full()
    for gen in gens.graphs:
        if done:
            per_gen.append((gen, 0, 0, 0))
            witnesses.append(None)
            continue
        images, count, witness = generator_images(ctx, gen)
        contributed = Subgroup.zero(ctx.pres)
        for img in images:
            contributed = contributed.join(ctx.image_of_subgraph(img))
        acc = acc.join(contributed)
        per_gen.append((gen, count, len(images), contributed.free_rank()))
        witnesses.append(witness)
        if acc.is_full():
            done = True
    return GenerationReport(
        g, i, n, extra_subdivision, ordered, tuple(per_gen), acc,
        acc.is_full(), tuple(witnesses)
    )


def generation_check_escalating(
    g: SimpleGraph,
    i: int,
    n: int,
    gens: GeneratorList,
    max_extra_subdivision: int = 2,
    ordered: bool = True,
) -> GenerationReport:
    """Retry at deeper subdivision levels until generated or the cap is hit."""
    report = None
    for extra in range(max_extra_subdivision + 1):
        report = generation_check(g, i, n, gens, extra, ordered)
        if report.is_generated:
            return report
    return report


# -- filtration stages ---------------------------------------------------------


def _stage_subgraphs(ctx: AmbientContext, predicate) -> list[SimpleGraph]:
    """Maximal edge subsets of the subdivided graph that pass the predicate
    and are sufficiently subdivided; isolated vertices are dropped since
    they contribute nothing in positive degree."""
    amb = ctx.subdivided
    edges = list(amb.edges)
    passing: list[frozenset] = []
    for size in range(len(edges), 0, -1):
        for combo in itertools.combinations(range(len(edges)), size):
            mask = frozenset(combo)
            if any(mask <= bigger for bigger in passing):
                continue
            h = amb.subgraph([edges[j] for j in combo])
            if is_sufficiently_subdivided(h, ctx.n) and predicate(h):
                passing.append(mask)
    return [amb.subgraph([edges[j] for j in mask]) for mask in passing]


def _stage_span(ctx: AmbientContext, predicate) -> Subgroup:
    subs = _stage_subgraphs(ctx, predicate)
    images = [ctx.image_of_subgraph(h) for h in subs]
    span, _ = span_and_test(images, ctx.pres)
    return span


def betti_stage(
    g: SimpleGraph,
    i: int,
    n: int,
    stage: int,
    extra_subdivision: int = 0,
    ordered: bool = True,
    ctx: AmbientContext | None = None,
) -> Subgroup:
    """Span of classes from subgraphs with first Betti number <= stage."""
    if stage < 0:
        raise BadParamsError("stage must be >= 0")
    ctx = ctx or build_ambient(g, i, n, extra_subdivision, ordered)
    return _stage_span(ctx, lambda h: betti1(h) <= stage)


def robertson_stage(
    g: SimpleGraph,
    i: int,
    n: int,
    k: int,
    extra_subdivision: int = 0,
    ordered: bool = True,
    ctx: AmbientContext | None = None,
) -> Subgroup:
    """Span of classes from subgraphs carrying no order-k Robertson chain
    as a topological minor.  Subgraphs with first Betti number below k are
    admitted without a minor search (the chain has Betti number k, and
    Betti numbers only drop under topological minors)."""
    if k < 1:
        raise BadParamsError("k must be >= 1")
    ctx = ctx or build_ambient(g, i, n, extra_subdivision, ordered)
    return _stage_span(ctx, lambda h: betti1(h) < k or gtm_k_member(h, k))


# -- brute-force oracle (no deduplication), used for cross-checks --------------


def brute_force_span(
    ctx: AmbientContext, gens: GeneratorList
) -> Subgroup:
    """Span over every morphism image individually, with no isotopy-class
    deduplication; must agree with generation_check's span."""
    acc = Subgroup.zero(ctx.pres)
    for gen in gens.graphs:
        for rho in iter_tm(gen, ctx.subdivided, kind="tm"):
            img = rho.image_subgraph()
            if not is_sufficiently_subdivided(img, ctx.n):
                continue
            acc = acc.join(ctx.image_of_subgraph(img))
            if acc.is_full():
                return acc
    return acc


def subgraph_homeomorphism_types(g: SimpleGraph) -> GeneratorList:
    """Minimal representatives of all homeomorphism types of subgraphs of g
    with at least one edge (used for self-generation checks).  The full
    graph's type comes first so that self-generation short-circuits."""
    from .morphisms import is_isomorphic

    reps: list[SimpleGraph] = []
    edges = list(g.edges)
    for size in range(len(edges), 0, -1):
        for combo in itertools.combinations(edges, size):
            h = smooth(g.subgraph(list(combo))).relabeled()
            if not any(is_isomorphic(h, r) for r in reps):
                reps.append(h)
    reps.sort(key=lambda r: (-len(r.edges), -len(r.vertices)))
    return GeneratorList(tuple(reps))
