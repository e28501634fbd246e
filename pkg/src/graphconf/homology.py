"""Integer homology of finite chain complexes, induced maps, and subgroups.

A chain complex is ranks per degree plus sparse boundary matrices.  All
homology data is derived from exact Smith normal forms; subgroups of a
homology group are canonicalized by Hermite normal form so that equality
and containment are plain lattice comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import AmbientMismatchError, NotAComplexError, NotChainMapError
from .snf import SNFResult, hermite_columns, hnf_contains, snf, sparse_matmul

Sparse = dict[tuple[int, int], int]


@dataclass(frozen=True)
class IntegerChainComplex:
    """ranks[d] = rank of C_d; boundaries[d]: C_d -> C_{d-1} (sparse)."""

    ranks: tuple[int, ...]
    boundaries: tuple[Sparse, ...]  # boundaries[0] is the zero map

    def __post_init__(self):
        if len(self.boundaries) != len(self.ranks):
            raise NotAComplexError("need one boundary per degree (degree 0 is zero)")

    def boundary(self, d: int) -> Sparse:
        if 1 <= d < len(self.ranks):
            return self.boundaries[d]
        return {}

    def rank(self, d: int) -> int:
        if 0 <= d < len(self.ranks):
            return self.ranks[d]
        return 0

    @property
    def top_degree(self) -> int:
        return len(self.ranks) - 1

    def check_boundary_squares_to_zero(self) -> bool:
        for d in range(2, len(self.ranks)):
            if sparse_matmul(self.boundaries[d - 1], self.boundaries[d]):
                return False
        return True

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * r for d, r in enumerate(self.ranks))


@dataclass(frozen=True)
class HomologySummary:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]  # per degree, divisibility order

    def to_json_obj(self) -> dict:
        return {
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
        }


def homology(c: IntegerChainComplex) -> HomologySummary:
    """Betti numbers and torsion coefficients in every degree."""
    if not c.check_boundary_squares_to_zero():
        raise NotAComplexError("boundary does not square to zero")
    top = c.top_degree
    snfs: dict[int, SNFResult] = {}
    for d in range(1, top + 1):
        snfs[d] = snf(c.boundaries[d], (c.ranks[d - 1], c.ranks[d]))
    betti = []
    torsion = []
    for d in range(top + 1):
        rank_d = snfs[d].rank if d >= 1 else 0
        rank_d1 = snfs[d + 1].rank if d + 1 <= top else 0
        betti.append(c.ranks[d] - rank_d - rank_d1)
        torsion.append(tuple(snfs[d + 1].torsion) if d + 1 <= top else ())
    return HomologySummary(tuple(betti), tuple(torsion))


@dataclass
class HomologyPresentation:
    """H_d(C) presented in normal coordinates.

    ``kernel`` is the SNF of the boundary out of degree d (tracking V and
    V^-1), so its kernel basis spans the cycles Z_d.  ``relation_snf`` is
    the SNF (with U and U^-1) of the boundaries from degree d+1 written
    in kernel coordinates.  Normal coordinates are U * (kernel coords);
    coordinate j is taken modulo diag[j] when j < relation rank.
    """

    complex: IntegerChainComplex
    degree: int
    kernel: SNFResult
    relation_snf: SNFResult

    @property
    def cycle_rank(self) -> int:
        return self.kernel.n - self.kernel.rank

    @property
    def betti(self) -> int:
        return self.cycle_rank - self.relation_snf.rank

    @property
    def torsion(self) -> list[int]:
        return self.relation_snf.torsion

    @cached_property
    def relation_lattice(self) -> list[dict[int, int]]:
        """Relations in normal coordinates: diag[j] * e_j."""
        return [{j: d} for j, d in enumerate(self.relation_snf.diag)]

    def order_of_coordinate(self, j: int) -> int:
        """0 means infinite order (free coordinate)."""
        diag = self.relation_snf.diag
        return diag[j] if j < len(diag) else 0

    def cycle_to_normal(self, chain_vec: dict[int, int]) -> dict[int, int]:
        """Normal coordinates of a cycle given in chain coordinates."""
        kc = self.kernel.kernel_coords(chain_vec)
        out: dict[int, int] = {}
        for i in range(self.cycle_rank):
            row = self.relation_snf.u_rows.get(i)
            if not row:
                continue
            s = sum(v * kc.get(j, 0) for j, v in row.items())
            if s:
                out[i] = s
        return out

    def normal_to_kernel_coords(self, normal_vec: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for j, c in normal_vec.items():
            col = self.relation_snf.uinv_cols[j]
            for i, v in col.items():
                nv = out.get(i, 0) + c * v
                if nv:
                    out[i] = nv
                elif i in out:
                    del out[i]
        return out

    def normal_to_chain(self, normal_vec: dict[int, int]) -> dict[int, int]:
        """A chain-coordinate cycle representing the given normal vector."""
        kc = self.normal_to_kernel_coords(normal_vec)
        kb = self.kernel.kernel_basis()
        out: dict[int, int] = {}
        for j, c in kc.items():
            for i, v in kb[j].items():
                nv = out.get(i, 0) + c * v
                if nv:
                    out[i] = nv
                elif i in out:
                    del out[i]
        return out

    def summary(self) -> tuple[int, tuple[int, ...]]:
        return self.betti, tuple(self.torsion)


def presentation(c: IntegerChainComplex, d: int) -> HomologyPresentation:
    """Compute the homology presentation of C at degree d."""
    bd = c.boundary(d)
    kernel = snf(bd, (c.rank(d - 1), c.rank(d)), track_v=True, track_vinv=True)
    rel_cols: dict[tuple[int, int], int] = {}
    bd1 = c.boundary(d + 1)
    cols: dict[int, dict[int, int]] = {}
    for (i, j), v in bd1.items():
        cols.setdefault(j, {})[i] = v
    for j, colvec in cols.items():
        kc = kernel.kernel_coords(colvec)
        for i, v in kc.items():
            rel_cols[(i, j)] = v
    z = kernel.n - kernel.rank
    relation_snf = snf(rel_cols, (z, c.rank(d + 1)), track_u=True, track_uinv=True)
    return HomologyPresentation(c, d, kernel, relation_snf)


@dataclass(frozen=True)
class ChainMap:
    """A degreewise sparse map between chain complexes, commuting with d."""

    source: IntegerChainComplex
    target: IntegerChainComplex
    matrices: tuple[Sparse, ...]

    def matrix(self, d: int) -> Sparse:
        if 0 <= d < len(self.matrices):
            return self.matrices[d]
        return {}

    def check_commutes(self) -> bool:
        for d in range(1, len(self.source.ranks)):
            lhs = sparse_matmul(self.target.boundary(d), self.matrix(d))
            rhs = sparse_matmul(self.matrix(d - 1), self.source.boundary(d))
            if lhs != rhs:
                return False
        return True

    def apply(self, d: int, vec: dict[int, int]) -> dict[int, int]:
        cols: dict[int, dict[int, int]] = {}
        for (i, j), v in self.matrix(d).items():
            cols.setdefault(j, {})[i] = v
        out: dict[int, int] = {}
        for j, c in vec.items():
            col = cols.get(j)
            if not col:
                continue
            for i, v in col.items():
                nv = out.get(i, 0) + c * v
                if nv:
                    out[i] = nv
                elif i in out:
                    del out[i]
        return out


def compose_chain_maps(g: ChainMap, f: ChainMap) -> ChainMap:
    if f.target is not g.source and f.target.ranks != g.source.ranks:
        raise NotChainMapError("chain maps not composable")
    n = max(len(f.matrices), len(g.matrices))
    mats = tuple(sparse_matmul(g.matrix(d), f.matrix(d)) for d in range(n))
    return ChainMap(f.source, g.target, mats)


def induced_on_homology(
    f: ChainMap,
    d: int,
    source_pres: HomologyPresentation | None = None,
    target_pres: HomologyPresentation | None = None,
) -> dict[tuple[int, int], int]:
    """The map H_d(source) -> H_d(target) in normal coordinates."""
    if not f.check_commutes():
        raise NotChainMapError("map does not commute with boundaries")
    sp = source_pres or presentation(f.source, d)
    tp = target_pres or presentation(f.target, d)
    out: Sparse = {}
    for j in range(sp.cycle_rank):
        chain = sp.normal_to_chain({j: 1})
        img = f.apply(d, chain)
        for i, v in tp.cycle_to_normal(img).items():
            out[(i, j)] = v
    return out


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of one homology group, canonicalized by HNF.

    The canonical form always includes the ambient torsion relations, so
    two generating sets span the same subgroup iff their canonical forms
    are equal.
    """

    ambient: HomologyPresentation
    hnf: tuple

    @staticmethod
    def from_generators(ambient: HomologyPresentation, gens) -> "Subgroup":
        cols = [dict(g) for g in gens if g]
        cols.extend(dict(r) for r in ambient.relation_lattice)
        return Subgroup(ambient, hermite_columns(cols, ambient.cycle_rank))

    @staticmethod
    def zero(ambient: HomologyPresentation) -> "Subgroup":
        return Subgroup.from_generators(ambient, [])

    @staticmethod
    def full(ambient: HomologyPresentation) -> "Subgroup":
        return Subgroup.from_generators(
            ambient, [{j: 1} for j in range(ambient.cycle_rank)]
        )

    def join(self, other: "Subgroup") -> "Subgroup":
        self._check_ambient(other)
        cols = [dict(c) for c in self.hnf] + [dict(c) for c in other.hnf]
        return Subgroup(self.ambient, hermite_columns(cols, self.ambient.cycle_rank))

    def contains(self, other: "Subgroup") -> bool:
        self._check_ambient(other)
        return all(hnf_contains(self.hnf, dict(c)) for c in other.hnf)

    def contains_vector(self, normal_vec: dict[int, int]) -> bool:
        return hnf_contains(self.hnf, normal_vec)

    def is_full(self) -> bool:
        return self == Subgroup.full(self.ambient)

    def free_rank(self) -> int:
        """Rank of the subgroup modulo torsion."""
        return len(self.hnf) - self.ambient.relation_snf.rank

    def _check_ambient(self, other: "Subgroup"):
        if self.ambient is not other.ambient and (
            self.ambient.cycle_rank != other.ambient.cycle_rank
            or self.ambient.relation_snf.diag != other.ambient.relation_snf.diag
        ):
            raise AmbientMismatchError("subgroups live in different ambient groups")

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.hnf == other.hnf

    def __hash__(self):
        return hash(self.hnf)


def span_and_test(images: list[Subgroup], ambient: HomologyPresentation) -> tuple[Subgroup, bool]:
    """Join of the given subgroups and whether it is the whole group."""
    acc = Subgroup.zero(ambient)
    for sub in images:
        acc = acc.join(sub)
    return acc, acc.is_full()


def image_subgroup(
    f: ChainMap,
    d: int,
    source_pres: HomologyPresentation | None = None,
    target_pres: HomologyPresentation | None = None,
) -> Subgroup:
    """Image of H_d(source) -> H_d(target) as a subgroup of the target."""
    tp = target_pres or presentation(f.target, d)
    mat = induced_on_homology(f, d, source_pres, tp)
    cols: dict[int, dict[int, int]] = {}
    for (i, j), v in mat.items():
        cols.setdefault(j, {})[i] = v
    return Subgroup.from_generators(tp, list(cols.values()))


def cycle_image_subgroup(
    target_pres: HomologyPresentation, cycle_vectors
) -> Subgroup:
    """Subgroup generated by given cycles (in target chain coordinates)."""
    gens = [target_pres.cycle_to_normal(c) for c in cycle_vectors]
    return Subgroup.from_generators(target_pres, gens)
