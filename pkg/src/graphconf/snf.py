"""Exact integer Smith and Hermite normal forms.

Everything here is exact big-integer arithmetic; no modular shortcuts.
The elimination engine is sparse (dict-of-dicts) and prefers unit pivots
with low fill, which keeps the cubical boundary matrices produced
elsewhere in the package tractable at desk scale.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass


def _divnear(a: int, b: int) -> int:
    """Quotient q minimizing |a - q*b|."""
    q = a // b
    r = a - q * b
    if 2 * abs(r) > abs(b):
        q += 1 if (r > 0) == (b > 0) else -1
    return q


@dataclass
class SNFResult:
    m: int
    n: int
    rank: int
    diag: tuple[int, ...]  # positive invariant factors, divisibility order
    u_rows: dict | None = None  # U such that U*M*V = D, rows as dicts
    v_cols: dict | None = None  # V, columns as dicts
    vinv_rows: dict | None = None  # V^-1, rows as dicts
    uinv_cols: dict | None = None  # U^-1, columns as dicts

    @property
    def torsion(self) -> list[int]:
        return [d for d in self.diag if d > 1]

    def kernel_basis(self) -> list[dict[int, int]]:
        """Columns of V past the rank: a basis of ker(M) over Z (saturated)."""
        if self.v_cols is None:
            raise ValueError("SNF was computed without V tracking")
        return [dict(self.v_cols[j]) for j in range(self.rank, self.n)]

    def kernel_coords(self, vec: dict[int, int]) -> dict[int, int]:
        """Coordinates of a kernel vector in the kernel_basis (0-indexed)."""
        if self.vinv_rows is None:
            raise ValueError("SNF was computed without Vinv tracking")
        out: dict[int, int] = {}
        for i in range(self.n):
            row = self.vinv_rows.get(i)
            if not row:
                continue
            s = 0
            for j, c in vec.items():
                w = row.get(j)
                if w:
                    s += w * c
            if s:
                if i < self.rank:
                    raise ValueError("vector is not in the kernel")
                out[i - self.rank] = s
        return out


def snf(entries, shape, *, track_u=False, track_v=False, track_vinv=False,
        track_uinv=False) -> SNFResult:
    """Smith normal form of a sparse integer matrix.

    ``entries`` is a mapping (i, j) -> value (zeros ignored); ``shape`` is
    (m, n).  Transform tracking is opt-in since it dominates the cost on
    large inputs.
    """
    m, n = shape
    eng = _Engine(m, n, entries, track_u, track_v, track_vinv, track_uinv)
    eng.run()
    return SNFResult(
        m, n, eng.rank, tuple(eng.diag),
        eng.u if track_u else None,
        eng.vcols if track_v else None,
        eng.vinv if track_vinv else None,
        eng.uinvcols if track_uinv else None,
    )


class _Engine:
    def __init__(self, m, n, entries, tu, tv, tvi, tui):
        self.m, self.n = m, n
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        items = entries.items() if hasattr(entries, "items") else entries
        for key, v in items:
            if not v:
                continue
            i, j = key
            if not (0 <= i < m and 0 <= j < n):
                raise ValueError(f"entry {key} outside shape {(m, n)}")
            self.rows.setdefault(i, {})[j] = v
            self.cols.setdefault(j, set()).add(i)
        self.tu, self.tv, self.tvi, self.tui = tu, tv, tvi, tui
        self.u = {i: {i: 1} for i in range(m)} if tu else None
        self.uinvcols = {i: {i: 1} for i in range(m)} if tui else None
        self.vcols = {j: {j: 1} for j in range(n)} if tv else None
        self.vinv = {j: {j: 1} for j in range(n)} if tvi else None
        self.rank = 0
        self.diag: list[int] = []
        self.touched: set[int] = set()  # columns whose support changed

    # -- elementary operations (applied to M and companions) ---------------

    def _row_axpy(self, i, t, q):
        # row_i -= q * row_t
        ri = self.rows.setdefault(i, {})
        for j, v in list(self.rows.get(t, {}).items()):
            self.touched.add(j)
            nv = ri.get(j, 0) - q * v
            if nv:
                ri[j] = nv
                self.cols.setdefault(j, set()).add(i)
            elif j in ri:
                del ri[j]
                self.cols[j].discard(i)
        if self.tu:
            ui = self.u[i]
            for j, v in self.u[t].items():
                nv = ui.get(j, 0) - q * v
                if nv:
                    ui[j] = nv
                elif j in ui:
                    del ui[j]
        if self.tui:
            # Uinv <- Uinv * (row_i += q row_t)^as-matrix: col_t += q * col_i
            ct = self.uinvcols[t]
            for r, v in self.uinvcols[i].items():
                nv = ct.get(r, 0) + q * v
                if nv:
                    ct[r] = nv
                elif r in ct:
                    del ct[r]

    def _col_axpy(self, j, t, q):
        # col_j -= q * col_t
        self.touched.add(j)
        for i in list(self.cols.get(t, set())):
            v = self.rows[i].get(t)
            if not v:
                continue
            ri = self.rows[i]
            nv = ri.get(j, 0) - q * v
            if nv:
                ri[j] = nv
                self.cols.setdefault(j, set()).add(i)
            elif j in ri:
                del ri[j]
                self.cols[j].discard(i)
        if self.tv:
            cj = self.vcols[j]
            for r, v in self.vcols[t].items():
                nv = cj.get(r, 0) - q * v
                if nv:
                    cj[r] = nv
                elif r in cj:
                    del cj[r]
        if self.tvi:
            # Vinv <- E^-1 * Vinv where E adds -q*col_t to col_j: row_t += q*row_j
            rt = self.vinv[t]
            for c, v in self.vinv[j].items():
                nv = rt.get(c, 0) + q * v
                if nv:
                    rt[c] = nv
                elif c in rt:
                    del rt[c]

    def _row_swap(self, i, k):
        if i == k:
            return
        ri, rk = self.rows.get(i, {}), self.rows.get(k, {})
        for j in set(ri) | set(rk):
            s = self.cols[j]
            ini, ink = i in s, k in s
            if ini != ink:
                if ini:
                    s.discard(i)
                    s.add(k)
                else:
                    s.discard(k)
                    s.add(i)
        self.rows[i], self.rows[k] = rk, ri
        if self.tu:
            self.u[i], self.u[k] = self.u[k], self.u[i]
        if self.tui:
            self.uinvcols[i], self.uinvcols[k] = self.uinvcols[k], self.uinvcols[i]

    def _col_swap(self, j, k):
        if j == k:
            return
        self.touched.update((j, k))
        for i in self.cols.get(j, set()) | self.cols.get(k, set()):
            ri = self.rows[i]
            vj, vk = ri.pop(j, None), ri.pop(k, None)
            if vk is not None:
                ri[j] = vk
            if vj is not None:
                ri[k] = vj
        cj = self.cols.get(j, set())
        self.cols[j] = self.cols.get(k, set())
        self.cols[k] = cj
        if self.tv:
            self.vcols[j], self.vcols[k] = self.vcols[k], self.vcols[j]
        if self.tvi:
            self.vinv[j], self.vinv[k] = self.vinv[k], self.vinv[j]

    def _row_negate(self, i):
        for j in list(self.rows.get(i, {})):
            self.rows[i][j] = -self.rows[i][j]
        if self.tu:
            for j in list(self.u[i]):
                self.u[i][j] = -self.u[i][j]
        if self.tui:
            for r in list(self.uinvcols[i]):
                self.uinvcols[i][r] = -self.uinvcols[i][r]

    # -- main loop ----------------------------------------------------------

    def run(self):
        heap = [(len(s), j) for j, s in self.cols.items() if s]
        heapq.heapify(heap)
        t = 0
        while True:
            piv = self._select_pivot(heap, t)
            if piv is None:
                break
            i, j = piv
            self._row_swap(i, t)
            self._col_swap(j, t)
            self.touched.clear()
            self._clear_at(t)
            t += 1
            # only columns whose support changed re-enter the heap
            for jj in self.touched:
                if jj >= t and self.cols.get(jj):
                    heapq.heappush(heap, (len(self.cols[jj]), jj))
            self.touched.clear()
        self.rank = t
        self._normalize()

    def _select_pivot(self, heap, t):
        while heap:
            nnz, j = heapq.heappop(heap)
            if j < t:
                continue
            # finalized pivot rows are fully cleared, so every support entry
            # of a live column already sits at or below row t
            live = self.cols.get(j, set())
            if not live:
                continue
            if len(live) != nnz:
                heapq.heappush(heap, (len(live), j))
                continue
            best = min(
                live,
                key=lambda i: (abs(self.rows[i][j]) != 1, abs(self.rows[i][j]),
                               len(self.rows[i]), i),
            )
            return best, j
        # fallback: scan (heap exhausted but stale state possible)
        for j in sorted(self.cols):
            if j < t:
                continue
            live = {i for i in self.cols[j] if i >= t and self.rows[i].get(j)}
            if live:
                best = min(
                    live,
                    key=lambda i: (abs(self.rows[i][j]) != 1, abs(self.rows[i][j]),
                                   len(self.rows[i]), i),
                )
                return best, j
        return None

    def _clear_at(self, t):
        while True:
            pivot = self.rows[t][t]
            # clear column t with row operations
            col = [i for i in self.cols.get(t, set()) if i != t]
            for i in col:
                v = self.rows[i].get(t)
                if not v:
                    continue
                q = _divnear(v, pivot)
                if q:
                    self._row_axpy(i, t, q)
            rem = [i for i in self.cols.get(t, set()) if i != t and self.rows[i].get(t)]
            if rem:
                i = min(rem, key=lambda r: (abs(self.rows[r][t]), r))
                self._row_swap(i, t)
                continue
            # clear row t with column operations
            pivot = self.rows[t][t]
            row = [j for j in self.rows[t] if j != t]
            for j in row:
                v = self.rows[t].get(j)
                if not v:
                    continue
                q = _divnear(v, pivot)
                if q:
                    self._col_axpy(j, t, q)
            rem = [j for j in self.rows[t] if j != t and self.rows[t].get(j)]
            if rem:
                j = min(rem, key=lambda c: (abs(self.rows[t][c]), c))
                self._col_swap(j, t)
                continue
            return

    def _normalize(self):
        # positive diagonal
        for t in range(self.rank):
            if self.rows[t][t] < 0:
                self._row_negate(t)
        # divisibility chain via pairwise 2x2 fixes
        for s in range(self.rank):
            for t in range(s + 1, self.rank):
                a, b = self.rows[s][s], self.rows[t][t]
                if b % a:
                    self._col_axpy(s, t, -1)  # puts b into position (t, s)
                    self._clear_at(s)
                    if self.rows[s][s] < 0:
                        self._row_negate(s)
                    if self.rows[t][t] < 0:
                        self._row_negate(t)
        self.diag = [self.rows[t][t] for t in range(self.rank)]


# -- dense convenience API ---------------------------------------------------


def smith_normal_form(matrix):
    """SNF of a dense integer matrix given as a list of rows.

    Returns (U, D, V) as dense lists of rows with U*M*V = D, U and V
    unimodular, and the diagonal of D in divisibility order.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    entries = {
        (i, j): matrix[i][j] for i in range(m) for j in range(n) if matrix[i][j]
    }
    res = snf(entries, (m, n), track_u=True, track_v=True)
    u = [[res.u_rows[i].get(j, 0) for j in range(m)] for i in range(m)]
    v = [[res.v_cols[j].get(i, 0) for j in range(n)] for i in range(n)]
    d = [[0] * n for _ in range(m)]
    for t, val in enumerate(res.diag):
        d[t][t] = val
    return u, d, v


def sparse_matmul(a: dict, b: dict) -> dict:
    """Product of sparse matrices given as {(i,j): v} dicts."""
    brows: dict[int, dict[int, int]] = {}
    for (i, j), v in b.items():
        brows.setdefault(i, {})[j] = v
    out: dict[tuple[int, int], int] = {}
    for (i, k), v in a.items():
        row = brows.get(k)
        if not row:
            continue
        for j, w in row.items():
            key = (i, j)
            nv = out.get(key, 0) + v * w
            if nv:
                out[key] = nv
            elif key in out:
                del out[key]
    return out


# -- Hermite normal form (column style) --------------------------------------


def hermite_columns(columns: list[dict[int, int]], dim: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Unique column-style HNF of the lattice spanned by the given columns.

    Each column is a sparse {row: value} dict over rows 0..dim-1.  Returns
    the pivot columns in pivot-row order, each as a tuple of (row, value)
    pairs; pivots are positive and earlier columns are reduced modulo
    later pivots, so equal lattices give equal outputs.
    """
    work = [col for col in ({r: v for r, v in c.items() if v} for c in columns) if col]
    pivots: list[tuple[int, dict[int, int]]] = []
    for r in range(dim):
        live = [c for c in work if c.get(r)]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda c: abs(c[r]))
            base = live[0]
            for c in live[1:]:
                q = c[r] // base[r]
                if q:
                    _col_sub(c, base, q)
            live = [c for c in live if c.get(r)]
        piv = live[0]
        work.remove(piv)
        for c in work:
            if c.get(r):
                q = c[r] // piv[r]
                _col_sub(c, piv, q)
                if c.get(r):  # remainder nonzero means piv[r] didn't divide
                    raise AssertionError("HNF reduction invariant broken")
        if piv[r] < 0:
            for k in list(piv):
                piv[k] = -piv[k]
        pivots.append((r, piv))
    # reduce earlier pivot columns modulo later ones for uniqueness
    for k in range(len(pivots)):
        rk, ck = pivots[k]
        for j in range(k):
            _, cj = pivots[j]
            v = cj.get(rk, 0)
            q = v // ck[rk]
            if q:
                _col_sub(cj, ck, q)
    return tuple(tuple(sorted(c.items())) for _, c in pivots)


def _col_sub(c: dict[int, int], base: dict[int, int], q: int):
    for k, v in base.items():
        nv = c.get(k, 0) - q * v
        if nv:
            c[k] = nv
        elif k in c:
            del c[k]


def hnf_contains(hnf: tuple, vec: dict[int, int]) -> bool:
    """Membership of a vector in the lattice described by hermite_columns."""
    v = dict(vec)
    cols = [dict(c) for c in hnf]
    for col in cols:
        r = min(col)  # pivot row is the smallest row index by construction
        if not v:
            return True
        x = v.get(r, 0)
        if x:
            piv = col[r]
            if x % piv:
                return False
            _col_sub(v, col, x // piv)
    return not v
