"""Finite simplicial complexes with exact integer homology.

Complexes are stored by their facets over int vertex ids.  Homology is
reduced (augmented in degree 0) and computed from Smith normal forms of
the boundary matrices over Z.  All arithmetic uses Python ints, so there
is no overflow to detect: intermediate entries grow as needed.

The Smith routine eliminates with unimodular pivots first, chosen by a
Markowitz fill estimate from a lazily revalidated heap; boundary matrices
of the complexes built here essentially always finish in that phase, each
pivot contributing an invariant factor 1.  Any residue without unit
entries falls back to the classical Euclidean pivot dance, and the
collected diagonal is then straightened into a divisibility chain by
gcd/lcm exchanges (each realized by unimodular operations on a 2x2
block, so the invariant factors are unchanged).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from math import gcd

import networkx as nx

from .errors import DomainError

# ---------------------------------------------------------------- complex


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    facets: tuple  # sorted vertex tuples, pairwise non-nested

    @classmethod
    def from_facets(cls, facets) -> "SimplicialComplex":
        cleaned = sorted(
            {tuple(sorted(set(f))) for f in facets}, key=lambda f: (-len(f), f)
        )
        kept = []
        for f in cleaned:
            if not f:
                raise DomainError("empty facet")
            fs = set(f)
            if any(fs <= set(g) for g in kept):
                continue
            kept.append(f)
        if not kept:
            raise DomainError("a complex needs at least one facet")
        return cls(tuple(sorted(kept)))

    @property
    def vertices(self) -> tuple:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def faces_by_dim(self) -> dict:
        faces = {k: set() for k in range(self.dimension + 1)}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                faces[k - 1].update(combinations(f, k))
        return {k: sorted(s) for k, s in faces.items()}

    def f_vector(self) -> tuple:
        faces = self.faces_by_dim()
        return tuple(len(faces[k]) for k in range(self.dimension + 1))

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1


def flag_from_graph(vertices, edges) -> SimplicialComplex:
    """Flag (clique) complex of a graph; isolated vertices become facets."""
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(edges)
    if graph.number_of_nodes() == 0:
        raise DomainError("flag complex of an empty graph")
    return SimplicialComplex.from_facets(nx.find_cliques(graph))


# ------------------------------------------------------------ smith form


def _to_sparse(matrix):
    """Accept dense list-of-lists or a {(r, c): v} dict."""
    if isinstance(matrix, dict):
        entries = matrix.items()
    else:
        entries = (
            ((r, c), v)
            for r, row in enumerate(matrix)
            for c, v in enumerate(row)
        )
    rows: dict = {}
    cols: dict = {}
    for (r, c), v in entries:
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, set()).add(r)
    return rows, cols


def _chain_divisors(values) -> tuple:
    """Straighten a diagonal into a divisibility chain d1 | d2 | ..."""
    d = sorted(abs(v) for v in values)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return tuple(d)


def smith_normal_form(matrix) -> tuple:
    """Invariant factors and rank of an integer matrix.

    Returns (divisors, rank): the positive diagonal d_1 | d_2 | ... | d_r
    with ones included, and rank = len(divisors).
    """
    rows, cols = _to_sparse(matrix)
    pivots = []

    def row_axpy(dst, src, k, touched):
        drow = rows.setdefault(dst, {})
        for c, v in rows[src].items():
            nv = drow.get(c, 0) + k * v
            if nv:
                drow[c] = nv
                cols.setdefault(c, set()).add(dst)
            elif c in drow:
                del drow[c]
                cols[c].discard(dst)
                if not cols[c]:
                    del cols[c]
        if drow:
            touched.add(dst)
        else:
            del rows[dst]

    def col_axpy(dst, src, k, touched):
        for r in list(cols.get(src, ())):
            v = rows[r][src]
            nv = rows[r].get(dst, 0) + k * v
            if nv:
                rows[r][dst] = nv
                cols.setdefault(dst, set()).add(r)
            else:
                rows[r].pop(dst, None)
                if dst in cols:
                    cols[dst].discard(r)
                    if not cols[dst]:
                        del cols[dst]
            touched.add(r)

    def clear_pivot(r, c):
        del rows[r][c]
        if not rows[r]:
            del rows[r]
        cols[c].discard(r)
        if not cols[c]:
            del cols[c]

    def eliminate(r, c):
        """Isolate the entry at (r, c); returns rows whose content changed."""
        touched = set()
        while True:
            p = rows[r][c]
            moved = False
            for r2 in list(cols[c]):
                if r2 == r:
                    continue
                q, rem = divmod(rows[r2][c], p)
                if q:
                    row_axpy(r2, r, -q, touched)
                if rem:
                    r = r2
                    moved = True
                    break
            if moved:
                continue
            for c2 in list(rows[r]):
                if c2 == c:
                    continue
                q, rem = divmod(rows[r][c2], p)
                if q:
                    col_axpy(c2, c, -q, touched)
                if rem:
                    c = c2
                    moved = True
                    break
            if not moved:
                break
        pivots.append(abs(rows[r][c]))
        clear_pivot(r, c)
        touched.discard(r)
        return touched

    def markowitz(r, c):
        return (len(rows[r]) - 1) * (len(cols[c]) - 1)

    heap = [
        (markowitz(r, c), r, c)
        for r in rows
        for c, v in rows[r].items()
        if abs(v) == 1
    ]
    heapq.heapify(heap)
    while heap:
        cost, r, c = heapq.heappop(heap)
        v = rows.get(r, {}).get(c)
        if v is None or abs(v) != 1:
            continue
        now = markowitz(r, c)
        if now > cost:
            heapq.heappush(heap, (now, r, c))
            continue
        for r2 in eliminate(r, c):
            row = rows.get(r2)
            if row:
                for c2, v2 in row.items():
                    if abs(v2) == 1:
                        heapq.heappush(heap, (markowitz(r2, c2), r2, c2))

    # residue without unit entries: classical minimum-pivot elimination
    while rows:
        r, c = min(
            ((r2, c2) for r2 in rows for c2 in rows[r2]),
            key=lambda rc: (abs(rows[rc[0]][rc[1]]), rc),
        )
        eliminate(r, c)

    return _chain_divisors(pivots), len(pivots)


# --------------------------------------------------------------- homology


def boundary_matrix(faces_low, faces_high) -> dict:
    """Sparse matrix of the simplicial boundary map, rows = lower faces."""
    index = {f: i for i, f in enumerate(faces_low)}
    entries = {}
    for col, f in enumerate(faces_high):
        for omit in range(len(f)):
            sub = f[:omit] + f[omit + 1 :]
            entries[(index[sub], col)] = (-1) ** omit
    return entries


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integer homology: Betti numbers and torsion per degree."""

    betti: tuple  # reduced Betti numbers, degrees 0..dim
    torsion: tuple  # per degree, tuple of invariant factors > 1

    def is_reduced_sphere(self, dim: int) -> bool:
        if len(self.betti) <= dim:
            return False
        if any(t for t in self.torsion):
            return False
        return all(
            b == (1 if k == dim else 0) for k, b in enumerate(self.betti)
        )


def reduced_homology(complex_: SimplicialComplex, max_degree: int | None = None) -> HomologyProfile:
    """Reduced homology over Z from Smith forms of the boundary maps.

    With the augmentation map in degree 0, betti_k = f_k - rank d_k -
    rank d_{k+1} for every k, and the torsion of H_k is read off the
    invariant factors of d_{k+1} exceeding 1.  Restricting max_degree
    computes only degrees <= max_degree (the probe use case).
    """
    faces = complex_.faces_by_dim()
    top = complex_.dimension
    upto = top if max_degree is None else min(max_degree, top)

    ranks = {0: 1 if faces[0] else 0}  # augmentation
    invariants = {}
    for k in range(1, upto + 2):
        if k > top:
            ranks[k] = 0
            invariants[k] = ()
            continue
        inv, rank = smith_normal_form(boundary_matrix(faces[k - 1], faces[k]))
        ranks[k] = rank
        invariants[k] = inv

    betti = []
    torsion = []
    for k in range(upto + 1):
        betti.append(len(faces[k]) - ranks[k] - ranks[k + 1])
        torsion.append(tuple(d for d in invariants.get(k + 1, ()) if d > 1))
    return HomologyProfile(tuple(betti), tuple(torsion))


# ---------------------------------------------------------- pseudomanifold


@dataclass(frozen=True)
class PseudomanifoldReport:
    pure: bool
    ridges_ok: bool
    strongly_connected: bool
    bad_ridges: tuple

    @property
    def ok(self) -> bool:
        return self.pure and self.ridges_ok and self.strongly_connected


def pseudomanifold_check(complex_: SimplicialComplex, dim: int) -> PseudomanifoldReport:
    """Closed pseudomanifold test: purity, ridges in two facets, ridge-connectivity."""
    facets = complex_.facets
    pure = all(len(f) == dim + 1 for f in facets)
    if not pure:
        return PseudomanifoldReport(False, False, False, ())

    ridge_map: dict = {}
    for i, f in enumerate(facets):
        for sub in combinations(f, dim):
            ridge_map.setdefault(sub, []).append(i)
    bad = tuple(sorted(r for r, fs in ridge_map.items() if len(fs) != 2))

    parent = list(range(len(facets)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for fs in ridge_map.values():
        for a, b in zip(fs, fs[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    connected = len({find(i) for i in range(len(facets))}) <= 1

    return PseudomanifoldReport(pure, not bad, connected, bad)
