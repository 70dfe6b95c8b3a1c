"""Cutting a chain surface along core circles and neighborhood frontiers.

Two surgeries on the ribbon model, both exact on the level of rotation
systems:

* cut_cycle slices the surface open along an embedded cycle of edges.
  Each visited vertex splits in two, the curve edges double into a left
  and a right copy, and the two copies close up into the two new boundary
  circles.  Euler characteristic is preserved and the boundary count goes
  up by two when the complement of the curve stays connected.

* complement_of_neighborhood removes the open regular neighborhood of a
  set of core circles.  The neighborhood itself is the induced sub-ribbon
  graph.  For the complement we walk each frontier component of that
  subgraph; every time the walk passes a vertex of the ambient graph it
  may skip over darts that do not belong to the neighborhood, and those
  "gap" darts are exactly the edges leaving the neighborhood.  Each
  nonempty gap becomes a trivalent sector vertex on a new circle parallel
  to the frontier, carrying the gap dart plus a forward and backward dart
  along the circle.

cut_along composes these for a list of named curves (z{i} for core
circles, x:{j}-{m} for neighborhood frontiers) and reports the components
with their genus and boundary counts, checking Euler and boundary
additivity on the way.  The scope is deliberately narrow: frontier cuts
need even intervals, and the supports must be far enough apart that no
two surgeries touch a common vertex.  Everything outside that scope
raises UnsupportedCut rather than guessing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DomainError, HypothesisError, InternalInvariantError, UnsupportedCut
from .intervals import Interval
from .ribbon import ChainSurface, RibbonGraph


@dataclass(frozen=True)
class CoreCurve:
    index: int

    def __str__(self):
        return f"z{self.index}"


@dataclass(frozen=True)
class NeighborhoodBoundary:
    j: int
    m: int

    def __str__(self):
        return f"x:{self.j}-{self.m}"


_CORE = re.compile(r"^z([1-9]\d*)$")
_NBHD = re.compile(r"^x:([1-9]\d*)-([1-9]\d*)$")


def parse_curve_token(text: str):
    m = _CORE.match(text)
    if m:
        return CoreCurve(int(m.group(1)))
    m = _NBHD.match(text)
    if m:
        return NeighborhoodBoundary(int(m.group(1)), int(m.group(2)))
    raise DomainError(
        f"unrecognized curve token {text!r}: expected z<i> or x:<j>-<m>"
    )


def cut_cycle(graph: RibbonGraph, walk) -> RibbonGraph:
    """Cut the ribbon surface open along a cycle of darts.

    The walk lists one dart per edge of the cycle, head to tail.  Each
    edge may appear once and each vertex may be visited once; repeated
    visits would need a finer local model and raise UnsupportedCut.
    """
    walk = tuple(walk)
    if not walk:
        raise UnsupportedCut("empty cutting cycle")
    support = set()
    for d in walk:
        support.add(d)
        support.add(graph.reverse_of(d))
    if len(support) != 2 * len(walk):
        raise UnsupportedCut("cutting cycle repeats an edge")

    visits = []  # (vertex index, out dart, in dart)
    seen_vertices = set()
    for t, d in enumerate(walk):
        head = graph._vertex_of[graph.reverse_of(d)]
        nxt = walk[(t + 1) % len(walk)]
        if graph._vertex_of[nxt] != head:
            raise UnsupportedCut("dart sequence is not a closed walk")
        if head in seen_vertices:
            raise UnsupportedCut("cutting cycle visits a vertex twice")
        seen_vertices.add(head)
        visits.append((head, nxt, graph.reverse_of(d)))

    fresh = max(graph.darts) + 1
    right = {}
    for d in sorted(support):
        right[d] = fresh
        fresh += 1

    rot = []
    for idx, cycle in enumerate(graph.rot):
        hit = [v for v in visits if v[0] == idx]
        if not hit:
            rot.append(tuple(cycle))
            continue
        _, out, inn = hit[0]
        k = cycle.index(out)
        turned = cycle[k:] + cycle[:k]
        split = turned.index(inn)
        left_arc = turned[1:split]
        right_arc = turned[split + 1:]
        rot.append((out,) + tuple(left_arc) + (inn,))
        rot.append((right[inn],) + tuple(right_arc) + (right[out],))

    pairs = []
    done = set()
    for d in graph.darts:
        e = graph.reverse_of(d)
        if d in done or e in done:
            continue
        done.update((d, e))
        pairs.append((d, e))
        if d in support:
            pairs.append((right[d], right[e]))
    rev = tuple(pairs)
    return RibbonGraph(rot=tuple(rot), rev=rev)


def complement_of_neighborhood(graph: RibbonGraph, support_darts) -> RibbonGraph:
    """Ribbon graph of the surface minus an open neighborhood of circles.

    support_darts must be closed under reversal and induce the
    neighborhood subgraph.  Each frontier walk of that subgraph becomes a
    circle of sector vertices in the complement, one per nonempty gap.
    """
    support = frozenset(support_darts)
    if not support:
        raise UnsupportedCut("empty neighborhood support")
    sub = graph.subgraph(support)
    walks = sub.boundary_walks()

    fresh = max(graph.darts) + 1
    rot = []
    rev_pairs = []

    # vertices of the ambient graph carrying no support dart survive intact
    support_vertices = set()
    for d in support:
        support_vertices.add(graph._vertex_of[d])
    for idx, cycle in enumerate(graph.rot):
        if idx not in support_vertices:
            rot.append(tuple(cycle))
    done = set()
    for d in graph.darts:
        e = graph.reverse_of(d)
        if d in support or d in done or e in done:
            continue
        done.update((d, e))
        rev_pairs.append((d, e))

    claimed = set()
    for walk in walks:
        sectors = []  # list of gap dart tuples, in walk order
        for t, d in enumerate(walk):
            back = graph.reverse_of(d)
            vertex = graph.rot[graph._vertex_of[back]]
            k = vertex.index(back)
            gap = []
            for step in range(1, len(vertex)):
                cand = vertex[(k + step) % len(vertex)]
                if cand in support:
                    if cand != walk[(t + 1) % len(walk)]:
                        raise InternalInvariantError(
                            "frontier walk disagrees with ambient rotation"
                        )
                    break
                gap.append(cand)
            if gap:
                sectors.append(tuple(gap))
                claimed.update(gap)
        if not sectors:
            raise InternalInvariantError(
                "frontier component with no outgoing edges; the complement "
                "piece has no graph to carry it"
            )
        fwd = []
        bwd = []
        for _ in sectors:
            fwd.append(fresh)
            bwd.append(fresh + 1)
            fresh += 2
        for s, gap in enumerate(sectors):
            rot.append((fwd[s], bwd[s]) + gap)
            rev_pairs.append((fwd[s], bwd[(s + 1) % len(sectors)]))

    stranded = {
        d
        for d in graph.darts
        if d not in support
        and graph._vertex_of[d] in support_vertices
        and d not in claimed
    }
    if stranded:
        raise InternalInvariantError(f"darts {sorted(stranded)} fell in no gap")
    return RibbonGraph(rot=tuple(rot), rev=tuple(rev_pairs))


@dataclass(frozen=True)
class SplitReport:
    ambient_genus: int
    ambient_boundaries: int
    n_curves: int
    components: tuple  # (genus, boundaries) pairs, sorted descending
    curve_names: tuple


def _validate_scope(genus: int, specs) -> None:
    n = 2 * genus
    cores = [s for s in specs if isinstance(s, CoreCurve)]
    nbhds = [s for s in specs if isinstance(s, NeighborhoodBoundary)]
    if len(set(specs)) != len(specs):
        raise UnsupportedCut("repeated curve in cut list")
    for s in cores:
        if not 1 <= s.index <= n:
            raise DomainError(f"core index {s.index} outside 1..{n}")
    intervals = [Interval(s.j, s.m, n) for s in nbhds]  # range check
    for s in intervals:
        if s.size % 2:
            raise UnsupportedCut(
                f"odd interval {s}: its frontier has two components and "
                "no canonical single cut"
            )
    for a in range(len(cores)):
        for b in range(a + 1, len(cores)):
            if abs(cores[a].index - cores[b].index) < 2:
                raise UnsupportedCut(
                    f"{cores[a]} and {cores[b]} intersect; cut one at a time"
                )
    ordered = sorted(intervals, key=lambda s: s.j)
    for a in range(len(ordered) - 1):
        if ordered[a + 1].j - ordered[a].m - 1 < 2:
            raise UnsupportedCut(
                f"intervals {ordered[a]} and {ordered[a + 1]} are too close; "
                "their surgeries share a vertex"
            )
    for c in cores:
        for s in intervals:
            if c.index in (s.j - 1, s.m + 1):
                raise UnsupportedCut(
                    f"{c} touches the frontier region of {s}"
                )


def cut_along(surface: ChainSurface, specs) -> SplitReport:
    """Cut along the named curves and report the resulting components."""
    specs = [parse_curve_token(s) if isinstance(s, str) else s for s in specs]
    if not specs:
        raise DomainError("nothing to cut along")
    _validate_scope(surface.genus, specs)

    pieces = [surface.graph]

    def piece_with(darts):
        for i, p in enumerate(pieces):
            if darts <= set(p.darts):
                return i
        raise InternalInvariantError("cut support spread over several pieces")

    nbhds = sorted(
        (s for s in specs if isinstance(s, NeighborhoodBoundary)),
        key=lambda s: s.j,
    )
    for s in nbhds:
        support = frozenset(surface.interval_darts(s.j, s.m))
        i = piece_with(support)
        ambient = pieces[i]
        pieces[i:i + 1] = [
            ambient.subgraph(support),
            complement_of_neighborhood(ambient, support),
        ]
    for s in specs:
        if not isinstance(s, CoreCurve):
            continue
        walk = surface.core_walks[s.index - 1]
        needed = set(walk) | {surface.graph.reverse_of(d) for d in walk}
        i = piece_with(needed)
        pieces[i] = cut_cycle(pieces[i], walk)

    parts = [c for p in pieces for c in p.components()]
    pairs = sorted(((c.genus, c.n_boundaries) for c in parts), reverse=True)

    chi = surface.graph.euler_characteristic
    if sum(p.euler_characteristic for p in parts) != chi:
        raise InternalInvariantError("Euler characteristic not additive over cut")
    total_b = sum(b for _, b in pairs)
    if total_b != 2 * len(specs) + surface.graph.n_boundaries:
        raise InternalInvariantError(
            f"boundary count {total_b} != 2*{len(specs)} + "
            f"{surface.graph.n_boundaries}"
        )
    return SplitReport(
        ambient_genus=surface.genus,
        ambient_boundaries=surface.graph.n_boundaries,
        n_curves=len(specs),
        components=tuple(pairs),
        curve_names=tuple(str(s) for s in specs),
    )


def bookkeeping_check(report: SplitReport) -> bool:
    """Arithmetic consistency of a splitting report.

    Checks Euler additivity, the boundary count identity
    sum b_i = 2 n + b, and for closed ambient surfaces the genus identity
    g = (n - 1) - t + 2 + sum g_i with t the number of components.
    """
    g = report.ambient_genus
    b = report.ambient_boundaries
    n = report.n_curves
    comps = report.components
    if sum(2 - 2 * gi - bi for gi, bi in comps) != 2 - 2 * g - b:
        return False
    if sum(bi for _, bi in comps) != 2 * n + b:
        return False
    if b == 0:
        t = len(comps)
        if g != (n - 1) - t + 2 + sum(gi for gi, _ in comps):
            return False
    return True


@dataclass(frozen=True)
class DimensionTarget:
    genus: int
    boundaries: int
    dimension: int
    connectivity: int


def dims(genus: int, boundaries: int) -> DimensionTarget:
    """Expected dimension and connectivity of the sphere family of disks.

    Defined for surfaces with 2g - 2 + b >= 2.  The sphere has dimension
    2g - 2 for closed ambient surfaces, 2g - 3 + b with boundary, and
    b - 4 in genus zero; the complex it sits in is connected through one
    degree less than the next handle would allow, dropping by one for a
    single boundary component and by two for several.
    """
    g, b = genus, boundaries
    if g < 0 or b < 0 or 2 * g - 2 + b < 2:
        raise HypothesisError(
            f"surface (genus {g}, boundaries {b}) is too small: "
            "need 2g - 2 + b >= 2"
        )
    if g == 0:
        dim = b - 4
    elif b == 0:
        dim = 2 * g - 2
    else:
        dim = 2 * g - 3 + b
    neg_chi = 2 * g - 2 + b
    if b == 0:
        conn = neg_chi
    elif b == 1:
        conn = neg_chi - 1
    else:
        conn = neg_chi - 2
    return DimensionTarget(genus=g, boundaries=b, dimension=dim, connectivity=conn)
