"""Brute-force ground truth: exact alpha, gamma, omega, chi, BFS distances,
and the Hamiltonian-cycle checker.

Everything here is deliberately independent of the closed-form constructions
it certifies: max clique / independent set use a coloring-bound branch and
bound, domination uses iterative-deepening set cover, coloring uses
saturation-ordered backtracking, distances use plain BFS.  Vertex sets live
in bitmasks (Python ints), so the practical limit is a few hundred vertices.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import config
from .core import GraphSpec, Vertex, adjacent, enumerate_vertices, neighbors, validate_vertex
from .errors import CapExceededError


def _bit_graph(spec: GraphSpec, cap: int | None = None) -> tuple[list[Vertex], list[int]]:
    """Canonical vertex list plus one adjacency bitmask per vertex."""
    limit = config.search_cap(cap)
    if spec.vertex_count > limit:
        raise CapExceededError(
            f"{spec.label()} has {spec.vertex_count} vertices, over the search cap {limit}"
        )
    verts = enumerate_vertices(spec)
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for i, v in enumerate(verts):
        for w in neighbors(spec, v):
            adj[i] |= 1 << index[w]
    return verts, adj


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- maximum clique / independent set -----------------------------------------


def _greedy_clique(adj: list[int], nv: int) -> list[int]:
    chosen: list[int] = []
    cand = (1 << nv) - 1
    for v in sorted(range(nv), key=lambda u: adj[u].bit_count(), reverse=True):
        if cand >> v & 1:
            chosen.append(v)
            cand &= adj[v]
    return chosen


def _color_sort(p: int, adj: list[int]) -> tuple[list[int], list[int]]:
    # greedy color classes; a vertex in class c caps any clique through the
    # remaining candidates at c
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    rest = p
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~(adj[v] | (1 << v))
            rest &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique_bits(adj: list[int], nv: int) -> list[int]:
    best = _greedy_clique(adj, nv)
    stack: list[int] = []

    def expand(p: int) -> None:
        nonlocal best
        order, bounds = _color_sort(p, adj)
        for i in range(len(order) - 1, -1, -1):
            if len(stack) + bounds[i] <= len(best):
                return
            v = order[i]
            stack.append(v)
            nxt = p & adj[v]
            if nxt:
                expand(nxt)
            elif len(stack) > len(best):
                best = stack.copy()
            stack.pop()
            p &= ~(1 << v)

    if nv:
        expand((1 << nv) - 1)
    return sorted(best)


def oracle_omega(spec: GraphSpec, cap: int | None = None) -> tuple[int, list[Vertex]]:
    """Exact clique number with a witness clique."""
    verts, adj = _bit_graph(spec, cap)
    picked = _max_clique_bits(adj, len(verts))
    return len(picked), [verts[i] for i in picked]


def oracle_alpha(spec: GraphSpec, cap: int | None = None) -> tuple[int, list[Vertex]]:
    """Exact independence number: maximum clique of the complement."""
    verts, adj = _bit_graph(spec, cap)
    nv = len(verts)
    full = (1 << nv) - 1
    comp = [full & ~adj[i] & ~(1 << i) for i in range(nv)]
    picked = _max_clique_bits(comp, nv)
    return len(picked), [verts[i] for i in picked]


# -- minimum dominating set ----------------------------------------------------


def _greedy_cover(closed: list[int], nv: int) -> list[int]:
    chosen: list[int] = []
    unc = (1 << nv) - 1
    while unc:
        v = max(range(nv), key=lambda u: (closed[u] & unc).bit_count())
        chosen.append(v)
        unc &= ~closed[v]
    return chosen


def _cover_search(unc: int, budget: int, available: int, closed: list[int], nv: int):
    """Find <= budget available vertices whose closed neighborhoods cover unc."""
    if unc == 0:
        return []
    if budget == 0:
        return None
    # prefix-sum bound: even the `budget` largest covers cannot reach unc
    covers = heapq.nlargest(
        budget, ((closed[v] & unc).bit_count() for v in _bits(available))
    )
    if sum(covers) < unc.bit_count():
        return None
    # branch on the uncovered vertex with the fewest available dominators
    pick, pick_cands, pick_size = -1, 0, nv + 1
    for u in _bits(unc):
        cands = closed[u] & available
        size = cands.bit_count()
        if size == 0:
            return None
        if size < pick_size:
            pick, pick_cands, pick_size = u, cands, size
            if size == 1:
                break
    # branch i commits to candidate i and bans candidates tried before it,
    # so the branches partition the solution space
    order = sorted(_bits(pick_cands), key=lambda v: -(closed[v] & unc).bit_count())
    avail = available
    for v in order:
        avail &= ~(1 << v)
        sub = _cover_search(unc & ~closed[v], budget - 1, avail, closed, nv)
        if sub is not None:
            return [v] + sub
    return None


def oracle_gamma(spec: GraphSpec, cap: int | None = None) -> tuple[int, list[Vertex]]:
    """Exact domination number via iterative deepening on the cover size."""
    verts, adj = _bit_graph(spec, cap)
    nv = len(verts)
    closed = [adj[i] | (1 << i) for i in range(nv)]
    greedy = _greedy_cover(closed, nv)
    full = (1 << nv) - 1
    lower = -(-nv // (spec.degree + 1))
    for k in range(lower, len(greedy)):
        found = _cover_search(full, k, full, closed, nv)
        if found is not None:
            return k, sorted(verts[i] for i in found)
    return len(greedy), sorted(verts[i] for i in greedy)


# -- chromatic number ----------------------------------------------------------


def _k_coloring(adj: list[int], nv: int, k: int, clique: list[int]):
    """A proper k-coloring as a color array, or None.  The clique is
    pre-colored 0..len(clique)-1, which is a valid symmetry break."""
    if len(clique) > k:
        return None
    colors = [-1] * nv
    seen = [0] * nv  # bitmask of colors present in each vertex's neighborhood
    for c, v in enumerate(clique):
        colors[v] = c
        for w in _bits(adj[v]):
            seen[w] |= 1 << c

    def rec(done: int, max_used: int) -> bool:
        if done == nv:
            return True
        # saturation order: most distinct neighbor colors first
        v = -1
        sat = -1
        for u in range(nv):
            if colors[u] < 0:
                s = seen[u].bit_count()
                if s > sat:
                    sat, v = s, u
        limit = min(k, max_used + 2)  # at most one brand-new color
        avail = ~seen[v] & ((1 << limit) - 1)
        for c in _bits(avail):
            colors[v] = c
            touched = []
            for w in _bits(adj[v]):
                if not seen[w] >> c & 1:
                    seen[w] |= 1 << c
                    touched.append(w)
            if rec(done + 1, max(max_used, c)):
                return True
            colors[v] = -1
            for w in touched:
                seen[w] &= ~(1 << c)
        return False

    if rec(len(clique), len(clique) - 1):
        return colors
    return None


def oracle_chi(spec: GraphSpec, cap: int | None = None) -> tuple[int, dict[Vertex, int]]:
    """Exact chromatic number via iterative deepening on the color count."""
    verts, adj = _bit_graph(spec, cap)
    nv = len(verts)
    clique = _max_clique_bits(adj, nv)
    # greedy coloring in canonical order gives the upper end of the search
    greedy = [-1] * nv
    for v in range(nv):
        used = 0
        for w in _bits(adj[v]):
            if greedy[w] >= 0:
                used |= 1 << greedy[w]
        c = 0
        while used >> c & 1:
            c += 1
        greedy[v] = c
    upper = max(greedy) + 1 if nv else 0
    for k in range(len(clique), upper):
        colors = _k_coloring(adj, nv, k, clique)
        if colors is not None:
            return k, {verts[i]: colors[i] for i in range(nv)}
    return upper, {verts[i]: greedy[i] for i in range(nv)}


# -- distances -----------------------------------------------------------------


def oracle_distances(spec: GraphSpec, source: tuple[int, ...]) -> dict[Vertex, int]:
    """BFS distances from source to every reachable vertex."""
    source = validate_vertex(spec, source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in neighbors(spec, v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def all_pairs_distances(
    spec: GraphSpec, cap: int = 5000
) -> tuple[list[Vertex], np.ndarray]:
    """Full distance matrix by simultaneous BFS (boolean matrix levels).

    Unreached pairs keep -1.  Quadratic memory; guarded by `cap` vertices.
    """
    if spec.vertex_count > cap:
        raise CapExceededError(
            f"{spec.label()} has {spec.vertex_count} vertices, over the matrix cap {cap}"
        )
    verts = enumerate_vertices(spec)
    nv = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    adjm = np.zeros((nv, nv), dtype=np.float32)
    for i, v in enumerate(verts):
        for w in neighbors(spec, v):
            adjm[i, index[w]] = 1.0
    dist = np.full((nv, nv), -1, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    reached = np.eye(nv, dtype=bool)
    frontier = reached.copy()
    d = 0
    while frontier.any():
        d += 1
        step = (frontier.astype(np.float32) @ adjm) > 0.5
        frontier = step & ~reached
        dist[frontier] = d
        reached |= frontier
    return verts, dist


# -- cycle checking ------------------------------------------------------------


@dataclass(frozen=True)
class CycleVerdict:
    valid: bool
    reason: str | None = None


def verify_cycle(
    spec: GraphSpec,
    cycle: list[tuple[int, ...]],
    required_edge: tuple[tuple[int, ...], tuple[int, ...]] | None = None,
) -> CycleVerdict:
    """Check a vertex sequence as a Hamiltonian cycle of spec.

    Valid iff: every entry is a vertex, each graph vertex appears exactly
    once, consecutive entries (including the wrap pair) are adjacent, and
    the required edge (if given) appears as a consecutive pair.
    """
    if len(cycle) < 3:
        return CycleVerdict(False, f"cycle has {len(cycle)} vertices, needs at least 3")
    seq = []
    for pos, v in enumerate(cycle):
        try:
            seq.append(validate_vertex(spec, v))
        except ValueError as exc:
            return CycleVerdict(False, f"invalid vertex at position {pos}: {exc}")
    if len(set(seq)) != len(seq):
        return CycleVerdict(False, "duplicate vertex")
    if len(seq) != spec.vertex_count:
        return CycleVerdict(
            False, f"cycle covers {len(seq)} of {spec.vertex_count} vertices"
        )
    for i, v in enumerate(seq):
        w = seq[(i + 1) % len(seq)]
        if not adjacent(spec, v, w):
            return CycleVerdict(False, f"consecutive vertices not adjacent at position {i}")
    if required_edge is not None:
        a, b = (tuple(required_edge[0]), tuple(required_edge[1]))
        pairs = {(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))}
        if (a, b) not in pairs and (b, a) not in pairs:
            return CycleVerdict(False, "required edge missing from cycle")
    return CycleVerdict(True, None)
