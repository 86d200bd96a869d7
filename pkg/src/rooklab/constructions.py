"""Explicit constructions: residue-class independent sets, the equal-pair
dominating set, the recursive Hamiltonian cycle, maximum CSR cliques, and
residue colorings.

Every construction is verified before (or as part of) returning: residue
classes are scanned for internal edges, cliques for pairwise adjacency,
colorings along every edge.  Guaranteed properties that fail their scan
raise InternalConsistencyError; family-dependent ones return a verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    CSR,
    SR,
    GraphSpec,
    Vertex,
    adjacent,
    check_enum_cap,
    enumerate_vertices,
    iter_vertices,
    neighbors,
    sr_spec,
    validate_vertex,
)
from .errors import InternalConsistencyError


def smallest_prime_at_least(k: int) -> int:
    """Least prime >= k, by trial division."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    candidate = max(k, 2)
    while True:
        if all(candidate % d for d in range(2, math.isqrt(candidate) + 1)):
            return candidate
        candidate += 1


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def default_prime(spec: GraphSpec) -> int:
    """Smallest prime that gives the residue-class argument its guarantee.

    On an SR edge the two changed coordinates move by the same amount, which
    can be as large as n, so the key difference (i-j)*(a_i-b_i) is only
    guaranteed nonzero mod p when p > n as well as p >= m.  (With p = n
    prime the corner vertices n*e_i and n*e_j share a key and are adjacent.)
    CSR arithmetic already wraps mod n and carries per-class verdicts, so it
    keeps the weaker p >= max(m, n).
    """
    if spec.family == SR:
        return smallest_prime_at_least(max(spec.m, spec.n + 1, 1))
    return smallest_prime_at_least(max(spec.m, spec.n, 1))


def residue_key(v: tuple[int, ...], p: int) -> int:
    """Weighted coordinate sum sum_i i*v_i mod p, with 1-based weights."""
    return sum((i + 1) * x for i, x in enumerate(v)) % p


# -- residue-class independent sets --------------------------------------------


@dataclass
class ResidueClassFamily:
    """Partition of the vertex set into p classes by residue key.

    For SR every class is an independent set (this is enforced); for CSR
    independence can fail through modular wraparound, so each class carries
    the result of its own adjacency scan.
    """

    spec: GraphSpec
    p: int
    classes: list[list[Vertex]]
    independent: list[bool]

    @property
    def best_index(self) -> int:
        """Index of a largest class (smallest index on ties)."""
        sizes = [len(c) for c in self.classes]
        return sizes.index(max(sizes))

    @property
    def best_size(self) -> int:
        return len(self.classes[self.best_index])

    def best_verified(self) -> tuple[int, list[Vertex]] | None:
        """Largest class that passed the independence scan, or None."""
        best = None
        for t, cls in enumerate(self.classes):
            if self.independent[t] and (best is None or len(cls) > len(self.classes[best])):
                best = t
        if best is None:
            return None
        return best, self.classes[best]


def _class_is_independent(spec: GraphSpec, cls: list[Vertex]) -> bool:
    for i in range(len(cls)):
        for j in range(i + 1, len(cls)):
            if adjacent(spec, cls[i], cls[j]):
                return False
    return True


def residue_independent_family(
    spec: GraphSpec, p: int | None = None, cap: int | None = None
) -> ResidueClassFamily:
    """Split vertices by residue key mod p (p prime, default per family).

    SR classes must all pass the independence scan; a failure there is an
    internal-consistency error.  CSR classes get per-class verdicts.
    """
    if p is None:
        p = default_prime(spec)
    if not _is_prime(p):
        raise ValueError(f"p={p} is not prime")
    minimum = max(spec.m, spec.n + 1) if spec.family == SR else max(spec.m, spec.n)
    if p < minimum:
        raise ValueError(
            f"p={p} is below {minimum}, the least prime size that makes "
            f"the residue classes of {spec.label()} reliable"
        )
    classes: list[list[Vertex]] = [[] for _ in range(p)]
    for v in enumerate_vertices(spec, cap):
        classes[residue_key(v, p)].append(v)
    independent = [_class_is_independent(spec, cls) for cls in classes]
    if spec.family == SR and not all(independent):
        bad = independent.index(False)
        raise InternalConsistencyError(
            f"residue class {bad} of {spec.label()} contains an edge; "
            "this contradicts a guaranteed property of the SR family"
        )
    return ResidueClassFamily(spec, p, classes, independent)


# -- dominating set for SR -----------------------------------------------------


@dataclass
class SrDominatingSet:
    """The set D of vertices whose first two coordinates are equal."""

    m: int
    n: int
    vertices: list[Vertex]

    @property
    def spec(self) -> GraphSpec:
        return sr_spec(self.m, self.n)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def predicted_size(self) -> int:
        """Closed form: sum over i of C(n + m - 3 - 2i, m - 3)."""
        return sum(
            math.comb(self.n + self.m - 3 - 2 * i, self.m - 3)
            for i in range(self.n // 2 + 1)
        )

    def size_upper_bound(self) -> Fraction:
        """Half of C(n + m - 1, m - 2)."""
        return Fraction(math.comb(self.n + self.m - 1, self.m - 2), 2)

    def witness(self, v: tuple[int, ...]) -> Vertex:
        """The dominator of v: v itself if v is in D, else the adjacent
        member of D obtained by equalising the first two coordinates."""
        v = validate_vertex(self.spec, v)
        a1, a2 = v[0], v[1]
        if a1 == a2:
            return v
        if a2 > a1:
            return (a1, a1, v[2] - a1 + a2) + v[3:]
        return (a2, a2, v[2] - a2 + a1) + v[3:]


def dominating_set_sr(m: int, n: int, cap: int | None = None) -> SrDominatingSet:
    if m < 3:
        raise ValueError(f"the equal-pair dominating set needs m >= 3, got m={m}")
    spec = sr_spec(m, n)
    check_enum_cap(spec, cap)
    verts = [v for v in iter_vertices(spec) if v[0] == v[1]]
    return SrDominatingSet(m, n, verts)


@dataclass
class ConjecturedDomination:
    """The diagonal candidate set {(i, i, n-2i)} for SR(3, n), with the
    results of its domination scan and the optional exact comparison."""

    n: int
    vertices: list[Vertex]
    dominates: bool
    oracle_gamma: int | None = None

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def matches_oracle(self) -> bool | None:
        if self.oracle_gamma is None:
            return None
        return self.size == self.oracle_gamma


def conjectured_dominating_set_sr3(
    n: int, compare_oracle: bool = False, cap: int | None = None
) -> ConjecturedDomination:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    spec = sr_spec(3, n)
    candidates = [(i, i, n - 2 * i) for i in range(n // 2 + 1)]
    covered = set(candidates)
    for d in candidates:
        covered.update(neighbors(spec, d))
    dominates = len(covered) == spec.vertex_count
    gamma = None
    if compare_oracle:
        from .oracles import oracle_gamma

        gamma = oracle_gamma(spec, cap)[0]
    return ConjecturedDomination(n, candidates, dominates, gamma)


# -- Hamiltonian cycles for SR ---------------------------------------------------


@dataclass(frozen=True)
class HamiltonianCycle:
    """A Hamiltonian cycle as an open vertex sequence (closure implied),
    guaranteed to traverse the anchor edge (n,0,...,0)-(n-1,1,0,...,0)."""

    m: int
    n: int
    vertices: tuple[Vertex, ...]

    @property
    def spec(self) -> GraphSpec:
        return sr_spec(self.m, self.n)

    @property
    def anchor_edge(self) -> tuple[Vertex, Vertex]:
        return anchor_edge(self.m, self.n)


def anchor_edge(m: int, n: int) -> tuple[Vertex, Vertex]:
    """The distinguished edge the recursion maintains: the all-in-first
    vertex joined to its single-step transfer onto the second coordinate."""
    return (n,) + (0,) * (m - 1), (n - 1, 1) + (0,) * (m - 2)


def _unit(m: int, i: int) -> Vertex:
    return tuple(1 if j == i else 0 for j in range(m))


def _swap23(v: Vertex) -> Vertex:
    return (v[0], v[2], v[1]) + v[3:]


def _ham_path(m: int, k: int, memo: dict) -> list[Vertex]:
    """Hamiltonian path of SR(m, k) from (k,0,...,0) to (k-1,1,0,...,0).

    Exists for m == 2, k >= 1 (complete graph) and for all m >= 3, k >= 1.
    """
    key = (m, k)
    if key in memo:
        return memo[key]
    if m == 2:
        path = [(k, 0)] + [(i, k - i) for i in range(k)]
    elif k == 1:
        path = [_unit(m, 0)] + [_unit(m, i) for i in range(m - 1, 0, -1)]
    else:
        cycle = _ham_cycle(m, k, memo)
        # the anchor edge sits at positions 0-1; cut it and walk the other way
        path = [cycle[0]] + cycle[:0:-1]
    memo[key] = path
    return path


def _ham_cycle(m: int, n: int, memo: dict) -> list[Vertex]:
    """Hamiltonian cycle of SR(m, n) for m >= 3, n >= 2; the anchor edge is
    the first consecutive pair of the returned sequence.

    Per slice of fixed first coordinate n-k the recursion lays down the
    sub-path for SR(m-1, k) reversed; consecutive slices join through the
    transfer edges between their endpoints, the all-in-first vertex closes
    the chain, and a final swap of coordinates 2 and 3 moves the closing
    edge onto the anchor.
    """
    raw: list[Vertex] = [(n,) + (0,) * (m - 1)]
    for k in range(1, n + 1):
        sub = _ham_path(m - 1, k, memo)
        raw.extend((n - k,) + u for u in reversed(sub))
    return [_swap23(v) for v in raw]


def hamiltonian_cycle_sr(m: int, n: int) -> HamiltonianCycle:
    """Build the recursive Hamiltonian cycle of SR(m, n).

    Rejects the graphs that have no Hamiltonian cycle: m == 1 or n == 0
    (single vertex) and (m, n) == (2, 1) (a single edge).
    """
    if m < 1 or n < 0:
        raise ValueError(f"invalid parameters m={m}, n={n}")
    if m == 1 or n == 0:
        raise ValueError(f"no Hamiltonian cycle: SR({m},{n}) is a single vertex")
    if (m, n) == (2, 1):
        raise ValueError("no Hamiltonian cycle: SR(2,1) is a single edge")
    if m == 2:
        cycle = [(n - i, i) for i in range(n + 1)]
    elif n == 1:
        cycle = [_unit(m, i) for i in range(m)]
    else:
        cycle = _ham_cycle(m, n, {})
    return HamiltonianCycle(m, n, tuple(cycle))


# -- maximum cliques in CSR ------------------------------------------------------

COSET_CLIQUE = "coset"
CORE_CLIQUE = "core"


@dataclass(frozen=True)
class Clique:
    """A pairwise-adjacent vertex set with its structure tag: 'coset' for a
    two-coordinate transfer line (size n), 'core' for a shifted set of unit
    bumps (size m)."""

    spec: GraphSpec
    kind: str
    vertices: tuple[Vertex, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


def max_clique_csr(m: int, n: int) -> Clique:
    """A clique of size max(n, m) in CSR(m, n).

    For n >= m this takes the line through the origin moving weight between
    the first two coordinates; otherwise the base point (n-1, 0, ..., 0)
    bumped by one in each coordinate in turn.  The clique is maximum for
    n >= 3 or n >= m; for n == 2 < m the true clique number can be larger
    (left to the exact oracle).
    """
    if m < 2 or n < 2:
        raise ValueError(f"clique construction needs m >= 2 and n >= 2, got ({m},{n})")
    spec = GraphSpec(CSR, m, n)
    if n >= m:
        members = [((c % n, (-c) % n) + (0,) * (m - 2)) for c in range(n)]
        kind = COSET_CLIQUE
    else:
        base = (n - 1,) + (0,) * (m - 1)
        members = [
            tuple((base[j] + (1 if j == a else 0)) % n for j in range(m)) for a in range(m)
        ]
        kind = CORE_CLIQUE
    members.sort()
    for i in range(len(members)):
        validate_vertex(spec, members[i])
        for j in range(i + 1, len(members)):
            if not adjacent(spec, members[i], members[j]):
                raise InternalConsistencyError(
                    f"clique construction for {spec.label()} produced the "
                    f"non-adjacent pair {members[i]}, {members[j]}"
                )
    return Clique(spec, kind, tuple(members))


# -- residue colorings -----------------------------------------------------------


@dataclass
class ColoringResult:
    """A coloring by residue key together with its edge-scan verdict."""

    spec: GraphSpec
    p: int
    colors: dict[Vertex, int]
    proper: bool
    violations: int = 0
    first_violation: tuple[Vertex, Vertex] | None = None
    colors_used: int = 0


def proper_coloring(
    spec: GraphSpec, p: int | None = None, cap: int | None = None
) -> ColoringResult:
    """Color every vertex by its residue key mod p and scan every edge.

    The scan verdict is part of the result: for SR the coloring is always
    proper with the default prime (classes are independent); for CSR it can
    fail, most visibly at small n, and the failure is reported rather than
    raised.
    """
    if p is None:
        p = default_prime(spec)
    if not _is_prime(p):
        raise ValueError(f"p={p} is not prime")
    colors: dict[Vertex, int] = {}
    for v in enumerate_vertices(spec, cap):
        colors[v] = residue_key(v, p)
    violations = 0
    first: tuple[Vertex, Vertex] | None = None
    for v in colors:
        for w in neighbors(spec, v):
            if v < w and colors[v] == colors[w]:
                violations += 1
                if first is None:
                    first = (v, w)
    return ColoringResult(
        spec,
        p,
        colors,
        proper=violations == 0,
        violations=violations,
        first_violation=first,
        colors_used=len(set(colors.values())),
    )
