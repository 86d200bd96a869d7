"""Vertex enumeration and adjacency for the two rook-graph families.

SR(m, n):  vertices are length-m vectors of nonnegative integers summing
to n.  CSR(m, n): vertices are length-m vectors over Z_n whose coordinate
sum is 0 mod n.  In both families two vertices are adjacent exactly when
they differ in exactly two coordinate positions (the sum constraint then
forces the two changes to cancel).

Vertices are plain tuples of ints; the canonical order everywhere is the
tuple's own lexicographic order.  All functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterator

from . import config
from .errors import CapExceededError

Vertex = tuple[int, ...]

SR = "SR"
CSR = "CSR"


@dataclass(frozen=True)
class GraphSpec:
    """One graph instance: family tag plus the two size parameters."""

    family: str
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.family not in (SR, CSR):
            raise ValueError(f"unknown family {self.family!r}; expected 'SR' or 'CSR'")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.family == SR and self.n < 0:
            raise ValueError(f"SR requires n >= 0, got {self.n}")
        if self.family == CSR and self.n < 1:
            raise ValueError(f"CSR requires n >= 1, got {self.n}")

    @property
    def vertex_count(self) -> int:
        if self.family == SR:
            return math.comb(self.n + self.m - 1, self.n)
        return self.n ** (self.m - 1)

    @property
    def degree(self) -> int:
        """Regularity degree: n(m-1) for SR, C(m,2)(n-1) for CSR."""
        if self.family == SR:
            return self.n * (self.m - 1)
        return math.comb(self.m, 2) * (self.n - 1)

    def label(self) -> str:
        return f"{self.family}({self.m},{self.n})"


def sr_spec(m: int, n: int) -> GraphSpec:
    return GraphSpec(SR, m, n)


def csr_spec(m: int, n: int) -> GraphSpec:
    return GraphSpec(CSR, m, n)


def is_vertex(spec: GraphSpec, v: tuple[int, ...]) -> bool:
    if len(v) != spec.m:
        return False
    if spec.family == SR:
        return all(x >= 0 for x in v) and sum(v) == spec.n
    return all(0 <= x < spec.n for x in v) and sum(v) % spec.n == 0


def validate_vertex(spec: GraphSpec, v: tuple[int, ...]) -> Vertex:
    """Return v as a vertex of spec, raising ValueError with the reason if not."""
    v = tuple(int(x) for x in v)
    if len(v) != spec.m:
        raise ValueError(f"vertex has {len(v)} coordinates, spec {spec.label()} needs {spec.m}")
    if spec.family == SR:
        if any(x < 0 for x in v):
            raise ValueError(f"SR vertex has a negative coordinate: {v}")
        if sum(v) != spec.n:
            raise ValueError(f"SR vertex coordinates sum to {sum(v)}, expected {spec.n}")
    else:
        if any(not 0 <= x < spec.n for x in v):
            raise ValueError(f"CSR vertex has a coordinate outside 0..{spec.n - 1}: {v}")
        if sum(v) % spec.n != 0:
            raise ValueError(f"CSR vertex coordinates sum to {sum(v)} != 0 mod {spec.n}")
    return v


def normalize_csr(coords: tuple[int, ...], n: int) -> Vertex:
    """Reduce arbitrary integer coordinates into the canonical 0..n-1 range."""
    return tuple(x % n for x in coords)


def check_enum_cap(spec: GraphSpec, cap: int | None = None) -> None:
    limit = config.enum_cap(cap)
    if spec.vertex_count > limit:
        raise CapExceededError(
            f"{spec.label()} has {spec.vertex_count} vertices, over the enumeration cap {limit}"
        )


def iter_vertices(spec: GraphSpec) -> Iterator[Vertex]:
    """Yield all vertices in lexicographic order (no cap check)."""
    if spec.family == SR:
        yield from _iter_compositions(spec.m, spec.n)
    else:
        yield from _iter_csr(spec.m, spec.n)


def _iter_compositions(m: int, n: int) -> Iterator[Vertex]:
    # weak compositions of n into m parts, lexicographic
    if m == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _iter_compositions(m - 1, n - first):
            yield (first,) + rest


def _iter_csr(m: int, n: int) -> Iterator[Vertex]:
    # free choice of the first m-1 residues fixes the last; lexicographic in
    # the prefix is lexicographic in the full vector
    if m == 1:
        yield (0,)
        return
    prefix = [0] * (m - 1)
    while True:
        yield tuple(prefix) + ((-sum(prefix)) % n,)
        i = m - 2
        while i >= 0 and prefix[i] == n - 1:
            prefix[i] = 0
            i -= 1
        if i < 0:
            return
        prefix[i] += 1


def enumerate_vertices(spec: GraphSpec, cap: int | None = None) -> list[Vertex]:
    """All vertices, lexicographically sorted, each exactly once."""
    check_enum_cap(spec, cap)
    return list(iter_vertices(spec))


def adjacent(spec: GraphSpec, u: tuple[int, ...], v: tuple[int, ...]) -> bool:
    """True iff u and v differ in exactly two coordinate positions."""
    if len(u) != spec.m or len(v) != spec.m:
        raise ValueError(
            f"dimension mismatch: |u|={len(u)}, |v|={len(v)}, spec {spec.label()} has m={spec.m}"
        )
    diff = 0
    for a, b in zip(u, v):
        if a != b:
            diff += 1
            if diff > 2:
                return False
    return diff == 2


def neighbors(spec: GraphSpec, v: tuple[int, ...]) -> list[Vertex]:
    """Sorted neighbor list, generated directly (no global enumeration)."""
    v = validate_vertex(spec, v)
    m, n = spec.m, spec.n
    out: list[Vertex] = []
    if spec.family == SR:
        # move delta in 1..v[i] from coordinate i to coordinate j
        for i in range(m):
            for delta in range(1, v[i] + 1):
                for j in range(m):
                    if i == j:
                        continue
                    w = list(v)
                    w[i] -= delta
                    w[j] += delta
                    out.append(tuple(w))
    else:
        # add alpha(e_i - e_j) for each pair i<j and alpha != 0
        for i in range(m):
            for j in range(i + 1, m):
                for alpha in range(1, n):
                    w = list(v)
                    w[i] = (w[i] + alpha) % n
                    w[j] = (w[j] - alpha) % n
                    out.append(tuple(w))
    out.sort()
    return out


def edges(spec: GraphSpec, cap: int | None = None) -> list[tuple[Vertex, Vertex]]:
    """All edges, smaller endpoint first, sorted; each edge exactly once."""
    check_enum_cap(spec, cap)
    result: list[tuple[Vertex, Vertex]] = []
    for v in iter_vertices(spec):
        for w in neighbors(spec, v):
            if v < w:
                result.append((v, w))
    return result


# -- edge-list text format ----------------------------------------------------
#
# header line:  # family=SR m=3 n=2
# edge lines:   a1,a2,...,am;b1,b2,...,bm   (smaller endpoint first, sorted)


def format_vertex(v: tuple[int, ...]) -> str:
    return ",".join(str(x) for x in v)


def parse_vertex(text: str) -> Vertex:
    try:
        return tuple(int(part) for part in text.strip().split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse vertex {text!r}: {exc}") from None


def write_edge_list(spec: GraphSpec, out: IO[str], cap: int | None = None) -> int:
    """Write the canonical edge-list text; returns the number of edges."""
    out.write(f"# family={spec.family} m={spec.m} n={spec.n}\n")
    count = 0
    for a, b in edges(spec, cap):
        out.write(f"{format_vertex(a)};{format_vertex(b)}\n")
        count += 1
    return count


def read_edge_list(infile: IO[str]) -> tuple[GraphSpec, list[tuple[Vertex, Vertex]]]:
    header = infile.readline().strip()
    if not header.startswith("#"):
        raise ValueError("edge list must start with a '# family=... m=... n=...' header")
    fields = dict(part.split("=", 1) for part in header[1:].split())
    spec = GraphSpec(fields["family"], int(fields["m"]), int(fields["n"]))
    edge_list = []
    for line in infile:
        line = line.strip()
        if not line:
            continue
        left, right = line.split(";")
        edge_list.append((parse_vertex(left), parse_vertex(right)))
    return spec, edge_list
