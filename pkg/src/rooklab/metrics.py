"""Zero partitionings, CSR distances and diameters, and the closed-form
bound evaluators for both families.

The zero-partitioning number of a CSR vertex b is the maximum number of
blocks in a partition of the coordinate indices such that every block's
coordinate sum is 0 mod n; the distance from the origin to b is then
m minus that number, and distances between arbitrary vertices reduce to
the origin case by translating (the graph is a Cayley graph on the
zero-sum subgroup of Z_n^m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import config
from .constructions import default_prime, dominating_set_sr
from .core import CSR, SR, GraphSpec, Vertex, csr_spec, validate_vertex
from .errors import CapExceededError


@dataclass(frozen=True)
class ZeroPartition:
    """Disjoint index blocks covering all coordinates, each block summing
    to 0 mod n.  Indices are 0-based."""

    blocks: tuple[tuple[int, ...], ...]
    n: int

    @property
    def size(self) -> int:
        return len(self.blocks)

    def check(self, b: tuple[int, ...]) -> bool:
        """Re-validate against the vertex b: blocks disjoint, covering,
        every block sum 0 mod n."""
        seen: set[int] = set()
        for block in self.blocks:
            if any(i in seen for i in block):
                return False
            seen.update(block)
            if sum(b[i] for i in block) % self.n != 0:
                return False
        return seen == set(range(len(b)))


def zero_partition_number(
    b: tuple[int, ...], n: int, mask_cap: int | None = None
) -> tuple[int, ZeroPartition]:
    """Maximum block count over all zero partitionings of b, with a witness.

    Subset-mask dynamic program: t[S] is the best block count partitioning
    the index subset S, computed over zero-sum sub-blocks that contain S's
    lowest index (so each block is counted once).  O(3^m) time, O(2^m)
    space; m is guarded by the mask limit.
    """
    m = len(b)
    if n < 1:
        raise ValueError(f"modulus n must be >= 1, got {n}")
    limit = config.mask_limit(mask_cap)
    if m > limit:
        raise CapExceededError(f"m={m} exceeds the subset-mask limit {limit}")
    b = tuple(x % n for x in b)
    if sum(b) % n != 0:
        raise ValueError(f"not a CSR vertex: coordinates sum to {sum(b)} != 0 mod {n}")
    if m == 0:
        return 0, ZeroPartition((), n)

    full = (1 << m) - 1
    sums = [0] * (full + 1)
    for mask in range(1, full + 1):
        low = mask & -mask
        sums[mask] = (sums[mask ^ low] + b[low.bit_length() - 1]) % n

    best = [-1] * (full + 1)  # -1: subset has no zero partitioning
    choice = [0] * (full + 1)
    best[0] = 0
    for mask in range(1, full + 1):
        low = mask & -mask
        rest = mask ^ low
        top = -1
        pick = 0
        sub = rest
        while True:
            block = sub | low
            if sums[block] == 0 and best[mask ^ block] >= 0:
                cand = 1 + best[mask ^ block]
                if cand > top or (cand == top and block < pick):
                    top, pick = cand, block
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[mask], choice[mask] = top, pick

    blocks: list[tuple[int, ...]] = []
    mask = full
    while mask:
        block = choice[mask]
        blocks.append(tuple(i for i in range(m) if block >> i & 1))
        mask ^= block
    return best[full], ZeroPartition(tuple(blocks), n)


def csr_distance_witness(
    spec: GraphSpec, u: tuple[int, ...], v: tuple[int, ...], mask_cap: int | None = None
) -> tuple[int, ZeroPartition]:
    """Distance in CSR(m, n) plus the zero partitioning of v - u behind it."""
    if spec.family != CSR:
        raise ValueError(f"distance formula applies to CSR only, got {spec.label()}")
    u = validate_vertex(spec, u)
    v = validate_vertex(spec, v)
    diff = tuple((x - y) % spec.n for x, y in zip(v, u))
    count, witness = zero_partition_number(diff, spec.n, mask_cap)
    return spec.m - count, witness


def csr_distance(
    spec: GraphSpec, u: tuple[int, ...], v: tuple[int, ...], mask_cap: int | None = None
) -> int:
    return csr_distance_witness(spec, u, v, mask_cap)[0]


def csr_diameter(m: int, n: int) -> int:
    """Closed form m - floor((m-1)/n) - 1."""
    csr_spec(m, n)  # parameter validation
    return m - (m - 1) // n - 1


def csr_eccentric_vertex(m: int, n: int) -> Vertex:
    """A vertex at distance exactly the diameter from the origin: as much
    weight as possible spread into single 1s."""
    return ((n - (m - 1)) % n,) + (1 % n,) * (m - 1)


def sr_diameter(m: int, n: int) -> int:
    """Closed form min(m - 1, n)."""
    GraphSpec(SR, m, n)  # parameter validation
    return min(m - 1, n)


# -- closed-form bounds ----------------------------------------------------------


@dataclass(frozen=True)
class BoundRecord:
    quantity: str  # alpha | gamma | chi | omega | diameter
    side: str  # lower | upper | exact
    value: int
    formula: str  # evaluated formula, for reports


@dataclass
class BoundsReport:
    """Every closed-form bound available for the family, floor/ceiling
    applied only where the quantity is an integer."""

    spec: GraphSpec
    p: int
    alpha_lower: int | None = None
    alpha_upper: int | None = None
    gamma_lower: int | None = None
    gamma_upper: int | None = None
    chi_lower: int | None = None
    chi_upper: int | None = None
    omega_formula: int | None = None
    diam_formula: int | None = None

    def records(self) -> list[BoundRecord]:
        out = []
        m, n, p = self.spec.m, self.spec.n, self.p
        if self.alpha_lower is not None:
            out.append(BoundRecord("alpha", "lower", self.alpha_lower, f"ceil(C({n+m-1},{n})/{p})"))
        if self.alpha_upper is not None:
            tag = f"floor(C({n+m-1},{n})/{m})" if self.spec.degree > 0 else "|V| (edgeless)"
            out.append(BoundRecord("alpha", "upper", self.alpha_upper, tag))
        if self.gamma_lower is not None:
            out.append(
                BoundRecord("gamma", "lower", self.gamma_lower, f"ceil(C({n+m-1},{m-1})/{n*(m-1)+1})")
            )
        if self.gamma_upper is not None:
            out.append(BoundRecord("gamma", "upper", self.gamma_upper, f"floor(C({n+m-1},{m-2})/2)"))
        if self.chi_lower is not None:
            out.append(BoundRecord("chi", "lower", self.chi_lower, f"m={m}"))
        if self.chi_upper is not None:
            out.append(BoundRecord("chi", "upper", self.chi_upper, f"p={p}"))
        if self.omega_formula is not None:
            out.append(BoundRecord("omega", "exact", self.omega_formula, f"max({n},{m})"))
        if self.diam_formula is not None:
            tag = f"min({m-1},{n})" if self.spec.family == SR else f"{m}-floor({m-1}/{n})-1"
            out.append(BoundRecord("diameter", "exact", self.diam_formula, tag))
        return out


def bounds_report(spec: GraphSpec) -> BoundsReport:
    """Evaluate the family's closed-form bounds with exact integer arithmetic.

    SR: alpha in [ceil(N/p), floor(N/m)] for N = C(n+m-1, n) and the default
    prime p; gamma in [ceil(N/(degree+1)), floor(C(n+m-1, m-2)/2)] (the upper
    bound needs the m >= 3 construction); diameter min(m-1, n).
    CSR: chi in [m, p] (n >= 2), omega = max(n, m) (m, n >= 2), and the
    diameter closed form.
    """
    m, n = spec.m, spec.n
    p = default_prime(spec)
    report = BoundsReport(spec, p)
    if spec.family == SR:
        total = math.comb(n + m - 1, n)
        report.alpha_lower = -(-total // p)
        # the spectral bound total/m needs edges; edgeless graphs have alpha = |V|
        report.alpha_upper = total // m if spec.degree > 0 else total
        report.gamma_lower = -(-total // (spec.degree + 1))
        if m >= 3:
            report.gamma_upper = math.comb(n + m - 1, m - 2) // 2
        report.diam_formula = sr_diameter(m, n)
    else:
        if n >= 2:
            report.chi_lower = m
            report.chi_upper = p
        if m >= 2 and n >= 2:
            report.omega_formula = max(n, m)
        report.diam_formula = csr_diameter(m, n)
    return report


def hoffman_alpha_bound(m: int, n: int) -> Fraction:
    """Spectral independence bound for SR(m, n) as an exact rational,
    using the known least eigenvalue max(-n, -C(m, 2))."""
    spec = GraphSpec(SR, m, n)
    r = spec.degree
    lam = max(-n, -math.comb(m, 2))
    if r == 0 or lam == 0:
        return Fraction(spec.vertex_count)  # edgeless: every vertex fits
    return Fraction(-lam, r - lam) * spec.vertex_count


# -- domination growth table ------------------------------------------------------


@dataclass(frozen=True)
class GammaRow:
    n: int
    vertex_count: int
    lower_bound: int
    gamma: int
    dominating_size: int
    dominating_upper: int
    consistent: bool


def gamma_order_check(m: int, n_values, cap: int | None = None) -> list[GammaRow]:
    """Tabulate exact gamma against the two growth envelopes: the degree
    lower bound and the equal-pair dominating set (with its closed-form
    ceiling).  Confirms lower <= gamma <= |D| row by row."""
    from .oracles import oracle_gamma

    rows = []
    for n in n_values:
        spec = GraphSpec(SR, m, n)
        lower = -(-spec.vertex_count // (spec.degree + 1))
        gamma = oracle_gamma(spec, cap)[0]
        dom = dominating_set_sr(m, n)
        upper = int(dom.size_upper_bound())  # floor; gamma is an integer
        rows.append(
            GammaRow(
                n,
                spec.vertex_count,
                lower,
                gamma,
                dom.size,
                upper,
                lower <= gamma <= dom.size <= upper,
            )
        )
    return rows
