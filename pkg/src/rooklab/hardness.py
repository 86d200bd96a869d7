"""3-Partition encoded as a CSR distance query, with an independent solver.

A valid instance (k, s, a_1..a_3k) maps to the vertex (a_1, ..., a_3k) of
CSR(3k, s).  The range constraint s/4 < a_i < s/2 forces every zero-sum
block to have at least three elements, so the distance from the origin is
2k exactly when the instance is a yes-instance.  The independent solver
enumerates partitions of the index set into triples directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO

from .core import GraphSpec, Vertex, csr_spec
from .metrics import ZeroPartition, csr_distance_witness


@dataclass(frozen=True)
class ThreePartitionInstance:
    k: int
    s: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.s < 1:
            raise ValueError(f"s must be >= 1, got {self.s}")
        if len(self.values) != 3 * self.k:
            raise ValueError(f"expected {3 * self.k} values, got {len(self.values)}")
        for i, a in enumerate(self.values, start=1):
            # strict s/4 < a < s/2 in integer arithmetic
            if not (4 * a > self.s and 2 * a < self.s):
                raise ValueError(
                    f"range violation at index {i}: {a} is not strictly "
                    f"between {self.s}/4 and {self.s}/2"
                )
        total = sum(self.values)
        if total != self.k * self.s:
            raise ValueError(f"sum mismatch: values sum to {total}, expected k*s={self.k * self.s}")


def encode_instance(inst: ThreePartitionInstance) -> tuple[GraphSpec, Vertex]:
    """The CSR(3k, s) spec and the vertex carrying the instance values."""
    return csr_spec(3 * inst.k, inst.s), tuple(inst.values)


def decode_distance(inst: ThreePartitionInstance, distance: int) -> bool:
    """Yes-instance iff the origin distance equals 2k."""
    return distance == 2 * inst.k


def solve_3partition(inst: ThreePartitionInstance) -> tuple[bool, list[tuple[int, int, int]] | None]:
    """Exhaustive partition of the 3k indices into k triples of sum s.

    Independent of the distance machinery; returns one witness partition
    (0-based index triples) when the answer is yes.
    """
    indices = list(range(3 * inst.k))
    chosen: list[tuple[int, int, int]] = []

    def fill(remaining: list[int]) -> bool:
        if not remaining:
            return True
        first = remaining[0]
        rest = remaining[1:]
        for x in range(len(rest)):
            for y in range(x + 1, len(rest)):
                i, j = rest[x], rest[y]
                if inst.values[first] + inst.values[i] + inst.values[j] == inst.s:
                    chosen.append((first, i, j))
                    if fill([t for t in rest if t != i and t != j]):
                        return True
                    chosen.pop()
        return False

    if fill(indices):
        return True, chosen
    return False, None


@dataclass(frozen=True)
class ReductionResult:
    instance: ThreePartitionInstance
    spec: GraphSpec
    vertex: Vertex
    distance: int
    witness: ZeroPartition
    decoded: bool
    solver_answer: bool

    @property
    def agree(self) -> bool:
        return self.decoded == self.solver_answer


def run_reduction(inst: ThreePartitionInstance, mask_cap: int | None = None) -> ReductionResult:
    """Encode, compute the origin distance, decode, and cross-check against
    the exhaustive solver."""
    spec, vertex = encode_instance(inst)
    origin = (0,) * spec.m
    distance, witness = csr_distance_witness(spec, origin, vertex, mask_cap)
    decoded = decode_distance(inst, distance)
    answer, _ = solve_3partition(inst)
    return ReductionResult(inst, spec, vertex, distance, witness, decoded, answer)


# -- instance file format ----------------------------------------------------------
#
# line 1:  k s
# line 2:  the 3k values, whitespace-separated


def read_instance(infile: IO[str]) -> ThreePartitionInstance:
    first = infile.readline().split()
    if len(first) != 2:
        raise ValueError("first line must be 'k s'")
    k, s = int(first[0]), int(first[1])
    values = tuple(int(tok) for tok in infile.readline().split())
    return ThreePartitionInstance(k, s, values)


def write_instance(inst: ThreePartitionInstance, out: IO[str]) -> None:
    out.write(f"{inst.k} {inst.s}\n")
    out.write(" ".join(str(a) for a in inst.values) + "\n")
