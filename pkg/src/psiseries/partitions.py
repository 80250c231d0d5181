"""Integer partitions with all parts >= 2 and the edge/cycle families they index.

A partition of k with every part at least 2 corresponds bijectively to a
graph on k vertices whose components are single edges (parts of size 2)
and cycles (parts of size b >= 3).  hs_family materializes that bijection
together with the signed weights used for characteristic-polynomial
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, List, Tuple


@dataclass(frozen=True)
class Partition:
    """Multiset of parts stored as ((b1, m1), (b2, m2), ...) with b1 > b2 >= 2."""

    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        last = None
        for b, m in self.pairs:
            if b < 2 or m < 1:
                raise ValueError(f"invalid partition pair ({b}, {m})")
            if last is not None and b >= last:
                raise ValueError("part sizes must be strictly decreasing")
            last = b

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        parts = sorted(parts, reverse=True)
        pairs = []
        for b in parts:
            if pairs and pairs[-1][0] == b:
                pairs[-1][1] += 1
            else:
                pairs.append([b, 1])
        return cls(tuple((b, m) for b, m in pairs))

    @property
    def total(self) -> int:
        return sum(b * m for b, m in self.pairs)

    @property
    def num_parts(self) -> int:
        return sum(m for _, m in self.pairs)

    def multiplicity(self, size: int) -> int:
        for b, m in self.pairs:
            if b == size:
                return m
        return 0

    def parts_list(self) -> List[int]:
        out = []
        for b, m in self.pairs:
            out.extend([b] * m)
        return out

    def __str__(self):
        if not self.pairs:
            return "(empty)"
        return "+".join(str(b) for b in self.parts_list())


def _descending_min2(k: int, max_part: int) -> Iterator[List[int]]:
    if k == 0:
        yield []
        return
    for b in range(min(k, max_part), 1, -1):
        rest = k - b
        if rest == 0:
            yield [b]
        elif rest >= 2:
            for tail in _descending_min2(rest, b):
                yield [b] + tail


def enumerate_min2_partitions(k: int) -> List[Partition]:
    """All partitions of k with every part >= 2, in descending-lex order.

    k=0 yields the single empty partition; k=1 yields no partitions.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return [Partition.from_parts(parts) for parts in _descending_min2(k, k)]


def eta(p: Partition) -> int:
    """The normalizing statistic prod_i b_i^{m_i} * m_i!."""
    out = 1
    for b, m in p.pairs:
        out *= b**m * factorial(m)
    return out


def lambda_filter(k: int, i: int, j: int) -> List[Partition]:
    """Partitions of k into exactly j parts >= 2, exactly i of which equal 2."""
    if k < 0 or i < 0 or j < 0:
        raise ValueError("k, i, j must be nonnegative")
    return [
        p
        for p in enumerate_min2_partitions(k)
        if p.num_parts == j and p.multiplicity(2) == i
    ]


@dataclass(frozen=True)
class HSTerm:
    """A partition viewed as an edge/cycle union, with its signed weight.

    c counts components (= parts), z counts cycles (= parts of size >= 3),
    eta is the partition statistic, sign is (-1)^c.
    """

    partition: Partition
    c: int
    z: int
    eta: int
    sign: int

    @property
    def total(self) -> int:
        return self.partition.total

    @property
    def edge_count(self) -> int:
        """Edges of the corresponding graph: total - c + z."""
        return self.total - self.c + self.z


def hs_family(k: int) -> List[HSTerm]:
    """One term per k-vertex graph whose components are edges or cycles.

    k=0 returns the single empty term with c = z = 0 and sign +1; k=1 is
    empty because no such graph exists on one vertex.
    """
    terms = []
    for p in enumerate_min2_partitions(k):
        c = p.num_parts
        z = sum(m for b, m in p.pairs if b >= 3)
        terms.append(HSTerm(partition=p, c=c, z=z, eta=eta(p), sign=(-1) ** c))
    return terms
