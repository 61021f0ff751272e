"""Ground-truth construction of finite Jaco graphs J_n(1).

A Jaco graph of order 1 puts an arc from v_i to v_j (i < j) exactly when
2i - d-(v_i) >= j, where d-(v_i) is the in-degree of v_i.  The finite graph
J_n(1) keeps vertices v_1..v_n and drops every arc pointing past v_n.

This module recomputes every in-degree by literally counting the qualifying
tail vertices, head by head, in quadratic time.  That is deliberate: the
counting construction is the independent witness the faster engines
(row recursion, Zeckendorf shift rule, degree-sum reconstruction) are
validated against, so it must not share machinery with any of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

__all__ = [
    "JacoGraph",
    "DegreeRecord",
    "Jaconian",
    "HopeView",
    "build_jaco",
    "arc_exists",
    "degree_profile",
    "edge_count_oracle",
    "jaconian",
    "hope_view",
    "to_edge_list",
    "to_dot",
]


@dataclass(frozen=True)
class JacoGraph:
    """Finite Jaco graph on vertices v_1..v_n.

    Out-neighbors are contiguous: v_i has arcs to v_{i+1}..v_{out_hi(i)},
    and no arcs when that range is empty.  Contiguity holds because every
    vertex between a tail and its farthest head is itself a tail of the
    same head, so a per-vertex upper bound is enough to store the arc set
    in O(n) space.

    Tuples are positional: entry k describes vertex k + 1.
    """

    n: int
    in_deg: tuple[int, ...]
    out_hi: tuple[int, ...]

    def _check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"vertex {i} out of range 1..{self.n}")

    def in_degree(self, i: int) -> int:
        self._check_vertex(i)
        return self.in_deg[i - 1]

    def out_degree_finite(self, i: int) -> int:
        """Number of arcs leaving v_i that survive inside J_n(1)."""
        self._check_vertex(i)
        return max(0, self.out_hi[i - 1] - i)

    def out_degree_infinite(self, i: int) -> int:
        """Out-degree of v_i in the infinite graph: i - d-(v_i)."""
        self._check_vertex(i)
        return i - self.in_deg[i - 1]

    def total_degree(self, i: int) -> int:
        self._check_vertex(i)
        return self.in_deg[i - 1] + self.out_degree_finite(i)

    def arcs(self) -> Iterator[tuple[int, int]]:
        """All arcs (i, j), ascending by (i, j)."""
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.out_hi[i - 1] + 1):
                yield (i, j)


class DegreeRecord(NamedTuple):
    index: int
    in_degree: int
    out_degree_finite: int
    out_degree_infinite: int
    total_degree: int


class Jaconian(NamedTuple):
    delta: int
    prime_index: int
    vertices: frozenset[int]


@dataclass(frozen=True)
class HopeView:
    """The subgraph induced by the vertices after the prime Jaconian vertex."""

    start: int
    vertex_count: int
    induced_edge_count: int


def build_jaco(n: int) -> JacoGraph:
    """Construct J_n(1) from the arc rule alone.

    For ascending i, the in-degree of v_i is the count of earlier vertices
    whose reach 2i' - d-(v_i') extends to i.  Quadratic by design; this is
    the oracle.
    """
    if n < 1:
        raise ValueError("vertices are indexed from 1")
    in_deg = [0] * n
    reach = [0] * n  # reach[k] = 2(k+1) - in_deg[k], the farthest head of v_{k+1}
    for i in range(1, n + 1):
        if i > 1:
            count = 0
            for k in range(i - 1):
                if reach[k] >= i:
                    count += 1
            in_deg[i - 1] = count
        reach[i - 1] = 2 * i - in_deg[i - 1]
    out_hi = tuple(min(r, n) for r in reach)
    return JacoGraph(n=n, in_deg=tuple(in_deg), out_hi=out_hi)


def arc_exists(g: JacoGraph, i: int, j: int) -> bool:
    g._check_vertex(i)
    g._check_vertex(j)
    return i < j <= g.out_hi[i - 1]


def degree_profile(g: JacoGraph) -> list[DegreeRecord]:
    records = []
    for i in range(1, g.n + 1):
        d_in = g.in_deg[i - 1]
        d_out = max(0, g.out_hi[i - 1] - i)
        records.append(DegreeRecord(i, d_in, d_out, i - d_in, d_in + d_out))
    return records


def edge_count_oracle(g: JacoGraph) -> int:
    """Arc count of J_n(1): the sum of all in-degrees."""
    return sum(g.in_deg)


def jaconian(g: JacoGraph) -> Jaconian:
    """Maximum total degree, the vertices attaining it, and the smallest such.

    The smallest attaining index (the prime Jaconian vertex) numerically
    equals the maximum degree for every n >= 2; J_1 is the lone exception
    (degree 0 at vertex 1).
    """
    delta = -1
    attaining: list[int] = []
    for i in range(1, g.n + 1):
        d = g.total_degree(i)
        if d > delta:
            delta = d
            attaining = [i]
        elif d == delta:
            attaining.append(i)
    return Jaconian(delta, attaining[0], frozenset(attaining))


def hope_view(g: JacoGraph) -> HopeView:
    """View of the Hope graph: vertices past the prime Jaconian vertex.

    For n = 1 there is nothing past the single vertex and the view is empty.
    """
    prime = jaconian(g).prime_index
    start = prime + 1
    induced = 0
    for i in range(start, g.n + 1):
        induced += max(0, g.out_hi[i - 1] - i)
    return HopeView(start=start, vertex_count=g.n - prime, induced_edge_count=induced)


def to_edge_list(g: JacoGraph) -> str:
    """One arc per line, "i j", ascending by (i, j)."""
    return "\n".join(f"{i} {j}" for i, j in g.arcs())


def to_dot(g: JacoGraph) -> str:
    """DOT digraph with vertices named v1..vn."""
    lines = [f"digraph jaco_{g.n} {{"]
    for i in range(1, g.n + 1):
        lines.append(f"  v{i};")
    for i, j in g.arcs():
        lines.append(f"  v{i} -> v{j};")
    lines.append("}")
    return "\n".join(lines)
