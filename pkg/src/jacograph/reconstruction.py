"""Edge counts by degree-sum reconstruction around the Jaconian vertex.

When n splits as n = m + d+(v_m) with m = d+(v_n), the graph J_n(1) can be
rebuilt from J_m(1) by reattaching the lobbed-off tail: the anchor vertex
m regains its full degree, the tail vertices are wired among themselves,
and a short run of bridging arcs reconnects the vertices just below m.
Halving the resulting degree sum yields the edge count.  When n itself
does not split, n + 1 does, and one in-degree step walks the count back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .zeckendorf import bettina_out_degree

__all__ = [
    "Anchor",
    "BridgingSum",
    "ExpressibilityError",
    "expressible_anchor",
    "bridging_terms",
    "edges_from_anchor",
    "edges_reconstruction",
]

# Edge counts of J_1(1), J_2(1), J_3(1); kept explicit instead of pushing
# the reconstruction through near-empty bridging sums.
_SMALL_EDGE_COUNTS = (0, 1, 2)


class ExpressibilityError(RuntimeError):
    """Neither n nor n + 1 splits as m + out_degree(m); should never happen."""


@dataclass(frozen=True)
class Anchor:
    """Anchor vertex m for a target size: target = m + d+(v_m).

    With via_successor set, the split was found for n + 1 rather than n,
    and the edge count for n is obtained from the successor's.
    """

    n: int
    m: int
    via_successor: bool = False

    @property
    def target(self) -> int:
        return self.n + 1 if self.via_successor else self.n


@dataclass(frozen=True)
class BridgingSum:
    """Bridging-arc counts (d+(v_{m-i}) - i) for offsets i = 0..j_max.

    Terms are (offset, value) pairs; values stay >= 1 and strictly
    decrease, so the list ends exactly at the last offset whose value is
    still positive.
    """

    terms: tuple[tuple[int, int], ...]
    j_max: int

    @property
    def values(self) -> list[int]:
        return [value for _, value in self.terms]

    @property
    def total(self) -> int:
        return sum(value for _, value in self.terms)


def expressible_anchor(n: int) -> Anchor:
    """Find the anchor for n, falling back to n + 1 when n does not split."""
    if n < 2:
        raise ValueError("anchors are defined for n >= 2")
    m = bettina_out_degree(n)
    if m + bettina_out_degree(m) == n:
        return Anchor(n=n, m=m)
    successor = bettina_out_degree(n + 1)
    if successor + bettina_out_degree(successor) == n + 1:
        return Anchor(n=n, m=successor, via_successor=True)
    raise ExpressibilityError(
        f"neither {n} nor {n + 1} splits as m + out_degree(m); "
        f"candidates were m={m} and m={successor}"
    )


def bridging_terms(m: int) -> BridgingSum:
    """Terms (d+(v_{m-i}) - i) while they stay >= 1 and m - i stays in range."""
    if m < 1:
        raise ValueError("vertices are indexed from 1")
    terms = []
    offset = 0
    while m - offset >= 1:
        value = bettina_out_degree(m - offset) - offset
        if value < 1:
            break
        terms.append((offset, value))
        offset += 1
    return BridgingSum(terms=tuple(terms), j_max=terms[-1][0])


def edges_from_anchor(n: int, m: int) -> int:
    """Edge count of J_n(1) given its anchor m, via the halved degree sum.

    The three contributions: vertices 1..m carry their full infinite-graph
    degrees, the bridging arcs double-count into the tail, and the tail of
    d+(v_m) vertices is wired completely among itself.
    """
    out_m = bettina_out_degree(m)
    if m + out_m != n:
        raise ValueError(f"{m} is not an anchor for {n}: {m} + {out_m} != {n}")
    degree_sum = m * (m + 1) // 2 + bridging_terms(m).total + out_m * (out_m - 1)
    if degree_sum % 2:
        raise RuntimeError(f"degree sum {degree_sum} for n={n}, m={m} is odd; invariant violated")
    return degree_sum // 2


def edges_reconstruction(n: int) -> int:
    """Edge count of J_n(1) by anchor reconstruction, for any n >= 1."""
    if n < 1:
        raise ValueError("vertices are indexed from 1")
    if n <= 3:
        return _SMALL_EDGE_COUNTS[n - 1]
    anchor = expressible_anchor(n)
    if anchor.via_successor:
        # d-(v_{n+1}) = d+(v_m), so one recursion step walks the count back
        return edges_from_anchor(n + 1, anchor.m) - bettina_out_degree(anchor.m)
    return edges_from_anchor(n, anchor.m)
