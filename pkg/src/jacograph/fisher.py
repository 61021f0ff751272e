"""Linear-time row engine for the J_n(1) degree and edge-count table.

Each row is derived from its predecessor alone:

    in_degree_i  = (i - 1) - delta_{i-1}
    out_degree_i = i - in_degree_i            (infinite-graph out-degree)
    edges_i      = edges_{i-1} + in_degree_i
    delta_i      = delta_{i-1}, advanced by one when the candidate fits

Rows 1..3 are fixed seeds; the recursion starts at row 4.

The delta column tracks the maximum total degree of J_i(1), which equals
max{m : 2m - in_degree_m <= i}.  Because 2m - in_degree_m grows by 1 or 2
per vertex, that maximum can move up by at most one when i grows by one,
so a single monotone pointer suffices and each row costs O(1).
"""

from __future__ import annotations

from array import array
from typing import Iterable, NamedTuple

__all__ = [
    "FisherRow",
    "TableState",
    "seed_rows",
    "next_row",
    "fisher_table",
    "edges_recursive",
    "edge_count_prefix",
    "rows_to_csv",
    "CSV_HEADER",
]

CSV_HEADER = "i,in_degree,out_degree,delta,edges"


class FisherRow(NamedTuple):
    index: int
    in_degree: int
    out_degree: int
    delta: int
    edges: int


_SEEDS = (
    FisherRow(1, 0, 1, 0, 0),
    FisherRow(2, 1, 1, 1, 1),
    FisherRow(3, 1, 2, 2, 2),
)


def seed_rows() -> tuple[FisherRow, FisherRow, FisherRow]:
    """Rows 1..3, which precede the recursion and come straight from the arc rule."""
    return _SEEDS


class TableState:
    """Rows emitted so far plus the pointer driving the delta column.

    The pointer always equals the delta of the last emitted row.  Emitted
    rows are immutable; only this state object is written to, by one
    producer at a time.
    """

    def __init__(self, rows: Iterable[FisherRow] = ()):
        self.rows: list[FisherRow] = list(rows)
        for pos, row in enumerate(self.rows, start=1):
            if row.index != pos:
                raise ValueError(f"rows must be consecutive from 1, got index {row.index} at position {pos}")
        # in-degrees by vertex, kept separately so pointer reads stay O(1)
        self._in_degrees = array("q", (r.in_degree for r in self.rows))

    @property
    def delta_pointer(self) -> int:
        return self.rows[-1].delta if self.rows else 0

    def __len__(self) -> int:
        return len(self.rows)


def next_row(state: TableState) -> FisherRow:
    """Emit the next row.  The state must already hold the three seed rows."""
    if len(state.rows) < 3:
        raise RuntimeError("row engine not seeded: rows 1..3 come from seed_rows()")
    prev = state.rows[-1]
    i = prev.index + 1
    in_degree = (i - 1) - prev.delta
    edges = prev.edges + in_degree
    candidate = prev.delta + 1
    # candidate <= i - 1, so its in-degree has already been emitted
    delta = prev.delta
    if 2 * candidate - state._in_degrees[candidate - 1] <= i:
        delta = candidate
    row = FisherRow(i, in_degree, i - in_degree, delta, edges)
    state.rows.append(row)
    state._in_degrees.append(in_degree)
    return row


def fisher_table(n: int) -> list[FisherRow]:
    """Rows 1..n.  For n <= 3 this is a prefix of the seeds."""
    if n < 1:
        raise ValueError("table rows are indexed from 1")
    state = TableState(seed_rows())
    while len(state) < n:
        next_row(state)
    return state.rows[:n]


def edges_recursive(n: int) -> int:
    """Edge count of J_n(1) by the in-degree recursion, without row objects.

    Python integers are unbounded, so the running count stays exact at any
    n; nothing can wrap.
    """
    if n < 1:
        raise ValueError("table rows are indexed from 1")
    if n <= 3:
        return _SEEDS[n - 1].edges
    in_degrees = array("q", (0, 1, 1))
    delta = 2
    edges = 2
    for i in range(4, n + 1):
        d = (i - 1) - delta
        edges += d
        in_degrees.append(d)
        candidate = delta + 1
        if 2 * candidate - in_degrees[candidate - 1] <= i:
            delta = candidate
    return edges


def edge_count_prefix(n: int) -> array:
    """Edge counts of J_1(1)..J_n(1) in one sweep, as a flat int array.

    Entry i - 1 holds the count for J_i(1); row i's count extends row
    i - 1's, so the whole prefix costs the same as the last entry alone.
    """
    if n < 1:
        raise ValueError("table rows are indexed from 1")
    counts = array("q", (r.edges for r in _SEEDS[:n]))
    if n <= 3:
        return counts
    in_degrees = array("q", (0, 1, 1))
    delta = 2
    edges = 2
    for i in range(4, n + 1):
        d = (i - 1) - delta
        edges += d
        counts.append(edges)
        in_degrees.append(d)
        candidate = delta + 1
        if 2 * candidate - in_degrees[candidate - 1] <= i:
            delta = candidate
    return counts


def rows_to_csv(rows: Iterable[FisherRow], header: bool = True) -> str:
    """CSV form of the table, one row per vertex, no padding."""
    lines = [CSV_HEADER] if header else []
    lines.extend(f"{r.index},{r.in_degree},{r.out_degree},{r.delta},{r.edges}" for r in rows)
    return "\n".join(lines)
