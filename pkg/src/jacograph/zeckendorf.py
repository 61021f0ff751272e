"""Fibonacci machinery behind the closed-ish edge count of J_n(1).

Convention: f_1 = f_2 = 1, f_k = f_{k-1} + f_{k-2}.  Every positive integer
has a unique Zeckendorf form, a sum of non-consecutive Fibonacci numbers
with indices >= 2.  Shifting each index down by one turns the Zeckendorf
form of n into the infinite-graph out-degree of v_n, and summing those
out-degrees gives the edge count through a triangular-number identity.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Zeckendorf",
    "fib",
    "zeckendorf_decompose",
    "zeckendorf_value",
    "format_decomposition",
    "bettina_out_degree",
    "in_degree_bettina",
    "edges_zeckendorf",
]


def _fib_tuple(count: int) -> tuple[int, ...]:
    values = [1, 1]
    while len(values) < count:
        values.append(values[-1] + values[-2])
    return tuple(values)


# _FIB[k - 1] = f_k; 92 entries cover every signed-64-bit input.
# Immutable after initialization, so concurrent readers are safe.
_FIB: tuple[int, ...] = _fib_tuple(92)

# Largest n the vectorized kernel accepts without risking int64 overflow.
_KERNEL_LIMIT = 2**62

_CHUNK = 1 << 16


def fib(k: int) -> int:
    """f_k with f_1 = f_2 = 1, exact at any index."""
    if k < 1:
        raise ValueError("fibonacci index convention starts at 1")
    if k <= len(_FIB):
        return _FIB[k - 1]
    a, b = _FIB[-2], _FIB[-1]
    for _ in range(k - len(_FIB)):
        a, b = b, a + b
    return b


def _fib_values_upto(n: int) -> list[int]:
    """All f_k <= n as a list indexed by k - 1."""
    if n <= _FIB[-1]:
        return list(_FIB[: bisect_right(_FIB, n)])
    values = list(_FIB)
    while values[-1] <= n:
        values.append(values[-1] + values[-2])
    values.pop()
    return values


@dataclass(frozen=True)
class Zeckendorf:
    """Strictly decreasing, pairwise non-consecutive Fibonacci indices, each >= 2."""

    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if not self.indices:
            raise ValueError("a Zeckendorf form represents a positive integer; it cannot be empty")
        prev = None
        for k in self.indices:
            if k < 2:
                raise ValueError(f"Zeckendorf indices start at 2, got {k}")
            if prev is not None and prev - k < 2:
                raise ValueError(f"indices must strictly decrease with gaps >= 2, got {prev} then {k}")
            prev = k


def _decompose_indices(n: int) -> list[int]:
    """Greedy largest-first decomposition; returns Fibonacci indices, descending."""
    fibs = _FIB if n <= _FIB[-1] else _fib_values_upto(n)
    k = bisect_right(fibs, n)  # fibs[k - 1] = f_k is the largest term <= n
    indices = []
    rem = n
    while rem:
        while fibs[k - 1] > rem:
            k -= 1
        indices.append(k)
        rem -= fibs[k - 1]
        k -= 1
    return indices


def zeckendorf_decompose(n: int) -> Zeckendorf:
    if n < 1:
        raise ValueError("only positive integers have a Zeckendorf form")
    return Zeckendorf(tuple(_decompose_indices(n)))


def zeckendorf_value(z: Zeckendorf) -> int:
    """The integer a Zeckendorf form represents; inverse of decomposition."""
    return sum(fib(k) for k in z.indices)


def format_decomposition(z: Zeckendorf) -> str:
    """Canonical display, e.g. "12 = f_6 + f_4 + f_2"."""
    terms = " + ".join(f"f_{k}" for k in z.indices)
    return f"{zeckendorf_value(z)} = {terms}"


def bettina_out_degree(n: int) -> int:
    """Infinite-graph out-degree of v_n: shift every Zeckendorf index down by one."""
    if n < 1:
        raise ValueError("vertices are indexed from 1")
    if n > _FIB[-1]:
        return sum(fib(k - 1) for k in _decompose_indices(n))
    fibs = _FIB
    total = 0
    k = bisect_right(fibs, n)
    rem = n
    while rem:
        while fibs[k - 1] > rem:
            k -= 1
        total += fibs[k - 2]  # f_{k-1}; k >= 2 always, and f_1 = 1 covers k = 2
        rem -= fibs[k - 1]
        k -= 1
    return total


def in_degree_bettina(n: int) -> int:
    """In-degree of v_n as the complement of the shifted-index out-degree."""
    return n - bettina_out_degree(n)


def _out_degree_sum(lo: int, hi: int) -> int:
    """Sum of bettina_out_degree(i) for lo <= i <= hi.

    Vectorized greedy decomposition over fixed-size blocks: scanning the
    Fibonacci values downward and subtracting wherever they fit reproduces
    the greedy choice for every element at once.  Block size is constant,
    so scratch space does not grow with the range.
    """
    if hi < lo:
        return 0
    if hi > _KERNEL_LIMIT:
        raise OverflowError(f"out-degree sums are supported up to {_KERNEL_LIMIT}, got {hi}")
    fibs = _fib_values_upto(hi)
    total = 0
    for start in range(lo, hi + 1, _CHUNK):
        stop = min(hi, start + _CHUNK - 1)
        rem = np.arange(start, stop + 1, dtype=np.int64)
        for k in range(len(fibs), 1, -1):  # k is a Fibonacci index, value fibs[k - 1]
            f = fibs[k - 1]
            if f > stop:
                continue
            mask = rem >= f
            count = int(np.count_nonzero(mask))
            if count:
                total += count * fibs[k - 2]
                rem[mask] -= f
        if rem.any():
            raise RuntimeError("greedy decomposition failed to exhaust a block")
    return total


def edges_zeckendorf(n: int) -> int:
    """Edge count of J_n(1) from shifted Zeckendorf out-degrees.

    ε = n(n+1)/2 - 1 - Σ_{i=2}^{n} d+(v_i); the lone out-degree of v_1 is
    folded into the constant.  For n = 1 the sum is empty and the result
    is 0.
    """
    if n < 1:
        raise ValueError("vertices are indexed from 1")
    return n * (n + 1) // 2 - 1 - _out_degree_sum(2, n)
