import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacograph import (
    Zeckendorf,
    bettina_out_degree,
    build_jaco,
    edges_zeckendorf,
    fib,
    format_decomposition,
    in_degree_bettina,
    zeckendorf_decompose,
    zeckendorf_value,
)


class TestFib:
    @pytest.mark.parametrize("k,value", [(1, 1), (2, 1), (7, 13), (9, 34), (10, 55)])
    def test_known_values(self, k, value):
        assert fib(k) == value

    def test_rejects_zero(self):
        with pytest.raises(ValueError, match="starts at 1"):
            fib(0)

    def test_beyond_precomputed_table(self):
        # exact big integers, recurrence must keep holding
        assert fib(100) == fib(99) + fib(98)
        assert fib(100) == 354224848179261915075


class TestDecompose:
    @pytest.mark.parametrize(
        "n,indices",
        [(12, (6, 4, 2)), (7, (5, 3)), (1, (2,)), (2, (3,)), (8, (6,)), (100, (11, 6, 4))],
    )
    def test_known_decompositions(self, n, indices):
        assert zeckendorf_decompose(n).indices == indices

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            zeckendorf_decompose(0)

    def test_validation(self):
        with pytest.raises(ValueError, match="cannot be empty"):
            Zeckendorf(())
        with pytest.raises(ValueError, match="start at 2"):
            Zeckendorf((3, 1))
        with pytest.raises(ValueError, match="gaps >= 2"):
            Zeckendorf((5, 4))
        with pytest.raises(ValueError, match="gaps >= 2"):
            Zeckendorf((4, 6))

    def test_huge_value(self):
        n = 10**30
        z = zeckendorf_decompose(n)
        assert zeckendorf_value(z) == n


class TestValueAndFormat:
    def test_round_trip_examples(self):
        assert zeckendorf_value(Zeckendorf((6, 4, 2))) == 12
        assert zeckendorf_value(Zeckendorf((2,))) == 1
        assert zeckendorf_value(Zeckendorf((9,))) == 34

    @pytest.mark.parametrize(
        "n,text",
        [(12, "12 = f_6 + f_4 + f_2"), (15, "15 = f_7 + f_3"), (8, "8 = f_6"), (1, "1 = f_2")],
    )
    def test_format(self, n, text):
        assert format_decomposition(zeckendorf_decompose(n)) == text


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=10**6))
def test_round_trip_random(n):
    z = zeckendorf_decompose(n)
    assert zeckendorf_value(z) == n
    assert all(a - b >= 2 for a, b in zip(z.indices, z.indices[1:]))
    assert all(k >= 2 for k in z.indices)


class TestBettina:
    @pytest.mark.parametrize("n,out", [(9, 6), (15, 9), (34, 21), (1, 1), (2, 1), (3, 2)])
    def test_known_out_degrees(self, n, out):
        assert bettina_out_degree(n) == out

    def test_shift_rule_on_fibonacci_numbers(self):
        k = 2
        while fib(k) <= 10**6:
            assert bettina_out_degree(fib(k)) == fib(k - 1)
            k += 1

    def test_matches_oracle(self, oracle_graph):
        for n in range(1, 2001):
            assert bettina_out_degree(n) == n - oracle_graph.in_deg[n - 1]

    def test_in_degree_examples(self, oracle_graph):
        assert in_degree_bettina(18) == 7
        assert in_degree_bettina(1) == 0
        assert in_degree_bettina(500) == 191 == oracle_graph.in_deg[499]


class TestEdges:
    def test_example_fifteen(self):
        assert sum(bettina_out_degree(i) for i in range(2, 16)) == 75
        assert edges_zeckendorf(15) == 15 * 16 // 2 - 1 - 75 == 44

    @pytest.mark.parametrize("n,expected", [(1, 0), (2, 1), (35, 236)])
    def test_known_counts(self, n, expected):
        assert edges_zeckendorf(n) == expected

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            edges_zeckendorf(0)

    def test_matches_oracle_sweep(self, oracle_edge_counts):
        for n in range(1, 501):
            assert edges_zeckendorf(n) == oracle_edge_counts[n - 1]

    def test_kernel_agrees_with_scalar_sum(self):
        # the block kernel must reproduce the one-at-a-time rule exactly,
        # including across its internal block boundary at 2 + 65536
        for n in (2, 3, 37, 400, 65537, 65538, 70000):
            assert edges_zeckendorf(n) == n * (n + 1) // 2 - 1 - sum(
                bettina_out_degree(i) for i in range(2, n + 1)
            )

    def test_overflow_is_detected(self):
        with pytest.raises(OverflowError):
            edges_zeckendorf(2**63)
