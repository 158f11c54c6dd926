import pytest

from metafib import sequences as sq
from metafib.codes import (
    M,
    M_oracle,
    a_max,
    b_seq,
    counts_to_code,
    enumerate_codes,
    greedy_step_counts,
    greedy_tree,
    greedy_tree_unbounded,
    kraft_is_exact,
    level_counts,
    max_ones_partition,
    max_ones_partition_brute,
    shrink,
    validate_code,
)


def test_validate_code():
    assert validate_code([3, 3, 3, 3, 1]) == (3, 3, 3, 3, 1)
    with pytest.raises(ValueError):
        validate_code([3, 3, 1])  # Kraft sum below 1
    with pytest.raises(ValueError):
        validate_code([2, 2, 2, 2, 2])  # above 1
    with pytest.raises(ValueError):
        validate_code([1, 2])  # not non-increasing
    with pytest.raises(ValueError):
        validate_code([1])


def test_level_counts_examples():
    assert level_counts((3, 3, 3, 3, 1)) == [1, 1, 2]
    assert level_counts((3, 3, 2, 2, 2)) == [1, 2, 1]
    assert level_counts((4, 4, 3, 2, 1)) == [1, 1, 1, 1]
    assert level_counts((1, 1)) == [1]


def test_counts_to_code_examples():
    assert counts_to_code([1, 2, 1]) == (3, 3, 2, 2, 2)
    assert counts_to_code([1]) == (1, 1)
    assert counts_to_code([1, 1, 2]) == (3, 3, 3, 3, 1)


def test_counts_roundtrip_small():
    def grow(tau, h):
        if sum(tau) + 1 > 14:
            return
        if len(tau) == h:
            assert level_counts(counts_to_code(tau)) == tau
            return
        for nxt in range(1, 2 * tau[-1] + 1):
            grow(tau + [nxt], h)

    for h in range(1, 9):
        grow([1], h)


def test_enumerate_codes_for_five_leaves():
    assert enumerate_codes(5) == [
        (3, 3, 2, 2, 2),
        (3, 3, 3, 3, 1),
        (4, 4, 3, 2, 1),
    ]
    assert enumerate_codes(2) == [(1, 1)]
    assert enumerate_codes(5, 3) == [(3, 3, 2, 2, 2), (3, 3, 3, 3, 1)]
    assert enumerate_codes(5, 2) == []


def test_enumerate_codes_guard():
    with pytest.raises(ValueError):
        enumerate_codes(17)
    with pytest.raises(ValueError):
        enumerate_codes(1)


def test_every_enumerated_code_is_valid():
    for n in range(2, 11):
        for code in enumerate_codes(n):
            assert kraft_is_exact(code)


def test_greedy_tree_examples():
    assert greedy_tree(4, 3) == (3, 3, 2, 1)
    assert greedy_tree(5, 3) == (3, 3, 3, 3, 1)
    assert greedy_tree(8, 3) == (3, 3, 3, 3, 3, 3, 3, 3)
    with pytest.raises(ValueError):
        greedy_tree(9, 3)
    with pytest.raises(ValueError):
        greedy_tree(3, 3)


def test_greedy_tree_appears_in_enumeration():
    for n in range(2, 13):
        for h in range(1, n):
            if h + 1 <= n <= 2**h:
                assert greedy_tree(n, h) in enumerate_codes(n, h)


def test_greedy_step_counts_examples():
    assert greedy_step_counts([1, 1, 2]) == [1, 2, 2]
    assert greedy_step_counts([1, 1]) == [1, 2]
    with pytest.raises(ValueError):
        greedy_step_counts([1, 2, 4])


def test_greedy_step_matches_code_step():
    for n in range(4, 14):
        for h in range(2, n):
            if h + 1 <= n < 2**h:
                stepped = greedy_step_counts(level_counts(greedy_tree(n, h)))
                assert stepped == level_counts(greedy_tree(n + 1, h))


def test_greedy_unbounded_examples():
    assert greedy_tree_unbounded(4) == (2, 2, 2, 2)
    assert greedy_tree_unbounded(5) == (3, 3, 3, 3, 1)
    assert greedy_tree_unbounded(6) == (3, 3, 3, 3, 2, 2)
    assert greedy_tree_unbounded(2) == (1, 1)


def test_greedy_unbounded_equals_min_height_greedy():
    for n in range(2, 300):
        h = (n - 1).bit_length()
        assert greedy_tree_unbounded(n) == greedy_tree(n, h)


def test_greedy_unbounded_random_access():
    assert greedy_tree_unbounded(100) == greedy_tree(100, 7)
    assert greedy_tree_unbounded(37) == greedy_tree(37, 6)  # going backwards


def test_shrink_examples():
    assert shrink((3, 3, 3, 3, 1)) == (3, 3, 2, 1)
    assert shrink((2, 2, 2, 2)) == (2, 2, 1)
    with pytest.raises(ValueError):
        shrink((1, 1))


def test_shrink_inverts_growth():
    for n in range(3, 1025):
        grown = greedy_tree_unbounded(n)
        small = shrink(grown)
        if sq.is_power_of_two(n - 1) and n - 1 > 2:
            # the height drops across these boundaries; regrow instead
            relist = list(small)
            relist_h = relist[0]
            idx = next(i for i, l in enumerate(relist) if l < relist_h)
            relist[idx : idx + 1] = [relist[idx] + 1] * 2
            assert tuple(relist) == grown
        else:
            assert small == greedy_tree_unbounded(n - 1)


def test_M_examples():
    assert M(5, 3) == 2
    assert M(8, 3) == 4
    assert M(5, 2) == 0
    assert M(2, 1) == 1
    assert M(4, 8) == 0  # n < h + 1


def test_M_oracle_examples():
    assert M_oracle(5, 3) == 2
    assert M_oracle(5, 4) == 1
    assert M_oracle(2, 1) == 1
    with pytest.raises(ValueError):
        M_oracle(15, 3)


def test_M_matches_oracle_everywhere_small():
    for n in range(2, 15):
        for h in range(1, n):
            assert M(n, h) == M_oracle(n, h), (n, h)


def test_dominance_of_greedy_counts():
    for n in range(2, 13):
        for h in range((n - 1).bit_length(), n):
            greedy = level_counts(greedy_tree(n, h))
            for other in enumerate_codes(n, h):
                tau = level_counts(other)
                for j in range(h):
                    assert sum(greedy[j:]) >= sum(tau[j:])


def test_a_max_examples_and_bridge():
    assert a_max(5) == 2
    assert a_max(16) == 8
    assert a_max(2) == 1
    for n in range(2, 600):
        assert a_max(n) == sq.a(1, n - 1)


def test_b_seq_examples_and_bridge():
    assert b_seq(5) == 4
    assert b_seq(1) == 1
    assert b_seq(12) == 8
    for n in range(1, 600):
        assert b_seq(n) == sq.a(0, n)


def test_height_stability():
    for n in range(1, 80):
        h = 1
        while n + h > 2**h:
            h += 1
        base = M(n + h, h)
        for k in range(h, h + 5):
            assert M(n + k, k) == base


def test_partition_view():
    assert max_ones_partition(5, 3) == 2
    assert max_ones_partition(8, 3) == 4
    assert max_ones_partition(2, 1) == 1
    # the literal partition maximum counts leaves, exactly twice the pairs
    assert max_ones_partition_brute(5, 3) == 4
    assert max_ones_partition_brute(2, 1) == 2
    for h in range(1, 7):
        for n in range(2, min(2**h + 2, 15)):
            assert max_ones_partition_brute(n, h) == 2 * max_ones_partition(n, h)
    with pytest.raises(ValueError):
        max_ones_partition_brute(4, 7)
