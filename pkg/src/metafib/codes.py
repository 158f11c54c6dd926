"""Binary compact codes, the greedy deepest-level optimizer, and its bridges.

A code is the non-increasing tuple of leaf levels of an extended binary
tree; validity means the Kraft sum of 2**(-level) is exactly 1.  M(n, h)
is the most sibling leaf pairs any n-leaf height-h code can park at the
bottom level; the greedy construction attains it, and two slices of the
M table reproduce the shift-0 and shift-1 sequences.
"""

from __future__ import annotations

import threading

ENUM_GUARD = 16
ORACLE_GUARD = 14
PARTITION_GUARD = 64  # largest 2**h the brute-force partition search accepts


def _ceil_lg(n: int) -> int:
    return (n - 1).bit_length()


def validate_code(levels) -> tuple:
    """Check non-increasing positive levels with an exact Kraft sum of 1."""
    levels = tuple(levels)
    if len(levels) < 2:
        raise ValueError("codes need at least 2 leaves")
    if any(l < 1 for l in levels):
        raise ValueError("levels must be positive")
    if any(levels[i] < levels[i + 1] for i in range(len(levels) - 1)):
        raise ValueError("levels must be non-increasing")
    h = levels[0]
    if sum(1 << (h - l) for l in levels) != 1 << h:
        raise ValueError("Kraft sum is not exactly 1")
    return levels


def kraft_is_exact(levels) -> bool:
    try:
        validate_code(levels)
    except ValueError:
        return False
    return True


def validate_counts(tau) -> list:
    tau = list(tau)
    if not tau:
        raise ValueError("counts must be nonempty")
    if tau[0] != 1:
        raise ValueError("counts must start with a single root")
    for i in range(1, len(tau)):
        if not 1 <= tau[i] <= 2 * tau[i - 1]:
            raise ValueError("each count is between 1 and twice the previous")
    return tau


def level_counts(code) -> list:
    """Internal nodes per level, top down: tau_0 = 1, then 2*prev - leaves."""
    levels = validate_code(code)
    h = levels[0]
    leaves = [0] * (h + 1)
    for l in levels:
        leaves[l] += 1
    tau = [1]
    for i in range(1, h):
        tau.append(2 * tau[i - 1] - leaves[i])
    if 2 * tau[h - 1] != leaves[h]:
        raise ValueError("level counts do not close at the bottom")
    return tau


def counts_to_code(tau) -> tuple:
    """Inverse of level_counts: leaves at level i are 2*tau[i-1] - tau[i]."""
    tau = validate_counts(tau)
    h = len(tau)
    levels = []
    for i in range(1, h + 1):
        nxt = tau[i] if i < h else 0
        levels.extend([i] * (2 * tau[i - 1] - nxt))
    return tuple(sorted(levels, reverse=True))


def enumerate_codes(n: int, h: int | None = None) -> list:
    """Every code with n leaves (and height exactly h, if given), sorted.

    Exhaustive search over non-increasing level tuples with exact Kraft
    accounting in integer units; n is capped to keep the search small.
    """
    if n < 2:
        raise ValueError("codes need n >= 2")
    if n > ENUM_GUARD:
        raise ValueError(f"enumeration guard: n <= {ENUM_GUARD}")
    if h is not None and h < 1:
        raise ValueError("height must be >= 1")
    heights = [h] if h is not None else list(range(_ceil_lg(n), n))
    results = []
    for top in heights:
        if top < _ceil_lg(n) or top > n - 1:
            continue
        unit_total = 1 << top

        def grow(count_left, cap, remaining, chosen):
            if count_left == 0:
                if remaining == 0:
                    results.append(tuple(chosen))
                return
            for level in range(cap, 0, -1):
                piece = 1 << (top - level)
                # later pieces are at least this large
                if piece * count_left > remaining:
                    continue
                if remaining > count_left * (1 << (top - 1)):
                    break
                chosen.append(level)
                grow(count_left - 1, level, remaining - piece, chosen)
                chosen.pop()

        # height exactly `top` means the first (largest) level equals it
        grow(n - 1, top, unit_total - 1, [top])
    return sorted(results)


def greedy_tree(n: int, h: int) -> tuple:
    """The greedy code with n leaves and height h.

    Starts from (h, h, h-1, ..., 2, 1) and repeatedly splits the leftmost
    leaf lying above the bottom into a sibling pair one level down.
    """
    if h < 1:
        raise ValueError("height must be >= 1")
    if not h + 1 <= n <= 1 << h:
        raise ValueError(f"greedy_tree needs h+1 <= n <= 2**h, got n={n}, h={h}")
    levels = [h] + list(range(h, 0, -1))
    for _ in range(n - h - 1):
        _expand_leftmost(levels, h)
    return tuple(levels)


def _expand_leftmost(levels: list, h: int) -> None:
    for idx, l in enumerate(levels):
        if l < h:
            levels[idx : idx + 1] = [l + 1, l + 1]
            return
    raise ValueError("complete tree: nothing to expand")


def greedy_step_counts(tau) -> list:
    """One greedy step on level counts: bump the deepest slack level."""
    tau = validate_counts(tau)
    for k in range(len(tau) - 1, 0, -1):
        if tau[k] < 2 * tau[k - 1]:
            tau[k] += 1
            return tau
    raise ValueError("complete tree: every level is saturated")


_unbounded_lock = threading.Lock()
_unbounded_last: tuple = (2, [1, 1])


def _unbounded_special(n: int) -> list | None:
    h = _ceil_lg(n)
    if n == 1 << h:
        return [h] * n
    if n == (1 << (h - 1)) + 1:
        return [h] * (n - 1) + [1]
    return None


def greedy_tree_unbounded(n: int) -> tuple:
    """The greedy code with n leaves at the minimum possible height.

    Complete trees restart the pattern at powers of two; one past a power
    of two, the whole previous tree becomes a left subtree (every leaf one
    level deeper) next to a single level-1 leaf; in between, the leftmost
    non-bottom leaf is split as in greedy_tree.
    """
    global _unbounded_last
    if n < 2:
        raise ValueError("codes need n >= 2")
    special = _unbounded_special(n)
    if special is not None:
        return tuple(special)
    with _unbounded_lock:
        at, levels = _unbounded_last
        if at > n:
            at = (1 << (_ceil_lg(n) - 1)) + 1
            levels = _unbounded_special(at)
        while at < n:
            at += 1
            fresh = _unbounded_special(at)
            if fresh is not None:
                levels = fresh
            else:
                _expand_leftmost(levels, levels[0])
        _unbounded_last = (at, levels)
        return tuple(levels)


def shrink(code) -> tuple:
    """Undo one growth step: the rightmost equal pair becomes one leaf above."""
    levels = validate_code(code)
    if len(levels) < 3:
        raise ValueError("shrink needs n >= 3")
    for j in range(len(levels) - 2, -1, -1):
        if levels[j] == levels[j + 1]:
            return levels[:j] + (levels[j] - 1,) + levels[j + 2 :]
    raise ValueError("no equal pair to shrink")  # impossible for valid codes


class _GreedyRow:
    """Greedy level counts for one height, grown leaf by leaf."""

    def __init__(self, h: int):
        self.h = h
        self.tau = [1] * h
        self.n = h + 1
        self.bottom = [1]  # bottom[i] = tau[h-1] for n = h+1+i

    def bottom_at(self, n: int) -> int:
        while self.n < n:
            tau = self.tau
            for k in range(self.h - 1, 0, -1):
                if tau[k] < 2 * tau[k - 1]:
                    tau[k] += 1
                    break
            self.n += 1
            self.bottom.append(tau[self.h - 1])
        return self.bottom[n - self.h - 1]


_rows: dict = {}
_rows_lock = threading.Lock()


def M(n: int, h: int) -> int:
    """Most sibling leaf pairs at the bottom of an n-leaf height-h code.

    Zero when no such code exists (h too small for n leaves, or n too
    small for height h); otherwise read off the greedy construction,
    which is optimal.
    """
    if n < 2:
        raise ValueError("codes need n >= 2")
    if h < 1:
        raise ValueError("height must be >= 1")
    if n > 1 << h or n < h + 1:
        return 0
    with _rows_lock:
        row = _rows.get(h)
        if row is None:
            row = _rows[h] = _GreedyRow(h)
        return row.bottom_at(n)


def M_oracle(n: int, h: int) -> int:
    """M by brute force over all codes; only for small n."""
    if n > ORACLE_GUARD:
        raise ValueError(f"oracle guard: n <= {ORACLE_GUARD}")
    best = 0
    for code in enumerate_codes(n, h):
        best = max(best, level_counts(code)[h - 1])
    return best


def a_max(n: int) -> int:
    """Best bottom pair count over all heights; attained at the minimum one."""
    if n < 2:
        raise ValueError("a_max needs n >= 2")
    return M(n, _ceil_lg(n))


def b_seq(n: int) -> int:
    """M(n + h, h) for the smallest height h with n + h <= 2**h.

    Independent of taking any larger height, which is a tested property.
    """
    if n < 1:
        raise ValueError("b_seq needs n >= 1")
    h = 1
    while n + h > 1 << h:
        h += 1
    return M(n + h, h)


def max_ones_partition(n: int, h: int) -> int:
    """Pair count the partition view attains: same optimum as M(n, h).

    Writing the Kraft identity over 2**h turns a code into a partition of
    2**h into n powers of two; parts equal to 1 are the bottom leaves and
    arrive in sibling pairs, so the optimum in pairs is M(n, h).
    """
    return M(n, h)


def max_ones_partition_brute(n: int, h: int) -> int:
    """Largest count of 1-parts in a partition of 2**h into n powers of two.

    Exhaustive search, independent of the code machinery; equals twice the
    pair optimum whenever a partition with 1s exists.
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    if h < 1:
        raise ValueError("height must be >= 1")
    total = 1 << h
    if total > PARTITION_GUARD:
        raise ValueError(f"partition guard: 2**h <= {PARTITION_GUARD}")
    best = -1

    def search(remaining, parts_left, largest, ones):
        nonlocal best
        if parts_left == 0:
            if remaining == 0:
                best = max(best, ones)
            return
        if remaining < parts_left or remaining > parts_left * largest:
            return
        part = largest
        while part >= 1:
            if part <= remaining:
                search(remaining - part, parts_left - 1, part,
                       ones + (part == 1))
            part >>= 1

    search(total, n, total, 0)
    return max(best, 0)
