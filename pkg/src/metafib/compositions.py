"""Compositions with position-dependent parts, counted and enumerated.

For shift s >= 1 a composition of n is a sequence x_0, x_1, ..., x_k with
x_0 in {1, ..., s} and x_i in {s, 2**i + s - 1} for i >= 1, summing to n.
The number of them is a(s, n); the count here is computed by a layered
dynamic program that never touches the recurrence.
"""

from __future__ import annotations

ENUM_GUARD = 64


def part_choices(s: int, i: int) -> tuple:
    """Allowed parts at position i."""
    if s < 1:
        raise ValueError("composition rules need s >= 1")
    if i < 0:
        raise ValueError("position must be >= 0")
    if i == 0:
        return tuple(range(1, s + 1))
    return (s, (1 << i) + s - 1)


def counts_up_to(s: int, limit: int) -> list:
    """Composition counts for every target 0..limit (index 0 is 0).

    layer[r] holds the number of ways to reach sum r using positions
    0..i exactly; each finished layer is folded into the totals.
    """
    if s < 1:
        raise ValueError("composition rules need s >= 1")
    if limit < 0:
        raise ValueError("limit must be >= 0")
    total = [0] * (limit + 1)
    layer = [0] * (limit + 1)
    for x in range(1, min(s, limit) + 1):
        layer[x] = 1
    i = 1
    while any(layer):
        for r in range(limit + 1):
            if layer[r]:
                total[r] += layer[r]
        big = (1 << i) + s - 1
        nxt = [0] * (limit + 1)
        for r in range(limit + 1 - s):
            c = layer[r]
            if c:
                nxt[r + s] += c
                if r + big <= limit:
                    nxt[r + big] += c
        layer = nxt
        i += 1
    return total


def count_compositions(s: int, n: int) -> int:
    if n < 1:
        raise ValueError("count_compositions needs n >= 1")
    return counts_up_to(s, n)[n]


def enumerate_compositions(s: int, n: int) -> list:
    """All compositions of n, as part lists in lexicographic order."""
    if s < 1:
        raise ValueError("composition rules need s >= 1")
    if n < 1:
        raise ValueError("enumerate_compositions needs n >= 1")
    if n > ENUM_GUARD:
        raise ValueError(f"enumeration guard: n <= {ENUM_GUARD}")
    out = []
    prefix = []

    def extend(i, remaining):
        if remaining == 0:
            out.append(list(prefix))
            return
        for c in part_choices(s, i):
            if c <= remaining:
                prefix.append(c)
                extend(i + 1, remaining - c)
                prefix.pop()

    for first in part_choices(s, 0):
        if first <= n:
            prefix.append(first)
            extend(1, n - first)
            prefix.pop()
    return out
