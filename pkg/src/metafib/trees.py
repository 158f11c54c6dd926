"""Structural model of the delayed binary forest; oracle for the sequences.

Labels are assigned in preorder: the one-node tree, then alternately a run
of ``s`` path labels and the next complete subtree (sizes 1, 3, 7, ...).
Everything here is derived from label arithmetic alone, with no reference
to the recurrence module, so it can serve as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

SUBTREE_NODE = "subtree-node"
SUPER_NODE = "super-node"


@dataclass(frozen=True)
class NodeLocus:
    """Where one preorder label lives.

    ``subtree`` is the block index h (for a path node: the subtree it
    precedes).  ``offset`` is the 1-based preorder position inside the
    subtree; it and the depth/parent fields are None for path nodes.
    """

    index: int
    kind: str
    subtree: int
    offset: int | None
    depth_in_subtree: int | None
    is_leaf: bool
    parent_offset: int | None


def _descend(height: int, offset: int):
    """(depth, is_leaf, parent_offset) for a preorder offset in a complete tree.

    The tree has 2**height - 1 nodes; offset 1 is the root, followed by the
    left then the right subtree, each of size 2**(height-1) - 1.
    """
    depth = 0
    g = height
    root = 1  # absolute offset of current subtree's root
    parent = None
    pos = offset
    while pos != 1:
        half = (1 << (g - 1)) - 1
        parent = root
        pos -= 1
        if pos <= half:
            root += 1
        else:
            pos -= half
            root += 1 + half
        g -= 1
        depth += 1
    return depth, g == 1, parent


def locate(s: int, n: int) -> NodeLocus:
    """Classify label n inside the shift-s forest."""
    if s < 0 or n < 1:
        raise ValueError("locate needs s >= 0, n >= 1")
    if n == 1:
        return NodeLocus(n, SUBTREE_NODE, 0, 1, 0, True, None)
    h = 1
    while (1 << h) + (s - 1) * h + (1 << h) - 1 < n:
        h += 1
    base = (1 << h) + (s - 1) * h
    if n <= base:
        return NodeLocus(n, SUPER_NODE, h, None, None, False, None)
    offset = n - base
    depth, leaf, parent = _descend(h, offset)
    return NodeLocus(n, SUBTREE_NODE, h, offset, depth, leaf, parent)


def is_leaf_oracle(s: int, n: int) -> int:
    return 1 if locate(s, n).is_leaf else 0


def leaves_in_prefix(s: int, n: int) -> int:
    """Leaves among labels 1..n, counted one label at a time."""
    if n < 1:
        raise ValueError("leaves_in_prefix needs n >= 1")
    return sum(is_leaf_oracle(s, i) for i in range(1, n + 1))


def leaf_count_scan(s: int, n_max: int) -> list:
    """Running leaf counts for prefixes 1..n_max (index 0 unused, set to 0)."""
    counts = [0] * (n_max + 1)
    running = 0
    for i in range(1, n_max + 1):
        running += is_leaf_oracle(s, i)
        counts[i] = running
    return counts


def _draw_subtree(lines, prefix, child_prefix, label, height, n_cap):
    if label > n_cap:
        return
    tag = " leaf" if height == 1 else ""
    lines.append(f"{prefix}{label}{tag}")
    if height > 1:
        left = label + 1
        right = label + (1 << (height - 1))
        _draw_subtree(lines, child_prefix + "+- ", child_prefix + "|  ",
                      left, height - 1, n_cap)
        _draw_subtree(lines, child_prefix + "+- ", child_prefix + "   ",
                      right, height - 1, n_cap)


def render(s: int, n: int, max_width: int = 100, cap: int = 127) -> str:
    """ASCII sketch of the first n labels: path nodes marked, leaves tagged.

    Cosmetic only; nothing should depend on the exact glyphs.
    """
    if max_width < 1:
        raise ValueError("max_width must be >= 1")
    if n > cap:
        raise ValueError(f"render is capped at {cap} nodes")
    if n < 1:
        raise ValueError("render needs n >= 1")
    lines = [f"first {n} labels of the shift-{s} forest"]
    lines.append("1 leaf")
    label = 2
    h = 1
    while label <= n:
        for _ in range(s):
            if label > n:
                break
            lines.append(f"{label} (path)")
            label += 1
        if label > n:
            break
        _draw_subtree(lines, "", "", label, h, n)
        label += (1 << h) - 1
        h += 1
    return "\n".join(line[:max_width] for line in lines)
