"""OEIS b-file reading/writing and cross-checks against local sequences.

A b-file is plain text: optional '#' comment lines, then data lines
"n value" with a single space, indices strictly increasing.  The role map
below is the one declarative table reconciling each catalogued sequence's
indexing with the 1-based sequences computed here.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sequences


class BFileError(ValueError):
    """Raised for files that do not follow the b-file format."""


def read_bfile(path) -> list:
    """Parse a b-file into (index, value) pairs."""
    records = []
    last = None
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise BFileError(f"{path}:{lineno}: expected 'n value'")
            try:
                n, value = int(fields[0]), int(fields[1])
            except ValueError as exc:
                raise BFileError(f"{path}:{lineno}: non-integer field") from exc
            if last is not None and n <= last:
                raise BFileError(f"{path}:{lineno}: indices must increase")
            last = n
            records.append((n, value))
    return records


def write_bfile(stream, records) -> None:
    """Write (index, value) pairs as data lines with LF endings."""
    for n, value in records:
        stream.write(f"{n} {value}\n")


@dataclass(frozen=True)
class SequenceRole:
    """How a catalogued sequence maps onto a local one.

    catalogued(n) = local(kind, shift, n + index_delta) + value_delta,
    valid for n >= min_index.
    """

    kind: str          # "a", "d", "p", or "ruler"
    shift: int
    index_delta: int
    value_delta: int
    min_index: int


ROLE_MAP = {
    "A046699": SequenceRole("a", 0, -1, 0, 1),
    "A006949": SequenceRole("a", 1, 0, 0, 0),
    "A079559": SequenceRole("d", 0, 1, 0, 0),
    "A101925": SequenceRole("p", 0, 1, 0, 0),
    "A005187": SequenceRole("p", 0, 1, -1, 0),
    "A001511": SequenceRole("ruler", 0, 0, 0, 1),
}


def local_value(role: SequenceRole, n: int) -> int:
    i = n + role.index_delta
    if role.kind == "a":
        base = sequences.a(role.shift, i)
    elif role.kind == "d":
        base = sequences.d(role.shift, i)
    elif role.kind == "p":
        base = sequences.p(role.shift, i)
    elif role.kind == "ruler":
        base = sequences.ruler(i)
    else:
        raise ValueError(f"unknown sequence kind {role.kind!r}")
    return base + role.value_delta


def compare_records(records, role: SequenceRole, limit: int | None = None):
    """Compare b-file records against the local sequence under a role.

    Returns (compared, mismatch) where mismatch is None or a tuple
    (index, file_value, local) for the first differing index.
    """
    compared = 0
    for n, value in records:
        if n < role.min_index:
            continue
        if limit is not None and compared >= limit:
            break
        mine = local_value(role, n)
        if mine != value:
            return compared, (n, value, mine)
        compared += 1
    return compared, None


def check_bfile(path, role: SequenceRole, limit: int | None = None):
    return compare_records(read_bfile(path), role, limit)
