"""Semistandard tableaux as gl_infinity crystal elements.

Kashiwara raising/lowering is implemented by the signature rule on the
column reading word (each column bottom to top, columns left to right).
String lengths epsilon_i / phi_i are computed by repeated application of
the operators, which is the defining description and cheap at this scale.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import EPSILON, OMEGA, Partition, WeightVector


class Tableau:
    """Semistandard filling of a partition shape.

    Rows weakly increase left to right, columns strictly increase top to
    bottom, entries are arbitrary positive integers.
    """

    __slots__ = ("rows", "shape")

    def __init__(self, rows=()):
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        shape = Partition(len(r) for r in rows)
        for r, row in enumerate(rows):
            for c, entry in enumerate(row):
                if entry < 1:
                    raise ValueError(f"entries must be positive: {entry}")
                if c > 0 and row[c - 1] > entry:
                    raise ValueError(f"row {r} not weakly increasing: {rows}")
                if r > 0 and rows[r - 1][c] >= entry:
                    raise ValueError(f"column {c} not strictly increasing: {rows}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", shape)

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    def max_entry(self) -> int:
        return max((row[-1] for row in self.rows if row), default=0)

    def to_json(self) -> list:
        return [list(row) for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(("Tableau", self.rows))

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"


EMPTY_TABLEAU = Tableau(())


def weight(t: Tableau) -> WeightVector:
    """Content vector: epsilon coordinate i counts the entries equal to i."""
    counts: dict[int, int] = {}
    for row in t.rows:
        for e in row:
            counts[e] = counts.get(e, 0) + 1
    return WeightVector(counts, EPSILON)


def enumerate_sst(shape: Partition, max_entry: int) -> tuple[Tableau, ...]:
    """All semistandard tableaux of the shape with entries <= max_entry.

    Deterministic order: lexicographic on the row reading word.
    """
    return _enumerate_sst(shape.parts, max_entry)


@lru_cache(maxsize=None)
def _enumerate_sst(parts: tuple[int, ...], max_entry: int) -> tuple[Tableau, ...]:
    if not parts:
        return (EMPTY_TABLEAU,)
    cells = [(r, c) for r, width in enumerate(parts) for c in range(width)]
    grid = [[0] * width for width in parts]
    out = []

    def fill(pos: int):
        if pos == len(cells):
            out.append(Tableau([tuple(row) for row in grid]))
            return
        r, c = cells[pos]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for val in range(lo, max_entry + 1):
            grid[r][c] = val
            fill(pos + 1)
        grid[r][c] = 0

    fill(0)
    return tuple(out)


def _column_reading_cells(t: Tableau) -> list[tuple[int, int]]:
    # bottom to top within each column, columns left to right
    if not t.rows:
        return []
    cells = []
    for c in range(len(t.rows[0])):
        for r in range(len(t.rows) - 1, -1, -1):
            if c < len(t.rows[r]):
                cells.append((r, c))
    return cells


def _signature(t: Tableau, i: int):
    """Uncancelled minus/plus positions for letter i in the reading word.

    Letters i are '+', letters i+1 are '-'; a '+' cancels the nearest
    uncancelled '-' to its left.  Returns (minus_cells, plus_cells) in
    reading order.
    """
    minus: list[tuple[int, int]] = []
    plus: list[tuple[int, int]] = []
    for r, c in _column_reading_cells(t):
        e = t.rows[r][c]
        if e == i + 1:
            minus.append((r, c))
        elif e == i:
            if minus:
                minus.pop()
            else:
                plus.append((r, c))
    return minus, plus


def _replace(t: Tableau, cell: tuple[int, int], value: int) -> Tableau:
    r0, c0 = cell
    rows = [list(row) for row in t.rows]
    rows[r0][c0] = value
    return Tableau(rows)


def raise_(t: Tableau, i: int) -> Tableau | None:
    """Kashiwara raising e~_i; None iff the i-string is exhausted upward."""
    minus, _ = _signature(t, i)
    if not minus:
        return None
    return _replace(t, minus[0], i)


def lower(t: Tableau, i: int) -> Tableau | None:
    """Kashiwara lowering f~_i; None iff the i-string is exhausted downward."""
    _, plus = _signature(t, i)
    if not plus:
        return None
    return _replace(t, plus[-1], i + 1)


def epsilon_string(t: Tableau, i: int) -> int:
    """Number of times e~_i applies before failing."""
    count = 0
    cur = raise_(t, i)
    while cur is not None:
        count += 1
        cur = raise_(cur, i)
    return count


def phi_string(t: Tableau, i: int) -> int:
    """Number of times f~_i applies before failing."""
    count = 0
    cur = lower(t, i)
    while cur is not None:
        count += 1
        cur = lower(cur, i)
    return count


def epsilon_vector(t: Tableau) -> WeightVector:
    """The string-length vector sum_i epsilon_i(t) omega_i, in omega coords.

    epsilon_i vanishes unless some entry equals i+1, so the support is
    bounded by the largest entry.
    """
    coords = {}
    for i in range(1, t.max_entry()):
        e = epsilon_string(t, i)
        if e:
            coords[i] = e
    return WeightVector(coords, OMEGA)
