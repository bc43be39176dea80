"""Schensted row insertion and the bijection between nonnegative integer
matrices and pairs of semistandard Young tableaux of equal shape.

The forward direction always consumes the sorted biword of the matrix, so the
algorithm is identical for permutation matrices and general matrices.  The
inverse direction un-records cells in reverse order of recording: among cells
holding the maximal recording entry, the rightmost (then lowest) is removed
first, then its insertion is reverse-bumped up through the rows.
"""

from bisect import bisect_left, bisect_right

from .matrices import Biword, Matrix, from_biword, to_biword
from .partitions import Partition
from .tableaux import Tableau, first_ssyt_violation, shape


def _insert_into_rows(rows: list[list[int]], x: int) -> int:
    """Row-insert x into mutable rows, bumping down; return the 0-based index
    of the row that received a new cell (always at the row's end)."""
    r = 0
    while r < len(rows):
        row = rows[r]
        pos = bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            return r
        x, row[pos] = row[pos], x
        r += 1
    rows.append([x])
    return r


def row_insert(t: Tableau, x: int) -> tuple[Tableau, tuple[int, int]]:
    """Insert x into a semistandard tableau by the bump rule: x replaces the
    leftmost entry strictly greater than x, which is inserted into the next
    row, until some row takes an appended entry.

    Returns the new tableau and the 1-based (row, column) of the created cell.
    """
    rows = [list(row) for row in t]
    r = _insert_into_rows(rows, x)
    return tuple(tuple(row) for row in rows), (r + 1, len(rows[r]))


def rsk_biword(b: Biword) -> tuple[Tableau, Tableau]:
    """Run the insertion algorithm over an already-sorted biword: bottoms are
    inserted, tops are recorded at each created cell."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for top, bottom in b:
        r = _insert_into_rows(p_rows, bottom)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(top)
    return (
        tuple(tuple(row) for row in p_rows),
        tuple(tuple(row) for row in q_rows),
    )


def rsk_forward(m: Matrix) -> tuple[Tableau, Tableau]:
    """Map a matrix to its tableau pair (P, Q).

    P holds the biword bottoms (column indices), Q the tops (row indices);
    both are semistandard of equal shape, whose weight is the matrix weight.
    The zero matrix maps to a pair of empty tableaux.
    """
    return rsk_biword(to_biword(m))


def _check_tableau_pair(p: Tableau, q: Tableau, n: int) -> None:
    for name, t in (("P", p), ("Q", q)):
        violation = first_ssyt_violation(t)
        if violation is not None:
            row, col, reason = violation
            raise ValueError(f"{name} is not semistandard at ({row}, {col}): {reason}")
        if any(x > n for tab_row in t for x in tab_row):
            raise ValueError(f"{name} has an entry larger than n={n}")
    if shape(p) != shape(q):
        raise ValueError(f"shape mismatch: {shape(p)} vs {shape(q)}")


def rsk_inverse(p: Tableau, q: Tableau, n: int) -> Matrix:
    """Invert the correspondence: recover the n x n matrix mapping to (p, q).

    Repeatedly removes the cell holding the largest recording entry (equal
    entries last-recorded first, i.e. rightmost column), reverse-bumps the
    insertion entry up through p, and prepends the recovered biword pair.
    """
    _check_tableau_pair(p, q, n)
    p_rows = [list(row) for row in p]
    q_rows = [list(row) for row in q]
    pairs: list[tuple[int, int]] = []
    while p_rows:
        # Equal maximal entries sit in distinct columns at their row ends;
        # the longest such row holds the rightmost, i.e. last-recorded, cell.
        r = max(
            range(len(q_rows)),
            key=lambda i: (q_rows[i][-1], len(q_rows[i]), i),
        )
        top = q_rows[r].pop()
        y = p_rows[r].pop()
        for i in range(r - 1, -1, -1):
            row = p_rows[i]
            pos = bisect_left(row, y) - 1
            if pos < 0:
                raise ValueError("not a valid tableau pair: reverse bump fell off a row")
            y, row[pos] = row[pos], y
        if not p_rows[r]:
            del p_rows[r]
            del q_rows[r]
        pairs.append((top, y))
    pairs.reverse()
    return from_biword(tuple(pairs), n)


def shape_of_matrix(m: Matrix) -> Partition:
    """Common shape of the tableau pair of m, computed by insertion alone.

    Returns the empty partition for the zero matrix.
    """
    rows: list[list[int]] = []
    for row in m:
        for j, e in enumerate(row):
            for _ in range(e):
                _insert_into_rows(rows, j + 1)
    return tuple(len(row) for row in rows)
