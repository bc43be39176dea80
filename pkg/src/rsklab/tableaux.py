"""Young tableaux as ragged tuples of rows, with semistandard validation,
reading words, transposition and exhaustive enumeration."""

from collections.abc import Iterator

from .partitions import Partition, check_partition

Tableau = tuple[tuple[int, ...], ...]


def shape(t: Tableau) -> Partition:
    """Row lengths of a valid tableau, as a partition."""
    return tuple(len(row) for row in t)


def first_ssyt_violation(t: Tableau) -> tuple[int, int, str] | None:
    """Diagnostic validator: the first cell (1-based row, col) breaking the
    semistandard conditions, with a reason, or None when the tableau is valid.

    Conditions checked in order: positive integer entries, nonempty rows with
    weakly decreasing lengths, weakly increasing rows, strictly increasing
    columns.
    """
    for i, row in enumerate(t):
        if len(row) == 0:
            return (i + 1, 1, "empty row")
        if i > 0 and len(row) > len(t[i - 1]):
            return (i + 1, len(t[i - 1]) + 1, "row longer than the one above")
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                return (i + 1, j + 1, f"entry {x!r} is not a positive integer")
            if j > 0 and row[j - 1] > x:
                return (i + 1, j + 1, "row not weakly increasing")
            if i > 0 and t[i - 1][j] >= x:
                return (i + 1, j + 1, "column not strictly increasing")
    return None


def validate_ssyt(t: Tableau) -> bool:
    """True iff the rows form a semistandard Young tableau."""
    return first_ssyt_violation(t) is None


def is_syt(t: Tableau) -> bool:
    """True iff t is standard: semistandard with entries exactly 1..N, each once."""
    if not validate_ssyt(t):
        return False
    entries = sorted(x for row in t for x in row)
    return entries == list(range(1, len(entries) + 1))


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Concatenate the rows from the bottom row up to the top row."""
    return tuple(x for row in reversed(t) for x in row)


def transpose_tableau(t: Tableau) -> Tableau:
    """Cell-by-cell transpose: (i, j) -> (j, i).

    The result of transposing a general SSYT is a raw filling that may break
    the semistandard conditions; it is guaranteed valid for standard tableaux.
    """
    if not t:
        return ()
    return tuple(
        tuple(row[j] for row in t if len(row) > j) for j in range(len(t[0]))
    )


def enumerate_ssyt(shp: Partition, max_entry: int) -> Iterator[Tableau]:
    """Yield every SSYT of the given shape with entries in 1..max_entry, each
    once, in deterministic order.

    Cells are filled in row-major order with backtracking on the two ordering
    constraints, trying entries in ascending order; the stream is empty when
    max_entry < len(shape) since columns force distinct entries.
    """
    shp = check_partition(shp)
    if not shp:
        yield ()
        return
    cells = [(i, j) for i, length in enumerate(shp) for j in range(length)]
    filling = [[0] * length for length in shp]

    def fill(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield tuple(tuple(row) for row in filling)
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, filling[i][j - 1])
        if i > 0:
            lo = max(lo, filling[i - 1][j] + 1)
        for v in range(lo, max_entry + 1):
            filling[i][j] = v
            yield from fill(idx + 1)
        filling[i][j] = 0

    yield from fill(0)


def format_tableau(t: Tableau) -> str:
    """CLI rendering: one row per line, entries space-separated."""
    if not t:
        return "(empty)"
    return "\n".join(" ".join(map(str, row)) for row in t)
