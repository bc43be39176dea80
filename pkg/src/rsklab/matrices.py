"""Square nonnegative integer matrices, biword encoding, inversion counting,
and Hankel (constant anti-diagonal) structure."""

from collections.abc import Iterable

Matrix = tuple[tuple[int, ...], ...]
Biword = tuple[tuple[int, int], ...]
# Anti-diagonal parameters of a Hankel matrix: a flat tuple s where position t
# (0-based) holds the value on the anti-diagonal i + j = t + 2.  Length 2n - 1.
HankelParams = tuple[int, ...]


def check_matrix(m: Iterable[Iterable[int]]) -> Matrix:
    """Return ``m`` as a validated square matrix of nonnegative integers."""
    rows = tuple(tuple(row) for row in m)
    n = len(rows)
    if n == 0:
        raise ValueError("matrix must have at least one row")
    for row in rows:
        if len(row) != n:
            raise ValueError(f"matrix must be square, got row of length {len(row)} in a {n}-row matrix")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise ValueError(f"matrix entries must be nonnegative integers, got {x!r}")
    return rows


def zero_matrix(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


def matrix_weight(m: Matrix) -> int:
    """Sum of all entries."""
    return sum(sum(row) for row in m)


def to_biword(m: Matrix) -> Biword:
    """Encode a matrix as a lexicographically sorted two-line array, listing
    each (row, column) pair exactly entry-many times.  Indices are 1-based."""
    return tuple(
        (i + 1, j + 1)
        for i, row in enumerate(m)
        for j, e in enumerate(row)
        for _ in range(e)
    )


def from_biword(b: Biword, n: int) -> Matrix:
    """Accumulate biword pair multiplicities back into an n x n matrix."""
    rows = [[0] * n for _ in range(n)]
    for i, j in b:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"biword pair ({i}, {j}) out of range for n={n}")
        rows[i - 1][j - 1] += 1
    return tuple(tuple(row) for row in rows)


def inversion_count(m: Matrix) -> int:
    """Number of inversions: the sum of entry products over ordered position
    pairs (i, j), (k, l) with i < k and j > l.

    Pairs sharing a row, a column, or a cell contribute nothing; in particular
    the (1, 1) and (n, n) corner cells never contribute.
    """
    cells = [
        (i, j, e) for i, row in enumerate(m) for j, e in enumerate(row) if e
    ]
    total = 0
    for i, j, a in cells:
        for k, l, b in cells:
            if i < k and j > l:
                total += a * b
    return total


def transpose(m: Matrix) -> Matrix:
    return tuple(tuple(row[i] for row in m) for i in range(len(m)))


def is_symmetric(m: Matrix) -> bool:
    return m == transpose(m)


def is_hankel(m: Matrix) -> bool:
    """True iff the matrix is constant along anti-diagonals (hence symmetric)."""
    n = len(m)
    return all(
        m[i][j] == m[i + 1][j - 1]
        for i in range(n - 1)
        for j in range(1, n)
    )


def hankel_from_params(s: HankelParams) -> Matrix:
    """Build the Hankel matrix whose anti-diagonal i + j carries s[i + j - 2].

    The parameter tuple must have odd length 2n - 1 (anti-diagonals 2..2n).
    """
    s = tuple(s)
    if len(s) % 2 == 0 or not s:
        raise ValueError(f"anti-diagonal parameters must have odd length 2n-1, got {len(s)}")
    for x in s:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise ValueError(f"anti-diagonal parameters must be nonnegative integers, got {x!r}")
    n = (len(s) + 1) // 2
    return tuple(tuple(s[i + j] for j in range(n)) for i in range(n))


def antidiagonal_params(m: Matrix) -> HankelParams:
    """Read the anti-diagonal parameters off a Hankel matrix.

    Inverse of :func:`hankel_from_params`; rejects non-Hankel input.
    """
    if not is_hankel(m):
        raise ValueError("matrix is not Hankel (not constant on anti-diagonals)")
    n = len(m)
    return tuple(m[min(t, n - 1)][t - min(t, n - 1)] for t in range(2 * n - 1))


def parse_matrix(text: str) -> Matrix:
    """Parse the CLI matrix format: rows separated by ";", entries by ",",
    e.g. "1,0,2;0,2,0;1,1,0"."""
    try:
        rows = [[int(s) for s in row.split(",")] for row in text.split(";")]
    except ValueError as exc:
        raise ValueError(f"cannot parse matrix from {text!r}") from exc
    return check_matrix(rows)


def format_matrix(m: Matrix) -> str:
    return ";".join(",".join(map(str, row)) for row in m)
