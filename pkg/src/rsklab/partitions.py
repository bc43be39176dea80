"""Integer partitions: validation, conjugation, column multiplicities, enumeration.

Partitions are plain tuples of weakly decreasing positive integers, stored
without trailing zeros; "n parts" always means exactly n positive parts.
"""

from collections.abc import Iterable, Iterator

Partition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    """Return ``parts`` as a validated partition tuple.

    Raises ValueError unless the parts are weakly decreasing integers >= 1.
    The empty tuple is the (valid) empty partition.
    """
    p = tuple(parts)
    for x in p:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"partition parts must be positive integers, got {x!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def is_partition(parts: Iterable[int]) -> bool:
    try:
        check_partition(parts)
    except ValueError:
        return False
    return True


def weight(p: Partition) -> int:
    """Sum of the parts."""
    return sum(p)


def conjugate(p: Partition) -> Partition:
    """Transpose the Young diagram: part j of the result counts rows >= j."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def column_multiplicities(p: Partition) -> tuple[int, ...]:
    """Number of columns of each height: consecutive differences, last part last.

    Entry i (1-based) is p[i] - p[i+1] for i < len(p) and p[-1] for i = len(p).
    The weighted sum ``sum(i * r_i)`` recovers the weight.
    """
    n = len(p)
    return tuple(p[i] - p[i + 1] if i + 1 < n else p[i] for i in range(n))


def from_column_multiplicities(r: Iterable[int]) -> Partition:
    """Rebuild a partition from its column multiplicities: part k is the
    tail sum of r from index k on.  Inverse of :func:`column_multiplicities`."""
    parts = []
    tail = 0
    for x in reversed(tuple(r)):
        tail += x
        parts.append(tail)
    parts.reverse()
    return check_partition(parts)


def enumerate_partitions(total: int, exact_parts: int) -> Iterator[Partition]:
    """Yield every partition of ``total`` with exactly ``exact_parts`` positive
    parts, each once, in lexicographically decreasing order.

    The order is fixed so downstream reports are diff-stable across runs.
    The stream is empty when exact_parts > total.
    """
    if total < 1 or exact_parts < 1:
        return
    yield from _partitions_rec(total, exact_parts, total)


def _partitions_rec(total: int, parts_left: int, max_part: int) -> Iterator[Partition]:
    if parts_left == 1:
        if 1 <= total <= max_part:
            yield (total,)
        return
    hi = min(max_part, total - (parts_left - 1))
    lo = -(-total // parts_left)  # smallest first part that still fits
    for first in range(hi, lo - 1, -1):
        for rest in _partitions_rec(total - first, parts_left - 1, first):
            yield (first, *rest)


def parse_partition(text: str) -> Partition:
    """Parse the CLI partition format: comma-separated parts, e.g. "4,2,2,1"."""
    try:
        parts = tuple(int(s) for s in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition from {text!r}") from exc
    return check_partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "empty"
