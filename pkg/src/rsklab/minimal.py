"""Constructions around minimal-inversion matrices of a fixed shape: the
balanced Hankel candidate family, the exact two-row family, and the
closed-form inversion count.

For a partition with n parts and column multiplicities r, the candidate
anti-diagonal parameters satisfy the pairing s_{k+1} + s_{2n-k+1} = r_k for
k < n with the central value s_{n+1} = r_n.  The outermost pair (k = 1) sits
in the inversion-neutral corner cells and may split arbitrarily, giving
r_1 + 1 choices; every inner pair splits as floor/ceil of r_k / 2, in either
order.  These equations come from the anti-diagonal window sums of the shape
and are re-checked, not assumed: callers verify each candidate's shape.
"""

from dataclasses import dataclass
from itertools import product
from collections.abc import Iterator

from .matrices import HankelParams, Matrix, hankel_from_params
from .partitions import Partition, check_partition, column_multiplicities, conjugate


@dataclass(frozen=True)
class SplitChoice:
    """One assignment of anti-diagonal parameters for a candidate.

    ``end_split`` is the value given to the first anti-diagonal (the rest of
    the outermost pair goes to the last one); ``ceil_first[k - 2]`` says, for
    each inner pair index k in 2..n-1, whether the ceiling half is placed on
    the early anti-diagonal k+1 rather than the late one 2n-k+1.
    """

    end_split: int
    ceil_first: tuple[bool, ...]


def enumerate_split_choices(p: Partition) -> Iterator[SplitChoice]:
    """All split choices for a partition, in deterministic order; inner pairs
    with an even multiplicity admit a single (balanced) orientation."""
    p = check_partition(p)
    if not p:
        return
    n = len(p)
    r = column_multiplicities(p)
    if n == 1:
        # Single anti-diagonal; nothing to split.
        yield SplitChoice(r[0], ())
        return
    orientations = [(False, True) if r[k - 1] % 2 else (False,) for k in range(2, n)]
    for end in range(r[0] + 1):
        for flips in product(*orientations):
            yield SplitChoice(end, flips)


def split_params(p: Partition, choice: SplitChoice) -> HankelParams:
    """Anti-diagonal parameters realised by a split choice."""
    p = check_partition(p)
    n = len(p)
    r = column_multiplicities(p)
    if n == 1:
        return (r[0],)
    s = [0] * (2 * n - 1)
    s[n - 1] = r[n - 1]  # central anti-diagonal n + 1
    s[0] = choice.end_split
    s[2 * n - 2] = r[0] - choice.end_split
    for k in range(2, n):
        low, high = r[k - 1] // 2, r[k - 1] - r[k - 1] // 2
        early, late = (high, low) if choice.ceil_first[k - 2] else (low, high)
        s[k - 1] = early  # anti-diagonal k + 1
        s[2 * n - k - 1] = late  # anti-diagonal 2n - k + 1
    return tuple(s)


def minimal_hankel_candidates(p: Partition) -> tuple[Matrix, ...]:
    """The Hankel matrices of every split choice, sorted; all have weight |p|.

    Whether these are exactly the minimal matrices of shape p is a question
    for the verification harness, not a promise of this constructor.
    """
    p = check_partition(p)
    seen = {hankel_from_params(split_params(p, c)) for c in enumerate_split_choices(p)}
    return tuple(sorted(seen))


def candidate_count(p: Partition) -> int:
    """Closed-form size of the candidate family for n >= 2 parts:
    (r_1 + 1) times 2 for every odd inner multiplicity.  A single-part
    partition has exactly one candidate."""
    p = check_partition(p)
    n = len(p)
    if n == 1:
        return 1
    r = column_multiplicities(p)
    count = r[0] + 1
    for k in range(2, n):
        if r[k - 1] % 2:
            count *= 2
    return count


def two_row_minimal(top: int, bottom: int) -> tuple[int, tuple[Matrix, ...]]:
    """Exact minimal family for a two-row partition (top, bottom): the
    minimum is bottom**2, attained by the top - bottom + 1 Hankel matrices
    [[k, bottom], [bottom, top - bottom - k]]."""
    if not (top >= bottom >= 1):
        raise ValueError(f"need top >= bottom >= 1, got ({top}, {bottom})")
    matrices = tuple(
        ((k, bottom), (bottom, top - bottom - k)) for k in range(top - bottom + 1)
    )
    return bottom * bottom, matrices


def minimal_inversion_formula(p: Partition) -> int:
    """Closed-form candidate for the minimal inversion count of shape p.

    With conjugate column heights h_1, h_2, ... and n parts, the value is

        sum_i (floor(i / 2) + 1) * C(h_i, 2)
        + sum_{i odd, j even} C(h_i + h_j - n, 2)

    where C(x, 2) is clamped to 0 for x < 2 (overlaps cannot be negative).
    This value is compared against brute force by the harness and is not
    assumed correct; disagreements are reported, never patched over.
    """
    p = check_partition(p)
    if not p:
        return 0
    heights = conjugate(p)
    n = len(p)

    def choose2(x: int) -> int:
        return x * (x - 1) // 2 if x >= 2 else 0

    same = sum((i // 2 + 1) * choose2(h) for i, h in enumerate(heights, start=1))
    cross = sum(
        choose2(heights[i - 1] + heights[j - 1] - n)
        for i in range(1, len(heights) + 1, 2)
        for j in range(2, len(heights) + 1, 2)
    )
    return same + cross
