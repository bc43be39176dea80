"""Greene invariants via exhaustive chain search.

This module is the independent shape oracle: it never touches the insertion
algorithm, so agreement between :func:`greene_shape` and the insertion-based
shape is a genuine two-route check.  The search is exponential by design;
input sizes are capped and the cap is a hard error, never a silent slowdown.
"""

from bisect import bisect_right

from .errors import CapExceededError
from .matrices import Biword, Matrix, to_biword
from .partitions import Partition

GREENE_WEIGHT_CAP = 12


def max_k_increasing(b: Biword, k: int, weight_cap: int = GREENE_WEIGHT_CAP) -> int:
    """Maximal total size of a union of k pairwise-disjoint weakly increasing
    subsequences of the biword's bottom word.

    Since the biword is sorted, the top row is weakly increasing along any
    subsequence, so only the bottoms constrain.  Exhaustive branch and bound:
    each letter is appended to one of the k chains or discarded, memoized on
    the sorted tuple of chain tails, with an early cut when no remaining
    letters could improve the best assignment.
    """
    word = tuple(bottom for _, bottom in b)
    if len(word) > weight_cap:
        raise CapExceededError(
            f"word of length {len(word)} exceeds the oracle cap {weight_cap}"
        )
    if k <= 0:
        return 0
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def best(i: int, tails: tuple[int, ...]) -> int:
        if i == len(word):
            return 0
        key = (i, tails)
        if key in memo:
            return memo[key]
        x = word[i]
        limit = len(word) - i
        value = best(i + 1, tails)
        if value < limit:
            tried = set()
            for c, tail in enumerate(tails):
                if tail <= x and tail not in tried:
                    tried.add(tail)
                    extended = tuple(sorted(tails[:c] + (x,) + tails[c + 1:]))
                    value = max(value, 1 + best(i + 1, extended))
                    if value == limit:
                        break
        memo[key] = value
        return value

    return best(0, (0,) * k)


def greene_profile(b: Biword, k_max: int, weight_cap: int = GREENE_WEIGHT_CAP) -> tuple[int, ...]:
    """Cumulative invariants (i_1, ..., i_{k_max}); weakly increasing with
    weakly decreasing increments, saturating at the word length."""
    total = len(b)
    profile = []
    current = 0
    for k in range(1, k_max + 1):
        if current < total:
            current = max_k_increasing(b, k, weight_cap)
        profile.append(current)
    return tuple(profile)


def greene_shape(m: Matrix, weight_cap: int = GREENE_WEIGHT_CAP) -> Partition:
    """Shape of a matrix from its chain invariants alone: part k is
    i_k - i_{k-1}, trailing zeros dropped.  Empty for the zero matrix."""
    b = to_biword(m)
    total = len(b)
    parts = []
    previous = 0
    k = 1
    while previous < total:
        current = max_k_increasing(b, k, weight_cap)
        parts.append(current - previous)
        previous = current
        k += 1
    return tuple(parts)


def longest_weakly_increasing(word: tuple[int, ...]) -> tuple[int, ...]:
    """Positions of one longest weakly increasing subsequence, found by
    patience sorting with parent links.  Deterministic."""
    pile_last_value: list[int] = []
    pile_last_index: list[int] = []
    parent: dict[int, int | None] = {}
    for i, x in enumerate(word):
        pos = bisect_right(pile_last_value, x)
        parent[i] = pile_last_index[pos - 1] if pos > 0 else None
        if pos == len(pile_last_value):
            pile_last_value.append(x)
            pile_last_index.append(i)
        else:
            pile_last_value[pos] = x
            pile_last_index[pos] = i
    if not pile_last_index:
        return ()
    chain = []
    at: int | None = pile_last_index[-1]
    while at is not None:
        chain.append(at)
        at = parent[at]
    chain.reverse()
    return tuple(chain)


def greedy_k_increasing(b: Biword, k: int) -> int:
    """Greedy comparator for :func:`max_k_increasing`: repeatedly extract one
    longest weakly increasing subsequence and remove it.

    Greedy extension of maximal chains is not optimal in general, which is
    exactly what the exhaustive oracle exists to get right.
    """
    word = [bottom for _, bottom in b]
    total = 0
    for _ in range(k):
        if not word:
            break
        chain = set(longest_weakly_increasing(tuple(word)))
        total += len(chain)
        word = [x for i, x in enumerate(word) if i not in chain]
    return total
