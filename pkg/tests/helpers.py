"""Shared enumeration helpers for the test suite."""

from collections.abc import Iterator

from rsklab.matrices import Matrix


def exact_weight_matrices(n: int, w: int) -> Iterator[Matrix]:
    """Every n x n nonnegative integer matrix of weight exactly w."""
    cells = n * n

    def rec(idx: int, remaining: int, acc: list[int]) -> Iterator[Matrix]:
        if idx == cells - 1:
            acc.append(remaining)
            yield tuple(tuple(acc[i * n : (i + 1) * n]) for i in range(n))
            acc.pop()
            return
        for v in range(remaining + 1):
            acc.append(v)
            yield from rec(idx + 1, remaining - v, acc)
            acc.pop()

    yield from rec(0, w, [])


def matrices_up_to_weight(n: int, max_weight: int) -> Iterator[Matrix]:
    for w in range(max_weight + 1):
        yield from exact_weight_matrices(n, w)


def permutation_matrix(word: list[int]) -> Matrix:
    n = len(word)
    return tuple(
        tuple(1 if j + 1 == word[i] else 0 for j in range(n)) for i in range(n)
    )
