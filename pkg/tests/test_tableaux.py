from itertools import product

import pytest

from rsklab.partitions import conjugate, enumerate_partitions, weight
from rsklab.tableaux import (
    enumerate_ssyt,
    first_ssyt_violation,
    format_tableau,
    is_syt,
    reading_word,
    shape,
    transpose_tableau,
    validate_ssyt,
)


def all_fillings_oracle(shp, max_entry):
    """Brute force: every filling of the diagram, filtered for validity."""
    cells = sum(shp)
    count = 0
    for values in product(range(1, max_entry + 1), repeat=cells):
        rows = []
        at = 0
        for length in shp:
            rows.append(tuple(values[at : at + length]))
            at += length
        if validate_ssyt(tuple(rows)):
            count += 1
    return count


def syt_oracle(shp):
    """All standard tableaux, built by placing 1..N at addable corners."""
    n = sum(shp)
    results = []
    rows = [[] for _ in shp]

    def place(value):
        if value > n:
            results.append(tuple(tuple(r) for r in rows))
            return
        for i, target in enumerate(shp):
            filled = len(rows[i])
            if filled < target and (i == 0 or len(rows[i - 1]) > filled):
                rows[i].append(value)
                place(value + 1)
                rows[i].pop()

    place(1)
    return results


def test_validate_examples():
    assert validate_ssyt(((1, 1, 1, 1), (2, 2), (3, 3), (4,)))
    assert validate_ssyt(((1, 2, 2, 4), (2, 4), (6, 7), (8,)))
    syt = ((1, 2, 4, 5), (3, 6), (7, 9), (8,))
    assert validate_ssyt(syt)
    assert is_syt(syt)
    assert not validate_ssyt(((1, 2), (2, 2)))
    assert first_ssyt_violation(((1, 2), (2, 2))) == (2, 2, "column not strictly increasing")


def test_validate_shape_and_entry_violations():
    assert first_ssyt_violation(((1,), (1, 2)))[2] == "row longer than the one above"
    assert not validate_ssyt(((2, 1),))
    assert not validate_ssyt(((0,),))
    assert not validate_ssyt(((1,), ()))
    assert validate_ssyt(())


def test_is_syt_requires_exact_entries():
    assert not is_syt(((1, 1),))
    assert not is_syt(((1, 3),))
    assert is_syt(((1, 2),))


def test_shape_examples():
    assert shape(((1, 1, 2, 3), (2, 3), (3,))) == (4, 2, 1)
    assert shape(((1, 1, 1, 1, 1),)) == (5,)
    big = (
        (1, 1, 1, 1, 2, 2, 3, 3, 3, 3),
        (2, 2, 2, 2, 3, 3),
        (3, 3),
    )
    assert shape(big) == (10, 6, 2)


def test_reading_word_examples():
    assert reading_word(((1, 1, 2, 3), (2, 3), (3,))) == (3, 2, 3, 1, 1, 2, 3)
    assert reading_word(((1, 2, 2),)) == (1, 2, 2)
    assert reading_word(((1, 2), (2,))) == (2, 1, 2)


def test_reading_word_length_is_weight():
    for shp in [(3, 1), (2, 2, 1), (4,)]:
        for t in enumerate_ssyt(shp, len(shp) + 1):
            assert len(reading_word(t)) == weight(shape(t))


def test_enumerate_ssyt_examples():
    assert list(enumerate_ssyt((1, 1), 2)) == [((1,), (2,))]
    assert list(enumerate_ssyt((2,), 2)) == [((1, 1),), ((1, 2),), ((2, 2),)]
    assert list(enumerate_ssyt((2, 1), 2)) == [((1, 1), (2,)), ((1, 2), (2,))]
    assert list(enumerate_ssyt((1, 1, 1), 2)) == []


def test_enumerate_ssyt_counts_match_filling_oracle():
    for w in range(1, 7):
        for n in range(1, w + 1):
            for shp in enumerate_partitions(w, n):
                for max_entry in range(1, 5):
                    got = list(enumerate_ssyt(shp, max_entry))
                    assert len(set(got)) == len(got)
                    assert all(validate_ssyt(t) and shape(t) == shp for t in got)
                    assert len(got) == all_fillings_oracle(shp, max_entry)


def test_transpose_examples():
    assert transpose_tableau(((1, 2), (3,))) == ((1, 3), (2,))
    assert transpose_tableau(((1,), (2,), (4,))) == ((1, 2, 4),)
    assert transpose_tableau(((1, 2, 4, 5), (3, 6), (7, 9), (8,))) == (
        (1, 3, 7, 8),
        (2, 6, 9),
        (4,),
        (5,),
    )
    assert transpose_tableau(()) == ()


def test_transpose_of_standard_tableaux():
    for w in range(1, 9):
        for n in range(1, w + 1):
            for shp in enumerate_partitions(w, n):
                for t in syt_oracle(shp):
                    assert is_syt(t)
                    tt = transpose_tableau(t)
                    assert is_syt(tt)
                    assert shape(tt) == conjugate(shp)


def test_format_tableau():
    assert format_tableau(((1, 1, 2), (2,))) == "1 1 2\n2"
    assert format_tableau(()) == "(empty)"
