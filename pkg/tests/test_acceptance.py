"""Acceptance gate: one test per criterion, each printing a pass/fail line
and enforcing its stated runtime budget."""

import json
import random
import time

from helpers import matrices_up_to_weight, permutation_matrix
from rsklab.cli import DISCREPANT_NOTICE, main
from rsklab.greene import greedy_k_increasing, greene_shape, max_k_increasing
from rsklab.matrices import hankel_from_params, to_biword, transpose
from rsklab.minimal import minimal_inversion_formula, two_row_minimal
from rsklab.rsk import rsk_forward, rsk_inverse, shape_of_matrix
from rsklab.search import RECORD_FIELDS, brute_force_minimum, verify_partition
from rsklab.tableaux import shape, validate_ssyt


def _report(number: int, name: str, started: float, budget: float | None = None) -> None:
    elapsed = time.perf_counter() - started
    line = f"criterion {number:02d} {name}: PASS ({elapsed:.1f}s)"
    print(line)
    if budget is not None:
        assert elapsed < budget, f"criterion {number} exceeded its {budget}s budget"


def test_criterion_01_rsk_bijectivity():
    started = time.perf_counter()
    for n, cap in ((2, 10), (3, 8)):
        for m in matrices_up_to_weight(n, cap):
            p, q = rsk_forward(m)
            assert validate_ssyt(p) and validate_ssyt(q)
            assert shape(p) == shape(q)
            assert rsk_inverse(p, q, n) == m
    _report(1, "rsk bijectivity", started, budget=60)


def test_criterion_02_greene_rsk_agreement():
    started = time.perf_counter()
    for n, cap in ((2, 10), (3, 8)):
        for m in matrices_up_to_weight(n, cap):
            assert greene_shape(m) == shape_of_matrix(m)
    _report(2, "greene agreement", started, budget=300)


def test_criterion_03_remark_regression():
    started = time.perf_counter()
    m = permutation_matrix([2, 4, 7, 9, 5, 1, 3, 6, 8])
    b = to_biword(m)
    assert shape_of_matrix(m) == (5, 3, 1)
    assert max_k_increasing(b, 1) == 5
    assert max_k_increasing(b, 2) == 8
    assert greedy_k_increasing(b, 2) < 8
    _report(3, "remark regression", started)


def test_criterion_04_transpose_duality():
    started = time.perf_counter()
    for m in matrices_up_to_weight(3, 6):
        p, q = rsk_forward(m)
        assert rsk_forward(transpose(m)) == (q, p)
        if m == transpose(m):
            assert p == q
    _report(4, "transpose duality", started)


def test_criterion_05_two_row_theorem():
    started = time.perf_counter()
    for top in range(1, 7):
        for bottom in range(1, top + 1):
            minimum, matrices = brute_force_minimum((top, bottom))
            expected_min, expected = two_row_minimal(top, bottom)
            assert minimum == expected_min == bottom * bottom
            assert set(matrices) == set(expected)
            assert len(expected) == top - bottom + 1
    _report(5, "two-row theorem", started, budget=120)


def test_criterion_06_hankel_path_identity():
    started = time.perf_counter()
    rng = random.Random(20260809)
    checked = 0
    while checked < 30:
        n = rng.randint(2, 4)
        s = tuple(rng.randint(0, 3) for _ in range(2 * n - 1))
        lengths = [min(t + 1, 2 * n - 1 - t) for t in range(2 * n - 1)]
        if not 1 <= sum(v * c for v, c in zip(s, lengths)) <= 12:
            continue
        windows = tuple(sum(s[k - 1 : 2 * n - k]) for k in range(1, n + 1))
        expected = tuple(x for x in windows if x > 0)
        assert greene_shape(hankel_from_params(s)) == expected
        checked += 1
    _report(6, "hankel path identity", started)


def test_criterion_07_worked_hankel_example():
    started = time.perf_counter()
    m = hankel_from_params((0, 2, 2, 2, 4))
    assert m == ((0, 2, 2), (2, 2, 2), (2, 2, 4))
    p, q = rsk_forward(m)
    assert p == q
    assert p == (
        (1, 1, 1, 1, 2, 2, 3, 3, 3, 3),
        (2, 2, 2, 2, 3, 3),
        (3, 3),
    )
    assert shape(p) == (10, 6, 2)
    _report(7, "worked hankel example", started)


def _load_records(path):
    records = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            rec = json.loads(line)
            assert set(rec) == set(RECORD_FIELDS)
            records.append(rec)
    return records


def test_criterion_08_conjecture_sweeps(tmp_path, capsys):
    started = time.perf_counter()
    out3 = tmp_path / "w9p3.jsonl"
    out2 = tmp_path / "w10p2.jsonl"
    assert main(["verify", "--max-weight", "9", "--parts", "3", "--out", str(out3)]) == 0
    assert main(["verify", "--max-weight", "10", "--parts", "2", "--out", str(out2)]) == 0
    capsys.readouterr()

    records3 = _load_records(out3)
    assert len(records3) == 7
    assert all(not r["skipped"] for r in records3)
    assert all(r["enumeration_strategies_agree"] for r in records3)

    records2 = _load_records(out2)
    assert len(records2) == 5
    assert all(not r["skipped"] for r in records2)
    assert all(r["enumeration_strategies_agree"] for r in records2)
    assert all(
        r["all_minimal_symmetric"] and r["all_minimal_hankel"] for r in records2
    )
    _report(8, "conjecture sweeps", started, budget=900)


def test_criterion_09_formula_comparator():
    started = time.perf_counter()
    rec = verify_partition((2, 1))
    assert rec.formula_value == rec.min_inversions_bruteforce == 1
    assert rec.formula_matches_bruteforce
    for k in range(1, 13):
        assert minimal_inversion_formula((k,)) == 0
        assert brute_force_minimum((k,))[0] == 0
    rec = verify_partition((3, 3))
    assert rec.formula_value == 7
    assert rec.min_inversions_bruteforce == 9
    assert rec.formula_matches_bruteforce is False
    _report(9, "formula comparator", started)


def test_criterion_10_discrepant_example_surfaced(capsys):
    started = time.perf_counter()
    m = ((1, 1, 0), (0, 2, 1), (1, 0, 1))
    assert main(["rsk", "1,1,0;0,2,1;1,0,1"]) == 0
    out = capsys.readouterr().out
    computed = shape_of_matrix(m)
    assert computed == greene_shape(m)
    assert computed != (4, 2, 1)
    assert f"shape: {','.join(map(str, computed))}" in out
    assert DISCREPANT_NOTICE in out
    _report(10, "discrepant example surfaced", started)


def test_criterion_11_sweep_determinism(tmp_path, capsys):
    started = time.perf_counter()
    out_a = tmp_path / "a.jsonl"
    out_b = tmp_path / "b.jsonl"
    assert main(["verify", "--max-weight", "9", "--parts", "3",
                 "--out", str(out_a), "--jobs", "1"]) == 0
    assert main(["verify", "--max-weight", "9", "--parts", "3",
                 "--out", str(out_b), "--jobs", "2"]) == 0
    capsys.readouterr()

    def normalized(path):
        lines = []
        with open(path, encoding="utf-8") as f:
            for line in f:
                rec = json.loads(line)
                rec.pop("elapsed")
                lines.append(json.dumps(rec, separators=(",", ":")))
        return lines

    assert normalized(out_a) == normalized(out_b)
    _report(11, "sweep determinism", started)
