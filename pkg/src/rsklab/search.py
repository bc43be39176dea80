"""Exhaustive enumeration of the matrices of a fixed shape, extraction of the
minimal-inversion set, and per-partition adjudication of the symmetry/Hankel
conjecture, the balanced-split characterisation, and the closed formula.

Ground truth is strategy A: enumerate all weak compositions of the weight
into the n*n cells and keep those whose insertion shape matches, with the
independent chain oracle re-checking every member of the minimal set.  The
inverse-correspondence enumeration (strategy B) must produce the same set;
disagreement between the two is a bug in the harness, never a finding.

The module is exhaustive or it refuses: inputs beyond the configured caps
raise, and no approximate minimum is ever reported.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from collections.abc import Iterable, Iterator

from .errors import CapExceededError, OracleDisagreementError
from .greene import greene_shape
from .matrices import Matrix, inversion_count, is_hankel, is_symmetric, transpose
from .minimal import minimal_hankel_candidates, minimal_inversion_formula
from .partitions import Partition, check_partition, enumerate_partitions, weight
from .rsk import rsk_inverse, shape_of_matrix
from .tableaux import enumerate_ssyt

# Exhaustive-scan weight caps by matrix side; sides beyond the table are
# refused outright unless the caller overrides the cap explicitly.
DEFAULT_WEIGHT_CAPS = {1: 12, 2: 12, 3: 12, 4: 10}


def effective_weight_cap(n: int, override: int | None = None) -> int:
    if override is not None:
        return override
    return DEFAULT_WEIGHT_CAPS.get(n, 0)


def _check_cap(p: Partition, weight_cap: int | None) -> int:
    n = len(p)
    cap = effective_weight_cap(n, weight_cap)
    w = weight(p)
    if w > cap:
        raise CapExceededError(
            f"partition {p} has weight {w} > cap {cap} for {n}x{n} matrices; "
            "raise the cap explicitly to force the scan"
        )
    return cap


def enumerate_shape_class(p: Partition, weight_cap: int | None = None) -> Iterator[Matrix]:
    """Yield exactly the n x n matrices of weight |p| whose shape is p, where
    n is the number of parts, in deterministic (row-major ascending) order.

    Compositions are pruned as soon as the heaviest right-down path through
    the filled prefix exceeds the first part: later cells only add weight, so
    no completion can recover.
    """
    p = check_partition(p)
    if not p:
        raise ValueError("shape class of the empty partition is not defined")
    _check_cap(p, weight_cap)
    n = len(p)
    w = weight(p)
    first_part = p[0]
    cells = [(i, j) for i in range(n) for j in range(n)]
    grid = [[0] * n for _ in range(n)]
    heaviest = [[0] * n for _ in range(n)]  # best path ending at each cell

    def path_weight(i: int, j: int, v: int) -> int:
        above = heaviest[i - 1][j] if i else 0
        left = heaviest[i][j - 1] if j else 0
        return v + max(above, left)

    def fill(idx: int, remaining: int) -> Iterator[Matrix]:
        i, j = cells[idx]
        if idx == len(cells) - 1:
            d = path_weight(i, j, remaining)
            # The corner path value is the heaviest overall; it must equal
            # the first part, and the full shape must match.
            if d == first_part:
                grid[i][j] = remaining
                m = tuple(tuple(row) for row in grid)
                if shape_of_matrix(m) == p:
                    yield m
                grid[i][j] = 0
            return
        for v in range(remaining + 1):
            d = path_weight(i, j, v)
            if d > first_part:
                break
            grid[i][j] = v
            heaviest[i][j] = d
            yield from fill(idx + 1, remaining - v)
        grid[i][j] = 0
        heaviest[i][j] = 0

    yield from fill(0, w)


def enumerate_via_inverse_rsk(p: Partition, weight_cap: int | None = None) -> Iterator[Matrix]:
    """Yield the same class through the opposite door: invert the
    correspondence over every ordered pair of semistandard tableaux of shape
    p with entries at most n."""
    p = check_partition(p)
    if not p:
        raise ValueError("shape class of the empty partition is not defined")
    _check_cap(p, weight_cap)
    n = len(p)
    tableaux = list(enumerate_ssyt(p, n))
    for insertion_tableau in tableaux:
        for recording_tableau in tableaux:
            yield rsk_inverse(insertion_tableau, recording_tableau, n)


def brute_force_minimum(
    p: Partition, weight_cap: int | None = None
) -> tuple[int, tuple[Matrix, ...]]:
    """Exact minimum inversion count over the shape class, with every matrix
    attaining it (the minimal matrix need not be unique)."""
    best: int | None = None
    argmins: list[Matrix] = []
    for m in enumerate_shape_class(p, weight_cap):
        c = inversion_count(m)
        if best is None or c < best:
            best, argmins = c, [m]
        elif c == best:
            argmins.append(m)
    if best is None:
        raise OracleDisagreementError(f"shape class of {p} came out empty")
    return best, tuple(sorted(argmins))


@dataclass(frozen=True)
class VerificationRecord:
    """Structured per-partition result of the conjecture/formula checks."""

    partition: Partition
    n: int
    weight: int
    class_size: int
    min_inversions_bruteforce: int | None
    minimal_set: tuple[Matrix, ...]
    all_minimal_symmetric: bool | None
    all_minimal_hankel: bool | None
    candidate_set_equals_minimal_set: bool | None
    candidates_subset_of_minimal: bool | None
    formula_value: int | None
    formula_matches_bruteforce: bool | None
    enumeration_strategies_agree: bool | None
    elapsed: float
    skipped: bool = False
    skip_reason: str | None = None


def verify_partition(p: Partition, weight_cap: int | None = None) -> VerificationRecord:
    """Fill every record field for one partition; deterministic given p.

    Raises OracleDisagreementError when an internal cross-check fails (the
    chain oracle contradicting the insertion shape on a minimal member, or
    the minimal set not being closed under transpose); those invalidate the
    harness and must never be reported as findings.
    """
    p = check_partition(p)
    cap = _check_cap(p, weight_cap)
    start = time.perf_counter()
    n = len(p)
    w = weight(p)

    class_set: set[Matrix] = set()
    best: int | None = None
    argmins: list[Matrix] = []
    for m in enumerate_shape_class(p, weight_cap):
        class_set.add(m)
        c = inversion_count(m)
        if best is None or c < best:
            best, argmins = c, [m]
        elif c == best:
            argmins.append(m)
    if best is None:
        raise OracleDisagreementError(f"shape class of {p} came out empty")
    minimal_set = tuple(sorted(argmins))

    via_inverse = set(enumerate_via_inverse_rsk(p, weight_cap))
    strategies_agree = via_inverse == class_set

    for m in minimal_set:
        if greene_shape(m, weight_cap=max(cap, w)) != p:
            raise OracleDisagreementError(
                f"chain oracle disagrees with insertion shape on minimal matrix {m}"
            )
    if {transpose(m) for m in minimal_set} != set(minimal_set):
        raise OracleDisagreementError(
            f"minimal set of {p} is not closed under transpose"
        )

    candidates = set(minimal_hankel_candidates(p))
    minimal = set(minimal_set)
    formula_value = minimal_inversion_formula(p)

    return VerificationRecord(
        partition=p,
        n=n,
        weight=w,
        class_size=len(class_set),
        min_inversions_bruteforce=best,
        minimal_set=minimal_set,
        all_minimal_symmetric=all(is_symmetric(m) for m in minimal_set),
        all_minimal_hankel=all(is_hankel(m) for m in minimal_set),
        candidate_set_equals_minimal_set=candidates == minimal,
        candidates_subset_of_minimal=candidates <= minimal,
        formula_value=formula_value,
        formula_matches_bruteforce=formula_value == best,
        enumeration_strategies_agree=strategies_agree,
        elapsed=time.perf_counter() - start,
    )


def skipped_record(p: Partition, reason: str) -> VerificationRecord:
    return VerificationRecord(
        partition=p,
        n=len(p),
        weight=weight(p),
        class_size=0,
        min_inversions_bruteforce=None,
        minimal_set=(),
        all_minimal_symmetric=None,
        all_minimal_hankel=None,
        candidate_set_equals_minimal_set=None,
        candidates_subset_of_minimal=None,
        formula_value=None,
        formula_matches_bruteforce=None,
        enumeration_strategies_agree=None,
        elapsed=0.0,
        skipped=True,
        skip_reason=reason,
    )


def sweep_partitions(sweep_weight: int, parts: Iterable[int]) -> list[Partition]:
    """The partitions a sweep covers: for each requested part count, every
    partition of the sweep weight with exactly that many parts, in the fixed
    enumeration order."""
    return [
        p
        for n in sorted(set(parts))
        for p in enumerate_partitions(sweep_weight, n)
    ]


def _verify_or_skip(task: tuple[Partition, int | None]) -> VerificationRecord:
    p, weight_cap = task
    try:
        return verify_partition(p, weight_cap)
    except CapExceededError as exc:
        return skipped_record(p, str(exc))


def sweep(
    sweep_weight: int,
    parts: Iterable[int],
    jobs: int = 1,
    weight_cap: int | None = None,
    skip: Iterable[Partition] = (),
) -> list[VerificationRecord]:
    """One record per partition of ``sweep_weight`` for each requested part
    count, in deterministic partition order regardless of parallelism.

    Partitions in ``skip`` are not verified (resume support).  Cap breaches
    become per-record skip markers rather than failures; oracle disagreement
    propagates.
    """
    done = set(skip)
    tasks = [
        (p, weight_cap)
        for p in sweep_partitions(sweep_weight, parts)
        if p not in done
    ]
    if jobs <= 1 or len(tasks) <= 1:
        return [_verify_or_skip(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_or_skip, tasks))


RECORD_FIELDS = (
    "partition",
    "n",
    "weight",
    "class_size",
    "min_inversions_bruteforce",
    "minimal_set",
    "all_minimal_symmetric",
    "all_minimal_hankel",
    "candidate_set_equals_minimal_set",
    "candidates_subset_of_minimal",
    "formula_value",
    "formula_matches_bruteforce",
    "enumeration_strategies_agree",
    "elapsed",
    "skipped",
    "skip_reason",
)


def record_to_dict(rec: VerificationRecord) -> dict:
    """JSON-ready dict with a fixed key order; matrices as arrays of arrays."""
    return {
        "partition": list(rec.partition),
        "n": rec.n,
        "weight": rec.weight,
        "class_size": rec.class_size,
        "min_inversions_bruteforce": rec.min_inversions_bruteforce,
        "minimal_set": [[list(row) for row in m] for m in rec.minimal_set],
        "all_minimal_symmetric": rec.all_minimal_symmetric,
        "all_minimal_hankel": rec.all_minimal_hankel,
        "candidate_set_equals_minimal_set": rec.candidate_set_equals_minimal_set,
        "candidates_subset_of_minimal": rec.candidates_subset_of_minimal,
        "formula_value": rec.formula_value,
        "formula_matches_bruteforce": rec.formula_matches_bruteforce,
        "enumeration_strategies_agree": rec.enumeration_strategies_agree,
        "elapsed": rec.elapsed,
        "skipped": rec.skipped,
        "skip_reason": rec.skip_reason,
    }
