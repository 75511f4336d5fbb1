"""Acceptance suite: end-to-end checks of the package's headline guarantees.

Every test prints one ``ACCEPTANCE <name>: PASS`` / ``FAIL`` line (visible
with ``pytest -s`` or in failure output) and asserts exact integer/byte
equality — the reproduced quantities are all small and discrete, so no
tolerance bands apply.  Where a check has an independent route (a recount
from a defining formula rather than the library's own code path), both
routes run and must agree.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from functools import wraps
from itertools import combinations
from typing import Callable

import numpy as np

from dresscode import (
    assemble_dress,
    cut_set_bound,
    execute_repair,
    fail_node,
    failure_tolerance_check,
    field_inv,
    field_mul,
    mbr_capacity,
    mbr_file_size,
    mds_decode,
    mds_encode,
    mds_params,
    modular_code,
    partial_regular_graph,
    plan_repair,
    projective_plane_code,
    regular_graph_code,
    retrieve_file,
    ring_code,
    store_file,
    supported_file_size,
    verify_code,
    wfr_from_prg,
)


def criterion(name: str) -> Callable:
    def decorate(fn: Callable[[], None]) -> Callable[[], None]:
        @wraps(fn)
        def wrapper() -> None:
            try:
                fn()
            except BaseException:
                print(f"ACCEPTANCE {name}: FAIL")
                raise
            print(f"ACCEPTANCE {name}: PASS")

        return wrapper

    return decorate


@criterion("complete-graph scenario")
def test_complete_graph_scenario() -> None:
    # (6,4,5) system on the complete graph: 15 packets replicated twice,
    # capacity 14, every 4-subset retrieves, every repair costs exactly 5.
    start = time.perf_counter()
    code = regular_graph_code(6, 5)
    report = verify_code(code)
    assert report.classification == "strong"
    assert code.theta == 15
    assert report.node_sizes == (5,) * 6
    assert set(report.rho_observed.values()) == {2}

    dress = assemble_dress(code, 4)
    assert dress.b == 14

    file = bytes(range(1, 15))
    cluster = store_file(dress, file)
    subsets = list(combinations(range(1, 7), 4))
    assert len(subsets) == 15
    for subset in subsets:
        assert retrieve_file(cluster, subset) == file

    for node in range(1, 7):
        trial = store_file(dress, file)
        before = trial.placement()
        fail_node(trial, node)
        plan = plan_repair(dress, trial, node)
        assert plan.total_bandwidth == 5
        assert len(plan.helpers) == 5
        execute_repair(trial, plan)
        assert trial.placement() == before
    assert time.perf_counter() - start < 1.0


@criterion("partial-regular-graph scenario")
def test_partial_regular_graph_scenario() -> None:
    # (9,7,7) system on the near-regular graph: one node one packet short,
    # 31 packets, capacity 30, repairs contact 7 helpers (6 for the light node).
    start = time.perf_counter()
    expected = np.array(
        [
            [0, 1, 1, 1, 1, 0, 1, 1, 1],
            [1, 0, 1, 1, 1, 1, 0, 1, 1],
            [1, 1, 0, 1, 1, 1, 1, 0, 1],
            [1, 1, 1, 0, 1, 1, 1, 1, 0],
            [1, 1, 1, 1, 0, 1, 1, 1, 0],
            [0, 1, 1, 1, 1, 0, 1, 1, 1],
            [1, 0, 1, 1, 1, 1, 0, 1, 1],
            [1, 1, 0, 1, 1, 1, 1, 0, 1],
            [1, 1, 1, 0, 0, 1, 1, 1, 0],
        ],
        dtype=np.int64,
    )
    assert np.array_equal(partial_regular_graph(9, 7).adj, expected)

    code = wfr_from_prg(9, 7)
    report = verify_code(code)
    assert report.classification == "weak"
    assert code.theta == 31
    assert report.delta_total == 1
    assert report.node_sizes == (7,) * 8 + (6,)

    dress = assemble_dress(code, 7)
    assert dress.b == 30

    file = bytes(range(2, 32))
    cluster = store_file(dress, file)
    subsets = list(combinations(range(1, 10), 7))
    assert len(subsets) == 36
    for subset in subsets:
        assert retrieve_file(cluster, subset) == file

    for node in range(1, 10):
        trial = store_file(dress, file)
        fail_node(trial, node)
        plan = plan_repair(dress, trial, node)
        assert len(plan.helpers) == (6 if node == 9 else 7)
        execute_repair(trial, plan)
        assert retrieve_file(trial, range(1, 8)) == file
    assert time.perf_counter() - start < 1.0


@criterion("bound identities")
def test_bound_identities() -> None:
    assert mbr_capacity(6, 4, 5) == 14
    assert mbr_capacity(9, 7, 7) == 28
    for d in range(1, 13):
        for k in range(1, d + 1):
            for alpha in (d, d + 3):
                assert cut_set_bound(k, d, alpha, 1) == mbr_file_size(k, d, 1)


@criterion("modular replication audit")
def test_modular_replication_audit() -> None:
    # Independent recount straight from the defining sets
    # { t^(i-1) + j mod (n+1) : i = 1..rho }, j = 0..n-1 — no library calls.
    n, t, rho = 8, 2, 3
    recount: Counter[int] = Counter()
    for j in range(n):
        for i in range(1, rho + 1):
            recount[(t ** (i - 1) + j) % (n + 1)] += 1
    assert {sym for sym, c in recount.items() if c == 2} == {0, 1, 3}
    assert {sym for sym, c in recount.items() if c == 3} == {2, 4, 5, 6, 7, 8}

    report = verify_code(modular_code(n, t, rho))
    assert report.classification == "irregular"
    assert report.rho_observed == dict(recount)


@criterion("ring placement family")
def test_ring_placement_family() -> None:
    report = verify_code(ring_code(9, 31))
    assert sum(report.node_sizes) == 62
    assert report.d_max == 8
    assert report.delta_total == 10
    assert report.classification == "weak"

    report18 = verify_code(ring_code(9, 18))
    assert report18.classification == "strong"
    assert report18.node_sizes == (4,) * 9

    for n in range(3, 11):
        for theta in range(n, 4 * n + 1):
            got = verify_code(ring_code(n, theta)).classification
            assert got == ("strong" if theta % n == 0 else "weak"), (n, theta)


@criterion("projective plane family")
def test_projective_plane_family() -> None:
    for m in (2, 3):
        code = projective_plane_code(m)
        report = verify_code(code)
        count = m * m + m + 1
        assert code.n == code.theta == count
        assert report.classification == "strong"
        assert report.node_sizes == (m + 1,) * count
        assert set(report.rho_observed.values()) == {m + 1}
        for i, a in enumerate(code.nodes):
            for b in code.nodes[i + 1 :]:
                assert len(a & b) == 1


@criterion("erasure code sweep")
def test_erasure_code_sweep() -> None:
    start = time.perf_counter()
    for a in range(1, 256):
        assert field_mul(a, field_inv(a)) == 1

    # every subset, exhaustively, for all shapes up to 12 coordinates
    for theta in range(1, 13):
        for b in range(1, theta + 1):
            params = mds_params(theta, b)
            file = tuple((i * 37 + 11) % 256 for i in range(b))
            cw = mds_encode(params, file)
            for subset in combinations(range(1, theta + 1), b):
                assert mds_decode(params, {c: cw[c - 1] for c in subset}) == file

    # larger shapes: every subset again, plus seeded random payloads
    for theta, b in ((15, 14), (16, 10)):
        params = mds_params(theta, b)
        file = tuple((i * 19 + 3) % 256 for i in range(b))
        cw = mds_encode(params, file)
        for subset in combinations(range(1, theta + 1), b):
            assert mds_decode(params, {c: cw[c - 1] for c in subset}) == file

    rng = random.Random(987654321)
    params = mds_params(16, 10)
    for _ in range(100):
        file = tuple(rng.randrange(256) for _ in range(10))
        cw = mds_encode(params, file)
        subset = rng.sample(range(1, 17), 10)
        assert mds_decode(params, {c: cw[c - 1] for c in subset}) == file
    assert time.perf_counter() - start < 5.0


@criterion("failure tolerance")
def test_failure_tolerance() -> None:
    # every double-replicated construction tolerates exactly one failure
    for dress in (
        assemble_dress(regular_graph_code(6, 5), 4),
        assemble_dress(regular_graph_code(4, 2), 2),
        assemble_dress(wfr_from_prg(9, 7), 7),
        assemble_dress(ring_code(9, 18), 5),
        assemble_dress(ring_code(9, 31), 7),
    ):
        assert failure_tolerance_check(dress) == 1

    # triple-replicated plane: brute-force oracle over all failure subsets,
    # written against set unions directly rather than the simulator's walk
    plane = assemble_dress(projective_plane_code(2), 5)
    sets = [set(node) for node in plane.inner.nodes]

    def oracle() -> int:
        for f in range(1, 8):
            for down in combinations(range(7), f):
                live = set().union(*(sets[i] for i in range(7) if i not in down)) if f < 7 else set()
                lost = set().union(*(sets[i] for i in down))
                if not lost <= live or len(live) < plane.b:
                    return f - 1
        return 7

    tol = failure_tolerance_check(plane)
    assert tol == oracle()
    assert tol == 2  # one less than the replication degree
    assert tol >= plane.inner.nominal_rho - 1
