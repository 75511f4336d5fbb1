"""Cluster simulation: placement, any-k retrieval, node failure, and uncoded
exact repair with per-helper bandwidth accounting.

A repair never computes anything: each lost symbol is copied verbatim from a
live replica.  Strict planning assigns each lost symbol to a distinct helper
(one download per helper, as a bipartite matching); relaxed planning lets a
helper serve several symbols at the same total bandwidth.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    AlreadyDead,
    DeadNodeContacted,
    InternalCheckError,
    IrregularCode,
    LengthMismatch,
    NoStrictPlan,
    ParamViolation,
    StaleReport,
    UnrepairableSymbol,
)
from .frcode import IRREGULAR, FrCode, normalize_symbols, supported_file_size, verify_code
from .mds import MdsParams, mds_decode, mds_encode, mds_params

STRICT = "strict"
RELAXED = "relaxed"


@dataclass(frozen=True)
class DressCode:
    """Outer MDS code composed with an inner repetition code.

    The inner code is kept with normalized symbols 1..theta so symbol id s is
    codeword coordinate s.  ``b`` is the file size in symbols, fixed at
    assembly to what any ``k`` nodes can deliver.
    """

    inner: FrCode
    outer: MdsParams
    b: int
    k: int


def assemble_dress(inner: FrCode, k: int, *, allow_irregular: bool = False) -> DressCode:
    """Pair an inner code with the matching (theta, B) outer code.

    B is the supported file size at k (the minimum k-subset union), so any k
    live nodes can always reconstruct the file.  Irregular inner codes are
    rejected unless ``allow_irregular`` is set for repair auditing.
    """
    report = verify_code(inner)
    if report.classification == IRREGULAR and not allow_irregular:
        raise IrregularCode("inner code is irregular; pass allow_irregular to force assembly")
    if not isinstance(k, int) or not 1 <= k <= inner.n:
        raise ParamViolation(f"k must be in 1..{inner.n}")
    norm = normalize_symbols(inner)
    b = supported_file_size(norm, k)
    return DressCode(inner=norm, outer=mds_params(norm.theta, b), b=b, k=k)


@dataclass(frozen=True)
class RepairReport:
    """Plan for rebuilding one failed node by verbatim copies.

    ``downloads`` maps each helper to the symbols it serves, sorted by helper
    id; ``planned_seq`` ties the plan to the cluster state it was made for.
    """

    failed_node: int
    downloads: tuple[tuple[int, tuple[int, ...]], ...]
    total_bandwidth: int
    mode: str
    planned_seq: int

    @property
    def helpers(self) -> tuple[int, ...]:
        return tuple(h for h, _ in self.downloads)


class ClusterState:
    """Mutable cluster: per-node stores, liveness flags, bandwidth, event log.

    Every transition (store, fail, repair) appends one `EVENT` line and bumps
    the sequence counter; reads never mutate.  Single writer, any readers.
    """

    def __init__(self, code: DressCode):
        self.code = code
        self.stores: dict[int, dict[int, int]] = {i: {} for i in range(1, code.inner.n + 1)}
        self.alive: dict[int, bool] = {i: True for i in range(1, code.inner.n + 1)}
        self.bandwidth = 0
        self.events: list[str] = []
        self.seq = 0

    def _log(self, kind: str, node: int) -> None:
        self.seq += 1
        self.events.append(f"EVENT {self.seq} {kind} node={node} bw={self.bandwidth}")

    def live_nodes(self) -> tuple[int, ...]:
        return tuple(i for i, up in sorted(self.alive.items()) if up)

    def placement(self) -> dict[int, dict[int, int]]:
        """Deep copy of every node's store, for snapshots and comparisons."""
        return {i: dict(store) for i, store in self.stores.items()}

    def _check_node_id(self, node_id: int) -> None:
        if not isinstance(node_id, int) or node_id not in self.stores:
            raise ParamViolation(f"node id must be in 1..{self.code.inner.n}")


def store_file(code: DressCode, file: Sequence[int] | bytes) -> ClusterState:
    """Encode a B-symbol file and place the codeword per the inner code."""
    data = tuple(file)
    if len(data) != code.b:
        raise LengthMismatch(f"file must be exactly {code.b} symbols, got {len(data)}")
    codeword = mds_encode(code.outer, data)
    cluster = ClusterState(code)
    for node_id in range(1, code.inner.n + 1):
        cluster.stores[node_id] = {s: codeword[s - 1] for s in sorted(code.inner.nodes[node_id - 1])}
        cluster._log("STORE", node_id)
    return cluster


def retrieve_file(cluster: ClusterState, nodes: Iterable[int]) -> bytes:
    """Decode the file from the union of the named live nodes' symbols."""
    wanted = sorted(set(nodes))
    union: dict[int, int] = {}
    for node_id in wanted:
        cluster._check_node_id(node_id)
        if not cluster.alive[node_id]:
            raise DeadNodeContacted(f"node {node_id} is down")
        union.update(cluster.stores[node_id])
    return bytes(mds_decode(cluster.code.outer, union))


def fail_node(cluster: ClusterState, node_id: int) -> ClusterState:
    """Mark a node dead and wipe its store."""
    cluster._check_node_id(node_id)
    if not cluster.alive[node_id]:
        raise AlreadyDead(f"node {node_id} is already down")
    cluster.alive[node_id] = False
    cluster.stores[node_id] = {}
    cluster._log("FAIL", node_id)
    return cluster


def plan_repair(
    code: DressCode, cluster: ClusterState, failed: int, mode: str = STRICT
) -> RepairReport:
    """Choose live helpers for every symbol the failed node held.

    Strict mode requires a distinct helper per symbol (maximum bipartite
    matching, lowest-index helpers preferred); relaxed mode greedily picks
    the lowest-index holder and may reuse helpers.  Bandwidth is one
    transfer per symbol either way.
    """
    if mode not in (STRICT, RELAXED):
        raise ParamViolation("mode must be strict or relaxed")
    if code != cluster.code:
        raise ParamViolation("code does not match the cluster's code")
    cluster._check_node_id(failed)
    if cluster.alive[failed]:
        raise ParamViolation(f"node {failed} is live; only dead nodes are repaired")
    lost = sorted(code.inner.nodes[failed - 1])
    holders: dict[int, list[int]] = {}
    for sym in lost:
        live = [h for h in cluster.live_nodes() if sym in cluster.stores[h]]
        if not live:
            raise UnrepairableSymbol(f"symbol {sym} has no live replica")
        holders[sym] = live

    if mode == STRICT:
        assigned = _match_symbols_to_helpers(lost, holders)
    else:
        assigned = {sym: holders[sym][0] for sym in lost}

    by_helper: dict[int, list[int]] = {}
    for sym, helper in assigned.items():
        by_helper.setdefault(helper, []).append(sym)
    downloads = tuple(
        (helper, tuple(sorted(syms))) for helper, syms in sorted(by_helper.items())
    )
    return RepairReport(
        failed_node=failed,
        downloads=downloads,
        total_bandwidth=len(lost),
        mode=mode,
        planned_seq=cluster.seq,
    )


def _match_symbols_to_helpers(lost: list[int], holders: dict[int, list[int]]) -> dict[int, int]:
    # Augmenting-path maximum matching; symbols and candidate helpers are
    # scanned in ascending order, which makes the plan deterministic.
    helper_of: dict[int, int] = {}
    symbol_of: dict[int, int] = {}

    def try_assign(sym: int, visited: set[int]) -> bool:
        for helper in holders[sym]:
            if helper in visited:
                continue
            visited.add(helper)
            if helper not in symbol_of or try_assign(symbol_of[helper], visited):
                symbol_of[helper] = sym
                helper_of[sym] = helper
                return True
        return False

    for sym in lost:
        if not try_assign(sym, set()):
            raise NoStrictPlan(
                f"no one-symbol-per-helper assignment covers symbol {sym}; try relaxed mode"
            )
    return helper_of


def execute_repair(cluster: ClusterState, report: RepairReport) -> ClusterState:
    """Copy the planned symbols onto a replacement node and bring it up."""
    if report.planned_seq != cluster.seq:
        raise StaleReport("cluster changed since this repair was planned")
    failed = report.failed_node
    if cluster.alive[failed]:
        raise StaleReport(f"node {failed} is live; plan no longer applies")
    rebuilt: dict[int, int] = {}
    for helper, syms in report.downloads:
        for sym in syms:
            rebuilt[sym] = cluster.stores[helper][sym]
    if set(rebuilt) != set(cluster.code.inner.nodes[failed - 1]):
        raise InternalCheckError("repair plan does not cover the lost symbol set")
    cluster.stores[failed] = dict(sorted(rebuilt.items()))
    cluster.alive[failed] = True
    cluster.bandwidth += report.total_bandwidth
    cluster._log("REPAIR", failed)
    return cluster


def failure_tolerance_check(code: DressCode) -> int:
    """Largest f such that every simultaneous f-node failure leaves all lost
    symbols replicated somewhere live and >= B symbols reachable.

    Exhaustive over failure subsets; fine at desk scale.
    """
    node_ids = range(1, code.inner.n + 1)
    sets = {i: code.inner.nodes[i - 1] for i in node_ids}
    for f in range(1, code.inner.n + 1):
        for failed in combinations(node_ids, f):
            down = set(failed)
            live_union = frozenset().union(*(sets[i] for i in node_ids if i not in down)) \
                if len(down) < code.inner.n else frozenset()
            lost = frozenset().union(*(sets[i] for i in failed))
            if not lost <= live_union or len(live_union) < code.b:
                return f - 1
    return code.inner.n
