"""Fractional repetition code domain types, verification, and MBR bound arithmetic.

Node ids are 1-based throughout the package; symbol ids are non-negative
integers (constructions may emit 0, ``normalize_symbols`` gives the canonical
1..theta view).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InternalCheckError, ParamViolation

STRONG = "strong"
WEAK = "weak"
IRREGULAR = "irregular"


@dataclass(frozen=True)
class FrCode:
    """A placement of theta symbols on n storage nodes.

    ``nodes[i]`` holds the symbol set of node ``i + 1``.  ``nominal_rho`` is
    the replication degree the code intends to have; ``verify_code`` reports
    whether every symbol actually reaches it.
    """

    n: int
    nodes: tuple[frozenset[int], ...]
    symbols: frozenset[int]
    nominal_rho: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(frozenset(s) for s in self.nodes))
        object.__setattr__(self, "symbols", frozenset(self.symbols))
        if not isinstance(self.n, int) or self.n < 2:
            raise ParamViolation("n must be an integer >= 2")
        if len(self.nodes) != self.n:
            raise ParamViolation("n must equal the number of node sets")
        if not isinstance(self.nominal_rho, int) or self.nominal_rho < 1:
            raise ParamViolation("nominal_rho must be a positive integer")
        union: set[int] = set()
        for idx, node in enumerate(self.nodes, start=1):
            if not node:
                raise ParamViolation(f"node {idx} is empty")
            for sym in node:
                if not isinstance(sym, int) or sym < 0:
                    raise ParamViolation(f"node {idx} has a non-integer or negative symbol id")
            union |= node
        if union != self.symbols:
            raise ParamViolation("symbols must equal the union of all node sets")
        if not self.symbols:
            raise ParamViolation("theta must be >= 1")

    @classmethod
    def from_nodes(cls, node_sets: Iterable[Iterable[int]], nominal_rho: int) -> "FrCode":
        """Build a code from per-node symbol collections, rejecting duplicates."""
        nodes = []
        for idx, raw in enumerate(node_sets, start=1):
            items = list(raw)
            fs = frozenset(items)
            if len(fs) != len(items):
                raise ParamViolation(f"node {idx} contains duplicate symbols")
            nodes.append(fs)
        symbols = frozenset().union(*nodes) if nodes else frozenset()
        return cls(n=len(nodes), nodes=tuple(nodes), symbols=symbols, nominal_rho=nominal_rho)

    @property
    def theta(self) -> int:
        return len(self.symbols)

    def node(self, node_id: int) -> frozenset[int]:
        """Symbol set of a node, by 1-based id."""
        if not 1 <= node_id <= self.n:
            raise ParamViolation(f"node id must be in 1..{self.n}")
        return self.nodes[node_id - 1]


@dataclass(frozen=True)
class VerificationReport:
    """Observed replication structure of a code.

    ``delta_per_node[i]`` is d_max minus the size of node ``i + 1`` (its order
    of weakness); ``delta_total`` is their sum.
    """

    classification: str
    rho_observed: dict[int, int]
    d_max: int
    node_sizes: tuple[int, ...]
    delta_per_node: tuple[int, ...]
    delta_total: int


@dataclass(frozen=True)
class DssParams:
    """System parameters (n, k, d, alpha, beta) of a distributed storage system."""

    n: int
    k: int
    d: int
    alpha: int
    beta: int

    def __post_init__(self) -> None:
        for name in ("n", "k", "d", "alpha", "beta"):
            if not isinstance(getattr(self, name), int):
                raise ParamViolation(f"{name} must be an integer")
        if self.n < 2:
            raise ParamViolation("n must be >= 2")
        if self.k < 1:
            raise ParamViolation("k must be >= 1")
        if self.k > self.d:
            raise ParamViolation("k must be <= d")
        if self.d > self.n - 1:
            raise ParamViolation("d must be <= n-1")
        if self.alpha < 1:
            raise ParamViolation("alpha must be >= 1")
        if self.beta < 1:
            raise ParamViolation("beta must be >= 1")


def validate_dss_params(n: int, k: int, d: int) -> DssParams:
    """Check k <= d <= n-1 and return params at the beta=1 MBR point (alpha=d)."""
    return DssParams(n=n, k=k, d=d, alpha=d, beta=1)


def mbr_capacity(n: int, k: int, d: int) -> int:
    """Storage capacity kd - k(k-1)/2 of an (n,k,d) system at beta=1."""
    validate_dss_params(n, k, d)
    return k * d - k * (k - 1) // 2


def cut_set_bound(k: int, d: int, alpha: int, beta: int) -> int:
    """Max-flow bound on the file size: sum over i<k of min(alpha, (d-i)*beta)."""
    _require_positive(alpha=alpha, beta=beta)
    if not isinstance(k, int) or not isinstance(d, int):
        raise ParamViolation("k and d must be integers")
    if k > d:
        raise ParamViolation("k must be <= d")
    return sum(min(alpha, (d - i) * beta) for i in range(k))


def mbr_file_size(k: int, d: int, beta: int) -> int:
    """File size (kd - k(k-1)/2) * beta stored at the minimum-bandwidth point."""
    _require_positive(beta=beta)
    if not isinstance(k, int) or not isinstance(d, int):
        raise ParamViolation("k and d must be integers")
    if k > d:
        raise ParamViolation("k must be <= d")
    return (k * d - k * (k - 1) // 2) * beta


def verify_code(code: FrCode) -> VerificationReport:
    """Count the replication of every symbol and classify the code.

    strong: every symbol replicated exactly nominal_rho times and all nodes
    the same size; weak: uniform replication but uneven node sizes;
    irregular: anything else.
    """
    counts: Counter[int] = Counter()
    for node in code.nodes:
        counts.update(node)
    node_sizes = tuple(len(node) for node in code.nodes)
    d_max = max(node_sizes)
    delta_per_node = tuple(d_max - size for size in node_sizes)
    delta_total = sum(delta_per_node)

    uniform = all(c == code.nominal_rho for c in counts.values())
    if uniform and delta_total == 0:
        classification = STRONG
    elif uniform:
        classification = WEAK
    else:
        classification = IRREGULAR

    if sum(node_sizes) != code.n * d_max - delta_total:
        raise InternalCheckError("sum of node sizes must equal n*d_max - delta")
    if uniform and code.nominal_rho * code.theta != code.n * d_max - delta_total:
        raise InternalCheckError("rho*theta must equal n*d - delta for uniform codes")

    return VerificationReport(
        classification=classification,
        rho_observed=dict(counts),
        d_max=d_max,
        node_sizes=node_sizes,
        delta_per_node=delta_per_node,
        delta_total=delta_total,
    )


def supported_file_size(code: FrCode, k: int) -> int:
    """Largest B guaranteed retrievable from any k nodes.

    Exhaustive minimum of the union size over all C(n, k) node subsets; this
    is the oracle the rest of the package relies on, so no sampling.
    """
    if not isinstance(k, int) or not 1 <= k <= code.n:
        raise ParamViolation(f"k must be in 1..{code.n}")
    return min(len(frozenset().union(*subset)) for subset in combinations(code.nodes, k))


def normalize_symbols(code: FrCode) -> FrCode:
    """Relabel symbols bijectively to 1..theta, ascending in the original ids."""
    mapping = {old: new for new, old in enumerate(sorted(code.symbols), start=1)}
    nodes = tuple(frozenset(mapping[s] for s in node) for node in code.nodes)
    return FrCode(
        n=code.n,
        nodes=nodes,
        symbols=frozenset(range(1, code.theta + 1)),
        nominal_rho=code.nominal_rho,
    )


def _require_positive(**values: int) -> None:
    for name, value in values.items():
        if not isinstance(value, int) or value < 1:
            raise ParamViolation(f"{name} must be >= 1")
