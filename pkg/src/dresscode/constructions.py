"""Code-generating constructions.

Repetition-degree-2 codes come from graphs (one packet per edge); the
circulant family makes the regular case deterministic for every feasible
(n, d), the partial regular graph covers the n, d both odd gap, and the ring
placement generalizes both.  Higher repetition degrees come from the modular
formula and from projective planes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyGraph, InternalCheckError, ParamViolation
from .frcode import FrCode


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph as a symmetric 0/1 adjacency matrix, zero diagonal."""

    n: int
    adj: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.adj, dtype=np.int64)
        if a.shape != (self.n, self.n):
            raise ParamViolation("adjacency matrix must be n x n")
        if not np.isin(a, (0, 1)).all():
            raise ParamViolation("adjacency entries must be 0 or 1")
        if (np.diag(a) != 0).any():
            raise ParamViolation("adjacency diagonal must be zero")
        if (a != a.T).any():
            raise ParamViolation("adjacency matrix must be symmetric")
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)

    def degrees(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.adj.sum(axis=1))

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as 1-based (i, j) pairs, i < j, lexicographically ordered."""
        rows, cols = np.nonzero(np.triu(self.adj, k=1))
        return tuple((int(i) + 1, int(j) + 1) for i, j in zip(rows, cols))


@dataclass(frozen=True)
class CirculantSpec:
    """First row (a_0 .. a_{n-1}) of a circulant adjacency matrix.

    a_0 = 0 and a_j = a_{n-j} so the matrix it generates is a valid
    undirected adjacency matrix.
    """

    n: int
    first_row: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "first_row", tuple(int(x) for x in self.first_row))
        if len(self.first_row) != self.n:
            raise ParamViolation("first_row must have length n")
        if any(x not in (0, 1) for x in self.first_row):
            raise ParamViolation("first_row entries must be 0 or 1")
        if self.first_row[0] != 0:
            raise ParamViolation("a_0 must be 0")
        for j in range(1, self.n):
            if self.first_row[j] != self.first_row[self.n - j]:
                raise ParamViolation("first_row support must be symmetric (a_j = a_{n-j})")

    @property
    def weight(self) -> int:
        return sum(self.first_row)

    def matrix(self) -> np.ndarray:
        """Full circulant: entry (i, j) is a_{(j-i) mod n}."""
        row = np.array(self.first_row, dtype=np.int64)
        return np.stack([np.roll(row, i) for i in range(self.n)])


@dataclass(frozen=True)
class PermutationMatrix:
    """Permutation pi on {1..size}; ``mapping[i-1] == pi(i)``."""

    size: int
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mapping", tuple(int(x) for x in self.mapping))
        if len(self.mapping) != self.size:
            raise ParamViolation("mapping must have length size")
        if sorted(self.mapping) != list(range(1, self.size + 1)):
            raise ParamViolation("mapping must be a bijection on 1..size")

    def matrix(self) -> np.ndarray:
        m = np.zeros((self.size, self.size), dtype=np.int64)
        for i, target in enumerate(self.mapping):
            m[i, target - 1] = 1
        return m

    def zero_extended(self, size: int) -> np.ndarray:
        """This matrix in the top-left block of a size x size zero matrix."""
        if size < self.size:
            raise ParamViolation("extended size must be >= size")
        out = np.zeros((size, size), dtype=np.int64)
        out[: self.size, : self.size] = self.matrix()
        return out


def circulant_regular_graph(n: int, d: int) -> Graph:
    """Deterministic d-regular graph on n vertices (requires nd even).

    Vertex i is adjacent to i +- 1, ..., i +- floor(d/2) (mod n); for odd d
    (then n is even) the antipodal vertex i + n/2 is added.
    """
    if not isinstance(n, int) or not isinstance(d, int):
        raise ParamViolation("n and d must be integers")
    if n < 2:
        raise ParamViolation("n must be >= 2")
    if not 1 <= d <= n - 1:
        raise ParamViolation("d must satisfy 1 <= d <= n-1")
    if (n * d) % 2 != 0:
        raise ParamViolation("nd must be even")
    adj = np.zeros((n, n), dtype=np.int64)
    idx = np.arange(n)
    for off in range(1, d // 2 + 1):
        adj[idx, (idx + off) % n] = 1
        adj[idx, (idx - off) % n] = 1
    if d % 2 == 1:
        adj[idx, (idx + n // 2) % n] = 1
    g = Graph(n=n, adj=adj)
    if g.degrees() != (d,) * n:
        raise InternalCheckError("circulant graph is not d-regular")
    return g


def code_from_graph(g: Graph) -> FrCode:
    """Turn a graph into a repetition-degree-2 code, one packet per edge.

    Edges are labeled 1.. in lexicographic (min, max) endpoint order and each
    node stores the labels of its incident edges.
    """
    edge_list = g.edges()
    if not edge_list:
        raise EmptyGraph("graph has no edges")
    nodes: list[set[int]] = [set() for _ in range(g.n)]
    for label, (i, j) in enumerate(edge_list, start=1):
        nodes[i - 1].add(label)
        nodes[j - 1].add(label)
    return FrCode.from_nodes(nodes, nominal_rho=2)


def regular_graph_code(n: int, d: int) -> FrCode:
    """Strong code with theta = nd/2 from the circulant d-regular graph."""
    return code_from_graph(circulant_regular_graph(n, d))


def modular_code(n: int, t: int, rho: int) -> FrCode:
    """The n sets { t^(i-1) + j mod (n+1) : 1 <= i <= rho } for j = 0..n-1.

    Emitted literally, so symbols are residues mod n+1 including 0; callers
    normalize if they want 1..theta ids.  Requires t^(rho-1) < n, which also
    forces the base residues to be pairwise distinct.
    """
    if not isinstance(n, int) or not isinstance(t, int) or not isinstance(rho, int):
        raise ParamViolation("n, t and rho must be integers")
    if t < 2:
        raise ParamViolation("t must be >= 2")
    if rho < 2:
        raise ParamViolation("rho must be >= 2")
    if t ** (rho - 1) >= n:
        raise ParamViolation("t**(rho-1) must be < n")
    base = [pow(t, i, n + 1) for i in range(rho)]
    if len(set(base)) != rho:
        raise ParamViolation("powers of t must be distinct residues mod n+1")
    nodes = [frozenset((p + j) % (n + 1) for p in base) for j in range(n)]
    return FrCode.from_nodes(nodes, nominal_rho=rho)


def circulant_from_polynomial(n: int, d: int) -> CirculantSpec:
    """First row with 1s at exponents 1..(d-1)/2 and n-(d-1)/2..n-1 (weight d-1)."""
    _check_odd_pair(n, d)
    half = (d - 1) // 2
    row = [0] * n
    for e in range(1, half + 1):
        row[e] = 1
        row[n - e] = 1
    return CirculantSpec(n=n, first_row=tuple(row))


def half_shift_matrix(n: int) -> PermutationMatrix:
    """Involution on n-1 symbols swapping the two halves: pi(i) = i +- (n-1)/2.

    ``zero_extended(n)`` gives the n x n form with an all-zero last row and
    column, ready to be added to a circulant.
    """
    if not isinstance(n, int) or n % 2 == 0 or n < 3:
        raise ParamViolation("n must be odd and >= 3")
    half = (n - 1) // 2
    mapping = tuple(i + half if i <= half else i - half for i in range(1, n))
    return PermutationMatrix(size=n - 1, mapping=mapping)


def partial_regular_graph(n: int, d: int) -> Graph:
    """Graph with n-1 vertices of degree d and one (the last) of degree d-1.

    Mod-2 sum of the weight-(d-1) circulant and the zero-extended half-shift
    matrix; exists exactly when n and d are both odd.
    """
    _check_odd_pair(n, d)
    circ = circulant_from_polynomial(n, d).matrix()
    shift = half_shift_matrix(n).zero_extended(n)
    if (circ & shift).any():
        raise InternalCheckError("half-shift entries overlap the circulant support")
    g = Graph(n=n, adj=(circ + shift) % 2)
    if g.degrees() != (d,) * (n - 1) + (d - 1,):
        raise InternalCheckError("partial regular graph has a wrong degree sequence")
    return g


def wfr_from_prg(n: int, d: int) -> FrCode:
    """Weak code with theta = (nd-1)/2 from the partial regular graph."""
    return code_from_graph(partial_regular_graph(n, d))


def ring_code(n: int, theta: int) -> FrCode:
    """Round-robin placement of theta packets into the n gaps of a node ring.

    Packet p lands in gap (p-1) mod n, and gap e is shared by the two
    adjacent nodes e+1 and (e+1 mod n)+1, so every packet is stored twice.
    Strong when n divides theta, weak otherwise.  theta >= n-1 keeps every
    node non-empty.
    """
    if not isinstance(n, int) or not isinstance(theta, int):
        raise ParamViolation("n and theta must be integers")
    if n < 3:
        raise ParamViolation("n must be >= 3")
    if theta < n - 1:
        raise ParamViolation("theta must be >= n-1 so every node stores a packet")
    gaps: list[list[int]] = [[] for _ in range(n)]
    for p in range(1, theta + 1):
        gaps[(p - 1) % n].append(p)
    nodes = []
    for i in range(1, n + 1):
        own = gaps[i - 1] + gaps[(i - 2) % n]
        nodes.append(frozenset(own))
    return FrCode.from_nodes(nodes, nominal_rho=2)


def projective_plane_code(m: int) -> FrCode:
    """Lines of the order-m projective plane as nodes, points as symbols.

    n = theta = m^2 + m + 1 with replication degree and node size both m+1.
    Points are 1-dimensional subspaces of the 3-dimensional space over the
    m-element field; only prime m is supported.
    """
    if not isinstance(m, int) or not _is_prime(m):
        raise ParamViolation("m must be a prime")
    points = _projective_points(m)
    ids = {vec: idx for idx, vec in enumerate(points, start=1)}
    nodes = []
    for a in points:
        line = frozenset(
            ids[x] for x in points if (a[0] * x[0] + a[1] * x[1] + a[2] * x[2]) % m == 0
        )
        nodes.append(line)
    code = FrCode.from_nodes(nodes, nominal_rho=m + 1)
    if code.n != code.theta or code.n != m * m + m + 1:
        raise InternalCheckError("projective plane has a wrong point or line count")
    return code


def _projective_points(m: int) -> list[tuple[int, int, int]]:
    # Canonical representatives (first nonzero coordinate scaled to 1), in
    # lexicographic order; for m = 2 this numbers the nonzero bit-vectors 1..7.
    points = []
    for a in range(m):
        for b in range(m):
            for c in range(m):
                vec = (a, b, c)
                if vec == (0, 0, 0):
                    continue
                first = next(x for x in vec if x != 0)
                if first == 1:
                    points.append(vec)
    return points


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    return all(m % f != 0 for f in range(2, int(m**0.5) + 1))


def _check_odd_pair(n: int, d: int) -> None:
    if not isinstance(n, int) or not isinstance(d, int):
        raise ParamViolation("n and d must be integers")
    if n % 2 == 0 or d % 2 == 0:
        raise ParamViolation("n and d must both be odd")
    if not 3 <= d <= n - 2:
        raise ParamViolation("d must satisfy 3 <= d <= n-2")
