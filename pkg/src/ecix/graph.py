"""Simple undirected graphs stored as adjacency bitrows, plus the distance
machinery behind eccentricities and the eccentric connectivity index."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

MAX_ORDER = 10**6


class GraphError(ValueError):
    """Malformed graph input (bad endpoint, self-loop, bad order)."""


class DisconnectedGraphError(GraphError):
    """Raised where eccentricity is undefined because the graph is disconnected."""


def _popcount(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``rows[v]`` is an int whose bit ``u`` is set iff ``u`` and ``v`` are adjacent.
    Use :func:`build_graph` or :meth:`Graph.from_rows` instead of the raw
    constructor; the latter trusts its input.
    """

    n: int
    rows: tuple[int, ...]
    m: int = field(default=-1, compare=False)

    def __post_init__(self) -> None:
        if self.m < 0:
            object.__setattr__(self, "m", sum(_popcount(r) for r in self.rows) // 2)

    @classmethod
    def from_rows(cls, rows: Sequence[int], check: bool = True) -> "Graph":
        rows = tuple(rows)
        n = len(rows)
        if check:
            if n < 1:
                raise GraphError("graph must have at least one vertex")
            full = (1 << n) - 1
            for v, r in enumerate(rows):
                if r & ~full:
                    raise GraphError(f"row {v} references a vertex outside 0..{n - 1}")
                if (r >> v) & 1:
                    raise GraphError(f"self-loop at vertex {v}")
                for u in iter_bits(r):
                    if not (rows[u] >> v) & 1:
                        raise GraphError(f"adjacency not symmetric for pair ({v}, {u})")
        return cls(n, rows)

    def degree(self, v: int) -> int:
        return _popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [_popcount(r) for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u]) if u < v]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        new = [0] * self.n
        for v, r in enumerate(self.rows):
            acc = 0
            for u in iter_bits(r):
                acc |= 1 << perm[u]
            new[perm[v]] = acc
        return Graph(self.n, tuple(new), self.m)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={self.edges()})"


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph of order ``n`` from unordered pairs; duplicates collapse."""
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"order must be a positive integer, got {n!r}")
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")


def bfs_distances(g: Graph, v: int) -> list[Optional[int]]:
    """Shortest-path edge counts from ``v``; ``None`` marks unreachable vertices."""
    _check_vertex(g, v)
    dist: list[Optional[int]] = [None] * g.n
    dist[v] = 0
    seen = 1 << v
    frontier = seen
    d = 0
    rows = g.rows
    while frontier:
        d += 1
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        nxt &= ~seen
        for u in iter_bits(nxt):
            dist[u] = d
        seen |= nxt
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    seen = frontier = 1
    rows = g.rows
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def _eccentricities(n: int, rows: Sequence[int]) -> Optional[list[int]]:
    # Balls grow one radius per round: B_{d+1}(v) = union of B_d(u) over closed N(v).
    full = (1 << n) - 1
    closed = [rows[v] | (1 << v) for v in range(n)]
    ball = [1 << v for v in range(n)]
    ecc = [0] * n
    pending = [v for v in range(n) if ball[v] != full]
    d = 0
    while pending:
        d += 1
        new_ball = list(ball)
        still = []
        for v in pending:
            acc = 0
            for u in iter_bits(closed[v]):
                acc |= ball[u]
            if acc == ball[v]:
                return None
            new_ball[v] = acc
            if acc == full:
                ecc[v] = d
            else:
                still.append(v)
        ball = new_ball
        pending = still
    return ecc


def eccentricities(g: Graph) -> list[int]:
    """Eccentricity of every vertex; a single vertex has eccentricity 0."""
    ecc = _eccentricities(g.n, g.rows)
    if ecc is None:
        raise DisconnectedGraphError("eccentricity is undefined on a disconnected graph")
    return ecc


def eci(g: Graph) -> int:
    """Eccentric connectivity index: sum of degree times eccentricity."""
    ecc = eccentricities(g)
    return sum(_popcount(r) * e for r, e in zip(g.rows, ecc))


@dataclass(frozen=True)
class EciRow:
    vertex: int
    degree: int
    eccentricity: int

    @property
    def product(self) -> int:
        return self.degree * self.eccentricity


@dataclass(frozen=True)
class EciReport:
    rows: tuple[EciRow, ...]

    @property
    def total(self) -> int:
        return sum(r.product for r in self.rows)


def eci_report(g: Graph) -> EciReport:
    ecc = eccentricities(g)
    return EciReport(tuple(EciRow(v, g.degree(v), ecc[v]) for v in range(g.n)))


def pending_count(g: Graph) -> int:
    return sum(1 for r in g.rows if _popcount(r) == 1)


def dominating_count(g: Graph) -> int:
    target = g.n - 1
    return sum(1 for r in g.rows if _popcount(r) == target)


def diameter(g: Graph) -> int:
    return max(eccentricities(g))
