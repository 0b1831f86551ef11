"""Exhaustive generation of graphs up to isomorphism by canonical augmentation.

Graphs of order k+1 are grown from one representative per isomorphism class of
order k by adding a vertex with every possible neighborhood. A child is kept
only when its new vertex is a canonical deletion vertex: it has the smallest
(degree, neighbor-degree multiset) invariant, and among vertices tied on that
invariant its removal gives the smallest canonical key. The parent's class is
then determined by the child, so children of different parents never collide;
children of one parent are deduplicated by their canonical code.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from enum import Enum
from functools import partial
from typing import Iterable, Iterator, Optional, Sequence

from .canon import canonical_key, canonical_labeling
from .graph import Graph, is_connected, iter_bits

DEFAULT_BUDGET = 9

# Graphs of order n, connected / all (OEIS A001349 / A000088).
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571)
ALL_COUNTS = (1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168)


class BudgetExceeded(RuntimeError):
    pass


class EmptyClassError(ValueError):
    pass


class Dominating(str, Enum):
    ANY = "any"
    NONE = "exactly-0"
    ONE = "exactly-1"
    MANY = "at-least-2"

    def accepts(self, count: int) -> bool:
        if self is Dominating.ANY:
            return True
        if self is Dominating.NONE:
            return count == 0
        if self is Dominating.ONE:
            return count == 1
        return count >= 2


@dataclass(frozen=True)
class ClassFilter:
    n: int
    pending: Optional[int] = None
    edges: Optional[int] = None
    dominating: Dominating = Dominating.ANY

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"order must be >= 1, got {self.n}")
        if self.pending is not None and not 0 <= self.pending <= self.n - 1:
            raise ValueError(f"pending count {self.pending} outside 0..{self.n - 1}")
        if self.edges is not None:
            hi = self.n * (self.n - 1) // 2
            if not self.n - 1 <= self.edges <= hi:
                raise ValueError(f"edge count {self.edges} outside {self.n - 1}..{hi} for a connected graph")
        object.__setattr__(self, "dominating", Dominating(self.dominating))

    def matches(self, g: Graph) -> bool:
        if g.n != self.n:
            return False
        if self.edges is not None and g.m != self.edges:
            return False
        if self.pending is None and self.dominating is Dominating.ANY:
            return True
        degs = g.degrees()
        if self.pending is not None and degs.count(1) != self.pending:
            return False
        return self.dominating.accepts(degs.count(self.n - 1))

    def describe(self) -> str:
        parts = [f"n={self.n}"]
        if self.pending is not None:
            parts.append(f"p={self.pending}")
        if self.edges is not None:
            parts.append(f"m={self.edges}")
        if self.dominating is not Dominating.ANY:
            parts.append(f"dominating={self.dominating.value}")
        return ",".join(parts)


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("ECIX_BUDGET")
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"ECIX_BUDGET must be an integer, got {raw!r}") from None


def estimated_class_count(n: int) -> int:
    if n <= len(ALL_COUNTS):
        return ALL_COUNTS[n - 1]
    return 2 ** math.comb(n, 2) // math.factorial(n)


def check_budget(n: int, budget: Optional[int] = None) -> None:
    if budget is None:
        budget = budget_from_env()
    if n > budget:
        raise BudgetExceeded(
            f"order {n} exceeds the enumeration budget {budget}; "
            f"roughly {estimated_class_count(n)} isomorphism classes would be generated"
        )


def _sorted_nbr_degrees(rows: Sequence[int], degs: Sequence[int], v: int) -> tuple[int, ...]:
    return tuple(sorted(degs[u] for u in iter_bits(rows[v])))


def _children(parent: tuple[int, ...], parent_code: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield (canonical code, canonical rows) for each accepted child of ``parent``."""
    k = len(parent)
    pdeg = [r.bit_count() for r in parent]
    seen: set[int] = set()
    bit_new = 1 << k
    for s in range(1 << k):
        dv = s.bit_count()
        degs = [pdeg[u] + ((s >> u) & 1) for u in range(k)]
        if dv > min(degs, default=dv):
            continue
        rows = [parent[u] | (bit_new if (s >> u) & 1 else 0) for u in range(k)]
        rows.append(s)
        degs.append(dv)
        ties = [u for u in range(k) if degs[u] == dv]
        if ties:
            inv_v = _sorted_nbr_degrees(rows, degs, k)
            level = []
            rejected = False
            for u in ties:
                inv = _sorted_nbr_degrees(rows, degs, u)
                if inv < inv_v:
                    rejected = True
                    break
                if inv == inv_v:
                    level.append(u)
            if rejected:
                continue
            # the parent must be the smallest deletion among invariant ties
            if any(canonical_key(_delete_vertex(rows, u))[1] < parent_code for u in level):
                continue
        g = Graph(k + 1, tuple(rows))
        code, lab, _ = canonical_labeling(g)
        if code in seen:
            continue
        seen.add(code)
        yield code, _relabeled_rows(rows, lab)


def _delete_vertex(rows: Sequence[int], u: int) -> Graph:
    low = (1 << u) - 1
    out = []
    for v, r in enumerate(rows):
        if v == u:
            continue
        out.append((r & low) | ((r >> (u + 1)) << u))
    return Graph(len(out), tuple(out))


def _relabeled_rows(rows: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    n = len(lab)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    out = [0] * n
    for i, v in enumerate(lab):
        acc = 0
        for u in iter_bits(rows[v]):
            acc |= 1 << pos[u]
        out[i] = acc
    return tuple(out)


_LEVELS: dict[int, list[tuple[int, tuple[int, ...]]]] = {1: [(0, (0,))]}
_CACHE_MAX_ORDER = 8


def _expand(parents: Iterable[tuple[int, tuple[int, ...]]]) -> Iterator[tuple[int, tuple[int, ...]]]:
    for code, rows in parents:
        yield from _children(rows, code)


def _expand_chunk(chunk: list[tuple[int, tuple[int, ...]]]) -> list[tuple[int, tuple[int, ...]]]:
    return list(_expand(chunk))


def all_graphs_level(n: int) -> list[tuple[int, tuple[int, ...]]]:
    """All graphs of order ``n`` (connected or not) as (code, canonical rows), cached."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n not in _LEVELS:
        prev = all_graphs_level(n - 1)
        level = list(_expand(prev))
        if n > _CACHE_MAX_ORDER:
            return level
        _LEVELS[n] = level
    return _LEVELS[n]


def _stream_level(n: int, jobs: int = 1) -> Iterator[tuple[int, tuple[int, ...]]]:
    if n == 1 or n <= _CACHE_MAX_ORDER:
        yield from all_graphs_level(n)
        return
    parents = all_graphs_level(n - 1)
    if jobs <= 1:
        yield from _expand(parents)
        return
    import multiprocessing as mp

    size = max(1, len(parents) // (jobs * 8))
    chunks = [parents[i : i + size] for i in range(0, len(parents), size)]
    with mp.get_context("fork").Pool(jobs) as pool:
        for part in pool.imap(_expand_chunk, chunks):
            yield from part


def enumerate_connected(
    flt: ClassFilter | int,
    budget: Optional[int] = None,
    jobs: int = 1,
    sort: bool = False,
) -> Iterator[Graph]:
    """Yield each connected isomorphism class matching ``flt`` once, canonically labeled."""
    if isinstance(flt, int):
        flt = ClassFilter(flt)
    check_budget(flt.n, budget)
    stream = _stream_level(flt.n, jobs)
    if sort:
        stream = iter(sorted(stream))
    for _, rows in stream:
        g = Graph(flt.n, rows)
        if is_connected(g) and flt.matches(g):
            yield g


def count_connected(flt: ClassFilter | int, budget: Optional[int] = None, jobs: int = 1) -> int:
    return sum(1 for _ in enumerate_connected(flt, budget=budget, jobs=jobs))


def enumerate_connected_naive(n: int) -> list[Graph]:
    """Reference path: every labeled graph on ``n`` vertices, deduplicated by key.

    Exponential in C(n, 2); intended for n <= 6.
    """
    if n > 7:
        raise BudgetExceeded(f"naive enumeration of order {n} would visit 2^{math.comb(n, 2)} labeled graphs")
    pairs = list(itertools.combinations(range(n), 2))
    found: dict[tuple[int, int], Graph] = {}
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if (mask >> i) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = Graph(n, tuple(rows))
        if not is_connected(g):
            continue
        key = canonical_key(g)
        if key not in found:
            found[key] = g
    return [found[k] for k in sorted(found)]
