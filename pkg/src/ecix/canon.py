"""Canonical labeling by equitable partition refinement and a pruned
individualization search.

The canonical form of a graph is the largest leaf code reached by the search,
where a leaf is a discrete ordered partition and its code packs the relabeled
adjacency rows into one integer. Subtrees are skipped when an automorphism
already found maps them onto an explored sibling.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph import Graph, iter_bits

CanonicalKey = tuple[int, int]


def _mask(cell: Sequence[int]) -> int:
    acc = 0
    for v in cell:
        acc |= 1 << v
    return acc


def refine(rows: Sequence[int], cells: list[list[int]], splitters: Optional[list[int]] = None) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    ``splitters`` are vertex masks still to be processed (default: every
    cell). Fragments of a split cell are ordered by neighbor count into the
    splitter and queued in that order, so the result depends only on the
    graph and the input partition, never on vertex names.
    """
    queue = [_mask(c) for c in cells] if splitters is None else list(splitters)
    n = len(rows)
    head = 0
    while head < len(queue) and len(cells) < n:
        wmask = queue[head]
        head += 1
        new_cells: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for x in c:
                cnt = (rows[x] & wmask).bit_count()
                if cnt in groups:
                    groups[cnt].append(x)
                else:
                    groups[cnt] = [x]
            if len(groups) == 1:
                new_cells.append(c)
                continue
            for cnt in sorted(groups):
                frag = groups[cnt]
                new_cells.append(frag)
                queue.append(_mask(frag))
        cells = new_cells
    return cells


def _code(rows: Sequence[int], lab: Sequence[int]) -> int:
    n = len(lab)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    code = 0
    for v in lab:
        r = rows[v]
        acc = 0
        while r:
            low = r & -r
            acc |= 1 << pos[low.bit_length() - 1]
            r ^= low
        code = (code << n) | acc
    return code


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


class _Search:
    __slots__ = ("rows", "n", "first_code", "first_lab", "best_code", "best_lab", "gens")

    def __init__(self, rows: Sequence[int]) -> None:
        self.rows = rows
        self.n = len(rows)
        self.first_code = -1
        self.first_lab: list[int] = []
        self.best_code = -1
        self.best_lab: list[int] = []
        self.gens: list[tuple[int, ...]] = []

    def _automorphism(self, lab_a: list[int], lab_b: list[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(lab_a, lab_b):
            perm[a] = b
        gen = tuple(perm)
        if gen != tuple(range(self.n)) and gen not in self.gens:
            self.gens.append(gen)

    def _leaf(self, cells: list[list[int]]) -> None:
        lab = [c[0] for c in cells]
        code = _code(self.rows, lab)
        if self.first_code < 0:
            self.first_code, self.first_lab = code, lab
            self.best_code, self.best_lab = code, lab
            return
        if code == self.first_code:
            self._automorphism(self.first_lab, lab)
        if code > self.best_code:
            self.best_code, self.best_lab = code, lab
        elif code == self.best_code and code != self.first_code:
            self._automorphism(self.best_lab, lab)

    def run(self, cells: list[list[int]], prefix: tuple[int, ...], splitters: Optional[list[int]] = None) -> None:
        cells = refine(self.rows, cells, splitters)
        if len(cells) == self.n:
            self._leaf(cells)
            return
        # target: first smallest non-singleton cell
        t = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        done: list[int] = []
        for w in sorted(cells[t]):
            if done:
                stab = [g for g in self.gens if all(g[x] == x for x in prefix)]
                if stab:
                    roots = _orbit_roots(self.n, stab)
                    if any(roots[w] == roots[d] for d in done):
                        continue
            child = cells[:t] + [[w], [x for x in cells[t] if x != w]] + cells[t + 1 :]
            # the parent partition is equitable, so only {w} can split further
            self.run(child, prefix + (w,), [1 << w])
            done.append(w)


def canonical_labeling(g: Graph) -> tuple[int, list[int], list[tuple[int, ...]]]:
    """Return ``(code, lab, generators)``.

    ``lab[i]`` is the vertex placed at canonical position ``i``; ``generators``
    are the automorphisms met during the search (not guaranteed to generate
    the full group).
    """
    s = _Search(g.rows)
    s.run([list(range(g.n))], ())
    return s.best_code, s.best_lab, s.gens


def canonical_key(g: Graph) -> CanonicalKey:
    """Key equal for isomorphic graphs and distinct otherwise; ordered by (n, code)."""
    code, _, _ = canonical_labeling(g)
    return (g.n, code)


def canonical_form(g: Graph) -> tuple[CanonicalKey, Graph]:
    code, lab, _ = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return (g.n, code), g.relabel(perm)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.m == b.m and canonical_key(a) == canonical_key(b)
