"""Constructors for the named extremal graph families.

Every family has a fixed labeling so that constructed graphs are reproducible;
membership tests elsewhere compare canonical keys, never labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import Graph, build_graph


class FamilyError(ValueError):
    pass


# name -> parameters it requires besides n
FAMILIES: dict[str, tuple[str, ...]] = {
    "complete": (),
    "path": (),
    "cycle": (),
    "wheel": (),
    "matching-reduced": (),
    "complete-split": ("x",),
    "pendant-star": ("p",),
    "clique-path": ("d",),
    "clique-path-partial": ("d", "k"),
    "conjecture-exception": ("i",),
}

ALIASES = {
    "K": "complete",
    "P": "path",
    "C": "cycle",
    "W": "wheel",
    "M": "matching-reduced",
    "S": "complete-split",
    "H": "pendant-star",
    "G": "clique-path",
    "g": "clique-path-partial",
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family member. Only the parameters the family uses may be set."""

    name: str
    n: int
    p: Optional[int] = None
    x: Optional[int] = None
    d: Optional[int] = None
    k: Optional[int] = None
    i: Optional[int] = None

    def __post_init__(self) -> None:
        name = ALIASES.get(self.name, self.name)
        if name not in FAMILIES:
            raise FamilyError(f"unknown family {self.name!r}; expected one of {sorted(FAMILIES)}")
        object.__setattr__(self, "name", name)
        needed = FAMILIES[name]
        for param in ("p", "x", "d", "k", "i"):
            value = getattr(self, param)
            if param in needed and value is None:
                raise FamilyError(f"family {name} requires parameter {param}")
            if param not in needed and value is not None:
                raise FamilyError(f"family {name} takes no parameter {param}")
        _validate(self)

    def label(self) -> str:
        args = [str(self.n)] + [str(getattr(self, p)) for p in FAMILIES[self.name]]
        return f"{self.name}({','.join(args)})"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def _validate(s: FamilySpec) -> None:
    n = s.n
    minimum = {"complete": 1, "path": 1, "cycle": 3, "wheel": 4, "matching-reduced": 4,
               "complete-split": 2, "pendant-star": 4, "clique-path": 4,
               "clique-path-partial": 3, "conjecture-exception": 5}[s.name]
    _require(n >= minimum, f"{s.name} needs n >= {minimum}, got n={n}")
    if s.name == "complete-split":
        _require(1 <= s.x <= n - 1, f"complete-split needs 1 <= x <= n-1, got x={s.x}")
    elif s.name == "pendant-star":
        _require(0 <= s.p <= n - 3, f"pendant-star needs 0 <= p <= n-3, got p={s.p}")
    elif s.name == "clique-path":
        _require(2 <= s.d <= n - 2, f"clique-path needs 2 <= d <= n-2, got d={s.d}")
    elif s.name == "clique-path-partial":
        # d = n-1 leaves an empty clique: the bare path, reached by the conjecture at m = n-1
        _require(2 <= s.d <= n - 1, f"clique-path-partial needs 2 <= d <= n-1, got d={s.d}")
        _require(0 <= s.k <= n - s.d - 1, f"clique-path-partial needs 0 <= k <= n-d-1, got k={s.k}")
    elif s.name == "conjecture-exception":
        _require(1 <= s.i <= n - 4, f"conjecture-exception needs 1 <= i <= n-4, got i={s.i}")


def _clique(vertices) -> list[tuple[int, int]]:
    return list(combinations(vertices, 2))


def _path(n: int) -> list[tuple[int, int]]:
    return [(v, v + 1) for v in range(n - 1)]


def construct(spec: FamilySpec) -> Graph:
    n = spec.n
    name = spec.name
    if name == "complete":
        return build_graph(n, _clique(range(n)))
    if name == "path":
        return build_graph(n, _path(n))
    if name == "cycle":
        return build_graph(n, _path(n) + [(n - 1, 0)])
    if name == "wheel":
        rim = list(range(1, n))
        edges = [(0, v) for v in rim] + [(rim[j], rim[(j + 1) % len(rim)]) for j in range(len(rim))]
        return build_graph(n, edges)
    if name == "matching-reduced":
        removed = {(v, v + 1) for v in range(0, n - 1, 2)}
        if n % 2:
            removed.add((0, n - 1))
        return build_graph(n, [e for e in _clique(range(n)) if e not in removed])
    if name == "complete-split":
        clique = range(spec.x)
        return build_graph(n, _clique(clique) + [(c, s) for c in clique for s in range(spec.x, n)])
    if name == "pendant-star":
        rest = list(range(spec.p + 1, n))
        edges = [(0, v) for v in range(1, n)]
        if len(rest) % 2:
            a, b, c = rest[:3]
            edges += [(a, b), (b, c)]
            rest = rest[3:]
        edges += [(rest[j], rest[j + 1]) for j in range(0, len(rest), 2)]
        return build_graph(n, edges)
    if name == "clique-path":
        return _clique_path(n, spec.d, n - spec.d - 1)
    if name == "clique-path-partial":
        return _clique_path(n, spec.d, spec.k)
    if name == "conjecture-exception":
        clique = list(range(4, n))
        edges = _path(4) + _clique(clique)
        for j, c in enumerate(clique):
            attach = (0, 1, 2) if j < spec.i else (1, 2, 3)
            edges += [(c, u) for u in attach]
        return build_graph(n, edges)
    raise FamilyError(f"no constructor for {name}")  # pragma: no cover


def _clique_path(n: int, d: int, k: int) -> Graph:
    # path u_0..u_d is vertices 0..d; the clique is d+1..n-1
    clique = list(range(d + 1, n))
    edges = _path(d + 1) + _clique(clique)
    for j, c in enumerate(clique):
        edges += [(c, 0), (c, 1)]
        if j < k:
            edges.append((c, 2))
    return build_graph(n, edges)


def closed_eci(spec: FamilySpec) -> Optional[int]:
    """Closed-form index where one is known, else ``None``."""
    n = spec.n
    if spec.name == "pendant-star":
        p = spec.p
        if (n, p) == (4, 0):
            # H(4,0) is K_4 minus an edge: two dominating vertices, index 14, off the formula
            return None
        return 5 * n - 2 * p - 5 if (n - p) % 2 else 5 * n - 2 * p - 3
    if spec.name == "complete-split":
        x = spec.x
        if x <= n - 2:
            return -2 * x * x + x * (3 * n - 1)
        return None
    if spec.name == "complete":
        return n * (n - 1)
    if spec.name == "cycle":
        return 2 * n * (n // 2)
    return None


def is_degenerate(spec: FamilySpec) -> bool:
    """True for parameter choices that collapse onto another family (W_4 is K_4)."""
    return spec.name == "wheel" and spec.n == 4


def complete(n: int) -> Graph:
    return construct(FamilySpec("complete", n))


def path(n: int) -> Graph:
    return construct(FamilySpec("path", n))


def cycle(n: int) -> Graph:
    return construct(FamilySpec("cycle", n))


def star(n: int) -> Graph:
    return construct(FamilySpec("complete-split", n, x=1))


def pendant_star(n: int, p: int) -> Graph:
    return construct(FamilySpec("pendant-star", n, p=p))


def complete_split(n: int, x: int) -> Graph:
    return construct(FamilySpec("complete-split", n, x=x))
