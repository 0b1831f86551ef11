"""Exhaustive extremal search over graph classes and one verifier per
extremal statement about the eccentric connectivity index."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional

from .canon import canonical_key
from .enumeration import ClassFilter, EmptyClassError, budget_from_env, check_budget, enumerate_connected
from .families import FamilySpec, closed_eci, construct
from .graph import Graph, eccentricities
from .graph6 import encode_graph6


class Direction(str, Enum):
    MIN = "min"
    MAX = "max"


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    HOLDS = "conjecture-holds"
    REFUTED = "conjecture-refuted"

    @property
    def exit_code(self) -> int:
        return 0 if self in (Verdict.PASS, Verdict.HOLDS) else 2


class ConjectureDomainError(ValueError):
    """The conjecture's formulas produced parameters its graph family cannot realize."""


@dataclass(frozen=True)
class Profile:
    graph: Graph
    eci: int
    ecc: tuple[int, ...]
    degrees: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def pending(self) -> int:
        return self.degrees.count(1)

    @property
    def dominating(self) -> int:
        return self.degrees.count(self.graph.n - 1)


def profile(g: Graph) -> Profile:
    ecc = eccentricities(g)
    degs = g.degrees()
    return Profile(g, sum(d * e for d, e in zip(degs, ecc)), tuple(ecc), tuple(degs))


@lru_cache(maxsize=None)
def _cached_profiles(n: int) -> tuple[Profile, ...]:
    return tuple(profile(g) for g in enumerate_connected(ClassFilter(n)))


def profiles(n: int, budget: Optional[int] = None, jobs: int = 1) -> Iterable[Profile]:
    """Profiles of all connected graphs of order ``n``; memoized up to order 8."""
    check_budget(n, budget)
    if n <= 8:
        return _cached_profiles(n)
    return (profile(g) for g in enumerate_connected(ClassFilter(n), budget=budget, jobs=jobs))


@dataclass
class ExtremalResult:
    filter: ClassFilter
    direction: Direction
    value: int
    optima: list[Graph]
    class_size: int


class _Best:
    """Running optimum with every graph attaining it."""

    def __init__(self, direction: Direction) -> None:
        self.sign = 1 if direction is Direction.MIN else -1
        self.value: Optional[int] = None
        self.optima: list[Graph] = []
        self.size = 0

    def add(self, value: int, g: Graph) -> None:
        self.size += 1
        if self.value is None or self.sign * value < self.sign * self.value:
            self.value = value
            self.optima = [g]
        elif value == self.value:
            self.optima.append(g)

    def sorted_optima(self) -> list[Graph]:
        return sorted(self.optima, key=canonical_key)


def search_extremal(
    flt: ClassFilter,
    direction: Direction | str = Direction.MIN,
    budget: Optional[int] = None,
    jobs: int = 1,
) -> ExtremalResult:
    direction = Direction(direction)
    check_budget(flt.n, budget)
    best = _Best(direction)
    for p in profiles(flt.n, budget=budget, jobs=jobs):
        if flt.matches(p.graph):
            best.add(p.eci, p.graph)
    if best.value is None:
        raise EmptyClassError(f"no connected graph satisfies {flt.describe()}")
    return ExtremalResult(flt, direction, best.value, best.sorted_optima(), best.size)


def floor_half(a: int, x: int) -> int:
    """Exact floor((a - sqrt(x)) / 2) for integers a and x >= 0."""
    if x < 0:
        raise ValueError("square root of a negative number")
    s = math.isqrt(x)
    if s * s == x:
        return (a - s) // 2
    return (a - s - 1) // 2


def floor_half_scan(a: int, x: int) -> int:
    """Same value as :func:`floor_half` by scanning candidates: the largest k
    with a - 2k >= 0 and x <= (a - 2k)**2."""
    k = a // 2 + 1
    lo = -(math.isqrt(x) + abs(a) + 2)
    while k >= lo:
        r = a - 2 * k
        if r >= 0 and x <= r * r:
            return k
        k -= 1
    raise ValueError("no candidate found")  # pragma: no cover


def zd10_params(n: int, m: int) -> tuple[int, int]:
    """Return (k, bound) of the minimum-index theorem for order n and size m."""
    if not n - 1 <= m < math.comb(n, 2):
        raise ValueError(f"m={m} outside [{n - 1}, {math.comb(n, 2) - 1}] for n={n}")
    k = floor_half(2 * n - 1, (2 * n - 1) ** 2 - 8 * m)
    return k, 4 * m - k * (n - 1)


def clique_path_partial_edges(n: int, d: int, k: int) -> int:
    return math.comb(n - d + 1, 2) + d - 1 + k


def conjecture_params(n: int, m: int) -> tuple[int, int]:
    """Return (D, k) naming the conjectured maximum for order n and size m."""
    if not n - 1 <= m <= math.comb(n - 1, 2):
        raise ValueError(f"m={m} outside [{n - 1}, {math.comb(n - 1, 2)}] for n={n}")
    d = floor_half(2 * n + 1, 17 + 8 * (m - n))
    k = m - math.comb(n - d + 1, 2) - d + 1
    if not (2 <= d <= n - 1 and 0 <= k <= n - d - 1):
        raise ConjectureDomainError(f"(n={n}, m={m}) gives D={d}, k={k}, outside the family's range")
    if clique_path_partial_edges(n, d, k) != m:  # pragma: no cover - identity
        raise ConjectureDomainError(f"g({n},{d},{k}) does not have {m} edges")
    return d, k


def conjecture_expected(n: int, m: int) -> list[Graph]:
    d, k = conjecture_params(n, m)
    graphs = [construct(FamilySpec("clique-path-partial", n, d=d, k=k))]
    if d == 3 and k == n - 4:
        graphs += [construct(FamilySpec("conjecture-exception", n, i=i)) for i in range(1, n - 3)]
    return graphs


def table1_expected(n: int) -> list[Graph]:
    def f(name: str, **kw) -> Graph:
        return construct(FamilySpec(name, n, **kw))

    if n <= 2:
        return [f("complete")]
    if n == 3:
        return [f("complete"), f("path")]
    if n in (4, 6, 7):
        return [f("matching-reduced")]
    if n == 5:
        return [f("matching-reduced"), f("wheel")]
    if n == 8:
        return [f("matching-reduced"), f("clique-path", d=4)]
    return [f("clique-path", d=-(-(n + 1) // 3) + 1)]


def corollary_expected(n: int, p: int) -> tuple[int, list[Graph]]:
    """Optimum value and optima for order n with p <= n-3 pending vertices."""
    h = FamilySpec("pendant-star", n, p=p)
    if p >= 1 or n >= 7:
        return closed_eci(h), [construct(h)]
    if n == 4:
        return 12, [construct(FamilySpec("complete", 4))]
    if n == 5:
        return 20, [construct(h), construct(FamilySpec("complete-split", 5, x=2)),
                    construct(FamilySpec("complete", 5)), construct(FamilySpec("cycle", 5))]
    return 26, [construct(FamilySpec("complete-split", 6, x=2))]


def many_dominating_expected(n: int) -> tuple[int, list[Graph]]:
    if n == 4:
        return 12, [construct(FamilySpec("complete", 4))]
    if n == 5:
        return 20, [construct(FamilySpec("complete-split", 5, x=2)), construct(FamilySpec("complete", 5))]
    return 6 * n - 10, [construct(FamilySpec("complete-split", n, x=2))]


@dataclass(frozen=True)
class Counterexample:
    cell: str
    graph6: str
    expected: str
    observed: str


@dataclass(frozen=True)
class Cell:
    """One checked class: its optimum and optima, or the number of graphs checked."""

    label: str
    class_size: int
    value: Optional[int] = None
    optima: tuple[str, ...] = ()
    ok: bool = True


@dataclass
class VerificationOutcome:
    statement: str
    n_min: int
    n_max: int
    verdict: Verdict
    counterexamples: list[Counterexample] = field(default_factory=list)
    cells: list[Cell] = field(default_factory=list)
    graphs_examined: int = 0
    seconds: float = 0.0

    @property
    def exit_code(self) -> int:
        return self.verdict.exit_code


class _Run:
    def __init__(self) -> None:
        self.cells: list[Cell] = []
        self.bad: list[Counterexample] = []
        self.examined = 0

    def flag(self, cell: str, g: Graph, expected: object, observed: object) -> None:
        self.bad.append(Counterexample(cell, encode_graph6(g), str(expected), str(observed)))

    def optimum(self, label: str, best: _Best, expected_value: int, expected: list[Graph]) -> None:
        """Compare an exhaustive optimum and its optima with the claimed ones."""
        before = len(self.bad)
        if best.value is None:
            for g in expected:
                self.flag(label, g, f"optimal with index {expected_value}", "class is empty")
        else:
            keys = {canonical_key(g): g for g in best.optima}
            want = {canonical_key(g): g for g in expected}
            if best.value != expected_value:
                for g in best.optima:
                    self.flag(label, g, f"optimum {expected_value}", f"optimum {best.value}")
            else:
                for key in sorted(set(keys) - set(want)):
                    self.flag(label, keys[key], "not optimal", f"index {best.value} (optimal)")
                for key in sorted(set(want) - set(keys)):
                    g = want[key]
                    self.flag(label, g, f"optimal with index {expected_value}", f"index {profile(g).eci} or outside class")
        self.cells.append(
            Cell(label, best.size, best.value, tuple(encode_graph6(g) for g in best.sorted_optima()), len(self.bad) == before)
        )


def _cell_best(profs: Iterable[Profile], pred: Callable[[Profile], bool], direction: Direction) -> _Best:
    best = _Best(direction)
    for p in profs:
        if pred(p):
            best.add(p.eci, p.graph)
    return best


def _verify_min_order(run: _Run, n: int, profs: Iterable[Profile]) -> None:
    best = _cell_best(profs, lambda p: True, Direction.MIN)
    run.examined += best.size
    run.optimum(f"n={n}", best, 3 * (n - 1), [construct(FamilySpec("complete-split", n, x=1))])


def _verify_pendant_extreme(run: _Run, n: int, profs: Iterable[Profile]) -> None:
    star_key = canonical_key(construct(FamilySpec("complete-split", n, x=1)))
    stars = 0
    size_a = size_b = 0
    bad_before = len(run.bad)
    for p in profs:
        if p.pending == n - 1:
            size_a += 1
            if canonical_key(p.graph) == star_key:
                stars += 1
            else:
                run.flag(f"n={n},p={n - 1}", p.graph, "star", "not a star")
        elif p.pending == n - 2:
            size_b += 1
            if p.eci != 5 * n - 6:
                run.flag(f"n={n},p={n - 2}", p.graph, 5 * n - 6, p.eci)
    if stars != 1:
        run.flag(f"n={n},p={n - 1}", construct(FamilySpec("complete-split", n, x=1)), "exactly one star", f"{stars} stars")
    run.examined += size_a + size_b
    ok = len(run.bad) == bad_before
    run.cells.append(Cell(f"n={n},p={n - 1}", size_a, 3 * (n - 1), (encode_graph6(construct(FamilySpec("complete-split", n, x=1))),), ok))
    run.cells.append(Cell(f"n={n},p={n - 2}", size_b, 5 * n - 6, (), ok))


def _verify_dom_one(run: _Run, n: int, profs: Iterable[Profile]) -> None:
    for pend in range(n - 2):
        if (n, pend) == (4, 0):
            continue
        label = f"n={n},p={pend},dominating=1"
        h = FamilySpec("pendant-star", n, p=pend)
        bound, h_key = closed_eci(h), canonical_key(construct(h))
        best = _cell_best(profs, lambda p: p.pending == pend and p.dominating == 1, Direction.MIN)
        run.examined += best.size
        run.optimum(label, best, bound, [construct(h)])
        for p in profs:
            if p.pending == pend and p.dominating == 1:
                if (p.eci == bound) != (canonical_key(p.graph) == h_key) or p.eci < bound:
                    run.flag(label, p.graph, f">= {bound}, equality only at the pendant star", p.eci)


def _verify_dom_many(run: _Run, n: int, profs: Iterable[Profile]) -> None:
    value, expected = many_dominating_expected(n)
    best = _cell_best(profs, lambda p: p.dominating >= 2, Direction.MIN)
    run.examined += best.size
    label = f"n={n},dominating>=2"
    run.optimum(label, best, value, expected)
    for p in profs:
        x = p.dominating
        if x >= 2 and p.eci < -2 * x * x + x * (3 * n - 1):
            run.flag(label, p.graph, f">= {-2 * x * x + x * (3 * n - 1)}", p.eci)


def _verify_dom_none(run: _Run, n: int, profs: Iterable[Profile]) -> None:
    c5 = canonical_key(construct(FamilySpec("cycle", 5)))
    for pend in range(n - 2):
        label = f"n={n},p={pend},dominating=0"
        bound = profile(construct(FamilySpec("pendant-star", n, p=pend))).eci
        size = 0
        ties = []
        before = len(run.bad)
        for p in profs:
            if p.pending != pend or p.dominating != 0:
                continue
            size += 1
            if p.eci < bound:
                run.flag(label, p.graph, f"> {bound}", p.eci)
            elif p.eci == bound:
                ties.append(p.graph)
        allowed = {c5} if (n, pend) == (5, 0) else set()
        for g in ties:
            if canonical_key(g) not in allowed:
                run.flag(label, g, f"> {bound}", bound)
        if allowed and not any(canonical_key(g) == c5 for g in ties):
            run.flag(label, construct(FamilySpec("cycle", 5)), f"index {bound}", "missing from ties")
        run.examined += size
        run.cells.append(Cell(label, size, None, tuple(encode_graph6(g) for g in ties), len(run.bad) == before))


def _verify_min_pending(run: _Run, n: int, profs: Iterable[Profile]) -> None:
    for pend in range(n - 2):
        value, expected = corollary_expected(n, pend)
        best = _cell_best(profs, lambda p: p.pending == pend, Direction.MIN)
        run.examined += best.size
        run.optimum(f"n={n},p={pend}", best, value, expected)


def _verify_zd10(run: _Run, n: int, profs: Iterable[Profile]) -> None:
    by_m: dict[int, list[Profile]] = {}
    for p in profs:
        by_m.setdefault(p.m, []).append(p)
    for m in range(n - 1, math.comb(n, 2)):
        k, bound = zd10_params(n, m)
        label = f"n={n},m={m}"
        cls = by_m.get(m, [])
        best = _cell_best(cls, lambda p: True, Direction.MIN)
        run.examined += best.size
        before = len(run.bad)
        if best.value != bound:
            for g in best.optima:
                run.flag(label, g, f"minimum {bound}", f"minimum {best.value}")
        for p in cls:
            shape = p.dominating == k and p.ecc.count(2) == n - k
            if (p.eci == bound) != shape or p.eci < bound:
                run.flag(label, p.graph, f"index {bound} iff {k} dominating and {n - k} of eccentricity 2", p.eci)
        run.cells.append(
            Cell(label, best.size, best.value, tuple(encode_graph6(g) for g in best.sorted_optima()), len(run.bad) == before)
        )


def _verify_table1(run: _Run, n: int, profs: Iterable[Profile]) -> None:
    expected = table1_expected(n)
    best = _cell_best(profs, lambda p: True, Direction.MAX)
    run.examined += best.size
    run.optimum(f"n={n}", best, profile(expected[0]).eci, expected)


def _verify_conjecture(run: _Run, n: int, profs: Iterable[Profile]) -> None:
    bests = {m: _Best(Direction.MAX) for m in range(n - 1, math.comb(n - 1, 2) + 1)}
    for p in profs:
        b = bests.get(p.m)
        if b is not None:
            b.add(p.eci, p.graph)
        else:
            run.examined += 1
    for m, best in bests.items():
        run.examined += best.size
        label = f"n={n},m={m}"
        try:
            expected = conjecture_expected(n, m)
        except ConjectureDomainError as exc:
            for g in best.optima:
                run.flag(label, g, str(exc), f"index {best.value}")
            run.cells.append(Cell(label, best.size, best.value, (), False))
            continue
        run.optimum(label, best, profile(expected[0]).eci, expected)


@dataclass(frozen=True)
class Statement:
    check: Callable[[_Run, int, Iterable[Profile]], None]
    min_n: int
    conjecture: bool = False
    max_default: int = 8
    single_pass: bool = False


STATEMENTS: dict[str, Statement] = {
    "min-order": Statement(_verify_min_order, 4),
    "pendant-extreme": Statement(_verify_pendant_extreme, 4),
    "dom-one": Statement(_verify_dom_one, 4),
    "dom-many": Statement(_verify_dom_many, 4),
    "dom-none": Statement(_verify_dom_none, 4),
    "min-pending": Statement(_verify_min_pending, 4),
    "zd10-min": Statement(_verify_zd10, 2),
    "table1-max": Statement(_verify_table1, 1, max_default=9, single_pass=True),
    "conjecture-max": Statement(_verify_conjecture, 4, conjecture=True, max_default=9, single_pass=True),
}


def verify(
    statement: str,
    n_min: int,
    n_max: int,
    budget: Optional[int] = None,
    jobs: int = 1,
) -> VerificationOutcome:
    """Exhaustively check one statement for every order in ``n_min..n_max``."""
    if statement not in STATEMENTS:
        raise KeyError(f"unknown statement {statement!r}; expected one of {sorted(STATEMENTS)}")
    spec = STATEMENTS[statement]
    if n_min > n_max:
        raise ValueError(f"empty range {n_min}..{n_max}")
    if n_min < spec.min_n:
        raise ValueError(f"{statement} is stated for n >= {spec.min_n}, got n_min={n_min}")
    if budget is None:
        budget = budget_from_env(spec.max_default)
    check_budget(n_max, budget)
    start = time.perf_counter()
    run = _Run()
    for n in range(n_min, n_max + 1):
        profs = profiles(n, budget=budget, jobs=jobs)
        if not spec.single_pass and not isinstance(profs, tuple):
            profs = tuple(profs)
        spec.check(run, n, profs)
    if spec.conjecture:
        verdict = Verdict.REFUTED if run.bad else Verdict.HOLDS
    else:
        verdict = Verdict.FAIL if run.bad else Verdict.PASS
    return VerificationOutcome(
        statement, n_min, n_max, verdict, run.bad, run.cells, run.examined, time.perf_counter() - start
    )


def iter_statements() -> Iterator[str]:
    return iter(STATEMENTS)
