"""Exhaustive enumeration of numerical semigroups by genus, and bound scans over it.

The semigroup tree has N at the root; the children of S are S \\ {a} for each
atom a > f(S) ("effective generator"), ordered by a. Every semigroup of genus
g appears exactly once at depth g.

Parallel runs cut the tree at ``split_depth``: the nodes above the cut are
handled by the calling process, and each node at the cut roots an
independent work unit. Partial results merge associatively and
commutatively, so the merged report does not depend on the worker count.
"""
from __future__ import annotations

import heapq
import multiprocessing
import time
from bisect import bisect_right
from collections.abc import Callable, Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .bounds import SLACK_KERNELS, BoundId
from .core import FULL, NumericalSemigroup, from_gaps, from_generators
from .errors import CapExceeded, InvalidGapSet
from .lemma import cover_masks

DEFAULT_SPLIT_DEPTH = 8
BRUTEFORCE_CAP = 10
COUNTEREXAMPLE_CAP = 1000
COVER_TAG = "LEMMA_COVER"

_make = NumericalSemigroup._make


# ---------------------------------------------------------------------------
# Tree
# ---------------------------------------------------------------------------

def _remove_generator(s: NumericalSemigroup, index: int) -> NumericalSemigroup:
    atoms = s.atoms
    a = atoms[index]
    m = s.multiplicity
    genus = s.genus + 1
    if a > 2 * genus - 1:
        raise AssertionError(f"{s} minus {a}: Frobenius {a} exceeds 2g-1 at genus {genus}")

    if a == m:
        # S is {0, m, m+1, ...}; removing m leaves {0, m+1, m+2, ...}
        n = m + 1
        membership = (((1 << (2 * n)) - 1) ^ ((1 << n) - 1)) | 1
        return _make(n, n, membership, tuple(range(n, 2 * n)), genus)

    conductor = a + 1
    top = conductor + m
    membership = (s.membership | (((1 << top) - 1) ^ ((1 << s.conductor) - 1))) ^ (1 << a)
    kept = atoms[:index] + atoms[index + 1:]

    # a + m is the only possible new atom; it splits as x + (a+m-x) with
    # both parts strictly between m and a.
    t = a + m
    inner = membership & ((1 << a) - 1) & ~((1 << (m + 1)) - 1)
    if inner:
        rev = int(bin(inner)[:1:-1], 2) << (t - inner.bit_length() + 1)
        if inner & rev:
            return _make(conductor, m, membership, kept, genus)
    return _make(conductor, m, membership, kept + (t,), genus)


def children(s: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Children in the semigroup tree, by ascending removed generator."""
    start = bisect_right(s.atoms, s.conductor - 1)
    return [_remove_generator(s, i) for i in range(start, len(s.atoms))]


def _checked_children(s: NumericalSemigroup) -> list[NumericalSemigroup]:
    kids = children(s)
    for kid in kids:
        kid.check_invariants()
        rebuilt = from_generators(kid.atoms)
        if rebuilt != kid or rebuilt.atoms != kid.atoms or rebuilt.genus != kid.genus:
            raise AssertionError(f"incremental child {kid} disagrees with closure {rebuilt}")
        if kid.genus != s.genus + 1 or kid.conductor - 1 not in s.atoms:
            raise AssertionError(f"{kid} is not a valid child of {s}")
    return kids


def walk(root: NumericalSemigroup, genus_bound: int,
         debug: bool = False) -> Iterator[NumericalSemigroup]:
    """Depth-first pre-order over the subtree of ``root`` down to ``genus_bound``."""
    expand = _checked_children if debug else children
    stack = [root]
    pop, extend = stack.pop, stack.extend
    while stack:
        s = pop()
        yield s
        if s.genus < genus_bound:
            kids = expand(s)
            kids.reverse()
            extend(kids)


def _partition(genus_bound: int, split_depth: int
               ) -> tuple[list[NumericalSemigroup], list[NumericalSemigroup]]:
    """Nodes above the cut, and the work-unit roots at the cut."""
    if genus_bound < split_depth:
        return list(walk(FULL, genus_bound)), []
    top = list(walk(FULL, split_depth - 1))
    units = [kid for s in top if s.genus == split_depth - 1 for kid in children(s)]
    return top, units


def enumerate_tree(genus_bound: int, visitor: Callable[[NumericalSemigroup], object],
                   worker_count: int = 1, split_depth: int = DEFAULT_SPLIT_DEPTH,
                   debug: bool = False) -> int:
    """Call ``visitor`` once per semigroup of genus <= ``genus_bound``; return the count.

    With ``worker_count > 1`` subtrees are visited from a thread pool, so the
    visitor must tolerate concurrent calls.
    """
    if genus_bound < 0:
        raise ValueError("genus_bound must be nonnegative")
    if worker_count <= 1:
        count = 0
        for s in walk(FULL, genus_bound, debug):
            visitor(s)
            count += 1
        return count

    top, units = _partition(genus_bound, split_depth)
    for s in top:
        visitor(s)

    def run(unit: NumericalSemigroup) -> int:
        n = 0
        for s in walk(unit, genus_bound, debug):
            visitor(s)
            n += 1
        return n

    with ThreadPoolExecutor(worker_count) as pool:
        return len(top) + sum(pool.map(run, units))


def count_by_genus(genus_bound: int) -> list[int]:
    counts = [0] * (genus_bound + 1)
    for s in walk(FULL, genus_bound):
        counts[s.genus] += 1
    return counts


def enumerate_bruteforce(genus: int, cap: int = BRUTEFORCE_CAP) -> list[NumericalSemigroup]:
    """All semigroups of the given genus, by testing every gap set inside [1, 2g-1]."""
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    if genus > cap:
        raise CapExceeded(f"brute-force genus {genus} exceeds cap {cap}")
    found = []
    for gaps in combinations(range(1, 2 * genus), genus):
        try:
            found.append(from_gaps(gaps))
        except InvalidGapSet:
            pass
    return sorted(found, key=lambda s: s.atoms)


# ---------------------------------------------------------------------------
# Scan reports
# ---------------------------------------------------------------------------

def _pick_min(a, b):
    """Smaller of two (value, atoms) pairs; ties go to the smaller atom list."""
    if a[0] is None:
        return b
    if b[0] is None:
        return a
    return a if (a[0], a[1]) <= (b[0], b[1]) else b


def _pick_max(a, b):
    if a[0] is None:
        return b
    if b[0] is None:
        return a
    if a[0] != b[0]:
        return a if a[0] > b[0] else b
    return a if a[1] <= b[1] else b


@dataclass
class BoundStats:
    bound_id: BoundId
    checked: int = 0
    equality_count: int = 0
    violation_count: int = 0
    min_slack: Fraction | None = None
    argmin: tuple[int, ...] | None = None

    def merge(self, other: BoundStats) -> BoundStats:
        assert self.bound_id is other.bound_id
        slack, arg = _pick_min((self.min_slack, self.argmin), (other.min_slack, other.argmin))
        return BoundStats(self.bound_id, self.checked + other.checked,
                          self.equality_count + other.equality_count,
                          self.violation_count + other.violation_count, slack, arg)


@dataclass
class DensityStats:
    """Range of the Wilf density among semigroups of one embedding dimension."""

    embedding_dim: int
    count: int
    min_density: Fraction
    argmin: tuple[int, ...]
    max_density: Fraction
    argmax: tuple[int, ...]

    def merge(self, other: DensityStats) -> DensityStats:
        lo = _pick_min((self.min_density, self.argmin), (other.min_density, other.argmin))
        hi = _pick_max((self.max_density, self.argmax), (other.max_density, other.argmax))
        return DensityStats(self.embedding_dim, self.count + other.count, *lo, *hi)


@dataclass
class CoverStats:
    checked: int = 0
    failures: int = 0
    lower_tight: int = 0
    upper_tight: int = 0

    def merge(self, other: CoverStats) -> CoverStats:
        return CoverStats(self.checked + other.checked, self.failures + other.failures,
                          self.lower_tight + other.lower_tight,
                          self.upper_tight + other.upper_tight)


@dataclass(frozen=True, order=True)
class Counterexample:
    genus: int
    atoms: tuple[int, ...]
    bound: str
    slack: Fraction

    @property
    def label(self) -> str:
        return "<" + ",".join(map(str, self.atoms)) + ">"


@dataclass
class ScanReport:
    genus_bound: int
    bounds: tuple[BoundId, ...]
    counts_per_genus: list[int]
    per_bound: dict[BoundId, BoundStats]
    density_by_e: dict[int, DensityStats]
    cover: CoverStats | None
    counterexamples: list[Counterexample] = field(default_factory=list)
    rows: list[tuple] | None = None
    wall_time: float = 0.0

    @property
    def semigroups_visited(self) -> int:
        return sum(self.counts_per_genus)

    @property
    def semigroups_checked(self) -> int:
        return self.semigroups_visited - self.counts_per_genus[0]

    @property
    def passed(self) -> bool:
        return not self.counterexamples and all(
            st.violation_count == 0 for st in self.per_bound.values()) and (
            self.cover is None or self.cover.failures == 0)

    def merge(self, other: ScanReport) -> ScanReport:
        if self.genus_bound != other.genus_bound or self.bounds != other.bounds:
            raise ValueError("cannot merge reports of different scans")
        density = dict(self.density_by_e)
        for e, st in other.density_by_e.items():
            density[e] = density[e].merge(st) if e in density else st
        cover = None
        if self.cover is not None and other.cover is not None:
            cover = self.cover.merge(other.cover)
        rows = None
        if self.rows is not None and other.rows is not None:
            rows = sorted(self.rows + other.rows, key=_row_key)
        return ScanReport(
            genus_bound=self.genus_bound,
            bounds=self.bounds,
            counts_per_genus=[a + b for a, b in zip(self.counts_per_genus, other.counts_per_genus)],
            per_bound={b: self.per_bound[b].merge(other.per_bound[b]) for b in self.bounds},
            density_by_e=dict(sorted(density.items())),
            cover=cover,
            counterexamples=sorted(self.counterexamples + other.counterexamples)[:COUNTEREXAMPLE_CAP],
            rows=rows,
            wall_time=max(self.wall_time, other.wall_time),
        )


def _row_key(row: tuple) -> tuple:
    return row[0], row[1]


def _scan_nodes(nodes: Iterable[NumericalSemigroup], genus_bound: int,
                bounds: tuple[BoundId, ...], check_cover: bool,
                collect_rows: bool) -> ScanReport:
    kernels = [SLACK_KERNELS[b] for b in bounds]
    nb = len(kernels)
    idx = range(nb)
    counts = [0] * (genus_bound + 1)
    checked = [0] * nb
    equal = [0] * nb
    violated = [0] * nb
    min_num: list = [None] * nb
    min_den = [1] * nb
    argmin: list = [None] * nb
    # e -> [count, min sporadic, min conductor, argmin, max sporadic, max conductor, argmax]
    dens: dict[int, list] = {}
    cov = [0, 0, 0, 0]
    cex: list[Counterexample] = []
    rows: list[tuple] | None = [] if collect_rows else None

    for s in nodes:
        g = s.genus
        counts[g] += 1
        c = s.conductor
        if c == 0:
            continue
        atoms = s.atoms
        e = len(atoms)
        m = s.multiplicity
        sp = c - g
        row_slacks = [] if collect_rows else None

        for i in idx:
            r = kernels[i](c, g, e, m)
            if r is None:
                if collect_rows:
                    row_slacks.append(None)
                continue
            num, den, strict, _ = r
            checked[i] += 1
            if num <= 0:
                if num == 0:
                    equal[i] += 1
                if num < 0 or strict:
                    violated[i] += 1
                    cex.append(Counterexample(g, atoms, bounds[i].value, Fraction(num, den)))
            mn = min_num[i]
            if mn is None:
                min_num[i], min_den[i], argmin[i] = num, den, atoms
            else:
                lhs, rhs = num * min_den[i], mn * den
                if lhs < rhs or (lhs == rhs and atoms < argmin[i]):
                    min_num[i], min_den[i], argmin[i] = num, den, atoms
            if collect_rows:
                row_slacks.append((Fraction(num, den), num > 0 or (num == 0 and not strict)))

        d = dens.get(e)
        if d is None:
            dens[e] = [1, sp, c, atoms, sp, c, atoms]
        else:
            d[0] += 1
            lhs, rhs = sp * d[2], d[1] * c
            if lhs < rhs or (lhs == rhs and atoms < d[3]):
                d[1], d[2], d[3] = sp, c, atoms
            lhs, rhs = sp * d[5], d[4] * c
            if lhs > rhs or (lhs == rhs and atoms < d[6]):
                d[4], d[5], d[6] = sp, c, atoms

        if check_cover:
            _, needed, cover = cover_masks(s)
            size = cover.bit_count()
            upper = (e - 1) * sp
            cov[0] += 1
            if needed & ~cover or size < m - 1 or size > upper:
                cov[1] += 1
                cex.append(Counterexample(g, atoms, COVER_TAG, Fraction(upper - size)))
            if size == m - 1:
                cov[2] += 1
            if size == upper:
                cov[3] += 1

        if collect_rows:
            rows.append((g, atoms, c - 1, g, e, m, Fraction(sp, c), tuple(row_slacks)))

    per_bound = {}
    for i, b in enumerate(bounds):
        slack = None if min_num[i] is None else Fraction(min_num[i], min_den[i])
        per_bound[b] = BoundStats(b, checked[i], equal[i], violated[i], slack, argmin[i])
    density = {
        e: DensityStats(e, d[0], Fraction(d[1], d[2]), d[3], Fraction(d[4], d[5]), d[6])
        for e, d in sorted(dens.items())
    }
    if rows is not None:
        rows.sort(key=_row_key)
    return ScanReport(
        genus_bound=genus_bound,
        bounds=bounds,
        counts_per_genus=counts,
        per_bound=per_bound,
        density_by_e=density,
        cover=CoverStats(*cov) if check_cover else None,
        counterexamples=sorted(cex)[:COUNTEREXAMPLE_CAP],
        rows=rows,
    )


def _unit_state(s: NumericalSemigroup) -> tuple:
    return s.conductor, s.multiplicity, s.membership, s.atoms, s.genus


def _scan_unit(job: tuple) -> ScanReport:
    state, genus_bound, bounds, check_cover, collect_rows = job
    root = _make(*state)
    return _scan_nodes(walk(root, genus_bound), genus_bound, bounds, check_cover, collect_rows)


def _normalize_bounds(selection: Iterable[BoundId | str] | None) -> tuple[BoundId, ...]:
    if selection is None:
        return tuple(BoundId)
    chosen = {b if isinstance(b, BoundId) else BoundId.parse(b) for b in selection}
    if not chosen:
        raise ValueError("at least one bound must be selected")
    return tuple(sorted(chosen, key=lambda b: b.order))


def _pool(worker_count: int) -> ProcessPoolExecutor:
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        ctx = multiprocessing.get_context()
    return ProcessPoolExecutor(worker_count, mp_context=ctx)


def _run_units(fn, jobs: Sequence, worker_count: int) -> list:
    if worker_count <= 1 or len(jobs) <= 1:
        return [fn(job) for job in jobs]
    with _pool(worker_count) as pool:
        return list(pool.map(fn, jobs))


def scan(genus_bound: int, bounds_selection: Iterable[BoundId | str] | None = None,
         worker_count: int = 1, split_depth: int = DEFAULT_SPLIT_DEPTH,
         check_cover: bool = True, collect_rows: bool = False) -> ScanReport:
    """Check every semigroup with 1 <= genus <= ``genus_bound`` against the selected bounds.

    ``check_cover`` also verifies the witness-cover chain for each semigroup.
    ``collect_rows`` keeps one row per semigroup (for CSV output); rows are
    ``(genus, atoms, f, g, e, m, density, slacks)`` with ``slacks`` aligned to
    ``report.bounds`` and ``None`` where a bound does not apply.
    """
    if genus_bound < 1:
        raise ValueError("genus_bound must be at least 1")
    bounds = _normalize_bounds(bounds_selection)
    started = time.perf_counter()

    top, units = _partition(genus_bound, split_depth)
    report = _scan_nodes(top, genus_bound, bounds, check_cover, collect_rows)
    jobs = [(_unit_state(u), genus_bound, bounds, check_cover, collect_rows) for u in units]
    for part in _run_units(_scan_unit, jobs, worker_count):
        report = report.merge(part)

    report.wall_time = time.perf_counter() - started
    return report


# ---------------------------------------------------------------------------
# Extremal search
# ---------------------------------------------------------------------------

def _extremal_nodes(nodes: Iterable[NumericalSemigroup], kernel, k: int) -> list:
    def candidates():
        for s in nodes:
            c = s.conductor
            if c == 0:
                continue
            r = kernel(c, s.genus, len(s.atoms), s.multiplicity)
            if r is not None:
                yield Fraction(r[0], r[1]), s.atoms
    return heapq.nsmallest(k, candidates())


def _extremal_unit(job: tuple) -> list:
    state, genus_bound, metric, k = job
    return _extremal_nodes(walk(_make(*state), genus_bound), SLACK_KERNELS[metric], k)


def extremal(genus_bound: int, metric: BoundId | str, k: int = 10, worker_count: int = 1,
             split_depth: int = DEFAULT_SPLIT_DEPTH) -> list[tuple[NumericalSemigroup, Fraction]]:
    """The ``k`` semigroups of genus 1..``genus_bound`` with the smallest slack for ``metric``.

    Ties are broken by atom list, lexicographically.
    """
    if genus_bound < 1:
        raise ValueError("genus_bound must be at least 1")
    if k < 1:
        raise ValueError("k must be positive")
    metric = metric if isinstance(metric, BoundId) else BoundId.parse(metric)
    top, units = _partition(genus_bound, split_depth)
    best = _extremal_nodes(top, SLACK_KERNELS[metric], k)
    jobs = [(_unit_state(u), genus_bound, metric, k) for u in units]
    for part in _run_units(_extremal_unit, jobs, worker_count):
        best = heapq.nsmallest(k, best + part)
    return [(from_generators(atoms), slack) for slack, atoms in best]
