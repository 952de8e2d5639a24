"""Brute-force ground truth on up to 8 vertices.

Graphs are enumerated one representative per isomorphism class by vertex
augmentation: every n-vertex representative is extended by a new vertex
with each of the 2^n possible neighborhoods (in increasing bitmask order),
and the results are deduplicated at level n+1 by a canonical form.  The
class counts 1, 1, 2, 4, 11, 34, 156, 1044, 12346 for n = 0..8 are asserted
by the tests, which pins the whole pipeline.

The canonical form is the lexicographically minimal upper-triangle bit
string (column order, the graph6 layout) over all vertex orderings that
list a cheap isomorphism-invariant vertex key (degree, then sorted
neighbor degrees) in nondecreasing order.  Restricting to key-monotone
orderings is sound — isomorphisms preserve the key, so isomorphic graphs
minimize over corresponding sets of orderings — and it keeps the search
tree tiny for everything except highly regular graphs, which are rare.
The minimization itself is a DFS that only ever extends a prefix by
vertices whose next column is minimal, with a global best for pruning.

On top of the enumeration: the table of minimum clique number by chromatic
number, its verification against the arithmetic formula, and the largest
chi - omega excess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .graphs import Graph, bits, popcount
from .qfunction import q
from .reports import FAIL, PASS, CheckResult
from . import solvers

MAX_ENUM_VERTICES = 8

KNOWN_CLASS_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)


@dataclass(frozen=True)
class CanonicalForm:
    """Complete isomorphism invariant for small graphs: n plus the minimal
    upper-triangle bit string (one character per pair, column order)."""

    n: int
    bits: str


def canonical_form(g: Graph) -> CanonicalForm:
    cols = _canonical_columns(g.n, g.adj)
    text = "".join(format(col, f"0{j}b") for j, col in enumerate(cols, start=1))
    return CanonicalForm(g.n, text)


def _vertex_keys(n: int, adj: tuple[int, ...] | list[int]) -> list[tuple]:
    degs = [popcount(row) for row in adj]
    return [
        (degs[v], tuple(sorted(degs[u] for u in bits(adj[v]))))
        for v in range(n)
    ]


def _canonical_columns(n: int, adj) -> tuple[int, ...]:
    """Columns of the minimal bit string; column j has j bits, the
    adjacency of position j to positions 0..j-1 (most significant first)."""
    if n <= 1:
        return ()
    keys = _vertex_keys(n, adj)
    order = sorted(range(n), key=lambda v: (keys[v], v))
    groups: list[list[int]] = []
    for v in order:
        if groups and keys[groups[-1][-1]] == keys[v]:
            groups[-1].append(v)
        else:
            groups.append([v])

    best: list[int] | None = None

    def extend(placed: list[int], cols: list[int], group_idx: int, used_in_group: set[int]) -> None:
        nonlocal best
        j = len(placed)
        if j == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        group = groups[group_idx]
        remaining = [v for v in group if v not in used_in_group]
        # next column value per candidate; only minima can start a minimal suffix
        scored = []
        for v in remaining:
            col = 0
            row = adj[v]
            for i, p in enumerate(placed):
                col |= (row >> p & 1) << (j - 1 - i)
            scored.append((col, v))
        low = min(col for col, _ in scored)
        if best is not None and j < len(best):
            prefix = best[:j]
            if cols > prefix:
                return
            if cols == prefix and low > best[j]:
                return
        for col, v in scored:
            if col != low:
                continue
            placed.append(v)
            cols.append(col)
            if len(remaining) == 1:
                extend(placed, cols, group_idx + 1, set())
            else:
                used_in_group.add(v)
                extend(placed, cols, group_idx, used_in_group)
                used_in_group.discard(v)
            placed.pop()
            cols.pop()

    extend([], [], 0, set())
    assert best is not None
    return tuple(best[1:])  # drop the empty column of position 0


# -- enumeration ---------------------------------------------------------------

_levels: list[list[tuple[int, ...]]] = [[()]]  # adjacency-row tuples per n


def _ensure_level(n: int) -> None:
    while len(_levels) <= n:
        prev = _levels[-1]
        m = len(_levels) - 1
        seen: dict[tuple[int, ...], tuple[int, ...]] = {}
        for rows in prev:
            for mask in range(1 << m):
                child = tuple(
                    row | ((mask >> v & 1) << m) for v, row in enumerate(rows)
                ) + (mask,)
                key = _canonical_columns(m + 1, child)
                if key not in seen:
                    seen[key] = child
        _levels.append(list(seen.values()))


def enumerate_graphs(n: int):
    """Exactly one representative per isomorphism class, deterministically
    ordered; n <= 8."""
    if not 0 <= n <= MAX_ENUM_VERTICES:
        raise CapacityError(f"enumeration supports 0..{MAX_ENUM_VERTICES}, got {n}")
    _ensure_level(n)
    for rows in _levels[n]:
        yield Graph(n, rows)


def count_graphs(n: int) -> int:
    if not 0 <= n <= MAX_ENUM_VERTICES:
        raise CapacityError(f"enumeration supports 0..{MAX_ENUM_VERTICES}, got {n}")
    _ensure_level(n)
    return len(_levels[n])


# -- exhaustive statistics -----------------------------------------------------


@dataclass(frozen=True)
class LevelStats:
    """Per-vertex-count exhaustive results: for each achievable chromatic
    number c, the least clique number and a graph attaining it, plus the
    largest chi - omega over the level."""

    n: int
    class_count: int
    min_clique_by_chi: dict[int, int]
    witness_by_chi: dict[int, Graph]
    max_gap: int


_stats_cache: dict[int, LevelStats] = {}


def level_stats(n: int) -> LevelStats:
    if n in _stats_cache:
        return _stats_cache[n]
    min_clique: dict[int, int] = {}
    witness: dict[int, Graph] = {}
    max_gap = 0
    count = 0
    for g in enumerate_graphs(n):
        count += 1
        omega = solvers.clique_number(g)
        chi = solvers.chromatic_number(g)
        max_gap = max(max_gap, chi - omega)
        if chi not in min_clique or omega < min_clique[chi]:
            min_clique[chi] = omega
            witness[chi] = g
    stats = LevelStats(n, count, min_clique, witness, max_gap)
    _stats_cache[n] = stats
    return stats


def brute_q_table(n: int) -> dict[int, int]:
    return dict(level_stats(n).min_clique_by_chi)


def brute_Q(n: int, c: int) -> int | None:
    """Least clique number over all n-vertex graphs with chromatic number
    exactly c; None if no such graph exists."""
    if not 0 <= n <= MAX_ENUM_VERTICES:
        raise CapacityError(f"enumeration supports 0..{MAX_ENUM_VERTICES}, got {n}")
    if not 1 <= c <= max(n, 1):
        raise ValueError(f"need 1 <= c <= n, got c = {c}")
    return level_stats(n).min_clique_by_chi.get(c)


def brute_gap(n: int) -> int:
    """Exact maximum of chi - omega over all n-vertex graphs."""
    return level_stats(n).max_gap


@dataclass(frozen=True)
class FormulaReport:
    n_max: int
    entries: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)


def verify_clique_formula(n_max: int) -> FormulaReport:
    """Exhaustively confirm, for every n <= n_max and every k with
    n >= 2k + 3, that the least clique number at chromatic number n - k
    equals n - 2k + q(k)."""
    if n_max > MAX_ENUM_VERTICES:
        raise CapacityError(f"oracle verification supports n <= {MAX_ENUM_VERTICES}")
    entries = []
    for n in range(n_max + 1):
        for k in range((n - 3) // 2 + 1):
            qk = q(k)[0]
            assert qk.exact, "q is exact throughout the oracle range"
            expected = n - 2 * k + qk.lo
            actual = brute_Q(n, n - k)
            ok = actual == expected
            entries.append(CheckResult(
                f"n={n},k={k}", PASS if ok else FAIL,
                f"min clique at chi = {n - k} on {n} vertices is {actual}, "
                f"formula gives {n} - {2 * k} + {qk.lo} = {expected}",
            ))
    return FormulaReport(n_max, tuple(entries))


def export_q_table_csv(n_max: int) -> str:
    """CSV dump of the exhaustive (n, c, min clique) table."""
    lines = ["n,c,min_clique"]
    for n in range(n_max + 1):
        table = brute_q_table(n)
        for c in sorted(table):
            lines.append(f"{n},{c},{table[c]}")
    return "\n".join(lines) + "\n"
