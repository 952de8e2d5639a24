"""Maximum matching in general graphs and the Edmonds-Gallai decomposition.

The matching solver is the classic blossom (augmenting path with blossom
shrinking) algorithm in its contracted-base formulation: a BFS forest of
alternating paths, with odd cycles collapsed by rerooting every member's
`base` pointer at the cycle's least common ancestor.  O(V^3), exact.

The decomposition D / A / C is computed from the direct characterization:
v lies in D iff deleting v does not drop the matching number, A is the
outside neighborhood of D, C is everything else.  That is n+1 matching
runs, which is nothing at n <= 64, and it doubles as an independent check
on the blossom code because the structure theorem's invariants (factor-
critical D-components, the deficiency count) are asserted in the tests.

`verify_complement_partition` checks, on a concrete graph with independence
number 2, the bullet-point properties of the partition of the complement
that the Edmonds-Gallai theorem yields: isolated vertices split off, each
remaining component has size 2k_i or 2k_i + 1 where k_i is its internal
matching number, the separator X is at most the number of odd components,
and the matching number decomposes as sum(k_i) + |X|.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import PreconditionError
from .graphs import Graph, bits, complement, induced_subgraph
from .reports import CheckResult
from . import solvers


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges; pairs are (u, v) with u < v."""

    pairs: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def covered(self) -> frozenset[int]:
        return frozenset(v for pair in self.pairs for v in pair)


def max_matching(g: Graph) -> Matching:
    mate = _blossom_mates(g)
    pairs = frozenset((v, mate[v]) for v in range(g.n) if 0 <= v < mate[v])
    return Matching(pairs)


def matching_number(g: Graph) -> int:
    return max_matching(g).size


def _blossom_mates(g: Graph) -> list[int]:
    n = g.n
    neighbors = [tuple(bits(row)) for row in g.adj]
    mate = [-1] * n
    for v in range(n):  # greedy seed
        if mate[v] < 0:
            for u in neighbors[v]:
                if mate[u] < 0:
                    mate[v] = u
                    mate[u] = v
                    break

    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] < 0:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def augment_from(root: int) -> bool:
        nonlocal parent, base
        seen = [False] * n
        parent = [-1] * n
        base = list(range(n))
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in neighbors[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                    # odd cycle through the forest: shrink the blossom
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not seen[i]:
                                seen[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if mate[to] < 0:
                        # augmenting path found: flip along the parents
                        u = to
                        while u >= 0:
                            pv = parent[u]
                            nxt = mate[pv]
                            mate[u] = pv
                            mate[pv] = u
                            u = nxt
                        return True
                    seen[mate[to]] = True
                    queue.append(mate[to])
        return False

    for v in range(n):
        if mate[v] < 0:
            augment_from(v)
    return mate


@dataclass(frozen=True)
class EGDecomposition:
    """The canonical partition describing all maximum matchings.

    d: vertices missed by at least one maximum matching; a: their outside
    neighborhood; c: the rest (perfectly matched among themselves).
    """

    d: frozenset[int]
    a: frozenset[int]
    c: frozenset[int]
    matching: Matching
    components_of_d: tuple[frozenset[int], ...]

    @property
    def deficiency(self) -> int:
        return len(self.d) + len(self.a) + len(self.c) - 2 * self.matching.size


def edmonds_gallai(g: Graph) -> EGDecomposition:
    nu = matching_number(g)
    everyone = range(g.n)
    d = frozenset(
        v for v in everyone
        if matching_number(induced_subgraph(g, set(everyone) - {v})) == nu
    )
    a = frozenset(
        u for v in d for u in bits(g.adj[v]) if u not in d
    )
    c = frozenset(everyone) - d - a
    return EGDecomposition(d, a, c, max_matching(g), _components_within(g, d))


def _components_within(g: Graph, vertex_set: frozenset[int]) -> tuple[frozenset[int], ...]:
    todo = set(vertex_set)
    comps = []
    while todo:
        start = min(todo)
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in bits(g.adj[v]):
                if u in todo and u not in comp:
                    comp.add(u)
                    frontier.append(u)
        todo -= comp
        comps.append(frozenset(comp))
    return tuple(sorted(comps, key=min))


# -- partition check for alpha = 2 graphs -------------------------------------


@dataclass(frozen=True)
class PartitionComponent:
    vertices: frozenset[int]
    matching_size: int

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def kind(self) -> str:
        if self.size == 1:
            return "singleton"
        return "odd" if self.size % 2 else "even"


@dataclass(frozen=True)
class ComplementPartitionReport:
    n: int
    k: int
    isolated: frozenset[int]
    separator: frozenset[int]
    components: tuple[PartitionComponent, ...]
    bullets: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(b.passed for b in self.bullets)


def verify_complement_partition(g: Graph, k: int) -> ComplementPartitionReport:
    """Check the structure of the complement of an alpha=2 graph whose
    chromatic number is n - k, bullet by bullet.

    Preconditions (alpha(g) = 2 and chi(g) = n - k) are verified with the
    exact solvers and reported as a PreconditionError, never as a failed
    bullet.
    """
    alpha = solvers.independence_number(g)
    if alpha != 2:
        raise PreconditionError(f"independence number is {alpha}, need exactly 2")
    chi = solvers.chromatic_number(g)
    if chi != g.n - k:
        raise PreconditionError(
            f"chromatic number is {chi}, need n - k = {g.n} - {k} = {g.n - k}"
        )

    gbar = complement(g)
    decomp = edmonds_gallai(gbar)
    isolated = frozenset(v for v in range(gbar.n) if gbar.adj[v] == 0)
    separator = decomp.a
    rest = frozenset(range(gbar.n)) - separator - isolated
    comps = []
    for comp in _components_within(gbar, rest):
        nu_i = matching_number(induced_subgraph(gbar, comp))
        comps.append(PartitionComponent(comp, nu_i))
    comps.sort(key=lambda c: (c.size, min(c.vertices)))

    bullets = []

    def bullet(name: str, ok: bool, condition: str) -> None:
        bullets.append(CheckResult(name, "pass" if ok else "fail", condition))

    bullet(
        "isolated-set",
        all(gbar.adj[v] == 0 for v in isolated)
        and not any(gbar.adj[v] == 0 for v in rest | separator),
        "the isolated block collects exactly the complement's degree-0 vertices",
    )
    bullet(
        "has-components",
        len(comps) >= 1,
        f"complement minus separator and isolated block has {len(comps)} components, need >= 1",
    )
    for comp in comps:
        bullet(
            f"component-size-{min(comp.vertices)}",
            comp.size in (2 * comp.matching_size, 2 * comp.matching_size + 1),
            f"component {sorted(comp.vertices)} has size {comp.size} with internal "
            f"matching {comp.matching_size}; size must be 2k_i or 2k_i + 1",
        )
    odd_count = sum(1 for c in comps if c.size % 2 == 1)
    bullet(
        "separator-bound",
        0 <= len(separator) <= odd_count,
        f"|X| = {len(separator)} must lie in 0..{odd_count} (number of odd components)",
    )
    total = sum(c.matching_size for c in comps) + len(separator)
    bullet(
        "matching-count",
        total == k,
        f"sum of component matchings plus |X| is {total}, must equal k = {k}",
    )
    return ComplementPartitionReport(
        g.n, k, isolated, separator, tuple(comps), tuple(bullets)
    )
