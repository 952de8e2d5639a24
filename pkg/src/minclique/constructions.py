"""Certified extremal constructions.

Two builders live here.  `compose_alpha2` merges two graphs of independence
number <= 2 into a bigger one, gluing a fresh clique R onto equal-size
cliques V1 and U2 picked in each factor: R u V1 and R u U2 become cliques,
all cross edges between the factors are present except V1 x U2, and each
r_i inherits v_i's neighbors on one side and u_i's on the other.  The
output has clique number omega_1 + omega_2 and still no independent triple;
both facts are re-verified by the exact solvers before the graph is
returned.

`build_extremal` realizes the minimum clique number achievable at chromatic
number n - k: join the optimal witness blocks (one per part of the q(k)
certificate, block i on 2 k_i + 1 vertices) together with enough dominating
vertices, then delete edges one at a time, in lexicographic order and
re-solving the chromatic number after each deletion, until it drops to
exactly n - k.  Edge deletion never increases the clique number, so the
final graph witnesses the value n - 2k + q(k).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, PreconditionError
from .graphs import MAX_VERTICES, Graph, complete_graph, from_edges, join
from .intervals import IntInterval, interval_max
from .qfunction import QCertificate, q
from .ramsey import WitnessCatalog, default_catalog, r3
from . import solvers


@dataclass(frozen=True)
class ComposeInput:
    """Validated input for compose_alpha2: two alpha <= 2 graphs and one
    clique in each, both of size omega(g2), with omega(g1) >= omega(g2)."""

    g1: Graph
    g2: Graph
    clique1: tuple[int, ...]
    clique2: tuple[int, ...]

    @classmethod
    def build(
        cls,
        g1: Graph,
        g2: Graph,
        clique1=None,
        clique2=None,
    ) -> "ComposeInput":
        """Validate, choosing lexicographically first cliques when unset."""
        omega2 = solvers.clique_number(g2)
        omega1 = solvers.clique_number(g1)
        if omega1 < omega2:
            raise PreconditionError(
                f"clique number of first graph ({omega1}) is below the second's ({omega2})"
            )
        for name, graph in (("first", g1), ("second", g2)):
            alpha = solvers.independence_number(graph)
            if alpha > 2:
                raise PreconditionError(
                    f"{name} graph has independence number {alpha} > 2"
                )
        if clique2 is None:
            clique2 = _lex_first_clique(g2, omega2)
        if clique1 is None:
            clique1 = _lex_first_clique(g1, omega2)
        clique1 = tuple(sorted(clique1))
        clique2 = tuple(sorted(clique2))
        for name, graph, clique in (("clique1", g1, clique1), ("clique2", g2, clique2)):
            if len(clique) != omega2:
                raise PreconditionError(
                    f"{name} has size {len(clique)}, need omega(g2) = {omega2}"
                )
            if not _is_clique(graph, clique):
                raise PreconditionError(f"{name} {clique} is not a clique")
        return cls(g1, g2, clique1, clique2)


def _is_clique(g: Graph, vertices) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def _lex_first_clique(g: Graph, size: int) -> tuple[int, ...]:
    """Lexicographically first clique of the given size (must exist)."""
    chosen: list[int] = []
    cand = (1 << g.n) - 1
    while len(chosen) < size:
        for v in range(g.n):
            if not cand >> v & 1:
                continue
            rest = cand & g.adj[v] & (~0 << (v + 1))
            if solvers._max_clique_within(g, rest)[0] >= size - len(chosen) - 1:
                chosen.append(v)
                cand = rest
                break
        else:
            raise PreconditionError(f"graph has no clique of size {size}")
    return tuple(chosen)


def compose_alpha2(inp: ComposeInput) -> Graph:
    """The merge described in the module docstring; output verified to have
    independence number <= 2 and clique number omega(g1) + omega(g2)."""
    g1, g2 = inp.g1, inp.g2
    omega2 = len(inp.clique2)
    n1, n2 = g1.n, g2.n
    total = n1 + n2 + omega2
    if total > MAX_VERTICES:
        raise CapacityError(f"composition needs {total} vertices, limit {MAX_VERTICES}")
    # layout: g1 on 0..n1-1, g2 on n1..n1+n2-1, R on the last omega2 labels
    off2 = n1
    off_r = n1 + n2
    v1 = set(inp.clique1)
    u2 = set(inp.clique2)
    edges = list(g1.edges())
    edges += [(off2 + a, off2 + b) for a, b in g2.edges()]
    for a in range(n1):
        for b in range(n2):
            if a in v1 and b in u2:
                continue
            edges.append((a, off2 + b))
    r_of = {i: off_r + i for i in range(omega2)}
    for i in range(omega2):
        for j in range(i + 1, omega2):
            edges.append((r_of[i], r_of[j]))  # R is a clique
        for a in v1:
            edges.append((a, r_of[i]))  # R u V1 complete
        for b in u2:
            edges.append((off2 + b, r_of[i]))  # R u U2 complete
    for i, (vi, ui) in enumerate(zip(sorted(v1), sorted(u2))):
        for a in g1.neighbors(vi):
            if a not in v1:
                edges.append((a, r_of[i]))
        for b in g2.neighbors(ui):
            if b not in u2:
                edges.append((off2 + b, r_of[i]))
    result = from_edges(total, edges)

    omega1 = solvers.clique_number(g1)
    got_omega = solvers.clique_number(result)
    got_alpha = solvers.independence_number(result)
    if got_omega != omega1 + omega2 or got_alpha > 2:
        raise RuntimeError(
            "internal error: composition verified wrong "
            f"(omega {got_omega} vs {omega1 + omega2}, alpha {got_alpha})"
        )
    return result


@dataclass(frozen=True)
class ExtremalWitness:
    """A graph on n vertices with chromatic number exactly n - k whose
    clique number attains the minimum possible value n - 2k + q(k)."""

    n: int
    k: int
    graph: Graph
    omega: int
    chi: int
    certificate: QCertificate
    deleted_edges: tuple[tuple[int, int], ...]


def build_extremal(n: int, k: int, catalog: WitnessCatalog | None = None) -> ExtremalWitness:
    """Construct and verify the extremal graph for the pair (n, k).

    Requires n >= 2k + 3 (below that the formula is not established) and an
    exactly determined q(k) with catalog witnesses for every block.
    """
    if k < 0:
        raise PreconditionError(f"need k >= 0, got {k}")
    if n < 2 * k + 3:
        raise PreconditionError(f"need n >= 2k + 3 = {2 * k + 3}, got n = {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"n = {n} exceeds {MAX_VERTICES}")
    value, cert = q(k)
    if not value.exact:
        raise PreconditionError(
            f"q({k}) is only known to lie in {value}; cannot certify an extremal graph"
        )
    if catalog is None:
        catalog = default_catalog()
    blocks = [catalog.witness_alpha2(2 * part + 1) for part in cert.parts]
    extra = n - sum(b.n for b in blocks)
    parts = blocks + ([complete_graph(extra)] if extra else [])
    graph = join(parts) if parts else complete_graph(0)

    target_omega = n - 2 * k + value.lo
    omega = solvers.clique_number(graph)
    if omega != target_omega:
        raise RuntimeError(
            f"internal error: joined graph has clique number {omega}, expected {target_omega}"
        )
    chi = solvers.chromatic_number(graph)
    target_chi = n - k
    if chi < target_chi:
        raise RuntimeError(
            f"internal error: joined graph has chromatic number {chi} < {target_chi}"
        )

    graph, deleted = delete_edges_until_chi(graph, target_chi)

    omega = solvers.clique_number(graph)
    if omega != target_omega:
        raise RuntimeError(
            f"internal error: final clique number {omega}, expected {target_omega}"
        )
    return ExtremalWitness(n, k, graph, omega, chi, cert, tuple(deleted))


def delete_edges_until_chi(graph: Graph, target_chi: int) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Delete edges one at a time, lexicographically, re-solving the
    chromatic number after each deletion, until it equals target_chi.

    A single deletion lowers the chromatic number by at most one, so the
    target is never overshot; deletions that would undershoot are skipped
    (that can only matter once the target is reached, but it keeps the loop
    safe under any target).
    """
    chi = solvers.chromatic_number(graph)
    if chi < target_chi:
        raise PreconditionError(
            f"chromatic number {chi} already below the target {target_chi}"
        )
    n = graph.n
    deleted: list[tuple[int, int]] = []
    adj = list(graph.adj)
    while chi > target_chi:
        progressed = False
        for u, v in _edges_of(adj):
            trial = list(adj)
            trial[u] &= ~(1 << v)
            trial[v] &= ~(1 << u)
            trial_chi = solvers.chromatic_number(Graph(n, tuple(trial)))
            if trial_chi >= target_chi:
                adj = trial
                chi = trial_chi
                deleted.append((u, v))
                progressed = True
                break
        if not progressed:
            raise PreconditionError(
                f"no single deletion keeps the chromatic number at or above {target_chi}"
            )
    return Graph(n, tuple(adj)), tuple(deleted)


def _edges_of(adj: list[int]) -> list[tuple[int, int]]:
    out = []
    for u in range(len(adj)):
        row = adj[u] >> (u + 1) << (u + 1)
        while row:
            low = row & -row
            out.append((u, low.bit_length() - 1))
            row ^= low
    return out


def chromatic_gap(n: int, mode: str = "auto") -> IntInterval:
    """Largest possible excess of chromatic number over clique number on n
    vertices.

    Oracle mode answers by exhaustive enumeration (n <= 8 only).  Formula
    mode maximizes k - q(k) over every k whose optimal block partition fits
    in n vertices (sum of block sizes 2 k_i + 1 is at most n); each such k
    is witnessed by an actual construction, and for n <= 8 the maximum
    provably matches the oracle.
    """
    if mode == "auto":
        mode = "oracle" if n <= 8 else "formula"
    if mode == "oracle":
        from . import oracle

        if n > 8:
            raise CapacityError(f"oracle mode supports n <= 8, got {n}")
        return IntInterval.point(oracle.brute_gap(n))
    if mode != "formula":
        raise ValueError(f"unknown mode {mode!r}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    candidates = [IntInterval.point(0)]  # k = 0: complete graph
    for k in range(1, n // 2 + 1):
        value, cert = q(k)
        if 2 * k + cert.num_parts <= n:
            candidates.append(k - value)
    return interval_max(*candidates)


def eq4_upper_bound(omega1: int, omega2: int) -> IntInterval:
    """Size bound satisfied by compose_alpha2 outputs: at most
    R(3, omega1 + omega2 + 1) - 1 vertices."""
    return r3(omega1 + omega2 + 1) - 1
