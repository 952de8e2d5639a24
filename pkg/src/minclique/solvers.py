"""Exact clique number, chromatic number, and independence number.

Clique: branch and bound over bitset candidate sets, vertices preordered by
descending degree (ties by lowest index), with a greedy-coloring upper bound
for pruning.  Chromatic number: iterate k upward from the best lower bound,
deciding k-colorability by backtracking with forward checking; symmetry is
broken by preassigning a maximum clique to distinct colors and by allowing
at most one brand-new color per step.  Everything is exact; the test suite
pins all three against brute-force enumeration on small graphs.

Independence number is computed as the clique number of the complement, so
it shares the clique solver's correctness and never touches the matching
code (the alpha <= 2 chromatic identity check needs the two routes to stay
independent).
"""

from __future__ import annotations

from .graphs import Graph, bits, complement, popcount


def max_clique(g: Graph) -> frozenset[int]:
    """A maximum clique of g (deterministic choice)."""
    size, members = _max_clique_within(g, (1 << g.n) - 1)
    assert size == len(members)
    return frozenset(members)


def clique_number(g: Graph) -> int:
    return _max_clique_within(g, (1 << g.n) - 1)[0]


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    clique = max_clique(g)
    alpha = independence_number(g)
    lower = max(len(clique), -(-g.n // alpha))
    for k in range(lower, g.n + 1):
        if _colorable(g, k, clique, alpha):
            return k
    raise AssertionError("unreachable: every graph is n-colorable")


def is_k_colorable(g: Graph, k: int) -> bool:
    """True iff g has a proper coloring with at most k colors."""
    if k < 0:
        raise ValueError("color count must be nonnegative")
    if g.n == 0:
        return True
    if k == 0:
        return False
    if k >= g.n:
        return True
    clique = max_clique(g)
    if len(clique) > k:
        return False
    alpha = independence_number(g)
    if -(-g.n // alpha) > k:
        return False
    return _colorable(g, k, clique, alpha)


# -- clique branch and bound ------------------------------------------------


def _max_clique_within(g: Graph, mask: int) -> tuple[int, tuple[int, ...]]:
    """Maximum clique of the subgraph induced on `mask` (original labels)."""
    verts = [v for v in range(g.n) if mask >> v & 1]
    if not verts:
        return 0, ()
    verts.sort(key=lambda v: (-popcount(g.adj[v] & mask), v))
    pos = {v: i for i, v in enumerate(verts)}
    radj = [0] * len(verts)
    for v in verts:
        row = 0
        for u in bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        radj[pos[v]] = row

    best_size = 0
    best_mask = 0

    def expand(cand: int, size: int, current: int) -> None:
        nonlocal best_size, best_mask
        seq = _greedy_color_order(cand, radj)
        for i in range(len(seq) - 1, -1, -1):
            v, color = seq[i]
            if size + color <= best_size:
                return
            sub = cand & radj[v]
            if sub:
                expand(sub, size + 1, current | 1 << v)
            elif size + 1 > best_size:
                best_size = size + 1
                best_mask = current | 1 << v
            cand &= ~(1 << v)

    expand((1 << len(verts)) - 1, 0, 0)
    return best_size, tuple(sorted(verts[i] for i in bits(best_mask)))


def _greedy_color_order(cand: int, radj: list[int]) -> list[tuple[int, int]]:
    """Sequentially color the candidate set; returns (vertex, color) with
    colors nondecreasing, so a reverse scan sees upper bounds first."""
    seq = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            seq.append((v, color))
            uncolored ^= low
            avail &= ~radj[v] & uncolored
    return seq


# -- k-colorability backtracking ---------------------------------------------


def _colorable(g: Graph, k: int, clique: frozenset[int], alpha: int) -> bool:
    """Backtracking decision with forward checking.

    `clique` is preassigned to colors 0..|clique|-1; a vertex may open color
    c only if c-1 is already in use; no color class may exceed `alpha`
    vertices.  All three cuts are exact, so the answer is too.
    """
    n = g.n
    if len(clique) > k:
        return False
    colors = [-1] * n
    forbidden = [0] * n  # bitmask of colors used by colored neighbors
    class_size = [0] * k
    full = (1 << k) - 1

    ordered_clique = sorted(clique)
    for c, v in enumerate(ordered_clique):
        colors[v] = c
        class_size[c] += 1
        for u in bits(g.adj[v]):
            forbidden[u] |= 1 << c
    max_used = len(ordered_clique) - 1

    uncolored = [v for v in range(n) if colors[v] < 0]
    if not uncolored:
        return True

    def pick() -> int:
        window = (1 << min(max_used + 2, k)) - 1
        best_v = -1
        best_key = None
        for v in range(n):
            if colors[v] >= 0:
                continue
            avail = popcount(window & ~forbidden[v])
            key = (avail, -popcount(g.adj[v]), v)
            if best_key is None or key < best_key:
                best_key = key
                best_v = v
        return best_v

    def solve(remaining: int) -> bool:
        nonlocal max_used
        if remaining == 0:
            return True
        v = pick()
        window = (1 << min(max_used + 2, k)) - 1
        options = window & ~forbidden[v]
        while options:
            low = options & -options
            options ^= low
            c = low.bit_length() - 1
            if class_size[c] >= alpha:
                continue
            colors[v] = c
            class_size[c] += 1
            saved_max = max_used
            max_used = max(max_used, c)
            touched = []
            dead = False
            for u in bits(g.adj[v]):
                if colors[u] < 0 and not forbidden[u] >> c & 1:
                    forbidden[u] |= 1 << c
                    touched.append(u)
                    if forbidden[u] == full:
                        dead = True
            if not dead and solve(remaining - 1):
                return True
            for u in touched:
                forbidden[u] &= ~(1 << c)
            class_size[c] -= 1
            colors[v] = -1
            max_used = saved_max
        return False

    return solve(len(uncolored))
