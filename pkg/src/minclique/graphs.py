"""Immutable simple graphs on at most 64 vertices, as bitset adjacency rows.

Vertices are dense labels 0..n-1.  Row u is an integer whose bit v is set
iff uv is an edge, so neighborhood intersection is a single AND — this is
what makes the exact solvers fast at the sizes we care about (n <= 40).

Also provides the construction primitives used throughout (complement,
join, disjoint union, induced subgraph, circulants) and graph6
serialization, the interchange format for small-graph corpora.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityError, Graph6Error, InvalidEdgeError, InvalidVertexError

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; adj[u] is the neighborhood of u as a bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise InvalidVertexError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidVertexError(f"row {u} has bits >= n set")
            if row >> u & 1:
                raise InvalidEdgeError(f"loop at vertex {u}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self.adj[u] >> v & 1) != (self.adj[v] >> u & 1):
                    raise InvalidEdgeError(f"asymmetric adjacency between {u} and {v}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                out.append((u, v))
        return out

    @property
    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} outside 0..{self.n - 1}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterable[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _from_rows(n: int, rows: Sequence[int]) -> Graph:
    return Graph(n, tuple(rows))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n vertices with exactly the given edges (duplicates collapsed)."""
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertexError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidEdgeError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _from_rows(n, rows)


def empty_graph(n: int) -> Graph:
    return _from_rows(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return _from_rows(n, [full ^ (1 << v) for v in range(n)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return _from_rows(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Block-diagonal union; part i occupies a contiguous label range."""
    total = sum(p.n for p in parts)
    if total > MAX_VERTICES:
        raise CapacityError(f"union of {total} vertices exceeds {MAX_VERTICES}")
    rows: list[int] = []
    offset = 0
    for part in parts:
        rows.extend(row << offset for row in part.adj)
        offset += part.n
    return _from_rows(total, rows)


def join(parts: Sequence[Graph]) -> Graph:
    """Disjoint union plus every edge between vertices of distinct parts."""
    if not parts:
        raise ValueError("join of no parts")
    base = disjoint_union(parts)
    full = (1 << base.n) - 1
    rows = []
    offset = 0
    for part in parts:
        part_mask = ((1 << part.n) - 1) << offset
        for v in range(part.n):
            rows.append(base.adj[offset + v] | (full & ~part_mask))
        offset += part.n
    return _from_rows(base.n, rows)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph on `keep`, relabeled 0..|keep|-1 in ascending vertex order."""
    kept = sorted(set(keep))
    for v in kept:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(kept)}
    rows = [0] * len(kept)
    for v in kept:
        for u in bits(g.adj[v]):
            if u in index:
                rows[index[v]] |= 1 << index[u]
    return _from_rows(len(kept), rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the permutation sending v to perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidVertexError("not a permutation of the vertex set")
    rows = [0] * g.n
    for v in range(g.n):
        for u in bits(g.adj[v]):
            rows[perm[v]] |= 1 << perm[u]
    return _from_rows(g.n, rows)


@dataclass(frozen=True)
class CirculantSpec:
    """Circulant graph on n vertices: i ~ j iff the cyclic distance of i, j
    is one of `connections` (each between 1 and n // 2)."""

    n: int
    connections: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "connections", frozenset(self.connections))
        for d in self.connections:
            if not 1 <= d <= self.n // 2:
                raise InvalidEdgeError(
                    f"connection distance {d} invalid for n={self.n}"
                )

    def graph(self) -> Graph:
        return circulant(self.n, self.connections)


def circulant(n: int, connections: Iterable[int]) -> Graph:
    """Circulant graph: vertex i adjacent to (i +/- d) mod n for each distance d."""
    spec = CirculantSpec(n, frozenset(connections))
    edges = []
    for i in range(n):
        for d in spec.connections:
            edges.append((i, (i + d) % n))
    return from_edges(n, ((min(u, v), max(u, v)) for u, v in edges if u != v))


# ---------------------------------------------------------------------------
# graph6: 6-bit big-endian encoding of the upper triangle in column order.
# Header is chr(n + 63) for n <= 62, else '~' followed by n as three 6-bit
# groups.  Bytes are printable ASCII 63..126.
# ---------------------------------------------------------------------------

_G6_PREFIX = ">>graph6<<"


def serialize_graph6(g: Graph) -> str:
    if g.n <= 62:
        header = chr(g.n + 63)
    else:
        header = "~" + "".join(
            chr(63 + (g.n >> shift & 63)) for shift in (12, 6, 0)
        )
    bitbuf = []
    for col in range(1, g.n):
        for row in range(col):
            bitbuf.append(g.adj[row] >> col & 1)
    while len(bitbuf) % 6:
        bitbuf.append(0)
    body = "".join(
        chr(63 + (bitbuf[i] << 5 | bitbuf[i + 1] << 4 | bitbuf[i + 2] << 3
                  | bitbuf[i + 3] << 2 | bitbuf[i + 4] << 1 | bitbuf[i + 5]))
        for i in range(0, len(bitbuf), 6)
    )
    return header + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_PREFIX):
        s = s[len(_G6_PREFIX):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range 63..126")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error("graphs beyond 258047 vertices are not supported")
        if len(s) < 4:
            raise Graph6Error("truncated long-form vertex count")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 vertex count {n} exceeds {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) < expected:
        raise Graph6Error(f"truncated bit stream: {len(body)} bytes, need {expected}")
    if len(body) > expected:
        raise Graph6Error(f"{len(body) - expected} trailing bytes after bit stream")
    stream = 0
    for ch in body:
        stream = stream << 6 | (ord(ch) - 63)
    total = 6 * len(body)
    rows = [0] * n
    pos = 0
    for col in range(1, n):
        for row in range(col):
            if stream >> (total - 1 - pos) & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            pos += 1
    if stream & ((1 << (total - nbits)) - 1):
        raise Graph6Error("nonzero padding bits")
    return _from_rows(n, rows)
