"""Known values and bounds for the Ramsey numbers R(3, ell), their inverse,
and a self-certifying catalog of extremal graphs with independence number 2.

R(3, ell) is exactly known for ell <= 9; for ell = 10 and 11 only the
published bracketing bounds are stored, and everything beyond that is
extrapolated as a valid interval (monotone lower step +1, upper step +ell).
All unknowns propagate as IntInterval values, never as point estimates.

small_omega(x) inverts the table: the least clique number possible on x
vertices when no three vertices are pairwise nonadjacent.  It is exact
wherever x falls between two exactly known Ramsey values.

The catalog stores the classic cyclic constructions that meet the known
lower bounds (on 5, 8, 13, and 17 vertices, as complements of triangle-free
circulants) and derives witnesses for the in-between sizes.  Nothing is
trusted: every graph the catalog hands out is re-verified by the exact
solvers, and external graph6 witnesses are rejected with a diagnostic if
they fail verification.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .errors import UnsupportedWitnessError
from .graphs import (
    CirculantSpec,
    Graph,
    complement,
    complete_graph,
    empty_graph,
    induced_subgraph,
    join,
    parse_graph6,
)
from .intervals import IntInterval
from . import solvers

log = logging.getLogger(__name__)

WITNESS_DIR_ENV = "RAMSEY_WITNESS_DIR"

# Exact values R(3, ell) for ell = 1..9, then published brackets.
_EXACT_R3 = (1, 3, 6, 9, 14, 18, 23, 28, 36)
_BRACKETED_R3 = {10: (40, 43), 11: (46, 51)}
_LAST_TABULATED = 11


@lru_cache(maxsize=None)
def r3(ell: int) -> IntInterval:
    """Bounds on R(3, ell); exact (degenerate) for ell <= 9."""
    if ell <= 0:
        raise ValueError(f"R(3, {ell}) undefined; need ell >= 1")
    if ell <= len(_EXACT_R3):
        return IntInterval.point(_EXACT_R3[ell - 1])
    if ell in _BRACKETED_R3:
        return IntInterval(*_BRACKETED_R3[ell])
    prev = r3(ell - 1)
    return IntInterval(prev.lo + 1, prev.hi + (ell - 1))


def small_omega(x: int) -> IntInterval:
    """Bounds on the least clique number over x-vertex graphs with no
    independent triple.  Exact iff the relevant Ramsey values are."""
    if x <= 0:
        raise ValueError(f"need x >= 1, got {x}")
    lo = 1
    while r3(lo + 1).hi <= x:
        lo += 1
    hi = 1
    while r3(hi + 1).lo <= x:
        hi += 1
    return IntInterval(lo, hi)


@dataclass(frozen=True)
class RamseyEntry:
    """Row of the catalog: bounds for R(3, ell) plus an optional verified
    witness on bounds.lo - 1 vertices with clique number ell - 1 and
    independence number at most 2."""

    ell: int
    bounds: IntInterval
    witness: Graph | None = None
    source: str | None = None


# Classic lower-bound constructions, stored as their triangle-free side and
# complemented at load so the stored graph has independence number <= 2.
# The 5/8/13-vertex ones are the classic cyclic graphs.  No 17-vertex
# circulant is triangle-free with independence number 5 (exhaustive check
# over all connection sets), so that witness is a frozen graph6 literal,
# found by local search and verified like everything else at load.
_G17_TRIANGLE_FREE = "P??_eM_d?[HU}?OI[@?qBIcO"
_BUILTIN_WITNESSES: tuple[tuple[int, int, CirculantSpec | str | None, bool], ...] = (
    # (ell, vertex count, triangle-free side, complemented?)
    (1, 0, None, False),
    (2, 2, CirculantSpec(2, frozenset({1})), True),
    (3, 5, CirculantSpec(5, frozenset({1})), False),
    (4, 8, CirculantSpec(8, frozenset({1, 4})), True),
    (5, 13, CirculantSpec(13, frozenset({1, 5})), True),
    (6, 17, _G17_TRIANGLE_FREE, True),
)

MAX_WITNESS_VERTICES = 35


class WitnessCatalog:
    """Verified extremal graphs with independence number <= 2.

    Built-in witnesses cover clique numbers up to 5 (17 vertices); larger
    ones (22, 27, 35 vertices) may be supplied as graph6 files in a
    directory, named by vertex count ("22.g6").  Files that fail to parse
    or to verify are skipped and recorded in `diagnostics`.
    """

    def __init__(self, witness_dir: str | Path | None = None):
        self._bases: dict[int, Graph] = {}  # vertex count -> verified graph
        self._clique_of_base: dict[int, int] = {}
        self._witness_cache: dict[int, Graph] = {}
        self.diagnostics: list[str] = []
        for ell, size, spec, complemented in _BUILTIN_WITNESSES:
            if spec is None:
                graph = empty_graph(size)
            else:
                graph = spec.graph() if isinstance(spec, CirculantSpec) else parse_graph6(spec)
                if complemented:
                    graph = complement(graph)
            self._admit(graph, size, ell - 1, f"built-in witness for ell={ell}")
        if witness_dir is not None:
            self._load_external(Path(witness_dir))

    def _admit(self, graph: Graph, size: int, expected_clique: int, source: str) -> None:
        if graph.n != size:
            raise AssertionError(f"{source}: size mismatch")
        self._verify(graph, expected_clique, source)
        self._bases[size] = graph
        self._clique_of_base[size] = expected_clique

    @staticmethod
    def _verify(graph: Graph, expected_clique: int, source: str) -> None:
        alpha = solvers.independence_number(graph)
        if alpha > 2:
            raise ValueError(f"{source}: independence number {alpha} > 2")
        omega = solvers.clique_number(graph)
        if omega != expected_clique:
            raise ValueError(
                f"{source}: clique number {omega}, expected {expected_clique}"
            )

    def _load_external(self, directory: Path) -> None:
        if not directory.is_dir():
            self.diagnostics.append(f"witness directory {directory} does not exist")
            log.warning("witness directory %s does not exist", directory)
            return
        for path in sorted(directory.iterdir()):
            if not path.is_file():
                continue
            try:
                size = int(path.stem)
            except ValueError:
                self.diagnostics.append(f"{path.name}: name is not a vertex count")
                continue
            try:
                graph = parse_graph6(path.read_text().strip().splitlines()[0])
                if graph.n != size:
                    raise ValueError(f"file encodes {graph.n} vertices, name says {size}")
                expected = small_omega(size)
                if not expected.exact:
                    raise ValueError(f"clique target for {size} vertices is not exact")
                self._verify(graph, expected.lo, path.name)
            except (ValueError, IndexError) as exc:
                self.diagnostics.append(f"{path.name}: rejected: {exc}")
                log.warning("rejected witness file %s: %s", path.name, exc)
                continue
            self._bases[size] = graph
            self._clique_of_base[size] = small_omega(size).lo

    def base_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(self._bases))

    def entries(self) -> list[RamseyEntry]:
        """One row per tabulated ell, with the witness where the catalog
        holds a graph on exactly R(3, ell).lo - 1 vertices."""
        rows = []
        for ell in range(1, _LAST_TABULATED + 1):
            bounds = r3(ell)
            size = bounds.lo - 1
            witness = self._bases.get(size)
            if witness is not None and self._clique_of_base[size] != ell - 1:
                witness = None
            rows.append(RamseyEntry(ell, bounds, witness))
        return rows

    def witness_alpha2(self, x: int) -> Graph:
        """A verified x-vertex graph with independence number <= 2 and the
        least possible clique number small_omega(x).

        Stored witnesses are returned as-is.  Otherwise the graph is
        derived: by joining dominating vertices onto a smaller base (each
        added vertex raises the clique number by exactly one and cannot
        enlarge an independent set), or, where no base lines up, as an
        induced subgraph of the next stored witness (which cannot lower
        the clique number below small_omega(x)).  Either way the result is
        re-verified before it is returned.
        """
        if x < 1:
            raise UnsupportedWitnessError(f"need x >= 1, got {x}")
        if x > MAX_WITNESS_VERTICES:
            raise UnsupportedWitnessError(
                f"x = {x} outside the supported range 1..{MAX_WITNESS_VERTICES}"
            )
        if x in self._witness_cache:
            return self._witness_cache[x]
        target = small_omega(x)
        if not target.exact:
            raise UnsupportedWitnessError(
                f"clique target for x = {x} is only known to lie in {target}"
            )
        w = target.lo
        graph = self._construct(x, w)
        if graph is None:
            raise UnsupportedWitnessError(
                f"no catalog construction reaches {x} vertices with clique {w}; "
                f"stored bases: {self.base_sizes()}"
            )
        self._verify(graph, w, f"derived witness on {x} vertices")
        self._witness_cache[x] = graph
        return graph

    def _construct(self, x: int, w: int) -> Graph | None:
        if x in self._bases and self._clique_of_base[x] == w:
            return self._bases[x]
        # dominating augmentation: base on fewer vertices, smaller clique
        candidates = [
            size for size, wb in self._clique_of_base.items()
            if size < x and wb + (x - size) == w
        ]
        if candidates:
            base = self._bases[max(candidates)]
            return join([base, complete_graph(x - base.n)])
        # induced subgraph of a bigger witness with the same clique number
        candidates = [
            size for size, wb in self._clique_of_base.items()
            if size > x and wb == w
        ]
        if candidates:
            base = self._bases[min(candidates)]
            return induced_subgraph(base, range(x))
        return None


_default_catalog: WitnessCatalog | None = None


def default_catalog() -> WitnessCatalog:
    """Process-wide catalog; honors the RAMSEY_WITNESS_DIR environment
    variable on first use."""
    global _default_catalog
    if _default_catalog is None:
        _default_catalog = WitnessCatalog(os.environ.get(WITNESS_DIR_ENV))
    return _default_catalog


def witness_alpha2(x: int) -> Graph:
    return default_catalog().witness_alpha2(x)
