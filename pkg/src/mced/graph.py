"""Immutable simple-graph core: parsing, edit sets, components, modules.

Vertices are dense integers 0..n-1. A :class:`Graph` is immutable after
construction and safe to share across threads; editing produces a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Malformed graph or edit-set document."""


class InvalidEditError(ValueError):
    """An edit whose sign does not match the current edge state."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with adjacency stored per vertex.

    ``adj[v]`` is the frozenset of neighbors of ``v``; ``m`` is the edge
    count. Use :meth:`from_edges` to build a validated instance.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    m: int

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        sets: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in sets[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            sets[u].add(v)
            sets[v].add(u)
            m += 1
        return cls(n, tuple(frozenset(s) for s in sets), m)

    @classmethod
    def _from_adj(cls, adj: list[set[int]]) -> "Graph":
        # Trusted constructor: adjacency already symmetric and loop-free.
        m = sum(len(s) for s in adj) // 2
        return cls(len(adj), tuple(frozenset(s) for s in adj), m)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, sorted."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Edit:
    """A signed vertex pair: '+' adds the edge, '-' deletes it. u < v."""

    sign: str
    u: int
    v: int

    def __post_init__(self) -> None:
        if self.sign not in ("+", "-"):
            raise ValueError(f"edit sign must be '+' or '-', got {self.sign!r}")
        if self.u == self.v:
            raise ValueError(f"edit pair must have distinct vertices, got {self.u}")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)

    def negated(self) -> "Edit":
        return Edit("-" if self.sign == "+" else "+", self.u, self.v)

    def __str__(self) -> str:
        return f"{self.sign} {self.u} {self.v}"


@dataclass(frozen=True)
class EditSet:
    """Ordered collection of edits; no vertex pair appears twice."""

    edits: tuple[Edit, ...]

    def __post_init__(self) -> None:
        seen: set[tuple[int, int]] = set()
        for e in self.edits:
            if e.pair in seen:
                raise ValueError(f"pair ({e.u}, {e.v}) edited more than once")
            seen.add(e.pair)

    @classmethod
    def of(cls, *edits: tuple[str, int, int] | Edit) -> "EditSet":
        items = tuple(e if isinstance(e, Edit) else Edit(*e) for e in edits)
        return cls(items)

    def negated(self) -> "EditSet":
        return EditSet(tuple(e.negated() for e in self.edits))

    def pairs(self) -> set[tuple[int, int]]:
        return {e.pair for e in self.edits}

    def __len__(self) -> int:
        return len(self.edits)

    def __iter__(self) -> Iterator[Edit]:
        return iter(self.edits)

    def __str__(self) -> str:
        return "\n".join(str(e) for e in self.edits)


EMPTY_EDITS = EditSet(())


def negate(edits: EditSet) -> EditSet:
    """Swap every '+' for '-' and vice versa."""
    return edits.negated()


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: a "n m" header, then m lines "u v".

    Lines starting with '#' and blank lines are ignored. Raises
    :class:`ParseError` naming the offending line on any violation.
    """
    header: tuple[int, int] | None = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError(f"line {lineno}: expected header 'n m', got {raw!r}")
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer header {raw!r}") from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError(f"line {lineno}: negative count in header")
            header_line = lineno
            continue
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected edge 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer edge {raw!r}") from None
        edges.append((u, v))
        edge_lines.append(lineno)

    if header is None:
        raise ParseError("line 1: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(
            f"line {header_line}: header declares m={m} edges, found {len(edges)}"
        )

    sets: list[set[int]] = [set() for _ in range(n)]
    for (u, v), lineno in zip(edges, edge_lines):
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range in edge {u} {v}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if v in sets[u]:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        sets[u].add(v)
        sets[v].add(u)
    return Graph._from_adj(sets)


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list form: "n m" then edges sorted by (u, v)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edit_set(text: str) -> EditSet:
    """Parse one edit per line: "+ u v" or "- u v"; '#' lines ignored."""
    edits: list[Edit] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3 or fields[0] not in ("+", "-"):
            raise ParseError(f"line {lineno}: expected '+ u v' or '- u v', got {raw!r}")
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        try:
            edits.append(Edit(fields[0], u, v))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    try:
        return EditSet(tuple(edits))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_edit_set(edits: EditSet) -> str:
    return "".join(f"{e}\n" for e in edits)


def apply_edits(g: Graph, edits: EditSet) -> Graph:
    """Apply an edit set, returning the edited graph.

    Each '-' edit must delete an existing edge and each '+' edit must add a
    missing one; otherwise :class:`InvalidEditError` is raised naming the
    pair. ``apply_edits(apply_edits(g, f), negate(f)) == g``.
    """
    adj = [set(s) for s in g.adj]
    for e in edits:
        if not (0 <= e.u < g.n and 0 <= e.v < g.n):
            raise InvalidEditError(f"edit {e} out of range for n={g.n}")
        present = e.v in adj[e.u]
        if e.sign == "-":
            if not present:
                raise InvalidEditError(f"edit {e} deletes a non-edge")
            adj[e.u].discard(e.v)
            adj[e.v].discard(e.u)
        else:
            if present:
                raise InvalidEditError(f"edit {e} adds an existing edge")
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
    return Graph._from_adj(adj)


def toggle_edits(g: Graph, pairs: Iterable[tuple[int, int]]) -> EditSet:
    """Build the edit set that toggles the given distinct pairs of g."""
    items = []
    for u, v in pairs:
        sign = "-" if g.has_edge(u, v) else "+"
        items.append(Edit(sign, u, v))
    return EditSet(tuple(items))


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition V(g) into maximal connected vertex sets, sorted by minimum."""
    seen = bytearray(g.n)
    comps: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = 1
        comp = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = 1
                    comp.append(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def is_module(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex outside s is adjacent to all of s or none of s."""
    mod = frozenset(s)
    size = len(mod)
    if size <= 1 or size == g.n:
        return True
    rep = next(iter(mod))
    outside_rep = g.adj[rep] - mod
    for v in mod:
        if v != rep and g.adj[v] - mod != outside_rep:
            return False
    return True


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``keep``, relabelled densely by ascending old id.

    Returns the new graph and the tuple mapping new vertex -> old vertex.
    """
    old_ids = tuple(sorted(set(keep)))
    index = {old: new for new, old in enumerate(old_ids)}
    adj: list[set[int]] = [set() for _ in old_ids]
    for new, old in enumerate(old_ids):
        for w in g.adj[old]:
            j = index.get(w)
            if j is not None:
                adj[new].add(j)
    return Graph._from_adj(adj), old_ids
