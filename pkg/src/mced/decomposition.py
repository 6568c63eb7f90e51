"""Modular decomposition trees and quotient graphs.

The decomposition recursively splits by connectivity (P nodes) and
co-connectivity (S nodes); for a node whose induced subgraph is connected
with connected complement (N node), the children are the maximal proper
strong modules, computed by partition refinement around a pivot vertex.

All functions are pure over immutable graphs and safe to call concurrently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph

LABEL_PARALLEL = "P"
LABEL_SERIES = "S"
LABEL_PRIME = "N"
LABEL_LEAF = "LEAF"


@dataclass(frozen=True)
class MDNode:
    """Tree node: leaf for a vertex, or P/S/N over child strong modules."""

    label: str
    vertex: int | None
    children: tuple["MDNode", ...]
    min_vertex: int
    size: int

    def is_leaf(self) -> bool:
        return self.label == LABEL_LEAF

    def members(self) -> list[int]:
        """Vertices covered by this node, ascending (computed on demand)."""
        out: list[int] = []
        stack = [self]
        while stack:
            nd = stack.pop()
            if nd.is_leaf():
                out.append(nd.vertex)  # type: ignore[arg-type]
            else:
                stack.extend(nd.children)
        out.sort()
        return out


@dataclass(frozen=True)
class MDTree:
    root: MDNode | None
    n: int

    def internal_nodes(self) -> list[MDNode]:
        out = []
        if self.root is None:
            return out
        stack = [self.root]
        while stack:
            nd = stack.pop()
            if not nd.is_leaf():
                out.append(nd)
                stack.extend(nd.children)
        return out


def _components(adj: Sequence[frozenset[int]], verts: list[int]) -> list[list[int]]:
    vset = set(verts)
    seen: set[int] = set()
    comps = []
    for s in verts:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in vset and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def _co_components(adj: Sequence[frozenset[int]], verts: list[int]) -> list[list[int]]:
    """Connected components of the complement, without materializing it.

    Uses a linked list of unassigned vertices; processing vertex x walks the
    list once, absorbing every non-neighbor. Each walk step is either an
    absorption (each vertex absorbed once) or crosses an edge of x, so the
    total cost is linear in the induced subgraph size.
    """
    nxt: dict[int, int | None] = {}
    prv: dict[int, int | None] = {}
    for i, v in enumerate(verts):
        nxt[v] = verts[i + 1] if i + 1 < len(verts) else None
        prv[v] = verts[i - 1] if i > 0 else None
    head: int | None = verts[0]

    def remove(v: int) -> None:
        nonlocal head
        p, q = prv[v], nxt[v]
        if p is None:
            head = q
        else:
            nxt[p] = q
        if q is not None:
            prv[q] = p

    comps = []
    while head is not None:
        start = head
        remove(start)
        comp = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            ax = adj[x]
            z = head
            while z is not None:
                zn = nxt[z]
                if z not in ax:
                    remove(z)
                    comp.append(z)
                    stack.append(z)
                z = zn
        comps.append(comp)
    return comps


def _refine_max_modules_avoiding(
    adj: Sequence[frozenset[int]], sub: set[int], pivot: int
) -> list[set[int]]:
    """Partition of sub minus pivot into the maximal modules avoiding pivot.

    Starts from {N(pivot), non-neighbors} and splits classes by vertex
    splitters until stable (every class a module of the induced subgraph).
    A final stability verification guards the smaller-half requeue rule:
    any violation re-enqueues a distinguishing splitter and iterates.
    """
    nv = (adj[pivot] & sub) - {pivot}
    rest = sub - nv - {pivot}
    classes: dict[int, set[int]] = {}
    class_of: dict[int, int] = {}
    next_id = 0
    for init in (nv, rest):
        if init:
            classes[next_id] = set(init)
            for w in init:
                class_of[w] = next_id
            next_id += 1

    queue: deque[int] = deque(sorted(sub))
    queued = dict.fromkeys(sub, True)
    while True:
        while queue:
            z = queue.popleft()
            queued[z] = False
            zc = class_of.get(z)
            hits: dict[int, list[int]] = {}
            for w in adj[z]:
                c = class_of.get(w)
                if c is not None and c != zc:
                    hits.setdefault(c, []).append(w)
            for c, members in hits.items():
                cls = classes[c]
                if len(members) == len(cls):
                    continue
                part = set(members)
                cls -= part
                classes[next_id] = part
                for w in part:
                    class_of[w] = next_id
                smaller = part if len(part) <= len(cls) else cls
                for w in smaller:
                    if not queued[w]:
                        queued[w] = True
                        queue.append(w)
                next_id += 1

        violator = None
        for cls in classes.values():
            if len(cls) == 1:
                continue
            it = iter(cls)
            rep = next(it)
            ref = (adj[rep] & sub) - cls
            for u in it:
                here = (adj[u] & sub) - cls
                if here != ref:
                    violator = next(iter(here ^ ref))
                    break
            if violator is not None:
                break
        if violator is None:
            break
        queued[violator] = True
        queue.append(violator)

    return list(classes.values())


def _module_closure(hadj: list[set[int]], hn: int, a: int, b: int) -> set[int]:
    """Smallest module of the quotient graph containing both a and b."""
    grown = {a}
    universal = set(hadj[a])
    queue = [b]
    while queue:
        w = queue.pop()
        if w in grown:
            continue
        grown.add(w)
        universal.discard(w)
        nb = hadj[w]
        stay = universal & nb
        absorb = (universal - nb) | (nb - grown - stay)
        universal = stay
        queue.extend(absorb)
        if len(grown) == hn:
            break
    return grown


def _prime_parts(adj: Sequence[frozenset[int]], verts: list[int]) -> list[list[int]]:
    """Maximal proper strong modules of a connected, co-connected subgraph."""
    sub = set(verts)
    pivot = min(verts)
    classes = _refine_max_modules_avoiding(adj, sub, pivot)

    # Quotient over {pivot} + classes; index 0 is the pivot's singleton.
    reps = [pivot] + [min(c) for c in classes]
    hn = len(reps)
    class_idx: dict[int, int] = {}
    for i, cls in enumerate(classes, start=1):
        for w in cls:
            class_idx[w] = i
    hadj: list[set[int]] = []
    for i, r in enumerate(reps):
        s = set()
        for w in adj[r]:
            if w == pivot:
                s.add(0)
            else:
                j = class_idx.get(w)
                if j is not None:
                    s.add(j)
        s.discard(i)
        hadj.append(s)

    # The maximal proper module containing the pivot is the union of all
    # proper closures through it; quotient vertices outside it are exactly
    # the other children of the prime node.
    acc = {0}
    for q in range(1, hn):
        if q in acc:
            continue
        closure = _module_closure(hadj, hn, 0, q)
        if len(closure) < hn:
            acc |= closure

    pivot_part = [pivot]
    parts = []
    for i, cls in enumerate(classes, start=1):
        if i in acc:
            pivot_part.extend(cls)
        else:
            parts.append(sorted(cls))
    parts.append(sorted(pivot_part))
    if len(parts) < 4:  # pragma: no cover - guards the primality invariant
        raise AssertionError("prime node with fewer than 4 strong modules")
    return parts


def decompose(g: Graph) -> MDTree:
    """Compute the unique modular decomposition tree of g.

    Children of every node are ordered by smallest contained vertex, so
    equal graphs produce identical trees.
    """
    if g.n == 0:
        return MDTree(None, 0)
    adj = g.adj

    protos: list[dict] = []
    tasks: list[tuple[list[int], int]] = [(list(range(g.n)), -1)]
    while tasks:
        verts, parent = tasks.pop()
        idx = len(protos)
        if parent >= 0:
            protos[parent]["child_idx"].append(idx)
        if len(verts) == 1:
            protos.append({"label": LABEL_LEAF, "vertex": verts[0], "child_idx": []})
            continue
        parts = _components(adj, verts)
        if len(parts) > 1:
            label = LABEL_PARALLEL
        else:
            parts = _co_components(adj, verts)
            if len(parts) > 1:
                label = LABEL_SERIES
            else:
                label = LABEL_PRIME
                parts = _prime_parts(adj, verts)
        protos.append({"label": label, "vertex": None, "child_idx": []})
        for p in parts:
            tasks.append((p, idx))

    nodes: list[MDNode | None] = [None] * len(protos)
    for i in range(len(protos) - 1, -1, -1):
        pr = protos[i]
        if pr["label"] == LABEL_LEAF:
            v = pr["vertex"]
            nodes[i] = MDNode(LABEL_LEAF, v, (), v, 1)
        else:
            kids = sorted(
                (nodes[j] for j in pr["child_idx"]), key=lambda nd: nd.min_vertex
            )
            nodes[i] = MDNode(
                pr["label"],
                None,
                tuple(kids),
                kids[0].min_vertex,
                sum(k.size for k in kids),
            )
    return MDTree(nodes[0], g.n)


def q_partition(tree: MDTree) -> list[frozenset[int]]:
    """Partition grouping the leaf children of each P/S node.

    Leaf children of N nodes become singleton parts; a one-vertex graph
    yields its single vertex as one part. Parts are sorted by minimum.
    """
    if tree.root is None:
        return []
    if tree.root.is_leaf():
        return [frozenset((tree.root.vertex,))]
    parts: list[frozenset[int]] = []
    stack = [tree.root]
    while stack:
        nd = stack.pop()
        leaves = [c.vertex for c in nd.children if c.is_leaf()]
        if nd.label == LABEL_PRIME:
            parts.extend(frozenset((x,)) for x in leaves)
        elif leaves:
            parts.append(frozenset(leaves))
        stack.extend(c for c in nd.children if not c.is_leaf())
    parts.sort(key=min)
    return parts


KIND_UNIT = "U"
KIND_PARALLEL = "P"
KIND_SERIES = "S"


@dataclass(frozen=True)
class QVertex:
    kind: str
    members: tuple[int, ...]


@dataclass(frozen=True)
class QuotientGraph:
    """Quotient of a graph by a congruence partition, with typed vertices.

    A vertex is U (one member), P (>= 2 members inducing an edgeless
    subgraph) or S (>= 2 members inducing a clique); adjacency between
    quotient vertices is inherited from any representatives.
    """

    vertices: tuple[QVertex, ...]
    adj: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj[i]


class QuotientError(ValueError):
    """A supplied part violates the quotient invariants."""


def quotient_graph(g: Graph, parts: Iterable[Iterable[int]]) -> QuotientGraph:
    """Build the typed quotient of g over the given congruence partition.

    Every part must be a module of g and induce a clique, an edgeless
    subgraph, or a single vertex; otherwise :class:`QuotientError` is raised.
    """
    norm = [tuple(sorted(set(p))) for p in parts]
    norm.sort(key=lambda t: t[0] if t else -1)
    seen: set[int] = set()
    for part in norm:
        if not part:
            raise QuotientError("empty part")
        for v in part:
            if not 0 <= v < g.n:
                raise QuotientError(f"vertex {v} out of range")
            if v in seen:
                raise QuotientError(f"vertex {v} appears in two parts")
            seen.add(v)
    if len(seen) != g.n:
        raise QuotientError("parts do not cover the vertex set")

    verts: list[QVertex] = []
    for part in norm:
        pset = frozenset(part)
        rep = part[0]
        outside = g.adj[rep] - pset
        for v in part[1:]:
            if g.adj[v] - pset != outside:
                raise QuotientError(f"part {part} is not a module")
        if len(part) == 1:
            kind = KIND_UNIT
        elif all(len(g.adj[v] & pset) == 0 for v in part):
            kind = KIND_PARALLEL
        elif all(len(g.adj[v] & pset) == len(part) - 1 for v in part):
            kind = KIND_SERIES
        else:
            raise QuotientError(
                f"part {part} induces neither a clique nor an edgeless graph"
            )
        verts.append(QVertex(kind, part))

    index = {part: i for i, part in enumerate(norm)}
    vertex_part = {}
    for part in norm:
        for v in part:
            vertex_part[v] = index[part]
    adj: list[set[int]] = [set() for _ in norm]
    for i, part in enumerate(norm):
        rep = part[0]
        for w in g.adj[rep]:
            j = vertex_part[w]
            if j != i:
                adj[i].add(j)
    return QuotientGraph(tuple(verts), tuple(frozenset(s) for s in adj))


def quotient_of(g: Graph, tree: MDTree | None = None) -> QuotientGraph:
    """Quotient of g over its canonical partition (convenience wrapper)."""
    if tree is None:
        tree = decompose(g)
    return quotient_graph(g, q_partition(tree))


def count_kinds(q: QuotientGraph) -> tuple[int, int, int]:
    """(#U, #P, #S) vertex counts of a quotient graph."""
    u = p = s = 0
    for v in q.vertices:
        if v.kind == KIND_UNIT:
            u += 1
        elif v.kind == KIND_PARALLEL:
            p += 1
        else:
            s += 1
    return (u, p, s)


def tree_to_text(tree: MDTree) -> str:
    """Indented debug form: one node per line with its members ascending."""
    if tree.root is None:
        return "(empty)\n"
    lines: list[str] = []

    def walk(nd: MDNode, depth: int) -> None:
        pad = "  " * depth
        if nd.is_leaf():
            lines.append(f"{pad}{nd.vertex}")
        else:
            mem = " ".join(str(v) for v in nd.members())
            lines.append(f"{pad}{nd.label} {{{mem}}}")
            for c in nd.children:
                walk(c, depth + 1)

    walk(tree.root, 0)
    return "\n".join(lines) + "\n"


def tree_to_dot(tree: MDTree) -> str:
    """GraphViz DOT form of the decomposition tree."""
    lines = ["digraph mdtree {", "  node [shape=box];"]
    if tree.root is not None:
        counter = [0]

        def walk(nd: MDNode) -> int:
            my = counter[0]
            counter[0] += 1
            if nd.is_leaf():
                lines.append(f'  n{my} [label="{nd.vertex}", shape=circle];')
            else:
                mem = " ".join(str(v) for v in nd.members())
                lines.append(f'  n{my} [label="{nd.label} {{{mem}}}"];')
            for c in nd.children:
                child = walk(c)
                lines.append(f"  n{my} -> n{child};")
            return my

        walk(tree.root)
    lines.append("}")
    return "\n".join(lines) + "\n"


def quotient_to_text(q: QuotientGraph) -> str:
    """One line per quotient vertex: kind, members, neighbor indices."""
    lines = []
    for i, v in enumerate(q.vertices):
        mem = " ".join(str(x) for x in v.members)
        nbrs = " ".join(str(j) for j in sorted(q.adj[i]))
        lines.append(f"{i}: {v.kind} {{{mem}}} -> [{nbrs}]")
    return "\n".join(lines) + "\n"


def quotient_to_dot(q: QuotientGraph) -> str:
    lines = ["graph quotient {", "  node [shape=ellipse];"]
    for i, v in enumerate(q.vertices):
        mem = ",".join(str(x) for x in v.members)
        lines.append(f'  q{i} [label="{v.kind}{{{mem}}}"];')
    for i in range(q.n):
        for j in sorted(q.adj[i]):
            if i < j:
                lines.append(f"  q{i} -- q{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
