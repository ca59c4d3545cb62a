"""Labelled multigraphs, edge-induced subgraphs and the edge operations on them.

A graph here is a finite multigraph with loops allowed and no isolated
vertices.  Edges carry integer ids so that parallel edges stay distinct and a
subgraph is nothing more than a non-empty set of edge ids.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterable, Iterator, List, Optional, Tuple, Union

__all__ = [
    "Edge",
    "LabelledGraph",
    "Subgraph",
    "GraphError",
    "DisconnectedGraphError",
    "UnknownEdgeError",
    "EmptyCoreError",
    "EmptyGraphError",
    "LoopCollapseError",
    "DegenerateCollapseError",
    "sort_key",
    "rank",
    "connected_components",
    "is_connected",
    "valences",
    "is_separating_edge",
    "is_l_separating_edge",
    "l_separating_edges",
    "is_core",
    "max_core",
    "is_nontree",
    "delete_edge",
    "collapse_edge",
    "canonical_form",
    "enumerate_labelled_graphs",
    "expected_dimension",
    "graph_to_json",
    "graph_from_json",
    "load_graph",
    "dump_graph",
    "rose",
    "theta",
    "path_graph",
]


class GraphError(ValueError):
    pass


class DisconnectedGraphError(GraphError):
    def __init__(self, components):
        self.components = components
        names = "; ".join(
            "{" + ", ".join(str(v) for v in verts) + "}" for verts, _ in components
        )
        super().__init__(f"graph is disconnected, components: {names}")


class UnknownEdgeError(GraphError, KeyError):
    def __str__(self):
        return f"unknown edge id {self.args[0]!r}"


class EmptyCoreError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


class LoopCollapseError(GraphError):
    pass


class DegenerateCollapseError(GraphError):
    pass


def sort_key(x):
    """Total, hash-seed independent ordering key for vertex-like payloads."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(sort_key(y) for y in x))
    if isinstance(x, (frozenset, set)):
        return (3, tuple(sorted(sort_key(y) for y in x)))
    return (4, repr(x))


@dataclass(frozen=True)
class Edge:
    id: int
    u: Hashable
    v: Hashable

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def ends(self) -> Tuple[Hashable, Hashable]:
        return (self.u, self.v)


@dataclass(frozen=True)
class LabelledGraph:
    """A pair (G, l): a multigraph G together with a set l of labelled vertices.

    ``edges`` is a tuple of :class:`Edge` sorted by id; ``vertices`` is derived
    from the edges, so the no-isolated-vertices invariant holds by
    construction.
    """

    edges: Tuple[Edge, ...]
    labels: FrozenSet[Hashable] = frozenset()

    def __post_init__(self):
        if not self.edges:
            raise EmptyGraphError("a graph needs at least one edge")
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate edge ids")
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.id)))
        object.__setattr__(self, "labels", frozenset(self.labels))
        verts = set()
        for e in self.edges:
            verts.add(e.u)
            verts.add(e.v)
        missing = self.labels - verts
        if missing:
            raise GraphError(f"labels {sorted(missing, key=sort_key)} are not vertices")
        object.__setattr__(self, "_vertices", tuple(sorted(verts, key=sort_key)))
        object.__setattr__(self, "_by_id", {e.id: e for e in self.edges})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Hashable, Hashable]], labels: Iterable[Hashable] = ()):
        """Build a graph whose i-th pair becomes edge id i."""
        return cls(tuple(Edge(i, u, v) for i, (u, v) in enumerate(pairs)), frozenset(labels))

    @property
    def vertices(self) -> Tuple[Hashable, ...]:
        return self._vertices

    @property
    def edge_ids(self) -> FrozenSet[int]:
        return frozenset(self._by_id)

    @property
    def k(self) -> int:
        return len(self.labels)

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise UnknownEdgeError(eid) from None

    def subgraph(self, edge_ids: Iterable[int]) -> "Subgraph":
        return Subgraph(self, frozenset(edge_ids))

    def induced(self, edge_ids: Iterable[int]) -> "LabelledGraph":
        """The edge-induced subgraph as a standalone labelled graph."""
        ids = frozenset(edge_ids)
        for eid in ids:
            self.edge(eid)
        if not ids:
            raise EmptyGraphError("empty edge set")
        es = tuple(e for e in self.edges if e.id in ids)
        verts = {x for e in es for x in e.ends()}
        return LabelledGraph(es, self.labels & verts)

    def __len__(self):
        return len(self.edges)

    def __repr__(self):
        es = ", ".join(f"{e.id}:{e.u}-{e.v}" for e in self.edges)
        ls = ", ".join(str(v) for v in sorted(self.labels, key=sort_key))
        return f"LabelledGraph([{es}], labels={{{ls}}})"


@dataclass(frozen=True)
class Subgraph:
    """A non-empty edge subset of a parent graph."""

    parent: LabelledGraph
    edge_set: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "edge_set", frozenset(self.edge_set))
        if not self.edge_set:
            raise EmptyGraphError("subgraphs are non-empty")
        unknown = self.edge_set - self.parent.edge_ids
        if unknown:
            raise UnknownEdgeError(min(unknown))

    def as_graph(self) -> LabelledGraph:
        return self.parent.induced(self.edge_set)

    @property
    def vertices(self):
        return self.as_graph().vertices

    @property
    def labels(self):
        return self.as_graph().labels

    @property
    def is_proper(self) -> bool:
        return self.edge_set != self.parent.edge_ids


GraphLike = Union[LabelledGraph, Subgraph]


def _as_graph(g: GraphLike) -> LabelledGraph:
    return g.as_graph() if isinstance(g, Subgraph) else g


def _components(vertices, edges) -> List[Tuple[Tuple, Tuple[int, ...]]]:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        a, b = find(e.u), find(e.v)
        if a != b:
            parent[a] = b
    groups: Dict[Hashable, Tuple[list, list]] = {}
    for v in vertices:
        groups.setdefault(find(v), ([], []))[0].append(v)
    for e in edges:
        groups[find(e.u)][1].append(e.id)
    out = [
        (tuple(sorted(vs, key=sort_key)), tuple(sorted(es)))
        for vs, es in groups.values()
    ]
    out.sort(key=lambda c: sort_key(c[0][0]))
    return out


def connected_components(g: GraphLike) -> List[Tuple[Tuple, Tuple[int, ...]]]:
    """Partition into components, each ``(vertices, edge_ids)``; ordered by least vertex."""
    g = _as_graph(g)
    return _components(g.vertices, g.edges)


def is_connected(g: GraphLike) -> bool:
    return len(connected_components(g)) == 1


def rank(g: GraphLike) -> int:
    """Rank of the fundamental group, |E| - |V| + 1, of a connected graph."""
    g = _as_graph(g)
    comps = connected_components(g)
    if len(comps) != 1:
        raise DisconnectedGraphError(comps)
    return len(g.edges) - len(g.vertices) + 1


def valences(g: GraphLike) -> Dict[Hashable, int]:
    g = _as_graph(g)
    val = {v: 0 for v in g.vertices}
    for e in g.edges:
        val[e.u] += 1
        val[e.v] += 1
    return val


def _sides(g: LabelledGraph, eid: int):
    """Components of G minus the interior of e (vertices kept)."""
    e = g.edge(eid)
    rest = [f for f in g.edges if f.id != eid]
    return e, _components(g.vertices, rest)


def is_separating_edge(g: LabelledGraph, eid: int) -> bool:
    e, comps = _sides(g, eid)
    if e.is_loop:
        return False
    return len(comps) > 1


def is_nontree(g: GraphLike, edge_ids: Optional[Iterable[int]] = None) -> bool:
    """Membership test of the non-tree poset: some component of the subgraph has
    non-trivial fundamental group or at least two labelled vertices."""
    g = _as_graph(g)
    ids = g.edge_ids if edge_ids is None else frozenset(edge_ids)
    if not ids:
        return False
    sub = g.induced(ids)
    for verts, es in connected_components(sub):
        if len(es) - len(verts) + 1 > 0:
            return True
        if len(sub.labels.intersection(verts)) >= 2:
            return True
    return False


def is_l_separating_edge(g: LabelledGraph, eid: int) -> bool:
    e, comps = _sides(g, eid)
    if e.is_loop or len(comps) < 2:
        return False
    if not any(g.labels.issubset(verts) for verts, _ in comps):
        return False
    return is_nontree(g, g.edge_ids - {eid})


def l_separating_edges(g: LabelledGraph) -> List[int]:
    return [e.id for e in g.edges if is_l_separating_edge(g, e.id)]


def is_core(g: GraphLike) -> bool:
    """Every valence-one vertex is labelled."""
    h = _as_graph(g)
    return all(val != 1 or v in h.labels for v, val in valences(h).items())


def max_core(g: GraphLike, order: Optional[Iterable[int]] = None) -> Subgraph:
    """Maximal core subgraph, obtained by stripping leaves at unlabelled ends.

    ``order`` optionally fixes the preference in which removable leaves are
    taken; the result does not depend on it.
    """
    if isinstance(g, Subgraph):
        parent, ids = g.parent, set(g.edge_set)
    else:
        parent, ids = g, set(g.edge_ids)
    labels = parent.labels
    pref = list(order) if order is not None else sorted(ids)
    rank_of = {eid: i for i, eid in enumerate(pref)}
    while True:
        val: Dict[Hashable, int] = {}
        for eid in ids:
            e = parent.edge(eid)
            val[e.u] = val.get(e.u, 0) + 1
            val[e.v] = val.get(e.v, 0) + 1
        removable = [
            eid
            for eid in ids
            if any(val[x] == 1 and x not in labels for x in parent.edge(eid).ends())
        ]
        if not removable:
            break
        ids.discard(min(removable, key=lambda x: rank_of.get(x, len(rank_of) + x)))
        if not ids:
            raise EmptyCoreError("leaf removal consumed every edge")
    return Subgraph(parent, frozenset(ids))


def delete_edge(g: LabelledGraph, eid: int) -> LabelledGraph:
    g.edge(eid)
    if len(g.edges) == 1:
        raise EmptyGraphError("cannot delete the last edge")
    return g.induced(g.edge_ids - {eid})


def collapse_edge(g: LabelledGraph, eid: int) -> LabelledGraph:
    """G/e.  The merged vertex keeps the name of the edge's first endpoint."""
    e = g.edge(eid)
    if e.is_loop:
        raise LoopCollapseError(f"edge {eid} is a loop")
    if len(g.edges) == 1:
        raise DegenerateCollapseError("collapsing the only edge leaves an isolated vertex")
    keep, gone = e.u, e.v

    def img(x):
        return keep if x == gone else x

    es = tuple(Edge(f.id, img(f.u), img(f.v)) for f in g.edges if f.id != eid)
    return LabelledGraph(es, frozenset(img(x) for x in g.labels))


def expected_dimension(n: int, k: int) -> int:
    return n + k - 3 if k >= 1 else n - 2


# -- isomorphism classes and enumeration -----------------------------------


def canonical_form(g: LabelledGraph) -> Tuple:
    """Encoding equal for two graphs iff a label-preserving isomorphism exists.

    Brute force over vertex numberings, restricted to those that sort the
    vertices by an isomorphism invariant (label flag, valence, loop count).
    """
    verts = g.vertices
    val = valences(g)
    loops = {v: 0 for v in verts}
    for e in g.edges:
        if e.is_loop:
            loops[e.u] += 1
    inv = {v: (v in g.labels, val[v], loops[v]) for v in verts}
    classes: Dict[Tuple, List] = {}
    for v in verts:
        classes.setdefault(inv[v], []).append(v)
    keys = sorted(classes)
    head = tuple(k for k in keys for _ in classes[k])
    best = None
    for perms in itertools.product(*(itertools.permutations(classes[k]) for k in keys)):
        order = [v for block in perms for v in block]
        num = {v: i for i, v in enumerate(order)}
        enc = tuple(sorted(tuple(sorted((num[e.u], num[e.v]))) for e in g.edges))
        if best is None or enc < best:
            best = enc
    return (head, best)


def _from_canonical(pairs, labelled: Iterable[int]):
    return LabelledGraph.from_pairs(pairs, labelled)


def _multigraphs(m: int, nv: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    slots = [(i, j) for i in range(nv) for j in range(i, nv)]
    for combo in itertools.combinations_with_replacement(range(len(slots)), m):
        pairs = [slots[c] for c in combo]
        touched = {x for p in pairs for x in p}
        if len(touched) != nv:
            continue
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for a, b in pairs:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        if len({find(x) for x in range(nv)}) == 1:
            yield tuple(pairs)


def enumerate_labelled_graphs(max_edges: int = 5, max_labels: int = 3) -> Iterator[LabelledGraph]:
    """Connected labelled multigraphs with at most ``max_edges`` edges and at most
    ``max_labels`` labels, one per isomorphism class, in a fixed order.

    Order: by edge count, then vertex count, then label count, then canonical
    encoding.  Vertices are ``0..n-1`` in the canonical numbering.
    """
    if max_edges < 1:
        raise ValueError("max_edges must be at least 1")
    for m in range(1, max_edges + 1):
        for nv in range(1, m + 2):
            shapes = {}
            for pairs in _multigraphs(m, nv):
                g = LabelledGraph.from_pairs(pairs)
                shapes.setdefault(canonical_form(g), g)
            found = {}
            for g in shapes.values():
                for k in range(0, min(max_labels, nv) + 1):
                    for labs in itertools.combinations(g.vertices, k):
                        h = LabelledGraph(g.edges, frozenset(labs))
                        cf = canonical_form(h)
                        if cf not in found:
                            found[cf] = h
            for cf in sorted(found, key=lambda c: (sum(inv[0] for inv in c[0]), c)):
                head, pairs = cf
                labelled = [i for i, inv in enumerate(head) if inv[0]]
                yield _from_canonical(pairs, labelled)


# -- small named graphs ----------------------------------------------------


def rose(n: int, labels: Iterable = ()) -> LabelledGraph:
    return LabelledGraph.from_pairs([(0, 0)] * n, labels)


def theta(n_edges: int = 3, labels: Iterable = ()) -> LabelledGraph:
    return LabelledGraph.from_pairs([(0, 1)] * n_edges, labels)


def path_graph(length: int, labels: Iterable = ()) -> LabelledGraph:
    return LabelledGraph.from_pairs([(i, i + 1) for i in range(length)], labels)


# -- JSON ------------------------------------------------------------------


def graph_to_json(g: LabelledGraph) -> dict:
    # edge ids are renumbered 0..m-1 in id order
    name = {v: str(v) for v in g.vertices}
    if len(set(name.values())) != len(name):
        raise GraphError("vertex names collide after str()")
    return {
        "vertices": [name[v] for v in g.vertices],
        "edges": [[name[e.u], name[e.v]] for e in g.edges],
        "labels": [name[v] for v in g.vertices if v in g.labels],
    }


def graph_from_json(data: dict) -> LabelledGraph:
    verts = list(data.get("vertices", []))
    edges = [tuple(p) for p in data["edges"]]
    for p in edges:
        if len(p) != 2:
            raise GraphError(f"edge {list(p)} must have two endpoints")
        for x in p:
            if verts and x not in verts:
                raise GraphError(f"edge endpoint {x!r} is not a listed vertex")
    g = LabelledGraph.from_pairs(edges, data.get("labels", []))
    if verts and set(verts) != set(g.vertices):
        isolated = sorted(set(verts) - set(g.vertices), key=sort_key)
        raise GraphError(f"isolated vertices not allowed: {isolated}")
    return g


def dump_graph(g: LabelledGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(graph_to_json(g), fh)
        fh.write("\n")


def load_graph(path) -> LabelledGraph:
    with open(path, encoding="utf-8") as fh:
        return graph_from_json(json.load(fh))
