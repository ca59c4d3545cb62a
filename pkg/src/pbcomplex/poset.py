"""Finite posets, their order complexes, and the subgraph posets of a labelled graph."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Mapping, Sequence, Tuple

from .complex import SimplicialComplex, SimplicialMap
from .graph_core import LabelledGraph, is_core, is_nontree, max_core, sort_key

__all__ = [
    "FinPoset",
    "PosetMap",
    "PosetError",
    "BOTTOM",
    "order_complex",
    "order_complex_map",
    "interval",
    "product_minus_bottom",
    "fibre_below",
    "monotone_image_check",
    "proper_subgraphs",
    "build_nontrees",
    "build_core_poset",
    "max_core_map",
    "format_poset",
    "parse_poset",
]


class PosetError(ValueError):
    pass


class _Bottom:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "BOTTOM"

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()


class FinPoset:
    """A finite strict partial order on hashable elements.

    The strict order is held as its transitive closure (``above[i]`` is the
    set of indices strictly greater than element ``i``); the transitive
    reduction is derived on demand.
    """

    def __init__(self, elements: Iterable[Hashable], less: Iterable[Tuple[Hashable, Hashable]] = ()):
        self.elements: Tuple[Hashable, ...] = tuple(elements)
        self._index: Dict[Hashable, int] = {}
        for i, x in enumerate(self.elements):
            if x in self._index:
                raise PosetError(f"duplicate element {x!r}")
            self._index[x] = i
        n = len(self.elements)
        above: List[set] = [set() for _ in range(n)]
        for a, b in less:
            ia, ib = self.index(a), self.index(b)
            if ia == ib:
                raise PosetError(f"relation {a!r} < {a!r} is reflexive")
            above[ia].add(ib)
        # closure by DFS from each element
        closed: List[FrozenSet[int]] = [frozenset()] * n
        state = [0] * n

        def visit(i):
            if state[i] == 2:
                return closed[i]
            if state[i] == 1:
                raise PosetError("relation has a cycle")
            state[i] = 1
            acc = set()
            for j in above[i]:
                acc.add(j)
                acc |= visit(j)
            if i in acc:
                raise PosetError("relation has a cycle")
            closed[i] = frozenset(acc)
            state[i] = 2
            return closed[i]

        for i in range(n):
            visit(i)
        self.above: Tuple[FrozenSet[int], ...] = tuple(closed)

    @classmethod
    def from_predicate(cls, elements: Iterable[Hashable], lt: Callable[[Hashable, Hashable], bool]) -> "FinPoset":
        els = list(elements)
        return cls(els, [(a, b) for a in els for b in els if a is not b and lt(a, b)])

    @classmethod
    def from_sets(cls, sets: Iterable[FrozenSet]) -> "FinPoset":
        """Inclusion order on a family of frozensets."""
        els = list(sets)
        return cls(els, [(a, b) for a in els for b in els if a < b])

    def index(self, x) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise PosetError(f"element {x!r} not in poset") from None

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._index

    def __iter__(self):
        return iter(self.elements)

    def lt(self, a, b) -> bool:
        return self.index(b) in self.above[self.index(a)]

    def le(self, a, b) -> bool:
        return a == b or self.lt(a, b)

    @cached_property
    def below(self) -> Tuple[FrozenSet[int], ...]:
        acc = [set() for _ in self.elements]
        for i, ups in enumerate(self.above):
            for j in ups:
                acc[j].add(i)
        return tuple(frozenset(s) for s in acc)

    @cached_property
    def covers(self) -> Tuple[FrozenSet[int], ...]:
        """Transitive reduction: ``covers[i]`` are the indices covering ``i``."""
        out = []
        for i, ups in enumerate(self.above):
            out.append(frozenset(j for j in ups if not any(j in self.above[k] for k in ups)))
        return tuple(out)

    def cover_pairs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, cs in enumerate(self.covers) for j in sorted(cs)]

    def relations(self) -> List[Tuple[Hashable, Hashable]]:
        return [(self.elements[i], self.elements[j]) for i, ups in enumerate(self.above) for j in sorted(ups)]

    def minimal(self) -> List[Hashable]:
        return [x for i, x in enumerate(self.elements) if not self.below[i]]

    def maximal(self) -> List[Hashable]:
        return [x for i, x in enumerate(self.elements) if not self.above[i]]

    def subposet(self, keep: Iterable[Hashable]) -> "FinPoset":
        keep_set = set(keep)
        els = [x for x in self.elements if x in keep_set]
        idx = [self.index(x) for x in els]
        pos = set(idx)
        rel = [(self.elements[i], self.elements[j]) for i in idx for j in self.above[i] if j in pos]
        return FinPoset(els, rel)

    def longest_chain(self) -> int:
        """Number of elements in a longest chain."""
        memo: Dict[int, int] = {}

        def h(i):
            if i not in memo:
                memo[i] = 1 + max((h(j) for j in self.covers[i]), default=0)
            return memo[i]

        return max((h(i) for i in range(len(self))), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, FinPoset)
            and set(self.elements) == set(other.elements)
            and set(self.relations()) == set(other.relations())
        )

    def __repr__(self):
        return f"FinPoset({len(self)} elements, {len(self.cover_pairs())} covers)"


@dataclass(frozen=True)
class PosetMap:
    source: FinPoset
    target: FinPoset
    assignment: Mapping

    def __post_init__(self):
        for x in self.source.elements:
            if x not in self.assignment:
                raise PosetError(f"no image for {x!r}")
            if self.assignment[x] not in self.target:
                raise PosetError(f"image of {x!r} is not in the target")
        for a, b in self.source.relations():
            if not self.target.le(self.assignment[a], self.assignment[b]):
                raise PosetError(f"map is not order-preserving on {a!r} < {b!r}")

    def __call__(self, x):
        return self.assignment[x]

    def image(self) -> List[Hashable]:
        seen = set(self.assignment[x] for x in self.source.elements)
        return [y for y in self.target.elements if y in seen]


def _maximal_chains(p: FinPoset) -> List[Tuple[int, ...]]:
    chains = []
    stack = [(i,) for i in range(len(p)) if not p.below[i]]
    while stack:
        c = stack.pop()
        nxt = p.covers[c[-1]]
        if not nxt:
            chains.append(c)
        else:
            for j in nxt:
                stack.append(c + (j,))
    return chains


def order_complex(p: FinPoset) -> SimplicialComplex:
    """Simplicial complex of chains; vertices are the poset elements."""
    chains = _maximal_chains(p)
    els = p.elements
    return SimplicialComplex((frozenset(els[i] for i in c) for c in chains), _maximal=True)


def order_complex_map(f: PosetMap) -> SimplicialMap:
    return SimplicialMap(order_complex(f.source), order_complex(f.target), dict(f.assignment))


def interval(p: FinPoset, x, side: str = "below", strict: bool = True) -> FinPoset:
    i = p.index(x)
    if side == "below":
        idx = set(p.below[i])
    elif side == "above":
        idx = set(p.above[i])
    else:
        raise ValueError("side must be 'below' or 'above'")
    if not strict:
        idx.add(i)
    return p.subposet(p.elements[j] for j in idx)


def product_minus_bottom(factors: Sequence[FinPoset]) -> FinPoset:
    """(prod (P_i + bottom)) minus the all-bottom tuple, ordered componentwise."""
    if not factors:
        raise ValueError("need at least one factor")
    slots = [[BOTTOM] + list(f.elements) for f in factors]
    els = [t for t in itertools.product(*slots) if any(x is not BOTTOM for x in t)]

    rel = []
    # covers only: raise a single coordinate by one cover step
    index = set(els)
    for t in els:
        for c, f in enumerate(factors):
            x = t[c]
            ups = f.minimal() if x is BOTTOM else [f.elements[j] for j in f.covers[f.index(x)]]
            for y in ups:
                u = t[:c] + (y,) + t[c + 1:]
                if u in index:
                    rel.append((t, u))
    return FinPoset(els, rel)


def fibre_below(f: PosetMap, y) -> FinPoset:
    """f^{-1}(target_{<= y}) as an induced subposet of the source."""
    f.target.index(y)
    return f.source.subposet(x for x in f.source.elements if f.target.le(f(x), y))


def monotone_image_check(f: PosetMap) -> bool:
    if set(f.source.elements) != set(f.target.elements) or f.source != f.target:
        return False
    p = f.source
    if all(p.le(f(x), x) for x in p.elements):
        return True
    return all(p.le(x, f(x)) for x in p.elements)


# -- subgraph posets -------------------------------------------------------


def proper_subgraphs(g: LabelledGraph) -> List[FrozenSet[int]]:
    ids = sorted(g.edge_ids)
    return [frozenset(c) for r in range(1, len(ids)) for c in itertools.combinations(ids, r)]


def build_nontrees(g: LabelledGraph) -> FinPoset:
    """Proper subgraphs with a component of positive rank or with two labels."""
    return FinPoset.from_sets(s for s in proper_subgraphs(g) if is_nontree(g, s))


def build_core_poset(g: LabelledGraph) -> FinPoset:
    """Proper core subgraphs: every valence-one vertex labelled."""
    return FinPoset.from_sets(s for s in proper_subgraphs(g) if is_core(g.induced(s)))


def max_core_map(g: LabelledGraph, X: FinPoset = None) -> PosetMap:
    """H -> MaxCore(H) as a self-map of the non-tree poset."""
    X = build_nontrees(g) if X is None else X
    return PosetMap(X, X, {h: max_core(g.subgraph(h)).edge_set for h in X.elements})


# -- text format -----------------------------------------------------------


def _key(x) -> str:
    if isinstance(x, frozenset):
        return ",".join(str(v) for v in sorted(x, key=sort_key)) or "-"
    return str(x)


def format_poset(p: FinPoset, key: Callable = _key) -> str:
    """Header ``n m``, then one element key per line, then m cover pairs by index."""
    keys = [key(x) for x in p.elements]
    if len(set(keys)) != len(keys) or any(not k or k != k.strip() or "\n" in k for k in keys):
        raise PosetError("element keys must be unique non-empty single lines")
    pairs = p.cover_pairs()
    lines = [f"{len(keys)} {len(pairs)}"] + keys + [f"{i} {j}" for i, j in pairs]
    return "\n".join(lines) + "\n"


def parse_poset(text: str) -> FinPoset:
    lines = text.splitlines()
    try:
        n, m = map(int, lines[0].split())
        keys = lines[1:1 + n]
        pairs = [tuple(map(int, ln.split())) for ln in lines[1 + n:1 + n + m]]
    except (ValueError, IndexError) as exc:
        raise PosetError(f"malformed poset text: {exc}") from None
    if len(keys) != n or len(pairs) != m:
        raise PosetError("poset text is truncated")
    return FinPoset(keys, [(keys[i], keys[j]) for i, j in pairs])
