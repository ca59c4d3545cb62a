"""Conjugacy classes in free groups, Whitehead automorphisms, and truncations of
the complex of partial bases up to conjugation.

Letters are non-zero integers: ``i`` is the i-th generator and ``-i`` its
inverse.  In text, generators are ``x, y, z`` for rank <= 3 and ``a, b, c, ...``
otherwise; upper case denotes inverses, so ``xyXY`` is the commutator.
"""

from __future__ import annotations

import itertools
import string
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple, Union

from .complex import SimplicialComplex

__all__ = [
    "CyclicWord",
    "WhiteheadAuto",
    "FreeGroupError",
    "EmptyClassError",
    "RankMismatchError",
    "SearchBudgetExceeded",
    "generator_names",
    "parse_word",
    "format_word",
    "free_reduce",
    "cyclic_normal_form",
    "whitehead_automorphisms",
    "apply_whitehead",
    "whitehead_minimize",
    "is_primitive_class",
    "is_partial_basis_classes",
    "abelianize",
    "enumerate_cyclic_words",
    "enumerate_primitive_classes",
    "build_B_truncation",
    "build_frame_truncation",
    "farey_edge",
    "primitive_vectors",
]

Letter = int
Word = Tuple[Letter, ...]


class FreeGroupError(ValueError):
    pass


class EmptyClassError(FreeGroupError):
    pass


class RankMismatchError(FreeGroupError):
    pass


class SearchBudgetExceeded(RuntimeError):
    pass


def generator_names(rank: int) -> str:
    if rank <= 3:
        return "xyz"[:rank]
    if rank > 26:
        raise FreeGroupError("at most 26 generators have names")
    return string.ascii_lowercase[:rank]


def parse_word(text: str, rank: int) -> Word:
    names = generator_names(rank)
    out = []
    for ch in text:
        if ch.isspace():
            continue
        if ch in names:
            out.append(names.index(ch) + 1)
        elif ch.lower() in names:
            out.append(-(names.index(ch.lower()) + 1))
        else:
            raise FreeGroupError(f"invalid letter {ch!r} for rank {rank}")
    return tuple(out)


def format_word(word: Sequence[Letter], rank: int) -> str:
    names = generator_names(rank)
    return "".join(names[x - 1] if x > 0 else names[-x - 1].upper() for x in word)


def free_reduce(word: Iterable[Letter]) -> Word:
    out: List[Letter] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _cyclic_reduce(word: Word) -> Word:
    w = free_reduce(word)
    i, j = 0, len(w)
    while j - i > 1 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def _letter_key(x: Letter) -> int:
    # x < X < y < Y < ...
    return 2 * (abs(x) - 1) + (x < 0)


def _least_rotation(w: Word) -> Word:
    if not w:
        return w
    keys = [_letter_key(x) for x in w]
    n = len(w)
    best = min(range(n), key=lambda i: keys[i:] + keys[:i])
    return w[best:] + w[:best]


@dataclass(frozen=True, order=True)
class CyclicWord:
    """A non-trivial conjugacy class, stored cyclically reduced and rotated to
    its lexicographically least form."""

    rank: int
    letters: Word

    def __post_init__(self):
        w = _cyclic_reduce(tuple(self.letters))
        if not w:
            raise EmptyClassError("the trivial element has no conjugacy class vertex")
        for x in w:
            if not 1 <= abs(x) <= self.rank:
                raise FreeGroupError(f"letter {x} out of range for rank {self.rank}")
        object.__setattr__(self, "letters", _least_rotation(w))

    @classmethod
    def parse(cls, text: str, rank: int) -> "CyclicWord":
        return cls(rank, parse_word(text, rank))

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "CyclicWord":
        return CyclicWord(self.rank, tuple(-x for x in reversed(self.letters)))

    def sort_key(self):
        return (len(self.letters), tuple(_letter_key(x) for x in self.letters))

    def __str__(self):
        return format_word(self.letters, self.rank)

    def __repr__(self):
        return f"[{self}]"


def cyclic_normal_form(word: Union[str, Sequence[Letter]], rank: int) -> CyclicWord:
    if isinstance(word, str):
        word = parse_word(word, rank)
    return CyclicWord(rank, tuple(word))


# -- Whitehead automorphisms -----------------------------------------------


@dataclass(frozen=True)
class WhiteheadAuto:
    """Type I: ``perm``/``signs`` send x_i to x_{perm[i]}^{signs[i]}.
    Type II: multiplier ``a`` with cut ``A`` (a in A, a^{-1} not in A); a letter
    x != a^{+-1} goes to  a^{-1}? x a?  according to whether x^{-1}, x lie in A.
    """

    rank: int
    kind: str
    perm: Tuple[int, ...] = ()
    signs: Tuple[int, ...] = ()
    a: int = 0
    A: FrozenSet[int] = frozenset()

    def __post_init__(self):
        n = self.rank
        if self.kind == "I":
            if sorted(self.perm) != list(range(1, n + 1)) or len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
                raise FreeGroupError("type I needs a permutation of 1..n and n signs")
        elif self.kind == "II":
            if not 1 <= abs(self.a) <= n or self.a not in self.A or -self.a in self.A:
                raise FreeGroupError("type II needs a in A and a^-1 not in A")
            if any(not 1 <= abs(x) <= n for x in self.A):
                raise FreeGroupError("cut letters out of range")
        else:
            raise FreeGroupError(f"unknown kind {self.kind!r}")

    @classmethod
    def type_one(cls, perm, signs) -> "WhiteheadAuto":
        return cls(len(perm), "I", perm=tuple(perm), signs=tuple(signs))

    @classmethod
    def type_two(cls, rank: int, a: int, A: Iterable[int]) -> "WhiteheadAuto":
        return cls(rank, "II", a=a, A=frozenset(A))

    def images(self) -> Dict[int, Word]:
        """Image of every letter (both signs)."""
        img: Dict[int, Word] = {}
        for i in range(1, self.rank + 1):
            if self.kind == "I":
                w: Word = (self.perm[i - 1] * self.signs[i - 1],)
            elif i == abs(self.a):
                w = (i,)
            else:
                w = ((-self.a,) if -i in self.A else ()) + (i,) + ((self.a,) if i in self.A else ())
            img[i] = w
            img[-i] = tuple(-x for x in reversed(w))
        return img

    def apply_word(self, word: Sequence[Letter]) -> Word:
        img = self.images()
        return free_reduce(y for x in word for y in img[x])

    def __str__(self):
        names = generator_names(self.rank)
        if self.kind == "I":
            parts = [f"{names[i]}->{format_word((self.perm[i] * self.signs[i],), self.rank)}" for i in range(self.rank)]
            return "I(" + ",".join(parts) + ")"
        cut = "".join(format_word((x,), self.rank) for x in sorted(self.A, key=_letter_key))
        return f"II(a={format_word((self.a,), self.rank)},A={{{cut}}})"


_AUTO_CACHE: Dict[int, Tuple[List[WhiteheadAuto], List[WhiteheadAuto]]] = {}


def whitehead_automorphisms(rank: int) -> Tuple[List[WhiteheadAuto], List[WhiteheadAuto]]:
    """All Whitehead automorphisms in the fixed enumeration order.

    Type I in permutation/sign lexicographic order; type II by (a, A) with
    letters ordered x < X < y < ...  The identity (A = {a}) and the inner
    automorphisms (A = everything but a^{-1}) are left out of type II since
    they fix every conjugacy class.
    """
    if rank not in _AUTO_CACHE:
        t1 = [
            WhiteheadAuto.type_one(p, s)
            for p in itertools.permutations(range(1, rank + 1))
            for s in itertools.product((1, -1), repeat=rank)
        ]
        letters = sorted([i for i in range(1, rank + 1)] + [-i for i in range(1, rank + 1)], key=_letter_key)
        t2 = []
        for a in letters:
            others = [x for x in letters if abs(x) != abs(a)]
            for bits in itertools.product((0, 1), repeat=len(others)):
                rest = frozenset(x for x, b in zip(others, bits) if b)
                if not rest or len(rest) == len(others):
                    continue
                t2.append(WhiteheadAuto.type_two(rank, a, rest | {a}))
        _AUTO_CACHE[rank] = (t1, t2)
    return _AUTO_CACHE[rank]


def apply_whitehead(phi: WhiteheadAuto, c: CyclicWord) -> CyclicWord:
    if phi.rank != c.rank:
        raise RankMismatchError(f"automorphism of rank {phi.rank} applied to a class of rank {c.rank}")
    return CyclicWord(c.rank, phi.apply_word(c.letters))


def _apply_tuple(phi: WhiteheadAuto, t: Sequence[CyclicWord]) -> Tuple[CyclicWord, ...]:
    return tuple(apply_whitehead(phi, c) for c in t)


def _total(t: Sequence[CyclicWord]) -> int:
    return sum(len(c) for c in t)


def whitehead_minimize(t: Sequence[CyclicWord]) -> Tuple[Tuple[CyclicWord, ...], int, List[WhiteheadAuto]]:
    """Greedy length reduction by type II moves.

    Peak reduction guarantees that when no single Whitehead automorphism
    shortens the tuple, its total length is minimal in the Aut(F_n)-orbit.
    """
    t = tuple(t)
    if not t:
        raise FreeGroupError("empty tuple")
    rank = t[0].rank
    if any(c.rank != rank for c in t):
        raise RankMismatchError("classes of different ranks")
    _, t2 = whitehead_automorphisms(rank)
    log: List[WhiteheadAuto] = []
    cur = _total(t)
    improved = True
    while improved and cur > len(t):
        improved = False
        for phi in t2:
            u = _apply_tuple(phi, t)
            lu = _total(u)
            if lu < cur:
                t, cur = u, lu
                log.append(phi)
                improved = True
                break
    return t, cur, log


def is_primitive_class(c: CyclicWord) -> bool:
    return whitehead_minimize((c,))[1] == 1


def _is_distinct_generators(t: Sequence[CyclicWord]) -> bool:
    if any(len(c) != 1 for c in t):
        return False
    gens = [abs(c.letters[0]) for c in t]
    return len(set(gens)) == len(gens)


def is_partial_basis_classes(t: Sequence[CyclicWord], budget: int = 1_000_000) -> bool:
    """Decide whether distinct classes C_1..C_k are [v_1]..[v_k] for part of a basis."""
    t = tuple(t)
    if not t:
        raise FreeGroupError("empty tuple")
    rank = t[0].rank
    if len(set(t)) != len(t):
        raise FreeGroupError("repeated class")
    if len(t) > rank:
        raise FreeGroupError(f"{len(t)} classes cannot be part of a basis of rank {rank}")
    m, total, _ = whitehead_minimize(t)
    if total != len(t):
        return False
    # breadth-first search through the length-preserving moves at the minimal level
    t1, t2 = whitehead_automorphisms(rank)
    seen = {m}
    queue = deque([m])
    while queue:
        u = queue.popleft()
        if _is_distinct_generators(u):
            return True
        for phi in itertools.chain(t1, t2):
            w = _apply_tuple(phi, u)
            if _total(w) == total and w not in seen:
                if len(seen) >= budget:
                    raise SearchBudgetExceeded(f"more than {budget} tuples at the minimal level")
                seen.add(w)
                queue.append(w)
    return False


def abelianize(c: CyclicWord) -> Tuple[int, ...]:
    v = [0] * c.rank
    for x in c.letters:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(v)


# -- enumeration and truncations -------------------------------------------


def enumerate_cyclic_words(rank: int, max_len: int) -> Iterator[CyclicWord]:
    """Every conjugacy class of cyclic length 1..max_len, each once, sorted."""
    if rank < 1 or max_len < 1:
        raise ValueError("rank and max_len must be positive")
    letters = sorted([i for i in range(1, rank + 1)] + [-i for i in range(1, rank + 1)], key=_letter_key)
    for n in range(1, max_len + 1):
        found = set()
        for w in _reduced_words(letters, n):
            if n > 1 and w[0] == -w[-1]:
                continue
            if w == _least_rotation(w):
                found.add(w)
        for w in sorted(found, key=lambda w: tuple(_letter_key(x) for x in w)):
            yield CyclicWord(rank, w)


def _reduced_words(letters, n) -> Iterator[Word]:
    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for x in letters:
            if prefix and prefix[-1] == -x:
                continue
            prefix.append(x)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def enumerate_primitive_classes(rank: int, max_len: int) -> List[CyclicWord]:
    return [c for c in enumerate_cyclic_words(rank, max_len) if is_primitive_class(c)]


_SUPPORTED = {2: 8, 3: 4}


def build_B_truncation(rank: int, max_len: int, enforce_bounds: bool = True) -> SimplicialComplex:
    """Full subcomplex of the partial basis complex on primitive classes of
    cyclic length <= max_len.  Every face is certified by the Whitehead test."""
    if rank not in _SUPPORTED:
        raise FreeGroupError(f"rank {rank} not supported (use 2 or 3)")
    if enforce_bounds and max_len > _SUPPORTED[rank]:
        raise FreeGroupError(f"max_len {max_len} exceeds the supported bound {_SUPPORTED[rank]} for rank {rank}")
    verts = enumerate_primitive_classes(rank, max_len)
    faces: List[Tuple[CyclicWord, ...]] = [(v,) for v in verts]
    level = faces
    for k in range(2, rank + 1):
        prev = set(level)
        nxt = []
        for f in level:
            last = verts.index(f[-1])
            for v in verts[last + 1:]:
                cand = f + (v,)
                # every (k-1)-subface must already be certified
                if all(cand[:i] + cand[i + 1:] in prev for i in range(k - 1)):
                    if is_partial_basis_classes(cand):
                        nxt.append(cand)
        faces.extend(nxt)
        level = nxt
    K = SimplicialComplex(faces, meta={"rank": rank, "max_len": max_len})
    K.meta["vertex_words"] = {str(v): v for v in verts}
    return K


def build_frame_truncation(rank: int, max_len: int) -> SimplicialComplex:
    """Vertices are the cyclic-subgroup classes {[v], [v^-1]}; faces are the
    partial bases.  The inflation of this complex by the pairs themselves is
    the matching truncation of the partial basis complex."""
    B = build_B_truncation(rank, max_len)
    pair = {v: frozenset([v, v.inverse()]) for v in B.vertices}
    faces = set()
    for f in B.maximal_faces:
        faces.add(frozenset(pair[v] for v in f))
    return SimplicialComplex(faces, vertices=set(pair.values()))


def farey_edge(u: Sequence[int], v: Sequence[int]) -> bool:
    for w in (u, v):
        if len(w) != 2 or gcd(w[0], w[1]) != 1:
            raise ValueError(f"{tuple(w)} is not a primitive vector of Z^2")
    return abs(u[0] * v[1] - u[1] * v[0]) == 1


def primitive_vectors(max_l1: int) -> List[Tuple[int, int]]:
    """Primitive vectors of Z^2 with |a| + |b| <= max_l1."""
    out = []
    for a in range(-max_l1, max_l1 + 1):
        for b in range(-max_l1, max_l1 + 1):
            if 0 < abs(a) + abs(b) <= max_l1 and gcd(a, b) == 1:
                out.append((a, b))
    return out
