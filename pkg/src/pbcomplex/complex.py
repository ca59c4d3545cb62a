"""Finite abstract simplicial complexes and their exact integer homology.

Complexes are stored by their maximal faces.  A complex with no faces is
treated as the complex {∅}: its reduced homology is Z in degree -1 and its
dimension is -1.

Homology is computed from boundary matrices with exact integer elimination
(see :mod:`pbcomplex._snf`), optionally after elementary collapses.
"""

from __future__ import annotations

import heapq
import itertools
import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from ._snf import elementary_divisors
from .graph_core import sort_key

__all__ = [
    "SimplicialComplex",
    "SimplicialMap",
    "HomologyProfile",
    "WedgeSignature",
    "CMReport",
    "Pi1Probe",
    "ComplexError",
    "NotAFaceError",
    "NotSimplicialError",
    "reduced_homology",
    "chain_complex_homology",
    "collapse",
    "wedge_signature",
    "homologically_connected",
    "link",
    "cm_check",
    "join_complex",
    "inflate",
    "natural_projection",
    "mapping_cone_profile",
    "quillen_check",
    "fundamental_group_probe",
    "parse_complex",
    "format_complex",
    "load_complex",
    "dump_complex",
    "boundary_of_simplex",
    "simplex",
    "cross_polytope",
    "projective_plane",
    "points",
    "cone",
]


class ComplexError(ValueError):
    pass


class NotAFaceError(ComplexError, KeyError):
    def __str__(self):
        return f"not a face of the complex: {self.args[0]!r}"


class NotSimplicialError(ComplexError):
    pass


def _fs(face) -> FrozenSet:
    return face if isinstance(face, frozenset) else frozenset(face)


class SimplicialComplex:
    """Abstract simplicial complex given by its maximal faces."""

    __slots__ = ("_max", "_vertices", "_faces", "meta")

    def __init__(self, faces: Iterable[Iterable[Hashable]] = (), vertices: Iterable[Hashable] = (), meta=None, *, _maximal=False):
        cand = {_fs(f) for f in faces}
        cand.discard(frozenset())
        cand |= {frozenset([v]) for v in vertices}
        if _maximal:
            maximal = list(cand)
        else:
            maximal = []
            for f in sorted(cand, key=len, reverse=True):
                if not any(f < g for g in maximal):
                    maximal.append(f)
        maximal.sort(key=lambda f: (len(f), _face_key(f)))
        self._max = tuple(maximal)
        self._vertices = tuple(sorted({v for f in maximal for v in f}, key=sort_key))
        self._faces = None
        self.meta = dict(meta or {})

    @property
    def maximal_faces(self) -> Tuple[FrozenSet, ...]:
        return self._max

    @property
    def vertices(self) -> Tuple[Hashable, ...]:
        return self._vertices

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self._max), default=0) - 1

    @property
    def is_empty(self) -> bool:
        return not self._max

    def is_pure(self) -> bool:
        return len({len(f) for f in self._max}) <= 1

    def __contains__(self, face) -> bool:
        f = _fs(face)
        return not f or any(f <= g for g in self._max)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and set(self._max) == set(other._max)

    def __hash__(self):
        return hash(frozenset(self._max))

    def __repr__(self):
        shown = ", ".join("{" + ", ".join(map(str, _sorted(f))) + "}" for f in self._max[:6])
        more = "" if len(self._max) <= 6 else f", ... ({len(self._max)} maximal faces)"
        return f"SimplicialComplex([{shown}{more}])"

    def faces(self, k: Optional[int] = None) -> List[FrozenSet]:
        """All non-empty faces (or only the k-dimensional ones), in a fixed order."""
        if self._faces is None:
            seen = set()
            for f in self._max:
                fl = _sorted(f)
                for r in range(1, len(fl) + 1):
                    for c in itertools.combinations(fl, r):
                        seen.add(frozenset(c))
            self._faces = sorted(seen, key=lambda f: (len(f), _face_key(f)))
        if k is None:
            return list(self._faces)
        return [f for f in self._faces if len(f) == k + 1]

    def f_vector(self) -> List[int]:
        counts = [0] * (self.dimension + 1)
        for f in self.faces():
            counts[len(f) - 1] += 1
        return counts

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.f_vector()))

    def relabel(self, mapping: Mapping) -> "SimplicialComplex":
        return SimplicialComplex(([mapping[v] for v in f] for f in self._max), meta=self.meta)

    def skeleton(self, k: int) -> "SimplicialComplex":
        return SimplicialComplex(f for f in self.faces() if len(f) <= k + 1)


def _sorted(face) -> List:
    return sorted(face, key=sort_key)


def _face_key(face):
    return tuple(sort_key(v) for v in _sorted(face))


# -- homology --------------------------------------------------------------


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology: degree -> (betti number, torsion coefficients).

    Only non-zero degrees are stored.  The empty complex has ``{-1: (1, ())}``.
    """

    groups: Tuple[Tuple[int, int, Tuple[int, ...]], ...] = ()

    @classmethod
    def from_dict(cls, data: Mapping[int, Tuple[int, Sequence[int]]]) -> "HomologyProfile":
        items = []
        for q, (b, tors) in sorted(data.items()):
            tors = tuple(sorted(int(t) for t in tors))
            if any(t < 2 for t in tors) or any(b2 % a for a, b2 in zip(tors, tors[1:])):
                raise ValueError(f"torsion {tors} in degree {q} is not a divisibility chain")
            if b < 0:
                raise ValueError("negative betti number")
            if b or tors:
                items.append((int(q), int(b), tors))
        return cls(tuple(items))

    def as_dict(self) -> Dict[int, Tuple[int, Tuple[int, ...]]]:
        return {q: (b, t) for q, b, t in self.groups}

    def betti(self, q: int) -> int:
        return self.as_dict().get(q, (0, ()))[0]

    def torsion(self, q: int) -> Tuple[int, ...]:
        return self.as_dict().get(q, (0, ()))[1]

    @property
    def degrees(self) -> List[int]:
        return [q for q, _, _ in self.groups]

    @property
    def is_zero(self) -> bool:
        return not self.groups

    @property
    def is_torsion_free(self) -> bool:
        return all(not t for _, _, t in self.groups)

    @property
    def is_empty_convention(self) -> bool:
        """Profile of the empty complex (reduced H_{-1} = Z)."""
        return self.groups == ((-1, 1, ()),)

    def shift(self, k: int) -> "HomologyProfile":
        return HomologyProfile(tuple((q + k, b, t) for q, b, t in self.groups))

    def rational(self) -> "HomologyProfile":
        return HomologyProfile(tuple((q, b, ()) for q, b, _ in self.groups if b))

    def to_json(self) -> dict:
        return {str(q): {"betti": b, "torsion": list(t)} for q, b, t in self.groups}

    @classmethod
    def from_json(cls, data: Mapping) -> "HomologyProfile":
        return cls.from_dict({int(q): (v["betti"], v.get("torsion", [])) for q, v in data.items()})

    def __str__(self):
        if not self.groups:
            return "0"
        parts = []
        for q, b, t in self.groups:
            terms = (["Z^%d" % b if b > 1 else "Z"] if b else []) + [f"Z/{x}" for x in t]
            parts.append(f"H{q}=" + "+".join(terms))
        return ", ".join(parts)


def chain_complex_homology(dims: Dict[int, int], boundaries: Dict[int, List[Dict[int, int]]], coefficients: str = "Z") -> HomologyProfile:
    """Homology of a finite free chain complex.

    ``dims[q]`` is the rank of the degree-q chain group and ``boundaries[q]``
    lists, for each basis element of degree q, its boundary as a sparse row
    over the degree q-1 basis.
    """
    ranks: Dict[int, int] = {}
    tors: Dict[int, List[int]] = {}
    for q, rows in boundaries.items():
        r, t = elementary_divisors(rows)
        ranks[q] = r
        tors[q] = t
    out = {}
    for q, n in dims.items():
        b = n - ranks.get(q, 0) - ranks.get(q + 1, 0)
        t = tors.get(q + 1, []) if coefficients == "Z" else []
        if b or t:
            out[q] = (b, t)
    return HomologyProfile.from_dict(out)


def _index_faces(face_tuples: Iterable[Tuple[int, ...]]):
    by_dim: Dict[int, List[Tuple[int, ...]]] = {-1: [()]}
    for f in face_tuples:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for k in by_dim:
        by_dim[k].sort()
    return by_dim


def _homology_of_faces(by_dim: Dict[int, List[Tuple[int, ...]]], coefficients: str = "Z") -> HomologyProfile:
    index = {k: {f: i for i, f in enumerate(fs)} for k, fs in by_dim.items()}
    dims = {k: len(fs) for k, fs in by_dim.items()}
    boundaries = {}
    for k, fs in by_dim.items():
        if k < 0:
            continue
        below = index[k - 1]
        rows = []
        for f in fs:
            row = {}
            for i in range(len(f)):
                row[below[f[:i] + f[i + 1:]]] = -1 if i % 2 else 1
            rows.append(row)
        boundaries[k] = rows
    return chain_complex_homology(dims, boundaries, coefficients)


def _int_faces(K: SimplicialComplex):
    num = {v: i for i, v in enumerate(K.vertices)}
    return [tuple(sorted(num[v] for v in f)) for f in K.faces()]


def collapse(faces: Iterable[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Perform elementary collapses until none is possible.

    Faces are sorted integer tuples closed under taking non-empty subfaces.
    The lexicographically smallest free face is always collapsed first.
    """
    S = set(faces)
    up: Dict[Tuple[int, ...], set] = {f: set() for f in S}
    for f in S:
        if len(f) > 1:
            for i in range(len(f)):
                up[f[:i] + f[i + 1:]].add(f)
    heap = [f for f, c in up.items() if len(c) == 1]
    heapq.heapify(heap)
    while heap:
        s = heapq.heappop(heap)
        if s not in S or len(up[s]) != 1:
            continue
        # a face with a single coface is free; that coface is maximal
        (tau,) = up[s]
        for pair in (tau, s):
            S.discard(pair)
            if len(pair) > 1:
                for i in range(len(pair)):
                    g = pair[:i] + pair[i + 1:]
                    if g in S:
                        up[g].discard(pair)
                        if len(up[g]) == 1:
                            heapq.heappush(heap, g)
    return sorted(S, key=lambda f: (len(f), f))


def reduced_homology(K: SimplicialComplex, collapse_first: bool = False, coefficients: str = "Z") -> HomologyProfile:
    """Reduced simplicial homology with integer (or rational) coefficients."""
    faces = _int_faces(K)
    if collapse_first:
        faces = collapse(faces)
    return _homology_of_faces(_index_faces(faces), coefficients)


# -- sphericity ------------------------------------------------------------


@dataclass(frozen=True)
class WedgeSignature:
    kind: str  # "contractible" | "wedge" | "empty" | "inconsistent"
    dimension: Optional[int] = None
    count: int = 0

    CONTRACTIBLE = "contractible"
    WEDGE = "wedge"
    EMPTY = "empty"
    INCONSISTENT = "inconsistent"

    @property
    def is_spherical(self) -> bool:
        return self.kind != self.INCONSISTENT

    def __str__(self):
        if self.kind == self.WEDGE:
            return f"WedgeOfSpheres({self.dimension}, {self.count})"
        return {
            self.CONTRACTIBLE: "ContractibleLike",
            self.EMPTY: "EmptyAsNegativeWedge",
            self.INCONSISTENT: "Inconsistent",
        }[self.kind]


def wedge_signature(profile: HomologyProfile, d: int) -> WedgeSignature:
    """Classify a reduced homology profile against 'wedge of d-spheres'."""
    if profile.is_zero:
        return WedgeSignature(WedgeSignature.CONTRACTIBLE)
    if profile.is_empty_convention:
        if d < 0:
            return WedgeSignature(WedgeSignature.EMPTY, d)
        return WedgeSignature(WedgeSignature.INCONSISTENT)
    if d >= 0 and profile.is_torsion_free and profile.degrees == [d]:
        return WedgeSignature(WedgeSignature.WEDGE, d, profile.betti(d))
    return WedgeSignature(WedgeSignature.INCONSISTENT)


def homologically_connected(profile: HomologyProfile, c: int) -> bool:
    """Reduced homology vanishes in every degree <= c (vacuous for c <= -2)."""
    return all(q > c for q in profile.degrees)


# -- links, Cohen-Macaulay -------------------------------------------------


def link(K: SimplicialComplex, sigma: Iterable[Hashable]) -> SimplicialComplex:
    s = _fs(sigma)
    if s not in K:
        raise NotAFaceError(tuple(_sorted(s)))
    return SimplicialComplex(f - s for f in K.maximal_faces if s <= f)


@dataclass
class CMReport:
    is_cm: bool
    dimension: int
    pure: bool
    failing_faces: List[Tuple[Tuple, int, str]] = field(default_factory=list)
    faces_checked: int = 0
    certification: str = "homological"

    def to_json(self) -> dict:
        return {
            "is_cm": self.is_cm,
            "dimension": self.dimension,
            "pure": self.pure,
            "faces_checked": self.faces_checked,
            "certification": self.certification,
            "failing_faces": [
                {"face": [str(v) for v in f], "expected_dimension": d, "signature": s}
                for f, d, s in self.failing_faces
            ],
        }


def cm_check(K: SimplicialComplex, stop_at_first: bool = False) -> CMReport:
    """Homological Cohen-Macaulay test: every link, the empty face included,
    has reduced homology vanishing below its expected dimension."""
    dim = K.dimension
    pure = K.is_pure()
    report = CMReport(is_cm=pure, dimension=dim, pure=pure)
    for sigma in [frozenset()] + K.faces():
        expected = dim - (len(sigma) - 1) - 1
        lk = link(K, sigma)
        sig = wedge_signature(reduced_homology(lk), expected)
        report.faces_checked += 1
        if not sig.is_spherical:
            report.is_cm = False
            report.failing_faces.append((tuple(_sorted(sigma)), expected, str(sig)))
            if stop_at_first:
                break
    return report


# -- joins and inflations --------------------------------------------------


def join_complex(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Join; vertex keys are tagged (0, v), (1, w) when the two sets overlap."""
    if set(K.vertices) & set(L.vertices):
        K = K.relabel({v: (0, v) for v in K.vertices})
        L = L.relabel({v: (1, v) for v in L.vertices})
    kf = K.maximal_faces or (frozenset(),)
    lf = L.maximal_faces or (frozenset(),)
    return SimplicialComplex(a | b for a in kf for b in lf)


def inflate(K: SimplicialComplex, family: Mapping[Hashable, Iterable[Hashable]]) -> SimplicialComplex:
    """Replace each vertex v by the points (v, p), p in P_v, lifting every face."""
    fam = {}
    for v in K.vertices:
        if v not in family:
            raise ComplexError(f"inflation family has no set for vertex {v!r}")
        ps = sorted(set(family[v]), key=sort_key)
        if not ps:
            raise ComplexError(f"inflation set for vertex {v!r} is empty")
        fam[v] = ps
    faces = []
    for f in K.maximal_faces:
        fl = _sorted(f)
        for choice in itertools.product(*(fam[v] for v in fl)):
            faces.append(zip(fl, choice))
    return SimplicialComplex(faces)


@dataclass(frozen=True)
class SimplicialMap:
    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: Mapping

    def __post_init__(self):
        for v in self.source.vertices:
            if v not in self.vertex_map:
                raise NotSimplicialError(f"vertex {v!r} has no image")
        for f in self.source.maximal_faces:
            img = {self.vertex_map[v] for v in f}
            if img not in self.target:
                raise NotSimplicialError(f"image of face {_sorted(f)} is not a face of the target")

    def __call__(self, face):
        return frozenset(self.vertex_map[v] for v in face)


def natural_projection(K: SimplicialComplex, family) -> SimplicialMap:
    inf = inflate(K, family)
    return SimplicialMap(inf, K, {vp: vp[0] for vp in inf.vertices})


def _perm_sign(seq) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def mapping_cone_profile(f: SimplicialMap) -> HomologyProfile:
    """Reduced homology of the algebraic mapping cone of the induced chain map.

    Cone_q = C_{q-1}(source) + C_q(target) with d(a, b) = (-da, f(a) + db);
    vanishing through degree m certifies that f is homologically m-connected.
    """
    Kf = _index_faces(_int_faces(f.source))
    Lf = _index_faces(_int_faces(f.target))
    lnum = {v: i for i, v in enumerate(f.target.vertices)}
    kverts = f.source.vertices
    vmap = [lnum[f.vertex_map[v]] for v in kverts]
    kidx = {k: {s: i for i, s in enumerate(fs)} for k, fs in Kf.items()}
    lidx = {k: {s: i for i, s in enumerate(fs)} for k, fs in Lf.items()}
    top = max(max(Kf) + 1, max(Lf))
    # basis of Cone_q: source faces of dim q-1 first, then target faces of dim q
    offset = {q: len(Kf.get(q - 1, [])) for q in range(-1, top + 1)}
    dims = {q: offset[q] + len(Lf.get(q, [])) for q in range(-1, top + 1)}
    boundaries: Dict[int, List[Dict[int, int]]] = {}
    for q in range(0, top + 1):
        rows = []
        for a in Kf.get(q - 1, []):
            row: Dict[int, int] = {}
            for i in range(len(a)):
                g = a[:i] + a[i + 1:]
                row[kidx[q - 2][g]] = -1 if i % 2 == 0 else 1
            img = [vmap[x] for x in a]
            if len(set(img)) == len(img):
                col = offset[q - 1] + lidx[q - 1][tuple(sorted(img))]
                row[col] = row.get(col, 0) + _perm_sign(img)
            rows.append({c: x for c, x in row.items() if x})
        for b in Lf.get(q, []):
            row = {}
            for i in range(len(b)):
                row[offset[q - 1] + lidx[q - 1][b[:i] + b[i + 1:]]] = -1 if i % 2 else 1
            rows.append(row)
        boundaries[q] = rows
    return chain_complex_homology({q: n for q, n in dims.items() if n}, boundaries)


def quillen_check(f, m: int) -> dict:
    """Homological form of the fibre theorem for a poset map ``f``.

    For every target element y the join of the fibre below y with the strict
    upper interval above y must be (m-1)-connected; then the induced map of
    order complexes should be an m-equivalence, i.e. its mapping cone vanishes
    through degree m.
    """
    from .poset import fibre_below, interval, order_complex, order_complex_map

    fibres = []
    fibre_ok = True
    for y in f.target.elements:
        J = join_complex(order_complex(fibre_below(f, y)), order_complex(interval(f.target, y, "above", strict=True)))
        prof = reduced_homology(J)
        ok = homologically_connected(prof, m - 1)
        fibre_ok &= ok
        if not ok:
            fibres.append({"element": str(y), "join_homology": prof.to_json()})
    cone = mapping_cone_profile(order_complex_map(f))
    cone_ok = homologically_connected(cone, m)
    return {
        "m": m,
        "fibres_ok": fibre_ok,
        "cone_ok": cone_ok,
        "cone_homology": cone.to_json(),
        "bad_fibres": fibres,
        "implementation_inconsistent": fibre_ok and not cone_ok,
    }


# -- fundamental group probe -----------------------------------------------


@dataclass
class Pi1Probe:
    status: str  # "trivial" | "unknown" | "disconnected" | "empty"
    generators: int = 0
    relators: List[Tuple[int, ...]] = field(default_factory=list)


def _free_reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    while len(out) > 1 and out[0] == -out[-1]:
        out = out[1:-1]
    return tuple(out)


def fundamental_group_probe(K: SimplicialComplex, budget: int = 200_000) -> Pi1Probe:
    """Edge-path presentation of pi_1 followed by bounded Tietze eliminations.

    Returns ``trivial`` only when every generator was eliminated; otherwise
    ``unknown`` (never a proof of non-triviality).
    """
    if K.is_empty:
        return Pi1Probe("empty")
    verts = K.vertices
    num = {v: i for i, v in enumerate(verts)}
    edges = [tuple(sorted(num[v] for v in e)) for e in K.faces(1)]
    parent = list(range(len(verts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = set()
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            tree.add((a, b))
    if len({find(i) for i in range(len(verts))}) > 1:
        return Pi1Probe("disconnected")
    gen = {}
    for e in edges:
        if e not in tree:
            gen[e] = len(gen) + 1

    def letter(a, b):
        if (a, b) in tree:
            return ()
        return (gen[(a, b)],)

    rels = []
    for t in K.faces(2):
        a, b, c = sorted(num[v] for v in t)
        w = letter(a, b) + letter(b, c) + tuple(-x for x in letter(a, c))
        w = _free_reduce(w)
        if w:
            rels.append(w)
    alive = set(gen.values())
    work = 0
    while alive and work < budget:
        rels = [r for r in (_free_reduce(r) for r in rels) if r]
        best = None
        for ri, r in enumerate(rels):
            counts: Dict[int, int] = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for g, c in counts.items():
                if c == 1 and (best is None or len(r) < len(rels[best[0]])):
                    best = (ri, g)
        if best is None:
            break
        ri, g = best
        r = rels.pop(ri)
        pos = next(i for i, x in enumerate(r) if abs(x) == g)
        rot = r[pos:] + r[:pos]
        rest = rot[1:]
        # g^e * rest = 1  =>  g = rest^{-1} if e = 1, g = rest if e = -1
        if rot[0] > 0:
            sub = tuple(-x for x in reversed(rest))
        else:
            sub = rest
        inv = tuple(-x for x in reversed(sub))
        new = []
        for w in rels:
            out = []
            for x in w:
                if x == g:
                    out.extend(sub)
                elif x == -g:
                    out.extend(inv)
                else:
                    out.append(x)
            work += len(out)
            new.append(tuple(out))
        rels = new
        alive.discard(g)
    rels = [r for r in (_free_reduce(r) for r in rels) if r]
    return Pi1Probe("trivial" if not alive else "unknown", len(alive), rels if alive else [])


# -- text format -----------------------------------------------------------


def parse_complex(text: str) -> SimplicialComplex:
    """One maximal face per line, whitespace-separated vertex tokens, ``#`` comments."""
    faces = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            faces.append(line.split())
    return SimplicialComplex(faces)


def format_complex(K: SimplicialComplex, names: Optional[Mapping] = None) -> str:
    nm = names or {v: str(v) for v in K.vertices}
    toks = list(nm.values())
    if len(set(toks)) != len(toks) or any(not t or any(c.isspace() or c == "#" for c in t) for t in toks):
        raise ComplexError("vertex tokens must be unique and contain no whitespace or '#'")
    return "".join(" ".join(nm[v] for v in _sorted(f)) + "\n" for f in K.maximal_faces)


def load_complex(path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())


def dump_complex(K: SimplicialComplex, path, names=None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_complex(K, names))


def dump_profile(profile: HomologyProfile) -> str:
    return json.dumps(profile.to_json(), sort_keys=True, separators=(",", ":"))


# -- standard complexes ----------------------------------------------------


def simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex([range(n + 1)])


def boundary_of_simplex(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex, a triangulated (n-1)-sphere."""
    return SimplicialComplex(itertools.combinations(range(n + 1), n))


def cross_polytope(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross polytope: the join of d copies of S^0."""
    return SimplicialComplex(
        [(i, s) for i, s in enumerate(signs)] for signs in itertools.product((1, -1), repeat=d)
    )


def projective_plane() -> SimplicialComplex:
    """The 6-vertex, 10-triangle triangulation of RP^2."""
    tris = [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
    ]
    return SimplicialComplex(tris)


def points(n: int) -> SimplicialComplex:
    return SimplicialComplex(vertices=range(n))


def cone(K: SimplicialComplex, apex="*") -> SimplicialComplex:
    if K.is_empty:
        return SimplicialComplex(vertices=[apex])
    return SimplicialComplex(f | {apex} for f in K.maximal_faces)
