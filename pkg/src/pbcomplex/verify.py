"""Sweeps that check the graph-poset, inflation and partial-basis statements
instance by instance, each producing a :class:`VerificationReport`.

Homotopy statements are certified through their homological shadow; where a
bounded fundamental-group probe also ran, the report says so in
``certification_level``.
"""

from __future__ import annotations

import itertools
import json
import platform
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional

from . import __version__
from .complex import (
    SimplicialComplex,
    WedgeSignature,
    boundary_of_simplex,
    cm_check,
    cross_polytope,
    fundamental_group_probe,
    inflate,
    quillen_check,
    reduced_homology,
    wedge_signature,
)
from .freegroup import (
    SearchBudgetExceeded,
    abelianize,
    build_B_truncation,
    farey_edge,
    is_partial_basis_classes,
    primitive_vectors,
)
from .graph_core import (
    LabelledGraph,
    collapse_edge,
    connected_components,
    delete_edge,
    enumerate_labelled_graphs,
    expected_dimension,
    graph_from_json,
    graph_to_json,
    is_connected,
    is_separating_edge,
    l_separating_edges,
    rank,
    valences,
)
from .poset import PosetError, PosetMap, build_core_poset, build_nontrees, max_core_map, monotone_image_check, order_complex

__all__ = [
    "VerificationReport",
    "verify_con_x",
    "verify_core_retract",
    "verify_suspension",
    "verify_quotient_step",
    "verify_inflation_cm",
    "verify_farey",
    "verify_b3_probe",
    "ffs_connectivity",
    "p1_equivalence_degree",
    "random_complex",
]


def ffs_connectivity(corank: int, size: int) -> int:
    """Connectivity bound for relative free factor systems of given corank and size."""
    return max(corank + size - 4, corank - 2)


def p1_equivalence_degree(n: int, k: int) -> int:
    """Degree of the equivalence Z -> L for corank n and k factors."""
    if k >= 2:
        return n + k - 3
    return n - 1 if k == 1 else n - 2


def _fingerprint() -> dict:
    return {"package": "pbcomplex", "version": __version__, "python": platform.python_version(), "arithmetic": "exact-int"}


@dataclass
class VerificationReport:
    sweep: str
    params: dict
    instances: int = 0
    failures: List[dict] = field(default_factory=list)
    elapsed: float = 0.0
    fingerprint: dict = field(default_factory=_fingerprint)
    certification_level: str = "homological"
    observational: bool = False
    skipped: int = 0
    observations: dict = field(default_factory=dict)
    minimal_failure: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, include_timing: bool = True) -> dict:
        out = {
            "sweep": self.sweep,
            "params": self.params,
            "instances": self.instances,
            "passed": self.passed,
            "failures": self.failures,
            "fingerprint": self.fingerprint,
            "certification_level": self.certification_level,
            "observational": self.observational,
            "skipped": self.skipped,
            "observations": self.observations,
            "minimal_failure": self.minimal_failure,
        }
        if include_timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def dumps(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_json(include_timing), sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, data: dict) -> "VerificationReport":
        return cls(
            sweep=data["sweep"],
            params=data["params"],
            instances=data["instances"],
            failures=list(data["failures"]),
            elapsed=data.get("elapsed", 0.0),
            fingerprint=data["fingerprint"],
            certification_level=data["certification_level"],
            observational=data["observational"],
            skipped=data["skipped"],
            observations=data["observations"],
            minimal_failure=data.get("minimal_failure"),
        )

    def summary_line(self, timing: bool = True) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.observational and self.passed:
            status = "OBS "
        extra = f" skipped={self.skipped}" if self.skipped else ""
        line = f"{status} {self.sweep:<15} instances={self.instances:<6} failures={len(self.failures)}{extra}"
        return line + (f" ({self.elapsed:.1f}s)" if timing else "")


def _map(fn: Callable, items: List, jobs: int) -> List:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _homology_json(p):
    return p.to_json()


def _sub_instances(g: LabelledGraph) -> Iterable[LabelledGraph]:
    if len(g.edges) > 1:
        for e in g.edges:
            h = delete_edge(g, e.id)
            if is_connected(h):
                yield h
    for v in sorted(g.labels, key=str):
        yield LabelledGraph(g.edges, g.labels - {v})


def _minimize(check: Callable[[dict], dict], g: LabelledGraph) -> dict:
    """Shrink a failing instance while some sub-instance still fails."""
    cur = g
    while True:
        for h in _sub_instances(cur):
            if check(graph_to_json(h))["failures"]:
                cur = h
                break
        else:
            return graph_to_json(cur)


def _graph_sweep(name: str, check: Callable[[dict], dict], max_edges: int, max_labels: int, jobs: int, **params) -> VerificationReport:
    if max_edges < 1 or max_labels < 0:
        raise ValueError("bounds must satisfy max_edges >= 1 and max_labels >= 0")
    t0 = time.perf_counter()
    graphs = [graph_to_json(g) for g in enumerate_labelled_graphs(max_edges, max_labels)]
    results = _map(check, graphs, jobs)
    rep = VerificationReport(name, {"max_edges": max_edges, "max_labels": max_labels, "jobs_independent": True, **params})
    obs: Dict[str, int] = {}
    for g, res in zip(graphs, results):
        for k, v in res.get("counts", {}).items():
            obs[k] = obs.get(k, 0) + v
        if res.get("skipped"):
            rep.skipped += 1
            continue
        rep.instances += 1
        rep.failures.extend(res["failures"])
    rep.observations = dict(sorted(obs.items()))
    if rep.failures:
        rep.minimal_failure = _minimize(check, graph_from_json(rep.failures[0]["instance"]))
    rep.elapsed = time.perf_counter() - t0
    return rep


def _fail(gj, expected, observed, **extra):
    out = {"instance": gj, "expected": expected, "observed": observed}
    out.update(extra)
    return out


# -- sweep bodies (module level so worker processes can import them) --------


def _check_con_x(gj: dict) -> dict:
    g = graph_from_json(gj)
    n, k = rank(g), g.k
    d = expected_dimension(n, k)
    X = build_nontrees(g)
    K = order_complex(X)
    prof = reduced_homology(K)
    lsep = l_separating_edges(g)
    sig = wedge_signature(prof, d)
    failures = []
    counts = {"with_l_separating": 1 if lsep else 0}
    if lsep:
        if sig.kind != WedgeSignature.CONTRACTIBLE:
            failures.append(_fail(gj, "contractible", str(sig), homology=prof.to_json(), d=d))
    else:
        ok = (sig.kind == WedgeSignature.WEDGE and sig.dimension == d and sig.count >= 1) or (
            sig.kind == WedgeSignature.EMPTY and d < 0
        )
        if not ok:
            failures.append(_fail(gj, f"non-trivial wedge of {d}-spheres", str(sig), homology=prof.to_json(), d=d))
    # condition (3) of l-separation, recomputed from G minus e, against poset membership
    members = set(X.elements)
    for e in g.edges:
        if len(g.edges) == 1:
            break
        h = delete_edge(g, e.id)
        cond3 = any(
            len(es) - len(vs) + 1 > 0 or len(h.labels.intersection(vs)) >= 2 for vs, es in connected_components(h)
        )
        if cond3 != (h.edge_ids in members):
            failures.append(_fail(gj, f"membership of G-e{e.id} = {cond3}", not cond3, check="cross-module"))
    if d >= 2 and sig.kind == WedgeSignature.CONTRACTIBLE:
        probe = fundamental_group_probe(K)
        counts["pi1_trivial" if probe.status == "trivial" else "pi1_unknown"] = 1
    return {"failures": failures, "counts": counts}


def verify_con_x(max_edges: int = 5, max_labels: int = 3, jobs: int = 1) -> VerificationReport:
    """Non-tree posets are wedges of d(G,l)-spheres, contractible iff an l-separating edge exists."""
    rep = _graph_sweep("con-x", _check_con_x, max_edges, max_labels, jobs)
    if rep.observations.get("pi1_trivial") or rep.observations.get("pi1_unknown"):
        rep.certification_level = "homological+pi1"
    rep.observations["formulas"] = {
        "d(n,k)": "n+k-3 if k>=1 else n-2",
        "e(n,k)": "n+k-3 if k>=2; n-1 if k=1; n-2 if k=0",
        "c(crk,size)": "max(crk+size-4, crk-2)",
        "table": [
            {"n": n, "k": k, "d": expected_dimension(n, k), "e": p1_equivalence_degree(n, k), "c": ffs_connectivity(n, k)}
            for n in range(0, 4)
            for k in range(0, 4)
        ],
    }
    return rep


def _check_core_retract(gj: dict, quillen: bool = False) -> dict:
    g = graph_from_json(gj)
    failures = []
    X = build_nontrees(g)
    C = build_core_poset(g)
    hx = reduced_homology(order_complex(X))
    hc = reduced_homology(order_complex(C))
    if hx != hc:
        failures.append(_fail(gj, hx.to_json(), hc.to_json(), check="homology X vs Core"))
    if not set(C.elements) <= set(X.elements):
        failures.append(_fail(gj, "Core inside X", "Core not inside X"))
    try:
        f = max_core_map(g, X)
    except (PosetError, ValueError) as exc:
        failures.append(_fail(gj, "max-core map defined on X", repr(exc)))
    else:
        if not monotone_image_check(f):
            failures.append(_fail(gj, "monotone decreasing", "not monotone"))
        stray = [sorted(y) for y in f.image() if y not in C]
        if stray:
            failures.append(_fail(gj, "image inside Core", stray))
        if any(f(x) != x for x in C.elements):
            failures.append(_fail(gj, "identity on Core", "moves a core subgraph"))
    if quillen and len(X):
        inc = PosetMap(C, X, {c: c for c in C.elements})
        d = expected_dimension(rank(g), g.k)
        q = quillen_check(inc, d)
        if not (q["fibres_ok"] and q["cone_ok"]):
            failures.append(_fail(gj, "fibre theorem hypotheses and conclusion", q, check="quillen"))
    return {"failures": failures, "counts": {"core_smaller": int(len(C) < len(X))}}


def _check_core_retract_quillen(gj: dict) -> dict:
    return _check_core_retract(gj, quillen=True)


def verify_core_retract(max_edges: int = 5, max_labels: int = 3, jobs: int = 1, quillen: bool = False) -> VerificationReport:
    """X(G,l) and Core(G,l) agree homologically; H -> MaxCore(H) is monotone."""
    fn = _check_core_retract_quillen if quillen else _check_core_retract
    return _graph_sweep("core-retract", fn, max_edges, max_labels, jobs, quillen=quillen)


def _check_suspension(gj: dict) -> dict:
    g = graph_from_json(gj)
    loops = [e.id for e in g.edges if e.is_loop]
    if not loops or len(g.edges) < 2 or l_separating_edges(g):
        return {"failures": [], "skipped": True}
    hx = reduced_homology(order_complex(build_nontrees(g)))
    failures = []
    for e in loops:
        h = delete_edge(g, e)
        hs = reduced_homology(order_complex(build_nontrees(h))).shift(1)
        if hs != hx:
            failures.append(_fail(gj, hs.to_json(), hx.to_json(), loop=e))
    return {"failures": failures}


def verify_suspension(max_edges: int = 5, max_labels: int = 3, jobs: int = 1) -> VerificationReport:
    """Removing a loop shifts the homology of X down by one degree."""
    return _graph_sweep("suspension", _check_suspension, max_edges, max_labels, jobs)


def admissible_quotient_edges(g: LabelledGraph) -> List[int]:
    """Edges usable in the quotient step: leaves of a tree, else non-separating
    edges; in both cases with at most one labelled endpoint."""
    if rank(g) == 0:
        val = valences(g)
        cand = [e.id for e in g.edges if val[e.u] == 1 or val[e.v] == 1]
    else:
        cand = [e.id for e in g.edges if not is_separating_edge(g, e.id)]
    return [e for e in cand if len(g.labels.intersection(g.edge(e).ends())) <= 1]


def _check_quotient(gj: dict) -> dict:
    g = graph_from_json(gj)
    if any(e.is_loop for e in g.edges) or len(g.edges) < 2 or l_separating_edges(g):
        return {"failures": [], "skipped": True, "counts": {}}
    edges = admissible_quotient_edges(g)
    if not edges:
        return {"failures": [], "skipped": True, "counts": {"no_admissible_edge": 1}}
    X = build_nontrees(g)
    failures = []
    below = 0
    for e in edges:
        rest = g.edge_ids - {e}
        Y1 = X.subposet(x for x in X.elements if x != rest)
        q = collapse_edge(g, e)
        Q = build_nontrees(q)
        h1 = reduced_homology(order_complex(Y1))
        h2 = reduced_homology(order_complex(Q))
        if h1 != h2:
            failures.append(_fail(gj, h2.to_json(), h1.to_json(), edge=e, check="homology Y1 vs X(G/e)"))
        # the comparison maps f: H -> H/e and g: K -> K (+ e when K meets v_e)
        ve = g.edge(e).u
        qverts = {f.id: f.ends() for f in q.edges}
        try:
            fmap = PosetMap(Y1, Q, {h: h - {e} for h in Y1.elements})
            gmap = PosetMap(Q, Y1, {k: (k | {e}) if any(ve in qverts[i] for i in k) else k for k in Q.elements})
        except PosetError as exc:
            failures.append(_fail(gj, "f and g are poset maps", repr(exc), edge=e))
            continue
        if any(fmap(gmap(k)) != k for k in Q.elements):
            failures.append(_fail(gj, "f.g = id", "violated", edge=e))
        # subgraphs are bare edge sets, so g.f can drop an isolated e; the
        # comparison with the identity goes through id <= h >= g.f instead
        ends = set(g.edge(e).ends())
        up = {x: (x | {e}) if any(ends & set(g.edge(i).ends()) for i in x) else x for x in Y1.elements}
        try:
            PosetMap(Y1, Y1, up)
        except PosetError as exc:
            failures.append(_fail(gj, "zig-zag map is a poset map", repr(exc), edge=e))
            continue
        if any(not (x <= up[x] and gmap(fmap(x)) <= up[x]) for x in Y1.elements):
            failures.append(_fail(gj, "id <= h >= g.f", "violated", edge=e))
        below += sum(1 for x in Y1.elements if not x <= gmap(fmap(x)))
    return {"failures": failures, "counts": {"edges_checked": len(edges), "gf_below_id_on_edge_sets": below}}


def verify_quotient_step(max_edges: int = 5, max_labels: int = 3, jobs: int = 1) -> VerificationReport:
    """Y1 = X(G,l) minus G-e has the homology of X(G/e)."""
    rep = _graph_sweep("quotient-step", _check_quotient, max_edges, max_labels, jobs)
    return rep


# -- inflation ---------------------------------------------------------------


def random_complex(rng: random.Random, max_vertices: int = 8, max_dim: int = 3) -> SimplicialComplex:
    """A random complex; about half the draws come from families that are often CM."""
    kind = rng.randrange(8)
    if kind == 0:
        K = boundary_of_simplex(rng.randint(1, max_dim + 1))
    elif kind == 1:
        K = cross_polytope(rng.randint(1, min(max_dim + 1, max_vertices // 2)))
    elif kind == 2:
        n = rng.randint(3, max_vertices)
        K = SimplicialComplex([(i, (i + 1) % n) for i in range(n)])
    elif kind == 3:
        d = rng.randint(0, max_dim)
        n = rng.randint(d + 1, max_vertices)
        K = SimplicialComplex(rng.sample(range(n), d + 1) for _ in range(rng.randint(1, 6)))
    else:
        n = rng.randint(1, max_vertices)
        K = SimplicialComplex(rng.sample(range(n), rng.randint(1, min(n, max_dim + 1))) for _ in range(rng.randint(1, 6)))
    num = {v: i for i, v in enumerate(K.vertices)}
    return K.relabel(num)


def _check_inflation(task: tuple) -> dict:
    faces, fam = task
    K = SimplicialComplex(faces)
    P = {v: range(fam[v]) for v in K.vertices}
    I = inflate(K, P)
    a, b = cm_check(K), cm_check(I)
    failures = []
    if a.is_cm != b.is_cm or K.dimension != I.dimension:
        failures.append(
            _fail({"faces": faces, "sizes": fam}, {"is_cm": a.is_cm, "dim": K.dimension}, {"is_cm": b.is_cm, "dim": I.dimension})
        )
    return {"failures": failures, "counts": {"cm": int(a.is_cm), "non_cm": int(not a.is_cm)}}


def verify_inflation_cm(trials: int = 200, seed: int = 0, jobs: int = 1) -> VerificationReport:
    """Inflating a complex preserves dimension and the Cohen-Macaulay property."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    tasks = []
    for _ in range(trials):
        K = random_complex(rng)
        fam = {v: rng.randint(1, 3) for v in K.vertices}
        tasks.append(([sorted(f) for f in K.maximal_faces], fam))
    results = _map(_check_inflation, tasks, jobs)
    rep = VerificationReport("inflation-cm", {"trials": trials, "seed": seed})
    obs = {"cm": 0, "non_cm": 0}
    for res in results:
        rep.instances += 1
        rep.failures.extend(res["failures"])
        for k, v in res["counts"].items():
            obs[k] += v
    rep.observations = obs
    rep.elapsed = time.perf_counter() - t0
    return rep


# -- partial basis truncations -------------------------------------------------


def _components(K: SimplicialComplex) -> int:
    parent = {v: v for v in K.vertices}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for e in K.faces(1):
        a, b = tuple(e)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in K.vertices})


def verify_farey(max_len: int = 8) -> VerificationReport:
    """Rank-2 truncation against the determinant +-1 oracle on abelianizations."""
    if not 1 <= max_len <= 8:
        raise ValueError("max_len must lie in 1..8")
    t0 = time.perf_counter()
    rep = VerificationReport("farey", {"max_len": max_len})
    try:
        B = build_B_truncation(2, max_len)
    except SearchBudgetExceeded as exc:
        rep.failures.append({"instance": {"max_len": max_len}, "expected": "completed search", "observed": str(exc)})
        rep.elapsed = time.perf_counter() - t0
        return rep
    verts = list(B.vertices)
    ab = {v: abelianize(v) for v in verts}
    rep.instances = len(verts) * (len(verts) - 1) // 2
    if len(set(ab.values())) != len(verts):
        rep.failures.append({"instance": "vertices", "expected": "injective abelianization", "observed": "collision"})
    realized = set(ab.values())
    want = set(primitive_vectors(max_len))
    if realized != want:
        rep.failures.append(
            {"instance": "vertices", "expected": sorted(want), "observed": sorted(realized), "check": "image = primitive vectors with |a|+|b| <= L"}
        )
    edges = {frozenset(e) for e in B.faces(1)}
    for u, v in itertools.combinations(verts, 2):
        is_edge = frozenset((u, v)) in edges
        if is_edge != farey_edge(ab[u], ab[v]):
            rep.failures.append({"instance": [str(u), str(v)], "expected": not is_edge, "observed": is_edge})
    comps = _components(B)
    if comps != 1:
        rep.failures.append({"instance": "graph", "expected": "connected", "observed": f"{comps} components"})
    if B.dimension != 1:
        rep.failures.append({"instance": "graph", "expected": "dimension 1", "observed": B.dimension})
    lonely = [str(v) for v in verts if not any(v in e for e in edges)]
    if lonely:
        rep.failures.append({"instance": "graph", "expected": "every vertex on an edge", "observed": lonely})
    rep.observations = {"vertices": len(verts), "edges": len(edges), "components": comps}
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_b3_probe(max_len: int = 1) -> VerificationReport:
    """Rank-3 truncation: observations, plus internal consistency of the faces."""
    if not 1 <= max_len <= 4:
        raise ValueError("max_len must lie in 1..4")
    t0 = time.perf_counter()
    rep = VerificationReport("b3-probe", {"max_len": max_len}, observational=max_len > 1)
    try:
        B = build_B_truncation(3, max_len)
    except SearchBudgetExceeded as exc:
        rep.failures.append({"instance": {"max_len": max_len}, "expected": "completed search", "observed": str(exc)})
        rep.elapsed = time.perf_counter() - t0
        return rep
    prof = reduced_homology(B)
    two_faces = B.faces(2)
    edges = set(B.faces(1))
    rep.instances = len(B.faces())
    for t in two_faces:
        for e in itertools.combinations(sorted(t), 2):
            if frozenset(e) not in edges or not is_partial_basis_classes(e):
                rep.failures.append({"instance": [str(v) for v in sorted(t)], "expected": "all edges certified", "observed": [str(v) for v in e]})
    extends = all(any(v in t for t in two_faces) for v in B.vertices)
    rep.observations = {
        "f_vector": B.f_vector(),
        "components": _components(B),
        "reduced_homology": prof.to_json(),
        "H1": prof.betti(1),
        "H1_torsion": list(prof.torsion(1)),
        "every_vertex_in_2_face": extends,
    }
    if max_len == 1:
        octa = cross_polytope(3)
        iso = {v: (abs(v.letters[0]) - 1, 1 if v.letters[0] > 0 else -1) for v in B.vertices}
        if B.relabel(iso) != octa:
            rep.failures.append({"instance": "B3<=1", "expected": "octahedron boundary", "observed": [sorted(map(str, f)) for f in B.maximal_faces]})
        if prof != reduced_homology(octa):
            rep.failures.append({"instance": "B3<=1", "expected": reduced_homology(octa).to_json(), "observed": prof.to_json()})
        cm = cm_check(B)
        rep.observations["cm"] = cm.is_cm
        if not cm.is_cm or cm.dimension != 2:
            rep.failures.append({"instance": "B3<=1", "expected": "CM of dimension 2", "observed": cm.to_json()})
    rep.elapsed = time.perf_counter() - t0
    return rep
