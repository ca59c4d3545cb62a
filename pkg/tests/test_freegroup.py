import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from pbcomplex.complex import cm_check, cross_polytope, inflate, reduced_homology
from pbcomplex.freegroup import (
    CyclicWord,
    EmptyClassError,
    FreeGroupError,
    RankMismatchError,
    SearchBudgetExceeded,
    WhiteheadAuto,
    abelianize,
    apply_whitehead,
    build_B_truncation,
    build_frame_truncation,
    cyclic_normal_form,
    enumerate_cyclic_words,
    enumerate_primitive_classes,
    farey_edge,
    format_word,
    free_reduce,
    is_partial_basis_classes,
    is_primitive_class,
    parse_word,
    primitive_vectors,
    whitehead_automorphisms,
    whitehead_minimize,
)


def W(text, rank=2):
    return CyclicWord.parse(text, rank)


letters2 = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=10)


def test_word_syntax():
    assert parse_word("xyXY", 2) == (1, 2, -1, -2)
    assert format_word((1, 2, -1, -2), 2) == "xyXY"
    assert parse_word("abD", 4) == (1, 2, -4)
    with pytest.raises(FreeGroupError):
        parse_word("xz", 2)
    assert free_reduce((1, 2, -2, -1, 1)) == (1,)


def test_normal_form_examples():
    assert cyclic_normal_form("yxY", 2) == W("x")
    c = cyclic_normal_form("xyXY", 2)
    assert len(c) == 4 and str(c) == "xyXY"
    with pytest.raises(EmptyClassError):
        cyclic_normal_form("xX", 2)


@settings(max_examples=200, deadline=None)
@given(letters2, letters2)
def test_conjugation_invariance(w, g):
    conj = list(g) + list(w) + [-x for x in reversed(g)]
    try:
        c = cyclic_normal_form(w, 2)
    except EmptyClassError:
        with pytest.raises(EmptyClassError):
            cyclic_normal_form(conj, 2)
        return
    assert cyclic_normal_form(conj, 2) == c


def test_automorphism_counts_and_order():
    t1, t2 = whitehead_automorphisms(2)
    assert len(t1) == 8 and len(t2) == 8
    t1, t2 = whitehead_automorphisms(3)
    assert len(t1) == 48 and len(t2) == 84
    # type II never has A = {a} or the inner cut (everything except a^-1)
    for phi in t2:
        assert phi.A != {phi.a}
        assert phi.A != frozenset(x for x in (1, -1, 2, -2, 3, -3) if x != -phi.a)
    keys = [(phi.perm, tuple(s < 0 for s in phi.signs)) for phi in whitehead_automorphisms(3)[0]]
    assert keys == sorted(keys)


def test_apply_whitehead_examples():
    swap = WhiteheadAuto.type_one((2, 1), (1, 1))
    assert apply_whitehead(swap, W("xy")) == W("xy")
    phi = WhiteheadAuto.type_two(2, 1, {1, 2})
    assert apply_whitehead(phi, W("y")) == W("xy")
    for psi in itertools.chain(*whitehead_automorphisms(1)):
        assert apply_whitehead(psi, W("x", 1)) in (W("x", 1), W("X", 1))
    with pytest.raises(RankMismatchError):
        apply_whitehead(phi, W("x", 3))
    with pytest.raises(FreeGroupError):
        WhiteheadAuto.type_two(2, 1, {1, -1})


def test_type_one_preserves_length():
    for c in enumerate_cyclic_words(2, 4):
        for phi in whitehead_automorphisms(2)[0]:
            assert len(apply_whitehead(phi, c)) == len(c)


def test_minimize_examples():
    t, total, _ = whitehead_minimize((W("yxY"),))
    assert total == 1 and t == (W("x"),)
    assert whitehead_minimize((W("xxy"),))[1] == 1
    assert whitehead_minimize((W("xyXY"),))[1] == 4


def test_primitive_examples():
    assert is_primitive_class(W("xy"))
    assert not is_primitive_class(W("xyXY"))
    assert not is_primitive_class(W("xxyy"))
    assert is_primitive_class(W("xxy"))


def _bfs_orbit_min(c, bound):
    """Least length reached from c by automorphism words whose intermediate
    lengths stay <= bound."""
    t1, t2 = whitehead_automorphisms(c.rank)
    seen = {c}
    frontier = [c]
    while frontier:
        nxt = []
        for u in frontier:
            for phi in itertools.chain(t1, t2):
                w = apply_whitehead(phi, u)
                if len(w) <= bound and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return min(len(u) for u in seen)


def test_minimize_agrees_with_bounded_orbit_search():
    for c in enumerate_cyclic_words(2, 4):
        assert whitehead_minimize((c,))[1] == _bfs_orbit_min(c, 6), c


def test_partial_basis_examples():
    assert is_partial_basis_classes((W("x"), W("y")))
    assert not is_partial_basis_classes((W("x"), W("X")))
    assert is_partial_basis_classes((W("x"), W("xy")))
    assert not is_partial_basis_classes((W("xy"), W("xY")))
    with pytest.raises(FreeGroupError):
        is_partial_basis_classes((W("x"), W("x")))
    with pytest.raises(FreeGroupError):
        is_partial_basis_classes((W("x"), W("y"), W("xy")))


def test_budget_is_enforced():
    with pytest.raises(SearchBudgetExceeded):
        is_partial_basis_classes((W("x", 3), W("X", 3)), budget=1)


def test_abelianize_examples():
    assert abelianize(W("xyXY")) == (0, 0)
    assert abelianize(W("xxy")) == (2, 1)
    assert abelianize(W("x")) == (1, 0)


def test_enumerate_primitive_examples():
    assert [str(c) for c in enumerate_primitive_classes(1, 1)] == ["x", "X"]
    assert [str(c) for c in enumerate_primitive_classes(2, 1)] == ["x", "X", "y", "Y"]
    assert [str(c) for c in enumerate_primitive_classes(2, 2)] == ["x", "X", "y", "Y", "xy", "xY", "Xy", "XY"]


def test_enumerate_cyclic_words_is_complete_and_canonical():
    words = list(enumerate_cyclic_words(2, 4))
    assert len(set(words)) == len(words)
    assert words == sorted(words, key=CyclicWord.sort_key)
    # brute force: canonical forms of all reduced words of length <= 4
    brute = set()
    for n in range(1, 5):
        for w in itertools.product([1, -1, 2, -2], repeat=n):
            try:
                brute.add(CyclicWord(2, w))
            except EmptyClassError:
                pass
    assert set(words) == {c for c in brute if len(c) <= 4}


def test_no_class_is_conjugate_to_its_inverse():
    for c in enumerate_cyclic_words(2, 6):
        assert c.inverse() != c


@pytest.mark.parametrize("L", [4, 6])
def test_rank_two_abelianization_bijection(L):
    prims = enumerate_primitive_classes(2, L)
    ab = [abelianize(c) for c in prims]
    assert len(set(ab)) == len(ab)
    assert set(ab) == set(primitive_vectors(L))


def test_rank_two_pairs_match_farey():
    prims = enumerate_primitive_classes(2, 6)
    for u, v in itertools.combinations(prims, 2):
        assert is_partial_basis_classes((u, v)) == farey_edge(abelianize(u), abelianize(v)), (u, v)


def test_farey_examples():
    assert farey_edge((1, 0), (0, 1))
    assert farey_edge((1, 0), (1, 1))
    assert not farey_edge((1, 1), (1, -1))
    with pytest.raises(ValueError):
        farey_edge((2, 2), (1, 0))


def _random_auto_chain(rng, rank, length):
    t1, t2 = whitehead_automorphisms(rank)
    pool = t1 + t2
    return [rng.choice(pool) for _ in range(length)]


def test_predicates_invariant_under_whitehead_moves():
    rng = random.Random(3)
    pairs = list(itertools.combinations(enumerate_primitive_classes(2, 3), 2))
    words = list(enumerate_cyclic_words(2, 4))
    t1, t2 = whitehead_automorphisms(2)
    for c in words:
        base = is_primitive_class(c)
        for phi in rng.sample(t1 + t2, 6):
            assert is_primitive_class(apply_whitehead(phi, c)) == base
    for u, v in pairs:
        base = is_partial_basis_classes((u, v))
        for phi in rng.sample(t1 + t2, 4):
            img = (apply_whitehead(phi, u), apply_whitehead(phi, v))
            assert is_partial_basis_classes(img) == base


def test_truncation_rank_two_small():
    B = build_B_truncation(2, 1)
    assert len(B.vertices) == 4 and len(B.faces(1)) == 4
    assert frozenset({W("x"), W("X")}) not in set(B.faces(1))
    assert frozenset({W("x"), W("Y")}) in set(B.faces(1))
    B2 = build_B_truncation(2, 2)
    edges = set(B2.faces(1))
    cycle = [W("x"), W("xy"), W("y"), W("XY")]
    # x - xy - y are edges
    assert frozenset(cycle[:2]) in edges and frozenset(cycle[1:3]) in edges
    assert B2.meta["rank"] == 2 and B2.meta["max_len"] == 2


def test_truncation_rank_three_is_octahedron():
    B = build_B_truncation(3, 1)
    iso = {v: (abs(v.letters[0]) - 1, 1 if v.letters[0] > 0 else -1) for v in B.vertices}
    assert B.relabel(iso) == cross_polytope(3)
    assert reduced_homology(B) == reduced_homology(cross_polytope(3))
    assert cm_check(B).is_cm


def test_truncation_faces_are_certified():
    B = build_B_truncation(3, 2)
    for f in B.faces():
        assert is_partial_basis_classes(tuple(sorted(f, key=CyclicWord.sort_key)))


def test_truncation_bounds():
    with pytest.raises(FreeGroupError):
        build_B_truncation(4, 1)
    with pytest.raises(FreeGroupError):
        build_B_truncation(2, 9)


@pytest.mark.parametrize("rank,L", [(2, 3), (3, 1), (3, 2)])
def test_frame_inflation_recovers_truncation(rank, L):
    B = build_B_truncation(rank, L)
    F = build_frame_truncation(rank, L)
    assert all(len(p) == 2 for p in F.vertices)
    I = inflate(F, {p: p for p in F.vertices})
    assert I.relabel({(p, v): v for p, v in I.vertices}) == B
