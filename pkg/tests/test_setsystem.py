"""Core set-system behaviour: flips, distance, restriction, orbits."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltapoly import (
    CapExceededError,
    GroundSet,
    GroundSetError,
    ImproperSystemError,
    SetSystem,
    VertexFlipWord,
    apply_vertex_flip,
    distance,
    full_flip_explicit,
    restrict_delete,
    vf_orbit,
)
from support import FIG_ORBIT, M0


@st.composite
def systems(draw, max_n=5, min_members=0):
    n = draw(st.integers(min_value=0, max_value=max_n))
    limit = 1 << n
    members = draw(
        st.lists(st.integers(0, limit - 1), min_size=min_members, max_size=min(limit, 10), unique=True)
    )
    return SetSystem(GroundSet(tuple(f"e{i}" for i in range(n))), tuple(members))


@st.composite
def proper_systems_with_element(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    limit = 1 << n
    members = draw(st.lists(st.integers(0, limit - 1), min_size=1, max_size=min(limit, 10), unique=True))
    u = draw(st.integers(0, n - 1))
    return SetSystem(GroundSet(tuple(f"e{i}" for i in range(n))), tuple(members)), 1 << u


def test_ground_set_validation():
    with pytest.raises(GroundSetError):
        GroundSet(("a", "a"))
    with pytest.raises(GroundSetError):
        GroundSet(tuple(f"x{i}" for i in range(63)))
    g = GroundSet(("p", "q"))
    assert g.index("q") == 1
    with pytest.raises(GroundSetError):
        g.index("z")
    with pytest.raises(GroundSetError):
        g.mask_of(["p", "p"])


def test_family_is_canonical():
    s = SetSystem.from_sets(["a", "b"], [["b"], [], ["b"], ["a", "b"]])
    assert s.family == (0, 2, 3)


def test_member_outside_ground_rejected():
    g = GroundSet(("a",))
    with pytest.raises(GroundSetError):
        SetSystem(g, (2,))


def test_classify_examples():
    c = M0.classify()
    assert c.proper and c.normal and not c.equicardinal
    empty_ground = SetSystem.from_sets([], [[]])
    c = empty_ground.classify()
    assert c.proper and c.normal and c.equicardinal
    improper = SetSystem.from_sets(["a", "b"], [])
    assert not improper.classify().proper


def test_pivot_examples():
    base = SetSystem.from_sets(["a", "b"], [[]])
    assert base.pivot("a") == SetSystem.from_sets(["a", "b"], [["a"]])
    assert M0.pivot(0) == M0


def test_loopc_single_example():
    out = M0.loopc("p")
    expected = SetSystem.from_sets(
        ["p", "q", "r"],
        [[], ["p", "q"], ["q", "r"], ["r"], ["p", "q", "r"], ["p", "r"]],
    )
    assert out == expected


def test_loopc_full_ground_matches_figure():
    assert M0.loopc(["p", "q", "r"]) == FIG_ORBIT[1]


def test_full_flip_explicit_examples():
    assert full_flip_explicit(FIG_ORBIT[1], "pivot") == FIG_ORBIT[2]
    one = SetSystem.from_sets(["a"], [[]])
    assert full_flip_explicit(one, "loopc") == SetSystem.from_sets(["a"], [[], ["a"]])
    # membership of the empty set in the dual flip follows family parity
    dual = full_flip_explicit(M0, "dualpivot")
    assert 0 in dual.family  # M0 has an odd number of members


@given(systems(max_n=8))
@settings(max_examples=80)
def test_full_flip_explicit_equals_composition(system):
    full = system.ground.full_mask
    assert full_flip_explicit(system, "pivot") == system.pivot(full)
    assert full_flip_explicit(system, "loopc") == system.loopc(full)
    assert full_flip_explicit(system, "dualpivot") == system.dual_pivot(full)


@given(proper_systems_with_element())
@settings(max_examples=80)
def test_flips_are_involutions(case):
    system, bit = case
    for kind in ("pivot", "loopc", "dualpivot"):
        twice = apply_vertex_flip(apply_vertex_flip(system, kind, bit), kind, bit)
        assert twice == system


@given(proper_systems_with_element())
@settings(max_examples=60)
def test_same_element_braid_relation(case):
    system, bit = case
    left = system.loopc(bit).pivot(bit).loopc(bit)
    right = system.pivot(bit).loopc(bit).pivot(bit)
    assert left == right


def test_single_element_flips_generate_six_maps():
    bit = M0.ground.bit("p")
    words = [(), ("p",), ("l",), ("p", "l"), ("l", "p"), ("l", "p", "l")]
    images = set()
    for word in words:
        cur = M0
        for w in word:
            cur = cur.pivot(bit) if w == "p" else cur.loopc(bit)
        images.add(cur.family)
    assert len(images) == 6


@given(systems(max_n=5), st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_multi_element_flips_are_order_independent(system, rnd):
    n = system.ground.n
    if n == 0:
        return
    x = rnd.randrange(1 << n)
    bits = [1 << i for i in range(n) if x >> i & 1]
    rnd.shuffle(bits)
    for kind in ("loopc", "dualpivot"):
        shuffled = system
        for bit in bits:
            shuffled = apply_vertex_flip(shuffled, kind, bit)
        assert shuffled == apply_vertex_flip(system, kind, x)


@given(systems(max_n=5))
@settings(max_examples=60)
def test_distinct_element_flips_commute(system):
    if system.ground.n < 2:
        return
    u, v = 1, 2
    for a in ("pivot", "loopc", "dualpivot"):
        for b in ("pivot", "loopc", "dualpivot"):
            one = apply_vertex_flip(apply_vertex_flip(system, a, u), b, v)
            two = apply_vertex_flip(apply_vertex_flip(system, b, v), a, u)
            assert one == two


@given(systems(max_n=5))
@settings(max_examples=60)
def test_flip_and_removal_commute(system):
    if system.ground.n < 2:
        return
    u, v = 1, 2
    assert system.loopc(u).delete(v) == system.delete(v).loopc("e0")
    assert system.pivot(u).delete(v) == system.delete(v).pivot("e0")
    assert system.loopc(u).delete(u) == system.delete(u)


@given(proper_systems_with_element())
@settings(max_examples=60)
def test_distance_under_flips(case):
    system, bit = case
    n = system.ground.n
    for x in range(1 << n):
        z = bit
        assert distance(system.pivot(z), x) == distance(system, x ^ z)
        assert distance(system.loopc(z), 0) == distance(system, 0)


def test_distance_examples():
    assert distance(M0, 0) == 0
    assert distance(M0, ["p", "q", "r"]) == 1
    assert distance(FIG_ORBIT[1], 0) == 0
    with pytest.raises(ImproperSystemError):
        distance(SetSystem.from_sets(["a"], []), 0)


def test_restrict_delete_examples():
    assert M0.delete("p") == SetSystem.from_sets(["q", "r"], [[], ["q", "r"], ["r"]])
    assert M0.pivot("p").delete("p") == SetSystem.from_sets(["q", "r"], [[], ["q"]])
    assert M0.restrict(0) == SetSystem.from_sets([], [[]])
    assert restrict_delete(M0, "restrict", ["q", "r"]) == SetSystem.from_sets(
        ["q", "r"], [[], ["q", "r"], ["r"]]
    )
    # deletion can produce an improper system: that is legal output
    gone = SetSystem.from_sets(["a", "b"], [["a", "b"]]).restrict("a")
    assert not gone.is_proper


def test_labels_survive_operations():
    out = M0.delete("q")
    assert out.ground.labels == ("p", "r")
    assert out.pivot("r").ground.labels == ("p", "r")


def test_vertex_flip_word():
    word = VertexFlipWord((("loopc", 7), ("pivot", 7)))
    assert word.apply(M0) == FIG_ORBIT[2]
    assert len(word) == 2


def test_orbit_full_alternation_matches_figure():
    orbit = vf_orbit(M0, "fullV-alternation")
    assert orbit == FIG_ORBIT
    # six alternating whole-ground flips return to the start
    cur = M0
    for i in range(6):
        cur = full_flip_explicit(cur, "loopc" if i % 2 == 0 else "pivot")
    assert cur == M0


def test_orbit_trivial_and_caps():
    one = SetSystem.from_sets([], [[]])
    assert vf_orbit(one, "fullV-alternation") == [one]
    with pytest.raises(CapExceededError):
        vf_orbit(M0, "all-single-element-flips", cap=3)


def test_orbit_single_flips_closed():
    from deltapoly import is_delta_matroid

    orbit = vf_orbit(M0, "all-single-element-flips", cap=100_000)
    fams = {s.family for s in orbit}
    for s in orbit:
        for i in range(3):
            assert s.pivot(1 << i).family in fams
            assert s.loopc(1 << i).family in fams
        assert is_delta_matroid(s)  # graph-derived systems stay delta-matroids
