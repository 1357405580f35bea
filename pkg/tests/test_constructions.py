import pytest

from tourpaths.constructions import (
    LEMMA32_VARIANTS,
    GParams,
    build_G,
    g_minus_s_roles,
    g_roles,
    lemma32_counterexample,
    remark3_T11,
    remark4_H9,
)
from tourpaths.core import converse, degree_summary, induced, induced_minus
from tourpaths.errors import InvalidVariant, TournamentError
from tourpaths.spectrum import path_spectrum
from tourpaths.trn import parse, serialize

GOLDEN_BUILDS = {
    "remark3.trn": remark3_T11,
    "remark4.trn": remark4_H9,
    "G_k1.trn": lambda: build_G(1),
    "G_k2.trn": lambda: build_G(2),
    **{f"lemma32_{v}.trn": (lambda v=v: lemma32_counterexample(v)) for v in LEMMA32_VARIANTS},
}


def xy_spectrum(lt, minus, x="x", y="y"):
    sub, kept = induced_minus(lt.tournament, lt[minus])
    return path_spectrum(sub, kept.index(lt.vertex(x)), kept.index(lt.vertex(y))).lengths


def regular_on(t, vs):
    return len(vs) < 2 or degree_summary(induced(t, list(vs))).is_regular


def dominates(lt, src, dst):
    return all(lt.tournament.has_arc(u, v) for u in src for v in dst)


@pytest.mark.parametrize("name", sorted(GOLDEN_BUILDS))
def test_golden_files(golden, name):
    lt = GOLDEN_BUILDS[name]()
    text = (golden / name).read_text()
    assert serialize(lt) == text
    back = parse(text)
    assert back.tournament == lt.tournament and dict(back.roles) == dict(lt.roles)


def test_remark3():
    lt = remark3_T11()
    t = lt.tournament
    assert t.order == 11 and degree_summary(t).is_regular
    assert lt["S"] == lt["v1"] + lt["v2"]
    lens = xy_spectrum(lt, "S", "x0", "x3")
    assert 3 in lens and 4 not in lens
    assert lens == {1, 2, 3, 5, 6, 7, 8}


def test_remark3_in_lists():
    lt = remark3_T11()
    ins = {v: sorted(n for n in lt.roles if n != v and lt.tournament.has_arc(lt.vertex(n), lt.vertex(v)))
           for v in ("x0", "x3", "z")}
    assert ins["x0"] == sorted(["u1", "u2", "u3", "u4", "z"])
    assert ins["x3"] == sorted(["x0", "x1", "x2", "v1", "v2"])
    assert ins["z"] == sorted(["x3", "u1", "u2", "u3", "u4"])


def test_remark4():
    lt = remark4_H9()
    assert lt.order == 9
    v = lambda *ns: [lt.vertex(n) for n in ns]
    assert dominates(lt, v("x"), v("u", "v", "z"))
    assert dominates(lt, v("u", "v", "z"), v("y"))
    assert dominates(lt, lt["B"], v("u", "v")) and dominates(lt, v("u", "v"), lt["A"])
    assert dominates(lt, v("y"), lt["A"] + lt["B"]) and dominates(lt, lt["A"] + lt["B"], v("x"))
    assert dominates(lt, lt["A"], v("z")) and dominates(lt, v("z"), lt["B"])
    lens = xy_spectrum(lt, "z")
    assert 3 in lens and 4 not in lens
    assert lens == {1, 2, 3, 5, 6, 7}


def test_remark4_is_regular():
    assert degree_summary(remark4_H9().tournament).is_regular


@pytest.mark.parametrize("k", [1, 2, 3])
def test_family_G(k):
    g = build_G(k)
    t = g.tournament
    assert t.order == 6 * k + 3
    s = degree_summary(t)
    assert s.is_regular and set(s.out_degrees) == {3 * k + 1}
    assert [len(g[b]) for b in "ABCS"] == [2 * k - 1, k + 2, 2 * k - 1, k]
    assert regular_on(t, g["A"]) and regular_on(t, g["C"]) and regular_on(t, g["z"] + g["B"] + g["S"])
    assert 3 not in xy_spectrum(g, "S")


def test_family_G_dominance():
    g = build_G(2)
    x, y, z = g["x"], g["y"], g["z"]
    A, B, C, S = (g[n] for n in "ABCS")
    for src, dst in [(A, B + S), (B + S, C), (C, A), (C, z), (z, A), (x, y + z + A + S),
                     (x + z + C + S, y), (y, A + B), (B + C, x)]:
        assert dominates(g, src, dst)


@pytest.mark.parametrize("k", [1, 2])
def test_family_G_block_seeds(k):
    for seed in range(20):
        g = build_G(GParams(k, seed))
        assert degree_summary(g.tournament).is_regular
        assert 3 not in xy_spectrum(g, "S")


def test_family_G_seeded_blocks_differ():
    assert build_G(GParams(2, 0)).tournament != build_G(GParams(2, 1)).tournament


def test_gparams_validation():
    with pytest.raises(TournamentError):
        GParams(0)
    assert GParams(3).order == 21


@pytest.mark.parametrize("k", [1, 2])
def test_family_G_duality(k):
    g = build_G(k)
    sub, kept = induced_minus(g.tournament, g["S"])
    i, j = kept.index(g.vertex("x")), kept.index(g.vertex("y"))
    assert path_spectrum(converse(sub), j, i).lengths == path_spectrum(sub, i, j).lengths


@pytest.mark.parametrize("k", [1, 2, 3])
def test_family_G_detection(k):
    g = build_G(k)
    x, y = g.vertex("x"), g.vertex("y")
    found = g_roles(g.tournament, x, y, g["S"])
    assert found is not None
    assert {n: found[n] for n in "ABCS"} == {n: g[n] for n in "ABCS"}
    assert g_roles(g.tournament, y, x, g["S"]) is None
    sub, kept = g.minus("S")
    assert g_minus_s_roles(sub, kept.index(x), kept.index(y)) is not None


def test_detection_rejects_rotational():
    from tourpaths.generators import rotational_regular
    t = rotational_regular(4)
    assert g_roles(t, 0, 1, [8]) is None


@pytest.mark.parametrize("variant", [7, 9])
def test_lemma32_small_variants(variant):
    lt = lemma32_counterexample(variant)
    assert lt.order == variant and degree_summary(lt.tournament).is_regular
    n = (variant - 1) // 2
    assert 2 * len(lt["S"]) <= n
    assert not xy_spectrum(lt, "S") & {3, 4}


def test_lemma32_variant11():
    lt = lemma32_counterexample(11)
    assert degree_summary(lt.tournament).is_regular
    assert (len(lt["A"]), len(lt["S"])) == (5, 3)
    assert xy_spectrum(lt, "S") <= {1, 2}


@pytest.mark.parametrize("fc", [(a, b) for a in (True, False) for b in (True, False)])
def test_lemma32_variant15_orientations(fc):
    lt = lemma32_counterexample(15, forward_cycles=fc)
    assert degree_summary(lt.tournament).is_regular
    lens = xy_spectrum(lt, "S")
    assert not lens & {3, 4}
    assert {k for k in lens if k > 2} == set(range(5, 11))


def test_lemma32_variant15_s_arcs():
    lt = lemma32_counterexample(15)
    t = lt.tournament
    for a, b in [("a1", "a2"), ("b1", "b2"), ("a2", "b2"), ("a2", "b1"), ("a1", "b1"), ("b2", "a1")]:
        assert t.has_arc(lt.vertex(a), lt.vertex(b))


@pytest.mark.parametrize("variant", [7, 9, 11])
def test_lemma32_block_seed_samples(variant):
    for seed in range(10):
        lt = lemma32_counterexample(variant, block_seed=seed)
        assert degree_summary(lt.tournament).is_regular
        lens = xy_spectrum(lt, "S")
        assert not lens & {3, 4}
        if variant == 11:
            assert lens <= {1, 2}


def test_invalid_variant():
    with pytest.raises(InvalidVariant):
        lemma32_counterexample(13)
