from collections import deque

import pytest

from blobalg.paths import (
    EmbeddedPath,
    canonical_key,
    coxeter_length,
    degree_klr,
    degree_tiles,
    embed,
    is_ladder,
    max_shape,
    negate,
    path_residues,
    perm_from_tableau,
    positions,
    realize,
    reduced_word,
    reflect,
    residue_class_tableaux,
    sim_class_tableaux,
    sim_neighbors,
    tiles,
    translate,
    width,
    word_to_tableau,
)
from blobalg.tableaux import (
    Shape,
    Tableau,
    enumerate_std,
    from_negated_set,
    residue_seq,
    shapes,
    t_lambda,
    weyl_act,
)

from conftest import CONFIG_FACTORIES


def all_tableaux(n):
    for shape in shapes(n):
        yield from enumerate_std(n, shape)


@pytest.mark.parametrize("cfg_name", sorted(CONFIG_FACTORIES))
def test_path_residues_match_tableau_residues(cfg_name):
    cfg = CONFIG_FACTORIES[cfg_name]()
    for n in range(1, 7):
        for t in all_tableaux(n):
            assert path_residues(cfg, embed(cfg, n, t)) == residue_seq(cfg, n, t)


def test_embed_endpoint_depends_only_on_shape(cfg_e7):
    for n in range(1, 7):
        for shape in shapes(n):
            ends = {positions(embed(cfg_e7, n, t))[-1] for t in enumerate_std(n, shape)}
            assert len(ends) == 1


def test_realize_recovers_tableau(cfg_e7, cfg_e5_formal):
    for cfg in (cfg_e7, cfg_e5_formal):
        for n in range(1, 6):
            for t in all_tableaux(n):
                found = realize(cfg, n, embed(cfg, n, t))
                assert (t.shape, t) in found
                # everything realized shares the step residues
                for shape, u in found:
                    assert u.shape == shape
                    assert residue_seq(cfg, n, u) == residue_seq(cfg, n, t)


def test_realize_empty_off_grid(cfg_e7):
    assert realize(cfg_e7, 1, EmbeddedPath("q", 1, (True,))) == []


def test_realize_checks_length(cfg_e7):
    with pytest.raises(ValueError):
        realize(cfg_e7, 3, EmbeddedPath("q", 0, (True,)))


def test_similarity_moves_preserve_residues(cfg_e7, cfg_e5_formal, cfg_einf_integral):
    for cfg in (cfg_e7, cfg_e5_formal, cfg_einf_integral):
        for n in range(1, 6):
            for t in all_tableaux(n):
                p = embed(cfg, n, t)
                res = path_residues(cfg, p)
                for q in sim_neighbors(cfg, p):
                    assert path_residues(cfg, q) == res


def test_negate_is_involutive(cfg_e7, cfg_e5_formal):
    for cfg in (cfg_e7, cfg_e5_formal):
        for n in (1, 3, 4):
            for t in all_tableaux(n):
                p = embed(cfg, n, t)
                assert negate(cfg, negate(cfg, p)) == p


def test_translate_requires_finite_period(cfg_einf_integral, cfg_e7):
    p = EmbeddedPath("q", 0, (True, True))
    with pytest.raises(ValueError):
        translate(cfg_einf_integral, p)
    q = translate(cfg_e7, p, 3)
    assert q.start == p.start + 3 * 2 * 7
    assert canonical_key(cfg_e7, q) == canonical_key(cfg_e7, p)


def test_reflect_needs_a_wall(cfg_e7):
    p = EmbeddedPath("q", 0, (True, True))  # vertices at 0, 1, 2
    refl = reflect(cfg_e7, p, 0)
    assert refl.steps == (False, False)
    with pytest.raises(ValueError):
        reflect(cfg_e7, p, 1)
    with pytest.raises(ValueError):
        reflect(cfg_e7, p, 5)


def test_tile_count_is_coxeter_length(cfg_e7):
    for n in range(1, 8):
        for t in all_tableaux(n):
            w = perm_from_tableau(n, t)
            assert len(tiles(cfg_e7, n, t)) == coxeter_length(w)


def _bn_distances(n):
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    dq = deque([start])
    while dq:
        u = dq.popleft()
        for j in range(n):
            v = weyl_act(j, u)
            if v not in dist:
                dist[v] = dist[u] + 1
                dq.append(v)
    return dist


@pytest.mark.parametrize("n", [1, 2, 3])
def test_coxeter_length_against_word_metric(n):
    dist = _bn_distances(n)
    assert len(dist) == 2**n * __import__("math").factorial(n)
    for w, d in dist.items():
        assert coxeter_length(w) == d


def test_word_round_trip(cfg_e7, cfg_e5_formal):
    for cfg in (cfg_e7, cfg_e5_formal):
        for n in range(1, 7):
            for t in all_tableaux(n):
                word = reduced_word(cfg, n, t)
                assert len(word) == coxeter_length(perm_from_tableau(n, t))
                # every prefix stays standard and the full word lands on t
                assert word_to_tableau(n, t.shape, word, check=True) == t


def test_word_of_t_lambda_is_empty(cfg_e7):
    for n in (1, 4, 5):
        for shape in shapes(n):
            assert reduced_word(cfg_e7, n, t_lambda(n, shape)) == []


def test_degree_definitions_agree():
    for name in ("e5_formal", "e14_mirror", "einf_integral"):
        cfg = CONFIG_FACTORIES[name]()
        for n in range(1, 7):
            for t in all_tableaux(n):
                assert degree_tiles(cfg, n, t) == degree_klr(cfg, n, t), (name, n, t)


def test_figure_small_degrees(cfg_e14_mirror):
    lam = Shape(3, "alpha1")
    t0 = t_lambda(9, lam)
    assert t0.entries == (-6, -4, -2, 1, 3, 5, 7, 8, 9)
    assert degree_tiles(cfg_e14_mirror, 9, t0) == 0
    purple = Tableau(lam, (-9, 1, 2, 3, 4, 5, 6, 7, 8))
    assert degree_tiles(cfg_e14_mirror, 9, purple) == 1
    assert degree_klr(cfg_e14_mirror, 9, purple) == 1
    assert len(tiles(cfg_e14_mirror, 9, purple)) == 9
    assert max_shape(cfg_e14_mirror, 9, embed(cfg_e14_mirror, 9, purple)) == Shape(
        7, "alpha2"
    )
    assert not is_ladder(cfg_e14_mirror, 9, purple)
    assert is_ladder(cfg_e14_mirror, 9, t0)


def test_figure_large_word(cfg_e14_fig):
    lam = Shape(3, "alpha1")
    negs = {10, 11, 12, 13, 18}
    t = from_negated_set(19, lam, negs)
    assert t.entries == (
        -18, -13, -12, -11, -10,
        1, 2, 3, 4, 5, 6, 7, 8, 9, 14, 15, 16, 17, 19,
    )
    p = embed(cfg_e14_fig, 19, t)
    assert positions(p)[0] == -3
    ts = tiles(cfg_e14_fig, 19, t)
    assert len(ts) == 18
    assert coxeter_length(perm_from_tableau(19, t)) == 18
    word = reduced_word(cfg_e14_fig, 19, t)
    assert word == [9, 8, 10, 17, 16, 13, 0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 0, 1]
    assert word_to_tableau(19, lam, word, check=True) == t
    assert degree_tiles(cfg_e14_fig, 19, t) == -1
    assert degree_klr(cfg_e14_fig, 19, t) == -1


def test_max_shape_of_distinguished_tableau(cfg_e7, cfg_e5_formal, cfg_e14_fig):
    for cfg in (cfg_e7, cfg_e5_formal, cfg_e14_fig):
        for n in range(1, 8):
            for shape in shapes(n):
                p = embed(cfg, n, t_lambda(n, shape))
                assert max_shape(cfg, n, p) == shape


def test_max_shape_all_negative_zero_shape(cfg_e5_formal):
    t = from_negated_set(16, Shape(0, "theta"), range(1, 17))
    p = embed(cfg_e5_formal, 16, t)
    assert positions(p)[0] > positions(p)[-1]  # forces the mirrored scan
    assert max_shape(cfg_e5_formal, 16, p) == Shape(16, "alpha1_inv")


def test_t_lambda_is_always_ladder(cfg_e7, cfg_e5_formal, cfg_einf_integral):
    for cfg in (cfg_e7, cfg_e5_formal, cfg_einf_integral):
        for n in range(1, 6):
            for shape in shapes(n):
                assert is_ladder(cfg, n, t_lambda(n, shape))


def test_width_is_step_sum(cfg_e7):
    for n in (2, 5):
        for t in all_tableaux(n):
            p = embed(cfg_e7, n, t)
            xs = positions(p)
            assert width(p) == xs[-1] - xs[0]


def test_similarity_closure_matches_residue_class(cfg_e7, cfg_e5_formal):
    for cfg in (cfg_e7, cfg_e5_formal):
        for n in range(1, 5):
            for t in all_tableaux(n):
                combinatorial = set(residue_class_tableaux(cfg, n, t))
                assert t in combinatorial
                assert sim_class_tableaux(cfg, n, t) == combinatorial


def test_similarity_closure_larger_sample(cfg_e7):
    for shape in shapes(5):
        t = t_lambda(5, shape)
        assert sim_class_tableaux(cfg_e7, 5, t) == set(
            residue_class_tableaux(cfg_e7, 5, t)
        )
