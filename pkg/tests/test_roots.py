import itertools

import pytest

from qflag.errors import InvalidRank, OddDimension, UnsupportedWeightCount
from qflag.roots import (BAR, ParticleLabel, embed_check,
                         euler_characteristic, generate, parse_label,
                         particle_label, projection)


def brute_force_roots(n):
    """Enumeration oracle: all +/- L_i +/- L_j with i <= j, deduplicated."""
    out = set()
    for i, j in itertools.product(range(n), repeat=2):
        if i > j:
            continue
        for si, sj in itertools.product((1, -1), repeat=2):
            vec = [0] * n
            vec[i] += si
            vec[j] += sj
            if any(vec):
                out.add(tuple(vec))
    return out


def test_counts():
    assert len(generate(1).roots) == 2
    assert len(generate(2).roots) == 8
    assert len(generate(3).roots) == 18
    for n in range(1, 7):
        system = generate(n)
        assert len(system.roots) == 2 * n * n
        assert len(set(system.roots)) == len(system.roots)
        assert set(system.roots) == brute_force_roots(n)


def test_negation_closure():
    for n in range(1, 7):
        system = generate(n)
        for root in system.roots:
            assert tuple(-c for c in root) in system


def test_long_and_short_roots_present():
    system = generate(3)
    assert (2, 0, 0) in system
    assert (1, -1, 0) in system
    assert (1, 1, 1) not in system
    assert (1, 0, 0) not in system


def test_rank_gate():
    with pytest.raises(InvalidRank):
        generate(0)
    with pytest.raises(InvalidRank):
        embed_check(2, 2)


def test_embedding():
    assert embed_check(1, 2)
    assert embed_check(2, 3)
    assert embed_check(3, 6)


def test_euler_characteristic():
    assert euler_characteristic(4) == 2
    assert euler_characteristic(12) == 2
    assert euler_characteristic(2) == 2
    with pytest.raises(OddDimension):
        euler_characteristic(3)
    with pytest.raises(OddDimension):
        euler_characteristic(0)


def test_lepton_label():
    for sign in (2, -2):
        lab = particle_label([((sign, 0, 0, 0), None)])
        assert lab.classification == "lepton"
    assert particle_label([((2, 0, 0, 0), None)]).label == "uu"


def test_meson_labels_verbatim():
    lab = particle_label([((1, 0, 0, 0), None), ((0, 1, 0, 0), None)])
    assert lab.label == "ud"
    assert lab.classification == "meson"
    lab = particle_label([((-1, 0, 0, 0), None), ((0, 1, 0, 0), None)])
    assert lab.label == "u" + BAR + "d"
    assert lab.classification == "meson"


def test_baryon_label_with_colors():
    lab = particle_label([((1, 0, 0, 0), "i"), ((1, 0, 0, 0), "j"),
                          ((0, 1, 0, 0), "k")])
    assert lab.label == "uud"
    assert lab.classification == "baryon"
    assert tuple(tag for _, tag in lab.terms) == ("i", "j", "k")


def test_label_round_trip():
    cases = [
        [((2, 0, 0, 0), None)],
        [((1, 0, 0, 0), None), ((0, 1, 0, 0), None)],
        [((-1, 0, 0, 0), None), ((0, 1, 0, 0), None)],
        [((1, 0, 0, 0), "i"), ((1, 0, 0, 0), "j"), ((0, 1, 0, 0), "k")],
        [((0, 0, -1, 0), "i"), ((0, 0, 0, 1), None)],
    ]
    for weights in cases:
        lab = particle_label(weights)
        parsed = parse_label(lab.canonical())
        assert parsed == lab
        assert sorted(parsed.terms) == sorted(lab.terms)


def test_generic_names_beyond_four():
    lab = particle_label([((0, 0, 0, 0, 1), None)])
    assert lab.label == "q5"
    assert parse_label(lab.canonical(), n=5) == lab


def test_weight_count_gate():
    with pytest.raises(UnsupportedWeightCount):
        particle_label([])
    with pytest.raises(UnsupportedWeightCount):
        particle_label([((1, 0, 0, 0), None)] * 4)
    with pytest.raises(UnsupportedWeightCount):
        particle_label([((1, 0, 0, 0), "m")])


def test_projection():
    system = generate(3)
    coords = projection(system, 2)
    assert len(coords) == 18
    # the long roots project onto the axes
    assert (2, 0) in coords and (-2, 0) in coords
    assert (0, 2) in coords and (0, -2) in coords
    system1 = generate(1)
    coords1 = projection(system1, 2)
    assert set(coords1) == {(2, 0), (-2, 0)}
    with pytest.raises(InvalidRank):
        projection(system, 4)
