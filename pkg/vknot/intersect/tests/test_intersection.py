import numpy as np
import pytest
from sklearn.utils import check_random_state

from vknot.diagram import (
    parse,
    rotate,
    random_diagram,
    reverse,
    vertical_mirror,
    horizontal_mirror,
)
from vknot.intersect import (
    ArcKind,
    ArcRef,
    IntersectionData,
    interior_endpoints,
    s_count,
    index,
    gamma_gamma,
    build,
    pairing,
    pairing_matrices,
    direct_pairing_oracle,
    format_matrices,
)

RNG_SEED = 123

G, GB = ArcKind.GAMMA, ArcKind.GAMMA_BAR

TREFOIL = "O1+U2+O3+U1+O2+U3+"
KNOT_4_39 = "O1-O2-O3-U4+U1-U3-O4+U2-"
CLASSICAL = [
    TREFOIL,
    "O1-U2-O3-U1-O2-U3-",
    "O1+U2-O3-U1+O4+U3-O2-U4+",
    "O1+U2+O3+U4+O5+U1+O2+U3+O4+U5+",
]

INDEX_4_39 = [3, -1, 0, 2]
GG_4_39 = [[0, 3, 1, 1], [-3, 0, -1, -2], [-1, 1, 0, -1], [-1, 2, 1, 0]]
GGB_4_39 = [[3, 0, 2, 2], [2, -1, 0, 1], [1, -1, 0, 1], [3, 0, 1, 2]]
GBGB_4_39 = [[0, -1, -2, 0], [1, 0, 0, 1], [2, 0, 0, 1], [0, -1, -1, 0]]


def _random_diagrams(count, max_chords=8, seed=RNG_SEED):
    rng = check_random_state(seed)
    for _ in range(count):
        yield random_diagram(rng.randint(0, max_chords + 1), rng)


def test_interior_endpoints():
    assert [str(e) for e in interior_endpoints(TREFOIL, (1, G))] == ["U2", "O3"]
    assert [str(e) for e in interior_endpoints(TREFOIL, (1, GB))] == ["O2", "U3"]
    assert interior_endpoints("O1+U1+", (1, G)) == []
    assert [str(e) for e in interior_endpoints("U1+O2+U2+O1+", (1, GB))] == [
        "O2",
        "U2",
    ]


def test_interior_endpoints_partition():
    for d in _random_diagrams(200):
        for chord in range(1, d.n + 1):
            inside = interior_endpoints(d, (chord, G))
            outside = interior_endpoints(d, (chord, GB))
            others = [str(e) for e in d.endpoints if e.chord != chord]
            assert sorted(map(str, inside + outside)) == sorted(others)


@pytest.mark.parametrize(
    "code, expected",
    [(TREFOIL, [0, 0, 0]), ("O1+U1+", [0]), (KNOT_4_39, INDEX_4_39), ("", [])],
)
def test_index(code, expected):
    assert [index(code, i) for i in range(1, len(expected) + 1)] == expected
    assert build(code).index.tolist() == expected


def test_s_count():
    assert s_count(TREFOIL, (1, G), (2, G)) == -1
    assert s_count(TREFOIL, (2, G), (1, G)) == 1
    assert s_count("O1+U1+O2+U2+", (1, G), (2, G)) == 0
    with pytest.raises(ValueError):
        s_count(TREFOIL, (1, G), (1, GB))


def test_s_count_antisymmetric():
    rng = check_random_state(RNG_SEED)
    for d in _random_diagrams(300):
        if d.n < 2:
            continue
        i, j = rng.choice(np.arange(1, d.n + 1), size=2, replace=False)
        a, b = ArcRef(int(i), ArcKind(rng.randint(2))), ArcRef(
            int(j), ArcKind(rng.randint(2))
        )
        assert s_count(d, a, b) == -s_count(d, b, a)


def test_gamma_gamma():
    assert gamma_gamma(TREFOIL, 1, 2) == 0
    assert gamma_gamma(KNOT_4_39, 1, 2) == 3
    assert gamma_gamma(KNOT_4_39, 2, 1) == -3
    assert gamma_gamma(KNOT_4_39, 3, 4) == -1
    assert gamma_gamma(KNOT_4_39, 2, 2) == 0


def test_build_4_39():
    data = build(KNOT_4_39)
    assert data.n == 4
    np.testing.assert_array_equal(data.index, INDEX_4_39)
    np.testing.assert_array_equal(data.A, GG_4_39)

    matrices = pairing_matrices(data)
    np.testing.assert_array_equal(matrices[0, 1], GGB_4_39)
    np.testing.assert_array_equal(matrices[1, 1], GBGB_4_39)
    np.testing.assert_array_equal(matrices[1, 0], -np.array(GGB_4_39).T)


def test_build_unknot():
    data = build("")
    assert data.n == 0
    assert data.A.shape == (0, 0)


def test_build_matches_gamma_gamma():
    for d in _random_diagrams(100):
        data = build(d)
        for i in range(1, d.n + 1):
            for j in range(1, d.n + 1):
                assert data.A[i - 1, j - 1] == gamma_gamma(d, i, j)


def test_pairing_4_39():
    data = build(KNOT_4_39)
    assert pairing(data, (2, G), (1, GB)) == 2
    assert pairing(data, (1, GB), (2, GB)) == -1
    for i in range(1, 5):
        assert pairing(data, (i, G), (i, GB)) == INDEX_4_39[i - 1]
        assert pairing(data, (i, GB), (i, G)) == -INDEX_4_39[i - 1]
        assert pairing(data, (i, G), (i, G)) == 0
        assert pairing(data, (i, GB), (i, GB)) == 0


def test_pairing_rejects_unknown_chord():
    with pytest.raises(ValueError):
        pairing(build(TREFOIL), (4, G), (1, G))


def test_oracle_agrees_on_4_39():
    data = build(KNOT_4_39)
    checked = 0
    for i in range(1, 5):
        for j in range(1, 5):
            if i == j:
                continue
            for p in (G, GB):
                for q in (G, GB):
                    a, b = (i, p), (j, q)
                    assert direct_pairing_oracle(KNOT_4_39, a, b) == pairing(data, a, b)
                    checked += 1
    assert checked == 48


@pytest.mark.parametrize("code", CLASSICAL)
def test_classical_vanishing(code):
    data = build(code)
    for matrix in pairing_matrices(data).values():
        assert not matrix.any()
    d = parse(code)
    for i in range(1, d.n + 1):
        for j in range(1, d.n + 1):
            if i != j:
                assert direct_pairing_oracle(d, (i, G), (j, GB)) == 0


def test_oracle_fuzz():
    rng = check_random_state(RNG_SEED)
    checked = 0
    while checked < 10_000:
        d = random_diagram(rng.randint(2, 9), rng)
        data = build(d)
        i, j = rng.choice(np.arange(1, d.n + 1), size=2, replace=False)
        a = ArcRef(int(i), ArcKind(rng.randint(2)))
        b = ArcRef(int(j), ArcKind(rng.randint(2)))
        assert direct_pairing_oracle(d, a, b) == pairing(data, a, b), (d, a, b)
        checked += 1


def test_antisymmetry_and_linearity():
    for d in _random_diagrams(500):
        data = build(d)
        m = pairing_matrices(data)
        n = data.index
        np.testing.assert_array_equal(data.A, -data.A.T)
        np.testing.assert_array_equal(np.diag(data.A), 0)
        np.testing.assert_array_equal(m[0, 1], -m[1, 0].T)
        np.testing.assert_array_equal(m[1, 1], -m[1, 1].T)
        # gamma_D . gamma_j = -n_j and gamma_D . gamma_bar_j = n_j
        rows = np.broadcast_to(n, data.A.shape)
        np.testing.assert_array_equal(m[0, 0] + m[1, 0], -rows)
        np.testing.assert_array_equal(m[0, 1] + m[1, 1], rows)


def test_basepoint_independence():
    for d in _random_diagrams(100):
        data = build(d)
        for k in range(1, 2 * d.n):
            assert build(rotate(d, k)) == data


def test_mirror_pairings():
    for d in _random_diagrams(300):
        data = build(d)
        bar_bar = pairing_matrices(data)[1, 1]

        star = build(horizontal_mirror(d))
        np.testing.assert_array_equal(star.index, -data.index)
        np.testing.assert_array_equal(star.A, -data.A)

        # on -D and on D# the arc gamma_i plays the role of gamma_bar_i
        for other in (build(reverse(d)), build(vertical_mirror(d))):
            np.testing.assert_array_equal(other.index, -data.index)
            np.testing.assert_array_equal(other.A, bar_bar)


def test_from_matrices():
    data = IntersectionData.from_matrices(INDEX_4_39, GG_4_39)
    assert data == build(KNOT_4_39)
    with pytest.raises(ValueError):
        IntersectionData.from_matrices([0, 0], [[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        IntersectionData.from_matrices([0, 0, 0], [[0, 1], [-1, 0]])


def test_data_is_read_only():
    data = build(KNOT_4_39)
    with pytest.raises(ValueError):
        data.A[0, 1] = 0


def test_format_matrices():
    text = format_matrices(build(KNOT_4_39))
    blocks = text.split("\n\n")
    assert [block.splitlines()[0] for block in blocks] == [
        "gamma.gamma_bar",
        "gamma.gamma",
        "gamma_bar.gamma_bar",
    ]
    first_row = blocks[0].splitlines()[2].split()
    assert first_row == ["g1", "3", "0", "2", "2"]
