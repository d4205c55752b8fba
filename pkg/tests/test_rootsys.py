import pytest

from borbits.rootsys import build_root_system

G2 = build_root_system("G", 2)
C2 = build_root_system("C", 2)
A2 = build_root_system("A", 2)

ALPHA, BETA = (1, 0), (0, 1)


@pytest.mark.parametrize(
    "tag,rank,count",
    [
        ("A", 1, 1),
        ("A", 2, 3),
        ("A", 3, 6),
        ("A", 4, 10),
        ("B", 2, 4),
        ("B", 3, 9),
        ("C", 2, 4),
        ("C", 3, 9),
        ("D", 4, 12),
        ("E", 6, 36),
        ("E", 7, 63),
        ("E", 8, 120),
        ("F", 4, 24),
        ("G", 2, 6),
    ],
)
def test_positive_root_counts(tag, rank, count):
    assert len(build_root_system(tag, rank).positive_roots) == count


def test_g2_positive_roots_explicit():
    expect = {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert set(G2.positive_roots) == expect


@pytest.mark.parametrize("tag,rank", [("A", 0), ("G", 3), ("F", 5), ("E", 9), ("E", 5), ("X", 2)])
def test_invalid_types_rejected(tag, rank):
    with pytest.raises(ValueError):
        build_root_system(tag, rank)


def test_positive_roots_nonnegative_and_ordered():
    for tag, rank in [("B", 3), ("D", 4), ("G", 2), ("F", 4)]:
        rs = build_root_system(tag, rank)
        heights = [rs.height(g) for g in rs.positive_roots]
        assert all(all(c >= 0 for c in g) for g in rs.positive_roots)
        assert heights == sorted(heights)
        # height-then-lex is a total order fixed at construction
        assert list(rs.positive_roots) == sorted(
            rs.positive_roots, key=lambda g: (rs.height(g), g)
        )


def test_reflection_examples():
    a, b = ALPHA, BETA
    assert G2.reflect(a, a) == (-1, 0)
    # equal-length adjacent simples: s_{a+b}(b) = -a (here in A_2)
    assert A2.reflect(BETA, (1, 1)) == (-1, 0)
    # in G_2 the same reflection sends the long simple root elsewhere
    assert G2.reflect(BETA, (1, 1)) == (-3, -2)
    assert C2.reflect(ALPHA, BETA) == (1, 1)


def test_reflections_land_in_root_set_everywhere():
    for tag, rank in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]:
        rs = build_root_system(tag, rank)
        for g in rs.roots:
            for h in rs.roots:
                out = rs.reflect(g, h)
                assert rs.is_root(out)
                # reflection formula against the pairing
                expect = tuple(x - rs.pairing(g, h) * y for x, y in zip(g, h))
                assert out == expect
                # involution
                assert rs.reflect(out, h) == g
                # length class preserved
                assert rs.inner(g, g) == rs.inner(out, out)


def test_cartan_pairing_values():
    assert G2.pairing(ALPHA, ALPHA) == 2
    assert G2.pairing(BETA, ALPHA) == -3
    assert C2.pairing((1, 1), (1, 1)) == 2
    for tag, rank in [("B", 3), ("G", 2), ("F", 4)]:
        rs = build_root_system(tag, rank)
        for g in rs.roots:
            for h in rs.roots:
                assert rs.pairing(g, h) in (-3, -2, -1, 0, 1, 2, 3)


def test_orthogonal_pair_pairs_to_zero():
    a4 = build_root_system("A", 4)
    assert a4.pairing((1, 0, 0, 0), (0, 0, 1, 0)) == 0


def test_heights():
    assert all(G2.height(a) == 1 for a in G2.simple_roots)
    assert G2.height((3, 2)) == 5
    assert G2.height((-1, 0)) == -1


def test_length_classes():
    assert sum(G2.is_long(g) for g in G2.positive_roots) == 3
    assert sum(C2.is_short(g) for g in C2.positive_roots) == 2
    b3 = build_root_system("B", 3)
    assert sum(b3.is_long(g) for g in b3.positive_roots) == 6
    assert sum(b3.is_short(g) for g in b3.positive_roots) == 3
    # normalization: short roots have squared length 2
    for rs in (G2, C2, b3):
        for g in rs.positive_roots:
            assert rs.inner(g, g) in (2, 4, 6)
            if rs.is_short(g):
                assert rs.inner(g, g) == 2


def test_simply_laced_all_short():
    for tag, rank in [("A", 3), ("D", 4), ("E", 6)]:
        rs = build_root_system(tag, rank)
        assert all(rs.is_short(g) for g in rs.positive_roots)
