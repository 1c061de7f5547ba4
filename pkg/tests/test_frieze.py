import pytest
from hypothesis import given, settings, strategies as st

from sl2tiling import (
    IndexOutOfDomain,
    NotAQuiddity,
    Triangulation,
    enumerate_quiddities,
    format_quiddity,
    frieze_entry_by_distance,
    frieze_from_quiddity,
    frieze_to_square_tiling,
    is_quiddity,
    parse_quiddity,
    polygon_from_quiddity,
    polygon_quiddity,
    quiddity_from_triangulation,
    triangulation_from_quiddity,
    validate_tiling,
)

from oracles import diamond_frieze, incidence_quiddity, random_quiddity, random_triangulation_diagonals

HEPTAGON = (1, 3, 2, 2, 1, 4, 2)

STAIRCASE = """\
1 2 3 1 1 1
  1 2 1 2 3 1
    1 1 3 5 2 1
      1 4 7 3 2 1
        1 2 1 1 1 1
          1 1 2 3 4 1
            1 3 5 7 2 1
              1 2 3 1 1 1
                1 2 1 2 3 1"""


def test_heptagon_staircase():
    f = frieze_from_quiddity(HEPTAGON)
    assert f.render(first_row=3, nrows=9) == STAIRCASE


def test_heptagon_rows_up_to_translation():
    f = frieze_from_quiddity(HEPTAGON)
    staircase_rows = {tuple(int(x) for x in ln.split()) for ln in STAIRCASE.splitlines()}
    assert {f.row(i) for i in range(1, 8)} == staircase_rows


def test_width_zero():
    f = frieze_from_quiddity((1, 1, 1))
    assert f.width == 0
    assert all(f.row(i) == (1, 1) for i in range(1, 4))


def test_width_one():
    f = frieze_from_quiddity((1, 2, 1, 2))
    assert [f.entry(i, i) for i in range(1, 9)] == [1, 2, 1, 2] * 2


def test_diagonal_is_the_quiddity():
    f = frieze_from_quiddity(HEPTAGON)
    assert tuple(f.entry(i, i) for i in range(1, 8)) == HEPTAGON


def test_rejects_non_quiddity():
    with pytest.raises(NotAQuiddity):
        frieze_from_quiddity((2, 2, 2))
    with pytest.raises(NotAQuiddity):
        frieze_from_quiddity((1, 1))


@pytest.mark.parametrize("n", range(3, 9))
def test_matches_diamond_rule(n):
    for q in enumerate_quiddities(n):
        f = frieze_from_quiddity(q)
        for (i, j), v in diamond_frieze(q).items():
            assert f.entry(i, j) == v


@pytest.mark.parametrize("n", range(3, 9))
def test_unimodular_and_periodic(n):
    for q in enumerate_quiddities(n)[:40]:
        f = frieze_from_quiddity(q)
        for i in range(-n, n):
            for j in range(i - 2, i + n):
                assert f.entry(i, j) * f.entry(i + 1, j + 1) - f.entry(i, j + 1) * f.entry(i + 1, j) == 1
                assert f.entry(i + n, j + n) == f.entry(i, j)
                assert f.entry(i, j + n) == -f.entry(i, j)


def test_quiddity_text():
    assert parse_quiddity(" 1, 3,2 ") == (1, 3, 2)
    assert format_quiddity(HEPTAGON) == "1,3,2,2,1,4,2"
    with pytest.raises(ValueError):
        parse_quiddity("1;2;3")


class TestTriangulations:
    def test_examples(self):
        assert quiddity_from_triangulation(Triangulation(3)) == (1, 1, 1)
        assert quiddity_from_triangulation(Triangulation(4, [(0, 2)])) == (2, 1, 2, 1)
        assert triangulation_from_quiddity((1, 1, 1)).diagonals == frozenset()
        assert triangulation_from_quiddity((2, 1, 2, 1)).diagonals == {(0, 2)}

    def test_heptagon(self):
        t = triangulation_from_quiddity(HEPTAGON)
        assert len(t.diagonals) == 4
        assert t.incidence() == HEPTAGON
        assert quiddity_from_triangulation(t) == HEPTAGON

    @given(st.integers(3, 12), st.randoms(use_true_random=False))
    def test_round_trip(self, n, rng):
        diags = random_triangulation_diagonals(rng, n)
        t = Triangulation(n, diags)
        q = quiddity_from_triangulation(t)
        assert q == incidence_quiddity(n, diags)
        assert triangulation_from_quiddity(q) == t
        assert is_quiddity(q)

    def test_rejects(self):
        with pytest.raises(NotAQuiddity):
            triangulation_from_quiddity((2, 2, 2, 2))


class TestPolygons:
    def test_examples(self):
        assert str(polygon_from_quiddity((1, 1, 1))) == "1/0,1/1,0/1"
        assert str(polygon_from_quiddity((1, 2, 1, 2))) == "1/0,1/1,1/2,0/1"

    @settings(max_examples=60)
    @given(st.integers(3, 12), st.randoms(use_true_random=False))
    def test_quiddity_round_trip(self, n, rng):
        q = random_quiddity(rng, n)
        p = polygon_from_quiddity(q)
        assert p.normalized
        assert polygon_quiddity(p) == q


class TestDistanceFormula:
    def test_examples(self):
        assert frieze_entry_by_distance((1, 1, 1), 2, 2) == 1
        assert tuple(frieze_entry_by_distance(HEPTAGON, i, i) for i in range(1, 8)) == HEPTAGON
        # d(1/0, 1/2) = 2 sits on the diagonal, at c(2, 2)
        assert frieze_entry_by_distance((1, 2, 1, 2), 2, 2) == 2
        assert frieze_entry_by_distance((1, 2, 1, 2), 1, 2) == 1

    def test_domain(self):
        with pytest.raises(IndexOutOfDomain):
            frieze_entry_by_distance(HEPTAGON, 1, 7)
        with pytest.raises(IndexOutOfDomain):
            frieze_entry_by_distance(HEPTAGON, 8, 8)


class TestSquareTiling:
    @pytest.mark.parametrize("q", [(1, 1, 1), (1, 2, 1, 2), (1, 3, 1, 2, 2), HEPTAGON])
    def test_tame_sl2(self, q):
        t = frieze_to_square_tiling(frieze_from_quiddity(q))
        assert (t.m, t.n) == (len(q), len(q))
        report = validate_tiling(t)
        assert report["unimodular"].ok
        assert report["antiperiodic"].ok
        assert report["tame"].ok
        # the diagonal of zeros keeps the domain from being positive
        assert not report["positive"].ok
