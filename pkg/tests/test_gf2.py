import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycomplete.gf2 import Gf2Matrix


def matrices(max_rows=7, max_cols=7):
    @st.composite
    def build(draw):
        r = draw(st.integers(min_value=0, max_value=max_rows))
        c = draw(st.integers(min_value=0, max_value=max_cols))
        rows = [draw(st.integers(min_value=0, max_value=(1 << c) - 1)) for _ in range(r)]
        return Gf2Matrix(r, c, rows)

    return build()


class TestRank:
    def test_identity(self):
        assert Gf2Matrix.from_bits([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).rank() == 3

    def test_zero(self):
        assert Gf2Matrix(4, 5).rank() == 0
        assert Gf2Matrix(0, 5).rank() == 0
        assert Gf2Matrix(4, 0).rank() == 0

    def test_dependent_rows(self):
        # third row is the XOR of the first two
        m = Gf2Matrix.from_bits([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        assert m.rank() == 2

    def test_input_not_mutated(self):
        m = Gf2Matrix.from_bits([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        before = list(m.rows)
        m.rank()
        assert m.rows == before

    @given(matrices())
    def test_rank_equals_transpose_rank(self, m):
        assert m.rank() == m.transpose().rank()

    @given(matrices())
    def test_rank_bounded(self, m):
        assert 0 <= m.rank() <= min(m.nrows, m.ncols)

    @given(matrices(), st.randoms(use_true_random=False))
    def test_invariant_under_row_ops(self, m, rnd):
        rows = list(m.rows)
        rnd.shuffle(rows)
        if len(rows) >= 2:
            i, j = rnd.sample(range(len(rows)), 2)
            rows[i] ^= rows[j]
        assert Gf2Matrix(m.nrows, m.ncols, rows).rank() == m.rank()


class TestNullity:
    def test_identity(self):
        assert Gf2Matrix.from_bits([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).nullity() == 0

    def test_empty_map_full_kernel(self):
        assert Gf2Matrix(0, 5).nullity() == 5

    def test_dependent_rows(self):
        assert Gf2Matrix.from_bits([[1, 1, 0], [0, 1, 1], [1, 0, 1]]).nullity() == 1

    @given(matrices())
    def test_rank_nullity(self, m):
        assert m.rank() + m.nullity() == m.ncols


class TestConstruction:
    def test_rejects_out_of_range_bits(self):
        with pytest.raises(ValueError):
            Gf2Matrix(1, 2, [4])

    def test_rejects_row_count_mismatch(self):
        with pytest.raises(ValueError):
            Gf2Matrix(2, 2, [1])

    def test_entry_and_transpose(self):
        m = Gf2Matrix.from_bits([[1, 0], [1, 1], [0, 1]])
        assert [[m.entry(i, j) for j in range(2)] for i in range(3)] == [[1, 0], [1, 1], [0, 1]]
        t = m.transpose()
        assert [[t.entry(i, j) for j in range(3)] for i in range(2)] == [[1, 1, 0], [0, 1, 1]]


def test_agrees_with_naive_elimination_on_random_matrices():
    rng = random.Random(7)

    def naive_rank(bits):
        mat = [row[:] for row in bits]
        rank = 0
        cols = len(mat[0]) if mat else 0
        for c in range(cols):
            piv = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
            if piv is None:
                continue
            mat[rank], mat[piv] = mat[piv], mat[rank]
            for i in range(len(mat)):
                if i != rank and mat[i][c]:
                    mat[i] = [a ^ b for a, b in zip(mat[i], mat[rank])]
            rank += 1
        return rank

    for _ in range(200):
        r = rng.randint(0, 8)
        c = rng.randint(0, 8)
        bits = [[rng.randint(0, 1) for _ in range(c)] for _ in range(r)]
        assert Gf2Matrix.from_bits(bits).rank() == naive_rank(bits)
