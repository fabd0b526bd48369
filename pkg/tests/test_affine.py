"""Affine representative families: jump data, generalized companions,
the family realization, and the bijection with invariant-factor chains."""

import random

import pytest

from matcanon import (
    GF,
    QQ,
    AffineRepresentative,
    DegreeMismatch,
    EmptyInput,
    Matrix,
    NotMonic,
    Partition,
    Polynomial,
    RationalNormalForm,
    affine_point,
    assemble_rnf_matrix,
    companion,
    generalized_companion,
    invariant_factors,
    jump_data,
    nilpotent_base,
    product,
    to_affine,
    to_rnf,
)

from helpers import iter_partitions, rand_monic


def P(field, *coeffs):
    return Polynomial(field, coeffs)


def display_qs(field):
    """The fixed degree-(2,1,2) tuple with coefficients 1..5."""
    return (P(field, -5, -4, 1), P(field, -3, 1), P(field, -2, -1, 1))


FIVE_BY_FIVE = [
    [0, 5, 0, 0, 0],
    [1, 4, 0, 0, 0],
    [0, 1, 3, 0, 0],
    [0, 0, 1, 0, 2],
    [0, 0, 0, 1, 1],
]


class TestJumpData:
    def test_5322(self):
        data = jump_data(Partition((5, 3, 2, 2)))
        assert data.jumps == (1, 2)
        assert data.qs == (2, 1, 2)
        assert data.s == 3
        assert data.boundaries == (0, 1, 2, 4)

    def test_constant_partition(self):
        for parts in [(4,), (3, 3), (2, 2, 2)]:
            data = jump_data(Partition(parts))
            assert data.s == 1
            assert data.jumps == ()
            assert data.qs == (parts[-1],)

    def test_221(self):
        data = jump_data(Partition((2, 2, 1)))
        assert data.jumps == (2,)
        assert data.qs == (1, 1)

    def test_sum_telescopes_to_largest_part(self):
        for n in range(1, 11):
            for parts in iter_partitions(n):
                data = jump_data(Partition(parts))
                assert sum(data.qs) == parts[0]
                assert data.s == len(set(parts))


class TestGeneralizedCompanion:
    def test_display_pattern(self):
        got = generalized_companion(display_qs(QQ))
        assert got == Matrix(QQ, FIVE_BY_FIVE)

    def test_free_ones_zeros_partition_of_entries(self):
        got = generalized_companion(display_qs(QQ))
        free = {(0, 1), (1, 1), (2, 2), (3, 4), (4, 4)}
        ones = {(1, 0), (2, 1), (3, 2), (4, 3)}
        for i in range(5):
            for j in range(5):
                if (i, j) in free:
                    continue
                if (i, j) in ones:
                    assert got[i, j] == QQ(1)
                else:
                    assert got[i, j].is_zero()

    def test_single_block_is_companion(self):
        p = P(GF(5), 2, 0, 1, 1)
        assert generalized_companion([p]) == companion(p)

    def test_nilpotent_blocks(self):
        field = GF(7)
        got = generalized_companion([Polynomial.x_power(field, 2), Polynomial.x(field)])
        want = Matrix(field, [[0, 0, 0], [1, 0, 0], [0, 1, 0]])
        assert got == want

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            generalized_companion([])

    def test_not_monic(self):
        with pytest.raises(NotMonic):
            generalized_companion([P(QQ, 1, 2)])


class TestNilpotentBase:
    def test_size_one(self):
        assert nilpotent_base(QQ, (1,)) == Matrix(QQ, [[0]])

    def test_shape_212(self):
        n = nilpotent_base(QQ, (2, 1, 2))
        for i in range(5):
            for j in range(5):
                expected = 1 if i == j + 1 else 0
                assert n[i, j] == QQ(expected)

    def test_nilpotency(self):
        n = nilpotent_base(GF(5), (3, 2))
        assert (n ** 5).is_zero()
        assert not (n ** 4).is_zero()

    def test_family_slice_is_affine(self):
        """Subtracting the nilpotent base leaves exactly the free entries,
        and those add coordinate-wise: the family is an affine subspace of
        dimension sum(q)."""
        field = GF(7)
        q = (2, 1, 2)
        rng = random.Random(47)
        base = nilpotent_base(field, q)
        free_positions = set()
        offset = 0
        for qj in q:
            for i in range(qj):
                free_positions.add((offset + i, offset + qj - 1))
            offset += qj
        assert len(free_positions) == sum(q)

        def family_point(coeff_lists):
            qs = [Polynomial(field, coeffs + [1]) for coeffs in coeff_lists]
            return generalized_companion(qs)

        for _ in range(10):
            coeffs_u = [[rng.randrange(7) for _ in range(qj)] for qj in q]
            coeffs_v = [[rng.randrange(7) for _ in range(qj)] for qj in q]
            u = family_point(coeffs_u) - base
            v = family_point(coeffs_v) - base
            for m in (u, v):
                for i in range(5):
                    for j in range(5):
                        if (i, j) not in free_positions:
                            assert m[i, j].is_zero()
            summed = [[(a + b) % 7 for a, b in zip(ra, rb)] for ra, rb in zip(coeffs_u, coeffs_v)]
            assert u + v == family_point(summed) - base


class TestAffinePoint:
    def test_display_12x12(self):
        got = affine_point(Partition((5, 3, 2, 2)), display_qs(QQ))
        want = [[0] * 12 for _ in range(12)]
        three = [[3, 0, 0], [1, 0, 2], [0, 1, 1]]
        two = [[0, 2], [1, 1]]
        for block, offset in ((FIVE_BY_FIVE, 0), (three, 5), (two, 8), (two, 10)):
            for i, row in enumerate(block):
                for j, entry in enumerate(row):
                    want[offset + i][offset + j] = entry
        assert got == Matrix(QQ, want)

    def test_constant_partition_matches_chain_matrix(self):
        field = GF(5)
        q = P(field, 1, 2, 0, 1)
        p = Partition((3, 3))
        got = affine_point(p, (q,))
        chain = RationalNormalForm([q, q])
        assert got == assemble_rnf_matrix(chain)

    def test_all_nilpotent_coordinates(self):
        field = GF(3)
        p = Partition((3, 1))
        data_qs = (Polynomial.x_power(field, 2), Polynomial.x(field))
        got = affine_point(p, data_qs)
        chain = invariant_factors(got)
        assert [f.degree for f in chain] == [3, 1]
        assert (got ** 3).is_zero()

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            affine_point(Partition((5, 3, 2, 2)), (P(QQ, 1, 1), P(QQ, -3, 1), P(QQ, -2, -1, 1)))

    def test_wrong_count(self):
        with pytest.raises(DegreeMismatch):
            affine_point(Partition((2, 1)), (P(QQ, 1, 1),))


class TestBijection:
    def test_to_rnf_single_group(self):
        field = QQ
        q = P(field, -1, 1)
        rep = AffineRepresentative(Partition((1, 1, 1)), (q,))
        chain = to_rnf(rep)
        assert chain.factors == (q, q, q)

    def test_to_rnf_5322_products(self):
        field = GF(5)
        q1, q2, q3 = display_qs(field)
        rep = AffineRepresentative(Partition((5, 3, 2, 2)), (q1, q2, q3))
        chain = to_rnf(rep)
        assert chain.factors == (q1 * q2 * q3, q2 * q3, q3, q3)
        assert [f.degree for f in chain] == [5, 3, 2, 2]

    def test_to_rnf_linear_expansion(self):
        u, v = QQ(2), QQ(5)
        rep = AffineRepresentative(
            Partition((2, 1)),
            (P(QQ, -2, 1), P(QQ, -5, 1)),
        )
        chain = to_rnf(rep)
        assert chain.factors[0] == P(QQ, -2, 1) * P(QQ, -5, 1)
        assert chain.factors[1] == P(QQ, -5, 1)

    def test_to_affine_identity_chain(self):
        chain = RationalNormalForm([P(QQ, -1, 1), P(QQ, -1, 1)])
        rep = to_affine(chain)
        assert rep.partition == (1, 1)
        assert rep.qs == (P(QQ, -1, 1),)

    def test_to_affine_square_chain(self):
        chain = RationalNormalForm([P(QQ, 1, -2, 1), P(QQ, -1, 1)])
        rep = to_affine(chain)
        assert rep.qs == (P(QQ, -1, 1), P(QQ, -1, 1))
        assert to_rnf(rep) == chain

    def test_to_affine_gf3_example(self):
        field = GF(3)
        p1 = P(field, 1, 0, 1) * Polynomial.x(field)  # (X^2+1)*X
        chain = RationalNormalForm([p1, Polynomial.x(field)])
        rep = to_affine(chain)
        assert rep.qs == (P(field, 1, 0, 1), Polynomial.x(field))
        assert to_rnf(rep) == chain

    @pytest.mark.parametrize("field", [GF(5), GF(2), QQ])
    def test_round_trips_random(self, field):
        rng = random.Random(53)
        for n in range(1, 11):
            for parts in iter_partitions(n):
                p = Partition(parts)
                data = jump_data(p)
                qs = tuple(rand_monic(field, d, rng) for d in data.qs)
                rep = AffineRepresentative(p, qs)
                chain = to_rnf(rep)
                assert to_affine(chain) == rep
                assert to_rnf(to_affine(chain)) == chain

    def test_normal_form_of_realization(self):
        field = GF(5)
        rng = random.Random(59)
        for n in range(1, 8):
            for parts in iter_partitions(n):
                p = Partition(parts)
                data = jump_data(p)
                qs = tuple(rand_monic(field, d, rng) for d in data.qs)
                rep = AffineRepresentative(p, qs)
                assert invariant_factors(rep.realize()) == to_rnf(rep)

    def test_free_parameter_count_is_largest_part(self):
        for n in range(1, 11):
            for parts in iter_partitions(n):
                data = jump_data(Partition(parts))
                assert sum(data.qs) == parts[0]


class TestSingleFactorLaw:
    def test_generalized_companion_single_chain(self):
        """The chained-block matrix is similar to the companion of the
        product of its blocks: one invariant factor."""
        field = GF(5)
        rng = random.Random(61)
        for _ in range(30):
            total = rng.randint(1, 8)
            sizes = []
            while total:
                take = rng.randint(1, total)
                sizes.append(take)
                total -= take
            qs = [rand_monic(field, s, rng) for s in sizes]
            chain = invariant_factors(generalized_companion(qs))
            assert chain == RationalNormalForm([product(qs)])


class TestRepresentativeSystem:
    def test_unique_family_point_for_random_classes(self):
        field = GF(5)
        rng = random.Random(67)
        for _ in range(25):
            n = rng.randint(1, 6)
            a = Matrix(field, [[rng.randrange(5) for _ in range(n)] for _ in range(n)])
            chain = invariant_factors(a)
            rep = to_affine(chain)
            realized = affine_point(rep.partition, rep.qs)
            assert invariant_factors(realized) == chain
            # the coordinates are pinned by the chain, so the point is unique
            assert to_affine(invariant_factors(realized)) == rep
