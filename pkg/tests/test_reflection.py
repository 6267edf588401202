from fractions import Fraction

import pytest

from hurwitzcert import (
    BadDiagonal,
    CartanMatrix,
    Matrix,
    NotAReflection,
    Poly,
    cartan_blocks,
    cartan_of_tuple,
    coleman_charpoly,
    coleman_decompose,
    coxeter_element,
    reflections_from_cartan,
    root_coroot,
)
from conftest import random_symmetric_cartan, seeded_rng


class TestReflectionsFromCartan:
    def test_rank_one(self, QQ):
        c = CartanMatrix.from_rows(QQ, [[2]])
        refs = reflections_from_cartan(c).refs
        assert refs[0] == Matrix.from_rows(QQ, [[-1]])

    def test_a2_matrices(self, a2):
        refs = reflections_from_cartan(a2).refs
        assert refs[0] == Matrix.from_rows(a2.field, [[-1, 1], [0, 1]])
        assert refs[1] == Matrix.from_rows(a2.field, [[1, 0], [1, -1]])
        ident = Matrix.identity(a2.field, 2)
        assert refs[0] * refs[0] == ident
        assert refs[1] * refs[1] == ident

    def test_counterexample_involutions(self, counterexample_cartan):
        refs = reflections_from_cartan(counterexample_cartan).refs
        ident = Matrix.identity(counterexample_cartan.field, 3)
        for s in refs:
            assert s * s == ident
            assert s.det() == -1

    def test_bad_diagonal(self, QQ):
        with pytest.raises(BadDiagonal):
            CartanMatrix.from_rows(QQ, [[1, 0], [0, 2]])


class TestRootCoroot:
    def test_dim_one(self, QQ):
        r, rv = root_coroot(Matrix.from_rows(QQ, [[-1]]))
        assert r == Matrix.column(QQ, [1])
        assert rv == Matrix.from_rows(QQ, [[2]])

    def test_a2_first_reflection(self, a2):
        refs = reflections_from_cartan(a2).refs
        r, rv = root_coroot(refs[0])
        assert r == Matrix.column(a2.field, [1, 0])
        assert rv == Matrix.from_rows(a2.field, [[2, -1]])

    def test_identity_rejected(self, QQ):
        with pytest.raises(NotAReflection):
            root_coroot(Matrix.identity(QQ, 3))

    def test_rank_two_displacement_rejected(self, QQ):
        with pytest.raises(NotAReflection):
            root_coroot(Matrix.from_rows(QQ, [[-1, 0], [0, -1]]))

    def test_factorization_reconstructs(self, counterexample_cartan):
        for s in reflections_from_cartan(counterexample_cartan).refs:
            r, rv = root_coroot(s)
            n = s.nrows
            ident = Matrix.identity(s.field, n)
            assert s == ident - r * rv
            pairing = (rv * r).entry(0, 0)
            assert pairing == 2


class TestCartanOfTuple:
    def test_roundtrip_a2(self, a2):
        refs = reflections_from_cartan(a2).refs
        assert cartan_of_tuple(refs) == a2

    def test_single_reflection(self, QQ):
        c = cartan_of_tuple([Matrix.from_rows(QQ, [[-1]])])
        assert c == CartanMatrix.from_rows(QQ, [[2]])

    def test_diagonal_rescaling_covariance(self, a2):
        field = a2.field
        d = Matrix.from_rows(field, [[3, 0], [0, Fraction(1, 2)]])
        refs = reflections_from_cartan(a2).refs
        conjugated = [d * s * d.inverse() for s in refs]
        got = cartan_of_tuple(conjugated)
        expected = d * a2.matrix * d.inverse()
        assert got.matrix == expected

    def test_roundtrip_random(self, QQ):
        rng = seeded_rng(13)
        for _ in range(10):
            n = rng.randint(2, 4)
            c = random_symmetric_cartan(QQ, rng, n)
            refs = reflections_from_cartan(c).refs
            assert cartan_of_tuple(refs) == c


class TestColemanDecomposition:
    def test_rank_one(self, QQ):
        c = CartanMatrix.from_rows(QQ, [[2]])
        dec = coleman_decompose(c)
        assert dec.upper == Matrix.from_rows(QQ, [[1]])
        assert dec.lower == Matrix.from_rows(QQ, [[1]])

    def test_a2_split(self, a2):
        dec = coleman_decompose(a2)
        assert dec.upper == Matrix.from_rows(a2.field, [[1, -1], [0, 1]])
        assert dec.lower == Matrix.from_rows(a2.field, [[1, 0], [-1, 1]])

    def test_counterexample_sums_back(self, counterexample_cartan):
        dec = coleman_decompose(counterexample_cartan)
        assert dec.upper + dec.lower == counterexample_cartan.matrix


class TestCoxeterElement:
    def test_rank_one(self, QQ):
        tup = reflections_from_cartan(CartanMatrix.from_rows(QQ, [[2]]))
        assert coxeter_element(tup) == Matrix.from_rows(QQ, [[-1]])

    def test_a2_order_three(self, a2):
        c = coxeter_element(reflections_from_cartan(a2))
        assert c.charpoly() == Poly.from_coeffs(a2.field, [1, 1, 1])
        assert c ** 3 == Matrix.identity(a2.field, 2)

    def test_counterexample_order_eight(self, counterexample_cartan):
        c = coxeter_element(reflections_from_cartan(counterexample_cartan))
        ident = Matrix.identity(counterexample_cartan.field, 3)
        assert c ** 8 == ident
        assert c ** 4 != ident


class TestColemanCharpoly:
    def test_rank_one(self, QQ):
        c = CartanMatrix.from_rows(QQ, [[2]])
        assert coleman_charpoly(c) == Poly.from_coeffs(QQ, [1, 1])  # x + 1

    def test_a2(self, a2):
        chi = coleman_charpoly(a2)
        assert chi == Poly.from_coeffs(a2.field, [1, 1, 1])
        assert chi(1) == a2.matrix.det() == 3

    def test_lower_triangular_jordan(self, QQ):
        # [[2,0],[b,2]] with b != 0: chi = (x+1)^2, the infinite-order shear
        c = CartanMatrix.from_rows(QQ, [[2, 0], [3, 2]])
        assert coleman_charpoly(c) == Poly.from_coeffs(QQ, [1, 2, 1])

    def test_identity_random_corpus(self, QQ):
        rng = seeded_rng(17)
        for _ in range(30):
            n = rng.randint(2, 5)
            c = random_symmetric_cartan(QQ, rng, n)
            chi = coleman_charpoly(c)
            cox = coxeter_element(reflections_from_cartan(c))
            assert chi == cox.charpoly()
            assert chi(1) == c.matrix.det()

    def test_diagonal_rescaling_invariance(self, quartic_field):
        rng = seeded_rng(19)
        t = quartic_field.gen()
        c = CartanMatrix.from_rows(quartic_field,
                                   [[2, -1, -1], [-1, 2, -t], [-1, -t, 2]])
        chi = coleman_charpoly(c)
        for _ in range(5):
            scalars = [quartic_field.element(rng.randint(1, 4))
                       + quartic_field.element(rng.randint(0, 2)) * t
                       for _ in range(3)]
            d = Matrix.from_rows(quartic_field,
                                 [[scalars[i] if i == j else 0 for j in range(3)]
                                  for i in range(3)])
            conj = CartanMatrix(d * c.matrix * d.inverse())
            assert coleman_charpoly(conj) == chi


class TestFormInvariance:
    def test_symmetric_form_preserved(self, QQ):
        rng = seeded_rng(23)
        for _ in range(10):
            n = rng.randint(2, 4)
            c = random_symmetric_cartan(QQ, rng, n)
            refs = reflections_from_cartan(c).refs
            for s in refs:
                assert s.transpose() * c.matrix * s == c.matrix


class TestFixedSpace:
    def test_kernel_is_fixed_space(self, QQ, affine_a1):
        rng = seeded_rng(29)
        cartans = [affine_a1]
        while len(cartans) < 8:
            c = random_symmetric_cartan(QQ, rng, rng.randint(2, 4))
            if c.matrix.det().is_zero():
                cartans.append(c)
        for c in cartans:
            cox = coxeter_element(reflections_from_cartan(c))
            n = c.n
            ident = Matrix.identity(c.field, n)
            kernel = c.matrix.kernel()
            for v in kernel:
                assert cox * v == v
            assert len((cox - ident).kernel()) == len(kernel)


class TestBlocks:
    def test_diagonal_singletons(self, QQ):
        c = CartanMatrix.from_rows(QQ, [[2, 0, 0], [0, 2, 0], [0, 0, 2]])
        assert cartan_blocks(c) == [[1], [2], [3]]

    def test_a2_single_block(self, a2):
        assert cartan_blocks(a2) == [[1, 2]]

    def test_block_diagonal_sum(self, QQ):
        c = CartanMatrix.from_rows(QQ, [[2, -1, 0], [-1, 2, 0], [0, 0, 2]])
        assert cartan_blocks(c) == [[1, 2], [3]]

    def test_asymmetric_edge_counts(self, QQ):
        # an edge exists when either entry is nonzero
        c = CartanMatrix.from_rows(QQ, [[2, 0], [-1, 2]])
        assert cartan_blocks(c) == [[1, 2]]
