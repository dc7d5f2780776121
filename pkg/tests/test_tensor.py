"""The tensor kernel: structure-constant algebras, leg operations, inversion."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qhakit.errors import AlgebraError, ArityMismatch, SingularError
from qhakit.linalg import invert_matrix, nullspace, solve
from qhakit.scalars import RATIONAL
from qhakit.tensor import Algebra, TensorElement, tensor_of

from conftest import entry, hopf


def z2(field=RATIONAL):
    return Algebra(field, 2, {(0, 0): {0: 1}, (0, 1): {1: 1},
                              (1, 0): {1: 1}, (1, 1): {0: 1}}, basis=["1", "g"])


def semion_parts():
    alg = hopf("semion").algebra
    one, g = alg.unit_element, alg.basis_element(1)
    p = Fraction(1, 2) * one - Fraction(1, 2) * g
    return alg, one, g, p


# -- construction checks -----------------------------------------------------

class TestAlgebraConstruction:
    def test_unit_law_enforced(self):
        with pytest.raises(AlgebraError, match="unit law"):
            Algebra(RATIONAL, 2, {(0, 0): {0: 1}, (1, 1): {0: 1}})

    def test_associativity_enforced(self):
        # e1 e1 = e2, e1 e2 = e0, e2 e1 = e1 makes (e1 e1) e1 != e1 (e1 e1)
        mult = {(0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1},
                (1, 0): {1: 1}, (2, 0): {2: 1},
                (1, 1): {2: 1}, (1, 2): {0: 1}, (2, 1): {1: 1}, (2, 2): {0: 1}}
        with pytest.raises(AlgebraError, match=r"associativity.*e1, e1, e1"):
            Algebra(RATIONAL, 3, mult)


# -- legwise multiplication --------------------------------------------------

class TestMul:
    def test_unit_law(self):
        alg = z2()
        g = alg.basis_element(1)
        t = tensor_of(g, g) + alg.tensor_unit(2).scale(Fraction(1, 3))
        assert alg.tensor_unit(2) * t == t
        assert t * alg.tensor_unit(2) == t

    def test_z2_involution(self):
        alg = z2()
        g = alg.basis_element(1)
        gg = tensor_of(g, g)
        assert gg * gg == alg.tensor_unit(2)

    def test_semion_coassociator_squares_to_unit(self):
        """Oracle: dense double loop over all index pairs."""
        alg, one, g, p = semion_parts()
        phi = alg.tensor_unit(3) - tensor_of(p, p, p).scale(2)
        prod = phi * phi
        field = alg.field
        # dense oracle
        dense = {}
        for key_a in itertools.product(range(2), repeat=3):
            for key_b in itertools.product(range(2), repeat=3):
                ca = phi.entries.get(key_a)
                cb = phi.entries.get(key_b)
                if not ca or not cb:
                    continue
                legs = [alg.basis_element(i) * alg.basis_element(j)
                        for i, j in zip(key_a, key_b)]
                for k1, v1 in enumerate(legs[0].coeffs):
                    for k2, v2 in enumerate(legs[1].coeffs):
                        for k3, v3 in enumerate(legs[2].coeffs):
                            v = ca * cb * v1 * v2 * v3
                            if v:
                                key = (k1, k2, k3)
                                dense[key] = dense.get(key, field.zero) + v
        dense = {k: v for k, v in dense.items() if v}
        assert prod.entries == dense
        assert prod == alg.tensor_unit(3)


class TestPermute:
    def test_identity(self):
        alg = z2()
        t = tensor_of(alg.basis_element(1), alg.unit_element)
        assert t.perm((1, 2)) == t

    def test_swap(self):
        alg = z2()
        a, b = alg.basis_element(1), alg.unit_element
        assert tensor_of(a, b).transpose() == tensor_of(b, a)

    def test_semion_coassociator_symmetric(self):
        alg, one, g, p = semion_parts()
        phi = hopf("semion").phi
        for sigma in itertools.permutations((1, 2, 3)):
            # oracle: entry-by-entry comparison
            expected = {tuple(key[s - 1] for s in sigma): v
                        for key, v in phi.entries.items()}
            assert phi.perm(sigma).entries == expected
            assert phi.perm(sigma) == phi

    def test_inverse_composition(self):
        alg = z2()
        t = tensor_of(alg.basis_element(1), alg.unit_element, alg.basis_element(1))
        sigma = (2, 3, 1)
        inverse = (3, 1, 2)
        assert t.perm(sigma).perm(inverse) == t

    def test_malformed(self):
        alg = z2()
        with pytest.raises(ArityMismatch):
            alg.tensor_unit(2).perm((1, 1))


class TestEmbed:
    def test_r12(self):
        alg = z2()
        r = tensor_of(alg.basis_element(1), alg.basis_element(1))
        assert r.embed((1, 2), 3) == r @ alg.unit_element.to_tensor()

    def test_r13(self):
        # components land on legs 1 and 3 with the unit in the middle
        alg = z2()
        a, b = alg.basis_element(1), alg.unit_element + alg.basis_element(1)
        expected = alg.tensor_zero(3)
        for (i,), u in a.to_tensor().entries.items():
            for (j,), v in b.to_tensor().entries.items():
                expected = expected + tensor_of(
                    alg.basis_element(i), alg.unit_element, alg.basis_element(j)
                ).scale(u * v)
        assert tensor_of(a, b).embed((1, 3), 3) == expected

    def test_unit_embeds_to_unit(self):
        alg = z2()
        assert alg.tensor_unit(2).embed((2, 3), 4) == alg.tensor_unit(4)

    def test_bad_positions(self):
        alg = z2()
        with pytest.raises(ArityMismatch):
            alg.tensor_unit(2).embed((1, 1), 3)
        with pytest.raises(ArityMismatch):
            alg.tensor_unit(2).embed((1, 4), 3)

    def test_disjoint_embeds_multiply_to_outer_product(self):
        alg = z2()
        s = tensor_of(alg.basis_element(1), alg.basis_element(1))
        t = alg.basis_element(1).to_tensor()
        assert s.embed((1, 2), 3) * t.embed((3,), 3) == s @ t


class TestApplyOnLeg:
    def test_counit_on_twist_legs(self):
        h = hopf("z2_triangular")
        r = entry("z2_triangular").structure.r
        assert h.counit.on_leg(r, 1) == h.algebra.tensor_unit(1)
        assert h.counit.on_leg(r, 2) == h.algebra.tensor_unit(1)

    def test_coproduct_unital(self):
        h = hopf("group_z3")
        assert h.coproduct.on_leg(h.algebra.tensor_unit(2), 1) == h.algebra.tensor_unit(3)

    def test_middle_counit_of_coassociator(self):
        for name in ("trivial", "group_z3", "z2_triangular", "sweedler_h4", "semion"):
            h = hopf(name)
            assert h.counit.on_leg(h.phi, 2) == h.algebra.tensor_unit(2)

    def test_counit_recovers_after_coproduct(self):
        for name in ("sweedler_h4", "semion"):
            h = hopf(name)
            t = h.phi + h.algebra.tensor_unit(3).scale(Fraction(1, 5))
            expanded = h.coproduct.on_leg(t, 1)
            assert h.counit.on_leg(expanded, 1) == t


class TestInvertAndMatrices:
    def test_unit_inverse(self):
        alg = z2()
        assert alg.tensor_unit(3).invert() == alg.tensor_unit(3)

    def test_semion_coassociator_self_inverse(self):
        h = hopf("semion")
        inv = h.phi.invert()
        # oracle: multiply out and compare with the unit
        assert h.phi * inv == h.algebra.tensor_unit(3)
        assert inv == h.phi

    def test_gg_involution(self):
        alg = z2()
        gg = tensor_of(alg.basis_element(1), alg.basis_element(1))
        assert gg.invert() == gg

    def test_singular_detected(self):
        alg, one, g, p = semion_parts()
        with pytest.raises(SingularError):
            tensor_of(p, p).invert()

    def test_left_matrix_of_unit(self):
        alg = z2()
        m = alg.tensor_unit(2).left_matrix()
        for i in range(4):
            for j in range(4):
                assert m[i][j] == (1 if i == j else 0)

    def test_left_matrix_of_g_is_swap(self):
        alg = z2()
        m = alg.basis_element(1).to_tensor().left_matrix()
        assert m == [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]

    def test_left_matrix_of_projector(self):
        alg = z2()
        p = Fraction(1, 2) * alg.unit_element - Fraction(1, 2) * alg.basis_element(1)
        m = p.to_tensor().left_matrix()
        # oracle: direct basis multiplication
        for j in range(2):
            col = p * alg.basis_element(j)
            for k in range(2):
                assert m[k][j] == col.coeffs[k]
        # rank one: second column is a multiple of the first
        assert m[0][0] * m[1][1] == m[0][1] * m[1][0]

    def test_left_inverse_without_right_rejected(self):
        # upper triangular 2x2 over a 1-dim algebra embedded as arity-2... simpler:
        # a noncommutative check is exercised via sweedler in structures; here
        # check two-sidedness on a known invertible
        alg = z2()
        t = alg.tensor_unit(2) + tensor_of(alg.basis_element(1), alg.basis_element(1))
        with pytest.raises(SingularError):
            t.invert()  # (1 + g(x)g) is singular: (1+g(x)g)(1-g(x)g) = 0


class TestIsCentral:
    def test_unit_central(self, any_entry):
        s = any_entry.structure
        alg = s.algebra
        assert alg.unit_element.is_central()

    def test_commutative_all_central(self):
        alg = z2()
        assert alg.basis_element(1).is_central()

    def test_sweedler_g_not_central(self):
        alg = hopf("sweedler_h4").algebra
        g, x = alg.basis_element(1), alg.basis_element(2)
        # oracle: gx = -xg means g fails centrality against x
        assert g * x == -(x * g)
        assert g * x != x * g
        assert not g.is_central()


class TestLinearSolve:
    def test_identity(self):
        b = [Fraction(3), Fraction(-1, 2)]
        m = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
        assert solve(RATIONAL, m, b) == b

    def test_upper_triangular(self):
        m = [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]]
        assert solve(RATIONAL, m, [Fraction(2), Fraction(1)]) == [Fraction(1), Fraction(1)]

    def test_coassociator_inverse_by_solve(self):
        h = hopf("semion")
        m = h.phi.left_matrix()
        alg = h.algebra
        unit = alg.tensor_unit(3)
        rhs = [alg.field.zero] * 8
        for key, v in unit.entries.items():
            idx = key[0] * 4 + key[1] * 2 + key[2]
            rhs[idx] = v
        x = solve(alg.field, m, rhs)
        result = TensorElement(alg, 3, {
            key: x[key[0] * 4 + key[1] * 2 + key[2]]
            for key in itertools.product(range(2), repeat=3)})
        # oracle: multiply back
        assert h.phi * result == unit

    def test_singular(self):
        m = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
        with pytest.raises(SingularError):
            solve(RATIONAL, m, [Fraction(1), Fraction(0)])

    def test_invert_matrix_and_nullspace(self):
        m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
        inv = invert_matrix(RATIONAL, m)
        assert inv == [[Fraction(1), Fraction(-1)], [Fraction(-1), Fraction(2)]]
        null = nullspace(RATIONAL, [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
        assert len(null) == 1
        v = null[0]
        assert v[0] + 2 * v[1] == 0


# -- property tests over random sparse tensors -------------------------------

def sparse_tensors(alg, arity):
    d = alg.dim
    keys = st.tuples(*(st.integers(0, d - 1) for _ in range(arity)))
    pairs = st.lists(st.tuples(keys, st.fractions(min_value=-6, max_value=6, max_denominator=3)),
                     min_size=0, max_size=4)
    return pairs.map(lambda kv: TensorElement(alg, arity, dict(kv)))


class TestKernelProperties:
    @given(data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_mul_associative(self, data):
        alg = hopf("sweedler_h4").algebra
        s = data.draw(sparse_tensors(alg, 2))
        t = data.draw(sparse_tensors(alg, 2))
        u = data.draw(sparse_tensors(alg, 2))
        assert (s * t) * u == s * (t * u)

    @given(data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_permute_commutes_with_mul(self, data):
        alg = hopf("sweedler_h4").algebra
        s = data.draw(sparse_tensors(alg, 3))
        t = data.draw(sparse_tensors(alg, 3))
        sigma = data.draw(st.permutations([1, 2, 3]))
        sigma = tuple(sigma)
        assert (s * t).perm(sigma) == s.perm(sigma) * t.perm(sigma)

    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_embed_distributes(self, data):
        alg = hopf("semion").algebra
        s = data.draw(sparse_tensors(alg, 2))
        t = data.draw(sparse_tensors(alg, 1))
        assert s.embed((1, 2), 3) * t.embed((3,), 3) == s @ t

    @given(data=st.data())
    @settings(max_examples=30, deadline=None)
    def test_two_sided_inverse(self, data):
        alg = hopf("semion").algebra
        t = alg.tensor_unit(2) + data.draw(sparse_tensors(alg, 2))
        try:
            inv = t.invert()
        except SingularError:
            return
        assert t * inv == alg.tensor_unit(2)
        assert inv * t == alg.tensor_unit(2)
