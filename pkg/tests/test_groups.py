import random

import pytest

from evoalg.algebra import mat_equal, mat_mul
from evoalg.digraph import Permutation
from evoalg.errors import CapExceededError, ParseError, UnclosedGroupError
from evoalg.fields import CyclotomicField, PrimeField, RationalField
from evoalg.groups import (
    Cyclic,
    Dihedral,
    MonomialGroup,
    MonomialMap,
    SemidirectCyclic,
    Symmetric,
    Trivial,
    close_generators,
    recognize,
)

Q = RationalField()
Z3 = CyclotomicField(3)


def random_monomial(field, n, rng):
    images = list(range(n))
    rng.shuffle(images)
    d = []
    for _ in range(n):
        while True:
            x = field.scalar(rng.randint(-4, 4))
            if not x.is_zero:
                d.append(x)
                break
    return MonomialMap(Permutation(images), tuple(d))


class TestComposition:
    def test_identity_neutral(self):
        rng = random.Random(2)
        for _ in range(10):
            g = random_monomial(Q, 3, rng)
            ident = MonomialMap.identity(Q, 3)
            assert ident * g == g and g * ident == g

    def test_matches_matrix_product(self):
        z = Z3.zeta
        swap = MonomialMap(Permutation((1, 0)), (Z3.one, Z3.one))
        diag = MonomialMap.diagonal((z, z * z))
        prod = swap * diag
        assert mat_equal(prod.matrix(), mat_mul(swap.matrix(), diag.matrix()))

    def test_matrix_product_random(self):
        rng = random.Random(4)
        for field in (Q, PrimeField(7), Z3):
            for _ in range(10):
                g = random_monomial(field, 4, rng)
                h = random_monomial(field, 4, rng)
                assert mat_equal((g * h).matrix(), mat_mul(g.matrix(), h.matrix()))

    def test_inverse_of_cycle(self):
        g = MonomialMap(Permutation.from_cycles(3, (0, 1, 2)), (Q.one,) * 3)
        assert g.inverse() == MonomialMap(
            Permutation.from_cycles(3, (0, 2, 1)), (Q.one,) * 3
        )

    def test_inverse_random(self):
        rng = random.Random(6)
        for _ in range(20):
            g = random_monomial(Q, 4, rng)
            assert g * g.inverse() == MonomialMap.identity(Q, 4)

    def test_associative(self):
        rng = random.Random(8)
        for _ in range(15):
            a, b, c = (random_monomial(PrimeField(5), 3, rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)

    def test_permutation_part_is_homomorphic(self):
        rng = random.Random(10)
        for _ in range(15):
            g = random_monomial(Q, 4, rng)
            h = random_monomial(Q, 4, rng)
            assert (g * h).sigma == g.sigma * h.sigma

    def test_order_matches_repeated_composition(self):
        rng = random.Random(16)
        z7 = CyclotomicField(7)
        for field in (PrimeField(7), Z3, z7):
            for _ in range(12):
                images = list(range(3))
                rng.shuffle(images)
                roots = field.roots_of_unity(field.unity_group().order)
                d = tuple(rng.choice(roots) for _ in range(3))
                g = MonomialMap(Permutation(images), d)
                ident = MonomialMap.identity(field, 3)
                naive, cur = None, g
                for k in range(1, 200):
                    if cur == ident:
                        naive = k
                        break
                    cur = cur * g
                assert g.order() == naive

    def test_order_rejects_non_unity_scaling(self):
        from evoalg.errors import CapExceededError

        with pytest.raises(CapExceededError):
            MonomialMap.diagonal((Q.scalar(2),)).order()

    def test_conjugation_permutes_diagonal(self):
        # P_sigma^{-1} diag(d) P_sigma equals diag(d composed with sigma)
        rng = random.Random(12)
        for _ in range(15):
            n = 4
            perm = random_monomial(Q, n, rng)
            perm = MonomialMap(perm.sigma, (Q.one,) * n)
            diag = MonomialMap.diagonal(
                tuple(Q.scalar(rng.randint(1, 9)) for _ in range(n))
            )
            conj = perm.inverse() * diag * perm
            expected = MonomialMap.diagonal(
                tuple(diag.d[perm.sigma(i)] for i in range(n))
            )
            assert conj == expected


class TestClosure:
    def test_empty_generators(self):
        grp = close_generators([], field=Q, n=2)
        assert grp.order == 1 and grp.closed

    def test_third_roots_diagonal(self):
        z = Z3.zeta
        grp = close_generators([MonomialMap.diagonal((z, z * z))])
        assert grp.order == 3

    def test_swap_and_diagonal_give_order_six(self):
        z = Z3.zeta
        swap = MonomialMap(Permutation((1, 0)), (Z3.one, Z3.one))
        grp = close_generators([swap, MonomialMap.diagonal((z, z * z))])
        assert grp.order == 6

    def test_cap(self):
        with pytest.raises(CapExceededError):
            close_generators([MonomialMap.diagonal((Q.scalar(2),))], cap=10)

    def test_closure_is_verified_closed(self):
        rng = random.Random(14)
        gens = [random_monomial(PrimeField(5), 3, rng) for _ in range(2)]
        grp = close_generators(gens)
        assert MonomialGroup(grp.field, grp.n, grp.elements).closed


class TestRecognition:
    def s3_over_zeta3(self):
        z = Z3.zeta
        swap = MonomialMap(Permutation((1, 0)), (Z3.one, Z3.one))
        return close_generators([swap, MonomialMap.diagonal((z, z * z))])

    def test_trivial(self):
        assert recognize(close_generators([], field=Q, n=1), Trivial()).matched

    def test_cyclic_prime_order(self):
        z = Z3.zeta
        grp = close_generators([MonomialMap.diagonal((z, z * z))])
        report = recognize(grp, Cyclic(3))
        assert report.matched and "generator" in report.witness

    def test_symmetric_via_histogram(self):
        # order 6 on two indices: the faithful-image path cannot apply
        grp = self.s3_over_zeta3()
        assert recognize(grp, Symmetric(3)).matched
        assert recognize(grp, Dihedral(3)).matched
        rep = recognize(grp, SemidirectCyclic(3, 2))
        assert rep.matched and rep.witness["action_exponent"] == 2

    def test_cyclic_6_rejected_for_s3(self):
        assert not recognize(self.s3_over_zeta3(), Cyclic(6)).matched

    def test_unclosed_rejected(self):
        grp = MonomialGroup(Q, 2, [MonomialMap.identity(Q, 2)], complete=False)
        with pytest.raises(UnclosedGroupError):
            recognize(grp, Trivial())

    def test_unknown_target(self):
        with pytest.raises(ParseError):
            recognize(close_generators([], field=Q, n=1), "S3")


class TestProfile:
    def test_histogram_sums_to_order(self):
        grp = TestRecognition().s3_over_zeta3()
        profile = grp.profile()
        assert sum(profile.element_order_histogram.values()) == profile.order == 6
        assert not profile.is_abelian
        assert profile.diagonal_order == 3
        assert profile.quotient_order == 2
