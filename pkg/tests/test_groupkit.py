import itertools
import random

import pytest

from repchar.exactlin import AbelianGroup, InputError
from repchar.groupkit import (
    FiniteGroup,
    GroupHom,
    GroupPresentation,
    LatticeQuotient,
    ReducedSimplicialSet,
    compose_hom,
    constant_free_model,
    cyclic_bar_level,
    exponent_sums,
    generator,
    milnor_model,
    pullback_via_psi_cyc,
    reduce_word,
    torus_model,
    word_inv,
    word_mul,
)
from repchar.crossedcat import cyclic_generator_hom


class TestWords:
    def test_reduce(self):
        assert reduce_word([1, 2, -2, 3]) == (1, 3)
        assert reduce_word([]) == ()
        assert reduce_word([1, -1]) == ()

    def test_reduce_idempotent(self):
        rng = random.Random(1)
        for _ in range(50):
            w = [rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(rng.randint(0, 12))]
            r = reduce_word(w)
            assert reduce_word(r) == r

    def test_word_times_inverse_cancels(self):
        rng = random.Random(2)
        for _ in range(50):
            w = reduce_word(
                rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 10)))
            assert word_mul(w, word_inv(w)) == ()


class TestHoms:
    def test_identity_neutral(self):
        f = GroupHom(2, 2, ((1, 2), (-1,)))
        assert compose_hom(GroupHom.identity(2), f) == f
        assert compose_hom(f, GroupHom.identity(2)) == f

    def test_cycle_has_order_three(self):
        t = cyclic_generator_hom(("t", 2))
        assert compose_hom(t, compose_hom(t, t)).is_identity()

    def test_abelianize_identity(self):
        m = GroupHom.identity(3).abelianize()
        assert m.data == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_abelianize_exponents(self):
        f = GroupHom(1, 2, ((1, 1, -2),))  # x -> x^2 y^-1
        assert f.abelianize().data == [[2], [-1]]

    def test_abelianize_functorial(self):
        rng = random.Random(3)
        for _ in range(30):
            f = random_hom(rng, 2, 3)
            g = random_hom(rng, 3, 2)
            lhs = compose_hom(g, f).abelianize()
            rhs = g.abelianize() * f.abelianize()
            assert lhs.data == rhs.data


def random_hom(rng, src, tgt):
    images = []
    for _ in range(src):
        letters = [rng.choice([s * k for k in range(1, tgt + 1) for s in (1, -1)])
                   for _ in range(rng.randint(0, 4))]
        images.append(reduce_word(letters))
    return GroupHom(src, tgt, tuple(images))


class TestFiniteGroups:
    def test_builders_validate(self):
        for g in [FiniteGroup.trivial(), FiniteGroup.cyclic(4),
                  FiniteGroup.symmetric(3), FiniteGroup.dihedral(4),
                  FiniteGroup.quaternion()]:
            g.validate()

    def test_conjugacy_class_counts(self):
        assert len(FiniteGroup.trivial().conjugacy_classes()) == 1
        assert len(FiniteGroup.cyclic(3).conjugacy_classes()) == 3
        assert len(FiniteGroup.symmetric(3).conjugacy_classes()) == 3
        assert len(FiniteGroup.quaternion().conjugacy_classes()) == 5

    def test_rejects_broken_table(self):
        with pytest.raises(InputError):
            FiniteGroup(["e", "a"], [[0, 1], [1, 1]], 0)

    def test_abelianization_s3(self):
        group, moduli, coords = FiniteGroup.symmetric(3).abelianization()
        assert group == AbelianGroup(0, (2,))
        assert moduli == (2,)
        classes = {}
        for g, c in enumerate(coords):
            classes.setdefault(c, []).append(g)
        assert sorted(len(v) for v in classes.values()) == [3, 3]

    def test_abelianization_quaternion(self):
        group, _, _ = FiniteGroup.quaternion().abelianization()
        assert group == AbelianGroup(0, (2, 2))

    def test_abelianization_cyclic(self):
        group, moduli, coords = FiniteGroup.cyclic(6).abelianization()
        assert group == AbelianGroup(0, (6,))
        assert sorted(c[0] for c in coords) == list(range(6))

    def test_json_roundtrip(self):
        g = FiniteGroup.symmetric(3)
        h = FiniteGroup.from_dict(g.to_dict())
        assert h.table == g.table


class TestCyclicBar:
    def test_face_merges(self):
        z2 = FiniteGroup.cyclic(2)
        lvl = cyclic_bar_level(z2, 1)
        assert lvl.face(1, (1, 1)) == (0,)
        assert lvl.face(0, (1, 1)) == (0,)

    def test_degeneracy_inserts_identity(self):
        z2 = FiniteGroup.cyclic(2)
        lvl = cyclic_bar_level(z2, 0)
        assert lvl.degeneracy(0, (1,)) == (1, 0)

    def test_cycle_order(self):
        z3 = FiniteGroup.cyclic(3)
        lvl = cyclic_bar_level(z3, 2)
        tup = (1, 2, 0)
        assert lvl.cycle(tup) == (0, 1, 2)
        out = tup
        for _ in range(3):
            out = lvl.cycle(out)
        assert out == tup

    def test_last_face_wraps(self):
        s3 = FiniteGroup.symmetric(3)
        lvl = cyclic_bar_level(s3, 2)
        g0, g1, g2 = 1, 2, 3
        assert lvl.face(2, (g0, g1, g2)) == (s3.mul(g2, g0), g1)

    def test_cycle_face_relations(self):
        for group in [FiniteGroup.cyclic(2), FiniteGroup.symmetric(3)]:
            for n in (1, 2, 3):
                lvl = cyclic_bar_level(group, n)
                low = cyclic_bar_level(group, n - 1)
                for tup in itertools.product(range(group.order), repeat=n + 1):
                    for i in range(1, n + 1):
                        assert lvl.face(i, lvl.cycle(tup)) == \
                            low.cycle(lvl.face(i - 1, tup))


class TestBarPullback:
    def test_generators_match_bar_operators(self):
        z2 = FiniteGroup.cyclic(2)
        for n in (1, 2, 3):
            lvl = cyclic_bar_level(z2, n)
            tuples = lvl.tuples()
            _, _, t_act = pullback_via_psi_cyc(z2, [("t", n)])
            for tup in tuples:
                assert t_act(tup) == lvl.cycle(tup)
            for i in range(n + 1):
                _, _, d_act = pullback_via_psi_cyc(z2, [("d", n, i)])
                for tup in tuples:
                    assert d_act(tup) == lvl.face(i, tup)
            for j in range(n + 1):
                _, _, s_act = pullback_via_psi_cyc(z2, [("s", n, j)])
                for tup in tuples:
                    assert s_act(tup) == lvl.degeneracy(j, tup)

    def test_identity_word(self):
        s3 = FiniteGroup.symmetric(3)
        _, _, act = pullback_via_psi_cyc(s3, [("t", 2), ("t", 2), ("t", 2)])
        for tup in cyclic_bar_level(s3, 2).tuples():
            assert act(tup) == tup


class TestSimplicialModels:
    def test_constant_model_validates(self):
        constant_free_model(1, 5).validate()

    def test_milnor_circle_ranks(self):
        model = milnor_model(ReducedSimplicialSet.circle(), 5)
        assert model.ranks == [0, 1, 2, 3, 4, 5]
        model.validate()

    def test_milnor_circle_abelianized_homology(self):
        model = milnor_model(ReducedSimplicialSet.circle(), 6)
        groups = model.abelianized_complex().homology(upto=5)
        assert groups[0] == AbelianGroup(0)
        assert groups[1] == AbelianGroup(1)
        assert all(g == AbelianGroup(0) for g in groups[2:])

    def test_milnor_sphere_two(self):
        model = milnor_model(ReducedSimplicialSet.sphere(2), 6)
        model.validate()
        groups = model.abelianized_complex().homology(upto=5)
        assert groups[2] == AbelianGroup(1)
        assert all(g == AbelianGroup(0) for i, g in enumerate(groups) if i != 2)

    def test_torus_model(self):
        model = torus_model(5)
        model.validate()
        groups = model.abelianized_complex().homology(upto=4)
        assert groups[0] == AbelianGroup(2)
        assert groups[1] == AbelianGroup(1)
        assert all(g == AbelianGroup(0) for g in groups[2:])

    def test_model_dict_roundtrip(self):
        model = torus_model(3)
        from repchar.groupkit import SimplicialGroupModel
        clone = SimplicialGroupModel.from_dict(model.to_dict())
        clone.validate()
        assert clone.ranks == model.ranks

    def test_unreduced_simplicial_set_rejected(self):
        with pytest.raises(InputError):
            ReducedSimplicialSet([2, 1], {(1, 0): [((), 0), ((), 1)]}).validate()


class TestPresentations:
    def test_commutator_presentation(self):
        p = GroupPresentation(2, ((1, 2, -1, -2),))
        quot = LatticeQuotient(p.relator_matrix())
        assert quot.group == AbelianGroup(2)

    def test_cyclic_presentation(self):
        p = GroupPresentation(1, ((1, 1, 1),))
        quot = LatticeQuotient(p.relator_matrix())
        assert quot.group == AbelianGroup(0, (3,))

    def test_free_group(self):
        p = GroupPresentation(3, ())
        quot = LatticeQuotient(p.relator_matrix())
        assert quot.group == AbelianGroup(3)

    def test_exponent_sums(self):
        assert exponent_sums(word_mul(generator(0), generator(1), word_inv(generator(0))), 2) == (0, 1)
