import pytest

from ncwitt import (
    Alphabet,
    CoordinateTuple,
    EpsilonNotCommutator,
    FreePoly,
    RResult,
    WittContext,
    abelianize,
    check_ghost_vanishes,
    check_lemma_phi,
    commutator,
    counterexample_report,
    ghost_map,
    phi_map,
    r_map,
)
from ncwitt.rmap import DegreeCapExceeded
from ncwitt.verify import sample_commutator, sample_poly


def mono(ab, *letters, coeff=1):
    return FreePoly.monomial(ab, tuple(letters), coeff)


class TestRMap:
    def test_zero_input(self, ab):
        ctx = WittContext(ab, 2, 3)
        result = r_map([], ctx)
        assert all(r.is_zero() for r in result.coords.coords)

    def test_commutator_input(self, ab, X, Y):
        ctx = WittContext(ab, 2, 2)
        result = r_map([commutator(X, Y)], ctx)
        r0, r1 = result.coords.coords
        assert r0 == commutator(X, Y)
        assert r1 == -mono(ab, 0, 1, 0, 1) + mono(ab, 0, 0, 1, 1)
        # omega_1(r) = r0^2 + 2 r1
        assert r0**2 + 2 * r1 == (
            -mono(ab, 0, 1, 0, 1)
            + mono(ab, 1, 0, 1, 0)
            - mono(ab, 0, 1, 1, 0)
            - mono(ab, 1, 0, 0, 1)
            + 2 * mono(ab, 0, 0, 1, 1)
        )

    def test_one_generator_alphabet(self):
        ab1 = Alphabet(["T"])
        ctx = WittContext(ab1, 2, 3)
        result = r_map([FreePoly.zero(ab1)] * 3, ctx)
        assert all(r.is_zero() for r in result.coords.coords)

    def test_r0_is_first_epsilon(self, ab, rng):
        for _ in range(5):
            eps0 = sample_commutator(rng, ab)
            ctx = WittContext(ab, 2, 2)
            assert r_map([eps0], ctx).coords.coords[0] == eps0

    def test_rejects_non_commutator(self, ab, X):
        ctx = WittContext(ab, 2, 2)
        with pytest.raises(EpsilonNotCommutator):
            r_map([X], ctx)

    def test_audit_divisibility(self, ab, X, Y):
        ctx = WittContext(ab, 2, 3)
        result = r_map([commutator(X, Y)], ctx)
        for step in result.audit:
            assert step.divisor == 2**step.index
            assert all(c % step.divisor == 0 for _, c in step.pre_division.terms())

    def test_determinism(self, ab, X, Y):
        ctx = WittContext(ab, 2, 3)
        a = r_map([commutator(X, Y), commutator(Y, X * Y)], ctx)
        b = r_map([commutator(X, Y), commutator(Y, X * Y)], ctx)
        assert a.coords == b.coords

    def test_degree_cap(self, ab, X, Y):
        ctx = WittContext(ab, 2, 4)
        with pytest.raises(DegreeCapExceeded):
            r_map([commutator(X, Y)], ctx, degree_cap=8)

    def test_level_compatibility(self, ab, X, Y):
        # the first components of the recursion do not depend on the level
        eps = [commutator(X, Y), commutator(X, Y * X)]
        r2 = r_map(eps, WittContext(ab, 2, 2)).coords.coords
        r3 = r_map(eps, WittContext(ab, 2, 3)).coords.coords
        assert r3[:2] == r2


class TestGhostVanishes:
    def test_paper_case(self, ab, X, Y):
        ctx = WittContext(ab, 2, 2)
        assert check_ghost_vanishes(r_map([commutator(X, Y)], ctx))

    def test_zero_case(self, ab):
        ctx = WittContext(ab, 2, 3)
        assert check_ghost_vanishes(r_map([], ctx))

    def test_random_sweep(self, ab, rng):
        for _ in range(10):
            n = rng.randint(1, 3)
            ctx = WittContext(ab, 2, n)
            eps = [sample_commutator(rng, ab) for _ in range(n)]
            assert check_ghost_vanishes(r_map(eps, ctx, degree_cap=128))

    def test_mutated_result_fails(self, ab, X, Y):
        ctx = WittContext(ab, 2, 2)
        result = r_map([commutator(X, Y)], ctx)
        mutated = RResult(
            CoordinateTuple.of(ctx, [result.coords.coords[0], FreePoly.zero(ab)]),
            result.audit,
        )
        assert not check_ghost_vanishes(mutated)


class TestLemmaPhi:
    def test_single_word(self, ab, X):
        assert check_lemma_phi(X, 2, 2)
        # on a single word the congruence is an equality
        assert (X ** 4 - phi_map(X ** 2, 2)).is_zero()

    def test_sum_of_generators(self, ab, X, Y):
        diff = abelianize((X + Y) ** 2 - (X**2 + Y**2))
        assert all(c % 2 == 0 for _, c in diff.terms())
        assert check_lemma_phi(X + Y, 1, 2)

    def test_random_sweep(self, ab, rng):
        for _ in range(20):
            x = sample_poly(rng, ab, 2)
            k = rng.randint(1, 2)
            p = rng.choice([2, 3])
            assert check_lemma_phi(x, k, p)

    def test_phi_preserves_commutators(self, ab, rng):
        from ncwitt import in_commutator_subgroup

        for p in (2, 3):
            for _ in range(10):
                c = sample_commutator(rng, ab)
                assert in_commutator_subgroup(phi_map(c, p))


class TestCounterexampleReport:
    def test_level_two(self):
        report = counterexample_report(2)
        assert report.status == "PASS"
        assert [s.status for s in report.steps] == ["pass"] * 4

    def test_level_four_same_entry1(self, ab):
        # r_2, r_3 do not affect the level-1 Witt polynomial
        report2 = counterexample_report(2)
        report4 = counterexample_report(4)
        assert report4.status == "PASS"
        entry2 = next(s.output for s in report2.steps if s.name == "omega_entry1")
        entry4 = next(s.output for s in report4.steps if s.name == "omega_entry1")
        assert entry2 == entry4

    def test_rejects_small_level(self):
        with pytest.raises(ValueError):
            counterexample_report(1)

    def test_report_serializes(self):
        d = counterexample_report(2).as_dict()
        assert d["status"] == "PASS"
        assert {s["name"] for s in d["steps"]} == {
            "r_map",
            "ghost_vanishes",
            "omega_entry1",
            "obstruction_membership",
        }
