import pytest

from nashblowup.equivalence import (
    ContactTransform,
    HarnessConfig,
    LocalAutomorphism,
    UnitElement,
    apply_contact,
    apply_to_ideal,
    check_contact_invariance,
    check_right_covariance,
    check_unit_stability,
    random_automorphism,
    random_unit,
    run_invariance_harness,
    samuel_hypothesis,
    validate_automorphism,
)
from nashblowup.fields import GF
from nashblowup.ideals import Ideal
from nashblowup.polynomials import RingContext

from conftest import P


def auto(ring, *texts):
    return LocalAutomorphism(ring, tuple(P(t, ring) for t in texts))


class TestValidation:
    def test_triangular_is_valid(self, ring_q2):
        assert validate_automorphism(auto(ring_q2, "x+y^2", "y"))

    def test_singular_linear_part(self, ring_q2):
        assert not validate_automorphism(auto(ring_q2, "x^2", "y"))

    def test_origin_not_preserved(self, ring_q2):
        assert not validate_automorphism(auto(ring_q2, "x+1", "y"))

    def test_wrong_image_count(self, ring_q2):
        with pytest.raises(ValueError):
            LocalAutomorphism(ring_q2, (P("x", ring_q2),))

    def test_unit_validity(self, ring_q2):
        assert UnitElement(P("1+x", ring_q2)).is_valid()
        assert not UnitElement(P("x", ring_q2)).is_valid()


class TestApplication:
    def test_identity_fixes_ideal(self, ring_q2):
        i = Ideal(ring_q2, [P("x^2+y^3", ring_q2)])
        assert apply_to_ideal(LocalAutomorphism.identity(ring_q2), i).equals(i)

    def test_swap(self, ring_q2):
        i = Ideal(ring_q2, [P("x^2", ring_q2)])
        swapped = apply_to_ideal(auto(ring_q2, "y", "x"), i)
        assert swapped.equals(Ideal(ring_q2, [P("y^2", ring_q2)]))

    def test_shear_on_generator(self, ring_q2):
        i = Ideal(ring_q2, [P("x", ring_q2)])
        moved = apply_to_ideal(auto(ring_q2, "x+y^2", "y"), i)
        assert moved.equals(Ideal(ring_q2, [P("x+y^2", ring_q2)]))

    def test_invalid_automorphism_rejected(self, ring_q2):
        with pytest.raises(ValueError):
            apply_to_ideal(auto(ring_q2, "x^2", "y"), Ideal(ring_q2, [P("x", ring_q2)]))

    def test_contact_application(self, ring_q2):
        f = P("x^2", ring_q2)
        t1 = ContactTransform(LocalAutomorphism.identity(ring_q2), UnitElement(P("1", ring_q2)))
        assert apply_contact(f, t1) == f
        t2 = ContactTransform(auto(ring_q2, "x+y^2", "y"), UnitElement(P("1", ring_q2)))
        assert apply_contact(f, t2) == P("x^2+2*x*y^2+y^4", ring_q2)
        t3 = ContactTransform(LocalAutomorphism.identity(ring_q2), UnitElement(P("1+x", ring_q2)))
        assert apply_contact(f, t3) == P("x^2+x^3", ring_q2)


class TestIdentityChecks:
    def test_covariance_under_swap(self, ring_q2):
        assert check_right_covariance(P("x^3+y^2", ring_q2), auto(ring_q2, "y", "x"), 2)

    def test_covariance_under_shear(self, ring_q2):
        assert check_right_covariance(P("x*y", ring_q2), auto(ring_q2, "x+y^2", "y"), 2)

    def test_covariance_identity(self, ring_q2):
        f = P("x^4-2*x*y^2", ring_q2)
        assert check_right_covariance(f, LocalAutomorphism.identity(ring_q2), 2)

    def test_unit_stability(self, ring_q2):
        assert check_unit_stability(P("x^2+y^3", ring_q2), UnitElement(P("1+x", ring_q2)), 2)
        assert check_unit_stability(P("x*y", ring_q2), UnitElement(P("2", ring_q2)), 2)
        assert check_unit_stability(P("x^3-y^4", ring_q2), UnitElement(P("1", ring_q2)), 2)

    def test_contact_invariance(self, ring_q2):
        f = P("x^2+y^3", ring_q2)
        t = ContactTransform(LocalAutomorphism.identity(ring_q2), UnitElement(P("1+x", ring_q2)))
        assert check_contact_invariance(f, t, 2)
        t2 = ContactTransform(auto(ring_q2, "x+y^2", "y"), UnitElement(P("1", ring_q2)))
        assert check_contact_invariance(P("x*y", ring_q2), t2, 2)

    def test_char_p_covariance(self):
        ring = RingContext(("x", "y"), GF(5))
        assert check_right_covariance(P("x^2+y^3", ring), auto(ring, "y", "x"), 2)
        assert check_unit_stability(P("x*y", ring), UnitElement(P("1+x+y", ring)), 2)


class TestSamuelHypothesis:
    def test_reflexive(self, ring_q2):
        f = P("x^3+y^3", ring_q2)
        assert samuel_hypothesis(f, f)

    def test_high_order_perturbation(self, ring_q2):
        # x^5 = x * (x^2)^2 is an explicit cofactor witness
        f = P("x^3+y^3", ring_q2)
        assert samuel_hypothesis(f, f + P("x^5", ring_q2))

    def test_low_order_perturbation_fails(self, ring_q2):
        f = P("x^3+y^3", ring_q2)
        assert not samuel_hypothesis(f, f + P("x^3", ring_q2))

    def test_unit_jacobian_rejected(self, ring_q2):
        with pytest.raises(ValueError, match="proper"):
            samuel_hypothesis(P("x", ring_q2), P("x", ring_q2))


class TestRandomGenerators:
    def test_deterministic(self, ring_q2):
        a1 = random_automorphism(ring_q2, 42)
        a2 = random_automorphism(ring_q2, 42)
        assert a1.images == a2.images
        u1 = random_unit(ring_q2, 42)
        u2 = random_unit(ring_q2, 42)
        assert u1.u == u2.u

    def test_postconditions(self, ring_q2):
        for seed in range(12):
            assert validate_automorphism(random_automorphism(ring_q2, seed))
            assert random_unit(ring_q2, seed).is_valid()

    def test_linear_only(self, ring_q2):
        phi = random_automorphism(ring_q2, 3, max_degree=1)
        assert all(g.total_degree() <= 1 for g in phi.images)

    def test_char2_units_nonzero(self):
        ring = RingContext(("x", "y"), GF(2))
        for seed in range(10):
            assert random_unit(ring, seed).is_valid()

    def test_composition_law(self, ring_q2):
        ideal = Ideal(ring_q2, [P("x^2+y^3", ring_q2), P("x*y", ring_q2)])
        for seed in (0, 1, 5):
            phi = random_automorphism(ring_q2, seed, max_degree=2)
            psi = random_automorphism(ring_q2, seed + 100, max_degree=2)
            composed = phi.compose(psi)
            stepwise = apply_to_ideal(phi, apply_to_ideal(psi, ideal))
            assert apply_to_ideal(composed, ideal).equals(stepwise)


class TestHarness:
    def test_small_run_all_pass(self, ring_q2):
        config = HarnessConfig(seed=5, covariance_trials=4, unit_trials=4, contact_trials=2)
        report = run_invariance_harness(ring_q2, config)
        assert len(report["checks"]) == 10
        assert report["failures"] == []
        kinds = {c["kind"] for c in report["checks"]}
        assert kinds == {"right-covariance", "unit-stability", "contact-invariance"}
        for c in report["checks"]:
            assert set(c) == {"kind", "seed", "f", "n", "pass"}

    def test_report_is_replayable(self, ring_q2):
        config = HarnessConfig(seed=9, covariance_trials=3, unit_trials=0, contact_trials=0)
        first = run_invariance_harness(ring_q2, config)
        second = run_invariance_harness(ring_q2, config)
        assert first == second
