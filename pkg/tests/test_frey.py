"""Frey invariants, symbolic valuation profiles and the Legendre machinery."""

import random
from fractions import Fraction

import pytest

from afcheck import make_field
from afcheck.errors import (DegenerateLambda, InconsistentDivisibility,
                            RelationViolated, UnsupportedCase)
from afcheck.frey import (FAMILY_SQUARE, FAMILY_TWO_POWER,
                          FreySpec, ValuationForm, at_most_one_divisible,
                          concrete_cross_check, conductor_shape, invariants,
                          in_w_k, in_w_k_prime, is_trivial_2r, is_trivial_pp2,
                          j_from_lambda_mu, lambda_orbit, legendre_j,
                          odd_multiplicative_primes, valuation_profile,
                          weierstrass_invariants)
from afcheck.prime_ideals import factor_rational_prime, s_k
from afcheck.sunits import solve_sunit


Q = make_field("x")
K2 = make_field("x^2 - 2")


def q_spec(family, a, b, c, r=None, p=None):
    return FreySpec(family, Q.from_rational(a), Q.from_rational(b),
                    Q.from_rational(c), r=r, p=p)


class TestInvariants:
    def test_unit_triple_r1(self):
        spec = q_spec(FAMILY_TWO_POWER, 1, 1, 1, r=1, p=5)
        inv = invariants(spec)
        assert (inv.delta, inv.c4, inv.j) == (64, 48, 1728)
        assert inv.forms_agree

    def test_pp2_sqrt2(self):
        s = K2.theta()
        spec = FreySpec(FAMILY_SQUARE, K2.one(), K2.one(), s, p=3)
        inv = invariants(spec)
        assert (inv.delta, inv.c4, inv.j) == (4096, 320, 8000)
        assert inv.forms_agree

    def test_relation_guard(self):
        with pytest.raises(RelationViolated):
            q_spec(FAMILY_TWO_POWER, 1, 1, 1, r=2, p=5)
        with pytest.raises(RelationViolated):
            q_spec(FAMILY_SQUARE, 1, 1, 2, p=3)  # 1+1 != 4

    def test_singular_guard(self):
        with pytest.raises(RelationViolated):
            q_spec(FAMILY_TWO_POWER, 1, -1, 0, r=2, p=3)

    def test_cross_check_family_a(self):
        for t in (1, 2, 3, -1):
            for p in (2, 3, 5, 7):
                spec = q_spec(FAMILY_TWO_POWER, t, t, t, r=1, p=p)
                assert concrete_cross_check(spec)

    def test_cross_check_family_b(self):
        fixtures = [(1, 2, 3, 3), (2, 2, 4, 3), (2, 2, 8, 5), (3, 4, 5, 2)]
        for a, b, c, p in fixtures:
            spec = q_spec(FAMILY_SQUARE, a, b, c, p=p)
            assert concrete_cross_check(spec)

    def test_mutation_detected(self):
        s = K2.theta()
        spec = FreySpec(FAMILY_SQUARE, K2.one(), K2.one(), s, p=3)
        delta, c4, _c6, j = weierstrass_invariants(spec)
        tampered = invariants(spec).delta * 2
        assert tampered != delta  # an injected factor must be caught

    def test_symbolic_formulas(self):
        spec = q_spec(FAMILY_TWO_POWER, 1, 1, 1, r=2)
        sym = invariants(spec)
        assert "2^8" in sym.delta_formula
        assert "(a*b*c)^(2p)" in sym.delta_formula


class TestValuationForm:
    def test_semantics_random(self):
        rng = random.Random(101)
        for _ in range(1000):
            alpha = rng.randint(-40, 40)
            beta = rng.randint(-6, 6)
            form = ValuationForm(alpha, beta)
            for p in (7, 11, 13, 10007):
                value = form.evaluate(p)
                assert value == alpha + beta * p
                if p > abs(alpha):
                    assert (value % p == 0) == form.p_divides_symbolically()
                if p > form.threshold:
                    expected = (value > 0) - (value < 0)
                    assert form.sign_for_large_p() == expected

    def test_serialization_threshold(self):
        form = ValuationForm(4, -2)
        d = form.to_dict()
        assert d == {"alpha": 4, "beta": -2, "threshold": Fraction(2)}


class TestValuationProfile:
    def test_odd_multiplicative(self):
        spec = q_spec(FAMILY_TWO_POWER, 1, 1, 1, r=2)
        q3 = factor_rational_prime(Q, 3)[0]
        rep = valuation_profile(spec, q3, 1, 0, 0)
        assert rep.v_delta == ValuationForm(0, 2)
        assert rep.v_c4 == ValuationForm(0, 0)
        assert rep.reduction_type == "multiplicative"
        assert rep.v_delta.p_divides_symbolically()
        assert not rep.flag_p_in_inertia

    def test_above_two_potentially_multiplicative(self):
        spec = q_spec(FAMILY_TWO_POWER, 1, 1, 1, r=2)
        P = s_k(Q)[0]
        rep = valuation_profile(spec, P, 1, 0, 0)
        assert rep.v_j == ValuationForm(4, -2)  # 2((4-r)v - p va) at r=2, v=1
        assert rep.reduction_type == "potentially-multiplicative"
        assert rep.flag_p_in_inertia and rep.p_threshold == 5

    def test_u_k_good_branch(self):
        P = s_k(Q)[0]
        for r, v_j, v_delta in ((2, 4, 8), (3, 2, 10)):
            spec = q_spec(FAMILY_TWO_POWER, 1, 1, 1, r=r)
            rep = valuation_profile(spec, P, 0, 0, 0)
            assert rep.v_j == ValuationForm(v_j, 0)
            assert rep.v_delta == ValuationForm(v_delta, 0)
            assert rep.reduction_type == "potentially-good"
            assert rep.flag_3_in_inertia  # 3 divides neither 8 nor 10

    def test_u_k_branch_needs_small_r(self):
        spec = q_spec(FAMILY_TWO_POWER, 1, 1, 1, r=4)
        with pytest.raises(UnsupportedCase):
            valuation_profile(spec, s_k(Q)[0], 0, 0, 0)

    def test_inconsistent_divisibility(self):
        spec = q_spec(FAMILY_TWO_POWER, 1, 1, 1, r=2)
        with pytest.raises(InconsistentDivisibility):
            valuation_profile(spec, s_k(Q)[0], 1, 1, 0)

    def test_pp2_above_two(self):
        spec = q_spec(FAMILY_SQUARE, 1, 1, 1)
        P = s_k(Q)[0]
        rep_a = valuation_profile(spec, P, 1, 0, 0)
        assert rep_a.v_j == ValuationForm(12, -2)
        assert rep_a.p_threshold == max(6, 5)
        rep_b = valuation_profile(spec, P, 0, 1, 0)
        assert rep_b.v_j == ValuationForm(6, -1)
        assert rep_b.v_delta == ValuationForm(12, 1)

    def test_consistency_j_from_c4_delta(self):
        # v_j = 3*v_c4 - v_delta on every emitted report
        P2 = s_k(Q)[0]
        q3 = factor_rational_prime(Q, 3)[0]
        specs = [q_spec(FAMILY_TWO_POWER, 1, 1, 1, r=r) for r in (2, 3)]
        specs.append(q_spec(FAMILY_SQUARE, 1, 1, 1))
        for spec in specs:
            patterns = [(1, 0, 0), (0, 1, 0), (0, 0, 0)] \
                if spec.family == FAMILY_TWO_POWER else [(1, 0, 0), (0, 1, 0), (0, 0, 0)]
            for prime in (P2, q3):
                for va, vb, vc in patterns:
                    try:
                        rep = valuation_profile(spec, prime, va, vb, vc)
                    except UnsupportedCase:
                        continue
                    lhs = rep.v_c4.scaled(3)
                    assert (lhs.alpha - rep.v_delta.alpha,
                            lhs.beta - rep.v_delta.beta) == \
                        (rep.v_j.alpha, rep.v_j.beta)

    def test_flag_matches_concrete_evaluation(self):
        # flag_p <=> (v_j < 0 and p does not divide v_j) for p > threshold
        P = s_k(Q)[0]
        for r in (2, 3):
            spec = q_spec(FAMILY_TWO_POWER, 1, 1, 1, r=r)
            for pattern in ((1, 0, 0), (0, 0, 1), (0, 0, 0)):
                rep = valuation_profile(spec, P, *pattern)
                for p in (7, 11, 13, 101):
                    if p <= rep.p_threshold:
                        continue
                    vj = rep.v_j.evaluate(p)
                    assert rep.flag_p_in_inertia == (vj < 0 and vj % p != 0)


class TestConductor:
    def test_family_a_shape(self):
        spec = q_spec(FAMILY_TWO_POWER, 3, 5, 7, r=2, p=None)
        rep = factor_rational_prime(Q, 3)[0]
        odd = [factor_rational_prime(Q, 5)[0], factor_rational_prime(Q, 7)[0]]
        shape = conductor_shape(Q, FAMILY_TWO_POWER, rep, odd)
        assert len(shape.conductor) == 1 + 1 + 2
        assert len(shape.level_lowered) == 2
        assert shape.deleted == odd
        two_factor = shape.conductor[0]
        assert two_factor.exponent == (0, 8)  # 2 + 6*v(2) over Q
        rep_factor = shape.conductor[1]
        assert rep_factor.exponent == (0, 5)  # 2 + 3*v_m(3) at m = (3)

    def test_family_b_supported_on_two(self):
        shape = conductor_shape(Q, FAMILY_SQUARE, None, [])
        assert len(shape.level_lowered) == 1
        assert shape.level_lowered[0].prime.q == 2

    def test_odd_support_detection(self):
        spec = q_spec(FAMILY_SQUARE, 1, 2, 3, p=3)
        primes = odd_multiplicative_primes(spec)
        assert primes == []  # a*b = 2: no odd support
        spec2 = q_spec(FAMILY_TWO_POWER, 3, 5, 7, r=1, p=None)
        qs = {P.q for P in odd_multiplicative_primes(spec2)}
        assert qs == {3, 5, 7}


class TestLegendre:
    def test_j_at_minus_one(self):
        assert legendre_j(Q.from_rational(-1)) == 1728

    def test_orbit_multiset(self):
        orbit = lambda_orbit(Q.from_rational(-1))
        values = sorted(x.coords[0] for x in orbit)
        assert values == [-1, -1, Fraction(1, 2), Fraction(1, 2), 2, 2]

    def test_j_from_lambda_mu(self):
        j = j_from_lambda_mu(Q.from_rational(2), Q.from_rational(-1))
        assert j == 1728

    def test_degenerate(self):
        with pytest.raises(DegenerateLambda):
            legendre_j(Q.zero())
        with pytest.raises(RelationViolated):
            j_from_lambda_mu(Q.one(), Q.one())

    @pytest.mark.parametrize("poly", ["x", "x^2 - 2", "-1, -1, 1"])
    def test_orbit_invariance_random(self, poly):
        field = make_field(poly)
        rng = random.Random(42)
        checked = 0
        while checked < 100:
            coords = [Fraction(rng.randint(-8, 8), rng.randint(1, 3))
                      for _ in range(field.degree)]
            lam = field.element(coords)
            if lam.is_zero() or lam == 1:
                continue
            j = legendre_j(lam)
            for member in lambda_orbit(lam):
                assert legendre_j(member) == j
            checked += 1

    def test_consistency_with_lambda_mu_form(self):
        rng = random.Random(9)
        for _ in range(50):
            val = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            if val in (0, 1):
                continue
            lam = Q.from_rational(val)
            assert j_from_lambda_mu(lam, 1 - lam) == legendre_j(lam)


class TestProofChainProperties:
    def test_j_bound_and_congruence_on_solutions(self):
        for field in (Q, K2):
            S = s_k(field)
            res = solve_sunit(field, S, 6)
            from afcheck.prime_ideals import valuation
            for sol in res.solutions:
                j = j_from_lambda_mu(sol.lam, sol.mu)
                for P in S:
                    vl, vm = sol.val_profile[P]
                    t = max(abs(vl), abs(vm))
                    vj = valuation(j, P) if not j.is_zero() else None
                    assert vj is not None
                    assert vj >= 8 * P.e - 2 * t
                    if t > 0:
                        assert (vj - (8 * P.e - 2 * (vl + vm))) % 3 == 0


class TestFixturePredicates:
    def test_trivial_2r(self):
        assert is_trivial_2r(Q.one(), Q.one(), Q.zero())
        assert is_trivial_2r(Q.one(), Q.from_rational(-1), Q.one())
        assert not is_trivial_2r(Q.from_rational(3), Q.from_rational(5),
                                 Q.from_rational(7))

    def test_trivial_pp2(self):
        s = K2.theta()
        assert is_trivial_pp2(K2.one(), K2.one(), s)
        assert is_trivial_pp2(K2.one(), K2.one(), -s)
        assert not is_trivial_pp2(K2.one(), K2.from_rational(2),
                                  K2.from_rational(3))

    def test_w_k_membership(self):
        assert in_w_k(Q, Q.from_rational(2), Q.from_rational(6), Q.one())
        assert not in_w_k(Q, Q.from_rational(3), Q.from_rational(5), Q.from_rational(7))
        assert in_w_k_prime(Q, Q.from_rational(2), Q.one())

    def test_at_most_one_divisible(self):
        primes = s_k(Q)
        good = [Q.from_rational(3), Q.from_rational(3), Q.from_rational(3)]
        assert at_most_one_divisible(primes, good)
        normalized = [Q.from_rational(2), Q.from_rational(3), Q.from_rational(5)]
        assert at_most_one_divisible(primes, normalized)
        violating = [Q.from_rational(2), Q.from_rational(2), Q.one()]
        assert not at_most_one_divisible(primes, violating)

    def test_remark_divisibility_after_normalization(self):
        # normalized true solutions: each prime over 2 divides at most one entry
        from afcheck.units import normalize_solution
        triples = [(1, 1, 1), (2, 2, 2), (3, 3, 3)]  # t+t = 2t, r=1
        for a, b, c in triples:
            ns = normalize_solution(Q, a, b, c)
            assert at_most_one_divisible(s_k(Q), [ns.a, ns.b, ns.c])
