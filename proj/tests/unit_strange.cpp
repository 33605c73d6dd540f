#include <doctest.h>

#include <cmath>

#include "qstrange/strange.hpp"

using namespace qstrange;

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_poly(0) == XPoly(Rational(1)));
    XPoly b1 = XPoly::from_coeffs({Rational(-1, 2), Rational(1)});
    CHECK(bernoulli_poly(1) == b1);
    XPoly b2 = XPoly::from_coeffs({Rational(1, 6), Rational(-1), Rational(1)});
    CHECK(bernoulli_poly(2) == b2);
    XPoly b3 = XPoly::from_coeffs({Rational(0), Rational(1, 2), Rational(-3, 2), Rational(1)});
    CHECK(bernoulli_poly(3) == b3);
    // B_m(0) = B_m(1) for m >= 2
    for (int m = 2; m <= 10; ++m)
        CHECK(bernoulli_poly(m).eval(Rational(0)) == bernoulli_poly(m).eval(Rational(1)));
}

TEST_CASE("exact L-values at negative integers") {
    PartialTheta zagier{character(CharKind::Zagier12), 1, 24, 1, Rational(-1, 2)};
    TwistedPeriodic psi = twist_at_root(zagier, 1);
    CHECK(psi.period == 24); // lcm(12, 1*24)
    CHECK(lvalue(psi, 1) == CycNum::from_rational(1, Rational(-2)));

    PartialTheta f1{character(CharKind::Family1, 1), 1, 4, 0, Rational(-2)};
    TwistedPeriodic chi4 = twist_at_root(f1, 1);
    CHECK(lvalue(chi4, 1) == CycNum::from_rational(1, Rational(-1, 2)));

    // the zero function has vanishing L-values
    TwistedPeriodic zero;
    zero.period = 6;
    zero.root_order = 1;
    zero.values.assign(6, CycNum::zero(1));
    for (int m = 0; m <= 4; ++m) CHECK(lvalue(zero, m).is_zero());
}

TEST_CASE("the twist is periodic, even and mean-zero on catalog entries") {
    auto check_twist = [](Family f, int k, int a, int N) {
        StrangeSpec spec = strange_spec(f, k, a);
        if (!validity_allows_root(spec.validity, N)) return;
        TwistedPeriodic psi = twist_at_root(spec.rhs, N);
        CHECK(psi.sum().is_zero());
        for (int n = 1; n < psi.period; ++n) CHECK(psi.at(psi.period - n) == psi.at(n));
        // periodicity across two periods by construction formula
        long c2 = static_cast<long>(spec.rhs.shift) * spec.rhs.shift;
        for (long n = 1; n <= psi.period; ++n) {
            long m = n + psi.period;
            const Rational& chi = spec.rhs.chi.at(m);
            CycNum expect = chi == 0 ? CycNum::zero(N)
                                     : CycNum::zeta_pow(N, (m * m - c2) / spec.rhs.divisor)
                                           .scaled(chi);
            CHECK(psi.at(m) == expect);
            CHECK(psi.at(m) == psi.at(n));
        }
    };
    check_twist(Family::Zagier, 1, 0, 2);
    check_twist(Family::Zagier, 1, 0, 3);
    check_twist(Family::Hikami, 2, 1, 3);
    check_twist(Family::Family1, 2, 0, 3);
    check_twist(Family::Family3, 2, 1, 5);
    check_twist(Family::Family4, 2, 0, 4);
    check_twist(Family::Family5, 3, 1, 3);
}

TEST_CASE("asymptotic right sides at the trivial root") {
    PartialTheta zagier{character(CharKind::Zagier12), 1, 24, 1, Rational(-1, 2)};
    TSeries r = rhs_asymptotic(zagier, 1, 0);
    CHECK(r.coeff(0) == CycNum::one(1));

    PartialTheta f1{character(CharKind::Family1, 1), 1, 4, 0, Rational(-2)};
    TSeries r1 = rhs_asymptotic(f1, 1, 0);
    CHECK(r1.coeff(0) == CycNum::one(1));

    PeriodicFunction zero_chi;
    zero_chi.period = 4;
    zero_chi.values.assign(4, Rational(0));
    CHECK(rhs_asymptotic({zero_chi, 1, 4, 0, Rational(1)}, 1, 3).is_zero());
}

TEST_CASE("nonzero mean is rejected as singular") {
    PeriodicFunction ones;
    ones.period = 2;
    ones.values = {Rational(1), Rational(1)};
    PartialTheta pt{ones, 1, 1, 0, Rational(1)};
    CHECK_THROWS_AS(rhs_asymptotic(pt, 1, 2), Error);
    try {
        rhs_asymptotic(pt, 1, 2);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::singular_expansion);
    }
}

TEST_CASE("strange checks pin the known values") {
    auto z1 = strange_check(Family::Zagier, 1, 0, 1, 0);
    REQUIRE(z1.status == RootStatus::Pass);
    CHECK(z1.lhs_coeffs[0] == CycNum::one(1));
    auto z2 = strange_check(Family::Zagier, 1, 0, 2, 0);
    REQUIRE(z2.status == RootStatus::Pass);
    CHECK(z2.lhs_coeffs[0] == CycNum::from_rational(2, Rational(3)));
    auto f1 = strange_check(Family::Family1, 1, 0, 1, 0);
    REQUIRE(f1.status == RootStatus::Pass);
    CHECK(f1.lhs_coeffs[0] == CycNum::one(1));
}

TEST_CASE("strange checks at higher order and roots") {
    CHECK(strange_check(Family::Zagier, 1, 0, 4, 3).status == RootStatus::Pass);
    CHECK(strange_check(Family::Hikami, 2, 0, 3, 3).status == RootStatus::Pass);
    CHECK(strange_check(Family::Family2, 2, 0, 3, 2).status == RootStatus::Pass);
    CHECK(strange_check(Family::Family4, 2, 1, 4, 2).status == RootStatus::Pass);
    CHECK(strange_check(Family::Family5, 2, 0, 3, 2).status == RootStatus::Pass);
}

TEST_CASE("consistency across t-orders") {
    for (int N : {1, 2, 3}) {
        auto lo = strange_check(Family::Zagier, 1, 0, N, 2);
        auto hi = strange_check(Family::Zagier, 1, 0, N, 4);
        REQUIRE(lo.status == RootStatus::Pass);
        REQUIRE(hi.status == RootStatus::Pass);
        for (size_t j = 0; j < lo.lhs_coeffs.size(); ++j) {
            CHECK(lo.lhs_coeffs[j] == hi.lhs_coeffs[j]);
            CHECK(lo.rhs_coeffs[j] == hi.rhs_coeffs[j]);
        }
    }
}

TEST_CASE("root rejection is principled") {
    CHECK(strange_check(Family::Family1, 1, 0, 2, 1).status == RootStatus::Rejected);
    CHECK(strange_check(Family::Family4, 2, 0, 3, 1).status == RootStatus::Rejected);
    // family3 at k = 1 allows every N not congruent to 2 mod 4
    CHECK(strange_check(Family::Family3, 1, 0, 2, 1).status == RootStatus::Rejected);
    CHECK(strange_check(Family::Family3, 1, 0, 4, 2).status == RootStatus::Pass);
    // at k >= 2 the declared domain is odd roots only
    CHECK(strange_check(Family::Family3, 2, 0, 4, 1).status == RootStatus::Rejected);
}

TEST_CASE("quantum identities") {
    auto q1 = quantum_check(QuantumId::Fam1VsFam2, 1, 0, 3);
    REQUIRE(q1.status == RootStatus::Pass);
    // pinned value 3 - 2 zeta_3
    CycNum expect = CycNum::from_rational(3, Rational(3)) - CycNum::zeta_pow(3, 1).scaled(Rational(2));
    CHECK(q1.lhs_coeffs[0] == expect);
    CHECK(q1.rhs_coeffs[0] == expect);

    auto q0 = quantum_check(QuantumId::Fam1VsFam2, 1, 0, 1);
    REQUIRE(q0.status == RootStatus::Pass);
    CHECK(q0.lhs_coeffs[0] == CycNum::one(1));

    CHECK(quantum_check(QuantumId::Fam5VsFam3, 2, 1, 5).status == RootStatus::Pass);
    CHECK(quantum_check(QuantumId::Fam5VsHikami, 2, 0, 3).status == RootStatus::Pass);
    CHECK(quantum_check(QuantumId::Fam1VsFam2, 1, 0, 2).status == RootStatus::Rejected);
    CHECK(quantum_check(QuantumId::Fam5VsFam3, 1, 0, 4).status == RootStatus::Rejected);
}

TEST_CASE("floating-point oracle for the L-value expansion") {
    // At tau = t/M^2 with t = 0.05 the truncated asymptotic series with m <= 5
    // terms matches direct numerical summation to 1e-6 (the exact engine never
    // touches floating point; this cross-checks the Bernoulli formula).
    auto oracle = [](const PeriodicFunction& chi, int m_terms) {
        double t = 0.05;
        double tau = t / (static_cast<double>(chi.period) * chi.period);
        double numeric = 0.0;
        for (long n = 1; static_cast<double>(n) * n * tau < 60.0; ++n) {
            double c = chi.at(n).get_d();
            if (c != 0.0) numeric += static_cast<double>(n) * c * std::exp(-static_cast<double>(n) * n * tau);
        }
        PartialTheta pt{chi, 1, 1, 0, Rational(1)};
        TwistedPeriodic psi = twist_at_root(pt, 1);
        double series = 0.0, factorial = 1.0, tpow = 1.0;
        for (int j = 0; j <= m_terms; ++j) {
            if (j > 0) {
                factorial *= j;
                tpow *= -tau;
            }
            series += lvalue(psi, 2 * j + 1).rational_part().get_d() * tpow / factorial;
        }
        return std::fabs(numeric - series);
    };
    CHECK(oracle(character(CharKind::Zagier12), 5) < 1e-6);
    CHECK(oracle(character(CharKind::Family1, 1), 5) < 1e-6);
}
