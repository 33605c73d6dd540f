// Acceptance suite: every check the library must pass, at full order, with
// one line of output per criterion. All comparisons are exact except the
// floating-point oracle of criterion 8 (tolerance 1e-6).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "qstrange/identities.hpp"
#include "qstrange/strange.hpp"

using namespace qstrange;

namespace {

int failures = 0;
double max_single_check_s = 0.0;

void criterion(int number, const std::string& what, const std::function<bool()>& run) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = run();
    } catch (const std::exception& e) {
        ok = false;
        note = std::string(" [exception: ") + e.what() + "]";
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!ok) ++failures;
    std::printf("%s  criterion %d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
                secs, note.c_str());
    std::fflush(stdout);
}

Monomial mq(long c, int xe, int qe) { return Monomial(Rational(c), xe, qe); }

bool timed_strange(Family f, int k, int a, int N, int K) {
    auto start = std::chrono::steady_clock::now();
    StrangeReport rep = strange_check(f, k, a, N, K);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    max_single_check_s = std::max(max_single_check_s, secs);
    if (rep.status != RootStatus::Pass) {
        std::printf("     strange %s k=%d a=%d N=%d: %s %s\n", family_name(f), k, a, N,
                    root_status_name(rep.status), rep.message.c_str());
        return false;
    }
    return secs < 60.0;
}

std::vector<long> partition_counts(int modulus, const std::vector<int>& residues, int up_to) {
    std::vector<long> dp(static_cast<size_t>(up_to) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= up_to; ++part) {
        bool ok = false;
        for (int r : residues)
            if (part % modulus == ((r % modulus) + modulus) % modulus) ok = true;
        if (!ok) continue;
        for (int m = part; m <= up_to; ++m)
            dp[static_cast<size_t>(m)] += dp[static_cast<size_t>(m - part)];
    }
    return dp;
}

} // namespace

int main() {
    // 1. the eight displayed Slater specializations from the base-pair table
    criterion(1, "eight Slater base pairs verify for n <= 8 at order 30", [] {
        for (BasePair b : all_base_pairs()) {
            auto rep = verify_pair(base_pair(b), 8, 30);
            if (!rep.ok) {
                std::printf("     %s fails at n=%d\n", base_pair_name(b), rep.fail_n);
                return false;
            }
        }
        return true;
    });

    // 2. transform lemmas compose; inversion round-trips on the Hikami pair
    criterion(2, "key lemma = composition of the two shifts; inversion round-trips", [] {
        for (BasePair which : {BasePair::HikamiX2, BasePair::Family3X2}) {
            BaileyPair p = base_pair(which);
            BaileyPair key = shift_lemma(p, ShiftKind::Key);
            BaileyPair parts =
                shift_lemma(shift_lemma(p, ShiftKind::OneMinusQn), ShiftKind::IndexShift);
            for (int n = 0; n <= 5; ++n) {
                if (!(key.alpha.at(n, 25) == parts.alpha.at(n, 25))) return false;
                if (!(key.beta.at(n, 25) == parts.beta.at(n, 25))) return false;
            }
        }
        BaileyPair h = build_family_pair(Family::Hikami, 2, 1);
        PairSeq alpha = invert_pair(h.beta, h.rel_param, h.base);
        for (int n = 0; n <= 4; ++n)
            if (!(alpha.at(n, 25) == h.alpha.at(n, 25))) return false;
        return true;
    });

    // 3. iterated family pairs for every family, k <= 3, every legal a
    criterion(3, "family pairs verify and closed beta = iterated beta (k <= 3, order 25)", [] {
        for (Family f : {Family::Hikami, Family::Family1, Family::Family2, Family::Family3,
                         Family::Family4, Family::Family5}) {
            int klo = (f == Family::Family5) ? 2 : 1;
            for (int k = klo; k <= 3; ++k) {
                auto [alo, ahi] = family_a_range(f, k);
                if (!family_uses_a(f)) alo = ahi = 0;
                for (int a = alo; a <= ahi; ++a) {
                    BaileyPair p = build_family_pair(f, k, a);
                    auto rep = verify_pair(p, 4, 25);
                    if (!rep.ok) {
                        std::printf("     %s k=%d a=%d fails verify_pair at n=%d\n",
                                    family_name(f), k, a, rep.fail_n);
                        return false;
                    }
                    for (int n = 0; n <= 4; ++n)
                        if (!(closed_beta(f, k, a, n, 25) == p.beta.at(n, 25))) {
                            std::printf("     %s k=%d a=%d closed beta differs at n=%d\n",
                                        family_name(f), k, a, n);
                            return false;
                        }
                }
            }
        }
        // this also pins the resolved family3 sign
        for (int k = 1; k <= 3; ++k)
            for (int a = 0; a <= k - 1; ++a)
                if (family3_alpha_sign(k, a) != -1) return false;
        return true;
    });

    // 4. formal identities at full order, with the partition oracle
    criterion(4, "Andrews-Gordon, AG variant, section-5 corollaries, binomial lemma", [] {
        for (int k = 2; k <= 4; ++k)
            for (int i = 1; i <= k; ++i)
                if (!verify_identity("andrews_gordon", k, i, 50).ok) return false;
        for (int k = 1; k <= 4; ++k)
            for (int a = 0; a <= k - 1; ++a) {
                auto sides = build_identity("ag_variant", k, a, 40);
                if (sides.sides.size() != 3) return false;
                if (!(sides.sides[0] == sides.sides[1])) return false;
                if (!(sides.sides[1] == sides.sides[2])) return false;
            }
        for (int k = 2; k <= 3; ++k) {
            if (!verify_identity("family1_rr", k, 0, 40).ok) return false;
            if (!verify_identity("family2_rr", k, 0, 40).ok) return false;
            for (int a = 0; a <= k - 1; ++a) {
                if (!verify_identity("family3_rr", k, a, 40).ok) return false;
                if (!verify_identity("family4_rr", k, a, 40).ok) return false;
            }
        }
        for (int k = 0; k <= 6; ++k) {
            if (!verify_identity("qbinom_gen", k, 0, 25).ok) return false;
            if (!verify_identity("qbinom_gen_shifted", k, 0, 25).ok) return false;
        }
        // independent oracle: partition counts reproduce the k = 2 product sides
        auto i2 = build_identity("andrews_gordon", 2, 2, 30);
        auto c14 = partition_counts(5, {1, 4}, 30);
        auto i1 = build_identity("andrews_gordon", 2, 1, 30);
        auto c23 = partition_counts(5, {2, 3}, 30);
        for (int d = 0; d <= 30; ++d) {
            if (i2.sides[1].coefficient(d).coeff(0) != c14[static_cast<size_t>(d)]) return false;
            if (i1.sides[1].coefficient(d).coeff(0) != c23[static_cast<size_t>(d)]) return false;
        }
        return true;
    });

    // 5. x-identities and their differentiated sum-of-tails forms
    criterion(5, "pre-strange x-identities and sum-of-tails forms at order 30", [] {
        for (const char* name :
             {"x_zagier", "x_family1", "x_family2", "x_family3", "x_family4"}) {
            if (!verify_identity(name, 1, 0, 30).ok) {
                std::printf("     %s fails\n", name);
                return false;
            }
        }
        for (const char* name :
             {"sot_zagier", "sot_family1", "sot_family2", "sot_family3", "sot_family4"}) {
            auto sides = build_identity(name, 1, 0, 30);
            for (size_t i = 0; i + 1 < sides.sides.size(); ++i)
                if (!(sides.sides[i] == sides.sides[i + 1])) {
                    std::printf("     %s: side %zu differs\n", name, i);
                    return false;
                }
        }
        return true;
    });

    // 6. strange identities, exactly, at t-order 4
    criterion(6, "strange identities at roots of unity (t-order 4)", [] {
        bool ok = true;
        for (int N : {1, 2, 3, 4, 5}) ok = ok && timed_strange(Family::Zagier, 1, 0, N, 4);
        for (int k = 1; k <= 3; ++k)
            for (int a = 0; a <= k - 1; ++a)
                for (int N : {1, 2, 3}) ok = ok && timed_strange(Family::Hikami, k, a, N, 4);
        for (int k = 1; k <= 3; ++k)
            for (int N : {1, 3, 5}) ok = ok && timed_strange(Family::Family1, k, 0, N, 4);
        for (int k = 1; k <= 2; ++k)
            for (int N : {1, 3, 5}) ok = ok && timed_strange(Family::Family2, k, 0, N, 4);
        for (int k = 1; k <= 2; ++k)
            for (int a = 0; a <= k - 1; ++a)
                for (int N : {1, 3, 5}) ok = ok && timed_strange(Family::Family3, k, a, N, 4);
        for (int k = 1; k <= 2; ++k)
            for (int a = 0; a <= k - 1; ++a)
                for (int N : {2, 4}) ok = ok && timed_strange(Family::Family4, k, a, N, 4);
        for (int k = 2; k <= 3; ++k)
            for (int a = 0; a <= k - 2; ++a)
                for (int N : {1, 3}) ok = ok && timed_strange(Family::Family5, k, a, N, 4);
        std::printf("     slowest individual check: %.2fs\n", max_single_check_s);
        return ok;
    });

    // 7. quantum identities, exactly, in Q(zeta_N)
    criterion(7, "quantum identities at odd roots, with the pinned value 3 - 2 zeta_3", [] {
        for (int k = 1; k <= 2; ++k)
            for (int N : {1, 3, 5})
                if (quantum_check(QuantumId::Fam1VsFam2, k, 0, N).status != RootStatus::Pass)
                    return false;
        for (QuantumId id : {QuantumId::Fam5VsFam3, QuantumId::Fam5VsHikami})
            for (int k = 1; k <= 2; ++k)
                for (int a = 0; a <= k - 1; ++a)
                    for (int N : {1, 3, 5})
                        if (quantum_check(id, k, a, N).status != RootStatus::Pass) return false;
        StrangeReport pinned = quantum_check(QuantumId::Fam1VsFam2, 1, 0, 3);
        CycNum expect =
            CycNum::from_rational(3, Rational(3)) - CycNum::zeta_pow(3, 1).scaled(Rational(2));
        return pinned.status == RootStatus::Pass && pinned.lhs_coeffs[0] == expect &&
               pinned.rhs_coeffs[0] == expect;
    });

    // 8. floating-point oracle for the L-value machinery (tolerance 1e-6)
    criterion(8, "L-value expansion vs numerical summation (chi_12, chi_4, m <= 5)", [] {
        auto oracle = [](const PeriodicFunction& chi) {
            double t = 0.05;
            double tau = t / (static_cast<double>(chi.period) * chi.period);
            double numeric = 0.0;
            for (long n = 1; static_cast<double>(n) * n * tau < 60.0; ++n) {
                double c = chi.at(n).get_d();
                if (c != 0.0)
                    numeric +=
                        static_cast<double>(n) * c * std::exp(-static_cast<double>(n) * n * tau);
            }
            TwistedPeriodic psi = twist_at_root({chi, 1, 1, 0, Rational(1)}, 1);
            double series = 0.0, factorial = 1.0, tpow = 1.0;
            for (int j = 0; j <= 5; ++j) {
                if (j > 0) {
                    factorial *= j;
                    tpow *= -tau;
                }
                series += lvalue(psi, 2 * j + 1).rational_part().get_d() * tpow / factorial;
            }
            return std::fabs(numeric - series);
        };
        return oracle(character(CharKind::Zagier12)) < 1e-6 &&
               oracle(character(CharKind::Family1, 1)) < 1e-6;
    });

    // 9. pinned values, exactly
    criterion(9, "known values: L(-1, chi_12) = -2 and the small strange values", [] {
        TwistedPeriodic chi12 =
            twist_at_root({character(CharKind::Zagier12), 1, 24, 1, Rational(1)}, 1);
        if (!(lvalue(chi12, 1) == CycNum::from_rational(1, Rational(-2)))) return false;
        auto z1 = strange_check(Family::Zagier, 1, 0, 1, 0);
        if (z1.status != RootStatus::Pass || !(z1.lhs_coeffs[0] == CycNum::one(1))) return false;
        if (!(z1.rhs_coeffs[0] == CycNum::one(1))) return false;
        auto z2 = strange_check(Family::Zagier, 1, 0, 2, 0);
        CycNum three = CycNum::from_rational(2, Rational(3));
        if (z2.status != RootStatus::Pass || !(z2.lhs_coeffs[0] == three)) return false;
        if (!(z2.rhs_coeffs[0] == three)) return false;
        auto f1 = strange_check(Family::Family1, 1, 0, 1, 0);
        if (f1.status != RootStatus::Pass || !(f1.lhs_coeffs[0] == CycNum::one(1))) return false;
        return f1.rhs_coeffs[0] == CycNum::one(1);
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE OK",
                failures);
    return failures ? 1 : 0;
}
