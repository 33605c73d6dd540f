#include "qstrange/identities.hpp"

#include <functional>

namespace qstrange {

namespace {

Monomial mono(long c, int xe, int qe) { return Monomial(Rational(c), xe, qe); }

long tri(long n) { return n * (n + 1) / 2; }

// ---- Andrews-Gordon ----

QSeries ag_lhs(int k, int i, int order) {
    // sum over 0 <= n_1 <= ... <= n_{k-1} of
    //   q^(n_1^2+...+n_{k-1}^2 + n_1+...+n_{k-i}) / ((q)_{n_{k-1}-n_{k-2}} ... (q)_{n_1})
    QSeries acc(order);
    std::vector<int> n(static_cast<size_t>(k - 1), 0);
    std::function<void(int, long)> rec = [&](int idx, long e) {
        if (idx < 0) {
            QSeries t = QSeries::term(Rational(1), 0, static_cast<int>(e), order);
            t = t * poch_inv(mono(1, 0, 1), n[0], 1, order);
            for (int j = 1; j < k - 1; ++j)
                t = t * poch_inv(mono(1, 0, 1), n[j] - n[j - 1], 1, order);
            acc += t;
            return;
        }
        int hi = (idx == k - 2) ? order : n[idx + 1];
        for (int v = 0; v <= hi; ++v) {
            long mine = static_cast<long>(v) * v + ((idx + 1 <= k - i) ? v : 0);
            if (e + mine > order) break;
            n[idx] = v;
            rec(idx - 1, e + mine);
        }
    };
    rec(k - 2, 0);
    return acc;
}

QSeries restricted_product(int modulus, std::vector<int> excluded, int order) {
    // prod over m >= 1 with (m mod modulus) not excluded of 1/(1-q^m)
    for (auto& e : excluded) e = ((e % modulus) + modulus) % modulus;
    QSeries r = QSeries::one(order);
    for (int m = 1; m <= order; ++m) {
        int res = m % modulus;
        bool skip = false;
        for (int e : excluded)
            if (res == e) skip = true;
        if (!skip) r = r * geometric_inverse(mono(1, 0, m), order);
    }
    return r;
}

// ---- corollary multisums (the n_k variable eliminated) ----

MultisumSpec corollary_spec(Family f, int k, int a) {
    MultisumSpec s;
    s.depth = k - 1;
    s.base = (f == Family::Family2 || f == Family::Family3) ? 2 : 1;
    s.chain = true;
    s.delta_a = (f == Family::Hikami || f == Family::Family3 || f == Family::Family4) ? a : 0;
    int u2 = 2 * s.base;
    s.quad2.assign(k - 1, u2);
    s.lin2.assign(k - 1, 0);
    s.xw.assign(k - 1, 0);
    int lin_from = (f == Family::Family1 || f == Family::Family2) ? 0 : a;
    for (int i = lin_from; i <= k - 2; ++i) s.lin2[i] = u2;
    // 1/(Q;Q)_{n_{k-1}}
    s.factors.push_back({mono(1, 0, s.base), s.base, k - 2, 1, 0, true});
    int d0 = (a == 0) ? 1 : 0;
    switch (f) {
        case Family::Family1:
            s.factors.push_back({mono(-1, 0, 1), 1, 0, 1, 0, true});
            break;
        case Family::Family2:
            s.factors.push_back({mono(1, 0, 1), 2, 0, 1, 0, false});
            s.factors.push_back({mono(-1, 0, 1), 1, 0, 2, 1, true});
            break;
        case Family::Family3:
            s.factors.push_back({mono(-1, 0, 1), 2, 0, 1, d0, true});
            break;
        case Family::Family4:
            s.factors.push_back({mono(-1, 0, 0), 1, 0, 1, d0, false});
            s.factors.push_back({mono(1, 0, 1), 2, 0, 1, d0, true});
            break;
        default:
            break;
    }
    s.label = std::string(family_name(f)) + "-corollary";
    return s;
}

// ---- x-identities ----

struct K1Display {
    std::function<QSeries(int n, int order)> P;
    std::function<QSeries(int order)> Pinf;
    // bilateral right side: sign^n x^(A n + off) q^(quadratic) (1 + bracket)
    std::function<QSeries(int order)> rhs;
};

K1Display k1_display(Family f) {
    K1Display d;
    auto bilateral = [](int order, int sgn, int A, std::function<long(long)> E,
                        std::function<Monomial(long)> bracket) {
        QSeries acc(order);
        for (long n = 0; E(n) <= order; ++n) {
            QSeries t = QSeries::term(Rational(n % 2 ? sgn : 1), static_cast<int>(A * n),
                                      static_cast<int>(E(n)), order);
            Monomial b = bracket(n);
            if (!b.is_zero() && b.ring_q_deg() + E(n) <= order)
                t += b.as_qseries(order).times_term(Rational(n % 2 ? sgn : 1), A * static_cast<int>(n),
                                                    static_cast<int>(E(n)));
            acc += t;
        }
        return acc;
    };
    switch (f) {
        case Family::Zagier:
        case Family::Hikami:
            d.P = [](int n, int order) { return poch(mono(1, 1, 1), n, 1, order); };
            d.Pinf = [](int order) { return poch_inf(mono(1, 1, 1), 1, order); };
            d.rhs = [bilateral](int order) {
                return bilateral(order, -1, 3, [](long n) { return n * (3 * n + 1) / 2; },
                                 [](long n) { return mono(-1, 2, static_cast<int>(2 * n + 1)); });
            };
            return d;
        case Family::Family1:
            d.P = [](int n, int order) {
                return poch(mono(1, 1, 1), n, 1, order) * poch_inv(mono(-1, 1, 1), n, 1, order);
            };
            d.Pinf = [](int order) {
                return poch_inf(mono(1, 1, 1), 1, order) * poch_inf_inv(mono(-1, 1, 1), 1, order);
            };
            d.rhs = [bilateral](int order) {
                return bilateral(order, -1, 2, [](long n) { return n * n; },
                                 [](long n) { return mono(-1, 2, static_cast<int>(2 * n + 1)); });
            };
            return d;
        case Family::Family2:
            d.P = [](int n, int order) {
                return poch(mono(1, 0, 1), n, 2, order) * poch(mono(1, 1, 2), n, 2, order) *
                       poch_inv(mono(-1, 1, 1), 2 * n + 1, 1, order);
            };
            d.Pinf = [](int order) {
                return poch_inf(mono(1, 0, 1), 2, order) * poch_inf(mono(1, 1, 2), 2, order) *
                       poch_inf_inv(mono(-1, 1, 1), 1, order);
            };
            d.rhs = [bilateral](int order) {
                return bilateral(order, -1, 1, [](long n) { return n * n; },
                                 [](long n) { return mono(-1, 1, static_cast<int>(2 * n + 1)); });
            };
            return d;
        case Family::Family3:
            d.P = [](int n, int order) {
                return poch(mono(1, 1, 2), n, 2, order) * poch_inv(mono(-1, 1, 1), n + 1, 2, order);
            };
            d.Pinf = [](int order) {
                return poch_inf(mono(1, 1, 2), 2, order) * poch_inf_inv(mono(-1, 1, 1), 2, order);
            };
            d.rhs = [bilateral](int order) {
                return bilateral(order, -1, 2, [](long n) { return 2 * n * n + n; },
                                 [](long n) { return mono(-1, 1, static_cast<int>(2 * n + 1)); });
            };
            return d;
        case Family::Family4:
            d.P = [](int n, int order) {
                return poch(mono(-1, 0, 1), n, 1, order) * poch(mono(1, 1, 1), n, 1, order) *
                       poch_inv(mono(1, 2, 1), n + 1, 2, order);
            };
            d.Pinf = [](int order) {
                return poch_inf(mono(-1, 0, 1), 1, order) * poch_inf(mono(1, 1, 1), 1, order) *
                       poch_inf_inv(mono(1, 2, 1), 2, order);
            };
            d.rhs = [bilateral](int order) {
                return bilateral(order, 1, 1, [](long n) { return tri(n); },
                                 [](long) { return Monomial::zero(); });
            };
            return d;
        default:
            raise(Errc::unknown_identity, "no k = 1 display for this family");
    }
}

// (1-x) sum_n (P_n - P_inf) x^n + P_inf, with exact truncation justified by
// the valuation of the tails
QSeries k1_tails_lhs(const K1Display& d, int order) {
    QSeries pinf = d.Pinf(order);
    QSeries acc(order);
    for (int n = 0;; ++n) {
        QSeries diff = d.P(n, order) - pinf;
        int v = diff.valuation();
        if (v <= n) raise(Errc::internal_error, "tail valuation below cutoff bound");
        if (v > order) break;
        acc += diff.times_term(Rational(1), n, 0);
    }
    QSeries one_minus_x = QSeries::one(order) - QSeries::term(Rational(1), 1, 0, order);
    return acc * one_minus_x + pinf;
}

// bilateral alpha-side form for k >= 2
QSeries alpha_form(Family f, int k, int a, int order) {
    QSeries acc(order);
    for (long n = 0;; ++n) {
        long E = 0, A = 0;
        int sgn = (n % 2 ? -1 : 1);
        Monomial bracket = Monomial::zero();
        switch (f) {
            case Family::Zagier:
            case Family::Hikami:
                E = tri(n) + (a + 1) * n * n + (k - a - 1) * (n * n + n);
                A = (2L * k + 1) * n;
                bracket = mono(-1, 2 * (a + 1), static_cast<int>((a + 1) * (2 * n + 1)));
                break;
            case Family::Family1:
                E = static_cast<long>(k) * n * n + (k - 1) * n;
                A = 2L * k * n;
                bracket = mono(-1, 2, static_cast<int>(2 * n + 1));
                break;
            case Family::Family2:
                E = (2L * k - 1) * n * n + (2L * k - 2) * n;
                A = (2L * k - 1) * n;
                bracket = mono(-1, 1, static_cast<int>(2 * n + 1));
                break;
            case Family::Family3:
                E = 2L * k * n * n + (2L * k - 2 * a - 1) * n;
                A = 2L * k * n;
                bracket = mono(-1, 2 * a + 1, static_cast<int>((2 * a + 1) * (2 * n + 1)));
                break;
            case Family::Family4:
                E = tri(n) + static_cast<long>(a) * n * n + (k - a - 1) * (n * n + n);
                A = (2L * k - 1) * n;
                sgn = 1;
                bracket = mono(1, 2 * a, static_cast<int>(a * (2 * n + 1)));
                break;
            default:
                raise(Errc::unknown_identity, "no alpha form for this family");
        }
        if (E > order) break;
        Rational c(n % 2 ? sgn : 1);
        QSeries t = QSeries::term(c, static_cast<int>(A), static_cast<int>(E), order);
        if (!bracket.is_zero() && E + bracket.ring_q_deg() <= order)
            t += bracket.as_qseries(order).times_term(c, static_cast<int>(A), static_cast<int>(E));
        acc += t;
    }
    return acc;
}

// partial-theta form with the family's x-exponent rule (where faithful)
std::optional<QSeries> pt_x_form(Family f, int k, int a, int order) {
    PartialTheta pt;
    XRule rule{2};
    switch (f) {
        case Family::Zagier:
        case Family::Hikami:
            pt = {character(CharKind::Hikami, k, a), 0, 8 * (2 * k + 1), 2 * k - 2 * a - 1,
                  Rational(1)};
            break;
        case Family::Family1:
            if (k == 1) return std::nullopt; // residue classes collapse at k = 1
            pt = {character(CharKind::Family1, k), 0, 4 * k, k - 1, Rational(1)};
            rule.e = 1;
            break;
        case Family::Family2:
            if (k == 1) return std::nullopt;
            pt = {character(CharKind::Family2, k), 0, 8 * k - 4, 2 * k - 2, Rational(1)};
            break;
        case Family::Family3:
            pt = {character(CharKind::Family3, k, a), 0, 8 * k, 2 * k - 2 * a - 1, Rational(1)};
            break;
        case Family::Family4:
            if (a == 0 && k >= 2) return std::nullopt; // (1 + delta_{a,0}) collapse
            pt = {character(CharKind::Family4, k, a), 0, 8 * (2 * k - 1), 2 * k - 2 * a - 1,
                  Rational(1)};
            break;
        default:
            return std::nullopt;
    }
    return partial_theta_qseries(pt, rule, order, 0);
}

} // namespace

std::pair<QSeries, QSeries> x_identity(Family f, int k, int a, int order) {
    if (f == Family::Zagier) return x_identity(Family::Hikami, 1, 0, order);
    if (k == 1 && f != Family::Hikami) {
        if (f == Family::Family5) raise(Errc::unknown_identity, "no x-identity for family5");
        K1Display d = k1_display(f);
        return {k1_tails_lhs(d, order), d.rhs(order)};
    }
    if (f == Family::Family5) raise(Errc::unknown_identity, "no x-identity for family5");

    int b = (f == Family::Family2 || f == Family::Family3) ? 2 : 1;
    Monomial xq(Rational(1), 1, b);
    QSeries pinf = poch_inf(xq, b, order);

    // tails: (1-x) sum_{n_k} ((xQ;Q)_{n_k} - (xQ;Q)_inf) x^{n_k} [inner core]
    MultisumSpec core = closed_beta_spec(f, k, a);
    core.factors.erase(core.factors.begin()); // drop 1/(Q;Q)_{n_k}
    QSeries tails(order);
    for (int nk = 0;; ++nk) {
        QSeries diff = poch(xq, nk, b, order) - pinf;
        int v = diff.valuation();
        if (v <= nk) raise(Errc::internal_error, "tail valuation below cutoff bound");
        if (v > order) break;
        QSeries inner = multisum_qseries(core, nk, order);
        if (inner.is_zero()) continue;
        tails += (diff * inner).times_term(Rational(1), nk, 0);
    }
    QSeries one_minus_x = QSeries::one(order) - QSeries::term(Rational(1), 1, 0, order);
    tails = tails * one_minus_x;

    // product term: (xQ;Q)_inf sum over n_1..n_{k-1} with 1/(xQ;Q)_{n_{k-1}}
    QSeries prod(order);
    if (k == 1) {
        prod = pinf; // hikami k = 1: the eliminated sum collapses to 1
    } else {
        // depth-(k-1) spec: the inner part of beta with 1/(xQ;Q)_{n_{k-1}} appended
        MultisumSpec ps;
        ps.depth = k - 1;
        ps.base = b;
        ps.chain = true;
        ps.delta_a = (a <= k - 2) ? a : 0;
        ps.quad2.assign(core.quad2.begin(), core.quad2.end() - 1);
        ps.lin2.assign(core.lin2.begin(), core.lin2.end() - 1);
        ps.xw.assign(static_cast<size_t>(k - 1), 2);
        ps.factors = core.factors; // inner x-aware factors (vars < k-1 only)
        for (const auto& fct : ps.factors)
            if (fct.var >= k - 1) raise(Errc::internal_error, "outer factor left in product term");
        ps.factors.push_back({xq, b, k - 2, 1, 0, true});
        QSeries s(order);
        for (int v = 0;; ++v) {
            long e = (static_cast<long>(ps.quad2[k - 2]) * v * v + ps.lin2[k - 2] * v) / 2;
            if (e > order) break;
            QSeries inner = multisum_qseries(ps, v, order);
            if (inner.is_zero()) continue;
            int xextra = v - ((a == k - 1 && v > 0) ? 1 : 0);
            s += inner.times_term(Rational(1), xextra, 0);
        }
        prod = pinf * s;
    }
    return {prod + tails, alpha_form(f, k, a, order)};
}

std::pair<QSeries, QSeries> qbinom_generating(int k, bool shifted, const Monomial& sub,
                                              int order) {
    if (k < 0) raise(Errc::bad_params, "k must be >= 0");
    int d = sub.ring_q_deg();
    if (d < 1) raise(Errc::bad_params, "substitution monomial needs positive q-degree");
    QSeries lhs(order);
    for (long n = 0; n * d <= order; ++n) {
        QSeries bin = qbinom(n + (shifted ? 1 : 0), k, 1, order);
        if (bin.is_zero()) continue;
        Monomial m = sub.pow(static_cast<int>(n));
        lhs += bin.times_term(m.coeff, m.x_exp, m.ring_q_deg());
    }
    int e = k - ((shifted && k != 0) ? 1 : 0);
    Monomial head = sub.pow(e);
    QSeries rhs = poch_inv(sub, k + 1, 1, order).times_term(head.coeff, head.x_exp,
                                                            head.ring_q_deg());
    return {lhs, rhs};
}

namespace {

// ---- sum-of-tails identities (x-derivatives of the k = 1 x-identities) ----

QSeries tails_sum(const std::function<QSeries(int, int)>& P, const QSeries& pinf, int order) {
    QSeries acc(order);
    for (int n = 0;; ++n) {
        QSeries diff = P(n, order) - pinf;
        int v = diff.valuation();
        if (v <= n) raise(Errc::internal_error, "tail valuation below cutoff bound");
        if (v > order) break;
        acc += diff;
    }
    return acc;
}

IdentitySides sot_sides(Family f, int order) {
    auto [xl, xr] = x_identity(f, 1, 0, order);
    QSeries derived(order);
    QSeries rebuilt(order);
    QSeries pt_side(order);

    auto d_at_1 = [](const QSeries& s) { return s.differentiate_x().x_to_one(); };

    switch (f) {
        case Family::Zagier: {
            // replace x by x^2, multiply by x, then d/dx at x = 1: f(1) + 2 f'(1)
            derived = -(xl.x_to_one() + d_at_1(xl).scaled(Rational(2)));
            QSeries qinf = poch_inf(mono(1, 0, 1), 1, order);
            QSeries t = tails_sum(
                [](int n, int order_) { return poch(mono(1, 0, 1), n, 1, order_); }, qinf, order);
            rebuilt = t.scaled(Rational(2)) +
                      qinf * (lambert_sum(1, 1, 1, order).scaled(Rational(2)) -
                              QSeries::one(order));
            pt_side = partial_theta_qseries(
                {character(CharKind::Zagier12), 1, 24, 1, Rational(-1)}, std::nullopt, order);
            break;
        }
        case Family::Family1: {
            derived = d_at_1(xl);
            QSeries rinf = poch_inf(mono(1, 0, 1), 1, order) * poch_inf_inv(mono(-1, 0, 1), 1, order);
            QSeries t = tails_sum(
                [](int n, int order_) {
                    return poch(mono(1, 0, 1), n, 1, order_) *
                           poch_inv(mono(-1, 0, 1), n, 1, order_);
                },
                rinf, order);
            rebuilt = -t - rinf * lambert_sum(1, 2, 1, order).scaled(Rational(2));
            pt_side = partial_theta_qseries({character(CharKind::Family1, 1), 1, 4, 0, Rational(2)},
                                            std::nullopt, order);
            break;
        }
        case Family::Family2: {
            derived = d_at_1(xl);
            QSeries rinf = poch_inf(mono(1, 0, 1), 1, order) * poch_inf_inv(mono(-1, 0, 1), 1, order);
            QSeries t = tails_sum(
                [](int n, int order_) {
                    return poch(mono(1, 0, 1), 2 * n, 1, order_) *
                           poch_inv(mono(-1, 0, 1), 2 * n + 1, 1, order_);
                },
                rinf, order);
            rebuilt = -t - rinf * lambert_sum(1, 2, 1, order);
            pt_side = partial_theta_qseries({character(CharKind::Family1, 1), 1, 4, 0, Rational(1)},
                                            std::nullopt, order);
            break;
        }
        case Family::Family3: {
            QSeries rinf =
                poch_inf(mono(1, 0, 2), 2, order) * poch_inf_inv(mono(-1, 0, 1), 2, order);
            derived = d_at_1(xl) + rinf.scaled(Rational(1, 2));
            QSeries t = tails_sum(
                [](int n, int order_) {
                    return poch(mono(1, 0, 2), n, 2, order_) *
                           poch_inv(mono(-1, 0, 1), n + 1, 2, order_);
                },
                rinf, order);
            QSeries lam_odd_minus =
                lambert_sum(1, 1, -1, order) - lambert_sum(2, 2, -1, order);
            rebuilt = -t - rinf * (lambert_sum(2, 2, 1, order) + lam_odd_minus -
                                   QSeries::constant(Rational(1, 2), order));
            pt_side = partial_theta_qseries(
                {character(CharKind::Family3, 1, 0), 1, 8, 1, Rational(1, 2)}, std::nullopt, order);
            break;
        }
        case Family::Family4: {
            QSeries rinf =
                poch_inf(mono(1, 0, 2), 2, order) * poch_inf_inv(mono(1, 0, 1), 2, order);
            derived = d_at_1(xl) + rinf.scaled(Rational(1, 2));
            QSeries t = tails_sum(
                [](int n, int order_) {
                    return poch(mono(1, 0, 2), n, 2, order_) *
                           poch_inv(mono(1, 0, 1), n + 1, 2, order_);
                },
                rinf, order);
            QSeries lam_odd_plus = lambert_sum(1, 1, 1, order) - lambert_sum(2, 2, 1, order);
            rebuilt = -t + rinf * (QSeries::constant(Rational(1, 2), order) -
                                   lambert_sum(1, 1, 1, order) + lam_odd_plus.scaled(Rational(2)));
            pt_side = partial_theta_qseries(
                {character(CharKind::Family4, 1, 0), 1, 8, 1, Rational(1, 2)}, std::nullopt, order);
            break;
        }
        default:
            raise(Errc::unknown_identity, "no sum-of-tails identity for this family");
    }
    return IdentitySides{{rebuilt, pt_side, derived},
                         {"tails+lambert rebuild", "partial theta", "x-identity derivative"}};
}

} // namespace

IdentitySides build_identity(const std::string& name, int k, int a_or_i, int order) {
    if (name == "andrews_gordon") {
        int i = a_or_i;
        if (k < 2 || i < 1 || i > k) raise(Errc::bad_params, "need k >= 2 and 1 <= i <= k");
        return {{ag_lhs(k, i, order), restricted_product(2 * k + 1, {0, i, -(i)}, order)},
                {"multisum", "product"}};
    }
    if (name == "ag_variant") {
        int a = a_or_i;
        if (k < 1 || a < 0 || a > k - 1) raise(Errc::bad_params, "need 0 <= a <= k-1");
        QSeries s1 = (k == 1) ? QSeries::one(order)
                              : multisum_qseries(corollary_spec(Family::Hikami, k, a),
                                                 std::nullopt, order);
        PartialTheta pt{character(CharKind::Hikami, k, a), 0, 8 * (2 * k + 1), 2 * k - 2 * a - 1,
                        Rational(1)};
        QSeries s2 =
            partial_theta_qseries(pt, std::nullopt, order) * poch_inf_inv(mono(1, 0, 1), 1, order);
        QSeries s3 = restricted_product(2 * k + 1, {0, a + 1, -(a + 1)}, order);
        return {{s1, s2, s3}, {"multisum", "partial theta / (q)_inf", "product"}};
    }
    if (name == "family1_rr" || name == "family2_rr" || name == "family3_rr" ||
        name == "family4_rr") {
        int a = a_or_i;
        Family f = name == "family1_rr"   ? Family::Family1
                   : name == "family2_rr" ? Family::Family2
                   : name == "family3_rr" ? Family::Family3
                                          : Family::Family4;
        if (k < 2) raise(Errc::bad_params, "corollaries need k >= 2");
        if (!family_uses_a(f)) a = 0;
        auto [lo, hi] = family_a_range(f, k);
        if (a < lo || a > hi) raise(Errc::bad_params, "a out of range");
        QSeries s1 = multisum_qseries(corollary_spec(f, k, a), std::nullopt, order);
        QSeries s2(order), s3(order);
        if (f == Family::Family1) {
            s2 = partial_theta_qseries({character(CharKind::Family1, k), 0, 4 * k, k - 1,
                                        Rational(1)},
                                       std::nullopt, order) *
                 poch_inf_inv(mono(1, 0, 1), 1, order);
            s3 = poch_inf(mono(1, 0, 1), 2 * k, order) * poch_inf(mono(1, 0, 2 * k - 1), 2 * k, order) *
                 poch_inf(mono(1, 0, 2 * k), 2 * k, order) * poch_inf_inv(mono(1, 0, 1), 1, order);
        } else if (f == Family::Family2) {
            s2 = partial_theta_qseries({character(CharKind::Family2, k), 0, 8 * k - 4, 2 * k - 2,
                                        Rational(1)},
                                       std::nullopt, order) *
                 poch_inf_inv(mono(1, 0, 2), 2, order);
            int m = 4 * k - 2;
            s3 = poch_inf(mono(1, 0, 1), m, order) * poch_inf(mono(1, 0, m - 1), m, order) *
                 poch_inf(mono(1, 0, m), m, order) * poch_inf_inv(mono(1, 0, 2), 2, order);
        } else if (f == Family::Family3) {
            s2 = partial_theta_qseries({character(CharKind::Family3, k, a), 0, 8 * k,
                                        2 * k - 2 * a - 1, Rational(1)},
                                       std::nullopt, order) *
                 poch_inf_inv(mono(1, 0, 2), 2, order);
            int m = 4 * k;
            s3 = poch_inf(mono(1, 0, 2 * a + 1), m, order) *
                 poch_inf(mono(1, 0, m - 2 * a - 1), m, order) * poch_inf(mono(1, 0, m), m, order) *
                 poch_inf_inv(mono(1, 0, 2), 2, order);
        } else {
            s2 = partial_theta_qseries({character(CharKind::Family4, k, a), 0, 8 * (2 * k - 1),
                                        2 * k - 2 * a - 1, Rational(a == 0 ? 2 : 1)},
                                       std::nullopt, order) *
                 poch_inf_inv(mono(1, 0, 1), 1, order);
            int m = 2 * k - 1;
            QSeries mid = (a == 0) ? poch_inf(mono(-1, 0, m), m, order).scaled(Rational(2))
                                   : poch_inf(mono(-1, 0, a), m, order);
            s3 = poch_inf(mono(1, 0, m), m, order) * mid *
                 poch_inf(mono(-1, 0, 2 * k - a - 1), m, order) *
                 poch_inf_inv(mono(1, 0, 1), 1, order);
        }
        return {{s1, s2, s3}, {"multisum", "partial theta / product of (q)_inf", "triple product"}};
    }
    if (name == "qbinom_gen" || name == "qbinom_gen_shifted") {
        auto [lhs, rhs] = qbinom_generating(k, name == "qbinom_gen_shifted", mono(1, 0, 1), order);
        return {{lhs, rhs}, {"binomial sum (x -> q)", "closed form (x -> q)"}};
    }
    if (name == "x_zagier" || name == "x_hikami" || name == "x_family1" || name == "x_family2" ||
        name == "x_family3" || name == "x_family4") {
        Family f = name == "x_zagier"    ? Family::Zagier
                   : name == "x_hikami"  ? Family::Hikami
                   : name == "x_family1" ? Family::Family1
                   : name == "x_family2" ? Family::Family2
                   : name == "x_family3" ? Family::Family3
                                         : Family::Family4;
        int kk = (f == Family::Zagier) ? 1 : std::max(k, 1);
        int a = a_or_i;
        if (!family_uses_a(f) && f != Family::Hikami) a = 0;
        auto [lhs, rhs] = x_identity(f, kk, a, order);
        IdentitySides sides{{lhs, rhs}, {"tails-rearranged left side", "bilateral alpha form"}};
        Family pf = (f == Family::Zagier) ? Family::Hikami : f;
        if (auto pt = pt_x_form(pf, kk, (f == Family::Zagier) ? 0 : a, order); pt && kk >= 1) {
            sides.sides.push_back(*pt);
            sides.labels.push_back("partial theta with x-rule");
        }
        return sides;
    }
    if (name == "sot_zagier") return sot_sides(Family::Zagier, order);
    if (name == "sot_family1") return sot_sides(Family::Family1, order);
    if (name == "sot_family2") return sot_sides(Family::Family2, order);
    if (name == "sot_family3") return sot_sides(Family::Family3, order);
    if (name == "sot_family4") return sot_sides(Family::Family4, order);
    raise(Errc::unknown_identity, "no identity named '" + name + "'");
}

IdentityCheck verify_identity(const std::string& name, int k, int a_or_i, int order) {
    IdentitySides sides = build_identity(name, k, a_or_i, order);
    for (size_t i = 0; i + 1 < sides.sides.size(); ++i) {
        auto mism = QSeries::first_mismatch(sides.sides[i], sides.sides[i + 1], order);
        if (mism)
            return IdentityCheck{false, static_cast<int>(i), static_cast<int>(i + 1), mism};
    }
    return IdentityCheck{};
}

const std::vector<IdentityInfo>& identity_catalog() {
    static const std::vector<IdentityInfo> cat = {
        {"andrews_gordon", true, false, true, 2},
        {"ag_variant", true, true, false, 1},
        {"family1_rr", true, false, false, 2},
        {"family2_rr", true, false, false, 2},
        {"family3_rr", true, true, false, 2},
        {"family4_rr", true, true, false, 2},
        {"qbinom_gen", true, false, false, 0},
        {"qbinom_gen_shifted", true, false, false, 0},
        {"x_zagier", false, false, false, 1},
        {"x_hikami", true, true, false, 1},
        {"x_family1", true, false, false, 1},
        {"x_family2", true, false, false, 1},
        {"x_family3", true, true, false, 1},
        {"x_family4", true, true, false, 1},
        {"sot_zagier", false, false, false, 1},
        {"sot_family1", false, false, false, 1},
        {"sot_family2", false, false, false, 1},
        {"sot_family3", false, false, false, 1},
        {"sot_family4", false, false, false, 1},
    };
    return cat;
}

} // namespace qstrange
