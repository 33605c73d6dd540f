#include "qstrange/bailey.hpp"

namespace qstrange {

QSeries PairSeq::at(int n, int order) const {
    if (!state_) raise(Errc::internal_error, "empty sequence");
    if (n < 0) raise(Errc::bad_params, "negative sequence index");
    auto key = std::make_pair(n, order);
    {
        std::lock_guard<std::mutex> lock(state_->m);
        auto it = state_->memo.find(key);
        if (it != state_->memo.end()) return it->second;
    }
    QSeries v = fn_(n, order);
    std::lock_guard<std::mutex> lock(state_->m);
    return state_->memo.emplace(key, std::move(v)).first->second;
}

namespace {

// q^(base * e) as a ring monomial
Monomial qpow(int base, long e) { return Monomial(Rational(1), 0, static_cast<int>(base * e)); }

Monomial shift_q(const Monomial& m, int base, long steps) {
    Monomial r = m;
    r.q2 += static_cast<int>(2 * base * steps);
    return r;
}

long tri(long n) { return n * (n - 1) / 2; } // C(n, 2)

// requires the monomial to embed; multiplies f by it
QSeries times_mono(const QSeries& f, const Monomial& m) {
    return f.times_term(m.coeff, m.x_exp, m.ring_q_deg());
}

} // namespace

BaileyPair slater_pair(const Monomial& a, const Rho& b, const Rho& c, int base) {
    if (a.is_zero() || !a.integral())
        raise(Errc::bad_specialization, "relative parameter must be a ring monomial");
    bool paired = false;
    if ((b && !b->integral()) || (c && !c->integral())) {
        if (b && c && *c == -*b)
            paired = true;
        else
            raise(Errc::bad_specialization,
                  "half-integer b, c must come as an opposite pair b = -c");
    }

    Monomial av = a;
    int Q = base;

    PairSeq alpha([av, b, c, Q, paired](int n, int order) -> QSeries {
        if (n == 0) return QSeries::one(order);
        // (a)_n (1 - a Q^{2n}) / (1 - a) = (aQ;Q)_{n-1} (1 - a Q^{2n})
        QSeries r = poch(shift_q(av, Q, 1), n - 1, Q, order);
        Monomial a2n = shift_q(av, Q, 2 * n);
        QSeries one = QSeries::one(order);
        if (a2n.ring_q_deg() <= order) r = r * (one - a2n.as_qseries(order));
        r = r * poch_inv(Monomial(Rational(1), 0, Q), n, Q, order); // 1/(Q;Q)_n
        if (!b && !c) {
            // (-1)^n Q^C(n,2) * a^n Q^(n^2)
            Monomial m = av.pow(n);
            m.coeff *= (n % 2 ? -1 : 1);
            m.q2 += static_cast<int>(2 * Q * (tri(n) + static_cast<long>(n) * n));
            return times_mono(r, m);
        }
        if (paired) {
            // (b)_n(c)_n = prod (1 + bc Q^{2j}); (aQ/b)_n(aQ/c)_n likewise
            Monomial p = *b * *c;
            Monomial aq = shift_q(av, Q, 1);
            Monomial pd = (aq * aq) / p;
            Monomial ratio = aq / p; // (aQ/bc)
            Monomial m = ratio.pow(n);
            m.coeff *= (n % 2 ? -1 : 1);
            m.q2 += static_cast<int>(2 * Q * tri(n));
            QSeries num = poch_pair(Monomial::zero(), p, n, Q, order);
            QSeries den = poch_pair(Monomial::zero(), pd, n, Q, order);
            return times_mono(r * num * den.invert_unit(), m);
        }
        Rho bb = b, cc = c;
        if (!bb) std::swap(bb, cc); // put the finite one (if any) first
        if (bb && !cc) {
            // c -> infinity: extra Q^{n(n-1)} (aQ/b)^n (b)_n / (aQ/b)_n
            Monomial aqb = shift_q(av, Q, 1) / *bb;
            Monomial m = aqb.pow(n);
            m.q2 += static_cast<int>(2 * Q * (2 * tri(n)));
            QSeries num = poch(*bb, n, Q, order);
            QSeries den = poch_inv(aqb, n, Q, order);
            return times_mono(r * num * den, m);
        }
        // both finite and integral
        Monomial aq = shift_q(av, Q, 1);
        Monomial aqb = aq / *bb, aqc = aq / *cc;
        Monomial ratio = aq / (*bb * *cc);
        Monomial m = ratio.pow(n);
        m.coeff *= (n % 2 ? -1 : 1);
        m.q2 += static_cast<int>(2 * Q * tri(n));
        QSeries num = poch(*bb, n, Q, order) * poch(*cc, n, Q, order);
        QSeries den = poch_inv(aqb, n, Q, order) * poch_inv(aqc, n, Q, order);
        return times_mono(r * num * den, m);
    });

    PairSeq beta([av, b, c, Q, paired](int n, int order) -> QSeries {
        QSeries r = poch_inv(Monomial(Rational(1), 0, Q), n, Q, order);
        Monomial aq = shift_q(av, Q, 1);
        if (!b && !c) return r;
        if (paired) {
            Monomial p = *b * *c;
            Monomial pd = (aq * aq) / p;
            Monomial ratio = aq / p;
            return r * poch(ratio, n, Q, order) *
                   poch_pair(Monomial::zero(), pd, n, Q, order).invert_unit();
        }
        Rho bb = b, cc = c;
        if (!bb) std::swap(bb, cc);
        if (bb && !cc) return r * poch_inv(aq / *bb, n, Q, order);
        return r * poch(aq / (*bb * *cc), n, Q, order) * poch_inv(aq / *bb, n, Q, order) *
               poch_inv(aq / *cc, n, Q, order);
    });

    std::string label = "slater(a=" + a.str() + ", b=" + (b ? b->str() : "inf") +
                        ", c=" + (c ? c->str() : "inf") + ", base=" + std::to_string(base) + ")";
    return BaileyPair{a, base, std::move(alpha), std::move(beta), std::move(label)};
}

BaileyPair bailey_step(const BaileyPair& p, const Rho& rho1, const Rho& rho2) {
    Monomial a = p.rel_param;
    int Q = p.base;
    Monomial aq = shift_q(a, Q, 1);
    Rho r1 = rho1, r2 = rho2;
    if (!r1) std::swap(r1, r2); // finite parameter first, if any

    PairSeq alpha_in = p.alpha, beta_in = p.beta;

    PairSeq alpha([=](int n, int order) -> QSeries {
        QSeries an = alpha_in.at(n, order);
        if (!r1 && !r2) {
            Monomial m = a.pow(n);
            m.q2 += static_cast<int>(2 * Q * static_cast<long>(n) * n);
            return times_mono(an, m);
        }
        if (r1 && !r2) {
            Monomial aqr = aq / *r1;
            Monomial m = aqr.pow(n);
            m.coeff *= (n % 2 ? -1 : 1);
            m.q2 += static_cast<int>(2 * Q * tri(n));
            return times_mono(an * poch(*r1, n, Q, order) * poch_inv(aqr, n, Q, order), m);
        }
        Monomial aq1 = aq / *r1, aq2 = aq / *r2;
        Monomial m = (aq / (*r1 * *r2)).pow(n);
        return times_mono(an * poch(*r1, n, Q, order) * poch(*r2, n, Q, order) *
                              poch_inv(aq1, n, Q, order) * poch_inv(aq2, n, Q, order),
                          m);
    });

    PairSeq beta([=](int n, int order) -> QSeries {
        Monomial unit = Monomial(Rational(1), 0, Q);
        QSeries acc(order);
        for (int k = 0; k <= n; ++k) {
            QSeries term = beta_in.at(k, order);
            Monomial m = Monomial::unit();
            if (!r1 && !r2) {
                m = a.pow(k);
                m.q2 += static_cast<int>(2 * Q * static_cast<long>(k) * k);
            } else if (r1 && !r2) {
                Monomial aqr = aq / *r1;
                m = aqr.pow(k);
                m.coeff *= (k % 2 ? -1 : 1);
                m.q2 += static_cast<int>(2 * Q * tri(k));
                term = term * poch(*r1, k, Q, order);
            } else {
                Monomial ratio = aq / (*r1 * *r2);
                m = ratio.pow(k);
                term = term * poch(*r1, k, Q, order) * poch(*r2, k, Q, order) *
                       poch(ratio, n - k, Q, order);
            }
            if (m.ring_q_deg() > order) continue;
            acc += times_mono(term, m) * poch_inv(unit, n - k, Q, order);
        }
        if (r1 && !r2) acc = acc * poch_inv(aq / *r1, n, Q, order);
        if (r1 && r2)
            acc = acc * poch_inv(aq / *r1, n, Q, order) * poch_inv(aq / *r2, n, Q, order);
        return acc;
    });

    std::string label = p.label + " |> step(rho1=" + (rho1 ? rho1->str() : "inf") +
                        ", rho2=" + (rho2 ? rho2->str() : "inf") + ")";
    return BaileyPair{a, Q, std::move(alpha), std::move(beta), std::move(label)};
}

std::pair<QSeries, QSeries> x2q_identity(const BaileyPair& p, int order, int x_order) {
    Monomial want(Rational(1), 2, p.base);
    if (!(p.rel_param == want))
        raise(Errc::bad_rel_param, "pair is not relative to x^2 q^base");
    int Q = p.base;
    Monomial xq(Rational(1), 1, Q);
    Monomial unit(Rational(1), 0, Q);
    Monomial x2q(Rational(1), 2, Q);

    QSeries lhs(order), rhs(order);
    for (int n = 0; n <= x_order; ++n) {
        QSeries bn = p.beta.at(n, order);
        if (!bn.is_zero()) {
            QSeries t = poch(xq, n, Q, order) * poch(unit, n, Q, order) * bn;
            lhs += t.times_term(Rational(1), n, 0).truncate_x(x_order);
        }
        QSeries an = p.alpha.at(n, order);
        if (!an.is_zero()) {
            QSeries t = poch(unit, n, Q, order) * poch_inv(x2q, n, Q, order) * an;
            rhs += t.times_term(Rational(1), n, 0).truncate_x(x_order);
        }
    }
    QSeries one_minus_x = QSeries::one(order) - QSeries::term(Rational(1), 1, 0, order);
    QSeries one_minus_x2q = QSeries::one(order) - QSeries::term(Rational(1), 2, Q, order);
    lhs = (lhs * one_minus_x).truncate_x(x_order);
    rhs = (rhs * one_minus_x2q).truncate_x(x_order);
    return {lhs, rhs};
}

PairCheckReport verify_pair(const BaileyPair& p, int n_max, int order) {
    int Q = p.base;
    Monomial unit(Rational(1), 0, Q);
    Monomial aq = shift_q(p.rel_param, Q, 1);
    for (int n = 0; n <= n_max; ++n) {
        QSeries rhs(order);
        for (int k = 0; k <= n; ++k) {
            QSeries ak = p.alpha.at(k, order);
            if (ak.is_zero()) continue;
            rhs += ak * poch_inv(unit, n - k, Q, order) * poch_inv(aq, n + k, Q, order);
        }
        auto mism = QSeries::first_mismatch(p.beta.at(n, order), rhs, order);
        if (mism) return PairCheckReport{false, n, mism};
    }
    return PairCheckReport{true, -1, std::nullopt};
}

PairSeq invert_pair(const PairSeq& beta, const Monomial& rel, int base) {
    if (!rel.integral() || rel.ring_q_deg() < 1)
        raise(Errc::bad_rel_param, "1 - rel must be a unit series for inversion");
    Monomial a = rel;
    int Q = base;
    PairSeq b_in = beta;
    return PairSeq([a, Q, b_in](int n, int order) -> QSeries {
        Monomial unit(Rational(1), 0, Q);
        QSeries acc(order);
        for (int j = 0; j <= n; ++j) {
            QSeries bj = b_in.at(j, order);
            if (bj.is_zero()) continue;
            // (a)_{n+j} / (1-a) = (aQ;Q)_{n+j-1} for n+j >= 1, 1/(1-a) at n = j = 0
            QSeries apoch = (n + j == 0) ? geometric_inverse(a, order)
                                         : poch(shift_q(a, Q, 1), n + j - 1, Q, order);
            long t = tri(n - j);
            Rational sgn((n - j) % 2 ? -1 : 1);
            acc += (bj * apoch * poch_inv(unit, n - j, Q, order))
                       .times_term(sgn, 0, static_cast<int>(Q * t));
        }
        Monomial a2n = shift_q(a, Q, 2 * n);
        QSeries factor = QSeries::one(order);
        if (a2n.ring_q_deg() <= order) factor -= a2n.as_qseries(order);
        return acc * factor;
    });
}

BaileyPair shift_lemma(const BaileyPair& p, ShiftKind kind, std::optional<Monomial> b) {
    Monomial a = p.rel_param;
    int Q = p.base;
    PairSeq alpha_in = p.alpha, beta_in = p.beta;

    switch (kind) {
        case ShiftKind::GammaStar: {
            if (b && (b->is_zero())) b.reset();
            auto gamma_star = [=](int n, int order) -> QSeries {
                QSeries acc(order);
                if (!b) {
                    // b -> 0: gamma*_n = sum_r a^{n-r} Q^{n^2+n-r^2} alpha_r
                    for (int r = 0; r <= n; ++r) {
                        QSeries ar = alpha_in.at(r, order);
                        if (ar.is_zero()) continue;
                        Monomial m = a.pow(n - r);
                        m.q2 += static_cast<int>(
                            2 * Q * (static_cast<long>(n) * n + n - static_cast<long>(r) * r));
                        if (m.ring_q_deg() > order) continue;
                        acc += times_mono(ar, m);
                    }
                    return acc;
                }
                Monomial aqb = shift_q(a, Q, 1) / *b;
                for (int r = 0; r <= n; ++r) {
                    QSeries ar = alpha_in.at(r, order);
                    if (ar.is_zero()) continue;
                    Monomial m = (-*b).pow(n - r);
                    m.q2 += static_cast<int>(2 * Q * (tri(n + 1) - tri(r)));
                    if (m.ring_q_deg() > order) continue;
                    acc += times_mono(ar * poch(*b, r, Q, order) * poch_inv(aqb, r, Q, order), m);
                }
                return acc * poch(aqb, n, Q, order) *
                       poch_inv(shift_q(*b, Q, 1), n, Q, order);
            };
            PairSeq alpha([=](int n, int order) -> QSeries {
                QSeries g = gamma_star(n, order);
                if (n > 0) g -= gamma_star(n - 1, order);
                return g;
            });
            PairSeq beta([=](int n, int order) -> QSeries {
                if (!b) return beta_in.at(n, order).times_term(Rational(1), 0, Q * n);
                return beta_in.at(n, order) * poch(*b, n, Q, order) *
                       poch_inv(shift_q(*b, Q, 1), n, Q, order)
                           .times_term(Rational(1), 0, Q * n);
            });
            return BaileyPair{a, Q, std::move(alpha), std::move(beta),
                              p.label + " |> gamma_star"};
        }
        case ShiftKind::OneMinusQn: {
            PairSeq alpha([=](int n, int order) -> QSeries {
                if (n == 0) return QSeries::zero(order);
                QSeries one = QSeries::one(order);
                QSeries r = alpha_in.at(n, order) *
                            (one - QSeries::term(Rational(1), 0, Q * n, order));
                Monomial a2n = shift_q(a, Q, 2 * n);
                QSeries factor = QSeries::one(order);
                if (a2n.ring_q_deg() <= order) factor -= a2n.as_qseries(order);
                QSeries sum(order);
                for (int r2 = 0; r2 < n; ++r2) {
                    QSeries ar = alpha_in.at(r2, order);
                    if (ar.is_zero()) continue;
                    Monomial m = a.pow(n - 1 - r2);
                    m.q2 += static_cast<int>(
                        2 * Q * (static_cast<long>(n) * n - n - static_cast<long>(r2) * r2));
                    if (m.ring_q_deg() > order) continue;
                    sum += times_mono(ar, m);
                }
                return r + sum * factor;
            });
            PairSeq beta([=](int n, int order) -> QSeries {
                QSeries one = QSeries::one(order);
                return beta_in.at(n, order) *
                       (one - QSeries::term(Rational(1), 0, Q * n, order));
            });
            return BaileyPair{a, Q, std::move(alpha), std::move(beta),
                              p.label + " |> one_minus_qn"};
        }
        case ShiftKind::IndexShift: {
            Monomial new_rel = shift_q(a, Q, 1);
            PairSeq alpha([=](int n, int order) -> QSeries {
                if (!alpha_in.at(0, order).is_zero() || !beta_in.at(0, order).is_zero())
                    raise(Errc::precondition_violated, "index shift needs alpha_0 = beta_0 = 0");
                QSeries t1 = alpha_in.at(n + 1, order) *
                             geometric_inverse(shift_q(a, Q, 2 * n + 2), order);
                QSeries t2(order);
                if (n > 0) {
                    Monomial a2n = shift_q(a, Q, 2 * n);
                    t2 = times_mono(alpha_in.at(n, order), a2n) * geometric_inverse(a2n, order);
                }
                return (t1 - t2) * geometric_inverse(shift_q(a, Q, 1), order);
            });
            PairSeq beta([=](int n, int order) -> QSeries {
                if (!alpha_in.at(0, order).is_zero() || !beta_in.at(0, order).is_zero())
                    raise(Errc::precondition_violated, "index shift needs alpha_0 = beta_0 = 0");
                return beta_in.at(n + 1, order);
            });
            return BaileyPair{new_rel, Q, std::move(alpha), std::move(beta),
                              p.label + " |> index_shift"};
        }
        case ShiftKind::Key: {
            Monomial new_rel = shift_q(a, Q, 1);
            PairSeq alpha([=](int n, int order) -> QSeries {
                QSeries one = QSeries::one(order);
                QSeries t1 = alpha_in.at(n + 1, order) *
                             (one - QSeries::term(Rational(1), 0, Q * (n + 1), order)) *
                             geometric_inverse(shift_q(a, Q, 2 * n + 2), order);
                QSeries t2(order);
                if (n == 0) {
                    t2 = alpha_in.at(0, order); // q^0 (1-a)/(1-a) = 1
                } else {
                    Monomial an = shift_q(a, Q, n);
                    QSeries factor = QSeries::one(order);
                    if (an.ring_q_deg() <= order) factor -= an.as_qseries(order);
                    t2 = alpha_in.at(n, order).times_term(Rational(1), 0, Q * n) * factor *
                         geometric_inverse(shift_q(a, Q, 2 * n), order);
                }
                return (t1 + t2) * geometric_inverse(shift_q(a, Q, 1), order);
            });
            PairSeq beta([=](int n, int order) -> QSeries {
                QSeries one = QSeries::one(order);
                return beta_in.at(n + 1, order) *
                       (one - QSeries::term(Rational(1), 0, Q * (n + 1), order));
            });
            return BaileyPair{new_rel, Q, std::move(alpha), std::move(beta),
                              p.label + " |> key"};
        }
    }
    raise(Errc::internal_error, "unknown shift kind");
}

BaileyPair scale_pair(const BaileyPair& p, std::function<QSeries(int)> factor,
                      const std::string& label) {
    PairSeq alpha_in = p.alpha, beta_in = p.beta;
    auto f = std::make_shared<std::function<QSeries(int)>>(std::move(factor));
    PairSeq alpha([alpha_in, f](int n, int order) { return alpha_in.at(n, order) * (*f)(order); });
    PairSeq beta([beta_in, f](int n, int order) { return beta_in.at(n, order) * (*f)(order); });
    return BaileyPair{p.rel_param, p.base, std::move(alpha), std::move(beta), label};
}

} // namespace qstrange
