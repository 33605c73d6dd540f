#include "qstrange/qfunctions.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace qstrange {

namespace {

struct PochKey {
    std::string coeff;
    int x_exp, q2, base, n, order; // n = -1 encodes the infinite product
    bool operator<(const PochKey& o) const {
        return std::tie(coeff, x_exp, q2, base, n, order) <
               std::tie(o.coeff, o.x_exp, o.q2, o.base, o.n, o.order);
    }
};

std::map<PochKey, QSeries>& poch_cache() {
    static std::map<PochKey, QSeries> cache;
    return cache;
}
std::mutex& poch_mutex() {
    static std::mutex m;
    return m;
}

QSeries poch_factor(const Monomial& arg, int j, int base, int order) {
    // 1 - arg q^{base(j-1)}
    Monomial m = arg;
    m.q2 += 2 * base * (j - 1);
    QSeries f = QSeries::one(order);
    if (m.ring_q_deg() <= order) f -= m.as_qseries(order);
    return f;
}

} // namespace

QSeries poch(const Monomial& arg, int n, int base, int order) {
    if (n < 0) raise(Errc::bad_params, "negative Pochhammer index");
    if (arg.is_zero() || n == 0) return QSeries::one(order);
    PochKey key{to_string(arg.coeff), arg.x_exp, arg.q2, base, n, order};
    {
        std::lock_guard<std::mutex> lock(poch_mutex());
        auto it = poch_cache().find(key);
        if (it != poch_cache().end()) return it->second;
    }
    // extend from (arg)_{n-1} so a whole family of indices shares work
    QSeries r = poch(arg, n - 1, base, order) * poch_factor(arg, n, base, order);
    std::lock_guard<std::mutex> lock(poch_mutex());
    return poch_cache().emplace(key, std::move(r)).first->second;
}

QSeries poch_inf(const Monomial& arg, int base, int order) {
    if (arg.is_zero()) return QSeries::one(order);
    if (arg.ring_q_deg() < 1)
        raise(Errc::divergent_product, "infinite Pochhammer needs a positive q-exponent");
    PochKey key{to_string(arg.coeff), arg.x_exp, arg.q2, base, -1, order};
    {
        std::lock_guard<std::mutex> lock(poch_mutex());
        auto it = poch_cache().find(key);
        if (it != poch_cache().end()) return it->second;
    }
    QSeries r = QSeries::one(order);
    for (int j = 1; arg.ring_q_deg() + base * (j - 1) <= order; ++j)
        r = r * poch_factor(arg, j, base, order);
    std::lock_guard<std::mutex> lock(poch_mutex());
    return poch_cache().emplace(key, std::move(r)).first->second;
}

QSeries geometric_inverse(const Monomial& m, int order) {
    int d = m.ring_q_deg();
    if (d < 1) raise(Errc::not_a_unit, "geometric inverse needs positive q-degree");
    QSeries r(order);
    Rational c(1);
    for (int j = 0; static_cast<long>(j) * d <= order; ++j) {
        r += QSeries::term(c, m.x_exp * j, d * j, order);
        c *= m.coeff;
    }
    return r;
}

QSeries poch_inv(const Monomial& arg, int n, int base, int order) {
    if (n < 0) raise(Errc::bad_params, "negative Pochhammer index");
    if (arg.is_zero() || n == 0) return QSeries::one(order);
    PochKey key{to_string(arg.coeff), arg.x_exp, arg.q2, base, ~n, order};
    {
        std::lock_guard<std::mutex> lock(poch_mutex());
        auto it = poch_cache().find(key);
        if (it != poch_cache().end()) return it->second;
    }
    QSeries r(order);
    Monomial first = arg;
    if (first.ring_q_deg() >= 1) {
        r = poch_inv(arg, n - 1, base, order) * geometric_inverse(
                Monomial::half(arg.coeff, arg.x_exp, arg.q2 + 2 * base * (n - 1)), order);
    } else {
        // constant-in-q leading factor: invert it as a scalar if possible
        if (arg.x_exp != 0 || arg.coeff == 1)
            raise(Errc::not_a_unit, "Pochhammer factor is not a unit series");
        QSeries rest = (n == 1) ? QSeries::one(order)
                                : poch_inv(Monomial::half(arg.coeff, arg.x_exp, arg.q2 + 2 * base),
                                           n - 1, base, order);
        r = rest.scaled(1 / (Rational(1) - arg.coeff));
    }
    std::lock_guard<std::mutex> lock(poch_mutex());
    return poch_cache().emplace(key, std::move(r)).first->second;
}

QSeries poch_inf_inv(const Monomial& arg, int base, int order) {
    return poch_inf(arg, base, order).invert_unit();
}

QSeries poch_pair(const Monomial& s, const Monomial& p, int n, int base, int order) {
    QSeries r = QSeries::one(order);
    for (int j = 0; j < n; ++j) {
        QSeries f = QSeries::one(order);
        if (!s.is_zero()) {
            Monomial ms = s;
            ms.q2 += 2 * base * j;
            if (ms.ring_q_deg() <= order) f -= ms.as_qseries(order);
        }
        if (!p.is_zero()) {
            Monomial mp = p;
            mp.q2 += 4 * base * j;
            if (mp.ring_q_deg() <= order) f += mp.as_qseries(order);
        }
        r = r * f;
    }
    return r;
}

namespace {

using QbinomRow = std::vector<Rational>;

// dense coefficient list of [n over k]_q, base q, memoized
const QbinomRow& qbinom_coeffs(long n, long k) {
    static std::map<std::pair<long, long>, QbinomRow> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::function<QbinomRow(long, long)> build = [&](long nn, long kk) -> QbinomRow {
        if (kk == 0 || kk == nn) return QbinomRow{Rational(1)};
        auto ck = std::make_pair(nn, kk);
        auto hit = cache.find(ck);
        if (hit != cache.end()) return hit->second;
        // [n k] = [n-1 k-1] + q^k [n-1 k]
        QbinomRow a = build(nn - 1, kk - 1);
        QbinomRow b = build(nn - 1, kk);
        QbinomRow r(static_cast<size_t>(kk * (nn - kk) + 1), Rational(0));
        for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i + kk] += b[i];
        return cache.emplace(ck, std::move(r)).first->second;
    };
    QbinomRow r = build(n, k);
    return cache.emplace(key, std::move(r)).first->second;
}

} // namespace

QSeries qbinom(long n, long k, int base, int order) {
    if (k < 0 || k > n || n < 0) return QSeries::zero(order);
    const QbinomRow& row = qbinom_coeffs(n, k);
    QSeries r(order);
    for (size_t i = 0; i < row.size(); ++i) {
        long d = static_cast<long>(i) * base;
        if (d > order) break;
        if (row[i] != 0) r += QSeries::term(row[i], 0, static_cast<int>(d), order);
    }
    return r;
}

QSeries lambert_sum(int c, int d, int sign, int order) {
    if (c < 1 || d < 1) raise(Errc::bad_params, "lambert_sum needs positive exponents");
    if (sign != 1 && sign != -1) raise(Errc::bad_params, "lambert_sum sign must be +-1");
    QSeries r(order);
    for (long j = 1; c * j <= order; ++j) {
        Rational coeff(1);
        for (long i = 0; c * j + d * i * j <= order; ++i) {
            r += QSeries::term(coeff, 0, static_cast<int>(c * j + d * i * j), order);
            coeff *= sign;
        }
    }
    return r;
}

std::pair<QSeries, QSeries> triple_product(const Rational& zc, int ze, int base, int order) {
    if (zc == 0) raise(Errc::bad_specialization, "z must be nonzero");
    if (base + ze < 0 || base - ze < 0)
        raise(Errc::bad_specialization, "triple product factors leave the ring");
    QSeries lhs(order);
    for (long n = 0;; ++n) { // n and -n
        long e_pos = base * n * n + static_cast<long>(ze) * n;
        long e_neg = base * n * n - static_cast<long>(ze) * n;
        if (e_pos < 0 || e_neg < 0) raise(Errc::bad_specialization, "negative q-exponent in theta sum");
        bool any = false;
        if (e_pos <= order) {
            lhs += QSeries::term(pow_rational(zc, n), 0, static_cast<int>(e_pos), order);
            any = true;
        }
        if (n > 0 && e_neg <= order) {
            lhs += QSeries::term(pow_rational(zc, -n), 0, static_cast<int>(e_neg), order);
            any = true;
        }
        if (!any && n > 0) break;
    }
    // (c; Q)_inf with a constant-in-q argument splits off the scalar (1 - c)
    auto inf_factor = [order](const Rational& c, int qe, int b2) {
        if (qe >= 1) return poch_inf(Monomial(c, 0, qe), b2, order);
        return poch_inf(Monomial(c, 0, b2), b2, order).scaled(Rational(1) - c);
    };
    QSeries rhs = inf_factor(-zc, base + ze, 2 * base) * inf_factor(-1 / zc, base - ze, 2 * base) *
                  poch_inf(Monomial(Rational(1), 0, 2 * base), 2 * base, order);
    return {lhs, rhs};
}

} // namespace qstrange
