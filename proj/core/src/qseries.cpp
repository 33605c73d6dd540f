#include "qstrange/qseries.hpp"

#include <sstream>

#include "qstrange/error.hpp"
#include "qstrange/monomial.hpp"

namespace qstrange {

QSeries::QSeries(int order) : order_(order) {
    if (order < 0) raise(Errc::bad_params, "negative truncation order");
}

QSeries QSeries::constant(const Rational& c, int order) {
    QSeries s(order);
    if (c != 0) s.c_[0] = XPoly(c);
    return s;
}

QSeries QSeries::term(const Rational& c, int x_exp, int q_deg, int order) {
    QSeries s(order);
    if (c != 0 && q_deg <= order) s.c_[q_deg] = XPoly::monomial(c, x_exp);
    return s;
}

int QSeries::valuation() const {
    if (c_.empty()) return order_ + 1;
    return c_.begin()->first;
}

const XPoly& QSeries::coefficient(int d) const {
    static const XPoly kZero;
    if (d < 0 || d > order_) raise(Errc::out_of_range, "coefficient degree beyond truncation order");
    auto it = c_.find(d);
    return it == c_.end() ? kZero : it->second;
}

void QSeries::set_coeff(int d, XPoly p) {
    if (p.is_zero())
        c_.erase(d);
    else
        c_[d] = std::move(p);
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.order_ < order_) {
        order_ = o.order_;
        c_.erase(c_.upper_bound(order_), c_.end());
    }
    for (const auto& [d, p] : o.c_) {
        if (d > order_) break;
        auto it = c_.find(d);
        if (it == c_.end()) {
            c_[d] = p;
        } else {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    if (o.order_ < order_) {
        order_ = o.order_;
        c_.erase(c_.upper_bound(order_), c_.end());
    }
    for (const auto& [d, p] : o.c_) {
        if (d > order_) break;
        auto it = c_.find(d);
        if (it == c_.end()) {
            c_[d] = -p;
        } else {
            it->second -= p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    int order = std::min(a.order_, b.order_);
    QSeries r(order);
    std::map<int, XPoly> acc;
    for (const auto& [da, pa] : a.c_) {
        if (da > order) break;
        for (const auto& [db, pb] : b.c_) {
            int d = da + db;
            if (d > order) break;
            XPoly prod = pa * pb;
            auto it = acc.find(d);
            if (it == acc.end())
                acc[d] = std::move(prod);
            else
                it->second += prod;
        }
    }
    for (auto& [d, p] : acc)
        if (!p.is_zero()) r.c_[d] = std::move(p);
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r(order_);
    for (const auto& [d, p] : c_) r.c_[d] = -p;
    return r;
}

QSeries QSeries::scaled(const Rational& s) const {
    QSeries r(order_);
    if (s == 0) return r;
    for (const auto& [d, p] : c_) r.c_[d] = p.scaled(s);
    return r;
}

QSeries QSeries::times_term(const Rational& c, int x_exp, int q_deg) const {
    QSeries r(order_);
    if (c == 0) return r;
    for (const auto& [d, p] : c_) {
        int nd = d + q_deg;
        if (nd > order_) break;
        r.c_[nd] = p.shifted(x_exp).scaled(c);
    }
    return r;
}

QSeries QSeries::times_xpoly(const XPoly& p) const {
    QSeries r(order_);
    if (p.is_zero()) return r;
    for (const auto& [d, q] : c_) {
        XPoly prod = q * p;
        if (!prod.is_zero()) r.c_[d] = std::move(prod);
    }
    return r;
}

QSeries QSeries::invert_unit() const {
    auto it = c_.find(0);
    if (it == c_.end() || !it->second.is_constant())
        raise(Errc::not_a_unit, "constant term is zero or has positive x-degree");
    Rational c0 = it->second.coeff(0);
    Rational inv0 = 1 / c0;
    QSeries r(order_);
    r.c_[0] = XPoly(inv0);
    // g_d = -1/c0 * sum_{j=1..d} f_j g_{d-j}
    for (int d = 1; d <= order_; ++d) {
        XPoly acc;
        for (const auto& [j, fj] : c_) {
            if (j == 0) continue;
            if (j > d) break;
            auto git = r.c_.find(d - j);
            if (git == r.c_.end()) continue;
            acc += fj * git->second;
        }
        if (!acc.is_zero()) r.c_[d] = acc.scaled(-inv0);
    }
    return r;
}

QSeries QSeries::q_power(int m) const {
    if (m <= 0) raise(Errc::bad_params, "q_power exponent must be positive");
    QSeries r(order_);
    for (const auto& [d, p] : c_) {
        long nd = static_cast<long>(d) * m;
        if (nd > order_) break;
        r.c_[static_cast<int>(nd)] = p;
    }
    return r;
}

QSeries QSeries::x_to_one() const {
    QSeries r(order_);
    for (const auto& [d, p] : c_) {
        Rational v = p.eval_one();
        if (v != 0) r.c_[d] = XPoly(v);
    }
    return r;
}

QSeries QSeries::x_to_monomial(const Rational& c, int e) const {
    QSeries r(order_);
    for (const auto& [d, p] : c_) {
        for (int i = 0; i <= p.degree(); ++i) {
            if (p.coeff(i) == 0) continue;
            long nd = d + static_cast<long>(e) * i;
            if (nd > order_) continue;
            Rational v = p.coeff(i) * pow_rational(c, i);
            if (v == 0) continue;
            auto it = r.c_.find(static_cast<int>(nd));
            if (it == r.c_.end())
                r.c_[static_cast<int>(nd)] = XPoly(v);
            else {
                it->second += XPoly(v);
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    }
    return r;
}

QSeries QSeries::differentiate_x() const {
    QSeries r(order_);
    for (const auto& [d, p] : c_) {
        XPoly dp = p.derivative();
        if (!dp.is_zero()) r.c_[d] = std::move(dp);
    }
    return r;
}

QSeries QSeries::truncated(int new_order) const {
    QSeries r(new_order);
    for (const auto& [d, p] : c_) {
        if (d > new_order) break;
        r.c_[d] = p;
    }
    return r;
}

QSeries QSeries::truncate_x(int max_x_deg) const {
    QSeries r(order_);
    for (const auto& [d, p] : c_) {
        XPoly t = p.truncated(max_x_deg);
        if (!t.is_zero()) r.c_[d] = std::move(t);
    }
    return r;
}

std::optional<QSeries::Mismatch> QSeries::first_mismatch(const QSeries& a, const QSeries& b,
                                                         int order) {
    if (order > a.order_ || order > b.order_)
        raise(Errc::out_of_range, "comparison order beyond truncation order");
    for (int d = 0; d <= order; ++d) {
        const XPoly& pa = a.coefficient(d);
        const XPoly& pb = b.coefficient(d);
        if (pa == pb) continue;
        int deg = std::max(pa.degree(), pb.degree());
        for (int i = 0; i <= deg; ++i) {
            if (pa.coeff(i) != pb.coeff(i)) return Mismatch{d, i, pa.coeff(i), pb.coeff(i)};
        }
    }
    return std::nullopt;
}

bool QSeries::equal_up_to(const QSeries& o, int order) const {
    return !first_mismatch(*this, o, order).has_value();
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.equal_up_to(b, std::min(a.order_, b.order_));
}

std::string QSeries::str() const {
    if (c_.empty()) return "0 + O(q^" + std::to_string(order_ + 1) + ")";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, p] : c_) {
        if (!first) os << " + ";
        first = false;
        bool wrap = !p.is_constant() || d > 0;
        if (wrap && !p.is_constant()) os << "(" << p.str() << ")";
        else os << p.str();
        if (d > 0) {
            os << "*q";
            if (d > 1) os << "^" << d;
        }
    }
    os << " + O(q^" << order_ + 1 << ")";
    return os.str();
}

Monomial Monomial::pow(int e) const {
    if (e < 0) raise(Errc::bad_params, "negative monomial power");
    Monomial r = Monomial::unit();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

int Monomial::ring_q_deg() const {
    if (!integral()) raise(Errc::bad_specialization, "monomial does not embed into the series ring");
    return q2 / 2;
}

QSeries Monomial::as_qseries(int order) const {
    return QSeries::term(coeff, x_exp, ring_q_deg(), order);
}

std::string Monomial::str() const {
    std::ostringstream os;
    os << to_string(coeff);
    if (x_exp != 0) os << "*x^" << x_exp;
    if (q2 != 0) {
        os << "*q^";
        if (q2 % 2 == 0) os << q2 / 2;
        else os << "(" << q2 << "/2)";
    }
    return os.str();
}

} // namespace qstrange
