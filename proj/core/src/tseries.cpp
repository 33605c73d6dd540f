#include "qstrange/tseries.hpp"

#include <sstream>

#include "qstrange/error.hpp"

namespace qstrange {

TSeries::TSeries(int M, int K) : M_(M) {
    if (K < 0) raise(Errc::bad_params, "negative t-order");
    c_.assign(static_cast<size_t>(K + 1), CycNum::zero(M));
}

TSeries TSeries::one(int M, int K) {
    TSeries s(M, K);
    s.c_[0] = CycNum::one(M);
    return s;
}

TSeries TSeries::from_cyc(const CycNum& c, int K) {
    TSeries s(c.order(), K);
    s.c_[0] = c;
    return s;
}

TSeries TSeries::exp_rational(const Rational& s, int M, int K) {
    TSeries r(M, K);
    Rational term(1);
    for (int j = 0; j <= K; ++j) {
        r.c_[static_cast<size_t>(j)] = CycNum::from_rational(M, term);
        term = term * s / (j + 1);
    }
    return r;
}

bool TSeries::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

TSeries& TSeries::operator+=(const TSeries& o) {
    if (M_ != o.M_ || c_.size() != o.c_.size())
        raise(Errc::bad_params, "mixed t-series shapes");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
    if (M_ != o.M_ || c_.size() != o.c_.size())
        raise(Errc::bad_params, "mixed t-series shapes");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
    if (a.M_ != b.M_ || a.c_.size() != b.c_.size())
        raise(Errc::bad_params, "mixed t-series shapes");
    TSeries r(a.M_, a.order());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; i + j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TSeries TSeries::scaled(const CycNum& s) const {
    TSeries r(M_, order());
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) r.c_[i] = c_[i] * s;
    return r;
}

TSeries TSeries::scaled(const Rational& s) const {
    TSeries r = *this;
    for (auto& c : r.c_) c = c.scaled(s);
    return r;
}

TSeries TSeries::inverse() const {
    if (c_[0].is_zero()) raise(Errc::division_by_zero, "t-series with zero constant term");
    CycNum inv0 = c_[0].inverse();
    TSeries r(M_, order());
    r.c_[0] = inv0;
    for (size_t d = 1; d < c_.size(); ++d) {
        CycNum acc = CycNum::zero(M_);
        for (size_t j = 1; j <= d; ++j) {
            if (c_[j].is_zero() || r.c_[d - j].is_zero()) continue;
            acc += c_[j] * r.c_[d - j];
        }
        r.c_[d] = -(acc * inv0);
    }
    return r;
}

TSeries TSeries::shifted(int v) const {
    if (v == 0) return *this;
    TSeries r(M_, order());
    for (size_t i = 0; i + static_cast<size_t>(v) < c_.size(); ++i)
        r.c_[i + static_cast<size_t>(v)] = c_[i];
    return r;
}

std::string TSeries::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + ";
        os << c_[i].str() << "*t^" << i;
    }
    return os.str();
}

TSeries q_power_at_root(int M, long p, long m, int K) {
    // zeta^(pm) * e^(-mt)
    TSeries r = TSeries::exp_rational(Rational(-m), M, K);
    return r.scaled(CycNum::zeta_pow(M, p * m));
}

} // namespace qstrange
