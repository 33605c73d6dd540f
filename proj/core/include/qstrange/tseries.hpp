#pragma once

#include <string>
#include <vector>

#include "qstrange/cyclotomic.hpp"

namespace qstrange {

/// Truncated power series in t with CycNum coefficients, exact arithmetic
/// mod t^(K+1). All coefficients share one cyclotomic order.
class TSeries {
public:
    TSeries(int M, int K);
    static TSeries zero(int M, int K) { return TSeries(M, K); }
    static TSeries one(int M, int K);
    static TSeries from_cyc(const CycNum& c, int K);
    // e^(s t) with rational s
    static TSeries exp_rational(const Rational& s, int M, int K);

    int order() const { return static_cast<int>(c_.size()) - 1; } // K
    int field_order() const { return M_; }
    const CycNum& coeff(int j) const { return c_[static_cast<size_t>(j)]; }
    void set_coeff(int j, const CycNum& v) { c_[static_cast<size_t>(j)] = v; }
    bool is_zero() const;

    TSeries& operator+=(const TSeries& o);
    TSeries& operator-=(const TSeries& o);
    friend TSeries operator+(TSeries a, const TSeries& b) { a += b; return a; }
    friend TSeries operator-(TSeries a, const TSeries& b) { a -= b; return a; }
    friend TSeries operator*(const TSeries& a, const TSeries& b);
    TSeries scaled(const CycNum& s) const;
    TSeries scaled(const Rational& s) const;
    // inverse; requires a nonzero constant term (division_by_zero otherwise)
    TSeries inverse() const;
    // multiply by t^v, dropping overflow
    TSeries shifted(int v) const;

    bool operator==(const TSeries& o) const { return M_ == o.M_ && c_ == o.c_; }
    bool operator!=(const TSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    int M_;
    std::vector<CycNum> c_;
};

// q^m evaluated at q = zeta_M^p e^(-t): zeta^(pm) * e^(-mt)
TSeries q_power_at_root(int M, long p, long m, int K);
inline TSeries q_to_t(int M, long p, int K) { return q_power_at_root(M, p, 1, K); }

} // namespace qstrange
