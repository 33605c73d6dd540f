#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qstrange/rational.hpp"

namespace qstrange {

/// Polynomial in x with exact rational coefficients. Trailing zeros are
/// normalized away; the zero polynomial has degree() == -1.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(const Rational& constant);
    explicit XPoly(long constant);
    static XPoly monomial(const Rational& c, int deg);
    static XPoly from_coeffs(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // coefficient of x^i; zero beyond the degree
    const Rational& coeff(int i) const;

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { a += b; return a; }
    friend XPoly operator-(XPoly a, const XPoly& b) { a -= b; return a; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly operator-() const;

    XPoly scaled(const Rational& s) const;
    XPoly shifted(int k) const; // * x^k
    XPoly truncated(int max_deg) const;
    XPoly derivative() const;
    XPoly substitute_power(int m) const; // x -> x^m

    Rational eval(const Rational& x) const;
    Rational eval_one() const;

    bool operator==(const XPoly& o) const { return c_ == o.c_; }
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();
    std::vector<Rational> c_; // c_[i] * x^i
};

} // namespace qstrange
