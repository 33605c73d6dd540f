#pragma once

#include <map>
#include <optional>
#include <string>

#include "qstrange/xpoly.hpp"

namespace qstrange {

/// Truncated formal power series in q with XPoly coefficients: an element of
/// Q[x][[q]] / q^(order+1). The truncation order travels with the value and
/// binary operations resolve mismatched orders to the minimum. Coefficients
/// are stored sparsely; entries are never zero.
class QSeries {
public:
    explicit QSeries(int order);

    static QSeries zero(int order) { return QSeries(order); }
    static QSeries one(int order) { return constant(Rational(1), order); }
    static QSeries constant(const Rational& c, int order);
    // c * x^x_exp * q^q_deg
    static QSeries term(const Rational& c, int x_exp, int q_deg, int order);

    int order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    // smallest degree with a nonzero coefficient; order()+1 when zero
    int valuation() const;

    // exact coefficient of q^d; throws out_of_range when d > order
    const XPoly& coefficient(int d) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { a += b; return a; }
    friend QSeries operator-(QSeries a, const QSeries& b) { a -= b; return a; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator-() const;

    QSeries scaled(const Rational& s) const;
    // fast multiplication by c * x^x_exp * q^q_deg
    QSeries times_term(const Rational& c, int x_exp, int q_deg) const;
    QSeries times_xpoly(const XPoly& p) const;

    // multiplicative inverse mod q^(order+1); requires a nonzero rational
    // constant term (throws not_a_unit otherwise)
    QSeries invert_unit() const;

    QSeries q_power(int m) const;                          // q -> q^m
    QSeries x_to_one() const;                              // x -> 1
    QSeries x_to_monomial(const Rational& c, int e) const; // x -> c q^e
    QSeries differentiate_x() const;

    QSeries truncated(int new_order) const;
    QSeries truncate_x(int max_x_deg) const;

    struct Mismatch {
        int q_deg;
        int x_deg;
        Rational lhs, rhs;
    };
    // compares coefficients of a and b for q-degrees 0..order
    static std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b, int order);
    bool equal_up_to(const QSeries& o, int order) const;
    // equality at the minimum of the two orders
    friend bool operator==(const QSeries& a, const QSeries& b);
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    std::string str() const;

private:
    void set_coeff(int d, XPoly p);
    int order_;
    std::map<int, XPoly> c_;
};

} // namespace qstrange
