#pragma once

#include <string>

#include "qstrange/error.hpp"
#include "qstrange/qseries.hpp"
#include "qstrange/rational.hpp"

namespace qstrange {

/// A monomial c * x^x_exp * q^(q2/2). The q-exponent is kept in half-integer
/// units so that specializations like b = x q^(1/2) stay representable; such a
/// monomial only embeds into the series ring once squared or paired with its
/// negative.
struct Monomial {
    Rational coeff{0};
    int x_exp = 0;
    int q2 = 0; // twice the q-exponent

    Monomial() = default;
    Monomial(Rational c, int xe, int qe) : coeff(std::move(c)), x_exp(xe), q2(2 * qe) {}

    static Monomial zero() { return Monomial(); }
    static Monomial unit() { return Monomial(Rational(1), 0, 0); }
    static Monomial of(long c, int xe, int qe) { return Monomial(Rational(c), xe, qe); }
    static Monomial half(Rational c, int xe, int q_halves) {
        Monomial m;
        m.coeff = std::move(c);
        m.x_exp = xe;
        m.q2 = q_halves;
        return m;
    }

    bool is_zero() const { return coeff == 0; }
    bool integral() const { return q2 % 2 == 0 && q2 >= 0 && x_exp >= 0; }
    int q_exp() const {
        if (q2 % 2 != 0) raise(Errc::bad_specialization, "half-integer q-exponent left unpaired");
        return q2 / 2;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.coeff = coeff * o.coeff;
        r.x_exp = x_exp + o.x_exp;
        r.q2 = q2 + o.q2;
        return r;
    }
    // exact division; exponents may go negative (checked at embedding time)
    Monomial operator/(const Monomial& o) const {
        if (o.coeff == 0) raise(Errc::division_by_zero, "monomial division by zero");
        Monomial r;
        r.coeff = coeff / o.coeff;
        r.x_exp = x_exp - o.x_exp;
        r.q2 = q2 - o.q2;
        return r;
    }
    Monomial operator-() const {
        Monomial r = *this;
        r.coeff = -r.coeff;
        return r;
    }
    Monomial pow(int e) const; // e >= 0
    Monomial squared() const { return *this * *this; }

    QSeries as_qseries(int order) const;
    // q-degree of the monomial viewed in the ring (requires integral())
    int ring_q_deg() const;

    bool operator==(const Monomial& o) const {
        return coeff == o.coeff && x_exp == o.x_exp && q2 == o.q2;
    }

    std::string str() const;
};

} // namespace qstrange
