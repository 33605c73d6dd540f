#include "qstrange/xpoly.hpp"

#include <sstream>

#include "qstrange/error.hpp"

namespace qstrange {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_a_unit: return "not_a_unit";
        case Errc::out_of_range: return "out_of_range";
        case Errc::divergent_product: return "divergent_product";
        case Errc::bad_specialization: return "bad_specialization";
        case Errc::bad_params: return "bad_params";
        case Errc::bad_rel_param: return "bad_rel_param";
        case Errc::precondition_violated: return "precondition_violated";
        case Errc::integrality_violation: return "integrality_violation";
        case Errc::denominator_vanishes: return "denominator_vanishes";
        case Errc::singular_expansion: return "singular_expansion";
        case Errc::division_by_zero: return "division_by_zero";
        case Errc::unknown_identity: return "unknown_identity";
        case Errc::catalog_parse_error: return "catalog_parse_error";
        case Errc::usage_error: return "usage_error";
        case Errc::internal_error: return "internal_error";
    }
    return "error";
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) raise(Errc::usage_error, "bad rational literal '" + s + "'");
    r.canonicalize();
    if (r.get_den() <= 0) raise(Errc::usage_error, "bad rational literal '" + s + "'");
    return r;
}

Integer pow_integer(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Rational pow_rational(const Rational& b, long e) {
    if (e == 0) return Rational(1);
    if (b == 0 && e < 0) raise(Errc::division_by_zero, "0^negative");
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r(pow_integer(b.get_num(), a), pow_integer(b.get_den(), a));
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

XPoly::XPoly(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
}

XPoly::XPoly(long constant) : XPoly(Rational(constant)) {}

XPoly XPoly::monomial(const Rational& c, int deg) {
    XPoly p;
    if (c != 0) {
        p.c_.assign(deg + 1, Rational(0));
        p.c_[deg] = c;
    }
    return p;
}

XPoly XPoly::from_coeffs(std::vector<Rational> coeffs) {
    XPoly p;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

void XPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& XPoly::coeff(int i) const {
    static const Rational kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly();
    XPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.normalize();
    return r;
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

XPoly XPoly::scaled(const Rational& s) const {
    if (s == 0) return XPoly();
    XPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

XPoly XPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    XPoly r;
    r.c_.assign(c_.size() + k, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

XPoly XPoly::truncated(int max_deg) const {
    if (degree() <= max_deg) return *this;
    XPoly r;
    if (max_deg >= 0) r.c_.assign(c_.begin(), c_.begin() + max_deg + 1);
    r.normalize();
    return r;
}

XPoly XPoly::derivative() const {
    XPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    r.normalize();
    return r;
}

XPoly XPoly::substitute_power(int m) const {
    if (is_zero()) return XPoly();
    XPoly r;
    r.c_.assign(m * (c_.size() - 1) + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * m] = c_[i];
    r.normalize();
    return r;
}

Rational XPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Rational XPoly::eval_one() const {
    Rational acc(0);
    for (const auto& c : c_) acc += c;
    return acc;
}

std::string XPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool unit_coeff = (c == 1 && i > 0);
        if (!unit_coeff) os << to_string(c);
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace qstrange
