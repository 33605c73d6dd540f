#pragma once

#include <string>
#include <vector>

#include "qstrange/rational.hpp"

namespace qstrange {

// coefficients of the M-th cyclotomic polynomial, low degree first, monic
std::vector<Integer> cyclotomic_poly(int M);

/// Element of Q(zeta_M) in the power basis 1, zeta, ..., zeta^(phi(M)-1)
/// modulo the M-th cyclotomic polynomial. Zero testing is exact.
class CycNum {
public:
    explicit CycNum(int M);
    static CycNum zero(int M) { return CycNum(M); }
    static CycNum one(int M) { return from_rational(M, Rational(1)); }
    static CycNum from_rational(int M, const Rational& r);
    static CycNum zeta_pow(int M, long e);

    int order() const { return M_; }
    int dim() const { return static_cast<int>(c_.size()); }
    const std::vector<Rational>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const; // coordinate of 1

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { a += b; return a; }
    friend CycNum operator-(CycNum a, const CycNum& b) { a -= b; return a; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    CycNum operator-() const;
    CycNum scaled(const Rational& s) const;
    CycNum inverse() const; // extended gcd against Phi_M; division_by_zero on 0

    // embed into Q(zeta_L), requires M | L
    CycNum lift_to(int L) const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    std::string str() const;

private:
    int M_;
    std::vector<Rational> c_;
};

int euler_phi(int M);

} // namespace qstrange
