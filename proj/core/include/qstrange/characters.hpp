#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qstrange/qseries.hpp"

namespace qstrange {

/// Periodic function Z -> Q stored as an explicit residue table,
/// values[r-1] = value at n == r (mod period), r in 1..period.
struct PeriodicFunction {
    int period = 1;
    std::vector<Rational> values;

    const Rational& at(long n) const;
    bool is_even() const; // value(M - n) == value(n)
    Rational mean() const;
};

enum class CharKind {
    Zagier12, // +1 at +-1, -1 at +-5 (mod 12)
    Hikami,   // period 8k+4, params (k, a)
    Family1,  // period 4k, param k
    Family2,  // period 8k-4, param k
    Family3,  // period 8k, params (k, a)
    Family4,  // period 4k-2, params (k, a)
    Family5,  // period 4k, params (k, a), a < k-1
    Torus,    // period 2st, params (s, t)
};

PeriodicFunction character(CharKind kind, int k = 0, int a = 0);

/// prefactor * sum_{n>=n0} n^weight chi(n) q^((n^2-shift^2)/divisor)
struct PartialTheta {
    PeriodicFunction chi;
    int weight = 1;   // 0 or 1
    int divisor = 1;  // D
    int shift = 0;    // c
    Rational prefactor{1};
};

// divisor | n^2 - shift^2 on the support of chi; throws integrality_violation
void check_integrality(const PartialTheta& pt);

struct XRule {
    int e; // x^((n - shift)/e)
};

QSeries partial_theta_qseries(const PartialTheta& pt, std::optional<XRule> xrule, int order,
                              int n_start = 0);

} // namespace qstrange
