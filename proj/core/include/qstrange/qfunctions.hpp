#pragma once

#include <utility>

#include "qstrange/monomial.hpp"
#include "qstrange/qseries.hpp"

namespace qstrange {

// (arg; q^base)_n = prod_{j=1..n} (1 - arg q^{base(j-1)}), exact, truncated at order.
// Results are memoized process-wide (all inputs are value types).
QSeries poch(const Monomial& arg, int n, int base, int order);

// (arg; q^base)_inf; factors beyond the truncation order are dropped. The
// argument must carry a positive q-exponent (divergent_product otherwise).
QSeries poch_inf(const Monomial& arg, int base, int order);

// 1 / (arg; q^base)_n via geometric expansion of each factor; every factor
// must be a unit (not_a_unit otherwise).
QSeries poch_inv(const Monomial& arg, int n, int base, int order);
QSeries poch_inf_inv(const Monomial& arg, int base, int order);

// 1 / (1 - m) for a monomial with positive ring q-degree
QSeries geometric_inverse(const Monomial& m, int order);

// prod_{j=0..n-1} (1 - s q^{base j} + p q^{2 base j}): the paired form of
// (u;q^base)_n (v;q^base)_n with s = u+v, p = uv. Lets half-integer
// specializations u = -v = x q^(1/2) stay inside the ring.
QSeries poch_pair(const Monomial& s, const Monomial& p, int n, int base, int order);

// Gaussian binomial [n over k] in base q^base, zero when k < 0 or k > n.
QSeries qbinom(long n, long k, int base, int order);

// sum_{j>=1} q^(cj) / (1 - sign q^(dj)), sign in {+1,-1}
QSeries lambert_sum(int c, int d, int sign, int order);

// Jacobi triple product with z = zc * q^ze in base q^m:
//   lhs = sum_{n in Z} zc^n q^(m n^2 + ze n)
//   rhs = (-z q^m; q^2m)_inf (-q^m/z; q^2m)_inf (q^2m; q^2m)_inf
// bad_specialization when an exponent escapes the ring.
std::pair<QSeries, QSeries> triple_product(const Rational& zc, int ze, int base, int order);

} // namespace qstrange
