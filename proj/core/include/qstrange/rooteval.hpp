#pragma once

#include "qstrange/families.hpp"
#include "qstrange/tseries.hpp"

namespace qstrange {

// Exact t-expansion of the multisum at q = zeta_M e^(-t), truncated at t^K.
// The outer index runs to (M / gcd(base, M)) * (K + 2) + extra_outer; past the
// divisibility bound every term is divisible by t^(K+1), so extra_outer only
// exists to let tests confirm cutoff stability. Throws denominator_vanishes
// when an explicit denominator factor is zero at the root.
TSeries eval_terminating_sum(const MultisumSpec& spec, int M, int K, int extra_outer = 0);

// evaluate at q = zeta_M with x = 1 (sum of coefficient values times zeta^d)
CycNum eval_qseries_at_root(const QSeries& f, int M);

} // namespace qstrange
