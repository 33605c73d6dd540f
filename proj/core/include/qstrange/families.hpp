#pragma once

#include <optional>
#include <vector>

#include "qstrange/bailey.hpp"

namespace qstrange {

enum class Family { Zagier, Hikami, Family1, Family2, Family3, Family4, Family5 };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);
// legal a-range for (family, k); families 1 and 2 ignore a (range {0})
std::pair<int, int> family_a_range(Family f, int k);
bool family_uses_a(Family f);

/// The eight base Bailey pairs used as seeds: Slater's pair under the
/// displayed specializations, normalized exactly as displayed.
enum class BasePair {
    Zagier,      // a = x^2 q, b, c -> inf
    Family1,     // a = x^2 q, b = -x q, c -> inf
    Family2,     // base q^2, a = x^2 q^2, b = -x q, c = -x q^2
    Family3K1,   // base q^2, a = x^2 q^2, b = -x q, c -> inf
    Family4K1,   // a = x^2 q, b = -c = x q^(1/2)
    HikamiX2,    // a = x^2, b, c -> inf
    Family3X2,   // base q^2, a = x^2, b = -x q, c -> inf
    Family4X2,   // a = x^2, b = -c = x q^(1/2)
};
BaileyPair base_pair(BasePair which);
const std::vector<BasePair>& all_base_pairs();
const char* base_pair_name(BasePair which);
std::optional<BasePair> base_pair_from_name(const std::string& s);

// Iterated pair for a family: seed, a-fold Bailey-lemma iteration, the key
// shift where the recipe requires it, then the remaining iterations
// (Family5 runs its last step with rho1 = -q).
BaileyPair family_pair_by_iteration(Family f, int k, int a);

// Same pair with the displayed closed-form alpha and the iterated beta.
BaileyPair build_family_pair(Family f, int k, int a);

QSeries closed_alpha(Family f, int k, int a, int n, int order);
QSeries closed_beta(Family f, int k, int a, int n, int order);

// resolved sign of the (1 +- x^(2a+1) q^((2a+1)(2n+1))) factor in the
// Family3 alpha (certified by verify_pair, pinned by the test suite)
int family3_alpha_sign(int k, int a);

/// Data description of one multisum: a q-binomial chain over the index
/// simplex n_i <= n_{i+1} + delta_{i,a}, a quadratic q-exponent, x-weights,
/// and extra Pochhammer factors tied to individual variables.
struct PochFactor {
    Monomial arg;
    int base = 1;
    int var = 0;
    int mul = 1; // count = mul * n_var + add
    int add = 0;
    bool denom = false;
};

struct MultisumSpec {
    std::string label;
    int depth = 1;       // number of summation variables n_0..n_{depth-1}
    int base = 1;        // base of the q-binomial chain
    int delta_a = 0;     // delta fires between vars a-1 and a (1-based paper index); 0 = never
    bool chain = true;
    std::vector<int> quad2, lin2; // q-exponent = sum (quad2[i] n_i^2 + lin2[i] n_i) / 2
    std::vector<int> xw;          // x-exponent = sum xw[i] n_i
    std::vector<PochFactor> factors;
};

// the q-hypergeometric side of the family's strange identity (x = 1)
MultisumSpec strange_lhs_spec(Family f, int k, int a);
// the displayed multisum form of beta_n (x-aware); outer variable = n_{depth-1}
MultisumSpec closed_beta_spec(Family f, int k, int a);
// q -> q^2 on every ingredient of the description
MultisumSpec spec_double_base(const MultisumSpec& spec);

// exact truncated enumeration; fixed_outer pins the outer variable
QSeries multisum_qseries(const MultisumSpec& spec, std::optional<int> fixed_outer, int order);

} // namespace qstrange
