#pragma once

#include <vector>

#include "qstrange/characters.hpp"
#include "qstrange/families.hpp"

namespace qstrange {

/// Comparands of one catalog identity: every side must agree as a truncated
/// series. Entries with three sides chain multisum = theta form = product.
struct IdentitySides {
    std::vector<QSeries> sides;
    std::vector<std::string> labels;
};

// formal identities by name; a_or_i carries a or i depending on the entry
IdentitySides build_identity(const std::string& name, int k, int a_or_i, int order);

struct IdentityCheck {
    bool ok = true;
    int lhs_index = 0, rhs_index = 1;
    std::optional<QSeries::Mismatch> mismatch;
};
IdentityCheck verify_identity(const std::string& name, int k, int a_or_i, int order);

// The x-parametrized pre-strange identity of a family: tails-rearranged
// left side and the bilateral alpha-side right side, both in Q[x][[q]].
std::pair<QSeries, QSeries> x_identity(Family f, int k, int a, int order);

// sum_{n>=0} sub^n [n (+1 if shifted) over k] and its closed product form,
// compared after substituting x -> sub
std::pair<QSeries, QSeries> qbinom_generating(int k, bool shifted, const Monomial& sub, int order);

struct IdentityInfo {
    std::string name;
    bool uses_k = false, uses_a = false, uses_i = false;
    int k_min = 1;
};
const std::vector<IdentityInfo>& identity_catalog();

} // namespace qstrange
