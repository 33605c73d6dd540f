#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "qstrange/qfunctions.hpp"

namespace qstrange {

/// Lazily evaluated sequence n -> QSeries with a synchronized memo table
/// keyed by (n, order). Values are immutable once computed.
class PairSeq {
public:
    using Fn = std::function<QSeries(int n, int order)>;
    PairSeq() = default;
    explicit PairSeq(Fn fn) : fn_(std::move(fn)), state_(std::make_shared<State>()) {}
    QSeries at(int n, int order) const;

private:
    struct State {
        std::mutex m;
        std::map<std::pair<int, int>, QSeries> memo;
    };
    Fn fn_;
    std::shared_ptr<State> state_;
};

/// A Bailey pair relative to (rel_param, q^base): sequences alpha_n, beta_n
/// with beta_n = sum_{k<=n} alpha_k / ((Q;Q)_{n-k} (rel Q; Q)_{n+k}), Q = q^base.
/// The relation is checked by verify_pair, never assumed.
struct BaileyPair {
    Monomial rel_param;
    int base = 1;
    PairSeq alpha, beta;
    std::string label;
};

// nullopt encodes a parameter sent to infinity
using Rho = std::optional<Monomial>;

// Slater's general Bailey pair relative to (a, q^base) with free parameters
// b, c; limits are taken symbolically. Half-integer specializations such as
// b = -c = x q^(1/2) are accepted when the pair combines inside the ring.
BaileyPair slater_pair(const Monomial& a, const Rho& b, const Rho& c, int base);

// One application of the Bailey lemma with parameters rho1, rho2.
BaileyPair bailey_step(const BaileyPair& p, const Rho& rho1, const Rho& rho2);

// Both sides of the x^2 q specialization of the limiting Bailey lemma:
//   lhs = (1-x) sum (xQ;Q)_n (Q;Q)_n x^n beta_n
//   rhs = (1-x^2 Q) sum (Q;Q)_n / (x^2 Q;Q)_n x^n alpha_n
// truncated at (order, x_order). Requires rel_param = x^2 q^base.
std::pair<QSeries, QSeries> x2q_identity(const BaileyPair& p, int order, int x_order);

struct PairCheckReport {
    bool ok = true;
    int fail_n = -1;
    std::optional<QSeries::Mismatch> mismatch;
};
// evaluates the defining relation for every n <= n_max at the given order
PairCheckReport verify_pair(const BaileyPair& p, int n_max, int order);

// Bailey pair inversion: recovers alpha from beta relative to (rel, q^base).
// Requires 1 - rel to be a unit series (bad_rel_param otherwise).
PairSeq invert_pair(const PairSeq& beta, const Monomial& rel, int base);

enum class ShiftKind {
    GammaStar,   // (gamma*_n - gamma*_{n-1}, (b)_n q^n/(bq)_n beta_n); b -> 0 when absent
    OneMinusQn,  // beta'_n = (1 - Q^n) beta_n
    IndexShift,  // beta'_n = beta_{n+1}, needs alpha_0 = beta_0 = 0; rel -> rel Q
    Key,         // beta'_n = (1 - Q^{n+1}) beta_{n+1}; rel -> rel Q
};
BaileyPair shift_lemma(const BaileyPair& p, ShiftKind kind, std::optional<Monomial> b = {});

// multiplies alpha and beta by the same unit series factor(order)
BaileyPair scale_pair(const BaileyPair& p, std::function<QSeries(int)> factor,
                      const std::string& label);

} // namespace qstrange
