#pragma once

#include <string>
#include <vector>

#include "qstrange/characters.hpp"
#include "qstrange/families.hpp"
#include "qstrange/rooteval.hpp"

namespace qstrange {

// Bernoulli polynomial B_m(x) (B_1(x) = x - 1/2), exact coefficients
XPoly bernoulli_poly(int m);

enum class Validity { Formal, OddRoots, EvenRoots, RootsNot2Mod4, AllRoots };
const char* validity_name(Validity v);
std::optional<Validity> validity_from_name(const std::string& s);
bool validity_allows_root(Validity v, int N);

/// psi(n) = chi(n) * zeta^((n^2 - c^2)/D): the root-of-unity twist of a
/// partial theta character, tabulated over one full period.
struct TwistedPeriodic {
    int period = 1;  // lcm(chi period, N * D)
    int root_order = 1;
    std::vector<CycNum> values; // 1-indexed like PeriodicFunction
    const CycNum& at(long n) const;
    CycNum sum() const;
};

TwistedPeriodic twist_at_root(const PartialTheta& pt, int root_order);

// L(-m, psi) = -(P^m/(m+1)) sum_{n=1..P} psi(n) B_{m+1}(n/P), exact
CycNum lvalue(const TwistedPeriodic& psi, int m);

// Exact t-expansion of the partial theta side at q = zeta_N e^(-t):
//   prefactor e^(c^2 t / D) sum_j L(-2j-w, psi) (-t/D)^j / j!
// (weight w in {0,1}); singular_expansion if psi has nonzero mean.
TSeries rhs_asymptotic(const PartialTheta& pt, int root_order, int K);

struct StrangeSpec {
    Family family;
    int k = 1, a = 0;
    MultisumSpec lhs;
    PartialTheta rhs;
    Validity validity = Validity::AllRoots;
};
StrangeSpec strange_spec(Family f, int k, int a);

enum class RootStatus { Pass, Fail, Rejected, Error };
const char* root_status_name(RootStatus s);

struct StrangeReport {
    RootStatus status = RootStatus::Pass;
    int first_bad_t = -1;
    std::vector<CycNum> lhs_coeffs, rhs_coeffs;
    std::string message;
};

// exact comparison of both sides' t-expansions at a root of unity
StrangeReport strange_check(Family f, int k, int a, int root_order, int t_order);

enum class QuantumId { Fam1VsFam2, Fam5VsFam3, Fam5VsHikami };
const char* quantum_id_name(QuantumId id);
std::optional<QuantumId> quantum_id_from_name(const std::string& s);

// exact equality in Q(zeta_N) of the two terminating sums (odd roots only)
StrangeReport quantum_check(QuantumId id, int k, int a, int root_order);

} // namespace qstrange
