#include "qstrange/strange.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace qstrange {

XPoly bernoulli_poly(int m) {
    static std::vector<XPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (m < 0) raise(Errc::bad_params, "negative Bernoulli index");
    while (static_cast<int>(cache.size()) <= m) {
        int n = static_cast<int>(cache.size());
        // B_n(x) = x^n - 1/(n+1) sum_{j<n} C(n+1, j) B_j(x)
        XPoly b = XPoly::monomial(Rational(1), n);
        Rational binom(1); // C(n+1, 0)
        for (int j = 0; j < n; ++j) {
            b -= cache[static_cast<size_t>(j)].scaled(binom / (n + 1));
            binom = binom * (n + 1 - j) / (j + 1);
        }
        cache.push_back(std::move(b));
    }
    return cache[static_cast<size_t>(m)];
}

const char* validity_name(Validity v) {
    switch (v) {
        case Validity::Formal: return "formal";
        case Validity::OddRoots: return "odd_roots";
        case Validity::EvenRoots: return "even_roots";
        case Validity::RootsNot2Mod4: return "roots_not_2_mod_4";
        case Validity::AllRoots: return "all_roots";
    }
    return "?";
}

std::optional<Validity> validity_from_name(const std::string& s) {
    for (Validity v : {Validity::Formal, Validity::OddRoots, Validity::EvenRoots,
                       Validity::RootsNot2Mod4, Validity::AllRoots})
        if (s == validity_name(v)) return v;
    return std::nullopt;
}

bool validity_allows_root(Validity v, int N) {
    switch (v) {
        case Validity::Formal: return false;
        case Validity::OddRoots: return N % 2 == 1;
        case Validity::EvenRoots: return N % 2 == 0;
        case Validity::RootsNot2Mod4: return N % 4 != 2;
        case Validity::AllRoots: return true;
    }
    return false;
}

const CycNum& TwistedPeriodic::at(long n) const {
    long r = n % period;
    if (r < 0) r += period;
    if (r == 0) r = period;
    return values[static_cast<size_t>(r - 1)];
}

CycNum TwistedPeriodic::sum() const {
    CycNum s = CycNum::zero(root_order);
    for (const auto& v : values) s += v;
    return s;
}

TwistedPeriodic twist_at_root(const PartialTheta& pt, int root_order) {
    check_integrality(pt);
    TwistedPeriodic psi;
    psi.root_order = root_order;
    long period = std::lcm(static_cast<long>(pt.chi.period),
                           static_cast<long>(root_order) * pt.divisor);
    psi.period = static_cast<int>(period);
    psi.values.reserve(psi.period);
    long c2 = static_cast<long>(pt.shift) * pt.shift;
    for (long n = 1; n <= period; ++n) {
        const Rational& chi = pt.chi.at(n);
        if (chi == 0) {
            psi.values.push_back(CycNum::zero(root_order));
            continue;
        }
        long e = (n * n - c2) / pt.divisor; // integrality already checked
        psi.values.push_back(CycNum::zeta_pow(root_order, e).scaled(chi));
    }
    return psi;
}

CycNum lvalue(const TwistedPeriodic& psi, int m) {
    XPoly b = bernoulli_poly(m + 1);
    CycNum acc = CycNum::zero(psi.root_order);
    for (long n = 1; n <= psi.period; ++n) {
        const CycNum& v = psi.at(n);
        if (v.is_zero()) continue;
        acc += v.scaled(b.eval(make_rational(n, psi.period)));
    }
    Rational scale = -pow_rational(Rational(psi.period), m) / (m + 1);
    return acc.scaled(scale);
}

TSeries rhs_asymptotic(const PartialTheta& pt, int root_order, int K) {
    TwistedPeriodic psi = twist_at_root(pt, root_order);
    if (!psi.sum().is_zero())
        raise(Errc::singular_expansion, "twisted character has nonzero mean at root of order " +
                                            std::to_string(root_order));
    TSeries s(root_order, K);
    Rational jfact(1);
    for (int j = 0; j <= K; ++j) {
        if (j > 0) jfact *= j;
        CycNum L = lvalue(psi, 2 * j + pt.weight);
        Rational coeff = pow_rational(Rational(-1, pt.divisor), j) / jfact;
        s.set_coeff(j, L.scaled(coeff));
    }
    if (pt.weight == 0 && pt.shift == 0) {
        // the n = 0 term contributes chi(0) exactly
        s.set_coeff(0, s.coeff(0) + CycNum::from_rational(root_order, pt.chi.at(0)));
    }
    Rational c2_over_d(static_cast<long>(pt.shift) * pt.shift, pt.divisor);
    c2_over_d.canonicalize();
    return (s * TSeries::exp_rational(c2_over_d, root_order, K)).scaled(pt.prefactor);
}

StrangeSpec strange_spec(Family f, int k, int a) {
    StrangeSpec s;
    s.family = f;
    s.k = k;
    s.a = a;
    s.lhs = strange_lhs_spec(f, k, a);
    switch (f) {
        case Family::Zagier:
            s.rhs = {character(CharKind::Zagier12), 1, 24, 1, Rational(-1, 2)};
            s.validity = Validity::AllRoots;
            break;
        case Family::Hikami:
            s.rhs = {character(CharKind::Hikami, k, a), 1, 8 * (2 * k + 1), 2 * k - 2 * a - 1,
                     Rational(-1, 2)};
            s.validity = Validity::AllRoots;
            break;
        case Family::Family1:
            s.rhs = {character(CharKind::Family1, k), 1, 4 * k, k - 1,
                     Rational(k == 1 ? -2 : -1)};
            s.validity = Validity::OddRoots;
            break;
        case Family::Family2:
            s.rhs = {character(CharKind::Family2, k), 1, 8 * k - 4, 2 * k - 2,
                     k == 1 ? Rational(-1) : Rational(-1, 2)};
            s.validity = Validity::OddRoots;
            break;
        case Family::Family3:
            s.rhs = {character(CharKind::Family3, k, a), 1, 8 * k, 2 * k - 2 * a - 1,
                     Rational(-1, 2)};
            s.validity = (k == 1) ? Validity::RootsNot2Mod4 : Validity::OddRoots;
            break;
        case Family::Family4:
            s.rhs = {character(CharKind::Family4, k, a), 1, 8 * (2 * k - 1), 2 * k - 2 * a - 1,
                     a == 0 ? Rational(-1) : Rational(-1, 2)};
            s.validity = Validity::EvenRoots;
            break;
        case Family::Family5:
            s.rhs = {character(CharKind::Family5, k, a), 1, 4 * k, k - a - 1, Rational(-1)};
            s.validity = Validity::OddRoots;
            break;
    }
    return s;
}

const char* root_status_name(RootStatus s) {
    switch (s) {
        case RootStatus::Pass: return "pass";
        case RootStatus::Fail: return "fail";
        case RootStatus::Rejected: return "root_rejected";
        case RootStatus::Error: return "error";
    }
    return "?";
}

namespace {

StrangeReport compare_tseries(const TSeries& lhs, const TSeries& rhs) {
    StrangeReport rep;
    for (int j = 0; j <= lhs.order(); ++j) {
        rep.lhs_coeffs.push_back(lhs.coeff(j));
        rep.rhs_coeffs.push_back(rhs.coeff(j));
    }
    for (int j = 0; j <= lhs.order(); ++j) {
        if (lhs.coeff(j) != rhs.coeff(j)) {
            rep.status = RootStatus::Fail;
            rep.first_bad_t = j;
            rep.message = "t^" + std::to_string(j) + ": lhs " + lhs.coeff(j).str() + " vs rhs " +
                          rhs.coeff(j).str();
            return rep;
        }
    }
    return rep;
}

} // namespace

StrangeReport strange_check(Family f, int k, int a, int root_order, int t_order) {
    StrangeSpec spec = strange_spec(f, k, a);
    StrangeReport rep;
    if (!validity_allows_root(spec.validity, root_order)) {
        rep.status = RootStatus::Rejected;
        rep.message = std::string("root of order ") + std::to_string(root_order) +
                      " outside validity domain " + validity_name(spec.validity);
        return rep;
    }
    try {
        TSeries lhs = eval_terminating_sum(spec.lhs, root_order, t_order);
        TSeries rhs = rhs_asymptotic(spec.rhs, root_order, t_order);
        return compare_tseries(lhs, rhs);
    } catch (const Error& e) {
        if (e.code() == Errc::denominator_vanishes) {
            rep.status = RootStatus::Rejected;
            rep.message = e.what();
            return rep;
        }
        throw;
    }
}

const char* quantum_id_name(QuantumId id) {
    switch (id) {
        case QuantumId::Fam1VsFam2: return "fam1_vs_fam2";
        case QuantumId::Fam5VsFam3: return "fam5_vs_fam3";
        case QuantumId::Fam5VsHikami: return "fam5_vs_hikami";
    }
    return "?";
}

std::optional<QuantumId> quantum_id_from_name(const std::string& s) {
    for (QuantumId id : {QuantumId::Fam1VsFam2, QuantumId::Fam5VsFam3, QuantumId::Fam5VsHikami})
        if (s == quantum_id_name(id)) return id;
    return std::nullopt;
}

StrangeReport quantum_check(QuantumId id, int k, int a, int root_order) {
    StrangeReport rep;
    if (root_order % 2 == 0) {
        rep.status = RootStatus::Rejected;
        rep.message = "quantum identities hold at odd roots of unity";
        return rep;
    }
    MultisumSpec lhs, rhs;
    switch (id) {
        case QuantumId::Fam1VsFam2:
            if (k < 1) raise(Errc::bad_params, "k must be >= 1");
            lhs = strange_lhs_spec(Family::Family1, 2 * k - 1, 0);
            rhs = strange_lhs_spec(Family::Family2, k, 0);
            break;
        case QuantumId::Fam5VsFam3:
            lhs = strange_lhs_spec(Family::Family5, 2 * k, 2 * a);
            rhs = strange_lhs_spec(Family::Family3, k, a);
            break;
        case QuantumId::Fam5VsHikami:
            lhs = strange_lhs_spec(Family::Family5, 2 * k + 1, 2 * a + 1);
            rhs = spec_double_base(strange_lhs_spec(Family::Hikami, k, a));
            break;
    }
    try {
        TSeries l = eval_terminating_sum(lhs, root_order, 0);
        TSeries r = eval_terminating_sum(rhs, root_order, 0);
        return compare_tseries(l, r.scaled(Rational(2)));
    } catch (const Error& e) {
        if (e.code() == Errc::denominator_vanishes) {
            rep.status = RootStatus::Rejected;
            rep.message = e.what();
            return rep;
        }
        throw;
    }
}

} // namespace qstrange
