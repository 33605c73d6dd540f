#include "qstrange/families.hpp"

#include <map>
#include <mutex>

namespace qstrange {

namespace {

long tri(long n) { return n * (n + 1) / 2; } // C(n+1, 2)

Monomial mono(long c, int xe, int qe) { return Monomial(Rational(c), xe, qe); }

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Zagier: return "zagier";
        case Family::Hikami: return "hikami";
        case Family::Family1: return "family1";
        case Family::Family2: return "family2";
        case Family::Family3: return "family3";
        case Family::Family4: return "family4";
        case Family::Family5: return "family5";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    for (Family f : {Family::Zagier, Family::Hikami, Family::Family1, Family::Family2,
                     Family::Family3, Family::Family4, Family::Family5})
        if (s == family_name(f)) return f;
    return std::nullopt;
}

bool family_uses_a(Family f) {
    return f == Family::Hikami || f == Family::Family3 || f == Family::Family4 ||
           f == Family::Family5;
}

std::pair<int, int> family_a_range(Family f, int k) {
    switch (f) {
        case Family::Zagier: return {0, 0};
        case Family::Hikami:
        case Family::Family3:
        case Family::Family4: return {0, k - 1};
        case Family::Family5: return {0, k - 2};
        default: return {0, 0};
    }
}

const char* base_pair_name(BasePair which) {
    switch (which) {
        case BasePair::Zagier: return "base_zagier";
        case BasePair::Family1: return "base_family1";
        case BasePair::Family2: return "base_family2";
        case BasePair::Family3K1: return "base_family3_k1";
        case BasePair::Family4K1: return "base_family4_k1";
        case BasePair::HikamiX2: return "base_hikami_x2";
        case BasePair::Family3X2: return "base_family3_x2";
        case BasePair::Family4X2: return "base_family4_x2";
    }
    return "?";
}

const std::vector<BasePair>& all_base_pairs() {
    static const std::vector<BasePair> all = {
        BasePair::Zagier,    BasePair::Family1,   BasePair::Family2,   BasePair::Family3K1,
        BasePair::Family4K1, BasePair::HikamiX2,  BasePair::Family3X2, BasePair::Family4X2};
    return all;
}

std::optional<BasePair> base_pair_from_name(const std::string& s) {
    for (BasePair b : all_base_pairs())
        if (s == base_pair_name(b)) return b;
    return std::nullopt;
}

BaileyPair base_pair(BasePair which) {
    switch (which) {
        case BasePair::Zagier:
            return slater_pair(mono(1, 2, 1), std::nullopt, std::nullopt, 1);
        case BasePair::Family1:
            return slater_pair(mono(1, 2, 1), mono(-1, 1, 1), std::nullopt, 1);
        case BasePair::Family2: {
            BaileyPair raw = slater_pair(mono(1, 2, 2), mono(-1, 1, 1), mono(-1, 1, 2), 2);
            return scale_pair(raw,
                              [](int order) { return geometric_inverse(mono(-1, 1, 1), order); },
                              "base_family2");
        }
        case BasePair::Family3K1: {
            BaileyPair raw = slater_pair(mono(1, 2, 2), mono(-1, 1, 1), std::nullopt, 2);
            return scale_pair(raw,
                              [](int order) { return geometric_inverse(mono(-1, 1, 1), order); },
                              "base_family3_k1");
        }
        case BasePair::Family4K1: {
            BaileyPair raw = slater_pair(mono(1, 2, 1), Monomial::half(Rational(1), 1, 1),
                                         Monomial::half(Rational(-1), 1, 1), 1);
            return scale_pair(raw,
                              [](int order) { return geometric_inverse(mono(1, 2, 1), order); },
                              "base_family4_k1");
        }
        case BasePair::HikamiX2:
            return slater_pair(mono(1, 2, 0), std::nullopt, std::nullopt, 1);
        case BasePair::Family3X2:
            return slater_pair(mono(1, 2, 0), mono(-1, 1, 1), std::nullopt, 2);
        case BasePair::Family4X2:
            return slater_pair(mono(1, 2, 0), Monomial::half(Rational(1), 1, 1),
                               Monomial::half(Rational(-1), 1, 1), 1);
    }
    raise(Errc::internal_error, "unknown base pair");
}

namespace {

void check_family_params(Family f, int k, int a) {
    if (k < 1) raise(Errc::bad_params, "k must be >= 1");
    if (f == Family::Zagier && !(k == 1 && a == 0))
        raise(Errc::bad_params, "zagier is the k = 1 case");
    if (f == Family::Family5 && k < 2) raise(Errc::bad_params, "family5 needs k >= 2");
    auto [lo, hi] = family_a_range(f, k);
    if (family_uses_a(f) && (a < lo || a > hi))
        raise(Errc::bad_params, "a out of range for the family");
}

} // namespace

BaileyPair family_pair_by_iteration(Family f, int k, int a) {
    check_family_params(f, k, a);
    switch (f) {
        case Family::Zagier:
        case Family::Hikami: {
            BaileyPair p = base_pair(BasePair::HikamiX2);
            for (int i = 0; i < a; ++i) p = bailey_step(p, std::nullopt, std::nullopt);
            p = shift_lemma(p, ShiftKind::Key);
            for (int i = 0; i < k - 1 - a; ++i) p = bailey_step(p, std::nullopt, std::nullopt);
            return p;
        }
        case Family::Family1: {
            BaileyPair p = base_pair(BasePair::Family1);
            for (int i = 0; i < k - 1; ++i) p = bailey_step(p, std::nullopt, std::nullopt);
            return p;
        }
        case Family::Family2: {
            BaileyPair p = base_pair(BasePair::Family2);
            for (int i = 0; i < k - 1; ++i) p = bailey_step(p, std::nullopt, std::nullopt);
            return p;
        }
        case Family::Family3: {
            BaileyPair p = base_pair(BasePair::Family3X2);
            for (int i = 0; i < a; ++i) p = bailey_step(p, std::nullopt, std::nullopt);
            p = shift_lemma(p, ShiftKind::Key);
            for (int i = 0; i < k - 1 - a; ++i) p = bailey_step(p, std::nullopt, std::nullopt);
            return p;
        }
        case Family::Family4: {
            BaileyPair p = base_pair(BasePair::Family4X2);
            for (int i = 0; i < a; ++i) p = bailey_step(p, std::nullopt, std::nullopt);
            p = shift_lemma(p, ShiftKind::Key);
            for (int i = 0; i < k - 1 - a; ++i) p = bailey_step(p, std::nullopt, std::nullopt);
            return p;
        }
        case Family::Family5: {
            BaileyPair p = base_pair(BasePair::HikamiX2);
            for (int i = 0; i < a; ++i) p = bailey_step(p, std::nullopt, std::nullopt);
            p = shift_lemma(p, ShiftKind::Key);
            for (int i = 0; i < k - 2 - a; ++i) p = bailey_step(p, std::nullopt, std::nullopt);
            p = bailey_step(p, mono(-1, 0, 1), std::nullopt);
            return p;
        }
    }
    raise(Errc::internal_error, "unknown family");
}

namespace {

// closed alpha with an explicit family3 bracket sign
QSeries closed_alpha_impl(Family f, int k, int a, int sign3, int n, int order) {
    int b = (f == Family::Family2 || f == Family::Family3) ? 2 : 1;
    Monomial rel = mono(1, 2, b); // x^2 q^b
    QSeries head = poch(rel, n, b, order) * poch_inv(mono(1, 0, b), n, b, order) *
                   geometric_inverse(rel, order);
    long E = 0, xdeg = 0;
    int sgn = (n % 2 ? -1 : 1);
    Monomial bracket_term = Monomial::unit();
    long nn = n;
    switch (f) {
        case Family::Zagier:
        case Family::Hikami:
            E = tri(nn) + (a + 1) * nn * nn + (k - a - 1) * (nn * nn + nn);
            xdeg = 2L * k * nn;
            bracket_term = mono(-1, 2 * (a + 1), (a + 1) * (2 * n + 1));
            break;
        case Family::Family1:
            E = static_cast<long>(k) * nn * nn + (k - 1) * nn;
            xdeg = (2L * k - 1) * nn;
            bracket_term = mono(-1, 2, 2 * n + 1);
            break;
        case Family::Family2:
            E = (2L * k - 1) * nn * nn + (2L * k - 2) * nn;
            xdeg = (2L * k - 2) * nn;
            bracket_term = mono(-1, 1, 2 * n + 1);
            break;
        case Family::Family3:
            E = 2L * (a + 1) * nn * nn + nn + 2L * (k - a - 1) * (nn * nn + nn);
            xdeg = (2L * k - 1) * nn;
            bracket_term = mono(sign3, 2 * a + 1, (2 * a + 1) * (2 * n + 1));
            break;
        case Family::Family4:
            E = tri(nn) + static_cast<long>(a) * nn * nn + (k - a - 1) * (nn * nn + nn);
            xdeg = (2L * k - 2) * nn;
            sgn = 1;
            bracket_term = mono(1, 2 * a, a * (2 * n + 1));
            break;
        case Family::Family5:
            E = static_cast<long>(k) * nn * nn + (k - a - 1) * nn;
            xdeg = 2L * k * nn;
            bracket_term = mono(-1, 2 * (a + 1), (a + 1) * (2 * n + 1));
            head = head * poch(mono(-1, 0, 1), n, 1, order) *
                   poch_inv(mono(-1, 2, 1), n, 1, order);
            break;
    }
    if (E > order) return QSeries::zero(order);
    QSeries bracket = QSeries::one(order);
    if (bracket_term.ring_q_deg() <= order) bracket += bracket_term.as_qseries(order);
    return (head * bracket)
        .times_term(Rational(sgn), static_cast<int>(xdeg), static_cast<int>(E));
}

} // namespace

int family3_alpha_sign(int k, int a) {
    static std::map<std::pair<int, int>, int> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(k, a);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    BaileyPair iter = family_pair_by_iteration(Family::Family3, k, a);
    int resolved = 0;
    for (int sign : {-1, +1}) {
        PairSeq alpha([k, a, sign](int n, int order) {
            return closed_alpha_impl(Family::Family3, k, a, sign, n, order);
        });
        BaileyPair candidate{iter.rel_param, iter.base, alpha, iter.beta, "family3 sign probe"};
        if (verify_pair(candidate, 3, 14).ok) {
            resolved = sign;
            break;
        }
    }
    if (resolved == 0) raise(Errc::internal_error, "family3 alpha sign did not certify");
    cache[key] = resolved;
    return resolved;
}

QSeries closed_alpha(Family f, int k, int a, int n, int order) {
    check_family_params(f, k, a);
    int sign3 = (f == Family::Family3) ? family3_alpha_sign(k, a) : 0;
    return closed_alpha_impl(f, k, a, sign3, n, order);
}

QSeries closed_beta(Family f, int k, int a, int n, int order) {
    return multisum_qseries(closed_beta_spec(f, k, a), n, order);
}

BaileyPair build_family_pair(Family f, int k, int a) {
    check_family_params(f, k, a);
    BaileyPair iter = family_pair_by_iteration(f, k, a);
    int sign3 = (f == Family::Family3) ? family3_alpha_sign(k, a) : 0;
    PairSeq alpha([f, k, a, sign3](int n, int order) {
        return closed_alpha_impl(f, k, a, sign3, n, order);
    });
    std::string label = std::string(family_name(f)) + "(k=" + std::to_string(k) +
                        (family_uses_a(f) ? ", a=" + std::to_string(a) : "") + ")";
    if (f == Family::Family3)
        label += sign3 < 0 ? " [alpha sign resolved: -]" : " [alpha sign resolved: +]";
    return BaileyPair{iter.rel_param, iter.base, std::move(alpha), iter.beta, std::move(label)};
}

namespace {

MultisumSpec common_spec(Family f, int k, int a) {
    MultisumSpec s;
    s.depth = k;
    s.base = (f == Family::Family2 || f == Family::Family3) ? 2 : 1;
    s.chain = true;
    s.quad2.assign(k, 0);
    s.lin2.assign(k, 0);
    s.xw.assign(k, 0);
    int unit2 = 2 * s.base; // doubled exponent of one n_i^2 or n_i in base q^base
    switch (f) {
        case Family::Zagier:
        case Family::Hikami:
        case Family::Family3:
        case Family::Family4:
            for (int i = 0; i < k - 1; ++i) s.quad2[i] = unit2;
            for (int i = a; i <= k - 2; ++i) s.lin2[i] = unit2;
            s.delta_a = a;
            break;
        case Family::Family1:
        case Family::Family2:
            for (int i = 0; i < k - 1; ++i) s.quad2[i] = unit2;
            for (int i = 0; i <= k - 2; ++i) s.lin2[i] = unit2;
            s.delta_a = 0;
            break;
        case Family::Family5:
            for (int i = 0; i + 2 < k; ++i) s.quad2[i] = 2;
            s.quad2[k - 2] = 1; // binom(n+1, 2) = (n^2 + n)/2
            s.lin2[k - 2] = 1;
            for (int i = a; i + 2 < k; ++i) s.lin2[i] = 2;
            s.delta_a = a;
            break;
    }
    return s;
}

void add_family_inner_factors(MultisumSpec& s, Family f, int a, bool with_x) {
    int d0 = (a == 0) ? 1 : 0;
    switch (f) {
        case Family::Zagier:
        case Family::Hikami:
            break;
        case Family::Family1:
            s.factors.push_back({Monomial(Rational(-1), with_x ? 1 : 0, 1), 1, 0, 1, 0, true});
            break;
        case Family::Family2:
            s.factors.push_back({mono(1, 0, 1), 2, 0, 1, 0, false}); // (q; q^2)_{n_1}
            s.factors.push_back({Monomial(Rational(-1), with_x ? 1 : 0, 1), 1, 0, 2, 1, true});
            break;
        case Family::Family3:
            s.factors.push_back({Monomial(Rational(-1), with_x ? 1 : 0, 1), 2, 0, 1, d0, true});
            break;
        case Family::Family4:
            s.factors.push_back({mono(-1, 0, 0), 1, 0, 1, d0, false}); // (-1; q)_{n_1 + d}
            s.factors.push_back({Monomial(Rational(1), with_x ? 2 : 0, 1), 2, 0, 1, d0, true});
            break;
        case Family::Family5:
            s.factors.push_back({mono(-1, 0, 1), 1, s.depth - 2, 1, 0, false}); // (-q)_{n_{k-1}}
            break;
    }
}

} // namespace

MultisumSpec strange_lhs_spec(Family f, int k, int a) {
    check_family_params(f, k, a);
    MultisumSpec s = common_spec(f, k, a);
    // outer numerator (q^b; q^b)_{n_k} makes the sum terminate at roots of unity
    s.factors.push_back({mono(1, 0, s.base), s.base, k - 1, 1, 0, false});
    add_family_inner_factors(s, f, a, /*with_x=*/false);
    if (f == Family::Family5)
        s.factors.push_back({mono(-1, 0, 1), 1, k - 1, 1, 0, true}); // / (-q)_{n_k}
    s.label = std::string(family_name(f)) + "-strange-lhs";
    return s;
}

MultisumSpec closed_beta_spec(Family f, int k, int a) {
    check_family_params(f, k, a);
    MultisumSpec s = common_spec(f, k, a);
    for (int i = 0; i < k - 1; ++i) s.xw[i] = 2;
    s.factors.push_back({mono(1, 0, s.base), s.base, k - 1, 1, 0, true}); // 1/(Q;Q)_{n_k}
    add_family_inner_factors(s, f, a, /*with_x=*/true);
    if (f == Family::Family5)
        s.factors.push_back({mono(-1, 2, 1), 1, k - 1, 1, 0, true}); // / (-x^2 q)_{n_k}
    s.label = std::string(family_name(f)) + "-beta";
    return s;
}

MultisumSpec spec_double_base(const MultisumSpec& spec) {
    MultisumSpec s = spec;
    s.base *= 2;
    for (auto& v : s.quad2) v *= 2;
    for (auto& v : s.lin2) v *= 2;
    for (auto& fct : s.factors) {
        fct.base *= 2;
        fct.arg.q2 *= 2;
    }
    s.label += " (q -> q^2)";
    return s;
}

namespace {

struct MultisumEval {
    const MultisumSpec& spec;
    int order;
    std::vector<int> n;
    QSeries acc;

    MultisumEval(const MultisumSpec& s, int ord) : spec(s), order(ord), acc(ord) {
        n.assign(spec.depth, 0);
    }

    // doubled q-exponent contribution of variable i at value v
    long e2(int i, long v) const { return spec.quad2[i] * v * v + spec.lin2[i] * v; }

    void emit() {
        long E2 = 0, X = 0;
        for (int i = 0; i < spec.depth; ++i) {
            E2 += e2(i, n[i]);
            X += static_cast<long>(spec.xw[i]) * n[i];
        }
        if (E2 % 2 != 0) raise(Errc::internal_error, "odd doubled exponent in multisum");
        long E = E2 / 2;
        if (E > order) return;
        QSeries t = QSeries::term(Rational(1), static_cast<int>(X), static_cast<int>(E), order);
        if (spec.chain) {
            for (int j = 0; j + 1 < spec.depth; ++j) {
                int d = (j + 1 == spec.delta_a) ? 1 : 0;
                t = t * qbinom(n[j + 1] + d, n[j], spec.base, order);
                if (t.is_zero()) return;
            }
        }
        for (const auto& fct : spec.factors) {
            int cnt = fct.mul * n[fct.var] + fct.add;
            t = fct.denom ? t * poch_inv(fct.arg, cnt, fct.base, order)
                          : t * poch(fct.arg, cnt, fct.base, order);
            if (t.is_zero()) return;
        }
        acc += t;
    }

    void recurse(int i, long e2_rest) {
        if (i < 0) {
            emit();
            return;
        }
        int d = (spec.chain && i + 1 == spec.delta_a) ? 1 : 0;
        int bound = n[i + 1] + d; // i < depth-1 here
        for (int v = 0; v <= bound; ++v) {
            long mine = e2(i, v);
            if ((e2_rest + mine) / 2 > order) break;
            n[i] = v;
            recurse(i - 1, e2_rest + mine);
        }
    }
};

} // namespace

QSeries multisum_qseries(const MultisumSpec& spec, std::optional<int> fixed_outer, int order) {
    MultisumEval ev(spec, order);
    int outer = spec.depth - 1;
    if (fixed_outer) {
        ev.n[outer] = *fixed_outer;
        if (spec.depth == 1)
            ev.emit();
        else
            ev.recurse(outer - 1, ev.e2(outer, *fixed_outer));
        return ev.acc;
    }
    if (spec.quad2[outer] == 0 && spec.lin2[outer] == 0)
        raise(Errc::internal_error, "formally divergent multisum: unbounded outer variable");
    for (long v = 0;; ++v) {
        long mine = ev.e2(outer, v);
        if (mine / 2 > order) break;
        ev.n[outer] = static_cast<int>(v);
        if (spec.depth == 1)
            ev.emit();
        else
            ev.recurse(outer - 1, mine);
    }
    return ev.acc;
}

} // namespace qstrange
