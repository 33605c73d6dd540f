#include "qstrange/rooteval.hpp"

#include <map>
#include <numeric>
#include <tuple>

namespace qstrange {

namespace {

// t-valuation plus unit part: value = t^val * unit
struct ValTS {
    long val;
    TSeries unit;
    ValTS(long v, TSeries u) : val(v), unit(std::move(u)) {}
};

struct RootContext {
    int M, K;
    CycNum one;
    std::map<long, TSeries> exp_cache; // zeta^e e^{-et} by exponent e
    std::map<std::tuple<std::string, int, int, int>, ValTS> poch_cache;
    std::map<std::tuple<std::string, int, int, int>, TSeries> poch_inv_cache;

    RootContext(int M_, int K_) : M(M_), K(K_), one(CycNum::one(M_)) {}

    const TSeries& q_pow(long e) {
        auto it = exp_cache.find(e);
        if (it != exp_cache.end()) return it->second;
        TSeries s = TSeries::exp_rational(Rational(-e), M, K).scaled(CycNum::zeta_pow(M, e));
        return exp_cache.emplace(e, std::move(s)).first->second;
    }

    // single Pochhammer factor 1 - c zeta^e e^{-et}
    ValTS factor(const Rational& c, long e) {
        CycNum z = CycNum::zeta_pow(M, e).scaled(c);
        if (z == one) {
            if (e == 0) return ValTS{static_cast<long>(K) + 1, TSeries::one(M, K)}; // exact zero
            // 1 - e^{-et} = t * (e - e^2 t / 2 + ...)
            TSeries u(M, K);
            Rational term(1); // (-e)^{i+1} / (i+1)!
            for (int i = 0; i <= K; ++i) {
                term = term * Rational(-e) / (i + 1);
                u.set_coeff(i, CycNum::from_rational(M, -term));
            }
            return ValTS{1, std::move(u)};
        }
        TSeries u = TSeries::from_cyc(-z, K) * TSeries::exp_rational(Rational(-e), M, K);
        u.set_coeff(0, u.coeff(0) + one);
        return ValTS{0, std::move(u)};
    }

    const ValTS& poch_at(const Monomial& arg, int base, int n) {
        if (arg.x_exp != 0)
            raise(Errc::internal_error, "x left in a root-of-unity evaluation");
        auto key = std::make_tuple(to_string(arg.coeff), arg.q2, base, n);
        auto it = poch_cache.find(key);
        if (it != poch_cache.end()) return it->second;
        if (n == 0 || arg.is_zero())
            return poch_cache.emplace(key, ValTS{0, TSeries::one(M, K)}).first->second;
        const ValTS& prev = poch_at(arg, base, n - 1);
        ValTS f = factor(arg.coeff, arg.q_exp() + static_cast<long>(base) * (n - 1));
        ValTS r{prev.val + f.val, prev.unit * f.unit};
        return poch_cache.emplace(key, std::move(r)).first->second;
    }

    const TSeries& poch_unit_inv(const Monomial& arg, int base, int n) {
        auto key = std::make_tuple(to_string(arg.coeff), arg.q2, base, n);
        auto it = poch_inv_cache.find(key);
        if (it != poch_inv_cache.end()) return it->second;
        TSeries inv = poch_at(arg, base, n).unit.inverse();
        return poch_inv_cache.emplace(key, std::move(inv)).first->second;
    }
};

struct RootEval {
    const MultisumSpec& spec;
    RootContext ctx;
    std::vector<int> n;
    TSeries acc;

    RootEval(const MultisumSpec& s, int M, int K) : spec(s), ctx(M, K), acc(M, K) {
        n.assign(spec.depth, 0);
    }

    // t-valuation contributed by factors that involve only the outer variable
    long outer_valuation(int v) {
        long val = 0;
        for (const auto& fct : spec.factors) {
            if (fct.var != spec.depth - 1) continue;
            const ValTS& p = ctx.poch_at(fct.arg, fct.base, fct.mul * v + fct.add);
            if (fct.denom) {
                if (p.val > 0)
                    raise(Errc::denominator_vanishes,
                          "(" + fct.arg.str() + "; q^" + std::to_string(fct.base) + ")_" +
                              std::to_string(fct.mul * v + fct.add) +
                              " vanishes at a root of order " + std::to_string(ctx.M));
            } else {
                val += p.val;
            }
        }
        return val;
    }

    void emit() {
        long E2 = 0;
        for (int i = 0; i < spec.depth; ++i)
            E2 += spec.quad2[i] * static_cast<long>(n[i]) * n[i] +
                  spec.lin2[i] * static_cast<long>(n[i]);
        if (E2 % 2 != 0) raise(Errc::internal_error, "odd doubled exponent in multisum");
        long val = 0;
        TSeries unit = ctx.q_pow(E2 / 2);
        Monomial unit_arg(Rational(1), 0, spec.base);
        if (spec.chain) {
            for (int j = 0; j + 1 < spec.depth; ++j) {
                int d = (j + 1 == spec.delta_a) ? 1 : 0;
                int top = n[j + 1] + d, bot = n[j];
                if (bot > top) return;
                const ValTS& pn = ctx.poch_at(unit_arg, spec.base, top);
                const ValTS& pk = ctx.poch_at(unit_arg, spec.base, bot);
                const ValTS& pnk = ctx.poch_at(unit_arg, spec.base, top - bot);
                long v = pn.val - pk.val - pnk.val;
                if (v < 0) raise(Errc::internal_error, "negative valuation for a q-binomial");
                val += v;
                if (val > ctx.K) return;
                unit = unit * pn.unit * ctx.poch_unit_inv(unit_arg, spec.base, bot) *
                       ctx.poch_unit_inv(unit_arg, spec.base, top - bot);
            }
        }
        for (const auto& fct : spec.factors) {
            int cnt = fct.mul * n[fct.var] + fct.add;
            const ValTS& p = ctx.poch_at(fct.arg, fct.base, cnt);
            if (fct.denom) {
                if (p.val > 0)
                    raise(Errc::denominator_vanishes,
                          "(" + fct.arg.str() + "; q^" + std::to_string(fct.base) + ")_" +
                              std::to_string(cnt) + " vanishes at a root of order " +
                              std::to_string(ctx.M));
                unit = unit * ctx.poch_unit_inv(fct.arg, fct.base, cnt);
            } else {
                val += p.val;
                if (val > ctx.K) return;
                unit = unit * p.unit;
            }
        }
        acc += unit.shifted(static_cast<int>(val));
    }

    void recurse(int i) {
        if (i < 0) {
            emit();
            return;
        }
        int d = (spec.chain && i + 1 == spec.delta_a) ? 1 : 0;
        int bound = n[i + 1] + d;
        for (int v = 0; v <= bound; ++v) {
            n[i] = v;
            recurse(i - 1);
        }
    }
};

} // namespace

TSeries eval_terminating_sum(const MultisumSpec& spec, int M, int K, int extra_outer) {
    if (M < 1) raise(Errc::bad_params, "root order must be positive");
    RootEval ev(spec, M, K);
    int Mb = M / std::gcd(spec.base, M); // vanishing period of (q^base; q^base)_n at zeta_M
    long cutoff = static_cast<long>(Mb) * (K + 2) + extra_outer;
    int outer = spec.depth - 1;
    for (long v = 0; v < cutoff; ++v) {
        ev.n[outer] = static_cast<int>(v);
        if (ev.outer_valuation(static_cast<int>(v)) > K) continue;
        if (spec.depth == 1)
            ev.emit();
        else
            ev.recurse(outer - 1);
    }
    return ev.acc;
}

CycNum eval_qseries_at_root(const QSeries& f, int M) {
    CycNum acc = CycNum::zero(M);
    for (int d = 0; d <= f.order(); ++d) {
        const XPoly& p = f.coefficient(d);
        if (p.is_zero()) continue;
        acc += CycNum::zeta_pow(M, d).scaled(p.eval_one());
    }
    return acc;
}

} // namespace qstrange
