#include "qstrange/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "qstrange/error.hpp"

namespace qstrange {

namespace {

using ZPoly = std::vector<Integer>; // low degree first

// exact division of integer polynomials, remainder must vanish
ZPoly zpoly_div(ZPoly num, const ZPoly& den) {
    ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Integer(0));
    while (num.size() >= den.size()) {
        size_t shift = num.size() - den.size();
        // den is monic in every use here
        Integer c = num.back();
        quot[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        while (!num.empty() && num.back() == 0) num.pop_back();
        if (num.empty()) break;
    }
    if (!num.empty()) raise(Errc::internal_error, "inexact cyclotomic division");
    return quot;
}

} // namespace

int euler_phi(int M) {
    int r = M, n = M;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<Integer> cyclotomic_poly(int M) {
    static std::map<int, ZPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    std::function<const ZPoly&(int)> get = [&](int m) -> const ZPoly& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        ZPoly num(m + 1, Integer(0)); // x^m - 1
        num[0] = -1;
        num[m] = 1;
        for (int d = 1; d < m; ++d) {
            if (m % d == 0) num = zpoly_div(std::move(num), get(d));
        }
        return cache.emplace(m, std::move(num)).first->second;
    };
    if (M < 1) raise(Errc::bad_params, "cyclotomic order must be positive");
    return get(M);
}

namespace {

struct CycContext {
    int M;
    int phi;
    std::vector<Rational> phi_monic;            // Phi_M as rationals, low first
    std::vector<std::vector<Rational>> zeta_pow; // zeta^j in the power basis, j in [0, M)
};

const CycContext& context(int M) {
    static std::map<int, CycContext> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;

    CycContext ctx;
    ctx.M = M;
    auto phi_poly = cyclotomic_poly(M);
    ctx.phi = static_cast<int>(phi_poly.size()) - 1;
    ctx.phi_monic.reserve(phi_poly.size());
    for (const auto& z : phi_poly) ctx.phi_monic.emplace_back(Rational(z));

    ctx.zeta_pow.resize(M);
    std::vector<Rational> cur(ctx.phi, Rational(0));
    cur[0] = 1;
    for (int j = 0; j < M; ++j) {
        ctx.zeta_pow[j] = cur;
        // multiply by zeta and reduce by Phi_M
        std::vector<Rational> next(ctx.phi + 1, Rational(0));
        for (int i = 0; i < ctx.phi; ++i) next[i + 1] = cur[i];
        if (next[ctx.phi] != 0) {
            Rational lead = next[ctx.phi];
            for (int i = 0; i <= ctx.phi; ++i) next[i] -= lead * ctx.phi_monic[i];
        }
        next.resize(ctx.phi);
        cur = std::move(next);
    }
    return cache.emplace(M, std::move(ctx)).first->second;
}

} // namespace

CycNum::CycNum(int M) : M_(M) {
    if (M < 1) raise(Errc::bad_params, "cyclotomic order must be positive");
    c_.assign(context(M).phi, Rational(0));
}

CycNum CycNum::from_rational(int M, const Rational& r) {
    CycNum z(M);
    z.c_[0] = r;
    return z;
}

CycNum CycNum::zeta_pow(int M, long e) {
    const auto& ctx = context(M);
    long j = e % M;
    if (j < 0) j += M;
    CycNum z(M);
    z.c_ = ctx.zeta_pow[static_cast<size_t>(j)];
    return z;
}

bool CycNum::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycNum::rational_part() const { return c_[0]; }

CycNum& CycNum::operator+=(const CycNum& o) {
    if (M_ != o.M_) raise(Errc::bad_params, "mixed cyclotomic orders (lift first)");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    if (M_ != o.M_) raise(Errc::bad_params, "mixed cyclotomic orders (lift first)");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (a.M_ != b.M_) raise(Errc::bad_params, "mixed cyclotomic orders (lift first)");
    const auto& ctx = context(a.M_);
    int phi = ctx.phi;
    std::vector<Rational> full(2 * phi - 1, Rational(0));
    for (int i = 0; i < phi; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (b.c_[j] == 0) continue;
            full[i + j] += a.c_[i] * b.c_[j];
        }
    }
    // reduce x^d for d >= phi
    for (int d = 2 * phi - 2; d >= phi; --d) {
        if (full[d] == 0) continue;
        Rational lead = full[d];
        full[d] = 0;
        for (int i = 0; i < phi; ++i) full[d - phi + i] -= lead * ctx.phi_monic[i];
    }
    CycNum r(a.M_);
    for (int i = 0; i < phi; ++i) r.c_[i] = full[i];
    return r;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycNum CycNum::scaled(const Rational& s) const {
    CycNum r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

CycNum CycNum::inverse() const {
    if (is_zero()) raise(Errc::division_by_zero, "inverse of zero in Q(zeta)");
    const auto& ctx = context(M_);
    using QPoly = std::vector<Rational>;
    auto deg = [](const QPoly& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
        return d;
    };
    // extended Euclid: u * this + v * Phi = gcd (a unit, since Phi is irreducible)
    QPoly r0 = ctx.phi_monic, r1(c_.begin(), c_.end());
    QPoly u0{Rational(0)}, u1{Rational(1)};
    while (true) {
        int d1 = deg(r1);
        if (d1 < 0) raise(Errc::internal_error, "gcd degenerated in cyclotomic inverse");
        if (d1 == 0) {
            Rational lead = r1[0];
            CycNum out(M_);
            for (size_t i = 0; i < u1.size() && i < out.c_.size(); ++i) out.c_[i] = u1[i] / lead;
            return out;
        }
        int d0 = deg(r0);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(u0, u1);
            continue;
        }
        // r0 -= (lead0/lead1) x^(d0-d1) r1, same on u
        Rational f = r0[static_cast<size_t>(d0)] / r1[static_cast<size_t>(d1)];
        int shift = d0 - d1;
        if (static_cast<int>(u0.size()) < static_cast<int>(u1.size()) + shift)
            u0.resize(u1.size() + static_cast<size_t>(shift), Rational(0));
        for (int i = 0; i <= d1; ++i) r0[static_cast<size_t>(i + shift)] -= f * r1[static_cast<size_t>(i)];
        for (size_t i = 0; i < u1.size(); ++i) u0[i + static_cast<size_t>(shift)] -= f * u1[i];
        std::swap(r0, r1);
        std::swap(u0, u1);
    }
}

CycNum CycNum::lift_to(int L) const {
    if (L == M_) return *this;
    if (L % M_ != 0) raise(Errc::bad_params, "lift target must be a multiple of the order");
    int step = L / M_;
    CycNum r(L);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        r += CycNum::zeta_pow(L, static_cast<long>(j) * step).scaled(c_[j]);
    }
    return r;
}

bool CycNum::operator==(const CycNum& o) const { return M_ == o.M_ && c_ == o.c_; }

std::string CycNum::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << to_string(c_[i]);
    }
    os << "]@" << M_;
    return os.str();
}

} // namespace qstrange
