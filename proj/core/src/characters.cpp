#include "qstrange/characters.hpp"

#include "qstrange/error.hpp"

namespace qstrange {

const Rational& PeriodicFunction::at(long n) const {
    long r = n % period;
    if (r < 0) r += period;
    if (r == 0) r = period;
    return values[static_cast<size_t>(r - 1)];
}

bool PeriodicFunction::is_even() const {
    for (int n = 1; n < period; ++n)
        if (at(n) != at(period - n)) return false;
    return true;
}

Rational PeriodicFunction::mean() const {
    Rational s(0);
    for (const auto& v : values) s += v;
    return s / period;
}

namespace {

PeriodicFunction from_residues(int period, std::initializer_list<long> plus,
                               std::initializer_list<long> minus) {
    PeriodicFunction f;
    f.period = period;
    f.values.assign(period, Rational(0));
    auto idx = [period](long r) {
        long m = r % period;
        if (m < 0) m += period;
        if (m == 0) m = period;
        return static_cast<size_t>(m - 1);
    };
    for (long r : plus) f.values[idx(r)] = 1;
    for (long r : minus) {
        if (f.values[idx(r)] == 1)
            raise(Errc::bad_params, "character residue classes collide with opposite signs");
        f.values[idx(r)] = -1;
    }
    return f;
}

} // namespace

PeriodicFunction character(CharKind kind, int k, int a) {
    switch (kind) {
        case CharKind::Zagier12:
            return from_residues(12, {1, 11}, {5, 7});
        case CharKind::Hikami:
            if (k < 1 || a < 0 || a > k - 1) raise(Errc::bad_params, "need 0 <= a <= k-1");
            return from_residues(8 * k + 4, {2 * k - 2 * a - 1, 6 * k + 2 * a + 5},
                                 {2 * k + 2 * a + 3, 6 * k - 2 * a + 1});
        case CharKind::Family1:
            if (k < 1) raise(Errc::bad_params, "need k >= 1");
            return from_residues(4 * k, {k - 1, 3 * k + 1}, {k + 1, 3 * k - 1});
        case CharKind::Family2: {
            if (k < 1) raise(Errc::bad_params, "need k >= 1");
            int kk = 2 * k - 1; // same residue pattern as Family1 at parameter 2k-1
            return from_residues(4 * kk, {kk - 1, 3 * kk + 1}, {kk + 1, 3 * kk - 1});
        }
        case CharKind::Family3:
            if (k < 1 || a < 0 || a > k - 1) raise(Errc::bad_params, "need 0 <= a <= k-1");
            return from_residues(8 * k, {2 * k - 2 * a - 1, 6 * k + 2 * a + 1},
                                 {2 * k + 2 * a + 1, 6 * k - 2 * a - 1});
        case CharKind::Family4:
            if (k < 1 || a < 0 || a > k - 1) raise(Errc::bad_params, "need 0 <= a <= k-1");
            return from_residues(4 * k - 2, {2 * k - 2 * a - 1, -(2 * k - 2 * a - 1)}, {});
        case CharKind::Family5:
            if (k < 2 || a < 0 || a >= k - 1) raise(Errc::bad_params, "need 0 <= a < k-1");
            return from_residues(4 * k, {k - a - 1, 3 * k + a + 1}, {k + a + 1, 3 * k - a - 1});
        case CharKind::Torus: {
            int s = k, t = a;
            if (s < 1 || t < 1) raise(Errc::bad_params, "need s, t >= 1");
            long st = static_cast<long>(s) * t;
            return from_residues(static_cast<int>(2 * st), {st - s - t, st + s + t},
                                 {st - s + t, st + s - t});
        }
    }
    raise(Errc::bad_params, "unknown character kind");
}

void check_integrality(const PartialTheta& pt) {
    long M = pt.chi.period;
    long D = pt.divisor;
    long c = pt.shift;
    // n, n+M, n+2M pin divisibility for the whole congruence class
    for (long n = 1; n <= 3 * M; ++n) {
        if (pt.chi.at(n) == 0) continue;
        if ((n * n - c * c) % D != 0)
            raise(Errc::integrality_violation,
                  "divisor does not divide n^2 - c^2 at n = " + std::to_string(n));
    }
}

QSeries partial_theta_qseries(const PartialTheta& pt, std::optional<XRule> xrule, int order,
                              int n_start) {
    check_integrality(pt);
    QSeries r(order);
    for (long n = n_start;; ++n) {
        long num = n * n - static_cast<long>(pt.shift) * pt.shift;
        if (n > pt.shift && num / pt.divisor > order) break;
        const Rational& chi = pt.chi.at(n);
        if (chi == 0 || (pt.weight == 1 && n == 0)) continue;
        if (num < 0)
            raise(Errc::integrality_violation, "negative exponent on the support at n = " +
                                                   std::to_string(n));
        long d = num / pt.divisor;
        if (d > order) continue;
        Rational coeff = pt.prefactor * chi;
        if (pt.weight == 1) coeff *= n;
        int x_exp = 0;
        if (xrule) {
            long xe = n - pt.shift;
            if (xe % xrule->e != 0 || xe < 0)
                raise(Errc::integrality_violation, "x-exponent rule fails at n = " + std::to_string(n));
            x_exp = static_cast<int>(xe / xrule->e);
        }
        r += QSeries::term(coeff, x_exp, static_cast<int>(d), order);
    }
    return r;
}

} // namespace qstrange
