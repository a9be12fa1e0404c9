#include "costboost/numerics.hpp"

#include <cmath>
#include <limits>

namespace costboost::numerics {

Bracket Bracket::make(const std::function<double(double)>& f, double lo, double hi) {
    if (!(lo < hi)) throw InputError("bracket requires lo < hi");
    Bracket b{lo, hi, f(lo), f(hi)};
    if (b.f_lo * b.f_hi > 0.0)
        throw InputError("bracket does not enclose a sign change");
    return b;
}

double bisect(const std::function<double(double)>& f, Bracket bracket,
              double tol, int max_iter) {
    if (!(tol > 0.0)) throw InputError("bisect requires tol > 0");
    if (bracket.f_lo == 0.0) return bracket.lo;
    if (bracket.f_hi == 0.0) return bracket.hi;

    double lo = bracket.lo, hi = bracket.hi, f_lo = bracket.f_lo;
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo < tol) return mid;
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_lo < 0.0) == (f_mid < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    if (hi - lo < tol) return 0.5 * (lo + hi);
    throw NumericsError("bisection did not converge within the iteration budget",
                        0.5 * (lo + hi));
}

double ipow(double x, int e) {
    if (e < 0) return 1.0 / ipow(x, -e);
    double result = 1.0;
    double base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

namespace {

double poly_eval(const std::map<int, double>& coeffs, double x) {
    KahanAccumulator acc;
    for (const auto& [e, c] : coeffs) acc.add(c * ipow(x, e));
    return acc.total();
}

}  // namespace

double positive_poly_root(const std::map<int, double>& coeffs) {
    if (coeffs.empty()) throw InputError("empty polynomial");

    int sign_changes = 0;
    double prev = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        const double c = it->second;
        if (c == 0.0) continue;
        if (prev != 0.0 && (prev > 0.0) != (c > 0.0)) ++sign_changes;
        prev = c;
    }
    if (sign_changes != 1)
        throw InputError("polynomial must have exactly one coefficient sign change");

    const double f1 = poly_eval(coeffs, 1.0);
    if (f1 == 0.0) return 1.0;

    double lo = 1.0, hi = 1.0;
    if (f1 < 0.0) {
        // Root above 1: expand upward.
        double f_hi = f1;
        while (f_hi < 0.0) {
            hi *= 2.0;
            if (hi > 1e6)
                throw NumericsError("no sign change found up to x = 1e6", hi);
            f_hi = poly_eval(coeffs, hi);
        }
        lo = hi / 2.0;
    } else {
        // Root below 1: contract downward.
        double f_lo = f1;
        while (f_lo > 0.0) {
            lo /= 2.0;
            if (lo < 1e-9)
                throw NumericsError("no sign change found down to x = 1e-9", lo);
            f_lo = poly_eval(coeffs, lo);
        }
        hi = lo * 2.0;
    }

    auto f = [&](double x) { return poly_eval(coeffs, x); };
    return bisect(f, Bracket::make(f, lo, hi), 1e-12, 200);
}

double golden_minimize(const std::function<double(double)>& f,
                       double lo, double hi, double tol) {
    if (!(lo < hi)) throw InputError("golden_minimize requires lo < hi");
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;   // 0.618...
    static const double invphi2 = (3.0 - std::sqrt(5.0)) / 2.0;  // 0.382...

    double a = lo, b = hi;
    double x1 = a + invphi2 * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);

    const int max_iter = 400;
    for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + invphi2 * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

}  // namespace costboost::numerics
