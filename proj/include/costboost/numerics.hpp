#ifndef COSTBOOST_NUMERICS_HPP
#define COSTBOOST_NUMERICS_HPP

#include <functional>
#include <map>

#include "costboost/core.hpp"

namespace costboost::numerics {

// Sign-change bracket: lo < hi and f_lo * f_hi <= 0.
struct Bracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;

    static Bracket make(const std::function<double(double)>& f, double lo, double hi);
};

// Deterministic bisection. Returns x with interval width < tol (or an exact
// sign-change endpoint). Throws NumericsError carrying the best iterate when
// max_iter runs out first.
double bisect(const std::function<double(double)>& f, Bracket bracket,
              double tol, int max_iter);

// Unique positive root of a generalized polynomial given as exponent ->
// coefficient. Requires exactly one sign change in the coefficient sequence
// ordered by exponent. Brackets by doubling from 1 (halving below 1), then
// bisects to 1e-12. Integer powers are evaluated by repeated squaring.
double positive_poly_root(const std::map<int, double>& coeffs);

// Golden-section argmin of a unimodal f on [lo, hi]; returns the best point
// found once the interval shrinks below tol (never throws).
double golden_minimize(const std::function<double(double)>& f,
                       double lo, double hi, double tol);

double ipow(double x, int e);

}  // namespace costboost::numerics

#endif  // COSTBOOST_NUMERICS_HPP
