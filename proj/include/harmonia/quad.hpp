#pragma once

#include <functional>
#include <span>
#include <stdexcept>

namespace harmonia {

/// Closed interval [a, b] with a < b, both endpoints finite and of the
/// same strict sign (0 is never inside or on the boundary). Construction
/// validates; violations raise std::invalid_argument.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_);

    double width() const { return b - a; }
    bool positive() const { return a > 0.0; }
    bool contains(double x) const { return a <= x && x <= b; }
};

class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct QuadOptions {
    double tol = 1e-10;        // absolute tolerance for the whole integral
    long subdivision_cap = 100000; // max accepted panels before giving up
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0; // sum of per-panel Richardson estimates
    long subdivisions = 0;       // accepted panels (1 = no refinement)
};

using Integrand = std::function<double(double)>;

/// Adaptive Simpson quadrature with Richardson error control. Each panel
/// splits until its extrapolated error is below its share of `tol`
/// (halved with the panel) or below the roundoff floor of the panel sum.
/// Throws QuadratureError when the subdivision cap is exceeded or the
/// integrand evaluates to a non-finite value inside the range.
QuadResult integrate(const Integrand& g, double lo, double hi,
                     const QuadOptions& opt = {});

QuadResult integrate(const Integrand& g, const Interval& iv,
                     const QuadOptions& opt = {});

/// Same, but the range is first split at the given interior points (sorted,
/// strictly inside (lo, hi)) so that integrands with kinks converge at the
/// usual rate. Each piece receives a width-proportional share of `tol`.
QuadResult integrate_split(const Integrand& g, double lo, double hi,
                           std::span<const double> interior_points,
                           const QuadOptions& opt = {});

} // namespace harmonia
