#pragma once

#include "harmonia/expr.hpp"
#include "harmonia/quad.hpp"

namespace harmonia {

/// The three members of the harmonic Hermite-Hadamard chain on [a, b]:
///
///   f(2ab/(a+b))  <=  (ab/(b-a)) * integral of f(x)/x^2 over [a, b]
///                 <=  (f(a)+f(b))/2
///
/// for harmonically convex f. `middle` is computed by quadrature and
/// `middle_error` propagates its error estimate; verdicts allow that slack
/// plus the caller's tolerance.
struct HHReport {
    double left = 0.0;
    double middle = 0.0;
    double right = 0.0;
    double middle_error = 0.0;
    bool verdict_left = false;  // left  <= middle + middle_error + tol
    bool verdict_right = false; // middle <= right + middle_error + tol
};

HHReport hh_triple(const FunctionSpec& f, const Interval& iv, double tol = 1e-10,
                   const QuadOptions& quad = {});

/// Both sides of the trapezoid-gap identity
///
///   (f(a)+f(b))/2 - (ab/(b-a)) * integral of f(x)/x^2
///     = (ab(b-a)/2) * integral over [0,1] of
///         (1-2t)/(tb+(1-t)a)^2 * f'(ab/(tb+(1-t)a)) dt
///
/// evaluated independently by quadrature. Requires a positive interval and
/// a differentiable f on it.
struct IdentityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0; // |lhs - rhs|
    double lhs_error = 0.0;
    double rhs_error = 0.0;
};

IdentityReport identity_check(const FunctionSpec& f, const Interval& iv,
                              const QuadOptions& quad = {});

/// Kernel moments of the identity above, closed form:
///
///   lambda1 = 1/(ab) - (2/(b-a)^2) ln((a+b)^2/(4ab))
///   lambda2 = -1/(b(b-a)) + ((3a+b)/(b-a)^3) ln((a+b)^2/(4ab))
///   lambda3 =  1/(a(b-a)) - ((3b+a)/(b-a)^3) ln((a+b)^2/(4ab))
///
/// with lambda1 = lambda2 + lambda3. Evaluation is rearranged around
/// R(u) = (log1p(u)-u)/u^2, u = (b-a)^2/(4ab), so the values stay accurate
/// for nearly equal endpoints and extreme aspect ratios alike.
struct LambdaConstants {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
};

LambdaConstants lambda_constants(const Interval& iv);

/// Weighted kernel moments used by the conjugate-exponent bound, q > 1:
///
///   mu1 = integral over [0,1] of      t / (tb+(1-t)a)^(2q) dt
///   mu2 = integral over [0,1] of  (1-t) / (tb+(1-t)a)^(2q) dt
///
/// evaluated through the stable primitive (b^beta - a^beta)/beta, with a
/// series fallback for nearly equal endpoints.
struct MuConstants {
    double mu1 = 0.0;
    double mu2 = 0.0;
    double q = 0.0;
};

MuConstants mu_constants(const Interval& iv, double q);

/// Upper bounds for |(f(a)+f(b))/2 - middle| when |f'|^q is harmonically
/// convex on [a, b]:
///
///   power_mean (q >= 1):
///     (ab(b-a)/2) lambda1^(1-1/q) (lambda2|f'(a)|^q + lambda3|f'(b)|^q)^(1/q)
///   hoelder (q > 1, 1/p + 1/q = 1):
///     (ab(b-a)/2) (1/(p+1))^(1/p) (mu1|f'(a)|^q + mu2|f'(b)|^q)^(1/q)
///
/// The check only certifies the inequality; whether the hypothesis on
/// |f'|^q was verified is recorded as given by the caller.
enum class BoundKind { power_mean, hoelder };

struct BoundReport {
    BoundKind kind = BoundKind::power_mean;
    double q = 0.0;
    double p = 0.0; // conjugate exponent; 0 for power_mean
    double lhs_abs = 0.0;
    double lhs_error = 0.0;
    double rhs = 0.0;
    bool verdict = false;    // lhs_abs <= rhs + lhs_error + tol
    double tightness = 0.0;  // lhs_abs / rhs (0 when both sides vanish)
    bool hypothesis_checked = false;
    LambdaConstants lambda; // populated for power_mean
    MuConstants mu;         // populated for hoelder
};

BoundReport powermean_bound_check(const FunctionSpec& f, const Interval& iv,
                                  double q, double tol = 1e-10,
                                  bool hypothesis_checked = false,
                                  const QuadOptions& quad = {});

BoundReport hoelder_bound_check(const FunctionSpec& f, const Interval& iv,
                                double q, double tol = 1e-10,
                                bool hypothesis_checked = false,
                                const QuadOptions& quad = {});

/// x(t) = ab/(tb+(1-t)a), the reparametrization shared by the identity and
/// the bound derivations; runs from b at t=0 to a at t=1.
double harmonic_path(double a, double b, double t);

} // namespace harmonia
