#include "harmonia/hh.hpp"

#include <cmath>
#include <limits>

namespace harmonia {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_positive(const Interval& iv, const char* who) {
    if (!iv.positive())
        throw std::invalid_argument(std::string(who) +
                                    " requires a positive interval");
}

// R(u) = (log1p(u) - u)/u^2 for u >= 0. Series near 0, where the direct
// form cancels: R = -1/2 + u/3 - u^2/4 + ...
double log1p_remainder(double u) {
    if (u >= 0.05)
        return (std::log1p(u) - u) / (u * u);
    double sum = 0.0;
    double pw = 1.0; // (-u)^k
    for (int k = 0; k < 64; ++k) {
        double term = -pw / (k + 2);
        sum += term;
        pw *= -u;
        if (std::fabs(pw) < kEps * (k + 3))
            break;
    }
    return sum;
}

// Trapezoid midpoint minus the harmonic-mean value is what every report
// here integrates; the shared piece is mean = (ab/(b-a)) * int f/x^2.
struct MiddleValue {
    double value;
    double error;
};

MiddleValue hh_middle(const FunctionSpec& f, const Interval& iv,
                      const QuadOptions& quad) {
    double factor = iv.a * iv.b / iv.width();
    QuadOptions opt = quad;
    // The caller's tolerance applies to the scaled mean, not the raw integral.
    opt.tol = quad.tol / std::fabs(factor);
    QuadResult r = integrate(
        [&f](double x) { return f.value_at(x) / (x * x); }, iv, opt);
    return {factor * r.value, std::fabs(factor) * r.error_estimate};
}

} // namespace

double harmonic_path(double a, double b, double t) {
    return a * b / (t * b + (1.0 - t) * a);
}

HHReport hh_triple(const FunctionSpec& f, const Interval& iv, double tol,
                   const QuadOptions& quad) {
    double hmean = 2.0 / (1.0 / iv.a + 1.0 / iv.b);
    HHReport rep;
    rep.left = f.value_at(hmean);
    MiddleValue mid = hh_middle(f, iv, quad);
    rep.middle = mid.value;
    rep.middle_error = mid.error;
    rep.right = 0.5 * (f.value_at(iv.a) + f.value_at(iv.b));
    rep.verdict_left = rep.left <= rep.middle + rep.middle_error + tol;
    rep.verdict_right = rep.middle <= rep.right + rep.middle_error + tol;
    return rep;
}

IdentityReport identity_check(const FunctionSpec& f, const Interval& iv,
                              const QuadOptions& quad) {
    require_positive(iv, "identity_check");
    double a = iv.a, b = iv.b;

    MiddleValue mid = hh_middle(f, iv, quad);
    IdentityReport rep;
    rep.lhs = 0.5 * (f.value_at(a) + f.value_at(b)) - mid.value;
    rep.lhs_error = mid.error;

    double factor = 0.5 * a * b * iv.width();
    QuadOptions opt = quad;
    opt.tol = quad.tol / factor;
    QuadResult r = integrate(
        [&](double t) {
            double s = t * b + (1.0 - t) * a;
            return (1.0 - 2.0 * t) / (s * s) *
                   f.derivative_at(harmonic_path(a, b, t));
        },
        0.0, 1.0, opt);
    rep.rhs = factor * r.value;
    rep.rhs_error = factor * r.error_estimate;
    rep.gap = std::fabs(rep.lhs - rep.rhs);
    return rep;
}

LambdaConstants lambda_constants(const Interval& iv) {
    require_positive(iv, "lambda_constants");
    double a = iv.a, b = iv.b;
    double d = iv.width();
    double ab = a * b;
    double u = d * d / (4.0 * ab);
    double R = log1p_remainder(u); // < 0, so the sums below never cancel

    LambdaConstants l;
    l.lambda1 = 1.0 / (2.0 * ab) - d * d * R / (8.0 * ab * ab);
    l.lambda3 = 1.0 / (4.0 * ab) - (3.0 * b + a) * d * R / (16.0 * ab * ab);
    if (u <= 1.0) {
        l.lambda2 = 1.0 / (4.0 * ab) + (3.0 * a + b) * d * R / (16.0 * ab * ab);
    } else {
        // Far-apart endpoints: the log term dominates and the direct form
        // is the accurate one.
        l.lambda2 = (3.0 * a + b) * std::log1p(u) / (d * d * d) - 1.0 / (b * d);
    }
    return l;
}

namespace {

// (b^beta - a^beta)/beta through expm1, exact digits even when b ~ a or
// beta ~ 0.
double power_difference(double a, double r, double beta) {
    return std::pow(a, beta) * std::expm1(beta * std::log1p(r)) / beta;
}

} // namespace

MuConstants mu_constants(const Interval& iv, double q) {
    require_positive(iv, "mu_constants");
    if (!(q > 1.0))
        throw std::invalid_argument("mu_constants requires q > 1");
    double a = iv.a, b = iv.b;
    double d = iv.width();
    double r = d / a;

    MuConstants m;
    m.q = q;
    if (r < 1e-3 && 2.0 * q * r < 1.0) {
        // (1 + t r)^(-2q) expanded around r = 0; the closed form below
        // cancels to O(r^2) here.
        double term = 1.0;
        double s1 = 0.5;             // sum term_k / (k+2)
        double s2 = 0.5;             // sum term_k / ((k+1)(k+2))
        for (int k = 1; k < 400; ++k) {
            term *= -r * (2.0 * q + k - 1.0) / k;
            s1 += term / (k + 2);
            s2 += term / ((k + 1.0) * (k + 2.0));
            if (std::fabs(term) < kEps)
                break;
        }
        double scale = std::pow(a, -2.0 * q);
        m.mu1 = scale * s1;
        m.mu2 = scale * s2;
    } else {
        double beta = 1.0 - 2.0 * q;
        double p_lo = power_difference(a, r, beta);       // int s^(-2q)
        double p_hi = power_difference(a, r, beta + 1.0); // int s^(1-2q)
        m.mu1 = (p_hi - a * p_lo) / (d * d);
        m.mu2 = (b * p_lo - p_hi) / (d * d);
    }
    if (!std::isfinite(m.mu1) || !std::isfinite(m.mu2))
        throw std::invalid_argument("mu constants overflow for these parameters");
    return m;
}

namespace {

BoundReport bound_common(const FunctionSpec& f, const Interval& iv, double q,
                         const QuadOptions& quad) {
    MiddleValue mid = hh_middle(f, iv, quad);
    BoundReport rep;
    rep.q = q;
    rep.lhs_abs =
        std::fabs(0.5 * (f.value_at(iv.a) + f.value_at(iv.b)) - mid.value);
    rep.lhs_error = mid.error;
    return rep;
}

void finish_bound(BoundReport& rep, double tol) {
    rep.verdict = rep.lhs_abs <= rep.rhs + rep.lhs_error + tol;
    if (rep.rhs > 0.0)
        rep.tightness = rep.lhs_abs / rep.rhs;
    else
        rep.tightness = rep.lhs_abs == 0.0
                            ? 0.0
                            : std::numeric_limits<double>::infinity();
}

} // namespace

BoundReport powermean_bound_check(const FunctionSpec& f, const Interval& iv,
                                  double q, double tol, bool hypothesis_checked,
                                  const QuadOptions& quad) {
    require_positive(iv, "powermean_bound_check");
    if (!(q >= 1.0))
        throw std::invalid_argument("powermean_bound_check requires q >= 1");

    BoundReport rep = bound_common(f, iv, q, quad);
    rep.kind = BoundKind::power_mean;
    rep.hypothesis_checked = hypothesis_checked;
    rep.lambda = lambda_constants(iv);

    double da = std::pow(std::fabs(f.derivative_at(iv.a)), q);
    double db = std::pow(std::fabs(f.derivative_at(iv.b)), q);
    double front = 0.5 * iv.a * iv.b * iv.width();
    rep.rhs = front * std::pow(rep.lambda.lambda1, 1.0 - 1.0 / q) *
              std::pow(rep.lambda.lambda2 * da + rep.lambda.lambda3 * db,
                       1.0 / q);
    finish_bound(rep, tol);
    return rep;
}

BoundReport hoelder_bound_check(const FunctionSpec& f, const Interval& iv,
                                double q, double tol, bool hypothesis_checked,
                                const QuadOptions& quad) {
    require_positive(iv, "hoelder_bound_check");
    if (!(q > 1.0))
        throw std::invalid_argument("hoelder_bound_check requires q > 1");

    BoundReport rep = bound_common(f, iv, q, quad);
    rep.kind = BoundKind::hoelder;
    rep.p = q / (q - 1.0);
    rep.hypothesis_checked = hypothesis_checked;
    rep.mu = mu_constants(iv, q);

    double da = std::pow(std::fabs(f.derivative_at(iv.a)), q);
    double db = std::pow(std::fabs(f.derivative_at(iv.b)), q);
    double front = 0.5 * iv.a * iv.b * iv.width();
    rep.rhs = front * std::pow(1.0 / (rep.p + 1.0), 1.0 / rep.p) *
              std::pow(rep.mu.mu1 * da + rep.mu.mu2 * db, 1.0 / q);
    finish_bound(rep, tol);
    return rep;
}

} // namespace harmonia
