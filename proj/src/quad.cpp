#include "harmonia/quad.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace harmonia {

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("interval endpoints must be finite");
    if (!(a < b))
        throw std::invalid_argument("interval needs a < b");
    if (a <= 0.0 && b >= 0.0)
        throw std::invalid_argument("interval must not contain 0");
}

namespace {

constexpr int kMaxDepth = 60;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Workspace {
    const Integrand& g;
    long cap;
    long panels = 0;
    double err_sum = 0.0;

    double sample(double x) const {
        double v = g(x);
        if (!std::isfinite(v))
            throw QuadratureError("integrand is not finite at x = " +
                                  std::to_string(x));
        return v;
    }
};

double simpson(double fa, double fm, double fb, double w) {
    return w * (fa + 4.0 * fm + fb) / 6.0;
}

// One panel [a, b] with cached samples at the ends and midpoint, its
// Simpson sum S, and its tolerance share. Returns the refined estimate.
double refine(Workspace& ws, double a, double b, double fa, double fm, double fb,
              double S, double tol, int depth) {
    double m = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    double lm = a + 0.5 * h;
    double rm = m + 0.5 * h;
    double flm = ws.sample(lm);
    double frm = ws.sample(rm);
    double Sl = simpson(fa, flm, fm, h);
    double Sr = simpson(fm, frm, fb, h);
    double S2 = Sl + Sr;
    double err = (S2 - S) / 15.0;

    // Roundoff floor: once the estimate is at the noise level of the panel's
    // absolute sample mass, further splitting only accumulates noise.
    double mass = (std::fabs(fa) + 4.0 * std::fabs(flm) + 2.0 * std::fabs(fm) +
                   4.0 * std::fabs(frm) + std::fabs(fb)) *
                  h / 6.0;
    bool converged = std::fabs(err) <= tol || std::fabs(err) <= 8.0 * kEps * mass;

    if (converged || (m <= a || b <= m)) {
        ws.panels += 1;
        if (ws.panels > ws.cap)
            throw QuadratureError("tolerance unreachable: subdivision cap hit");
        ws.err_sum += std::fabs(err);
        return S2 + err;
    }
    if (depth >= kMaxDepth)
        throw QuadratureError("tolerance unreachable: max recursion depth");
    double half = 0.5 * tol;
    double left = refine(ws, a, m, fa, flm, fm, Sl, half, depth + 1);
    double right = refine(ws, m, b, fm, frm, fb, Sr, half, depth + 1);
    return left + right;
}

QuadResult run(const Integrand& g, double lo, double hi, const QuadOptions& opt) {
    Workspace ws{g, opt.subdivision_cap};
    double fa = ws.sample(lo);
    double fb = ws.sample(hi);
    double m = 0.5 * (lo + hi);
    double fm = ws.sample(m);
    double S = simpson(fa, fm, fb, hi - lo);
    double v = refine(ws, lo, hi, fa, fm, fb, S, opt.tol, 0);
    return QuadResult{v, ws.err_sum, ws.panels};
}

} // namespace

QuadResult integrate(const Integrand& g, double lo, double hi,
                     const QuadOptions& opt) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw std::invalid_argument("integration range needs finite lo < hi");
    if (!(opt.tol > 0.0))
        throw std::invalid_argument("quadrature tolerance must be positive");
    if (opt.subdivision_cap < 1)
        throw std::invalid_argument("subdivision cap must be at least 1");
    return run(g, lo, hi, opt);
}

QuadResult integrate(const Integrand& g, const Interval& iv,
                     const QuadOptions& opt) {
    return integrate(g, iv.a, iv.b, opt);
}

QuadResult integrate_split(const Integrand& g, double lo, double hi,
                           std::span<const double> interior_points,
                           const QuadOptions& opt) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw std::invalid_argument("integration range needs finite lo < hi");
    if (!(opt.tol > 0.0))
        throw std::invalid_argument("quadrature tolerance must be positive");
    if (opt.subdivision_cap < 1)
        throw std::invalid_argument("subdivision cap must be at least 1");
    double prev = lo;
    for (double p : interior_points) {
        if (!(p > prev) || !(p < hi))
            throw std::invalid_argument(
                "split points must be sorted and strictly inside the range");
        prev = p;
    }

    double total_w = hi - lo;
    QuadResult acc;
    double a = lo;
    for (std::size_t i = 0; i <= interior_points.size(); ++i) {
        double b = i < interior_points.size() ? interior_points[i] : hi;
        QuadOptions piece = opt;
        piece.tol = opt.tol * (b - a) / total_w;
        QuadResult r = run(g, a, b, piece);
        acc.value += r.value;
        acc.error_estimate += r.error_estimate;
        acc.subdivisions += r.subdivisions;
        a = b;
    }
    return acc;
}

} // namespace harmonia
