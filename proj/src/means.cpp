#include "harmonia/means.hpp"

#include "harmonia/expr.hpp"
#include "harmonia/hh.hpp"
#include "harmonia/quad.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace harmonia {

namespace {

void require_positive_pair(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0)
        throw std::invalid_argument("means need strictly positive finite inputs");
}

void normalize(double& a, double& b) {
    if (a > b)
        std::swap(a, b);
}

// Below this relative gap the closed forms are replaced by short series in
// r = (b-a)/a; the r^2 coefficients (-1/12 for L, -1/24 for I, (p-1)/24 for
// L_p) keep the family ordered through the collapse to a.
constexpr double kSeriesGap = 1e-8;

double log_mean(double a, double b) {
    double r = (b - a) / a;
    if (r < kSeriesGap)
        return a * (1.0 + r * (0.5 - r / 12.0));
    return (b - a) / std::log1p(r);
}

// ln I = ln a + (1+r) ln(1+r)/r - 1; exposed for the x^2 ln x chain where
// forming I first would round the logarithm.
double log_identric(double a, double r) {
    if (r < kSeriesGap)
        return std::log(a) + r * (0.5 - r / 24.0);
    return std::log(a) + (1.0 + r) * std::log1p(r) / r - 1.0;
}

double identric_mean(double a, double b) {
    double r = (b - a) / a;
    if (r < kSeriesGap)
        return a * (1.0 + r * (0.5 - r / 24.0));
    return a * std::exp((1.0 + r) * std::log1p(r) / r - 1.0);
}

double lp_mean_checked(double a, double b, double p) {
    if (a == b)
        return a;
    if (p == -1.0)
        return log_mean(a, b);
    if (p == 0.0 || std::fabs(p) < 1e-9)
        return identric_mean(a, b); // continuity limit, and a guard: the
                                    // 1/p exponent is unusable at p ~ 0
    double r = (b - a) / a;
    if (r < kSeriesGap)
        return a * (1.0 + r * (0.5 + (p - 1.0) * r / 24.0));
    double z = (p + 1.0) * std::log1p(r);
    if (z > 500.0) {
        // expm1(z) overflows long before L_p (<= b) does; finish in logs.
        return a * std::exp((z - std::log((p + 1.0) * r)) / p);
    }
    return a * std::pow(std::expm1(z) / ((p + 1.0) * r), 1.0 / p);
}

} // namespace

double lp_mean(double a, double b, double p) {
    require_positive_pair(a, b);
    if (!std::isfinite(p))
        throw std::invalid_argument("lp_mean needs a finite exponent");
    normalize(a, b);
    return lp_mean_checked(a, b, p);
}

MeanValues compute_means(double a, double b, std::optional<double> p) {
    require_positive_pair(a, b);
    normalize(a, b);
    if (p && (*p == -1.0 || *p == 0.0))
        throw std::invalid_argument(
            "p = -1 and p = 0 are the L and I members; pick another exponent");

    MeanValues m;
    m.A = 0.5 * (a + b);
    m.G = std::sqrt(a * b);
    m.H = 2.0 / (1.0 / a + 1.0 / b);
    m.L = log_mean(a, b);
    m.I = identric_mean(a, b);
    if (p)
        m.Lp = MeanValues::PValue{*p, lp_mean_checked(a, b, *p)};
    return m;
}

bool lp_monotonicity_check(double a, double b, std::span<const double> p_grid) {
    require_positive_pair(a, b);
    normalize(a, b);
    for (std::size_t i = 1; i < p_grid.size(); ++i)
        if (!(p_grid[i] >= p_grid[i - 1]))
            throw std::invalid_argument("exponent grid must be sorted");

    double prev = -std::numeric_limits<double>::infinity();
    for (double p : p_grid) {
        double v = lp_mean_checked(a, b, p);
        if (v < prev - 1e-12 * std::max(1.0, std::fabs(prev)))
            return false;
        prev = v;
    }
    return true;
}

namespace {

struct Members {
    double lhs, mid, rhs;
    std::string source; // generating function for the quadrature path
};

Members proposition_members(int which, double a, double b, double p) {
    double r = (b - a) / a;
    switch (which) {
    case 1:
        return {2.0 / (1.0 / a + 1.0 / b), a * b / log_mean(a, b),
                0.5 * (a + b), "x"};
    case 2: {
        double h = 2.0 / (1.0 / a + 1.0 / b);
        return {h * h, a * b, 0.5 * (a * a + b * b), "x^2"};
    }
    case 3: {
        double h = 2.0 / (1.0 / a + 1.0 / b);
        char src[64];
        std::snprintf(src, sizeof(src), "x^%.17g", p + 2.0);
        return {std::pow(h, p + 2.0),
                a * b * std::pow(lp_mean_checked(a, b, p), p),
                0.5 * (std::pow(a, p + 2.0) + std::pow(b, p + 2.0)), src};
    }
    case 4: {
        double h = 2.0 / (1.0 / a + 1.0 / b);
        return {h * h * std::log(h), a * b * log_identric(a, r),
                0.5 * (a * a * std::log(a) + b * b * std::log(b)),
                "x^2*ln(x)"};
    }
    default:
        throw std::invalid_argument("proposition selector must be 1..4");
    }
}

} // namespace

PropositionReport proposition_check(int which, double a, double b,
                                    std::optional<double> p,
                                    double cross_tol) {
    require_positive_pair(a, b);
    if (!(a < b))
        throw std::invalid_argument("proposition_check needs a < b");
    if (which == 3) {
        if (!p)
            throw std::invalid_argument("chain 3 needs an exponent p");
        if (!(*p > -1.0) || *p == 0.0)
            throw std::invalid_argument(
                "chain 3 needs p in (-1, inf) with p != 0");
    }

    PropositionReport rep;
    rep.which = which;
    rep.p = which == 3 ? *p : 0.0;
    Members m = proposition_members(which, a, b, rep.p);
    rep.lhs = m.lhs;
    rep.mid = m.mid;
    rep.rhs = m.rhs;

    double slack =
        1e-12 * std::max({1.0, std::fabs(m.lhs), std::fabs(m.mid),
                          std::fabs(m.rhs)});
    rep.chain_holds = m.lhs <= m.mid + slack && m.mid <= m.rhs + slack;

    FunctionSpec f = parse(m.source);
    HHReport hh = hh_triple(f, Interval(a, b));
    rep.hh_left = hh.left;
    rep.hh_middle = hh.middle;
    rep.hh_right = hh.right;

    auto rel_gap = [](double x, double y) {
        return std::fabs(x - y) / std::max(1.0, std::fabs(x));
    };
    rep.cross_gap = std::max({rel_gap(m.lhs, hh.left), rel_gap(m.mid, hh.middle),
                              rel_gap(m.rhs, hh.right)});
    rep.cross_ok = rep.cross_gap <= cross_tol;
    return rep;
}

} // namespace harmonia
