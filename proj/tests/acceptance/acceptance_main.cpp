// Acceptance gate: one check per shipped guarantee, each printing a single
// [PASS] line. Any violation prints [FAIL] with context and exits nonzero.

#include "harmonia/convexity.hpp"
#include "harmonia/expr.hpp"
#include "harmonia/hh.hpp"
#include "harmonia/means.hpp"
#include "harmonia/quad.hpp"

#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <utility>
#include <vector>

using namespace harmonia;

namespace {

#define REQUIRE(cond, ...)                                                     \
    do {                                                                       \
        if (!(cond)) {                                                         \
            std::fprintf(stderr, "[FAIL] %s:%d: ", __FILE__, __LINE__);        \
            std::fprintf(stderr, __VA_ARGS__);                                 \
            std::fprintf(stderr, "\n");                                        \
            std::exit(1);                                                      \
        }                                                                      \
    } while (0)

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

std::vector<Interval> random_intervals(int count, double lo, double hi,
                                       std::uint64_t seed,
                                       double min_width = 1e-3) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<Interval> out;
    while (static_cast<int>(out.size()) < count) {
        double a = dist(rng), b = dist(rng);
        if (a > b)
            std::swap(a, b);
        if (b - a < min_width)
            continue;
        out.emplace_back(a, b);
    }
    return out;
}

const std::vector<std::string>& corpus() {
    static const std::vector<std::string> fns = {"x",   "x^2", "x^1.5",
                                                 "x^3", "x^4", "1"};
    return fns;
}

FunctionSpec abs_derivative_power(const FunctionSpec& f, double q) {
    return make_function_spec(
        node(ExprKind::Pow, node(ExprKind::Abs, f.derivative), constant(q)));
}

// 1. The chain collapses to equality for the constant function.
void criterion_sharpness() {
    auto start = std::chrono::steady_clock::now();
    FunctionSpec one = parse("1");
    QuadOptions quad{1e-13, 100000};
    std::vector<Interval> ivs = random_intervals(40, 0.1, 100.0, 11);
    for (const Interval& neg : random_intervals(10, -100.0, -0.1, 12))
        ivs.push_back(neg);
    for (const Interval& iv : ivs) {
        HHReport r = hh_triple(one, iv, 1e-12, quad);
        REQUIRE(std::fabs(r.left - 1.0) <= 1e-12 &&
                    std::fabs(r.middle - 1.0) <= 1e-12 &&
                    std::fabs(r.right - 1.0) <= 1e-12,
                "sharpness broken on [%g, %g]: %.17g %.17g %.17g", iv.a, iv.b,
                r.left, r.middle, r.right);
    }
    double elapsed = seconds_since(start);
    REQUIRE(elapsed < 1.0, "sharpness run took %.2f s (limit 1 s)", elapsed);
    std::printf("[PASS] 1/9 sharpness: constant chain equal to 1e-12 on 50 "
                "intervals (%.2f s)\n",
                elapsed);
}

// 2. Both triple inequalities hold across the corpus.
void criterion_chain() {
    auto start = std::chrono::steady_clock::now();
    long checked = 0;
    for (const std::string& src : corpus()) {
        FunctionSpec f = parse(src);
        for (const Interval& iv : random_intervals(200, 0.01, 100.0, 21)) {
            HHReport r = hh_triple(f, iv);
            REQUIRE(r.verdict_left && r.verdict_right,
                    "chain failed for %s on [%.17g, %.17g]", src.c_str(), iv.a,
                    iv.b);
            ++checked;
        }
    }
    HHReport mixed = hh_triple(parse("x^2*ln(x)"), Interval(1.0, std::exp(1.0)));
    REQUIRE(mixed.verdict_left && mixed.verdict_right,
            "chain failed for x^2*ln(x) on [1, e]");
    ++checked;
    double elapsed = seconds_since(start);
    REQUIRE(elapsed < 10.0, "chain run took %.2f s (limit 10 s)", elapsed);
    std::printf(
        "[PASS] 2/9 triple: both inequalities on %ld corpus cases (%.2f s)\n",
        checked, elapsed);
}

// 3. The two structurally independent sides of the trapezoid-gap identity
// agree. Narrower interval range than criterion 2: at the 1e-8 absolute
// tolerance the trapezoid side for x^4 near b = 100 carries a larger
// roundoff than the allowance itself.
void criterion_identity() {
    auto start = std::chrono::steady_clock::now();
    QuadOptions quad{1e-9, 100000};
    long checked = 0;
    for (const std::string& src : corpus()) {
        FunctionSpec f = parse(src);
        for (const Interval& iv : random_intervals(50, 0.05, 10.0, 31)) {
            IdentityReport id = identity_check(f, iv, quad);
            REQUIRE(id.gap <= 1e-8,
                    "identity gap %.3e for %s on [%.17g, %.17g]", id.gap,
                    src.c_str(), iv.a, iv.b);
            ++checked;
        }
    }
    IdentityReport mixed =
        identity_check(parse("x^2*ln(x)"), Interval(1.0, std::exp(1.0)), quad);
    REQUIRE(mixed.gap <= 1e-8, "identity gap %.3e for x^2*ln(x)", mixed.gap);
    ++checked;
    double elapsed = seconds_since(start);
    REQUIRE(elapsed < 10.0, "identity run took %.2f s (limit 10 s)", elapsed);
    std::printf("[PASS] 3/9 identity: gap <= 1e-8 on %ld cases (%.2f s)\n",
                checked, elapsed);
}

// 4. Closed-form lambda constants against kink-split Simpson quadrature.
void criterion_lambda() {
    long panels = 1L << 18;
    for (double a : {0.1, 1.0, 10.0}) {
        for (double ratio : {1.0 + 1e-6, 1.5, 2.0, 10.0}) {
            double b = a * ratio;
            LambdaConstants lam = lambda_constants(Interval(a, b));
            auto s = [&](double t) { return t * b + (1.0 - t) * a; };
            double k1 = oracle::simpson_split(
                [&](double t) {
                    return std::fabs(1.0 - 2.0 * t) / (s(t) * s(t));
                },
                0.0, 1.0, {0.5}, panels);
            double k2 = oracle::simpson_split(
                [&](double t) {
                    return std::fabs(1.0 - 2.0 * t) * t / (s(t) * s(t));
                },
                0.0, 1.0, {0.5}, panels);
            double k3 = oracle::simpson_split(
                [&](double t) {
                    return std::fabs(1.0 - 2.0 * t) * (1.0 - t) /
                           (s(t) * s(t));
                },
                0.0, 1.0, {0.5}, panels);
            REQUIRE(std::fabs(lam.lambda1 - k1) <= 1e-8 * std::fabs(k1),
                    "lambda1 off at a=%g b=%g: %.17g vs %.17g", a, b,
                    lam.lambda1, k1);
            REQUIRE(std::fabs(lam.lambda2 - k2) <= 1e-8 * std::fabs(k2),
                    "lambda2 off at a=%g b=%g: %.17g vs %.17g", a, b,
                    lam.lambda2, k2);
            REQUIRE(std::fabs(lam.lambda3 - k3) <= 1e-8 * std::fabs(k3),
                    "lambda3 off at a=%g b=%g: %.17g vs %.17g", a, b,
                    lam.lambda3, k3);
            REQUIRE(std::fabs(lam.lambda1 - lam.lambda2 - lam.lambda3) <=
                        1e-12 * lam.lambda1,
                    "lambda sum identity off at a=%g b=%g", a, b);
        }
    }
    LambdaConstants anchor = lambda_constants(Interval(1.0, 2.0));
    REQUIRE(std::fabs(anchor.lambda1 - 0.26443391) <= 1e-7,
            "lambda1(1,2) anchor: %.17g", anchor.lambda1);
    std::printf("[PASS] 4/9 lambda constants: oracle match to 1e-8 relative "
                "on 12 geometries\n");
}

// 5. Closed-form mu constants against plain Simpson quadrature.
void criterion_mu() {
    long panels = 1L << 18;
    for (double a : {0.1, 1.0, 10.0}) {
        for (double ratio : {1.0 + 1e-6, 1.5, 2.0, 10.0}) {
            double b = a * ratio;
            Interval iv(a, b);
            auto s = [&](double t) { return t * b + (1.0 - t) * a; };
            for (double q : {1.1, 1.5, 2.0, 3.0}) {
                MuConstants mu = mu_constants(iv, q);
                double m1 = oracle::simpson(
                    [&](double t) { return t * std::pow(s(t), -2.0 * q); },
                    0.0, 1.0, panels);
                double m2 = oracle::simpson(
                    [&](double t) {
                        return (1.0 - t) * std::pow(s(t), -2.0 * q);
                    },
                    0.0, 1.0, panels);
                REQUIRE(std::fabs(mu.mu1 - m1) <= 1e-8 * std::fabs(m1),
                        "mu1 off at a=%g b=%g q=%g: %.17g vs %.17g", a, b, q,
                        mu.mu1, m1);
                REQUIRE(std::fabs(mu.mu2 - m2) <= 1e-8 * std::fabs(m2),
                        "mu2 off at a=%g b=%g q=%g: %.17g vs %.17g", a, b, q,
                        mu.mu2, m2);
            }
        }
    }
    MuConstants mu = mu_constants(Interval(1.0, 2.0), 2.0);
    REQUIRE(std::fabs(mu.mu1 - 1.0 / 12.0) <= 1e-12 / 12.0,
            "mu1(1,2,2) anchor: %.17g", mu.mu1);
    REQUIRE(std::fabs(mu.mu2 - 5.0 / 24.0) <= 1e-12 * 5.0 / 24.0,
            "mu2(1,2,2) anchor: %.17g", mu.mu2);
    REQUIRE(std::fabs(mu.mu1 + mu.mu2 - 7.0 / 24.0) <= 1e-12 * 7.0 / 24.0,
            "mu sum anchor: %.17g", mu.mu1 + mu.mu2);
    std::printf("[PASS] 5/9 mu constants: oracle match to 1e-8 relative on "
                "48 geometry/exponent pairs\n");
}

// 6. Both derivative bounds hold whenever |f'|^q passes the
// harmonic-convexity sampler.
void criterion_bounds() {
    std::vector<std::pair<std::string, Interval>> cases;
    for (const std::string& src : corpus())
        for (const Interval& iv :
             {Interval(1.0, 2.0), Interval(0.5, 3.0), Interval(2.0, 10.0)})
            cases.emplace_back(src, iv);
    cases.emplace_back("x^2*ln(x)", Interval(1.0, std::exp(1.0)));

    long pm_checked = 0, ho_checked = 0;
    for (const auto& [src, iv] : cases) {
        FunctionSpec f = parse(src);
        for (double q : {1.0, 1.5, 2.0, 3.0}) {
            ConvexityVerdict gate = check_harmonic_convexity(
                abs_derivative_power(f, q), iv, 2000, 1e-9, 7);
            if (gate.harmonically_convex != Tri::holds)
                continue;
            BoundReport pm = powermean_bound_check(f, iv, q, 1e-10, true);
            REQUIRE(pm.verdict,
                    "power-mean bound failed: %s on [%g, %g], q=%g "
                    "(lhs %.17g rhs %.17g)",
                    src.c_str(), iv.a, iv.b, q, pm.lhs_abs, pm.rhs);
            ++pm_checked;
            if (q > 1.0) {
                BoundReport ho = hoelder_bound_check(f, iv, q, 1e-10, true);
                REQUIRE(ho.verdict,
                        "conjugate bound failed: %s on [%g, %g], q=%g "
                        "(lhs %.17g rhs %.17g)",
                        src.c_str(), iv.a, iv.b, q, ho.lhs_abs, ho.rhs);
                ++ho_checked;
            }
        }
    }
    REQUIRE(pm_checked >= 60 && ho_checked >= 45,
            "hypothesis sampler rejected too many cases: %ld / %ld",
            pm_checked, ho_checked);

    BoundReport anchor =
        powermean_bound_check(parse("x^2"), Interval(1.0, 2.0), 1.0);
    REQUIRE(std::fabs(anchor.lhs_abs - 0.5) <= 1e-9,
            "anchor lhs: %.17g", anchor.lhs_abs);
    REQUIRE(std::fabs(anchor.rhs - 0.87990) <= 1e-4, "anchor rhs: %.17g",
            anchor.rhs);
    REQUIRE(anchor.verdict, "anchor verdict");
    std::printf("[PASS] 6/9 bounds: %ld power-mean and %ld conjugate cases, "
                "zero violations\n",
                pm_checked, ho_checked);
}

// 7. Means-path and quadrature-path chain members agree.
void criterion_propositions() {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> dist(0.5, 20.0);
    long chains = 0;
    for (int i = 0; i < 500; ++i) {
        double a = dist(rng), b = dist(rng);
        if (a > b)
            std::swap(a, b);
        if (b - a < 1e-3) {
            --i;
            continue;
        }
        for (int which : {1, 2, 4}) {
            PropositionReport r = proposition_check(which, a, b);
            REQUIRE(r.chain_holds && r.cross_ok,
                    "chain %d failed on (%.17g, %.17g): gap %.3e", which, a, b,
                    r.cross_gap);
            ++chains;
        }
        for (double p : {-0.5, 0.5, 1.0, 2.0}) {
            PropositionReport r = proposition_check(3, a, b, p);
            REQUIRE(r.chain_holds && r.cross_ok,
                    "chain 3 (p=%g) failed on (%.17g, %.17g): gap %.3e", p, a,
                    b, r.cross_gap);
            ++chains;
        }
    }
    PropositionReport anchor = proposition_check(1, 1.0, 2.0);
    REQUIRE(std::fabs(anchor.lhs - 4.0 / 3.0) <= 1e-12 &&
                std::fabs(anchor.mid - 2.0 * std::log(2.0)) <= 1e-12 &&
                std::fabs(anchor.rhs - 1.5) <= 1e-12,
            "chain 1 anchor at (1,2): %.17g %.17g %.17g", anchor.lhs,
            anchor.mid, anchor.rhs);
    std::printf("[PASS] 7/9 mean chains: %ld chains cross-validated on 500 "
                "pairs\n",
                chains);
}

// 8. Strict classical ordering plus L_p monotonicity.
void criterion_mean_order() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(81);
    std::uniform_real_distribution<double> expo(-3.0, 6.0);
    long pairs = 0;
    while (pairs < 1000) {
        double a = std::pow(10.0, expo(rng));
        double b = std::pow(10.0, expo(rng));
        if (a > b)
            std::swap(a, b);
        if (b / a - 1.0 < 1e-6)
            continue;
        MeanValues m = compute_means(a, b);
        REQUIRE(m.H < m.G && m.G < m.L && m.L < m.I && m.I < m.A,
                "mean order violated at (%.17g, %.17g)", a, b);
        ++pairs;
    }

    std::vector<double> grid;
    for (int i = 0; i < 48; ++i)
        grid.push_back(-5.0 + 10.0 * i / 47.0);
    grid.push_back(-1.0);
    grid.push_back(0.0);
    std::sort(grid.begin(), grid.end());
    for (const auto& [a, b] :
         {std::pair{1.0, 2.0}, {0.5, 700.0}, {3.0, 3.14}, {1e-3, 10.0}}) {
        REQUIRE(lp_monotonicity_check(a, b, grid),
                "L_p not monotone between %g and %g", a, b);
    }
    double elapsed = seconds_since(start);
    REQUIRE(elapsed < 5.0, "mean order run took %.2f s (limit 5 s)", elapsed);
    std::printf("[PASS] 8/9 mean order: strict chain on 1000 pairs, L_p "
                "monotone on a 50-point grid (%.2f s)\n",
                elapsed);
}

// 9. The two convexity checkers agree, and failing senses carry witnesses
// that re-verify at an absolute tolerance.
void criterion_convexity_cross() {
    std::vector<std::pair<std::string, Interval>> cases;
    for (const std::string& src : corpus()) {
        cases.emplace_back(src, Interval(1.0, 2.0));
        cases.emplace_back(src, Interval(0.5, 3.0));
    }
    for (const std::string src : {"-(x^2)", "exp(-x)", "abs(x-1.5)"})
        cases.emplace_back(src, Interval(1.0, 2.0));

    long witnesses = 0;
    for (const auto& [src, iv] : cases) {
        FunctionSpec f = parse(src);
        ConvexityVerdict by_def = check_harmonic_convexity(f, iv);
        ConvexityVerdict by_rec = check_via_reciprocal_transform(f, iv);
        REQUIRE(by_def.harmonically_convex == by_rec.harmonically_convex &&
                    by_def.harmonically_concave == by_rec.harmonically_concave,
                "checkers disagree on %s over [%g, %g]", src.c_str(), iv.a,
                iv.b);
        for (const ConvexityVerdict& v : {by_def, by_rec}) {
            if (v.harmonically_convex != Tri::fails &&
                v.harmonically_concave != Tri::fails)
                continue;
            REQUIRE(v.witness.has_value(), "missing witness for %s",
                    src.c_str());
            double defect =
                harmonic_convexity_defect(f, v.witness->x, v.witness->y,
                                          v.witness->t);
            if (v.harmonically_convex == Tri::fails)
                REQUIRE(defect < -0.999e-9,
                        "witness for %s does not violate convexity: %.3e",
                        src.c_str(), defect);
            else
                REQUIRE(defect > 0.999e-9,
                        "witness for %s does not violate concavity: %.3e",
                        src.c_str(), defect);
            ++witnesses;
        }
    }
    REQUIRE(witnesses >= 6, "expected the planted cases to produce witnesses");
    std::printf("[PASS] 9/9 convexity cross-validation: %ld cases agree "
                "across both checkers, %ld witnesses re-verified\n",
                static_cast<long>(cases.size()), witnesses);
}

} // namespace

int main() {
    criterion_sharpness();
    criterion_chain();
    criterion_identity();
    criterion_lambda();
    criterion_mu();
    criterion_bounds();
    criterion_propositions();
    criterion_mean_order();
    criterion_convexity_cross();
    std::printf("acceptance: 9/9 criteria passed\n");
    return 0;
}
