#include "harmonia/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace harmonia {

namespace {

constexpr int kGridX = 33;
constexpr int kGridY = 33;
constexpr int kGridT = 17;

double scale_of(double fx, double fy, double fc) {
    return std::max({1.0, std::fabs(fx), std::fabs(fy), std::fabs(fc)});
}

// Accumulates the worst normalized violation per sense.
struct SenseTracker {
    double tol = 0.0;
    double worst_convex = 0.0;   // most negative defect, normalized
    double worst_concave = 0.0;  // most positive defect, normalized
    Witness convex_witness{};
    Witness concave_witness{};

    void record(double x, double y, double t, double defect, double scale) {
        double nd = defect / scale;
        if (-nd > worst_convex && -nd > tol) {
            worst_convex = -nd;
            convex_witness = Witness{x, y, t, -nd};
        }
        if (nd > worst_concave && nd > tol) {
            worst_concave = nd;
            concave_witness = Witness{x, y, t, nd};
        }
    }

    ConvexityVerdict verdict() const {
        ConvexityVerdict v;
        v.harmonically_convex = worst_convex > tol ? Tri::fails : Tri::holds;
        v.harmonically_concave = worst_concave > tol ? Tri::fails : Tri::holds;
        if (v.harmonically_convex == Tri::fails)
            v.witness = convex_witness;
        else if (v.harmonically_concave == Tri::fails)
            v.witness = concave_witness;
        return v;
    }
};

void require_samples(long samples) {
    if (samples < 1)
        throw std::invalid_argument("sample count must be at least 1");
}

} // namespace

double harmonic_combination(double x, double y, double t) {
    return x * y / (t * x + (1.0 - t) * y);
}

double harmonic_convexity_defect(const FunctionSpec& f, double x, double y,
                                 double t) {
    double c = harmonic_combination(x, y, t);
    return t * f.value_at(y) + (1.0 - t) * f.value_at(x) - f.value_at(c);
}

ConvexityVerdict check_harmonic_convexity(const FunctionSpec& f,
                                          const Interval& iv, long samples,
                                          double tol, std::uint64_t seed) {
    require_samples(samples);
    SenseTracker tracker{tol};

    auto probe = [&](double x, double y, double t) {
        double c = harmonic_combination(x, y, t);
        double fx = f.value_at(x);
        double fy = f.value_at(y);
        double fc = f.value_at(c);
        double defect = t * fy + (1.0 - t) * fx - fc;
        tracker.record(x, y, t, defect, scale_of(fx, fy, fc));
    };

    double d = iv.width();
    for (int i = 0; i < kGridX; ++i) {
        double x = iv.a + d * i / (kGridX - 1);
        for (int j = 0; j < kGridY; ++j) {
            double y = iv.a + d * j / (kGridY - 1);
            for (int k = 0; k < kGridT; ++k)
                probe(x, y, static_cast<double>(k) / (kGridT - 1));
        }
    }

    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> in_iv(iv.a, iv.b);
    std::uniform_real_distribution<double> in_unit(0.0, 1.0);
    for (long n = 0; n < samples; ++n) {
        double x = in_iv(gen);
        double y = in_iv(gen);
        double t = in_unit(gen);
        probe(x, y, t);
    }
    return tracker.verdict();
}

ConvexityVerdict check_via_reciprocal_transform(const FunctionSpec& f,
                                                const Interval& iv,
                                                long samples, double tol,
                                                std::uint64_t seed) {
    require_samples(samples);
    // 1/x reverses order on either sign of [a, b]; sort after transforming.
    double lo = 1.0 / iv.b;
    double hi = 1.0 / iv.a;
    if (lo > hi)
        std::swap(lo, hi);

    SenseTracker tracker{tol};
    auto g = [&f](double u) { return f.value_at(1.0 / u); };

    // Midpoint convexity of g in u-space equals the t = 1/2 instance of the
    // harmonic defect at (1/u, 1/v); candidates are confirmed through the
    // defect in x-space so witnesses are independently re-checkable.
    auto probe = [&](double u, double v) {
        double gu = g(u);
        double gv = g(v);
        double gm = g(0.5 * (u + v));
        double defect = 0.5 * (gu + gv) - gm;
        double scale = scale_of(gu, gv, gm);
        if (std::fabs(defect) / scale <= tol)
            return;
        double x = 1.0 / u;
        double y = 1.0 / v;
        double confirmed = harmonic_convexity_defect(f, x, y, 0.5);
        tracker.record(x, y, 0.5, confirmed,
                       scale_of(f.value_at(x), f.value_at(y),
                                f.value_at(harmonic_combination(x, y, 0.5))));
    };

    double w = hi - lo;
    for (int i = 0; i < kGridX; ++i) {
        double u = lo + w * i / (kGridX - 1);
        for (int j = 0; j < kGridY; ++j)
            probe(u, lo + w * j / (kGridY - 1));
    }

    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> in_u(lo, hi);
    for (long n = 0; n < samples; ++n) {
        double u = in_u(gen);
        double v = in_u(gen);
        probe(u, v);
    }
    return tracker.verdict();
}

FunctionTraits derive_traits(const FunctionSpec& f, const Interval& iv,
                             long samples, double tol, std::uint64_t seed) {
    require_samples(samples);
    FunctionTraits traits;
    traits.sign_of_domain =
        iv.positive() ? DomainSign::positive : DomainSign::negative;

    // Ordinary midpoint convexity over sampled pairs.
    double worst_convex = 0.0;
    auto probe_pair = [&](double x, double y) {
        double fx = f.value_at(x);
        double fy = f.value_at(y);
        double fm = f.value_at(0.5 * (x + y));
        double defect = 0.5 * (fx + fy) - fm;
        double nd = defect / scale_of(fx, fy, fm);
        worst_convex = std::max(worst_convex, -nd);
    };

    double d = iv.width();
    for (int i = 0; i < kGridX; ++i)
        for (int j = 0; j < kGridY; ++j)
            probe_pair(iv.a + d * i / (kGridX - 1), iv.a + d * j / (kGridY - 1));

    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> in_iv(iv.a, iv.b);
    for (long n = 0; n < samples; ++n)
        probe_pair(in_iv(gen), in_iv(gen));
    traits.convex = worst_convex > tol ? Tri::fails : Tri::holds;

    // Monotonicity from the sign of the symbolic derivative at sampled
    // points, negative values discounted relative to the local magnitude.
    double most_negative = 0.0;
    double most_positive = 0.0;
    auto probe_slope = [&](double x) {
        double s = f.derivative_at(x);
        double nd = s / std::max(1.0, std::fabs(s));
        most_negative = std::min(most_negative, nd);
        most_positive = std::max(most_positive, nd);
    };
    constexpr int kGridSlope = 129;
    for (int i = 0; i < kGridSlope; ++i)
        probe_slope(iv.a + d * i / (kGridSlope - 1));
    for (long n = 0; n < samples; ++n)
        probe_slope(in_iv(gen));
    traits.nondecreasing = most_negative < -tol ? Tri::fails : Tri::holds;
    traits.nonincreasing = most_positive > tol ? Tri::fails : Tri::holds;

    traits.harmonically_convex =
        check_harmonic_convexity(f, iv, samples, tol, seed).harmonically_convex;
    return traits;
}

std::vector<Implication> classify_by_proposition(const FunctionTraits& t) {
    std::vector<Implication> fired;
    bool pos = t.sign_of_domain == DomainSign::positive;
    if (t.convex == Tri::holds && t.nondecreasing == Tri::holds && pos)
        fired.push_back({1, Conclusion::harmonically_convex});
    if (t.harmonically_convex == Tri::holds && t.nonincreasing == Tri::holds &&
        pos)
        fired.push_back({2, Conclusion::convex});
    if (t.harmonically_convex == Tri::holds && t.nondecreasing == Tri::holds &&
        !pos)
        fired.push_back({3, Conclusion::convex});
    if (t.convex == Tri::holds && t.nonincreasing == Tri::holds && !pos)
        fired.push_back({4, Conclusion::harmonically_convex});
    return fired;
}

const char* to_string(Tri t) {
    switch (t) {
    case Tri::holds:
        return "holds";
    case Tri::fails:
        return "fails";
    default:
        return "inconclusive";
    }
}

const char* to_string(DomainSign s) {
    return s == DomainSign::positive ? "positive" : "negative";
}

const char* to_string(Conclusion c) {
    return c == Conclusion::harmonically_convex ? "harmonically_convex"
                                                : "convex";
}

} // namespace harmonia
