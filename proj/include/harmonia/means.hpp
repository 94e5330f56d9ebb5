#pragma once

#include <optional>
#include <span>

namespace harmonia {

/// The classical two-argument means, ordered H <= G <= L <= I <= A for
/// 0 < a < b (strictly), all collapsing to a when a = b:
///
///   A   (a+b)/2                       arithmetic
///   G   sqrt(ab)                      geometric
///   H   2ab/(a+b)                     harmonic
///   L   (b-a)/(ln b - ln a)           logarithmic
///   I   (1/e)(b^b/a^a)^(1/(b-a))      identric
///   L_p ((b^(p+1)-a^(p+1))/((p+1)(b-a)))^(1/p)   p-logarithmic, p not -1, 0
///
/// L_p extends continuously with L_{-1} = L, L_0 = I, and L_{-2} = G, and
/// is nondecreasing in p.
struct MeanValues {
    double A = 0.0;
    double G = 0.0;
    double H = 0.0;
    double L = 0.0;
    double I = 0.0;
    struct PValue {
        double p;
        double value;
    };
    std::optional<PValue> Lp;
};

/// Evaluate all means; inputs are normalized so order does not matter.
/// Requires strictly positive inputs; p, when given, must avoid -1 and 0
/// (those members are L and I, reported anyway).
MeanValues compute_means(double a, double b, std::optional<double> p = {});

/// The p-logarithmic mean as a continuous family: p = -1 maps to L and
/// p = 0 to I. Stable for nearly equal inputs and large |p| alike.
double lp_mean(double a, double b, double p);

/// True iff L_p is nondecreasing along the (sorted) grid, within a slack
/// of 1e-12 relative to the local magnitude.
bool lp_monotonicity_check(double a, double b, std::span<const double> p_grid);

/// The four special-means chains obtained by instancing the harmonic
/// Hermite-Hadamard triple:
///
///   1  f(x) = x        H           <= G^2/L       <= A
///   2  f(x) = x^2      H^2         <= G^2         <= (a^2+b^2)/2
///   3  f(x) = x^(p+2)  H^(p+2)     <= G^2 L_p^p   <= (a^(p+2)+b^(p+2))/2
///   4  f(x) = x^2 ln x H^2 ln H    <= G^2 ln I    <= (a^2 ln a + b^2 ln b)/2
///
/// Each member is computed from the closed-form means AND from hh_triple
/// of the generating function; the two independent paths must agree.
struct PropositionReport {
    int which = 0;
    double p = 0.0; // chain 3 only
    double lhs = 0.0;
    double mid = 0.0;
    double rhs = 0.0;
    bool chain_holds = false;
    double hh_left = 0.0;
    double hh_middle = 0.0;
    double hh_right = 0.0;
    double cross_gap = 0.0; // worst member disagreement, relative to scale
    bool cross_ok = false;
};

/// `which` selects a chain above (1-4); chain 3 requires p in (-1, inf),
/// p != 0. Requires 0 < a < b. `cross_tol` bounds the permitted
/// disagreement between the means path and the quadrature path.
PropositionReport proposition_check(int which, double a, double b,
                                    std::optional<double> p = {},
                                    double cross_tol = 1e-8);

} // namespace harmonia
