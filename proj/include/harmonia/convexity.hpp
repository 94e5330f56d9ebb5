#pragma once

#include "harmonia/expr.hpp"
#include "harmonia/quad.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace harmonia {

/// Sampling verdicts: `holds` means "no violation found" — sampling cannot
/// prove a property that quantifies over a continuum. `inconclusive` is
/// reserved for externally supplied partial knowledge (classifier input);
/// the samplers themselves always return holds or fails.
enum class Tri { holds, fails, inconclusive };

/// A concrete triple certifying a `fails` verdict: the defect
///
///   t f(y) + (1-t) f(x) - f(xy/(tx+(1-t)y))
///
/// is negative (convexity violation) or positive (concavity violation) at
/// (x, y, t) by more than the tolerance. `violation` is the defect
/// magnitude normalized by max(1, |f(x)|, |f(y)|, |f(combination)|), the
/// same scaling the samplers test against.
struct Witness {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
    double violation = 0.0;
};

struct ConvexityVerdict {
    Tri harmonically_convex = Tri::inconclusive;
    Tri harmonically_concave = Tri::inconclusive;
    // Set whenever either sense fails; the convex-sense witness wins when
    // both do. Always re-verifiable through harmonic_convexity_defect.
    std::optional<Witness> witness;
};

/// xy/(tx + (1-t)y): the harmonic combination of x and y with weight t.
/// Lies between x and y for same-sign x, y and t in [0, 1].
double harmonic_combination(double x, double y, double t);

/// Signed defect t f(y) + (1-t) f(x) - f(harmonic_combination). Nonnegative
/// everywhere iff f is harmonically convex.
double harmonic_convexity_defect(const FunctionSpec& f, double x, double y,
                                 double t);

/// Sample the defect on a deterministic 33x33x17 (x, y, t) grid plus
/// `samples` seeded-random triples. A sense fails when some triple violates
/// it by more than tol relative to the local function scale.
ConvexityVerdict check_harmonic_convexity(const FunctionSpec& f,
                                          const Interval& iv,
                                          long samples = 10000,
                                          double tol = 1e-9,
                                          std::uint64_t seed = 42);

/// Same decision through the reduction to ordinary midpoint convexity of
/// g(u) = f(1/u) on the reciprocal interval (endpoints sorted after the
/// transform; the map reverses order on either sign). Candidate violations
/// found in u-space are confirmed in x-space before they count, so any
/// witness satisfies the same contract as check_harmonic_convexity's.
ConvexityVerdict check_via_reciprocal_transform(const FunctionSpec& f,
                                                const Interval& iv,
                                                long samples = 10000,
                                                double tol = 1e-9,
                                                std::uint64_t seed = 42);

enum class DomainSign { positive, negative };

/// Numerically determined hypotheses for the classifier. The tri-states
/// carry sampling semantics (`holds` = no violation found). nondecreasing
/// and nonincreasing hold together only for numerically constant functions.
struct FunctionTraits {
    Tri convex = Tri::inconclusive;
    Tri nondecreasing = Tri::inconclusive;
    Tri nonincreasing = Tri::inconclusive;
    Tri harmonically_convex = Tri::inconclusive;
    DomainSign sign_of_domain = DomainSign::positive;
};

/// Determine traits by sampling: ordinary midpoint convexity on pairs,
/// monotonicity by the sign of the symbolic derivative at sampled points,
/// harmonic convexity via check_harmonic_convexity.
FunctionTraits derive_traits(const FunctionSpec& f, const Interval& iv,
                             long samples = 10000, double tol = 1e-9,
                             std::uint64_t seed = 42);

/// The four one-directional implications between ordinary and harmonic
/// convexity. Rules by hypothesis set:
///   1: convex and nondecreasing on a positive domain => harmonically convex
///   2: harmonically convex and nonincreasing on a positive domain => convex
///   3: harmonically convex and nondecreasing on a negative domain => convex
///   4: convex and nonincreasing on a negative domain => harmonically convex
enum class Conclusion { harmonically_convex, convex };

struct Implication {
    int rule = 0;
    Conclusion concludes = Conclusion::harmonically_convex;
};

/// Exactly the rules whose hypotheses hold in `traits`; inconclusive or
/// failing hypotheses fire nothing. One-directional only — no contrapositive
/// or converse reasoning.
std::vector<Implication> classify_by_proposition(const FunctionTraits& traits);

const char* to_string(Tri t);
const char* to_string(DomainSign s);
const char* to_string(Conclusion c);

} // namespace harmonia
