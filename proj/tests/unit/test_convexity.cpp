#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harmonia/convexity.hpp"
#include "harmonia/expr.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

using namespace harmonia;

namespace {

bool failed_convex(const ConvexityVerdict& v) {
    return v.harmonically_convex == Tri::fails;
}

// Re-verify a reported witness against the raw defect at an absolute
// tolerance: negative defect breaks convexity, positive breaks concavity.
void require_valid_witness(const FunctionSpec& f, const ConvexityVerdict& v) {
    REQUIRE(v.witness.has_value());
    const Witness& w = *v.witness;
    double defect = harmonic_convexity_defect(f, w.x, w.y, w.t);
    if (failed_convex(v))
        CHECK(defect < -1e-9 * 0.999);
    else
        CHECK(defect > 1e-9 * 0.999);
    CHECK(w.violation > 0.0);
    CHECK(w.t >= 0.0);
    CHECK(w.t <= 1.0);
}

} // namespace

TEST_CASE("textbook verdicts on small intervals") {
    Interval pos(1.0, 2.0);

    ConvexityVerdict linear = check_harmonic_convexity(parse("x"), pos);
    CHECK(linear.harmonically_convex == Tri::holds);
    CHECK(linear.harmonically_concave == Tri::fails);

    ConvexityVerdict linneg =
        check_harmonic_convexity(parse("x"), Interval(-2.0, -1.0));
    CHECK(linneg.harmonically_convex == Tri::fails);
    CHECK(linneg.harmonically_concave == Tri::holds);

    ConvexityVerdict cons = check_harmonic_convexity(parse("1"), pos);
    CHECK(cons.harmonically_convex == Tri::holds);
    CHECK(cons.harmonically_concave == Tri::holds);
    CHECK_FALSE(cons.witness.has_value());

    // ln is harmonically convex on positive intervals: ln(1/u) = -ln(u)
    // is convex in u.
    ConvexityVerdict logv = check_harmonic_convexity(parse("ln(x)"), pos);
    CHECK(logv.harmonically_convex == Tri::holds);
    CHECK(logv.harmonically_concave == Tri::fails);
}

TEST_CASE("reciprocal of a linear reciprocal is two-sided") {
    // f(x) = 1/x has g(u) = u, both convex and concave.
    ConvexityVerdict v =
        check_harmonic_convexity(parse("1/x"), Interval(1.0, 2.0));
    CHECK(v.harmonically_convex == Tri::holds);
    CHECK(v.harmonically_concave == Tri::holds);
}

TEST_CASE("both checkers agree across a mixed corpus") {
    const std::vector<std::string> corpus = {
        "x",      "x^2",    "x^1.5",      "x^3",   "x^4",       "1",
        "ln(x)",  "1/x",    "exp(x)",     "-(x^2)", "exp(-x)",  "abs(x-1.5)",
    };
    for (const std::string& src : corpus) {
        FunctionSpec f = parse(src);
        for (const Interval& iv : {Interval(1.0, 2.0), Interval(0.5, 3.0)}) {
            ConvexityVerdict a = check_harmonic_convexity(f, iv, 4000);
            ConvexityVerdict b = check_via_reciprocal_transform(f, iv, 4000);
            CAPTURE(src);
            CAPTURE(iv.a);
            CHECK(a.harmonically_convex == b.harmonically_convex);
            CHECK(a.harmonically_concave == b.harmonically_concave);
            if (a.harmonically_convex == Tri::fails ||
                a.harmonically_concave == Tri::fails) {
                require_valid_witness(f, a);
                require_valid_witness(f, b);
            }
        }
    }
}

TEST_CASE("deliberately non-convex functions fail with witnesses") {
    Interval iv(1.0, 2.0);
    for (const std::string src : {"-(x^2)", "exp(-x)", "abs(x-1.5)"}) {
        FunctionSpec f = parse(src);
        ConvexityVerdict v = check_harmonic_convexity(f, iv);
        CAPTURE(src);
        CHECK(v.harmonically_convex == Tri::fails);
        require_valid_witness(f, v);
    }
    // The kinked function additionally fails concavity.
    ConvexityVerdict kink =
        check_harmonic_convexity(parse("abs(x-1.5)"), iv);
    CHECK(kink.harmonically_concave == Tri::fails);
}

TEST_CASE("positive scaling and shifts preserve the verdict") {
    Interval iv(1.0, 2.0);
    auto convex_of = [&](const std::string& src) {
        return check_harmonic_convexity(parse(src), iv).harmonically_convex;
    };
    Tri base = convex_of("x^2");
    CHECK(convex_of("0.5*x^2 + 2") == base);
    CHECK(convex_of("3*x^2 - 1") == base);
    // Negative scaling flips the failing sense.
    ConvexityVerdict flipped =
        check_harmonic_convexity(parse("-(x^2)"), iv);
    CHECK(flipped.harmonically_concave == Tri::holds);
    CHECK(flipped.harmonically_convex == Tri::fails);
}

TEST_CASE("verdicts are deterministic for a fixed seed") {
    FunctionSpec f = parse("exp(-x)");
    Interval iv(1.0, 2.0);
    ConvexityVerdict v1 = check_harmonic_convexity(f, iv, 500, 1e-9, 7);
    ConvexityVerdict v2 = check_harmonic_convexity(f, iv, 500, 1e-9, 7);
    REQUIRE(v1.witness.has_value());
    REQUIRE(v2.witness.has_value());
    CHECK(v1.witness->x == v2.witness->x);
    CHECK(v1.witness->y == v2.witness->y);
    CHECK(v1.witness->t == v2.witness->t);
    CHECK(v1.witness->violation == v2.witness->violation);
}

TEST_CASE("sample counts are validated") {
    FunctionSpec f = parse("x");
    CHECK_THROWS_AS(check_harmonic_convexity(f, Interval(1.0, 2.0), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_via_reciprocal_transform(f, Interval(1.0, 2.0), -5),
                    std::invalid_argument);
}

TEST_CASE("traits capture convexity, monotonicity and domain sign") {
    FunctionTraits sq = derive_traits(parse("x^2"), Interval(1.0, 2.0), 2000);
    CHECK(sq.convex == Tri::holds);
    CHECK(sq.nondecreasing == Tri::holds);
    CHECK(sq.nonincreasing == Tri::fails);
    CHECK(sq.harmonically_convex == Tri::holds);
    CHECK(sq.sign_of_domain == DomainSign::positive);

    FunctionTraits sqn =
        derive_traits(parse("x^2"), Interval(-2.0, -1.0), 2000);
    CHECK(sqn.convex == Tri::holds);
    CHECK(sqn.nondecreasing == Tri::fails);
    CHECK(sqn.nonincreasing == Tri::holds);
    CHECK(sqn.sign_of_domain == DomainSign::negative);
}

TEST_CASE("classifier rule 1: convex nondecreasing positive") {
    FunctionTraits t = derive_traits(parse("x^2"), Interval(1.0, 2.0), 2000);
    auto rules = classify_by_proposition(t);
    bool found = false;
    for (const Implication& imp : rules)
        if (imp.rule == 1) {
            found = true;
            CHECK(imp.concludes == Conclusion::harmonically_convex);
        }
    CHECK(found);
}

TEST_CASE("classifier rule 2: harmonically convex nonincreasing positive") {
    FunctionTraits t = derive_traits(parse("1/x"), Interval(1.0, 2.0), 2000);
    auto rules = classify_by_proposition(t);
    bool found = false;
    for (const Implication& imp : rules)
        if (imp.rule == 2) {
            found = true;
            CHECK(imp.concludes == Conclusion::convex);
        }
    CHECK(found);
}

TEST_CASE("classifier rule 3: harmonically convex nondecreasing negative") {
    FunctionTraits t =
        derive_traits(parse("-(1/x)"), Interval(-2.0, -1.0), 2000);
    CHECK(t.sign_of_domain == DomainSign::negative);
    auto rules = classify_by_proposition(t);
    bool found = false;
    for (const Implication& imp : rules)
        if (imp.rule == 3) {
            found = true;
            CHECK(imp.concludes == Conclusion::convex);
        }
    CHECK(found);
}

TEST_CASE("classifier rule 4: convex nonincreasing negative") {
    FunctionTraits t = derive_traits(parse("x^2"), Interval(-2.0, -1.0), 2000);
    auto rules = classify_by_proposition(t);
    bool found = false;
    for (const Implication& imp : rules)
        if (imp.rule == 4) {
            found = true;
            CHECK(imp.concludes == Conclusion::harmonically_convex);
        }
    CHECK(found);
}

TEST_CASE("no rule fires when hypotheses are absent") {
    // exp(-x) on [1,2]: neither convexity sense pairs with the right
    // monotonicity/sign combination.
    FunctionTraits t = derive_traits(parse("exp(-x)"), Interval(1.0, 2.0), 2000);
    CHECK(t.nonincreasing == Tri::holds);
    CHECK(t.convex == Tri::holds);
    // convex + nonincreasing + positive matches no rule.
    for (const Implication& imp : classify_by_proposition(t))
        CHECK(imp.rule != 1);
}

TEST_CASE("harmonic combination endpoints") {
    CHECK(harmonic_combination(1.0, 2.0, 0.0) == doctest::Approx(1.0));
    CHECK(harmonic_combination(1.0, 2.0, 1.0) == doctest::Approx(2.0));
    CHECK(harmonic_combination(3.0, 3.0, 0.3) == doctest::Approx(3.0));
    CHECK(harmonic_combination(-1.0, -2.0, 0.5) == doctest::Approx(-4.0 / 3.0));
}
