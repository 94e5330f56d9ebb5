#include "harmonia/convexity.hpp"
#include "harmonia/expr.hpp"
#include "harmonia/hh.hpp"
#include "harmonia/means.hpp"
#include "harmonia/quad.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <iomanip>
#include <sstream>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace harmonia;

namespace {

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Harmonic convexity, Hermite-Hadamard triples, derivative "
              "bounds, and special means";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ParseError>(m, "ExpressionParseError",
                                       PyExc_ValueError);
    py::register_exception<EvalError>(m, "EvaluationError", PyExc_ValueError);
    py::register_exception<QuadratureError>(m, "QuadratureError",
                                            PyExc_RuntimeError);

    // ---- expressions -----------------------------------------------------

    py::class_<FunctionSpec>(m, "FunctionSpec")
        .def_readonly("source", &FunctionSpec::source)
        .def_property_readonly(
            "body", [](const FunctionSpec& f) { return to_string(*f.body); })
        .def_property_readonly(
            "derivative",
            [](const FunctionSpec& f) { return to_string(*f.derivative); })
        .def("value_at", &FunctionSpec::value_at, py::arg("x"))
        .def("derivative_at", &FunctionSpec::derivative_at, py::arg("x"))
        .def("__call__", &FunctionSpec::value_at, py::arg("x"))
        .def("__repr__", [](const FunctionSpec& f) {
            return "FunctionSpec('" + f.source + "')";
        });

    m.def("parse", [](const std::string& src) { return parse(src); },
          py::arg("source"),
          "Parse a function of x; see the grammar in the README.");

    // ---- quadrature ------------------------------------------------------

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
        .def_readonly("a", &Interval::a)
        .def_readonly("b", &Interval::b)
        .def("width", &Interval::width)
        .def("positive", &Interval::positive)
        .def("contains", &Interval::contains, py::arg("x"))
        .def("__repr__", [](const Interval& iv) {
            return "Interval(" + num(iv.a) + ", " + num(iv.b) + ")";
        });

    py::class_<QuadResult>(m, "QuadResult")
        .def_readonly("value", &QuadResult::value)
        .def_readonly("error_estimate", &QuadResult::error_estimate)
        .def_readonly("subdivisions", &QuadResult::subdivisions)
        .def("__repr__", [](const QuadResult& r) {
            return "QuadResult(value=" + num(r.value) +
                   ", error_estimate=" + num(r.error_estimate) +
                   ", subdivisions=" + std::to_string(r.subdivisions) + ")";
        });

    m.def(
        "integrate",
        [](const std::function<double(double)>& g, double lo, double hi,
           double tol, long subdivision_cap) {
            return integrate(g, lo, hi, QuadOptions{tol, subdivision_cap});
        },
        py::arg("g"), py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-10,
        py::arg("subdivision_cap") = 100000L,
        "Adaptive Simpson quadrature of a callable over [lo, hi].");

    // ---- Hermite-Hadamard ------------------------------------------------

    py::class_<HHReport>(m, "HHReport")
        .def_readonly("left", &HHReport::left)
        .def_readonly("middle", &HHReport::middle)
        .def_readonly("right", &HHReport::right)
        .def_readonly("middle_error", &HHReport::middle_error)
        .def_readonly("verdict_left", &HHReport::verdict_left)
        .def_readonly("verdict_right", &HHReport::verdict_right)
        .def_property_readonly(
            "holds",
            [](const HHReport& r) { return r.verdict_left && r.verdict_right; })
        .def("__repr__", [](const HHReport& r) {
            return "HHReport(left=" + num(r.left) + ", middle=" +
                   num(r.middle) + ", right=" + num(r.right) +
                   ", verdict_left=" + (r.verdict_left ? "True" : "False") +
                   ", verdict_right=" + (r.verdict_right ? "True" : "False") +
                   ")";
        });

    m.def(
        "hh_triple",
        [](const FunctionSpec& f, const Interval& iv, double tol,
           double quad_tol) {
            return hh_triple(f, iv, tol, QuadOptions{quad_tol, 100000});
        },
        py::arg("f"), py::arg("iv"), py::arg("tol") = 1e-10,
        py::arg("quad_tol") = 1e-10,
        "Evaluate the harmonic Hermite-Hadamard triple on an interval.");

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("lhs", &IdentityReport::lhs)
        .def_readonly("rhs", &IdentityReport::rhs)
        .def_readonly("gap", &IdentityReport::gap)
        .def_readonly("lhs_error", &IdentityReport::lhs_error)
        .def_readonly("rhs_error", &IdentityReport::rhs_error)
        .def("__repr__", [](const IdentityReport& r) {
            return "IdentityReport(lhs=" + num(r.lhs) + ", rhs=" + num(r.rhs) +
                   ", gap=" + num(r.gap) + ")";
        });

    m.def(
        "identity_check",
        [](const FunctionSpec& f, const Interval& iv, double quad_tol) {
            return identity_check(f, iv, QuadOptions{quad_tol, 100000});
        },
        py::arg("f"), py::arg("iv"), py::arg("quad_tol") = 1e-10,
        "Evaluate both sides of the trapezoid-gap identity.");

    py::class_<LambdaConstants>(m, "LambdaConstants")
        .def_readonly("lambda1", &LambdaConstants::lambda1)
        .def_readonly("lambda2", &LambdaConstants::lambda2)
        .def_readonly("lambda3", &LambdaConstants::lambda3)
        .def("__repr__", [](const LambdaConstants& c) {
            return "LambdaConstants(" + num(c.lambda1) + ", " +
                   num(c.lambda2) + ", " + num(c.lambda3) + ")";
        });

    m.def("lambda_constants", &lambda_constants, py::arg("iv"),
          "Closed-form kernel moments of the trapezoid-gap identity.");

    py::class_<MuConstants>(m, "MuConstants")
        .def_readonly("mu1", &MuConstants::mu1)
        .def_readonly("mu2", &MuConstants::mu2)
        .def_readonly("q", &MuConstants::q)
        .def("__repr__", [](const MuConstants& c) {
            return "MuConstants(mu1=" + num(c.mu1) + ", mu2=" + num(c.mu2) +
                   ", q=" + num(c.q) + ")";
        });

    m.def("mu_constants", &mu_constants, py::arg("iv"), py::arg("q"),
          "Weighted kernel moments used by the conjugate-exponent bound.");

    py::enum_<BoundKind>(m, "BoundKind")
        .value("power_mean", BoundKind::power_mean)
        .value("hoelder", BoundKind::hoelder);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("kind", &BoundReport::kind)
        .def_readonly("q", &BoundReport::q)
        .def_readonly("p", &BoundReport::p)
        .def_readonly("lhs_abs", &BoundReport::lhs_abs)
        .def_readonly("lhs_error", &BoundReport::lhs_error)
        .def_readonly("rhs", &BoundReport::rhs)
        .def_readonly("verdict", &BoundReport::verdict)
        .def_readonly("tightness", &BoundReport::tightness)
        .def_readonly("hypothesis_checked", &BoundReport::hypothesis_checked)
        .def_readonly("lam", &BoundReport::lambda)
        .def_readonly("mu", &BoundReport::mu)
        .def("__repr__", [](const BoundReport& r) {
            return std::string("BoundReport(kind=") +
                   (r.kind == BoundKind::power_mean ? "power_mean"
                                                    : "hoelder") +
                   ", lhs_abs=" + num(r.lhs_abs) + ", rhs=" + num(r.rhs) +
                   ", verdict=" + (r.verdict ? "True" : "False") + ")";
        });

    m.def(
        "powermean_bound_check",
        [](const FunctionSpec& f, const Interval& iv, double q, double tol,
           bool hypothesis_checked, double quad_tol) {
            return powermean_bound_check(f, iv, q, tol, hypothesis_checked,
                                         QuadOptions{quad_tol, 100000});
        },
        py::arg("f"), py::arg("iv"), py::arg("q"), py::arg("tol") = 1e-10,
        py::arg("hypothesis_checked") = false, py::arg("quad_tol") = 1e-10,
        "Check the power-mean derivative bound (q >= 1).");

    m.def(
        "hoelder_bound_check",
        [](const FunctionSpec& f, const Interval& iv, double q, double tol,
           bool hypothesis_checked, double quad_tol) {
            return hoelder_bound_check(f, iv, q, tol, hypothesis_checked,
                                       QuadOptions{quad_tol, 100000});
        },
        py::arg("f"), py::arg("iv"), py::arg("q"), py::arg("tol") = 1e-10,
        py::arg("hypothesis_checked") = false, py::arg("quad_tol") = 1e-10,
        "Check the conjugate-exponent derivative bound (q > 1).");

    m.def("harmonic_path", &harmonic_path, py::arg("a"), py::arg("b"),
          py::arg("t"), "ab/(tb+(1-t)a), from b at t=0 to a at t=1.");

    // ---- convexity ---------------------------------------------------------

    py::enum_<Tri>(m, "Tri")
        .value("holds", Tri::holds)
        .value("fails", Tri::fails)
        .value("inconclusive", Tri::inconclusive);

    py::enum_<DomainSign>(m, "DomainSign")
        .value("positive", DomainSign::positive)
        .value("negative", DomainSign::negative);

    py::enum_<Conclusion>(m, "Conclusion")
        .value("harmonically_convex", Conclusion::harmonically_convex)
        .value("convex", Conclusion::convex);

    py::class_<Witness>(m, "Witness")
        .def_readonly("x", &Witness::x)
        .def_readonly("y", &Witness::y)
        .def_readonly("t", &Witness::t)
        .def_readonly("violation", &Witness::violation)
        .def("__repr__", [](const Witness& w) {
            return "Witness(x=" + num(w.x) + ", y=" + num(w.y) +
                   ", t=" + num(w.t) + ", violation=" + num(w.violation) + ")";
        });

    py::class_<ConvexityVerdict>(m, "ConvexityVerdict")
        .def_readonly("harmonically_convex",
                      &ConvexityVerdict::harmonically_convex)
        .def_readonly("harmonically_concave",
                      &ConvexityVerdict::harmonically_concave)
        .def_readonly("witness", &ConvexityVerdict::witness)
        .def("__repr__", [](const ConvexityVerdict& v) {
            return std::string("ConvexityVerdict(convex=") +
                   to_string(v.harmonically_convex) +
                   ", concave=" + to_string(v.harmonically_concave) + ")";
        });

    m.def("harmonic_combination", &harmonic_combination, py::arg("x"),
          py::arg("y"), py::arg("t"), "xy/(tx+(1-t)y).");
    m.def("harmonic_convexity_defect", &harmonic_convexity_defect,
          py::arg("f"), py::arg("x"), py::arg("y"), py::arg("t"),
          "t f(y) + (1-t) f(x) - f(comb); negative where convexity fails.");

    m.def("check_harmonic_convexity", &check_harmonic_convexity, py::arg("f"),
          py::arg("iv"), py::arg("samples") = 10000L, py::arg("tol") = 1e-9,
          py::arg("seed") = std::uint64_t{42},
          "Grid plus seeded random sampling of the defining inequality.");

    m.def("check_via_reciprocal_transform", &check_via_reciprocal_transform,
          py::arg("f"), py::arg("iv"), py::arg("samples") = 10000L,
          py::arg("tol") = 1e-9, py::arg("seed") = std::uint64_t{42},
          "Same verdict through ordinary convexity of u -> f(1/u).");

    py::class_<FunctionTraits>(m, "FunctionTraits")
        .def_readonly("convex", &FunctionTraits::convex)
        .def_readonly("nondecreasing", &FunctionTraits::nondecreasing)
        .def_readonly("nonincreasing", &FunctionTraits::nonincreasing)
        .def_readonly("harmonically_convex",
                      &FunctionTraits::harmonically_convex)
        .def_readonly("sign_of_domain", &FunctionTraits::sign_of_domain)
        .def("__repr__", [](const FunctionTraits& t) {
            return std::string("FunctionTraits(convex=") +
                   to_string(t.convex) +
                   ", nondecreasing=" + to_string(t.nondecreasing) +
                   ", nonincreasing=" + to_string(t.nonincreasing) +
                   ", harmonically_convex=" +
                   to_string(t.harmonically_convex) +
                   ", sign_of_domain=" + to_string(t.sign_of_domain) + ")";
        });

    m.def("derive_traits", &derive_traits, py::arg("f"), py::arg("iv"),
          py::arg("samples") = 10000L, py::arg("tol") = 1e-9,
          py::arg("seed") = std::uint64_t{42},
          "Sampled convexity, monotonicity and domain-sign traits.");

    py::class_<Implication>(m, "Implication")
        .def_readonly("rule", &Implication::rule)
        .def_readonly("concludes", &Implication::concludes)
        .def("__repr__", [](const Implication& imp) {
            return "Implication(rule=" + std::to_string(imp.rule) +
                   ", concludes=" + to_string(imp.concludes) + ")";
        });

    m.def("classify_by_proposition", &classify_by_proposition,
          py::arg("traits"),
          "Conclusions that follow from the sampled traits.");

    // ---- means -------------------------------------------------------------

    py::class_<MeanValues>(m, "MeanValues")
        .def_readonly("A", &MeanValues::A)
        .def_readonly("G", &MeanValues::G)
        .def_readonly("H", &MeanValues::H)
        .def_readonly("L", &MeanValues::L)
        .def_readonly("I", &MeanValues::I)
        .def_property_readonly(
            "Lp",
            [](const MeanValues& m_)
                -> std::optional<std::pair<double, double>> {
                if (m_.Lp)
                    return std::make_pair(m_.Lp->p, m_.Lp->value);
                return std::nullopt;
            },
            "(p, L_p) when an exponent was requested, else None")
        .def("__repr__", [](const MeanValues& v) {
            return "MeanValues(A=" + num(v.A) + ", G=" + num(v.G) +
                   ", H=" + num(v.H) + ", L=" + num(v.L) + ", I=" + num(v.I) +
                   ")";
        });

    m.def("compute_means", &compute_means, py::arg("a"), py::arg("b"),
          py::arg("p") = std::optional<double>{},
          "All classical means of a pair; optionally one L_p member.");

    m.def("lp_mean", &lp_mean, py::arg("a"), py::arg("b"), py::arg("p"),
          "p-logarithmic mean; p = -1 gives L, p = 0 gives I.");

    m.def(
        "lp_monotonicity_check",
        [](double a, double b, const std::vector<double>& grid) {
            return lp_monotonicity_check(a, b, grid);
        },
        py::arg("a"), py::arg("b"), py::arg("p_grid"),
        "True iff p -> L_p is nondecreasing along the sorted grid.");

    py::class_<PropositionReport>(m, "PropositionReport")
        .def_readonly("which", &PropositionReport::which)
        .def_readonly("p", &PropositionReport::p)
        .def_readonly("lhs", &PropositionReport::lhs)
        .def_readonly("mid", &PropositionReport::mid)
        .def_readonly("rhs", &PropositionReport::rhs)
        .def_readonly("chain_holds", &PropositionReport::chain_holds)
        .def_readonly("hh_left", &PropositionReport::hh_left)
        .def_readonly("hh_middle", &PropositionReport::hh_middle)
        .def_readonly("hh_right", &PropositionReport::hh_right)
        .def_readonly("cross_gap", &PropositionReport::cross_gap)
        .def_readonly("cross_ok", &PropositionReport::cross_ok)
        .def("__repr__", [](const PropositionReport& r) {
            return "PropositionReport(which=" + std::to_string(r.which) +
                   ", lhs=" + num(r.lhs) + ", mid=" + num(r.mid) +
                   ", rhs=" + num(r.rhs) + ", chain_holds=" +
                   (r.chain_holds ? "True" : "False") + ", cross_ok=" +
                   (r.cross_ok ? "True" : "False") + ")";
        });

    m.def("proposition_check", &proposition_check, py::arg("which"),
          py::arg("a"), py::arg("b"), py::arg("p") = std::optional<double>{},
          py::arg("cross_tol") = 1e-8,
          "One special-means chain, cross-checked against quadrature.");
}
