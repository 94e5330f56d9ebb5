#include "harmonia/cli.hpp"

#include "harmonia/convexity.hpp"
#include "harmonia/expr.hpp"
#include "harmonia/hh.hpp"
#include "harmonia/means.hpp"
#include "harmonia/quad.hpp"
#include "harmonia/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace harmonia::cli {

namespace {

struct Options {
    std::string fn;
    double a = 0.0;
    double b = 0.0;
    double q = 0.0;
    double p = 0.0;
    double tol = 1e-10;
    double quad_tol = 1e-10;
    long samples = 10000;
    std::uint64_t seed = 42;
    long jobs = 1;
    int which = 0;
    std::string expect = "convex";
    std::string checker = "definition";
    bool traits = false;
    bool skip_hypothesis = false;
    std::string format = "human";
    std::string output;
    std::string file;
};

int emit(const Report& rep, const Options& opt, std::ostream& out,
         std::ostream& err, int code) {
    std::string text;
    if (opt.format == "json")
        text = rep.to_json() + "\n";
    else if (opt.format == "csv")
        text = rep.csv_header() + "\n" + rep.csv_row() + "\n";
    else
        text = rep.to_human();

    if (!opt.output.empty()) {
        std::ofstream f(opt.output);
        if (!f) {
            err << "error: cannot write " << opt.output << "\n";
            return 2;
        }
        f << text;
    } else {
        out << text;
    }
    return code;
}

Report witness_report(const Witness& w) {
    Report r;
    r.put("x", w.x).put("y", w.y).put("t", w.t).put("violation", w.violation);
    return r;
}

Report traits_report(const FunctionTraits& t) {
    Report r;
    r.put("convex", to_string(t.convex))
        .put("nondecreasing", to_string(t.nondecreasing))
        .put("nonincreasing", to_string(t.nonincreasing))
        .put("harmonically_convex", to_string(t.harmonically_convex))
        .put("sign_of_domain", to_string(t.sign_of_domain));
    return r;
}

/// |f'|^q as a FunctionSpec, the hypothesis object of both bound theorems.
FunctionSpec hypothesis_spec(const FunctionSpec& f, double q) {
    ExprPtr body =
        node(ExprKind::Pow, node(ExprKind::Abs, f.derivative), constant(q));
    return make_function_spec(std::move(body));
}

int cmd_convexity(const Options& opt, std::ostream& out, std::ostream& err) {
    FunctionSpec f = parse(opt.fn);
    Interval iv(opt.a, opt.b);
    ConvexityVerdict v =
        opt.checker == "reciprocal"
            ? check_via_reciprocal_transform(f, iv, opt.samples, opt.tol,
                                             opt.seed)
            : check_harmonic_convexity(f, iv, opt.samples, opt.tol, opt.seed);

    bool convex_ok = v.harmonically_convex == Tri::holds;
    bool concave_ok = v.harmonically_concave == Tri::holds;
    bool holds = opt.expect == "concave"  ? concave_ok
                 : opt.expect == "any"    ? (convex_ok || concave_ok)
                 : opt.expect == "both"   ? (convex_ok && concave_ok)
                                          : convex_ok;

    Report rep;
    rep.put("command", "convexity")
        .put("fn", opt.fn)
        .put("a", opt.a)
        .put("b", opt.b)
        .put("checker", opt.checker)
        .put("samples", opt.samples)
        .put("tol", opt.tol)
        .put("seed", static_cast<long>(opt.seed))
        .put("expect", opt.expect)
        .put("harmonically_convex", to_string(v.harmonically_convex))
        .put("harmonically_concave", to_string(v.harmonically_concave));
    if (v.witness)
        rep.put("witness", witness_report(*v.witness));
    if (opt.traits) {
        FunctionTraits t = derive_traits(f, iv, opt.samples, opt.tol, opt.seed);
        rep.put("traits", traits_report(t));
        std::vector<Report> rules;
        for (const Implication& imp : classify_by_proposition(t)) {
            Report r;
            r.put("rule", imp.rule).put("concludes", to_string(imp.concludes));
            rules.push_back(std::move(r));
        }
        rep.put("implications", std::move(rules));
    }
    rep.put("holds", holds);
    return emit(rep, opt, out, err, holds ? 0 : 1);
}

int cmd_hh(const Options& opt, std::ostream& out, std::ostream& err) {
    FunctionSpec f = parse(opt.fn);
    Interval iv(opt.a, opt.b);
    HHReport hh = hh_triple(f, iv, opt.tol, QuadOptions{opt.quad_tol, 100000});
    bool holds = hh.verdict_left && hh.verdict_right;

    Report rep;
    rep.put("command", "hh")
        .put("fn", opt.fn)
        .put("a", opt.a)
        .put("b", opt.b)
        .put("tol", opt.tol)
        .put("quad_tol", opt.quad_tol)
        .put("left", hh.left)
        .put("middle", hh.middle)
        .put("right", hh.right)
        .put("middle_error", hh.middle_error)
        .put("verdict_left", hh.verdict_left)
        .put("verdict_right", hh.verdict_right)
        .put("holds", holds);
    return emit(rep, opt, out, err, holds ? 0 : 1);
}

int cmd_identity(const Options& opt, std::ostream& out, std::ostream& err) {
    FunctionSpec f = parse(opt.fn);
    Interval iv(opt.a, opt.b);
    IdentityReport id = identity_check(f, iv, QuadOptions{opt.quad_tol, 100000});
    bool holds = id.gap <= opt.tol + id.lhs_error + id.rhs_error;

    Report rep;
    rep.put("command", "identity")
        .put("fn", opt.fn)
        .put("a", opt.a)
        .put("b", opt.b)
        .put("tol", opt.tol)
        .put("quad_tol", opt.quad_tol)
        .put("lhs", id.lhs)
        .put("rhs", id.rhs)
        .put("gap", id.gap)
        .put("lhs_error", id.lhs_error)
        .put("rhs_error", id.rhs_error)
        .put("holds", holds);
    return emit(rep, opt, out, err, holds ? 0 : 1);
}

int cmd_bound(const Options& opt, std::ostream& out, std::ostream& err,
              bool hoelder) {
    FunctionSpec f = parse(opt.fn);
    Interval iv(opt.a, opt.b);

    std::string hyp_result = "skipped";
    bool hyp_ok = true;
    if (!opt.skip_hypothesis) {
        ConvexityVerdict v = check_harmonic_convexity(
            hypothesis_spec(f, opt.q), iv, opt.samples, 1e-9, opt.seed);
        hyp_ok = v.harmonically_convex == Tri::holds;
        hyp_result = hyp_ok ? "holds" : "fails";
    }

    QuadOptions quad{opt.quad_tol, 100000};
    BoundReport br =
        hoelder ? hoelder_bound_check(f, iv, opt.q, opt.tol,
                                      !opt.skip_hypothesis && hyp_ok, quad)
                : powermean_bound_check(f, iv, opt.q, opt.tol,
                                        !opt.skip_hypothesis && hyp_ok, quad);
    bool holds = br.verdict && hyp_ok;

    Report rep;
    rep.put("command", hoelder ? "bound-hoelder" : "bound-powermean")
        .put("fn", opt.fn)
        .put("a", opt.a)
        .put("b", opt.b)
        .put("q", br.q);
    if (hoelder)
        rep.put("p", br.p);
    rep.put("tol", opt.tol)
        .put("quad_tol", opt.quad_tol)
        .put("lhs_abs", br.lhs_abs)
        .put("lhs_error", br.lhs_error)
        .put("rhs", br.rhs)
        .put("tightness", br.tightness);
    if (hoelder) {
        Report mu;
        mu.put("mu1", br.mu.mu1).put("mu2", br.mu.mu2);
        rep.put("mu", std::move(mu));
    } else {
        Report lam;
        lam.put("lambda1", br.lambda.lambda1)
            .put("lambda2", br.lambda.lambda2)
            .put("lambda3", br.lambda.lambda3);
        rep.put("lambda", std::move(lam));
    }
    Report hyp;
    hyp.put("requested", !opt.skip_hypothesis).put("result", hyp_result);
    rep.put("hypothesis", std::move(hyp));
    rep.put("verdict", br.verdict).put("holds", holds);
    return emit(rep, opt, out, err, holds ? 0 : 1);
}

int cmd_constants(const Options& opt, bool with_q, std::ostream& out,
                  std::ostream& err) {
    Interval iv(opt.a, opt.b);
    LambdaConstants l = lambda_constants(iv);

    Report rep;
    rep.put("command", "constants").put("a", opt.a).put("b", opt.b);
    Report lam;
    lam.put("lambda1", l.lambda1)
        .put("lambda2", l.lambda2)
        .put("lambda3", l.lambda3);
    rep.put("lambda", std::move(lam));
    if (with_q) {
        MuConstants m = mu_constants(iv, opt.q);
        Report mu;
        mu.put("q", m.q).put("mu1", m.mu1).put("mu2", m.mu2);
        rep.put("mu", std::move(mu));
    }
    return emit(rep, opt, out, err, 0);
}

int cmd_means(const Options& opt, bool with_p, std::ostream& out,
              std::ostream& err) {
    std::optional<double> p;
    if (with_p)
        p = opt.p;
    MeanValues m = compute_means(opt.a, opt.b, p);

    double slack = 1e-12 * std::max(1.0, m.A);
    bool chain = m.H <= m.G + slack && m.G <= m.L + slack &&
                 m.L <= m.I + slack && m.I <= m.A + slack;

    Report rep;
    rep.put("command", "means")
        .put("a", opt.a)
        .put("b", opt.b)
        .put("A", m.A)
        .put("G", m.G)
        .put("H", m.H)
        .put("L", m.L)
        .put("I", m.I);
    if (m.Lp) {
        Report lp;
        lp.put("p", m.Lp->p).put("value", m.Lp->value);
        rep.put("Lp", std::move(lp));
    }
    rep.put("chain_holds", chain);
    return emit(rep, opt, out, err, chain ? 0 : 1);
}

int cmd_props(const Options& opt, bool with_p, std::ostream& out,
              std::ostream& err) {
    std::vector<std::pair<int, std::optional<double>>> selection;
    std::optional<double> p;
    if (with_p)
        p = opt.p;
    if (opt.which != 0) {
        selection.emplace_back(opt.which, p);
    } else {
        selection.emplace_back(1, std::nullopt);
        selection.emplace_back(2, std::nullopt);
        if (p) {
            selection.emplace_back(3, p);
        } else {
            for (double dp : {-0.5, 0.5, 1.0, 2.0})
                selection.emplace_back(3, dp);
        }
        selection.emplace_back(4, std::nullopt);
    }

    bool holds = true;
    std::vector<Report> chains;
    for (auto& [which, pv] : selection) {
        PropositionReport pr =
            proposition_check(which, opt.a, opt.b, pv, opt.tol);
        Report r;
        r.put("which", which);
        if (which == 3)
            r.put("p", pr.p);
        r.put("lhs", pr.lhs)
            .put("mid", pr.mid)
            .put("rhs", pr.rhs)
            .put("chain_holds", pr.chain_holds)
            .put("hh_left", pr.hh_left)
            .put("hh_middle", pr.hh_middle)
            .put("hh_right", pr.hh_right)
            .put("cross_gap", pr.cross_gap)
            .put("cross_ok", pr.cross_ok);
        chains.push_back(std::move(r));
        holds = holds && pr.chain_holds && pr.cross_ok;
    }

    Report rep;
    rep.put("command", "props")
        .put("a", opt.a)
        .put("b", opt.b)
        .put("cross_tol", opt.tol)
        .put("chains", std::move(chains))
        .put("holds", holds);
    return emit(rep, opt, out, err, holds ? 0 : 1);
}

// ---------------------------------------------------------------------------
// sweep: line-oriented job files, one cell per line, whitespace-separated
// key=value tokens. Keys: fn, a, b (required), q, tol (optional). '#' starts
// a comment line.

struct SweepCell {
    int line_no = 0;
    std::string error; // parse failure, if any
    std::string fn;
    double a = 0.0, b = 0.0;
    std::optional<double> q;
    std::optional<double> tol;
};

std::vector<SweepCell> parse_jobs(std::istream& in) {
    std::vector<SweepCell> cells;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;

        SweepCell cell;
        cell.line_no = line_no;
        bool has_fn = false, has_a = false, has_b = false;
        std::istringstream tokens(line);
        std::string tok;
        while (cell.error.empty() && tokens >> tok) {
            std::size_t eq = tok.find('=');
            if (eq == std::string::npos || eq == 0) {
                cell.error = "expected key=value, got '" + tok + "'";
                break;
            }
            std::string key = tok.substr(0, eq);
            std::string val = tok.substr(eq + 1);
            auto as_double = [&](double& slot) {
                try {
                    std::size_t used = 0;
                    slot = std::stod(val, &used);
                    if (used != val.size())
                        cell.error = "bad number '" + val + "' for " + key;
                } catch (const std::exception&) {
                    cell.error = "bad number '" + val + "' for " + key;
                }
            };
            if (key == "fn") {
                cell.fn = val;
                has_fn = true;
            } else if (key == "a") {
                as_double(cell.a);
                has_a = true;
            } else if (key == "b") {
                as_double(cell.b);
                has_b = true;
            } else if (key == "q") {
                double v = 0;
                as_double(v);
                cell.q = v;
            } else if (key == "tol") {
                double v = 0;
                as_double(v);
                cell.tol = v;
            } else {
                cell.error = "unknown key '" + key + "'";
            }
        }
        if (cell.error.empty() && !(has_fn && has_a && has_b))
            cell.error = "fn=, a= and b= are all required";
        cells.push_back(std::move(cell));
    }
    return cells;
}

Report run_cell(const SweepCell& cell, long index) {
    Report rep;
    rep.put("index", index).put("line", cell.line_no).put("fn", cell.fn);
    if (!cell.error.empty()) {
        rep.put("status", "error: " + cell.error);
        return rep;
    }
    rep.put("a", cell.a).put("b", cell.b);
    if (cell.q)
        rep.put("q", *cell.q);
    double tol = cell.tol.value_or(1e-10);
    double identity_tol = cell.tol.value_or(1e-8);
    try {
        FunctionSpec f = parse(cell.fn);
        Interval iv(cell.a, cell.b);
        QuadOptions quad{1e-10, 100000};

        HHReport hh = hh_triple(f, iv, tol, quad);
        rep.put("hh_left", hh.left)
            .put("hh_middle", hh.middle)
            .put("hh_right", hh.right)
            .put("hh_ok", hh.verdict_left && hh.verdict_right);

        if (iv.positive()) {
            IdentityReport id = identity_check(f, iv, quad);
            rep.put("identity_gap", id.gap)
                .put("identity_ok",
                     id.gap <= identity_tol + id.lhs_error + id.rhs_error);
            if (cell.q && *cell.q >= 1.0) {
                BoundReport pm =
                    powermean_bound_check(f, iv, *cell.q, tol, false, quad);
                rep.put("pm_lhs", pm.lhs_abs)
                    .put("pm_rhs", pm.rhs)
                    .put("pm_ok", pm.verdict);
            }
            if (cell.q && *cell.q > 1.0) {
                BoundReport ho =
                    hoelder_bound_check(f, iv, *cell.q, tol, false, quad);
                rep.put("ho_lhs", ho.lhs_abs)
                    .put("ho_rhs", ho.rhs)
                    .put("ho_ok", ho.verdict);
            }
        }
        rep.put("status", "ok");
    } catch (const std::exception& e) {
        rep.put("status", std::string("error: ") + e.what());
    }
    return rep;
}

const char* const kSweepColumns[] = {
    "index",  "fn",           "a",           "b",      "q",
    "status", "hh_left",      "hh_middle",   "hh_right", "hh_ok",
    "identity_gap", "identity_ok", "pm_lhs", "pm_rhs", "pm_ok",
    "ho_lhs", "ho_rhs",       "ho_ok",
};

int cmd_sweep(const Options& opt, std::ostream& out, std::ostream& err) {
    std::ifstream file(opt.file);
    if (!file)
        throw std::invalid_argument("cannot open job file: " + opt.file);
    std::vector<SweepCell> cells = parse_jobs(file);

    std::vector<Report> results(cells.size());
    long jobs = std::max(1L, opt.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            results[i] = run_cell(cells[i], static_cast<long>(i));
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < cells.size();)
                results[i] = run_cell(cells[i], static_cast<long>(i));
        };
        std::vector<std::thread> pool;
        for (long j = 0; j < std::min<long>(jobs, 64); ++j)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }

    long failures = 0, errors = 0;
    for (const Report& r : results) {
        auto status = r.flat_value("status");
        if (!status || status->rfind("ok", 0) != 0) {
            ++errors;
            continue;
        }
        for (const char* key :
             {"hh_ok", "identity_ok", "pm_ok", "ho_ok"}) {
            auto v = r.flat_value(key);
            if (v && *v == "false") {
                ++failures;
                break;
            }
        }
    }
    int code = errors > 0 ? 2 : failures > 0 ? 1 : 0;

    std::string text;
    if (opt.format == "csv") {
        std::string header;
        for (const char* col : kSweepColumns) {
            if (!header.empty())
                header += ',';
            header += col;
        }
        text = header + "\n";
        for (const Report& r : results) {
            std::string row;
            bool first = true;
            for (const char* col : kSweepColumns) {
                if (!first)
                    row += ',';
                first = false;
                row += csv_escape(r.flat_value(col).value_or(""));
            }
            text += row + "\n";
        }
    } else {
        Report rep;
        rep.put("command", "sweep")
            .put("file", opt.file)
            .put("cells", std::move(results))
            .put("total", static_cast<long>(cells.size()))
            .put("failures", failures)
            .put("errors", errors)
            .put("holds", code == 0);
        text = opt.format == "json" ? rep.to_json() + "\n" : rep.to_human();
    }

    if (!opt.output.empty()) {
        std::ofstream f(opt.output);
        if (!f) {
            err << "error: cannot write " << opt.output << "\n";
            return 2;
        }
        f << text;
    } else {
        out << text;
    }
    return code;
}

std::uint64_t env_seed(std::ostream& err, bool& bad) {
    const char* env = std::getenv("HARMONIA_SEED");
    if (env == nullptr || *env == '\0')
        return 42;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
        err << "error: HARMONIA_SEED must be an unsigned integer, got '" << env
            << "'\n";
        bad = true;
        return 42;
    }
    return static_cast<std::uint64_t>(v);
}

void add_output_options(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "human"}))
        ->capture_default_str();
    sub->add_option("--output", o.output, "Write the report to a file");
}

void add_interval_options(CLI::App* sub, Options& o) {
    sub->add_option("--a", o.a, "Left endpoint")->required();
    sub->add_option("--b", o.b, "Right endpoint")->required();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    bool bad_env = false;
    std::uint64_t default_seed = env_seed(err, bad_env);
    if (bad_env)
        return 2;

    Options o;
    o.seed = default_seed;

    CLI::App app{
        "harmonia — numerical verification of harmonic convexity,\n"
        "its Hermite-Hadamard triple, derivative bounds, and special means"};
    app.require_subcommand(1);

    CLI::App* convexity =
        app.add_subcommand("convexity", "Sample a harmonic-convexity verdict");
    convexity->add_option("--fn", o.fn, "Function of x")->required();
    add_interval_options(convexity, o);
    convexity->add_option("--tol", o.tol, "Defect tolerance")
        ->default_val(1e-9);
    convexity->add_option("--samples", o.samples, "Random samples")
        ->capture_default_str();
    convexity->add_option("--seed", o.seed, "Sampling seed")
        ->default_val(default_seed);
    convexity->add_option("--checker", o.checker, "Checker implementation")
        ->check(CLI::IsMember({"definition", "reciprocal"}))
        ->capture_default_str();
    convexity->add_option("--expect", o.expect, "Sense that must hold")
        ->check(CLI::IsMember({"convex", "concave", "any", "both"}))
        ->capture_default_str();
    convexity->add_flag("--traits", o.traits,
                        "Also derive traits and classifier implications");
    add_output_options(convexity, o);

    CLI::App* hh_cmd =
        app.add_subcommand("hh", "Evaluate the Hermite-Hadamard triple");
    hh_cmd->add_option("--fn", o.fn, "Function of x")->required();
    add_interval_options(hh_cmd, o);
    hh_cmd->add_option("--tol", o.tol, "Verdict tolerance")
        ->default_val(1e-10);
    hh_cmd->add_option("--quad-tol", o.quad_tol, "Quadrature tolerance")
        ->capture_default_str();
    add_output_options(hh_cmd, o);

    CLI::App* identity = app.add_subcommand(
        "identity", "Check the trapezoid-gap integral identity");
    identity->add_option("--fn", o.fn, "Function of x")->required();
    add_interval_options(identity, o);
    identity->add_option("--tol", o.tol, "Gap tolerance")->default_val(1e-8);
    identity->add_option("--quad-tol", o.quad_tol, "Quadrature tolerance")
        ->capture_default_str();
    add_output_options(identity, o);

    CLI::App* pm = app.add_subcommand(
        "bound-powermean", "Check the power-mean derivative bound");
    CLI::App* ho = app.add_subcommand(
        "bound-hoelder", "Check the conjugate-exponent derivative bound");
    for (CLI::App* sub : {pm, ho}) {
        sub->add_option("--fn", o.fn, "Function of x")->required();
        add_interval_options(sub, o);
        sub->add_option("--q", o.q, "Exponent q")->required();
        sub->add_option("--tol", o.tol, "Verdict tolerance")
            ->default_val(1e-10);
        sub->add_option("--quad-tol", o.quad_tol, "Quadrature tolerance")
            ->capture_default_str();
        sub->add_option("--samples", o.samples,
                        "Samples for the hypothesis check")
            ->capture_default_str();
        sub->add_option("--seed", o.seed, "Sampling seed")
            ->default_val(default_seed);
        sub->add_flag("--skip-hypothesis", o.skip_hypothesis,
                      "Do not sample |f'|^q for harmonic convexity");
        add_output_options(sub, o);
    }

    CLI::App* constants =
        app.add_subcommand("constants", "Closed-form kernel constants");
    add_interval_options(constants, o);
    CLI::Option* constants_q =
        constants->add_option("--q", o.q, "Also compute the q-weighted pair");
    add_output_options(constants, o);

    CLI::App* means_cmd =
        app.add_subcommand("means", "Special means and their chain");
    means_cmd->add_option("--a", o.a, "First input")->required();
    means_cmd->add_option("--b", o.b, "Second input")->required();
    CLI::Option* means_p =
        means_cmd->add_option("--p", o.p, "Exponent for the p-logarithmic mean");
    add_output_options(means_cmd, o);

    CLI::App* props = app.add_subcommand(
        "props", "Special-means chains with quadrature cross-check");
    add_interval_options(props, o);
    props->add_option("--which", o.which, "Chain selector (1-4); default all")
        ->check(CLI::Range(1, 4));
    CLI::Option* props_p =
        props->add_option("--p", o.p, "Exponent for chain 3");
    props->add_option("--cross-tol", o.tol,
                      "Allowed disagreement between the two paths")
        ->default_val(1e-8);
    add_output_options(props, o);

    CLI::App* sweep =
        app.add_subcommand("sweep", "Run a job file of verification cells");
    sweep->add_option("--file", o.file, "Job file (fn=… a=… b=… [q=…] per line)")
        ->required();
    sweep->add_option("--jobs", o.jobs, "Parallel workers")
        ->capture_default_str();
    add_output_options(sweep, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        // The subcommands share one Options instance, so a default set while
        // registering one subcommand would bleed into the others; pin the
        // per-subcommand tolerance defaults after parsing instead.
        struct TolDefault {
            CLI::App* sub;
            const char* flag;
            double value;
        };
        for (const TolDefault& d :
             {TolDefault{convexity, "--tol", 1e-9},
              TolDefault{hh_cmd, "--tol", 1e-10},
              TolDefault{identity, "--tol", 1e-8},
              TolDefault{pm, "--tol", 1e-10}, TolDefault{ho, "--tol", 1e-10},
              TolDefault{props, "--cross-tol", 1e-8}}) {
            if (d.sub->parsed() && d.sub->count(d.flag) == 0)
                o.tol = d.value;
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (convexity->parsed())
            return cmd_convexity(o, out, err);
        if (hh_cmd->parsed())
            return cmd_hh(o, out, err);
        if (identity->parsed())
            return cmd_identity(o, out, err);
        if (pm->parsed())
            return cmd_bound(o, out, err, false);
        if (ho->parsed())
            return cmd_bound(o, out, err, true);
        if (constants->parsed())
            return cmd_constants(o, constants_q->count() > 0, out, err);
        if (means_cmd->parsed())
            return cmd_means(o, means_p->count() > 0, out, err);
        if (props->parsed())
            return cmd_props(o, props_p->count() > 0, out, err);
        if (sweep->parsed())
            return cmd_sweep(o, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace harmonia::cli
