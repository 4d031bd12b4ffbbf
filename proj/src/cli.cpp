#include "commute/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "commute/applications.hpp"
#include "commute/curve.hpp"
#include "commute/derivative1.hpp"
#include "commute/derivative_higher.hpp"
#include "commute/divided_difference.hpp"
#include "commute/expression.hpp"
#include "commute/io.hpp"
#include "commute/linalg.hpp"
#include "commute/matfun.hpp"
#include "commute/spectral_flow.hpp"
#include "commute/tangency.hpp"

namespace commute::cli {

namespace {

using io::json;

struct GridRange {
    double lo = -1.0, hi = 1.0;
    int count = 401;
};

GridRange parse_grid(const std::string& text) {
    GridRange g;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw InvalidArgument("grid must be lo:hi:count");
    try {
        g.lo = std::stod(text.substr(0, c1));
        g.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        g.count = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw InvalidArgument("grid must be lo:hi:count");
    }
    if (g.count < 2 || !(g.hi > g.lo)) throw InvalidArgument("grid needs hi > lo and count >= 2");
    return g;
}

std::vector<double> grid_points(const GridRange& g) {
    std::vector<double> pts(static_cast<std::size_t>(g.count));
    for (int k = 0; k < g.count; ++k)
        pts[static_cast<std::size_t>(k)] = g.lo + (g.hi - g.lo) * k / (g.count - 1);
    return pts;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        try {
            out.push_back(std::stod(cell));
        } catch (const std::exception&) {
            throw InvalidArgument("malformed number list: " + text);
        }
    }
    if (out.empty()) throw InvalidArgument("empty number list");
    return out;
}

Interval parse_interval(const std::string& text) {
    const auto vals = parse_number_list(text);
    if (vals.size() != 2 || !(vals[1] > vals[0]))
        throw InvalidArgument("interval must be lo,hi with hi > lo");
    return Interval{vals[0], vals[1]};
}

ScalarFunction function_from_flags(const std::string& expr_text, int arity,
                                   const std::string& dom_x, const std::string& dom_y) {
    std::optional<Rectangle> domain;
    if (!dom_x.empty() || !dom_y.empty()) {
        Rectangle r = Rectangle::unbounded(arity);
        if (!dom_x.empty()) r.sides[0] = parse_interval(dom_x);
        if (!dom_y.empty()) {
            if (arity < 2) throw InvalidArgument("--dom-y given for a one-variable function");
            r.sides[1] = parse_interval(dom_y);
        }
        domain = std::move(r);
    }
    return expr::parse_function(expr_text, arity, domain);
}

SelfAdjointTuple load_tuple(const std::string& path) {
    return io::tuple_from_json(io::load_json_file(path));
}

CommutingTuple load_commuting(const std::string& path, const TolerancePolicy& tol) {
    return CommutingTuple::require(load_tuple(path), tol);
}

CurveSpec curve_from_json(const json& j, const TolerancePolicy& tol, std::uint64_t seed) {
    if (!j.is_object() || !j.contains("family"))
        throw MalformedInput("curve object needs a 'family' field");
    const std::string family = j.at("family").get<std::string>();
    if (family == "witness") {
        if (!j.contains("base") || !j.contains("dir"))
            throw MalformedInput("witness curve needs 'base' and 'dir' tuples");
        const CommutingTuple base =
            CommutingTuple::require(io::tuple_from_json(j.at("base")), tol);
        const SelfAdjointTuple dir = io::tuple_from_json(j.at("dir"));
        TangencyResult res = tangency_check(base, dir, tol, seed);
        if (!res.tangent)
            throw NotTangent("witness curve direction fails the tangency check (residuals " +
                             std::to_string(res.residual_first) + ", " +
                             std::to_string(res.residual_second) + ")");
        return make_witness_curve(witness_curve(*res.data));
    }
    if (family == "linear") {
        if (!j.contains("A") || !j.contains("B"))
            throw MalformedInput("linear curve needs 'A' and 'B' tuples");
        return make_linear_curve(io::tuple_from_json(j.at("A")), io::tuple_from_json(j.at("B")));
    }
    if (family == "rellich-pair") {
        const double c = j.value("c", 0.0);
        return make_rellich_pair_curve(c);
    }
    if (family == "poly-diag") {
        if (!j.contains("coeffs")) throw MalformedInput("poly-diag curve needs 'coeffs'");
        std::vector<std::vector<std::vector<double>>> coeffs;
        try {
            coeffs = j.at("coeffs").get<std::vector<std::vector<std::vector<double>>>>();
        } catch (const json::exception& e) {
            throw MalformedInput(std::string("poly-diag coeffs: ") + e.what());
        }
        return make_poly_diag_curve(coeffs);
    }
    throw MalformedInput("unknown curve family: " + family);
}

json matrix_out(const HermitianMatrix& m) { return io::matrix_to_json(m); }

void emit(std::ostream& out, const std::string& path, const json& j) {
    if (path.empty())
        out << j.dump(2) << '\n';
    else
        io::write_json_file(path, j);
}

void emit_text(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty()) {
        out << text;
    } else {
        std::ofstream f(path);
        if (!f) throw Error("IoError", "cannot write file: " + path);
        f << text;
    }
}

int arity_for_tuple(const SelfAdjointTuple& s) {
    if (s.count() < 1 || s.count() > 2)
        throw InvalidArgument("CLI expressions cover tuples with d = 1 or 2; use the library "
                              "API for higher d");
    return s.count();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"commute-calc: calculus of matrix functions induced on commuting Hermitian tuples"};
    app.require_subcommand(1);
    app.fallthrough();  // global --seed may appear after the subcommand name

    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for all randomized choices")->capture_default_str();

    TolerancePolicy tol;

    // ---- diag ----
    auto* diag_cmd = app.add_subcommand("diag", "jointly diagonalize a commuting tuple");
    std::string diag_in, diag_out;
    diag_cmd->add_option("--in", diag_in, "input tuple JSON")->required();
    diag_cmd->add_option("--out", diag_out, "output JSON path (stdout when omitted)");
    diag_cmd->callback([&] {
        const CommutingTuple s = load_commuting(diag_in, tol);
        const JointDiagonalization jd = joint_diagonalize(s, tol, seed);
        emit(out, diag_out, io::diag_to_json(jd));
    });

    // ---- eval ----
    auto* eval_cmd = app.add_subcommand("eval", "evaluate F(S) for a scalar expression f");
    std::string eval_f, eval_in, eval_out, eval_method = "spectral", eval_domx, eval_domy;
    int eval_nodes = 128;
    eval_cmd->add_option("--f", eval_f, "scalar expression in x (and y)")->required();
    eval_cmd->add_option("--in", eval_in, "input tuple JSON")->required();
    eval_cmd->add_option("--method", eval_method, "spectral | poly | contour")
        ->check(CLI::IsMember({"spectral", "poly", "contour"}));
    eval_cmd->add_option("--nodes", eval_nodes, "contour quadrature nodes");
    eval_cmd->add_option("--dom-x", eval_domx, "domain interval lo,hi for x");
    eval_cmd->add_option("--dom-y", eval_domy, "domain interval lo,hi for y");
    eval_cmd->add_option("--out", eval_out, "output JSON path");
    eval_cmd->callback([&] {
        const CommutingTuple s = load_commuting(eval_in, tol);
        const int arity = arity_for_tuple(s.tuple());
        if (eval_method == "poly") {
            const auto node = expr::parse(eval_f);
            const auto poly = expr::to_polynomial(node, arity);
            if (!poly) throw InvalidArgument("--method poly needs a polynomial expression");
            emit(out, eval_out, matrix_out(eval_poly_direct(*poly, s)));
            return;
        }
        const ScalarFunction f = function_from_flags(eval_f, arity, eval_domx, eval_domy);
        if (eval_method == "contour") {
            std::vector<std::pair<double, double>> ranges;
            for (int r = 0; r < s.count(); ++r) {
                const auto ev = eig_hermitian(s.component(r).mat()).values;
                ranges.emplace_back(ev.front(), ev.back());
            }
            const auto spec = ContourSpec::enclosing(ranges, eval_nodes);
            emit(out, eval_out, matrix_out(eval_contour(f, s, spec)));
            return;
        }
        emit(out, eval_out, matrix_out(eval_matfun(f, s, tol, seed)));
    });

    // ---- tangent ----
    auto* tan_cmd = app.add_subcommand("tangent", "tangency check with optional witness curve");
    std::string tan_base, tan_dir, tan_witness;
    int tan_samples = 20;
    tan_cmd->add_option("--base", tan_base, "base tuple JSON")->required();
    tan_cmd->add_option("--dir", tan_dir, "direction tuple JSON")->required();
    tan_cmd->add_option("--witness", tan_witness, "write sampled witness curve JSON here");
    tan_cmd->add_option("--samples", tan_samples, "witness curve sample count");
    tan_cmd->callback([&] {
        const CommutingTuple base = load_commuting(tan_base, tol);
        const SelfAdjointTuple dir = load_tuple(tan_dir);
        const TangencyResult res = tangency_check(base, dir, tol, seed);
        json j{{"tangent", res.tangent},
               {"residual_first", res.residual_first},
               {"residual_second", res.residual_second},
               {"scale", res.scale}};
        if (res.tangent && !tan_witness.empty()) {
            const WitnessCurve curve = witness_curve(*res.data);
            json samples = json::array();
            for (int k = 0; k < tan_samples; ++k) {
                const double t = tan_samples == 1 ? 0.0 : -1.0 + 2.0 * k / (tan_samples - 1);
                const SelfAdjointTuple st = curve(t);
                double worst = 0.0;
                for (int r = 0; r < st.count(); ++r)
                    for (int q = r + 1; q < st.count(); ++q)
                        worst = std::max(worst, commutator(st.component(r).mat(),
                                                           st.component(q).mat()).max_abs());
                samples.push_back(json{{"t", t},
                                       {"tuple", io::tuple_to_json(st)},
                                       {"max_commutator", worst}});
            }
            io::write_json_file(tan_witness, json{{"samples", std::move(samples)}});
            j["witness_file"] = tan_witness;
        }
        out << j.dump(2) << '\n';
    });

    // ---- dfirst ----
    auto* d1_cmd = app.add_subcommand("dfirst", "first derivative DF(S, Delta)");
    std::string d1_f, d1_base, d1_dir, d1_out, d1_domx, d1_domy;
    double d1_checkfd = 0.0;
    d1_cmd->add_option("--f", d1_f, "scalar expression")->required();
    d1_cmd->add_option("--base", d1_base, "base tuple JSON")->required();
    d1_cmd->add_option("--dir", d1_dir, "direction tuple JSON")->required();
    d1_cmd->add_option("--check-fd", d1_checkfd, "cross-check against central differences at h");
    d1_cmd->add_option("--dom-x", d1_domx, "domain interval lo,hi for x");
    d1_cmd->add_option("--dom-y", d1_domy, "domain interval lo,hi for y");
    d1_cmd->add_option("--out", d1_out, "output JSON path");
    d1_cmd->callback([&] {
        const CommutingTuple base = load_commuting(d1_base, tol);
        const SelfAdjointTuple dir = load_tuple(d1_dir);
        const ScalarFunction f =
            function_from_flags(d1_f, arity_for_tuple(base.tuple()), d1_domx, d1_domy);
        const TangencyResult res = tangency_check(base, dir, tol, seed);
        if (!res.tangent)
            throw NotTangent("direction fails the tangency conditions (residuals " +
                             std::to_string(res.residual_first) + ", " +
                             std::to_string(res.residual_second) + ")");
        const HermitianMatrix df = df_from_tangent(*res.data, f);
        json j{{"derivative", matrix_out(df)}};
        if (d1_checkfd > 0.0) {
            const CurveSpec wc = make_witness_curve(witness_curve(*res.data));
            const HermitianMatrix fd = fd_derivative_oracle(f, wc, 0.0, d1_checkfd, tol, seed);
            j["fd_max_diff"] = df.mat().max_abs_diff(fd.mat());
            j["fd_step"] = d1_checkfd;
        }
        emit(out, d1_out, j);
    });

    // ---- dcurve ----
    auto* dc_cmd = app.add_subcommand("dcurve", "derivative of F along a registered curve");
    std::string dc_f, dc_curve, dc_out, dc_domx, dc_domy;
    double dc_t = 0.0;
    dc_cmd->add_option("--f", dc_f, "scalar expression")->required();
    dc_cmd->add_option("--curve", dc_curve, "curve JSON (family + parameters)")->required();
    dc_cmd->add_option("--t", dc_t, "evaluation point")->required();
    dc_cmd->add_option("--dom-x", dc_domx, "domain interval lo,hi for x");
    dc_cmd->add_option("--dom-y", dc_domy, "domain interval lo,hi for y");
    dc_cmd->add_option("--out", dc_out, "output JSON path");
    dc_cmd->callback([&] {
        const CurveSpec curve = curve_from_json(io::load_json_file(dc_curve), tol, seed);
        const SelfAdjointTuple probe = curve(dc_t);
        const ScalarFunction f = function_from_flags(dc_f, arity_for_tuple(probe), dc_domx, dc_domy);
        emit(out, dc_out, matrix_out(derivative_along_curve(f, curve, dc_t, tol, seed)));
    });

    // ---- dd ----
    auto* dd_cmd = app.add_subcommand("dd", "two-variable divided difference");
    std::string dd_f, dd_x, dd_y, dd_domx, dd_domy;
    int dd_k = 0, dd_j = 0;
    dd_cmd->add_option("--f", dd_f, "scalar expression in x, y")->required();
    dd_cmd->add_option("--k", dd_k, "x-order")->required();
    dd_cmd->add_option("--j", dd_j, "total order")->required();
    dd_cmd->add_option("--x", dd_x, "comma-separated x-nodes (k+1 of them)")->required();
    dd_cmd->add_option("--y", dd_y, "comma-separated y-nodes (j-k+1 of them)")->required();
    dd_cmd->add_option("--dom-x", dd_domx, "domain interval lo,hi for x");
    dd_cmd->add_option("--dom-y", dd_domy, "domain interval lo,hi for y");
    dd_cmd->callback([&] {
        const ScalarFunction f = function_from_flags(dd_f, 2, dd_domx, dd_domy);
        DividedDifferenceRequest req;
        req.k = dd_k;
        req.j = dd_j;
        req.xnodes = parse_number_list(dd_x);
        req.ynodes = parse_number_list(dd_y);
        out << json{{"dd", divided_difference(f, req)}}.dump(2) << '\n';
    });

    // ---- dhigh ----
    auto* dh_cmd = app.add_subcommand("dhigh", "higher derivative of F along a curve");
    std::string dh_f, dh_curve, dh_out, dh_check, dh_domx, dh_domy;
    double dh_t = 0.0;
    int dh_order = 2, dh_nodes = 128;
    dh_cmd->add_option("--f", dh_f, "scalar expression in x, y")->required();
    dh_cmd->add_option("--curve", dh_curve, "curve JSON (family + parameters)")->required();
    dh_cmd->add_option("--t", dh_t, "evaluation point")->required();
    dh_cmd->add_option("--order", dh_order, "derivative order l (1..4)")->required();
    dh_cmd->add_option("--check", dh_check, "contour | fd | both")
        ->check(CLI::IsMember({"", "contour", "fd", "both"}));
    dh_cmd->add_option("--nodes", dh_nodes, "contour quadrature nodes");
    dh_cmd->add_option("--dom-x", dh_domx, "domain interval lo,hi for x");
    dh_cmd->add_option("--dom-y", dh_domy, "domain interval lo,hi for y");
    dh_cmd->add_option("--out", dh_out, "output JSON path");
    dh_cmd->callback([&] {
        const CurveSpec curve = curve_from_json(io::load_json_file(dh_curve), tol, seed);
        const ScalarFunction f = function_from_flags(dh_f, 2, dh_domx, dh_domy);
        const HermitianMatrix d = higher_derivative(f, curve, dh_t, dh_order, tol, seed);
        json j{{"derivative", matrix_out(d)}, {"order", dh_order}};
        if (dh_check == "contour" || dh_check == "both") {
            const SelfAdjointTuple probe = curve(dh_t);
            std::vector<std::pair<double, double>> ranges;
            for (int r = 0; r < probe.count(); ++r) {
                const auto ev = eig_hermitian(probe.component(r).mat()).values;
                ranges.emplace_back(ev.front(), ev.back());
            }
            const auto spec = ContourSpec::enclosing(ranges, dh_nodes);
            const HermitianMatrix c = contour_higher_derivative(f, curve, dh_t, dh_order, spec, tol);
            j["contour_max_diff"] = d.mat().max_abs_diff(c.mat());
        }
        if (dh_check == "fd" || dh_check == "both") {
            const double h = 1e-3;
            auto fs = [&](double t) {
                return eval_matfun(f, CommutingTuple::require(curve(t), tol), tol, seed).mat();
            };
            Matrix fd;
            if (dh_order == 1)
                fd = (0.5 / h) * (fs(dh_t + h) - fs(dh_t - h));
            else if (dh_order == 2)
                fd = (1.0 / (h * h)) * (fs(dh_t + h) - 2.0 * fs(dh_t) + fs(dh_t - h));
            else if (dh_order == 3)
                fd = (1.0 / (h * h * h)) * (0.5 * fs(dh_t + 2 * h) - fs(dh_t + h) +
                                            fs(dh_t - h) - 0.5 * fs(dh_t - 2 * h));
            else
                throw InvalidArgument("--check fd supports order <= 3");
            j["fd_max_diff"] = d.mat().max_abs_diff(fd);
            j["fd_step"] = h;
        }
        emit(out, dh_out, j);
    });

    // ---- track ----
    auto* tr_cmd = app.add_subcommand("track", "track joint eigenvalues along a curve");
    std::string tr_curve, tr_grid = "-1:1:401", tr_out;
    tr_cmd->add_option("--curve", tr_curve, "curve JSON (family + parameters)")->required();
    tr_cmd->add_option("--grid", tr_grid, "lo:hi:count sample grid")->capture_default_str();
    tr_cmd->add_option("--out", tr_out, "output CSV path (stdout when omitted)");
    tr_cmd->callback([&] {
        const CurveSpec curve = curve_from_json(io::load_json_file(tr_curve), tol, seed);
        const auto pts = grid_points(parse_grid(tr_grid));
        const EigenPathBundle bundle = track_eigenvalues(curve, pts, tol, seed);
        const int d = static_cast<int>(bundle.paths[0][0].size());
        std::vector<std::string> header{"t", "path_index"};
        for (int r = 1; r <= d; ++r) header.push_back("x" + std::to_string(r));
        io::CsvWriter csv(header);
        for (std::size_t i = 0; i < bundle.paths.size(); ++i) {
            for (std::size_t k = 0; k < bundle.grid.size(); ++k) {
                std::vector<double> row{bundle.grid[k], static_cast<double>(i)};
                for (double v : bundle.paths[i][k]) row.push_back(v);
                csv.row(row);
            }
        }
        emit_text(out, tr_out, csv.str());
    });

    // ---- demo ----
    auto* demo_cmd = app.add_subcommand("demo", "built-in demonstration fixtures");
    demo_cmd->require_subcommand(1);
    auto* rel_cmd = demo_cmd->add_subcommand("rellich", "oscillating-eigenvector fixture CSV");
    std::string rel_out, rel_grid = "-1:1:401";
    rel_cmd->add_option("--out", rel_out, "output CSV path (stdout when omitted)");
    rel_cmd->add_option("--grid", rel_grid, "lo:hi:count sample grid")->capture_default_str();
    rel_cmd->callback([&] {
        const auto pts = grid_points(parse_grid(rel_grid));
        io::CsvWriter csv({"t", "lambda1", "lambda2", "angle"});
        for (double t : pts) {
            const auto es = eig_hermitian(rellich_fixture(t).mat());
            double angle = 0.0;
            if (t != 0.0) {
                const double vx = es.vectors(0, 1).real(), vy = es.vectors(1, 1).real();
                angle = std::fmod(std::atan2(vy, vx) + 2.0 * std::numbers::pi, std::numbers::pi);
            }
            csv.row({t, es.values[0], es.values[1], angle});
        }
        emit_text(out, rel_out, csv.str());
    });

    // ---- monotone ----
    auto* mono_cmd = app.add_subcommand("monotone", "local matrix-monotonicity census");
    std::string mono_f, mono_box = "-2,2", mono_out, mono_domx, mono_domy;
    std::size_t mono_n = 4;
    int mono_d = 1, mono_samples = 500;
    mono_cmd->add_option("--f", mono_f, "scalar expression")->required();
    mono_cmd->add_option("--n", mono_n, "matrix dimension")->capture_default_str();
    mono_cmd->add_option("--d", mono_d, "tuple size (1 or 2)")->capture_default_str();
    mono_cmd->add_option("--samples", mono_samples, "census size")->capture_default_str();
    mono_cmd->add_option("--box", mono_box, "spectrum box lo,hi (per coordinate)")
        ->capture_default_str();
    mono_cmd->add_option("--dom-x", mono_domx, "domain interval lo,hi for x");
    mono_cmd->add_option("--dom-y", mono_domy, "domain interval lo,hi for y");
    mono_cmd->add_option("--out", mono_out, "output JSON path");
    mono_cmd->callback([&] {
        const ScalarFunction f = function_from_flags(mono_f, mono_d, mono_domx, mono_domy);
        const Interval side = parse_interval(mono_box);
        Rectangle box{std::vector<Interval>(static_cast<std::size_t>(mono_d), side)};
        const Certificate cert = check_local_monotone(f, box, mono_n, mono_samples, seed, tol);
        emit(out, mono_out, io::certificate_to_json(cert));
    });

    // ---- convex ----
    auto* conv_cmd = app.add_subcommand("convex", "matrix-convexity check on commuting segments");
    std::string conv_f, conv_pairs, conv_out, conv_domx, conv_domy;
    int conv_grid = 11;
    conv_cmd->add_option("--f", conv_f, "scalar expression in x, y")->required();
    conv_cmd->add_option("--pairs", conv_pairs, "JSON array of {A, B} tuple pairs")->required();
    conv_cmd->add_option("--grid", conv_grid, "initial t-grid size")->capture_default_str();
    conv_cmd->add_option("--dom-x", conv_domx, "domain interval lo,hi for x");
    conv_cmd->add_option("--dom-y", conv_domy, "domain interval lo,hi for y");
    conv_cmd->add_option("--out", conv_out, "output JSON path");
    conv_cmd->callback([&] {
        const ScalarFunction f = function_from_flags(conv_f, 2, conv_domx, conv_domy);
        const json pairs = io::load_json_file(conv_pairs);
        if (!pairs.is_array() || pairs.empty())
            throw MalformedInput("--pairs must be a nonempty JSON array of {A, B} objects");
        json certs = json::array();
        for (const auto& pair : pairs) {
            if (!pair.contains("A") || !pair.contains("B"))
                throw MalformedInput("each pair needs 'A' and 'B' tuples");
            const CommutingTuple a = CommutingTuple::require(io::tuple_from_json(pair.at("A")), tol);
            const CommutingTuple b = CommutingTuple::require(io::tuple_from_json(pair.at("B")), tol);
            certs.push_back(io::certificate_to_json(
                check_convex_segment(f, a, b, conv_grid, tol, seed)));
        }
        emit(out, conv_out, json{{"certificates", std::move(certs)}});
    });

    // run
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("commute-calc");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        return 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
        return 64;
    } catch (const MalformedInput& e) {
        err << json{{"error", e.code()}, {"message", e.what()}}.dump() << '\n';
        return 65;
    } catch (const Error& e) {
        err << json{{"error", e.code()}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
        return 70;
    }
}

}  // namespace commute::cli
