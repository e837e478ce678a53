// Copyright 2026 The GaussFisher Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "gaussfisher/cli.hpp"
#include "gaussfisher/closed_form.hpp"
#include "gaussfisher/errors.hpp"
#include "gaussfisher/fock_oracle.hpp"
#include "gaussfisher/info_geometry.hpp"
#include "gaussfisher/verify.hpp"

namespace gaussfisher::cli {

using json = nlohmann::ordered_json;

namespace {

// Non-finite values become strings so the document stays valid JSON.
json num(double x) {
    if (std::isfinite(x)) return x;
    return format_number(x);
}

json state_json(const StateSpec &s) {
    json j;
    j["family"] = to_string(s.point.tag());
    const Eigen::VectorXd x = s.point.chart();
    j["n1"] = x[0];
    j["n2"] = x[1];
    if (s.point.tag() == FamilyTag::MTS) {
        j["theta"] = x[2];
        j["phi"] = x[3];
    } else if (s.point.tag() == FamilyTag::STS) {
        j["r"] = 0.5 * x[2];
        j["phi"] = x[3];
    }
    j["mean"] = {s.mean[0], s.mean[1], s.mean[2], s.mean[3]};
    return j;
}

TwoModeGaussian to_state(const StateSpec &s) {
    return TwoModeGaussian::make(s.mean, family_cov(s.point), Tolerances::from_env());
}

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(b), std::numeric_limits<double>::min());
}

std::vector<std::string> coordinate_names(FamilyTag tag) {
    if (tag == FamilyTag::TS) return {"n1", "n2"};
    const auto a = chart_names(tag);
    return {a.begin(), a.end()};
}

std::vector<double> qfi_components(const FamilyPoint &p) {
    if (p.tag() == FamilyTag::TS) {
        return {1.0 / (p.n1() * (p.n1() + 1.0)), 1.0 / (p.n2() * (p.n2() + 1.0))};
    }
    const QfiDiagonal q = qfi_closed(p);
    return {q.h.begin(), q.h.end()};
}

void write_output(const std::string &path, const std::string &content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw ValidationError("failed writing '" + path + "'");
}

} // namespace

json cmd_fidelity(const StateSpec &a, const StateSpec &b) {
    const Tolerances tol = Tolerances::from_env();
    const TwoModeGaussian sa = to_state(a), sb = to_state(b);
    const FidelityBreakdown f = fidelity_two_mode(sa, sb, tol);
    const BuresDistances d = distances(f.fidelity, tol);

    json j;
    j["state_a"] = state_json(a);
    j["state_b"] = state_json(b);
    j["general"] = {{"delta", f.delta},     {"gamma", f.gamma},     {"lambda", f.lambda},
                    {"k_plus", f.k_plus},   {"k_minus", f.k_minus}, {"overlap", f.overlap},
                    {"fidelity", f.fidelity}};
    j["bures_distance"] = d.bures;
    j["bures_angle"] = d.angle;
    if (a.point.tag() == b.point.tag()) {
        // family states are undisplaced; means enter through the Gaussian factor
        const double disp =
            displacement_factor(sa.mean, sb.mean, sa.cov.matrix() + sb.cov.matrix());
        const PairInvariants k = pair_invariants(a.point, b.point);
        const double fc = fidelity_special(a.point, b.point) * disp;
        j["closed_form"] = {{"fidelity", fc},
                            {"k_plus", k.k_plus},
                            {"k_minus", k.k_minus},
                            {"residual", std::abs(fc - f.fidelity)}};
    } else {
        j["closed_form"] = nullptr;
    }
    return j;
}

json cmd_metric(const StateSpec &s, const MetricFlags &flags) {
    const FamilyPoint &p = s.point;
    const FamilyTag tag = p.tag();
    const std::vector<std::string> names = coordinate_names(tag);
    const std::vector<double> h = qfi_components(p);

    json j;
    j["state"] = state_json(s);
    j["chart"] = names;
    json qfi = json::object(), bures = json::object(), crb = json::object();
    json notes = json::array();
    if (flags.measurements < 1) throw ValidationError("--measurements must be >= 1");
    for (std::size_t i = 0; i < names.size(); ++i) {
        qfi[names[i]] = num(h[i]);
        bures[names[i]] = num(0.25 * h[i]);
        if (h[i] > 0.0) {
            crb[names[i]] = 1.0 / (static_cast<double>(flags.measurements) * h[i]);
        } else {
            crb[names[i]] = nullptr;
            notes.push_back("H_" + names[i] + " vanishes: " + names[i] + " is not identifiable here");
        }
    }
    j["qfi"] = qfi;
    j["bures"] = bures;
    j["measurements"] = flags.measurements;
    j["cramer_rao"] = crb;
    try {
        const double jp = jeffreys_prior(p);
        j["jeffreys_prior"] = jp;
        j["volume_density"] = volume_density(p);
        if (tag == FamilyTag::STS) {
            const auto &q = std::get<StsParams>(p.params());
            j["jeffreys_threshold_form"] = jeffreys_sts_threshold_form(q.n1, q.n2, q.r);
        }
    } catch (const BoundaryError &e) {
        j["jeffreys_prior"] = nullptr;
        notes.push_back(e.what());
    }
    if (p.degenerate()) notes.push_back("MTS point with n1 = n2: angular directions are degenerate");

    if (flags.numeric) {
        NumericMetricOptions opt;
        opt.step = flags.step;
        const MetricMatrix g = numeric_metric(p, opt);
        double diag_dev = 0.0, off = 0.0;
        json rows = json::array();
        for (Eigen::Index a = 0; a < g.g.rows(); ++a) {
            json row = json::array();
            for (Eigen::Index b = 0; b < g.g.cols(); ++b) {
                row.push_back(g.g(a, b));
                if (a == b) diag_dev = std::max(diag_dev, rel_diff(g.g(a, a), 0.25 * h[a]));
                else off = std::max(off, std::abs(g.g(a, b)));
            }
            rows.push_back(row);
        }
        j["numeric"] = {{"step", flags.step},
                        {"bures_matrix", rows},
                        {"max_relative_diagonal_deviation", diag_dev},
                        {"max_offdiagonal", off}};
    }
    j["notes"] = notes;
    return j;
}

json cmd_curvature(FamilyTag tag, double n1, double n2, const CurvatureFlags &flags) {
    const std::string method = flags.method;
    if (method != "closed" && method != "pipeline" && method != "warped" && method != "all") {
        throw ValidationError("unknown method '" + method + "' (closed, pipeline, warped, all)");
    }
    validate(TsParams{n1, n2});

    json j;
    j["family"] = to_string(tag);
    j["n1"] = n1;
    j["n2"] = n2;
    j["method"] = method;
    json warnings = json::array();
    json values = json::object();
    json checks = json::object();

    const double closed = scalar_closed(tag, n1, n2);
    values["closed"] = num(closed);

    std::optional<double> pipeline, warped;
    if (method == "pipeline" || method == "all") {
        try {
            CurvatureReport rep;
            if (tag == FamilyTag::TS) {
                rep = scalar_curvature_pipeline(ts_field(), Eigen::Vector2d(n1, n2));
            } else {
                const double x3 = flags.x3 >= 0.0 ? flags.x3
                                  : tag == FamilyTag::MTS ? std::numbers::pi / 2 : 1.0;
                const Point x = Eigen::Vector4d(n1, n2, x3, flags.phi);
                rep = scalar_curvature_pipeline(family_field(tag), x);
                j["device"] = {{tag == FamilyTag::MTS ? "theta" : "2r", x3}, {"phi", flags.phi}};
            }
            pipeline = rep.scalar_r;
            values["pipeline"] = rep.scalar_r;
            for (const auto &[k, v] : rep.residuals) checks[k] = v;
        } catch (const Error &e) {
            warnings.push_back(std::string("pipeline unavailable, closed form reported instead: ") +
                               e.what());
            values["pipeline"] = num(closed);
            j["fallback"] = true;
        }
    }
    if (method == "warped" || method == "all") {
        try {
            warped = scalar_warped(tag, n1, n2);
            values["warped"] = *warped;
        } catch (const Error &e) {
            warnings.push_back(std::string("warped route unavailable, closed form reported instead: ") +
                               e.what());
            values["warped"] = num(closed);
            j["fallback"] = true;
        }
    }

    if (method == "all") {
        json res = json::object();
        if (pipeline) res["pipeline_vs_closed"] = rel_diff(*pipeline, closed);
        if (warped) res["warped_vs_closed"] = rel_diff(*warped, closed);
        if (pipeline && warped) res["pipeline_vs_warped"] = rel_diff(*pipeline, *warped);
        j["values"] = values;
        j["residuals"] = res;
    } else {
        j["R"] = values[method];
    }
    if (!checks.empty()) j["pipeline_checks"] = checks;
    j["warnings"] = warnings;
    return j;
}

std::string cmd_surface(const std::string &figure, const GridSpec &grid) {
    std::ostringstream os;
    auto row = [&](std::initializer_list<double> xs) {
        bool first = true;
        for (double x : xs) {
            os << (first ? "" : ",") << format_number(x);
            first = false;
        }
        os << "\n";
    };
    auto axis = [&](const std::string &name) -> const Axis & {
        for (const Axis &a : grid.axes)
            if (a.name == name) return a;
        throw ValidationError("axis mismatch: figure " + figure + " needs axis '" + name + "'");
    };
    if (grid.axes.size() != default_grid(figure).axes.size()) {
        throw ValidationError("axis mismatch: wrong number of axes for figure " + figure);
    }

    if (figure == "1" || figure == "3") {
        const FamilyTag tag = figure == "1" ? FamilyTag::MTS : FamilyTag::STS;
        os << "n1,n2," << (figure == "1" ? "R_MT" : "R_ST") << "\n";
        for (double a : axis("n1").samples())
            for (double b : axis("n2").samples()) row({a, b, scalar_closed(tag, a, b)});
    } else if (figure == "2a" || figure == "4a") {
        const FamilyTag tag = figure == "2a" ? FamilyTag::MTS : FamilyTag::STS;
        os << "n," << (figure == "2a" ? "R_MT" : "R_ST") << "\n";
        for (double n : axis("n").samples()) {
            row({n, section_curve(tag, SectionKind::Symmetric, n)});
        }
    } else if (figure == "2b" || figure == "4b") {
        const FamilyTag tag = figure == "2b" ? FamilyTag::MTS : FamilyTag::STS;
        os << "n1,n2," << (figure == "2b" ? "R_MT" : "R_ST") << "\n";
        for (double s : axis("n1").samples()) {
            const Eigen::Vector2d x = section_locus(tag, SectionKind::Perpendicular, s);
            row({x[0], x[1], section_curve(tag, SectionKind::Perpendicular, s)});
        }
    } else if (figure == "5") {
        os << "n1,R_MT_edge,R_ST_edge\n";
        for (double n : axis("n1").samples()) {
            row({n, section_curve(FamilyTag::MTS, SectionKind::Edge, n),
                 section_curve(FamilyTag::STS, SectionKind::Edge, n)});
        }
    } else {
        default_grid(figure);  // throws for unknown figures
    }
    return os.str();
}

VerifyOutcome cmd_verify(const std::string &suite, std::uint64_t seed, bool include_oracle) {
    const SuiteReport rep = run_suite(parse_suite(suite), seed, include_oracle);
    VerifyOutcome out;
    out.passed = rep.passed();
    out.report["suite"] = rep.suite;
    out.report["seed"] = rep.seed;
    out.report["passed"] = out.passed;
    json checks = json::array();
    for (const CheckResult &c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"seconds", c.seconds},
                          {"detail", c.detail}});
    }
    out.report["checks"] = checks;
    return out;
}

json cmd_oracle(const StateSpec &a, const StateSpec &b, int truncation) {
    if (!(a.mean == QuadratureVector{}) || !(b.mean == QuadratureVector{})) {
        throw ValidationError("the Fock oracle builds undisplaced family states; means must be zero");
    }
    int d = truncation;
    if (d <= 0) {
        d = 25;
        for (const StateSpec *s : {&a, &b})
            if (s->point.tag() == FamilyTag::STS) d = 40;
    }
    json j;
    j["state_a"] = state_json(a);
    j["state_b"] = state_json(b);
    j["truncation"] = d;
    for (const StateSpec *s : {&a, &b}) {
        if (const auto *q = std::get_if<StsParams>(&s->point.params())) {
            j[s == &a ? "squeezer_defect_a" : "squeezer_defect_b"] = sq_unitary(q->r, q->phi, d).defect;
        }
    }
    const FockDensity ra = family_dm(a.point, d), rb = family_dm(b.point, d);
    const double fock = uhlmann_fidelity(ra, rb);
    const FidelityBreakdown g = fidelity_two_mode(to_state(a), to_state(b), Tolerances::from_env());
    j["trace_deficit_a"] = ra.trace_deficit;
    j["trace_deficit_b"] = rb.trace_deficit;
    j["fock_fidelity"] = fock;
    j["general_fidelity"] = g.fidelity;
    j["difference"] = std::abs(fock - g.fidelity);
    if (a.point.tag() == b.point.tag()) j["closed_form_fidelity"] = fidelity_special(a.point, b.point);
    j["fock_overlap"] = fock_overlap(ra, rb);
    j["overlap"] = g.overlap;
    return j;
}

int run(int argc, char **argv) {
    CLI::App app{"Fidelity, metric and curvature of two-mode Gaussian states"};
    app.require_subcommand(1);
    std::string out_path;

    std::string file_a, file_b;
    auto *fid = app.add_subcommand("fidelity", "fidelity between two states");
    fid->add_option("state_a", file_a, "state document")->required();
    fid->add_option("state_b", file_b, "state document")->required();
    fid->add_option("--out", out_path, "write the report here");

    MetricFlags mflags;
    auto *met = app.add_subcommand("metric", "QFI and Bures metric at a state");
    met->add_option("state", file_a, "state document")->required();
    met->add_flag("--numeric", mflags.numeric, "add the finite-difference metric");
    met->add_option("--step", mflags.step, "relative stencil step")->check(CLI::PositiveNumber);
    met->add_option("-N,--measurements", mflags.measurements, "repetitions for the Cramer-Rao bound");
    met->add_option("--out", out_path, "write the report here");

    std::string family;
    double n1 = 0.0, n2 = 0.0;
    CurvatureFlags cflags;
    auto *cur = app.add_subcommand("curvature", "scalar curvature at (n1, n2)");
    cur->add_option("family", family, "MTS, STS or TS")->required();
    cur->add_option("n1", n1)->required();
    cur->add_option("n2", n2)->required();
    cur->add_option("--method", cflags.method, "closed, pipeline, warped or all");
    cur->add_option("--device", cflags.x3, "theta (MTS) or 2r (STS) for the pipeline");
    cur->add_option("--phi", cflags.phi, "phase for the pipeline");
    cur->add_option("--out", out_path, "write the report here");

    std::string figure;
    std::vector<std::string> axis_args;
    auto *sur = app.add_subcommand("surface", "curvature grid for a figure");
    sur->add_option("figure", figure, "1, 2a, 2b, 3, 4a, 4b or 5")->required();
    sur->add_option("--axis", axis_args, "name=lo:hi:count[:log]");
    sur->add_option("--out", out_path, "write the CSV table here");

    std::string suite = "all";
    std::uint64_t seed = 20240607;
    bool oracle_flag = false;
    auto *ver = app.add_subcommand("verify", "run the property suites");
    ver->add_option("suite", suite, "core, appendix, geometry, oracle or all");
    ver->add_option("--seed", seed, "pseudo-random seed");
    ver->add_flag("--oracle", oracle_flag, "include the Fock-space suite in 'all'");
    ver->add_option("--out", out_path, "write the report here");

    int truncation = 0;
    auto *orc = app.add_subcommand("oracle", "truncated-Fock fidelity of two family states");
    orc->add_option("state_a", file_a, "state document")->required();
    orc->add_option("state_b", file_b, "state document")->required();
    orc->add_option("--truncation", truncation, "photons per mode (default 25, or 40 with STS)");
    orc->add_option("--out", out_path, "write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string content;
        int status = 0;
        if (fid->parsed()) {
            content = cmd_fidelity(StateSpec::load(file_a), StateSpec::load(file_b)).dump(2) + "\n";
        } else if (met->parsed()) {
            content = cmd_metric(StateSpec::load(file_a), mflags).dump(2) + "\n";
        } else if (cur->parsed()) {
            content = cmd_curvature(parse_family(family), n1, n2, cflags).dump(2) + "\n";
        } else if (sur->parsed()) {
            std::vector<Axis> axes;
            for (const std::string &arg : axis_args) {
                const auto eq = arg.find('=');
                if (eq == std::string::npos) {
                    throw ValidationError("--axis expects name=lo:hi:count[:log], got '" + arg + "'");
                }
                axes.push_back(Axis::parse(arg.substr(0, eq), arg.substr(eq + 1)));
            }
            content = cmd_surface(figure, merge_axes(figure, axes));
        } else if (ver->parsed()) {
            const VerifyOutcome v = cmd_verify(suite, seed, oracle_flag);
            content = v.report.dump(2) + "\n";
            status = v.passed ? 0 : 1;
        } else if (orc->parsed()) {
            content = cmd_oracle(StateSpec::load(file_a), StateSpec::load(file_b), truncation).dump(2) + "\n";
        }
        write_output(out_path, content);
        return status;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace gaussfisher::cli
