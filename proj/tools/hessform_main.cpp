#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "hessform/cones.hpp"
#include "hessform/covariants.hpp"
#include "hessform/curvature.hpp"
#include "hessform/parser.hpp"
#include "hessform/tangent.hpp"
#include "hessform/verify.hpp"

using json = nlohmann::json;
using namespace hessform;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ResultRow {
    std::string name;
    bool pass = true;
    std::string exact;
    double approx = 0.0;
};

struct CommandOutput {
    std::string command;
    json inputs = json::object();
    std::vector<ResultRow> rows;
    bool failed() const {
        for (const auto& r : rows)
            if (!r.pass) return true;
        return false;
    }
};

uint64_t default_seed() {
    if (const char* env = std::getenv("HESSFORM_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("HESSFORM_SEED", "not an unsigned integer");
        }
    }
    return 0;
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read form file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Form load_form(std::string text, int arity_flag) {
    if (!text.empty() && text[0] == '@') text = slurp_file(text.substr(1));
    const int arity = arity_flag > 0 ? arity_flag : infer_arity(text);
    return parse_form(text, arity);
}

std::vector<Rational> parse_point(const std::string& text, int arity) {
    std::vector<Rational> pt;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) pt.push_back(Rational::from_string(item));
    if (static_cast<int>(pt.size()) != arity)
        throw std::runtime_error("point has " + std::to_string(pt.size()) +
                                 " coordinates, form has arity " + std::to_string(arity));
    return pt;
}

std::vector<double> parse_float_point(const std::string& text, int arity) {
    std::vector<double> pt;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) pt.push_back(std::stod(item));
    if (static_cast<int>(pt.size()) != arity)
        throw std::runtime_error("point has " + std::to_string(pt.size()) +
                                 " coordinates, form has arity " + std::to_string(arity));
    return pt;
}

PlaneSpec parse_plane(const std::string& text, int arity) {
    const auto sep = text.find(';');
    if (sep == std::string::npos)
        throw std::runtime_error("plane must be two vectors separated by ';'");
    return {parse_point(text.substr(0, sep), arity), parse_point(text.substr(sep + 1), arity)};
}

std::string point_str(std::span<const Rational> p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += p[i].str();
    }
    return s;
}

void emit(const CommandOutput& out, const std::string& json_path, double elapsed_ms) {
    for (const auto& r : out.rows) {
        std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name;
        if (!r.exact.empty()) std::cout << "  " << r.exact;
        if (r.approx != 0.0 || r.exact.empty()) std::cout << "  (" << r.approx << ")";
        std::cout << "\n";
    }
    if (!json_path.empty()) {
        json doc;
        doc["command"] = out.command;
        doc["inputs"] = out.inputs;
        doc["results"] = json::array();
        for (const auto& r : out.rows)
            doc["results"].push_back({{"name", r.name},
                                      {"status", r.pass ? "pass" : "fail"},
                                      {"exact", r.exact},
                                      {"float", r.approx}});
        doc["elapsed_ms"] = elapsed_ms;
        std::ofstream f(json_path);
        if (!f) throw std::runtime_error("cannot write JSON report: " + json_path);
        f << doc.dump(2) << "\n";
    }
}

// ---------------------------------------------------------------------------

CommandOutput run_covariant(const std::string& which, const Form& f) {
    CommandOutput out;
    out.command = "covariant " + which;
    out.inputs = {{"form", f.str()}, {"arity", f.arity()}};
    if (which == "hessian") {
        const Form h = hessian_det(f);
        std::cout << h.str() << "\n";
        out.rows.push_back({"hessian-det", true, h.str(), 0.0});
        const int expected = f.is_zero() ? 0 : f.arity() * (f.degree() - 2);
        out.rows.push_back({"degree-is-n(d-2)-or-zero",
                            h.is_zero() || h.degree() == expected,
                            std::to_string(h.is_zero() ? 0 : h.degree()), 0.0});
    } else if (which == "aronhold") {
        const Rational s = aronhold_invariant(f);
        std::cout << s.str() << "\n";
        out.rows.push_back({"aronhold-invariant", true, s.str(), s.to_double()});
    } else {  // clebsch
        const Form s = clebsch_covariant(f);
        std::cout << s.str() << "\n";
        out.rows.push_back({"clebsch-covariant", true, s.str(), 0.0});
        const int expected = 4 * (f.degree() - 3);
        out.rows.push_back({"degree-is-4(d-3)-or-zero",
                            s.is_zero() || s.degree() == expected,
                            std::to_string(s.is_zero() ? 0 : s.degree()), 0.0});
    }
    return out;
}

CommandOutput run_curvature(const std::string& which, const Form& f, const std::string& point_arg,
                            const std::string& plane_arg, int samples, uint64_t seed, double step) {
    CommandOutput out;
    out.command = "curvature " + which;
    out.inputs = {{"form", f.str()}, {"arity", f.arity()}};

    if (which == "tensor") {
        const auto pt = parse_point(point_arg, f.arity());
        out.inputs["point"] = point_str(pt);
        const CurvatureTensor r = curvature_tensor_at(f, pt);
        const int n = r.dimension();
        int shown = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = i; k < n; ++k)
                    for (int l = k + 1; l < n; ++l) {
                        if (k < i || (k == i && l < j)) continue;
                        const Rational& v = r.at(i, j, k, l);
                        if (v.is_zero()) continue;
                        std::ostringstream name;
                        name << "R[" << i << j << k << l << "]";
                        out.rows.push_back({name.str(), true, v.str(), v.to_double()});
                        ++shown;
                    }
        if (shown == 0) out.rows.push_back({"tensor-zero", true, "0", 0.0});
    } else if (which == "sectional") {
        const auto pt = parse_point(point_arg, f.arity());
        const PlaneSpec plane = parse_plane(plane_arg, f.arity());
        out.inputs["point"] = point_str(pt);
        const Rational k = sectional_curvature(f, pt, plane);
        out.rows.push_back({"sectional-curvature", true, k.str(), k.to_double()});
    } else if (which == "on-m") {
        const auto pt = parse_point(point_arg, f.arity());
        out.inputs["point"] = point_str(pt);
        const PlaneSpec plane = plane_arg.empty() ? level_set_tangent_plane(f, pt)
                                                  : parse_plane(plane_arg, f.arity());
        const Rational k = sectional_curvature_on_m(f, pt, plane);
        out.rows.push_back({"surface-curvature", true, k.str(), k.to_double()});
    } else if (which == "flat-check") {
        const FlatnessVerdict v = flatness_certificate(f, samples, seed);
        out.inputs["samples"] = samples;
        out.inputs["seed"] = seed;
        std::string exact = v.flat ? "FLAT" : "NOT-FLAT";
        if (v.witness) exact += " witness=(" + point_str(*v.witness) + ")";
        out.rows.push_back({"flatness", v.flat || v.witness.has_value(), exact,
                            static_cast<double>(v.samples_checked)});
        std::cout << exact << "  [" << v.note << "]\n";
    } else if (which == "fd-oracle") {
        const auto pt = parse_float_point(point_arg, f.arity());
        const double dev = fd_curvature_oracle(f, pt, step);
        out.inputs["step"] = step;
        out.rows.push_back({"fd-deviation", dev < 1e-5, "", dev});
    } else {
        throw CLI::ValidationError("curvature", "unknown action " + which);
    }
    return out;
}

CommandOutput run_cone(const std::string& which, const Form& f, const std::string& point_arg,
                       const std::string& which_cone, int count, uint64_t seed,
                       const std::string& box_arg, const std::string& mode_arg,
                       const std::string& csv_path) {
    CommandOutput out;
    out.command = "cone " + which;
    out.inputs = {{"form", f.str()}, {"arity", f.arity()}};

    Rational lo(-3), hi(3);
    if (!box_arg.empty()) {
        const auto comma = box_arg.find(',');
        if (comma == std::string::npos) throw std::runtime_error("box must be 'lo,hi'");
        lo = Rational::from_string(box_arg.substr(0, comma));
        hi = Rational::from_string(box_arg.substr(comma + 1));
    }
    const ConeKind kind = (which_cone == "positive") ? ConeKind::Positive : ConeKind::Index;

    if (which == "classify") {
        const auto pt = parse_point(point_arg, f.arity());
        out.inputs["point"] = point_str(pt);
        const ConeClassification c = classify_point(f, pt);
        out.rows.push_back({"f-value", true, c.f_value.str(), c.f_value.to_double()});
        std::ostringstream sig;
        sig << "(" << c.hessian_signature.positives << "," << c.hessian_signature.negatives << ","
            << c.hessian_signature.zeros << ")";
        out.rows.push_back({"hessian-signature", true, sig.str(), 0.0});
        out.rows.push_back({"in-positive-cone", true, c.in_positive_cone ? "yes" : "no", 0.0});
        out.rows.push_back({"in-index-cone", true, c.in_index_cone ? "yes" : "no", 0.0});
    } else if (which == "sample") {
        out.inputs["seed"] = seed;
        out.inputs["count"] = count;
        out.inputs["cone"] = which_cone;
        auto [samples, stats] = sample_cone(f, kind, count, seed, lo, hi);
        for (const auto& p : samples) std::cout << "(" << point_str(p) << ")\n";
        out.rows.push_back({"accepted", stats.accepted == stats.requested,
                            std::to_string(stats.accepted) + "/" + std::to_string(stats.requested),
                            static_cast<double>(stats.tried)});
    } else if (which == "scan") {
        out.inputs["seed"] = seed;
        out.inputs["count"] = count;
        out.inputs["cone"] = which_cone;
        auto [samples, stats] = sample_cone(f, kind, count, seed, lo, hi);
        const ScanMode mode =
            (mode_arg == "tensor") ? ScanMode::FullTensor : ScanMode::SurfaceCurvature;
        const ScanTable table = curvature_scan(f, samples, mode);
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            if (!csv) throw std::runtime_error("cannot write CSV: " + csv_path);
            csv << "point,f,sig_pos,sig_neg,sig_zero,K_M_exact,K_M_float\n";
            for (const auto& row : table.rows) {
                csv << "\"" << point_str(row.point) << "\"," << row.f_value.str() << ","
                    << row.hessian_signature.positives << "," << row.hessian_signature.negatives
                    << "," << row.hessian_signature.zeros << ",";
                if (row.k_m) csv << row.k_m->str() << "," << row.k_m->to_double();
                else csv << ",";
                csv << "\n";
            }
        }
        out.rows.push_back({"evaluated", true, std::to_string(table.evaluated),
                            static_cast<double>(table.skipped)});
        if (mode == ScanMode::SurfaceCurvature) {
            std::ostringstream signs;
            signs << table.positive << "+/" << table.negative << "-/" << table.zero << "0";
            out.rows.push_back({"curvature-signs", true, signs.str(), 0.0});
            if (table.k_min)
                out.rows.push_back({"k-min", true, table.k_min->str(), table.k_min->to_double()});
            if (table.k_max)
                out.rows.push_back({"k-max", true, table.k_max->str(), table.k_max->to_double()});
        } else {
            int zero_count = 0;
            for (const auto& row : table.rows)
                if (!row.skipped && row.tensor_zero) ++zero_count;
            out.rows.push_back({"tensor-zero-count", true, std::to_string(zero_count), 0.0});
        }
    } else if (which == "compare") {
        out.inputs["seed"] = seed;
        out.inputs["count"] = count;
        auto [samples, stats] = sample_cone(f, ConeKind::Positive, count, seed, lo, hi);
        const ConeComparisonReport rep = cone_comparison(f, samples);
        out.rows.push_back({"checked", true, std::to_string(rep.checked), 0.0});
        out.rows.push_back({"discrepancies", true, std::to_string(rep.discrepancies), 0.0});
        for (const auto& w : rep.witnesses)
            out.rows.push_back({"witness", true, "(" + point_str(w) + ")", 0.0});
    } else {
        throw CLI::ValidationError("cone", "unknown action " + which);
    }
    return out;
}

CommandOutput run_tangent(const std::string& which, const std::string& alpha_arg,
                          const std::string& other_arg, int degree, int d_flag,
                          const std::string& b_arg) {
    CommandOutput out;
    out.command = "tangent " + which;

    if (which == "t-op") {
        const Form alpha = parse_form(alpha_arg, 2);
        const Form h = parse_form(other_arg, 2);
        out.inputs = {{"alpha", alpha.str()}, {"h", h.str()}};
        const Form t = t_operator(alpha, h);
        std::cout << t.str() << "\n";
        out.rows.push_back({"t-operator", true, t.str(), 0.0});
    } else if (which == "variation") {
        const Form alpha = parse_form(alpha_arg, 2);
        const Form g = parse_form(other_arg, 3);
        out.inputs = {{"alpha", alpha.str()}, {"g", g.str()}};
        const VariationResult v = clebsch_first_variation(alpha, g);
        std::cout << v.variation.str() << "\n";
        out.rows.push_back({"variation", true, v.variation.str(), 0.0});
        out.rows.push_back({"routes-agree", v.routes_agree, v.routes_agree ? "yes" : "no", 0.0});
        out.rows.push_back(
            {"base-covariant-zero", v.base_covariant_zero, v.base_covariant_zero ? "yes" : "no", 0.0});
    } else if (which == "kernel") {
        const Form alpha = parse_form(alpha_arg, 2);
        out.inputs = {{"alpha", alpha.str()}, {"degree", degree}};
        const KernelBasis k = kernel_of_t(alpha, degree);
        for (const Form& h : k.basis) std::cout << h.str() << "\n";
        out.rows.push_back({"kernel-dimension", true, std::to_string(k.basis.size()), 0.0});
    } else if (which == "spectrum") {
        out.inputs = {{"d", d_flag}};
        const SpectrumTable t = monomial_spectrum(d_flag);
        for (const auto& e : t.entries)
            std::cout << "(" << e.i << "," << e.j << ") -> " << e.eigenvalue.str() << "\n";
        std::string zs;
        for (const auto& [i, j] : t.zero_set)
            zs += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        out.rows.push_back({"zero-set", t.zero_set_expected, zs, 0.0});
        out.rows.push_back({"discriminant-negative-from-j3", t.discriminants_negative_from_3,
                            t.discriminants_negative_from_3 ? "yes" : "no", 0.0});
    } else if (which == "zariski") {
        const Form alpha = parse_form(alpha_arg, 2);
        out.inputs = {{"alpha", alpha.str()}};
        const ZariskiReport rep = zariski_tangent_compare(alpha);
        out.rows.push_back({"degenerate-alpha", true, rep.degenerate_alpha ? "yes" : "no", 0.0});
        out.rows.push_back({"span-dim", true, std::to_string(rep.span_dim), 0.0});
        out.rows.push_back({"kernel-dim", true, std::to_string(rep.kernel_dim), 0.0});
        out.rows.push_back({"dimensions-equal", rep.degenerate_alpha || rep.equal,
                            rep.equal ? "yes" : "no", 0.0});
    } else if (which == "closure") {
        Form alpha(2);
        if (!alpha_arg.empty() && alpha_arg != "0") alpha = parse_form(alpha_arg, 2);
        const Rational b = Rational::from_string(b_arg.empty() ? "0" : b_arg);
        const int d = d_flag > 0 ? d_flag : std::max(alpha.degree(), 2);
        out.inputs = {{"alpha", alpha.str()}, {"b", b.str()}, {"d", d}};
        const LimitFamilyReport rep = closure_limit_expand(alpha, b, d);
        for (int k = 0; k < static_cast<int>(rep.coefficients.size()); ++k)
            std::cout << "c^" << k << ": " << rep.coefficients[k].str() << "\n";
        out.rows.push_back({"no-negative-powers", rep.no_negative_powers,
                            rep.no_negative_powers ? "yes" : "no", 0.0});
        out.rows.push_back({"c0-matches", rep.c0_matches, rep.c0_matches ? "yes" : "no", 0.0});
    } else {
        throw CLI::ValidationError("tangent", "unknown action " + which);
    }
    return out;
}

int run_verify(const std::string& section, uint64_t seed, const std::string& json_path) {
    RunReport report;
    try {
        report = run_verify_suite(section, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    for (const auto& r : report.results) {
        std::cout << (r.pass ? "pass" : "FAIL") << "  [" << r.section << "] " << r.name;
        if (!r.exact.empty()) std::cout << "  = " << r.exact;
        std::cout << "  -- " << r.detail << "\n";
    }
    const int passed = static_cast<int>(
        std::count_if(report.results.begin(), report.results.end(),
                      [](const CheckResult& r) { return r.pass; }));
    std::cout << passed << "/" << report.results.size() << " checks passed ("
              << report.elapsed_ms << " ms, seed " << report.seed << ")\n";

    if (!json_path.empty()) {
        json doc;
        doc["command"] = "verify";
        doc["inputs"] = {{"section", section}, {"seed", seed}};
        doc["results"] = json::array();
        for (const auto& r : report.results)
            doc["results"].push_back({{"name", r.name},
                                      {"section", r.section},
                                      {"criterion", r.criterion},
                                      {"status", r.pass ? "pass" : "fail"},
                                      {"exact", r.exact},
                                      {"float", r.approx},
                                      {"detail", r.detail}});
        doc["elapsed_ms"] = report.elapsed_ms;
        std::ofstream f(json_path);
        if (!f) {
            std::cerr << "error: cannot write JSON report: " << json_path << "\n";
            return kExitUsage;
        }
        f << doc.dump(2) << "\n";
    }
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hessian-metric and covariant computations for homogeneous forms"};
    app.require_subcommand(1);

    std::string form_text, point_arg, plane_arg, box_arg, csv_path, json_path;
    std::string which_cone = "index", mode_arg = "km";
    std::string alpha_arg, other_arg, b_arg;
    int arity_flag = 0, count = 20, kernel_degree = 0, d_flag = 0, samples = 10;
    double step = 1e-4;
    uint64_t seed = 0;
    bool seed_given = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--json", json_path, "write the machine-readable report here");
    };

    // covariant
    auto* cov = app.add_subcommand("covariant", "Hessian determinant and classical covariants");
    std::string cov_action;
    cov->add_option("action", cov_action, "hessian|aronhold|clebsch")->required();
    cov->add_option("form", form_text, "expression or @file")->required();
    cov->add_option("--arity", arity_flag, "number of variables (default: inferred)");
    add_common(cov);

    // curvature
    auto* cur = app.add_subcommand("curvature", "metric curvature at points");
    std::string cur_action;
    cur->add_option("action", cur_action, "tensor|sectional|on-m|flat-check|fd-oracle")->required();
    cur->add_option("form", form_text)->required();
    cur->add_option("--point", point_arg, "comma-separated coordinates");
    cur->add_option("--plane", plane_arg, "two vectors 'u1,..;v1,..'");
    cur->add_option("--samples", samples, "sample count for flat-check");
    cur->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { seed_given = true; });
    cur->add_option("--step", step, "finite-difference step");
    cur->add_option("--arity", arity_flag);
    add_common(cur);

    // cone
    auto* cone = app.add_subcommand("cone", "cone classification, sampling and scans");
    std::string cone_action;
    cone->add_option("action", cone_action, "classify|sample|scan|compare")->required();
    cone->add_option("form", form_text)->required();
    cone->add_option("--point", point_arg);
    cone->add_option("--which", which_cone, "positive|index (default index)");
    cone->add_option("--count", count, "sample count");
    cone->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
    cone->add_option("--box", box_arg, "sampling box 'lo,hi' (default -3,3)");
    cone->add_option("--mode", mode_arg, "scan mode: km|tensor");
    cone->add_option("--csv", csv_path, "write scan table as CSV");
    cone->add_option("--arity", arity_flag);
    add_common(cone);

    // tangent
    auto* tan = app.add_subcommand("tangent", "deformation operator tools");
    std::string tan_action;
    tan->add_option("action", tan_action, "t-op|variation|kernel|spectrum|zariski|closure")
        ->required();
    tan->add_option("--alpha", alpha_arg, "binary form");
    tan->add_option("--h", other_arg, "binary form (t-op)");
    tan->add_option("--g", other_arg, "ternary direction (variation)");
    tan->add_option("--degree", kernel_degree, "kernel degree r");
    tan->add_option("--d", d_flag, "degree d");
    tan->add_option("--b", b_arg, "rational coefficient b");
    add_common(tan);

    // verify
    auto* ver = app.add_subcommand("verify", "run the bundled reproduction suite");
    std::string section = "all";
    ver->add_option("--section", section, "section tag (default all)");
    ver->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitUsage;
    }

    try {
        if (!seed_given) seed = default_seed();
        const auto start = std::chrono::steady_clock::now();
        CommandOutput out;
        if (cov->parsed()) {
            out = run_covariant(cov_action, load_form(form_text, arity_flag));
        } else if (cur->parsed()) {
            out = run_curvature(cur_action, load_form(form_text, arity_flag), point_arg, plane_arg,
                                samples, seed, step);
        } else if (cone->parsed()) {
            out = run_cone(cone_action, load_form(form_text, arity_flag), point_arg, which_cone,
                           count, seed, box_arg, mode_arg, csv_path);
        } else if (tan->parsed()) {
            out = run_tangent(tan_action, alpha_arg, other_arg, kernel_degree, d_flag, b_arg);
        } else if (ver->parsed()) {
            return run_verify(section, seed, json_path);
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        emit(out, json_path, ms);
        return out.failed() ? kExitCheckFailed : kExitOk;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
