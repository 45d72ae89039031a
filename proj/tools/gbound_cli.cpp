// Command-line driver: verify, maximize, grunsky, edges.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "gbound/grunsky.hpp"
#include "gbound/report.hpp"

using namespace gbound;

namespace {

struct Globals {
    std::string format = "table";
    std::string out;
    std::size_t max_boxes = BnBConfig{}.max_boxes;
    std::uint64_t seed = SuiteOptions{}.seed;
    bool no_timing = false;
};

SuiteOptions options(const Globals& g, double tol)
{
    SuiteOptions o;
    o.cfg.max_boxes = g.max_boxes;
    o.cfg.tol_value = tol;
    o.seed = g.seed;
    o.timing = !g.no_timing;
    return o;
}

/// Writes text to --out, or to stdout when it is empty.
void write(const Globals& g, const std::string& text)
{
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f || !(f << text)) {
        throw std::runtime_error("cannot write " + g.out);
    }
}

int emit_rows(const Globals& g, const std::vector<ClaimRow>& rows)
{
    std::ostringstream s;
    emit(rows, parse_format(g.format), s);
    write(g, s.str());
    return all_pass(rows) ? 0 : 1;
}

std::vector<std::string> split_ids(const std::string& text)
{
    std::vector<std::string> ids;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            ids.push_back(item);
        }
    }
    return ids;
}

int run_grunsky(const Globals& g, const std::string& preset, const std::string& coeffs, int order)
{
    const bool from_file = !coeffs.empty();
    PowerSeries f;
    std::string name;
    if (from_file) {
        std::ifstream in(coeffs);
        if (!in) {
            throw std::runtime_error("cannot read " + coeffs);
        }
        // a finite list is taken as a polynomial
        f = read_coefficients(in).padded(2 * order);
        name = coeffs;
    } else {
        const Preset p = parse_preset(preset);
        f = preset_series(p, 2 * order);
        name = std::string(to_string(p));
    }
    const GrunskyTable t = grunsky_table(f, order);
    const RelationResiduals r = check_relations(f, order);
    const GammaComparison gm = gamma_from_series(f);

    std::mt19937_64 rng(g.seed);
    double worst = kInf;
    for (int i = 0; i < 200; ++i) {
        worst = std::min(worst, check_inequalities(t, TestVector::random(rng(), 1 + i % order)).min());
    }
    const bool eq_ok = r.max() <= 1e-10;
    const bool gamma_ok = gm.max_difference() <= 1e-12;
    // inequality failures only mean something for functions known to be univalent
    const bool ineq_ok = worst >= -1e-10 || from_file;

    std::ostringstream s;
    const Format fmt_kind = parse_format(g.format);
    if (fmt_kind == Format::Json) {
        nlohmann::json j;
        j["function"] = name;
        j["order"] = order;
        nlohmann::json omega = nlohmann::json::array();
        for (int p = 1; p <= t.max_index(); p += 2) {
            for (int q = p; q <= t.max_index(); q += 2) {
                omega.push_back({{"p", p}, {"q", q}, {"re", t.omega(p, q).real()}, {"im", t.omega(p, q).imag()}});
            }
        }
        j["omega"] = omega;
        j["relation_residuals"] = r.relations;
        j["a4_form_residual"] = r.a4_form;
        j["a5_form_residual"] = r.a5_form;
        nlohmann::json gammas = nlohmann::json::array();
        for (std::size_t n = 0; n < 4; ++n) {
            gammas.push_back({{"n", n + 1},
                              {"series", {gm.series[n].real(), gm.series[n].imag()}},
                              {"closed", {gm.closed[n].real(), gm.closed[n].imag()}}});
        }
        j["gamma"] = gammas;
        j["min_inequality_slack"] = worst;
        s << j.dump(2) << '\n';
    } else if (fmt_kind == Format::Csv) {
        s << "quantity,re,im\n";
        for (int p = 1; p <= t.max_index(); p += 2) {
            for (int q = p; q <= t.max_index(); q += 2) {
                s << fmt::format("w{}_{},{:.17g},{:.17g}\n", p, q, t.omega(p, q).real(), t.omega(p, q).imag());
            }
        }
        for (std::size_t n = 0; n < 4; ++n) {
            s << fmt::format("gamma{},{:.17g},{:.17g}\n", n + 1, gm.series[n].real(), gm.series[n].imag());
        }
    } else {
        s << fmt::format("Grunsky coefficients of the odd transform of {} (order {})\n", name, order);
        for (int p = 1; p <= t.max_index(); p += 2) {
            for (int q = p; q <= t.max_index(); q += 2) {
                const Complex w = t.omega(p, q);
                if (std::abs(w) > 0.0) {
                    s << fmt::format("  w[{},{}] = {:+.15f} {:+.15f}i\n", p, q, w.real(), w.imag());
                }
            }
        }
        s << fmt::format("coefficient relations: max residual {:.3e} {}\n", r.max(), eq_ok ? "PASS" : "FAIL");
        s << fmt::format("log coefficients: two paths differ by {:.3e} {}\n", gm.max_difference(),
                         gamma_ok ? "PASS" : "FAIL");
        for (std::size_t n = 0; n < 4; ++n) {
            s << fmt::format("  gamma{} = {:+.15f} {:+.15f}i\n", n + 1, gm.series[n].real(), gm.series[n].imag());
        }
        s << fmt::format("inequalities over 200 random vectors: min slack {:.3e} {}\n", worst,
                         worst >= -1e-10 ? "PASS" : (from_file ? "VIOLATED (input may not be univalent)" : "FAIL"));
    }
    write(g, s.str());
    return eq_ok && gamma_ok && ineq_ok ? 0 : 1;
}

int run_edges(const Globals& g, const std::string& objective, double tol)
{
    const auto id = parse_objective(objective);
    if (!id) {
        throw std::invalid_argument("unknown objective: " + objective);
    }
    BnBConfig cfg = options(g, tol).cfg;
    cfg.validate();
    const std::array<EdgeMaximum, 5> em = edge_maxima(*id, cfg);

    std::ostringstream s;
    const Format fk = parse_format(g.format);
    bool ok = true;
    nlohmann::json arr = nlohmann::json::array();
    if (fk == Format::Csv) {
        s << "edge,lo,hi,argmax_lo,argmax_hi,kind\n";
    } else if (fk == Format::Table) {
        s << fmt::format("{:<11} {:<37} {:<14} {}\n", "edge", "max", "argmax", "kind");
    }
    for (const EdgeMaximum& e : em) {
        const Extremum& x = e.result;
        ok = ok && !x.exhausted;
        if (fk == Format::Json) {
            arr.push_back({{"edge", to_string(e.edge)},
                           {"lo", x.value.lo()},
                           {"hi", x.value.hi()},
                           {"argmax", {x.argmax_x.lo(), x.argmax_x.hi()}},
                           {"kind", to_string(x.kind)}});
        } else if (fk == Format::Csv) {
            s << fmt::format("{},{:.17g},{:.17g},{:.17g},{:.17g},{}\n", to_string(e.edge), x.value.lo(), x.value.hi(),
                             x.argmax_x.lo(), x.argmax_x.hi(), to_string(x.kind));
        } else {
            s << fmt::format("{:<11} [{:.9f}, {:.9f}] {:<14.9f} {}\n", to_string(e.edge), x.value.lo(), x.value.hi(),
                             x.argmax_x.mid(), to_string(x.kind));
        }
    }
    if (fk == Format::Json) {
        s << arr.dump(2) << '\n';
    }
    write(g, s.str());
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rigorous interval maximization of the coefficient bound functions"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--out", g.out, "Write the report to this file instead of stdout");
    app.add_option("--max-boxes", g.max_boxes, "Box budget per branch-and-bound run")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for the randomized oracle checks");
    app.add_flag("--no-timing", g.no_timing, "Report runtime_ms as 0 so output is reproducible");

    double tol = BnBConfig{}.tol_value;

    auto* verify = app.add_subcommand("verify", "Run the claim suite");
    std::string claims;
    verify->add_option("--claims", claims, "Comma-separated claim ids (default: all)");
    verify->add_option("--tol", tol, "Value tolerance")->check(CLI::PositiveNumber);

    auto* maximize = app.add_subcommand("maximize", "Maximize one objective over the region");
    std::string objective;
    maximize->add_option("--objective", objective, "f1 .. f9")->required();
    maximize->add_option("--tol", tol, "Value tolerance")->check(CLI::PositiveNumber);

    auto* grunsky = app.add_subcommand("grunsky", "Grunsky coefficients and identity checks for a series");
    std::string preset;
    std::string coeffs;
    int order = kDefaultGrunskyOrder;
    auto* preset_opt = grunsky->add_option("--preset", preset, "identity, z/(1-z), halflog or koebe");
    auto* coeffs_opt = grunsky->add_option("--coeffs", coeffs, "File of coefficients a1.. as 're im' lines");
    preset_opt->excludes(coeffs_opt);
    grunsky->add_option("--order", order, "Table order M (needs a1..a_2M)")->check(CLI::Range(4, 32));

    auto* edges = app.add_subcommand("edges", "Maximum of an objective along each edge");
    std::string edge_objective;
    edges->add_option("--objective", edge_objective, "f2 .. f9")->required();
    edges->add_option("--tol", tol, "Value tolerance")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            const std::vector<std::string> ids = claims.empty() ? all_claim_ids() : split_ids(claims);
            return emit_rows(g, run_suite(ids, options(g, tol)));
        }
        if (maximize->parsed()) {
            const auto id = parse_objective(objective);
            if (!id) {
                throw std::invalid_argument("unknown objective: " + objective);
            }
            return emit_rows(g, {objective_row(*id, options(g, tol))});
        }
        if (grunsky->parsed()) {
            if (preset.empty() && coeffs.empty()) {
                throw std::invalid_argument("grunsky needs --preset or --coeffs");
            }
            return run_grunsky(g, preset, coeffs, order);
        }
        if (edges->parsed()) {
            return run_edges(g, edge_objective, tol);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
