#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "etainv/config.hpp"
#include "etainv/errors.hpp"
#include "etainv/eta.hpp"
#include "etainv/heat.hpp"
#include "etainv/quadrature.hpp"
#include "etainv/selberg.hpp"
#include "etainv/specfn.hpp"
#include "etainv/spectrum.hpp"
#include "etainv/surface.hpp"

using nlohmann::json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumeric = 4;

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            const double v = std::stod(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("trailing characters");
            out.push_back(v);
        } catch (const std::exception&) {
            throw etainv::config_error(flag, "cannot parse numeric list entry '" + item + "'");
        }
    }
    if (out.empty()) throw etainv::config_error(flag, "empty numeric list");
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw etainv::config_error("--out", "cannot open output file " + out_path);
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
}

json config_json(const etainv::SurfaceConfig& cfg) {
    json spin{{"x", cfg.surface.spin.eps_x},
              {"y", cfg.surface.spin.eps_y},
              {"h", cfg.surface.spin.eps_h},
              {"k", cfg.surface.spin.eps_k}};
    json classes = json::array();
    for (const auto& c : cfg.classes) {
        classes.push_back({{"u", c.u}, {"chi_trace", c.chi_trace}, {"index", c.index}});
    }
    return json{{"genus", cfg.surface.genus},
                {"cusps", cfg.surface.kappa},
                {"kappa_trivial", cfg.surface.kappa_trivial()},
                {"spin", spin},
                {"hyperbolic_classes", classes}};
}

json tolerance_json(const etainv::quad::QuadratureSpec& q,
                    const etainv::TruncationPolicy& pol) {
    return json{{"abs_tol", q.abs_tol}, {"eps_tail", pol.eps_tail},
                {"max_terms", pol.max_terms}};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

int run_selftest();

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac spectrum, trace-formula and eta-invariant computations "
                 "on cofinite PSL(2,R) quotients"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "json", r_text = "0.1", t_text = "1.0";
    int max_weight = 9;
    double abs_tol = 1e-10, eps_tail = 1e-16;

    auto* cmd_spectrum = app.add_subcommand("spectrum", "continuous-spectrum bands");
    auto* cmd_heat = app.add_subcommand("heat", "heat-transform traces over t");
    auto* cmd_trace = app.add_subcommand("trace", "geometric side of the trace formula");
    auto* cmd_eta = app.add_subcommand("eta", "eta invariant components at s = 0");
    auto* cmd_sweep = app.add_subcommand("sweep", "adiabatic sweep over r");
    auto* cmd_selftest = app.add_subcommand("selftest", "run the invariant suite");

    for (CLI::App* sub : {cmd_spectrum, cmd_heat, cmd_trace, cmd_eta, cmd_sweep}) {
        sub->add_option("--config", config_path, "surface JSON config path");
        sub->add_option("--r", r_text, "fiber radius (comma list for sweep)");
        sub->add_option("--t", t_text, "heat time (comma list for heat traces)");
        sub->add_option("--max-weight", max_weight, "largest band index");
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--format", format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--abs-tol", abs_tol, "quadrature absolute tolerance");
        sub->add_option("--eps-tail", eps_tail, "series tail threshold");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cout << json{{"error", {{"type", "usage"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return kExitValidation;
    }

    try {
        if (cmd_selftest->parsed()) return run_selftest();
        if (!(abs_tol > 0.0)) throw etainv::config_error("--abs-tol", "must be > 0");
        if (!(eps_tail > 0.0 && eps_tail < 1.0)) {
            throw etainv::config_error("--eps-tail", "must be in (0, 1)");
        }
        etainv::quad::QuadratureSpec qspec;
        qspec.abs_tol = abs_tol;
        etainv::TruncationPolicy policy;
        policy.eps_tail = eps_tail;
        if (config_path.empty()) {
            throw etainv::config_error("--config", "a surface config is required");
        }
        const etainv::SurfaceConfig cfg = etainv::load_surface_config(config_path);

        if (cmd_spectrum->parsed()) {
            const double r = parse_list(r_text, "--r").front();
            etainv::SpectralParams params(r);
            const auto bands =
                etainv::continuous_bands(params, cfg.surface, max_weight);
            std::ostringstream os;
            os.precision(17);
            if (format == "csv") {
                os << "# etainv csv v1\n" << "m,gap_low,gap_high,multiplicity\n";
                for (const auto& b : bands) {
                    os << b.m << ',' << b.gap_low << ',' << b.gap_high << ','
                       << b.multiplicity << '\n';
                }
            } else {
                json rows = json::array();
                for (const auto& b : bands) {
                    rows.push_back({{"m", b.m},
                                    {"gap_low", b.gap_low},
                                    {"gap_high", b.gap_high},
                                    {"multiplicity", b.multiplicity}});
                }
                os << json{{"config", config_json(cfg)},
                           {"tolerances", tolerance_json(qspec, policy)},
                           {"r", r},
                           {"bands", rows}}.dump(2);
            }
            emit(os.str(), out_path);
            return 0;
        }

        if (cmd_heat->parsed()) {
            const double r = parse_list(r_text, "--r").front();
            etainv::SpectralParams params(r);
            const std::vector<double> ts = parse_list(t_text, "--t");
            std::ostringstream os;
            os.precision(17);
            os << "# etainv csv v1\n" << "t,h_tau0,tr_discrete\n";
            for (double t : ts) {
                if (!(t > 0.0)) throw etainv::config_error("--t", "t must be > 0");
                os << t << ',' << etainv::h_principal(t, params, 0.0, policy) << ','
                   << etainv::tr_discrete_part(t, params, cfg.surface, policy) << '\n';
            }
            emit(os.str(), out_path);
            return 0;
        }

        if (cmd_trace->parsed()) {
            const double r = parse_list(r_text, "--r").front();
            const double t = parse_list(t_text, "--t").front();
            etainv::SpectralParams params(r);
            const auto b = etainv::geometric_side(t, params, cfg.surface, cfg.classes,
                                                  qspec, policy);
            json out{{"config", config_json(cfg)},
                     {"tolerances", tolerance_json(qspec, policy)},
                     {"r", r},
                     {"t", t},
                     {"identity_cont", b.identity_cont},
                     {"identity_disc", b.identity_disc},
                     {"hyperbolic", b.hyperbolic},
                     {"cusp_psi", b.cusp_psi},
                     {"cusp_disc", b.cusp_disc},
                     {"cusp_log2", b.cusp_log2},
                     {"h_zero", b.h_zero},
                     {"pv_jterm", b.pv_jterm},
                     {"total", b.total},
                     {"errors",
                      {{"identity_cont", b.err_identity_cont},
                       {"hyperbolic", b.err_hyperbolic},
                       {"cusp_psi", b.err_cusp_psi},
                       {"cusp_log2", b.err_cusp_log2},
                       {"pv_jterm", b.err_pv_jterm}}},
                     {"err_estimate", b.err_estimate}};
            emit(out.dump(2), out_path);
            return 0;
        }

        if (cmd_eta->parsed()) {
            const double r = parse_list(r_text, "--r").front();
            etainv::SpectralParams params(r);
            const auto d1 = etainv::eta_d1(params, cfg.surface, 0.0);
            const auto d2 = etainv::eta_d2_at_zero(params, cfg.surface, policy);
            etainv::AsymptoticFit fit;
            const auto ep =
                etainv::eta_p_regularized(params, cfg.surface, cfg.classes, qspec,
                                          policy, etainv::JWeightMode::block_trace, &fit);
            json fitted = json::array();
            for (size_t i = 0; i < fit.exponents.size(); ++i) {
                fitted.push_back({{"power", fit.exponents[i].power},
                                  {"log", fit.exponents[i].has_log},
                                  {"coefficient", fit.coefficients[i]}});
            }
            json out{{"config", config_json(cfg)},
                     {"tolerances", tolerance_json(qspec, policy)},
                     {"r", r},
                     {"eta_d1", d1.value.real()},
                     {"eta_d2", d2.value.real()},
                     {"eta_p", ep.value.real()},
                     {"eta_total", d1.value.real() + d2.value.real() + ep.value.real()},
                     {"residue_r0", ep.residue_r0},
                     {"asymptotic_fit",
                      {{"terms", fitted},
                       {"residual", fit.residual},
                       {"rel_residual", fit.rel_residual},
                       {"cond", fit.cond}}},
                     {"err_estimate",
                      d1.err_estimate + d2.err_estimate + ep.err_estimate}};
            emit(out.dump(2), out_path);
            return 0;
        }

        if (cmd_sweep->parsed()) {
            const std::vector<double> rs = parse_list(r_text, "--r");
            const auto sweep = etainv::adiabatic_sweep(rs, cfg.surface, cfg.classes,
                                                       qspec, policy);
            std::ostringstream os;
            os.precision(17);
            if (format == "csv") {
                os << "# etainv csv v1\n" << "r,eta_d1,eta_d2,eta_p,eta_total,err_estimate\n";
                for (const auto& row : sweep.rows) {
                    os << row.r << ',' << row.eta_d1 << ',' << row.eta_d2 << ','
                       << row.eta_p << ',' << row.eta_total << ',' << row.err_estimate
                       << '\n';
                }
                os << "# extrapolated," << fmt(sweep.extrapolated) << ",limit,"
                   << fmt(sweep.limit) << '\n';
            } else {
                json rows = json::array();
                for (const auto& row : sweep.rows) {
                    rows.push_back({{"r", row.r},
                                    {"eta_d1", row.eta_d1},
                                    {"eta_d2", row.eta_d2},
                                    {"eta_p", row.eta_p},
                                    {"eta_total", row.eta_total},
                                    {"err_estimate", row.err_estimate}});
                }
                os << json{{"config", config_json(cfg)},
                           {"tolerances", tolerance_json(qspec, policy)},
                           {"rows", rows},
                           {"extrapolated", sweep.extrapolated},
                           {"limit", sweep.limit}}.dump(2);
            }
            emit(os.str(), out_path);
            return 0;
        }
    } catch (const etainv::config_error& e) {
        std::cout << json{{"error",
                           {{"type", "config"}, {"field", e.field}, {"message", e.what()}}}}
                         .dump(2)
                  << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cout << json{{"error", {{"type", "validation"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"type", "numeric"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return kExitNumeric;
    }
    return 0;
}

namespace {

struct Check {
    std::string name;
    bool pass;
    double detail;
};

int run_selftest() {
    using namespace etainv;
    using specfn::cplx;
    std::vector<Check> checks;
    auto add = [&](const std::string& name, double err, double tol) {
        checks.push_back({name, err <= tol, err});
    };

    // digamma recurrence and duplication
    {
        double worst = 0.0;
        for (double x : {0.3, 1.0, 1.7, 4.2}) {
            for (double y : {0.0, 0.5, 2.0}) {
                const cplx z(x, y);
                worst = std::max(worst, std::abs(specfn::digamma(z + 1.0) -
                                                 specfn::digamma(z) - 1.0 / z));
                worst = std::max(worst,
                                 std::abs(specfn::digamma(z) + specfn::digamma(z + 0.5) -
                                          2.0 * (specfn::digamma(2.0 * z) -
                                                 std::log(cplx(2.0)))));
            }
        }
        add("digamma recurrence+duplication", worst, 1e-11);
    }
    // Hurwitz zeta closed forms
    {
        double worst = 0.0;
        for (double a : {0.125, 0.5, 1.0}) {
            worst = std::max(worst, std::abs(specfn::hurwitz_zeta(0.0, a) - (0.5 - a)));
            worst = std::max(worst, std::abs(specfn::hurwitz_zeta(-1.0, a) +
                                             0.5 * (a * a - a + 1.0 / 6.0)));
            worst = std::max(worst, std::abs(specfn::zeta0(0.0, a) + 0.5 * a));
            worst = std::max(worst,
                             std::abs(specfn::zeta0(-1.0, a) + 0.25 * (a * a - 1.0 / 3.0)));
        }
        add("zeta closed forms at s=0,-1", worst, 1e-12);
    }
    // band gap: two routes
    {
        double worst = 0.0;
        for (double r : {0.05, 0.3, 1.0, 2.0}) {
            SpectralParams params(r);
            for (int m = 0; m <= 8; ++m) {
                const auto [lo, hi] = gap_from_bnormal(params, m);
                const double slope = std::sqrt(1.0 + 1.0 / (r * r));
                worst = std::max(worst, std::abs(lo - (-0.5 * r - m * slope)));
                worst = std::max(worst, std::abs(hi - (-0.5 * r + m * slope)));
            }
        }
        add("b-normal gap vs band formula", worst, 1e-12);
    }
    // Poisson identity
    {
        TruncationPolicy pol;
        double worst = 0.0;
        for (int pp : {0, 1, 2}) {
            for (double t : {0.1, 1.0}) {
                for (double r : {0.3, 1.0}) {
                    SpectralParams params(r);
                    worst = std::max(
                        worst,
                        std::abs(poisson_theta(pp, t, params, PoissonSide::lhs, pol) -
                                 poisson_theta(pp, t, params, PoissonSide::rhs, pol)));
                }
            }
        }
        add("poisson lhs=rhs", worst, 1e-9);
    }
    // series-form cross check
    {
        TruncationPolicy pol;
        SpectralParams params(0.3);
        const double a = h_principal(0.5, params, 0.7, pol);
        const double b = h_principal_series_form(0.5, params, 0.7, pol, 30);
        add("series form cross-check", std::abs(a - b), 1e-9);
    }
    // jfactor identity
    {
        double worst = 0.0;
        for (int m : {0, 2, 4, 6, 8}) {
            for (double tau : {0.25, 0.5, 1.0, 2.0, 5.0}) {
                const auto [fa, fb] = jfactor(m, tau);
                worst = std::max(worst, std::abs(fa - fb));
            }
        }
        add("jfactor formA=formB", worst, 1e-10);
    }
    // eta_d1 closed form at s=0
    {
        double worst = 0.0;
        for (double r : {0.1, 0.5}) {
            SpectralParams params(r);
            SurfaceData surf;
            surf.genus = 2;
            surf.kappa = 0;
            surf.spin.eps_x = {1, 1};
            surf.spin.eps_y = {1, 1};
            const auto v = eta_d1(params, surf, 0.0);
            const double expect = (2.0 - 4.0) * (1.0 / 6.0 + std::pow(r, 4) / 8.0);
            worst = std::max(worst, std::abs(v.value.real() - expect));
        }
        add("eta_d1(0) closed form", worst, 1e-13);
    }
    // eta_d2 continuation vs direct at s=3
    {
        TruncationPolicy pol;
        SpectralParams params(0.5);
        SurfaceData surf;
        surf.genus = 2;
        surf.kappa = 0;
        surf.spin.eps_x = {1, 1};
        surf.spin.eps_y = {1, 1};
        const auto direct = eta_d2_direct(params, surf, 3.0, pol);
        const cplx cont = eta_d2_continued(params, surf, 3.0, pol);
        add("eta_d2 direct vs continuation s=3", std::abs(direct.value - cont), 1e-8);
    }
    // spin structure enumeration counts
    {
        double worst = 0.0;
        for (int g = 0; g <= 2; ++g) {
            for (int kap = 0; kap <= 4; ++kap) {
                const auto all = enumerate_spin_structures(g, kap);
                worst = std::max(worst,
                                 std::abs(static_cast<double>(all.size()) -
                                          static_cast<double>(count_spin_structures(g, kap))));
            }
        }
        add("spin enumeration count", worst, 0.0);
    }
    // geometric side: total = sum of parts
    {
        quad::QuadratureSpec q;
        TruncationPolicy pol;
        SpectralParams params(0.3);
        SurfaceData surf;
        surf.genus = 0;
        surf.kappa = 4;
        surf.spin.eps_h = {1, 1, -1, -1};
        const std::vector<HyperbolicClass> classes{{2.0, 2.0, 1}};
        const auto b = geometric_side(1.0, params, surf, classes, q, pol);
        const double sum = b.identity_cont + b.identity_disc + b.hyperbolic + b.cusp_psi +
                           b.cusp_disc + b.cusp_log2 + b.h_zero + b.pv_jterm;
        add("geometric side sum of parts", std::abs(sum - b.total), 0.0);
    }

    bool all = true;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (err "
                  << c.detail << ")\n";
        all = all && c.pass;
    }
    std::cout << (all ? "selftest: all checks passed\n" : "selftest: FAILURES\n");
    return all ? 0 : 1;
}

}  // namespace
