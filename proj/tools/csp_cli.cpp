#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "csp/scenario.hpp"

namespace {

// Raw flag storage; CLI11 option pointers tell us which were actually given
// so scenario defaults survive unless overridden.
struct Flags {
    std::string scenario = "fig1";
    std::string model, methods, out, format;
    double omega = 0, z0_re = 0, z0_im = 0, zf_re = 0, zf_im = 0;
    double q0 = 0, p0 = 0, qf = 0, pf = 0;
    double t_min = 0, t_max = 0, hbar = 0, b = 0, c = 0;
    int steps = 0, grid_n = 0;
    std::uint64_t seed = 0;

    CLI::Option *o_model = nullptr, *o_omega = nullptr;
    CLI::Option *o_z0_re = nullptr, *o_z0_im = nullptr, *o_zf_re = nullptr,
                *o_zf_im = nullptr;
    CLI::Option *o_q0 = nullptr, *o_p0 = nullptr, *o_qf = nullptr, *o_pf = nullptr;
    CLI::Option *o_t_min = nullptr, *o_t_max = nullptr, *o_steps = nullptr;
    CLI::Option *o_methods = nullptr, *o_hbar = nullptr, *o_b = nullptr,
                *o_c = nullptr;
    CLI::Option *o_out = nullptr, *o_format = nullptr, *o_grid = nullptr,
                *o_seed = nullptr;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--scenario", f.scenario, "Preset name or config file path");
    f.o_model = sub->add_option("--model", f.model, "ho or quartic-number");
    f.o_omega = sub->add_option("--omega", f.omega, "Oscillator frequency");
    f.o_z0_re = sub->add_option("--z0-re", f.z0_re, "Initial label, real part");
    f.o_z0_im = sub->add_option("--z0-im", f.z0_im, "Initial label, imaginary part");
    f.o_zf_re = sub->add_option("--zf-re", f.zf_re, "Final label, real part");
    f.o_zf_im = sub->add_option("--zf-im", f.zf_im, "Final label, imaginary part");
    f.o_q0 = sub->add_option("--q0", f.q0, "Initial label, position");
    f.o_p0 = sub->add_option("--p0", f.p0, "Initial label, momentum");
    f.o_qf = sub->add_option("--qf", f.qf, "Final label, position");
    f.o_pf = sub->add_option("--pf", f.pf, "Final label, momentum");
    f.o_t_min = sub->add_option("--t-min", f.t_min, "First propagation time");
    f.o_t_max = sub->add_option("--t-max", f.t_max, "Last propagation time");
    f.o_steps = sub->add_option("--steps", f.steps, "Number of time points");
    f.o_methods = sub->add_option("--methods", f.methods,
                                  "Comma list of exact,bare,conjugate,uniform");
    f.o_hbar = sub->add_option("--hbar", f.hbar, "Planck constant");
    f.o_b = sub->add_option("--b", f.b, "Position width (b*c must equal hbar)");
    f.o_c = sub->add_option("--c", f.c, "Momentum width (b*c must equal hbar)");
    f.o_out = sub->add_option("--out", f.out, "Output path, default stdout");
    f.o_format = sub->add_option("--format", f.format, "csv or json");
    f.o_grid = sub->add_option("--grid-n", f.grid_n, "Multistart grid side");
    f.o_seed = sub->add_option("--seed", f.seed, "Multistart jitter seed");
}

csp::ScenarioConfig build_config(const Flags& f) {
    csp::ScenarioConfig cfg;
    const bool preset = f.scenario == "fig1" || f.scenario == "ho-sanity" ||
                        f.scenario == "caustic";
    cfg = preset ? csp::named_scenario(f.scenario) : csp::load_config(f.scenario);

    if (*f.o_model) cfg.model = f.model;
    if (*f.o_omega) cfg.omega = f.omega;
    if (*f.o_z0_re || *f.o_z0_im) {
        cfg.z0.from_qp = false;
        if (*f.o_z0_re) cfg.z0.z = {f.z0_re, cfg.z0.z.imag()};
        if (*f.o_z0_im) cfg.z0.z = {cfg.z0.z.real(), f.z0_im};
    }
    if (*f.o_q0 || *f.o_p0) {
        cfg.z0.from_qp = true;
        if (*f.o_q0) cfg.z0.q = f.q0;
        if (*f.o_p0) cfg.z0.p = f.p0;
    }
    if (*f.o_zf_re || *f.o_zf_im) {
        cfg.zf.from_qp = false;
        if (*f.o_zf_re) cfg.zf.z = {f.zf_re, cfg.zf.z.imag()};
        if (*f.o_zf_im) cfg.zf.z = {cfg.zf.z.real(), f.zf_im};
    }
    if (*f.o_qf || *f.o_pf) {
        cfg.zf.from_qp = true;
        if (*f.o_qf) cfg.zf.q = f.qf;
        if (*f.o_pf) cfg.zf.p = f.pf;
    }
    if (*f.o_t_min) cfg.t_min = f.t_min;
    if (*f.o_t_max) cfg.t_max = f.t_max;
    if (*f.o_steps) cfg.n_steps = f.steps;
    if (*f.o_methods) cfg.methods = [&] {
        std::vector<csp::Method> ms;
        std::size_t start = 0;
        const std::string& val = f.methods;
        while (start <= val.size()) {
            const auto comma = val.find(',', start);
            std::string tok = comma == std::string::npos
                                  ? val.substr(start)
                                  : val.substr(start, comma - start);
            if (tok == "exact")
                ms.push_back(csp::Method::exact);
            else if (tok == "bare")
                ms.push_back(csp::Method::bare);
            else if (tok == "conjugate")
                ms.push_back(csp::Method::conjugate);
            else if (tok == "uniform")
                ms.push_back(csp::Method::uniform);
            else
                throw csp::ScenarioError("field methods: unknown method '" + tok + "'");
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return ms;
    }();
    if (*f.o_hbar) cfg.hbar = f.hbar;
    if (*f.o_b) cfg.b = f.b;
    if (*f.o_c) cfg.c = f.c;
    if (*f.o_out) cfg.out = f.out;
    if (*f.o_format) cfg.format = f.format;
    if (*f.o_grid) cfg.grid_n = f.grid_n;
    if (*f.o_seed) cfg.seed = f.seed;
    return cfg;
}

int emit(const csp::ScenarioConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(cfg.out);
    if (!out) {
        std::cerr << "error: cannot write '" << cfg.out << "'\n";
        return 1;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherent-state propagator toolkit"};
    app.require_subcommand(1);

    Flags fp, fc;
    CLI::App* propagate =
        app.add_subcommand("propagate", "Sweep the propagator over a time grid");
    add_common(propagate, fp);
    CLI::App* demo = app.add_subcommand(
        "transform-demo", "Spot checks of the integral transform pair");
    CLI::App* scan = app.add_subcommand(
        "caustic-scan", "Tangent element magnitude of the family over the grid");
    add_common(scan, fc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (propagate->parsed()) {
            const csp::ScenarioConfig cfg = build_config(fp);
            const auto rows = csp::run_scenario(cfg);
            const std::string text =
                cfg.format == "json" ? csp::to_json(rows) : csp::to_csv(rows);
            const int rc = emit(cfg, text);
            if (rc != 0) return rc;
            bool any_ok = rows.empty();
            for (const auto& r : rows)
                if (r.status == csp::DynStatus::ok) any_ok = true;
            return any_ok ? 0 : 2;
        }
        if (scan->parsed()) {
            const csp::ScenarioConfig cfg = build_config(fc);
            const auto rows = csp::caustic_scan(cfg);
            const int rc = emit(cfg, csp::to_csv(rows));
            if (rc != 0) return rc;
            bool any_ok = rows.empty();
            for (const auto& r : rows)
                if (r.status == csp::DynStatus::ok) any_ok = true;
            return any_ok ? 0 : 2;
        }
        if (demo->parsed()) {
            std::cout << csp::to_text(csp::transform_demo());
            return 0;
        }
    } catch (const csp::ScenarioError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
