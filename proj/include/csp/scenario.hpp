#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "csp/propagators.hpp"

namespace csp {

// Configuration or input-file problem. The message names the offending field,
// or carries path:line for file parse errors.
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state label given either as the complex z or as the real pair (q, p);
// the coherent-state widths are only known at run time.
struct LabelSpec {
    bool from_qp = false;
    cplx z{};
    double q = 0.0, p = 0.0;

    Label make(const StateParams& sp) const {
        return from_qp ? Label(q, p, sp) : Label::from_z(z, sp);
    }
};

struct ScenarioConfig {
    std::string model = "quartic-number";
    double omega = 1.0;  // oscillator frequency, ignored by other models
    LabelSpec z0{}, zf{};
    double t_min = 0.05, t_max = 3.0;
    int n_steps = 200;
    std::vector<Method> methods{Method::exact, Method::bare, Method::uniform};
    double hbar = 1.0, b = 1.0, c = 1.0;
    SearchBox box{};
    int grid_n = 12;
    std::string out{};           // empty writes to stdout
    std::string format = "csv";  // csv | json
    std::uint64_t seed = 0;      // multistart lattice jitter
};

struct ScenarioRow {
    double T = 0.0;
    cplx K{};
    Method method = Method::exact;
    int n_traj = 0;
    bool caustic_flag = false;
    cplx B{};  // uniform cubic coefficient, 0 for other methods
    DynStatus status = DynStatus::ok;
};

// Presets: "fig1" (quartic diagonal sweep), "ho-sanity" (oscillator
// exact-vs-bare), "caustic" (engineered fold family around T = 1).
ScenarioConfig named_scenario(const std::string& name);

// key=value file, one pair per line, '#' comments. Unknown keys and malformed
// values are reported with their line number.
ScenarioConfig load_config(const std::string& path);

// Field-level checks (ranges, b*c = hbar, known model and methods). Throws
// ScenarioError naming the field.
void validate(const ScenarioConfig& cfg);

// One row per (T, method), ordered by (method name, T). Per-point failures
// become rows with status != ok; the sweep always completes.
std::vector<ScenarioRow> run_scenario(const ScenarioConfig& cfg);

std::string to_csv(const std::vector<ScenarioRow>& rows);
std::string to_json(const std::vector<ScenarioRow>& rows);

// |m_vv| of the continued family on the T grid of cfg.
struct CausticScanRow {
    double T = 0.0;
    double abs_mvv = 0.0;
    DynStatus status = DynStatus::ok;
};
std::vector<CausticScanRow> caustic_scan(const ScenarioConfig& cfg);
std::string to_csv(const std::vector<CausticScanRow>& rows);

// Transform spot checks: monomial forward images, their inverse round trip,
// and the oscillator transformed propagator against its closed form.
struct DemoLine {
    std::string name;
    double max_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};
std::vector<DemoLine> transform_demo();
std::string to_text(const std::vector<DemoLine>& lines);

}  // namespace csp
