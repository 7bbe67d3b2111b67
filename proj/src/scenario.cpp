#include "csp/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <set>

#include "csp/oracle.hpp"
#include "csp/transforms.hpp"

namespace csp {

namespace {

cplx nan_value() {
    const double n = std::numeric_limits<double>::quiet_NaN();
    return {n, n};
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& val) {
    std::size_t pos = 0;
    double d = 0.0;
    try {
        d = std::stod(val, &pos);
    } catch (const std::exception&) {
        throw ScenarioError("field " + key + ": malformed number '" + val + "'");
    }
    if (pos != val.size())
        throw ScenarioError("field " + key + ": malformed number '" + val + "'");
    return d;
}

long parse_int(const std::string& key, const std::string& val) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(val, &pos);
    } catch (const std::exception&) {
        throw ScenarioError("field " + key + ": malformed integer '" + val + "'");
    }
    if (pos != val.size())
        throw ScenarioError("field " + key + ": malformed integer '" + val + "'");
    return v;
}

std::vector<Method> parse_methods(const std::string& val) {
    std::vector<Method> out;
    std::size_t start = 0;
    while (start <= val.size()) {
        const auto comma = val.find(',', start);
        const std::string tok =
            trim(comma == std::string::npos ? val.substr(start) : val.substr(start, comma - start));
        if (tok == "exact")
            out.push_back(Method::exact);
        else if (tok == "bare")
            out.push_back(Method::bare);
        else if (tok == "conjugate")
            out.push_back(Method::conjugate);
        else if (tok == "uniform")
            out.push_back(Method::uniform);
        else
            throw ScenarioError("field methods: unknown method '" + tok + "'");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// Dispatches one key=value pair into cfg. Throws ScenarioError naming the
// field; callers with file context prepend path:line.
void apply_pair(ScenarioConfig& cfg, const std::string& key, const std::string& val) {
    if (key == "model")
        cfg.model = val;
    else if (key == "omega")
        cfg.omega = parse_double(key, val);
    else if (key == "z0_re") {
        cfg.z0.from_qp = false;
        cfg.z0.z = {parse_double(key, val), cfg.z0.z.imag()};
    } else if (key == "z0_im") {
        cfg.z0.from_qp = false;
        cfg.z0.z = {cfg.z0.z.real(), parse_double(key, val)};
    } else if (key == "zf_re") {
        cfg.zf.from_qp = false;
        cfg.zf.z = {parse_double(key, val), cfg.zf.z.imag()};
    } else if (key == "zf_im") {
        cfg.zf.from_qp = false;
        cfg.zf.z = {cfg.zf.z.real(), parse_double(key, val)};
    } else if (key == "q0") {
        cfg.z0.from_qp = true;
        cfg.z0.q = parse_double(key, val);
    } else if (key == "p0") {
        cfg.z0.from_qp = true;
        cfg.z0.p = parse_double(key, val);
    } else if (key == "qf") {
        cfg.zf.from_qp = true;
        cfg.zf.q = parse_double(key, val);
    } else if (key == "pf") {
        cfg.zf.from_qp = true;
        cfg.zf.p = parse_double(key, val);
    } else if (key == "t_min")
        cfg.t_min = parse_double(key, val);
    else if (key == "t_max")
        cfg.t_max = parse_double(key, val);
    else if (key == "steps")
        cfg.n_steps = static_cast<int>(parse_int(key, val));
    else if (key == "methods")
        cfg.methods = parse_methods(val);
    else if (key == "hbar")
        cfg.hbar = parse_double(key, val);
    else if (key == "b")
        cfg.b = parse_double(key, val);
    else if (key == "c")
        cfg.c = parse_double(key, val);
    else if (key == "box_re_min")
        cfg.box.re_min = parse_double(key, val);
    else if (key == "box_re_max")
        cfg.box.re_max = parse_double(key, val);
    else if (key == "box_im_min")
        cfg.box.im_min = parse_double(key, val);
    else if (key == "box_im_max")
        cfg.box.im_max = parse_double(key, val);
    else if (key == "grid_n")
        cfg.grid_n = static_cast<int>(parse_int(key, val));
    else if (key == "out")
        cfg.out = val;
    else if (key == "format")
        cfg.format = val;
    else if (key == "seed")
        cfg.seed = static_cast<std::uint64_t>(parse_int(key, val));
    else
        throw ScenarioError("unknown key '" + key + "'");
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double finite_or_null(double x, nlohmann::json& j, const char* key) {
    if (std::isfinite(x))
        j[key] = x;
    else
        j[key] = nullptr;
    return x;
}

}  // namespace

ScenarioConfig named_scenario(const std::string& name) {
    ScenarioConfig cfg;
    if (name == "fig1") {
        // Diagonal quartic sweep through the first recurrence region.
        cfg.z0.from_qp = true;
        cfg.z0.q = 0.5;
        cfg.z0.p = 0.0;
        cfg.zf = cfg.z0;
        return cfg;
    }
    if (name == "ho-sanity") {
        cfg.model = "ho";
        cfg.z0.from_qp = false;
        cfg.z0.z = {0.4, 0.2};
        cfg.zf = cfg.z0;
        cfg.t_min = 0.1;
        cfg.t_max = 12.0;
        cfg.n_steps = 60;
        cfg.methods = {Method::exact, Method::bare};
        return cfg;
    }
    if (name == "caustic") {
        // Bra label tuned so the diagonal family folds at T = 1.
        cfg.z0.from_qp = true;
        cfg.z0.q = 0.5;
        cfg.z0.p = 0.0;
        cfg.zf.from_qp = false;
        cfg.zf.z = {-0.47307116568439755, 0.21650459272549094};
        cfg.t_min = 0.5;
        cfg.t_max = 1.5;
        cfg.n_steps = 101;
        return cfg;
    }
    throw ScenarioError("unknown scenario '" + name +
                        "' (expected fig1, ho-sanity or caustic)");
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open config file '" + path + "'");
    ScenarioConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = path + ":" + std::to_string(lineno) + ": ";
        if (eq == std::string::npos) throw ScenarioError(where + "expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ScenarioError(where + "empty key");
        if (val.empty()) throw ScenarioError(where + "empty value for '" + key + "'");
        try {
            apply_pair(cfg, key, val);
        } catch (const ScenarioError& e) {
            throw ScenarioError(where + e.what());
        }
    }
    return cfg;
}

void validate(const ScenarioConfig& cfg) {
    if (cfg.model != "ho" && cfg.model != "quartic-number")
        throw ScenarioError("field model: unknown model '" + cfg.model +
                            "' (expected ho or quartic-number)");
    if (!(cfg.omega > 0.0)) throw ScenarioError("field omega: must be positive");
    if (!(cfg.t_min >= 0.0)) throw ScenarioError("field t_min: must be nonnegative");
    if (!(cfg.t_max >= cfg.t_min))
        throw ScenarioError("field t_max: must not be below t_min");
    if (cfg.n_steps < 1) throw ScenarioError("field steps: must be at least 1");
    if (!(cfg.hbar > 0.0 && cfg.b > 0.0 && cfg.c > 0.0))
        throw ScenarioError("field hbar/b/c: must all be positive");
    if (std::abs(cfg.b * cfg.c - cfg.hbar) > 8e-16 * cfg.hbar)
        throw ScenarioError("field b,c: product must equal hbar");
    if (cfg.methods.empty()) throw ScenarioError("field methods: must not be empty");
    if (cfg.grid_n < 2) throw ScenarioError("field grid_n: must be at least 2");
    if (!(cfg.box.re_min < cfg.box.re_max && cfg.box.im_min < cfg.box.im_max))
        throw ScenarioError("field box: min bounds must lie below max bounds");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ScenarioError("field format: expected csv or json");
}

std::vector<ScenarioRow> run_scenario(const ScenarioConfig& cfg) {
    validate(cfg);
    const StateParams sp(cfg.hbar, cfg.b, cfg.c);
    const auto model = make_model(cfg.model, cfg.omega);
    const Label z0 = cfg.z0.make(sp);
    const Label zf = cfg.zf.make(sp);

    std::vector<double> ts;
    for (int i = 0; i < cfg.n_steps; ++i)
        ts.push_back(cfg.n_steps == 1
                         ? cfg.t_min
                         : cfg.t_min + (cfg.t_max - cfg.t_min) * i / (cfg.n_steps - 1));

    std::vector<Method> methods = cfg.methods;
    std::sort(methods.begin(), methods.end(), [](Method a, Method b) {
        return std::string(to_string(a)) < std::string(to_string(b));
    });
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
    const auto wants = [&](Method m) {
        return std::find(methods.begin(), methods.end(), m) != methods.end();
    };

    PropagatorOptions opt;
    opt.box = cfg.box;
    opt.grid_n = cfg.grid_n;
    opt.seed = cfg.seed;

    // bare and uniform share one family continuation; the walker keeps the
    // family trajectory in slot 0 of every evaluation.
    std::vector<ScenarioRow> bare_rows, uniform_rows, conj_rows, exact_rows;
    if (wants(Method::bare) || wants(Method::uniform)) {
        UniformWalker walker(*model, sp, z0, zf, opt);
        for (double T : ts) {
            ScenarioRow rb, ru;
            rb.T = ru.T = T;
            rb.method = Method::bare;
            ru.method = Method::uniform;
            try {
                const PropagatorValue pv = walker.eval(T);
                ru.K = pv.value;
                ru.n_traj = pv.n_traj;
                ru.caustic_flag = pv.caustic_flag;
                ru.B = pv.b_coeff;
                ru.status = pv.status;
                if (pv.trajectories.empty()) {
                    rb.status =
                        pv.status == DynStatus::ok ? DynStatus::no_root : pv.status;
                    rb.K = nan_value();
                } else {
                    const TrajectoryRecord& fam = pv.trajectories.front();
                    rb.n_traj = 1;
                    if (std::abs(fam.M.m_vv) < 1e-10) {
                        rb.caustic_flag = true;
                        rb.K = cplx(std::numeric_limits<double>::infinity(), 0.0);
                    } else {
                        rb.K = bare_term(fam, sp);
                    }
                }
            } catch (const std::exception&) {
                rb.status = ru.status = DynStatus::not_found;
                rb.K = ru.K = nan_value();
            }
            if (wants(Method::bare)) bare_rows.push_back(rb);
            if (wants(Method::uniform)) uniform_rows.push_back(ru);
        }
    }
    if (wants(Method::conjugate)) {
        const cplx w = std::conj(zf.z0);
        for (double T : ts) {
            ScenarioRow r;
            r.T = T;
            r.method = Method::conjugate;
            try {
                const PropagatorValue pv = conjugate_propagator(*model, sp, w, z0, T, opt);
                r.K = pv.value;
                r.n_traj = pv.n_traj;
                r.caustic_flag = pv.caustic_flag;
                r.status = pv.status;
                if (r.status != DynStatus::ok && r.n_traj == 0) r.K = nan_value();
            } catch (const std::exception&) {
                r.status = DynStatus::not_found;
                r.K = nan_value();
            }
            conj_rows.push_back(r);
        }
    }
    if (wants(Method::exact)) {
        for (double T : ts) {
            ScenarioRow r;
            r.T = T;
            r.method = Method::exact;
            try {
                r.K = exact_propagator(*model, sp, z0, zf, T);
            } catch (const std::exception&) {
                r.status = DynStatus::not_found;
                r.K = nan_value();
            }
            exact_rows.push_back(r);
        }
    }

    std::vector<ScenarioRow> rows;
    for (Method m : methods) {
        const std::vector<ScenarioRow>* src = nullptr;
        switch (m) {
            case Method::bare: src = &bare_rows; break;
            case Method::conjugate: src = &conj_rows; break;
            case Method::exact: src = &exact_rows; break;
            case Method::uniform: src = &uniform_rows; break;
        }
        rows.insert(rows.end(), src->begin(), src->end());
    }
    return rows;
}

std::string to_csv(const std::vector<ScenarioRow>& rows) {
    std::string s = "T,re_K,im_K,abs2_K,method,n_traj,caustic_flag,re_B,im_B,status\n";
    for (const auto& r : rows) {
        s += fmt17(r.T) + ',';
        s += fmt17(r.K.real()) + ',';
        s += fmt17(r.K.imag()) + ',';
        s += fmt17(std::norm(r.K)) + ',';
        s += to_string(r.method);
        s += ',' + std::to_string(r.n_traj) + ',';
        s += r.caustic_flag ? '1' : '0';
        s += ',' + fmt17(r.B.real()) + ',' + fmt17(r.B.imag()) + ',';
        s += to_string(r.status);
        s += '\n';
    }
    return s;
}

std::string to_json(const std::vector<ScenarioRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["T"] = r.T;
        finite_or_null(r.K.real(), j, "re_K");
        finite_or_null(r.K.imag(), j, "im_K");
        finite_or_null(std::norm(r.K), j, "abs2_K");
        j["method"] = to_string(r.method);
        j["n_traj"] = r.n_traj;
        j["caustic_flag"] = r.caustic_flag;
        finite_or_null(r.B.real(), j, "re_B");
        finite_or_null(r.B.imag(), j, "im_B");
        j["status"] = to_string(r.status);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<CausticScanRow> caustic_scan(const ScenarioConfig& cfg) {
    validate(cfg);
    const StateParams sp(cfg.hbar, cfg.b, cfg.c);
    const auto model = make_model(cfg.model, cfg.omega);
    const Label z0 = cfg.z0.make(sp);
    const Label zf = cfg.zf.make(sp);

    BvpProblem prob;
    prob.kind = BvpKind::VV;
    prob.u0 = z0.z0;
    prob.target = std::conj(zf.z0);
    prob.model = model.get();
    prob.params = sp;

    // Continue the family root from T = 0, where v0 equals the bra target,
    // taking strides short enough that Newton tracks the same branch.
    const double stride = 0.05;
    cplx seed = prob.target;
    double t = 0.0;
    std::vector<CausticScanRow> rows;
    for (int i = 0; i < cfg.n_steps; ++i) {
        const double T = cfg.n_steps == 1
                             ? cfg.t_min
                             : cfg.t_min + (cfg.t_max - cfg.t_min) * i / (cfg.n_steps - 1);
        while (T - t > stride) {
            t += stride;
            prob.T = t;
            const TrajectoryRecord rec = solve_bvp(prob, seed, 1e-12);
            if (rec.status == DynStatus::ok || rec.status == DynStatus::caustic_adjacent)
                seed = rec.v0;
        }
        prob.T = T;
        const TrajectoryRecord rec = solve_bvp(prob, seed, 1e-12);
        CausticScanRow row;
        row.T = T;
        row.abs_mvv = std::abs(rec.M.m_vv);
        row.status = rec.status;
        rows.push_back(row);
        if (rec.status == DynStatus::ok || rec.status == DynStatus::caustic_adjacent) {
            seed = rec.v0;
            t = T;
        }
    }
    return rows;
}

std::string to_csv(const std::vector<CausticScanRow>& rows) {
    std::string s = "T,abs_mvv,status\n";
    for (const auto& r : rows) {
        s += fmt17(r.T) + ',' + fmt17(r.abs_mvv) + ',';
        s += to_string(r.status);
        s += '\n';
    }
    return s;
}

std::vector<DemoLine> transform_demo() {
    std::vector<DemoLine> lines;
    const cplx root = 1.0 / (std::sqrt(2.0 * pi) * std::polar(1.0, pi / 4));
    const auto fact = [](int m) {
        double f = 1.0;
        for (int k = 2; k <= m; ++k) f *= k;
        return f;
    };

    {
        // Ladder functions map to root * sqrt(m!) / w^{m+1}.
        ContourSpec spec;
        double worst = 0.0;
        for (int m = 0; m <= 5; ++m) {
            auto f = [&, m](cplx zs) { return std::pow(zs, m) / std::sqrt(fact(m)); };
            for (const cplx w : {cplx(1.1, 0.6), cplx(-0.4, 1.5), cplx(1.8, -0.9)}) {
                const cplx got = conjugate_apply(f, w, spec);
                const cplx want = root * std::sqrt(fact(m)) / std::pow(w, m + 1);
                worst = std::max(worst, std::abs(got - want) / std::abs(want));
            }
        }
        lines.push_back({"ladder forward images", worst, 1e-7, worst < 1e-7});
    }

    {
        ContourSpec spec;
        spec.kind = ContourSpec::Kind::shifted_line;
        double worst = 0.0;
        for (int m = 0; m <= 5; ++m) {
            auto ftil = [&, m](cplx w) {
                return root * std::sqrt(fact(m)) / std::pow(w, m + 1);
            };
            for (const cplx zs : {cplx(0.7, 0.3), cplx(-0.5, 0.8), cplx(1.1, -0.6)}) {
                const cplx got = conjugate_invert(ftil, zs, spec);
                const cplx want = std::pow(zs, m) / std::sqrt(fact(m));
                worst = std::max(worst, std::abs(got - want) / std::abs(want));
            }
        }
        lines.push_back({"ladder round trip", worst, 1e-6, worst < 1e-6});
    }

    {
        // Transform of the oscillator propagator against its closed pole form,
        // at random (w, z0, T) with w outside the disk of z0.
        ContourSpec spec;
        std::mt19937 rng(4242);
        std::uniform_real_distribution<double> mag(0.3, 0.9), ang(0.0, 2.0 * pi);
        std::uniform_real_distribution<double> ratio(1.5, 2.8), time(0.2, 3.0);
        const StateParams sp(1.0, 1.0, 1.0);
        const auto ho = make_model("ho", 1.0);
        double worst = 0.0;
        for (int rep = 0; rep < 10; ++rep) {
            const cplx z0 = std::polar(mag(rng), ang(rng));
            const cplx w = std::polar(std::abs(z0) * ratio(rng), ang(rng));
            const double T = time(rng);
            const Label l0 = Label::from_z(z0, sp);
            auto f = [&](cplx zs) {
                return exact_propagator(*ho, sp, l0, Label::from_z(std::conj(zs), sp), T);
            };
            const cplx got = conjugate_apply(f, w, spec);
            const cplx want = exact_conjugate(*ho, sp, w, l0, T);
            worst = std::max(worst, std::abs(got - want) / std::abs(want));
        }
        lines.push_back({"oscillator transformed propagator", worst, 1e-6, worst < 1e-6});
    }

    return lines;
}

std::string to_text(const std::vector<DemoLine>& lines) {
    std::string s;
    char buf[120];
    for (const auto& l : lines) {
        std::snprintf(buf, sizeof buf, "[%s] %-36s max err %.3e  tol %.0e\n",
                      l.pass ? "PASS" : "FAIL", l.name.c_str(), l.max_err, l.tol);
        s += buf;
    }
    return s;
}

}  // namespace csp
