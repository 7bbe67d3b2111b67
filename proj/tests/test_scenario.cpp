#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "csp/scenario.hpp"

using namespace csp;

namespace {

std::vector<ScenarioRow> rows_for(const ScenarioConfig& cfg, Method m) {
    std::vector<ScenarioRow> out;
    for (const auto& r : run_scenario(cfg))
        if (r.method == m) out.push_back(r);
    return out;
}

}  // namespace

TEST_CASE("zero-time sweep returns the state overlap") {
    ScenarioConfig cfg = named_scenario("fig1");
    cfg.t_min = cfg.t_max = 0.0;
    cfg.n_steps = 1;
    cfg.methods = {Method::exact};
    const auto rows = run_scenario(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].T == 0.0);
    CHECK(rows[0].status == DynStatus::ok);
    // diagonal overlap exp(|z|^2) with |z|^2 = 1/8, squared modulus e^{1/4}
    CHECK(std::abs(std::norm(rows[0].K) - std::exp(0.25)) <= 1e-12 * std::exp(0.25));

    const std::string csv = to_csv(rows);
    CHECK(csv.rfind("T,re_K,im_K,abs2_K,method,n_traj,caustic_flag,re_B,im_B,status\n",
                    0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("oscillator sweep keeps one-trajectory sum at machine accuracy") {
    ScenarioConfig cfg = named_scenario("ho-sanity");
    cfg.t_max = 6.0;
    cfg.n_steps = 25;
    const auto bare = rows_for(cfg, Method::bare);
    const auto exact = rows_for(cfg, Method::exact);
    REQUIRE(bare.size() == 25);
    REQUIRE(exact.size() == 25);
    double worst = 0.0;
    for (std::size_t i = 0; i < bare.size(); ++i) {
        REQUIRE(bare[i].status == DynStatus::ok);
        CHECK(bare[i].T == exact[i].T);
        worst = std::max(worst,
                         std::abs(bare[i].K - exact[i].K) / std::abs(exact[i].K));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("rows come out ordered and reruns are byte identical") {
    ScenarioConfig cfg = named_scenario("fig1");
    cfg.t_min = 0.3;
    cfg.t_max = 0.7;
    cfg.n_steps = 5;
    cfg.seed = 7;
    const auto rows = run_scenario(cfg);
    REQUIRE(rows.size() == 15);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const std::string a = to_string(rows[i - 1].method);
        const std::string b = to_string(rows[i].method);
        CHECK(a <= b);
        if (a == b) CHECK(rows[i - 1].T < rows[i].T);
    }
    const std::string first = to_csv(rows);
    const std::string second = to_csv(run_scenario(cfg));
    CHECK(first == second);
}

TEST_CASE("sweep failures are reported as rows, not thrown") {
    // The oscillator family has no interior stationary point for the
    // transformed sum, so every point must come back as a no_root row.
    ScenarioConfig cfg = named_scenario("ho-sanity");
    cfg.methods = {Method::conjugate};
    cfg.n_steps = 3;
    cfg.t_max = 2.0;
    const auto rows = run_scenario(cfg);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK(r.status == DynStatus::no_root);
        CHECK(!std::isfinite(r.K.real()));
    }
}

TEST_CASE("json output is valid and carries the same fields") {
    ScenarioConfig cfg = named_scenario("fig1");
    cfg.t_min = cfg.t_max = 0.0;
    cfg.n_steps = 1;
    cfg.methods = {Method::exact};
    const auto parsed = nlohmann::json::parse(to_json(run_scenario(cfg)));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["method"] == "exact");
    CHECK(parsed[0]["status"] == "ok");
    CHECK(std::abs(parsed[0]["abs2_K"].get<double>() - std::exp(0.25)) < 1e-12);
}

TEST_CASE("caustic scan finds the fold of the engineered family") {
    ScenarioConfig cfg = named_scenario("caustic");
    cfg.t_min = 0.9;
    cfg.t_max = 1.1;
    cfg.n_steps = 21;
    const auto rows = caustic_scan(cfg);
    REQUIRE(rows.size() == 21);
    double dip = 1e300;
    double dip_t = 0.0;
    for (const auto& r : rows) {
        if (r.abs_mvv < dip) {
            dip = r.abs_mvv;
            dip_t = r.T;
        }
    }
    CHECK(dip < 1e-6);
    CHECK(dip_t == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rows.front().abs_mvv > 0.05);
    CHECK(rows.back().abs_mvv > 0.05);
}

TEST_CASE("config validation names the offending field") {
    ScenarioConfig cfg = named_scenario("fig1");
    cfg.n_steps = 0;
    CHECK_THROWS_WITH_AS(validate(cfg), "field steps: must be at least 1",
                         ScenarioError);

    cfg = named_scenario("fig1");
    cfg.b = 2.0;
    CHECK_THROWS_WITH_AS(validate(cfg), "field b,c: product must equal hbar",
                         ScenarioError);

    cfg = named_scenario("fig1");
    cfg.model = "anharmonic";
    CHECK_THROWS_AS(validate(cfg), ScenarioError);

    cfg = named_scenario("fig1");
    cfg.methods.clear();
    CHECK_THROWS_AS(validate(cfg), ScenarioError);

    CHECK_THROWS_AS(named_scenario("nope"), ScenarioError);
}

TEST_CASE("config files parse by line and report bad input precisely") {
    const std::string path = "scenario_cfg_test.tmp";
    {
        std::ofstream out(path);
        out << "# oscillator slice\n"
            << "model = ho\n"
            << "omega = 1.5\n"
            << "z0_re = 0.4\n"
            << "z0_im = -0.1\n"
            << "qf = 0.3\n"
            << "pf = 0.2\n"
            << "t_min = 0.2\n"
            << "t_max = 1.2\n"
            << "steps = 11\n"
            << "methods = exact,bare\n"
            << "seed = 9\n"
            << "format = json\n";
    }
    const ScenarioConfig cfg = load_config(path);
    CHECK(cfg.model == "ho");
    CHECK(cfg.omega == 1.5);
    CHECK(!cfg.z0.from_qp);
    CHECK(cfg.z0.z == cplx(0.4, -0.1));
    CHECK(cfg.zf.from_qp);
    CHECK(cfg.zf.q == 0.3);
    CHECK(cfg.zf.p == 0.2);
    CHECK(cfg.n_steps == 11);
    REQUIRE(cfg.methods.size() == 2);
    CHECK(cfg.methods[0] == Method::exact);
    CHECK(cfg.methods[1] == Method::bare);
    CHECK(cfg.seed == 9);
    CHECK(cfg.format == "json");

    {
        std::ofstream out(path);
        out << "model = ho\n"
            << "steos = 11\n";
    }
    CHECK_THROWS_WITH_AS(load_config(path),
                         (path + ":2: unknown key 'steos'").c_str(), ScenarioError);

    {
        std::ofstream out(path);
        out << "t_min 0.2\n";
    }
    CHECK_THROWS_WITH_AS(load_config(path), (path + ":1: expected key=value").c_str(),
                         ScenarioError);

    {
        std::ofstream out(path);
        out << "steps = eleven\n";
    }
    CHECK_THROWS_WITH_AS(load_config(path),
                         (path + ":1: field steps: malformed integer 'eleven'").c_str(),
                         ScenarioError);

    std::remove(path.c_str());
    CHECK_THROWS_AS(load_config(path), ScenarioError);
}

TEST_CASE("transform demo passes its own tolerances") {
    const auto lines = transform_demo();
    REQUIRE(lines.size() == 3);
    for (const auto& l : lines) {
        CHECK(l.pass);
        CHECK(l.max_err < l.tol);
    }
    const std::string text = to_text(lines);
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("[FAIL]") == std::string::npos);
}
