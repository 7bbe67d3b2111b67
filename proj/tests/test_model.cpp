#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csp/model.hpp"

using namespace csp;

namespace {
std::mt19937 rng(23);
cplx rand_c(double r = 1.2) {
    std::uniform_real_distribution<double> d(-r, r);
    return {d(rng), d(rng)};
}
}  // namespace

TEST_CASE("closed-form jets match the Fock ladder sum") {
    StateParams sp;
    for (const char* id : {"ho", "quartic-number"}) {
        auto model = make_model(id, 1.3);
        for (int i = 0; i < 20; ++i) {
            cplx u = rand_c(), v = rand_c();
            SymbolJet j = symbol_jet(*model, u, v, sp);
            cplx ref = model->fock_symbol(u, v, sp);
            CHECK(std::abs(j.h - ref) < 1e-8 * (1.0 + std::abs(ref)));
        }
    }
}

TEST_CASE("harmonic oscillator symbol is linear in the number variable") {
    StateParams sp(2.0, 1.0, 2.0);
    auto ho = make_model("ho", 0.7);
    cplx u(0.3, -1.1), v(0.9, 0.4);
    SymbolJet j = ho->jet(u, v, sp);
    const double hw = 2.0 * 0.7;
    CHECK(std::abs(j.h - hw * (u * v + 0.5)) < 1e-15);
    CHECK(std::abs(j.h_u - hw * v) < 1e-15);
    CHECK(std::abs(j.h_v - hw * u) < 1e-15);
    CHECK(std::abs(j.h_uv - hw) < 1e-15);
    CHECK(std::abs(j.h_uu) == 0.0);
    CHECK(std::abs(j.h_vv) == 0.0);
    CHECK(ho->eigenvalue(3, sp) == doctest::Approx(hw * 3.5));
}

TEST_CASE("quartic number model symbol and spectrum") {
    StateParams sp;
    auto q = make_model("quartic-number");
    cplx u(0.5, 0.2), v(-0.3, 0.8);
    cplx n = u * v;
    SymbolJet j = q->jet(u, v, sp);
    CHECK(std::abs(j.h - (n * n + 2.0 * n + 0.25)) < 1e-15);
    CHECK(q->eigenvalue(0, sp) == doctest::Approx(0.25));
    CHECK(q->eigenvalue(4, sp) == doctest::Approx(20.25));
}

TEST_CASE("number-diagonal symbols only depend on the product uv") {
    StateParams sp;
    std::uniform_real_distribution<double> dl(0.3, 3.0);
    for (const char* id : {"ho", "quartic-number"}) {
        auto model = make_model(id, 1.0);
        for (int i = 0; i < 25; ++i) {
            cplx u = rand_c(), v = rand_c();
            double lam = dl(rng);
            cplx h0 = model->jet(u, v, sp).h;
            cplx h1 = model->jet(lam * u, v / lam, sp).h;
            CHECK(std::abs(h0 - h1) < 1e-12 * (1.0 + std::abs(h0)));
        }
    }
}

TEST_CASE("mixed second derivative agrees with finite differences") {
    StateParams sp;
    auto q = make_model("quartic-number");
    const double h = 1e-4;
    for (int i = 0; i < 10; ++i) {
        cplx u = rand_c(), v = rand_c();
        SymbolJet j = q->jet(u, v, sp);
        cplx fd = (q->jet(u + h, v + h, sp).h - q->jet(u + h, v - h, sp).h -
                   q->jet(u - h, v + h, sp).h + q->jet(u - h, v - h, sp).h) /
                  (4.0 * h * h);
        CHECK(std::abs(fd - j.h_uv) < 1e-6 * (1.0 + std::abs(j.h_uv)));
    }
}

TEST_CASE("non-finite jets raise a domain error") {
    StateParams sp;
    auto q = make_model("quartic-number");
    CHECK_THROWS_AS(symbol_jet(*q, cplx(1e200, 0), cplx(1e200, 0), sp), std::domain_error);
}

TEST_CASE("unknown model ids are rejected") {
    CHECK_THROWS_AS(make_model("cubic"), std::invalid_argument);
}
