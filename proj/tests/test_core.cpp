#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csp/core.hpp"

using namespace csp;

TEST_CASE("state params enforce the width product") {
    CHECK_THROWS_AS(StateParams(1.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(StateParams(-1.0, 1.0, -1.0), std::invalid_argument);
    StateParams sp;  // defaults
    CHECK(sp.hbar == 1.0);
    CHECK(sp.b == 1.0);
    CHECK(sp.c == 1.0);
    StateParams wide(2.0, 4.0, 0.5);
    CHECK(wide.omega == doctest::Approx(2.0 / 16.0));
}

TEST_CASE("uv and qp maps are mutually inverse") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    StateParams sps[] = {StateParams(), StateParams(2.0, 4.0, 0.5), StateParams(0.5, 0.25, 2.0)};
    for (const auto& sp : sps) {
        for (int i = 0; i < 100; ++i) {
            cplx q(d(rng), d(rng)), p(d(rng), d(rng));
            PhasePoint pt = uv_from_qp(q, p, sp);
            auto [q2, p2] = qp_from_uv(pt, sp);
            CHECK(std::abs(q2 - q) < 1e-14 * (1.0 + std::abs(q)));
            CHECK(std::abs(p2 - p) < 1e-14 * (1.0 + std::abs(p)));
        }
    }
}

TEST_CASE("real phase space points have v = conj(u)") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    StateParams sp(1.0, 0.5, 2.0);
    for (int i = 0; i < 50; ++i) {
        PhasePoint pt = uv_from_qp(d(rng), d(rng), sp);
        CHECK(pt.is_real_phase(1e-15));
    }
    PhasePoint off = uv_from_qp(cplx(1.0, 0.5), 0.0, sp);
    CHECK_FALSE(off.is_real_phase(1e-6));
}

TEST_CASE("label round trips through z") {
    StateParams sp(1.0, 2.0, 0.5);
    Label l(1.3, -0.7, sp);
    CHECK(l.z0 == (cplx(1.3 / 2.0, 0.0) + cplx(0, 1) * (-0.7 / 0.5)) / std::sqrt(2.0));
    Label back = Label::from_z(l.z0, sp);
    CHECK(back.q0 == doctest::Approx(1.3).epsilon(1e-15));
    CHECK(back.p0 == doctest::Approx(-0.7).epsilon(1e-15));
}

TEST_CASE("overlap is the exponential of the label product") {
    StateParams sp;
    Label z0 = Label::from_z(cplx(0.4, 0.9), sp);
    Label zf = Label::from_z(cplx(-1.1, 0.2), sp);
    cplx expect = std::exp(std::conj(zf.z0) * z0.z0);
    CHECK(std::abs(overlap(zf, z0) - expect) == 0.0);
    // diagonal overlap of a real-labeled state is exp(|z|^2)
    Label d(0.8, 0.6, sp);
    CHECK(std::abs(overlap(d, d)) == doctest::Approx(std::exp(std::norm(d.z0))));
}
