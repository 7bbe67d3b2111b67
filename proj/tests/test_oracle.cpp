#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "csp/oracle.hpp"
#include "csp/transforms.hpp"

using namespace csp;

namespace {

const cplx kRoot = 1.0 / (std::sqrt(2.0 * pi) * std::polar(1.0, pi / 4));

cplx rand_disk(std::mt19937& rng, double r) {
    std::uniform_real_distribution<double> mag(0.05, r), ang(0.0, 2.0 * pi);
    return std::polar(mag(rng), ang(rng));
}

}  // namespace

TEST_CASE("oscillator spectral sum matches the closed form") {
    std::mt19937 rng(411);
    StateParams sp;
    for (double omega : {1.0, 1.7}) {
        auto ho = make_model("ho", omega);
        for (int rep = 0; rep < 6; ++rep) {
            const Label z0 = Label::from_z(rand_disk(rng, 1.2), sp);
            const Label zf = Label::from_z(rand_disk(rng, 1.2), sp);
            const double T = 0.3 + 0.5 * rep;
            const cplx sum = exact_propagator(*ho, sp, z0, zf, T);
            const cplx closed = ho_closed_propagator(sp, z0, zf, T, omega);
            CHECK(std::abs(sum - closed) <= 1e-12 * std::abs(closed));
        }
    }
}

TEST_CASE("zero time reduces to the state overlap") {
    std::mt19937 rng(412);
    StateParams sp;
    auto ho = make_model("ho");
    auto quartic = make_model("quartic-number");
    for (int rep = 0; rep < 5; ++rep) {
        const Label z0 = Label::from_z(rand_disk(rng, 1.5), sp);
        const Label zf = Label::from_z(rand_disk(rng, 1.5), sp);
        const cplx want = overlap(zf, z0);
        CHECK(std::abs(exact_propagator(*ho, sp, z0, zf, 0.0) - want) <= 1e-14 * std::abs(want));
        CHECK(std::abs(exact_propagator(*quartic, sp, z0, zf, 0.0) - want) <= 1e-14 * std::abs(want));
    }
}

TEST_CASE("quartic diagonal propagator has period pi in magnitude") {
    std::mt19937 rng(413);
    StateParams sp;
    auto quartic = make_model("quartic-number");
    std::uniform_real_distribution<double> time(0.05, 6.0);
    const Label z = Label::from_z(cplx(0.4, -0.3), sp);
    for (int rep = 0; rep < 20; ++rep) {
        const double T = time(rng);
        const double a = std::abs(exact_propagator(*quartic, sp, z, z, T));
        const double b = std::abs(exact_propagator(*quartic, sp, z, z, T + pi));
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("doubling the pinned term count changes nothing") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const Label z0 = Label::from_z(cplx(0.5, 0.2), sp);
    const Label zf = Label::from_z(cplx(-0.3, 0.6), sp);
    const cplx a = exact_propagator(*quartic, sp, z0, zf, 1.3, 60);
    const cplx b = exact_propagator(*quartic, sp, z0, zf, 1.3, 120);
    const cplx c = exact_propagator(*quartic, sp, z0, zf, 1.3);
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
    CHECK(std::abs(c - b) <= 1e-12 * std::abs(b));
}

TEST_CASE("propagator is analytic in the bra label") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const Label z0 = Label::from_z(cplx(0.4, 0.1), sp);
    const double T = 0.8, h = 1e-5;
    // K as a function of the conjugated bra variable zeta = zf*.
    auto F = [&](cplx zeta) {
        return exact_propagator(*quartic, sp, z0, Label::from_z(std::conj(zeta), sp), T);
    };
    const cplx zeta(0.3, -0.5);
    const cplx dx = (F(zeta + h) - F(zeta - h)) / (2.0 * h);
    const cplx dy = (F(zeta + cplx(0, h)) - F(zeta - cplx(0, h))) / (2.0 * h);
    CHECK(std::abs(dx + cplx(0, 1) * dy) < 1e-6);
}

TEST_CASE("transformed propagator agrees with the quadrature route") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const Label z0 = Label::from_z(cplx(0.3, 0.2), sp);
    const double T = 0.9;
    auto f = [&](cplx zs) {
        return exact_propagator(*quartic, sp, z0, Label::from_z(std::conj(zs), sp), T);
    };
    ContourSpec spec;
    for (cplx w : {cplx(2.2, 0.9), cplx(-1.8, 1.1), cplx(1.4, -1.6)}) {
        const cplx got = exact_conjugate(*quartic, sp, w, z0, T);
        const cplx ref = conjugate_apply(f, w, spec);
        CHECK(std::abs(got - ref) <= 1e-6 * std::abs(ref));
    }
}

TEST_CASE("transformed propagator decays like one over w") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const Label z0 = Label::from_z(cplx(0.4, -0.2), sp);
    const double T = 1.1;
    const cplx dir = std::polar(1.0, 0.7);
    for (double r : {1e3, 1e4}) {
        const cplx w = r * dir;
        const cplx scaled = w * exact_conjugate(*quartic, sp, w, z0, T);
        const cplx lead = kRoot * std::exp(cplx(0, -quartic->eigenvalue(0, sp) * T));
        CHECK(std::abs(scaled - lead) <= 2.0 * std::abs(z0.z0) / r);
    }
}

TEST_CASE("pole and domain guards reject bad transform arguments") {
    StateParams sp;
    auto ho = make_model("ho");
    auto quartic = make_model("quartic-number");
    const Label z0 = Label::from_z(cplx(0.5, 0.3), sp);
    const double T = 0.7;
    const cplx pole = z0.z0 * std::exp(cplx(0, -T));
    const cplx near_pole = pole * (1.0 + 1e-9 / std::abs(pole));
    CHECK_THROWS_AS(exact_conjugate(*ho, sp, near_pole, z0, T), std::domain_error);
    CHECK_THROWS_AS(exact_conjugate(*quartic, sp, 0.9 * z0.z0, z0, T), std::domain_error);
}

TEST_CASE("matrix exponential route reproduces the spectral sums") {
    std::mt19937 rng(414);
    StateParams sp;
    auto ho = make_model("ho", 1.3);
    auto quartic = make_model("quartic-number");
    for (int rep = 0; rep < 4; ++rep) {
        const Label z0 = Label::from_z(rand_disk(rng, 1.0), sp);
        const Label zf = Label::from_z(rand_disk(rng, 1.0), sp);
        const double T = 0.4 + 0.7 * rep;
        for (const ModelSymbol* model : {ho.get(), quartic.get()}) {
            const cplx a = exact_propagator(*model, sp, z0, zf, T);
            const cplx b = matrix_exp_propagator(*model, sp, z0, zf, T, 48);
            CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
        }
    }
}
