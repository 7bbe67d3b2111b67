#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csp/specfun.hpp"

using namespace csp;

#include "airy_table.inc"

namespace {

const cplx kW{-0.5, 0.8660254037844386468};  // e^{2 pi i/3}

// Brute-force oracle for the cubic-phase integral: composite Simpson along
// the class contour, built from rays through the origin in the mid-directions
// of the decay sectors of exp(iX^3/3).
cplx cubic_by_quadrature(cplx A, cplx B, cplx c0, cplx c1, AiryBranch branch) {
    const cplx e_right = std::polar(1.0, pi / 6);
    const cplx e_left = std::polar(1.0, 5 * pi / 6);
    const cplx e_down = std::polar(1.0, -pi / 2);
    cplx from, to;
    switch (branch) {
        case AiryBranch::principal: from = e_left; to = e_right; break;
        case AiryBranch::rot_plus: from = e_left; to = e_down; break;
        case AiryBranch::rot_minus: from = e_down; to = e_right; break;
    }
    auto f = [&](cplx X) {
        return (c0 + c1 * X) * std::exp(cplx(0, 1) * (A - B * X + X * X * X / 3.0));
    };
    const double L = 7.0;
    const int n = 12000;  // per segment, even
    auto segment = [&](cplx a, cplx b) {
        const cplx h = (b - a) / double(n);
        cplx acc = f(a) + f(b);
        for (int i = 1; i < n; ++i) acc += f(a + double(i) * h) * (i % 2 ? 4.0 : 2.0);
        return acc * h / 3.0;
    };
    return (segment(from * L, cplx(0)) + segment(cplx(0), to * L)) / std::sqrt(2 * pi);
}

}  // namespace

TEST_CASE("airy matches the reference table") {
    for (const auto& row : kAiryTable) {
        const cplx z(row[0], row[1]);
        const cplx ai_ref(row[2], row[3]);
        const cplx aip_ref(row[4], row[5]);
        AiryValue v = airy(z);
        REQUIRE(v.log_scale == 0.0);
        CHECK(std::abs(v.ai - ai_ref) <= 1e-10 * std::abs(ai_ref));
        CHECK(std::abs(v.ai_prime - aip_ref) <= 1e-10 * std::abs(aip_ref));
    }
}

TEST_CASE("values at the origin") {
    AiryValue v = airy(0.0);
    CHECK(std::abs(v.ai - 0.35502805388781723926) < 1e-15);
    CHECK(std::abs(v.ai_prime + 0.25881940379280679840) < 1e-15);
}

TEST_CASE("rotation connection identity") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dr(0.0, 8.0), da(-pi, pi);
    for (int i = 0; i < 60; ++i) {
        const cplx z = std::polar(dr(rng), da(rng));
        const cplx lhs = airy(z).ai + kW * airy(kW * z).ai + std::conj(kW) * airy(std::conj(kW) * z).ai;
        const double scale = std::max({std::abs(airy(z).ai), std::abs(airy(kW * z).ai),
                                       std::abs(airy(std::conj(kW) * z).ai)});
        CHECK(std::abs(lhs) <= 1e-10 * scale);
    }
}

TEST_CASE("rotated solutions sum to the principal one") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    for (int i = 0; i < 30; ++i) {
        const cplx z(d(rng), d(rng));
        AiryValue p = airy_solution(z, AiryBranch::principal);
        AiryValue a = airy_solution(z, AiryBranch::rot_plus);
        AiryValue b = airy_solution(z, AiryBranch::rot_minus);
        CHECK(std::abs(p.ai - (a.ai + b.ai)) < 1e-11 * (1.0 + std::abs(p.ai)));
        CHECK(std::abs(p.ai_prime - (a.ai_prime + b.ai_prime)) < 1e-11 * (1.0 + std::abs(p.ai_prime)));
    }
}

TEST_CASE("wronskian against the companion solution") {
    // Bi assembled from the rotated solutions; W(Ai, Bi) = 1/pi.
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> dr(0.0, 8.0), da(-pi, pi);
    const cplx e6 = std::polar(1.0, pi / 6);
    for (int i = 0; i < 50; ++i) {
        const cplx z = std::polar(dr(rng), da(rng));
        AiryValue a = airy(z);
        AiryValue r1 = airy(kW * z), r2 = airy(std::conj(kW) * z);
        const cplx bi = e6 * r1.ai + std::conj(e6) * r2.ai;
        const cplx bip = e6 * kW * r1.ai_prime + std::conj(e6 * kW) * r2.ai_prime;
        const cplx w = a.ai * bip - a.ai_prime * bi;
        // The products reach ~1e8 before cancelling to 1/pi, so the
        // verification scale must include their magnitude.
        const double cond = std::max(1.0, std::abs(a.ai * bip) + std::abs(a.ai_prime * bi));
        CHECK(std::abs(w - 1.0 / pi) < 1e-9 * cond);
    }
}

TEST_CASE("airy is real on the real axis") {
    for (double x = -10.0; x <= 5.0; x += 0.37) {
        AiryValue v = airy(x);
        CHECK(std::abs(v.ai.imag()) < 1e-12);
        CHECK(std::abs(v.ai_prime.imag()) < 1e-12);
    }
}

TEST_CASE("series-asymptotic crossover is seamless") {
    // Step across |z| = 9 and compare against the Taylor prediction from the
    // inner point; Ai'' = z Ai closes the jet.
    for (double th : {0.0, 1.0, 2.0, 2.9, -2.2, -1.1}) {
        const cplx z1 = std::polar(8.999, th), z2 = std::polar(9.001, th);
        const cplx dz = z2 - z1;
        AiryValue a = airy(z1), b = airy(z2);
        // jet closed by the defining equation: y'' = zy, y''' = y + zy',
        // y'''' = 2y' + z^2 y
        const cplx d2 = z1 * a.ai;
        const cplx d3 = a.ai + z1 * a.ai_prime;
        const cplx d4 = 2.0 * a.ai_prime + z1 * z1 * a.ai;
        const cplx pred = a.ai + a.ai_prime * dz + d2 * dz * dz / 2.0 +
                          d3 * dz * dz * dz / 6.0 + d4 * dz * dz * dz * dz / 24.0;
        CHECK(std::abs(b.ai - pred) < 1e-9 * std::abs(b.ai));
    }
}

TEST_CASE("huge arguments come back in scaled form") {
    AiryValue v = airy(cplx(700.0, 0.0));
    CHECK(v.log_scale != 0.0);
    const double xi = 2.0 / 3.0 * std::pow(700.0, 1.5);
    CHECK(std::abs(v.log_scale + xi) < 0.01 * xi);
    CHECK(std::isfinite(std::abs(v.ai)));
    CHECK(std::abs(v.ai) > 1e-3);
    CHECK(std::abs(v.ai) < 1.0);
    // growing sector: positive exponent
    AiryValue g = airy(std::polar(700.0, 2.0));
    CHECK(g.log_scale > 600.0);
    CHECK_THROWS_AS(airy(cplx(2e4, 0.0)), std::invalid_argument);
}

TEST_CASE("cubic integral closed form equals quadrature for every class") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> dB(0.1, 4.0), da(-pi, pi), dc(-1.0, 1.0);
    for (int i = 0; i < 40; ++i) {
        const cplx A(dc(rng), dc(rng));
        const cplx B = std::polar(dB(rng), da(rng));
        const cplx c0(dc(rng), dc(rng)), c1(dc(rng), dc(rng));
        CubicIntegralResult r = cubic_oscillatory_integral(A, B, c0, c1);
        if (r.on_boundary) continue;
        const cplx q = cubic_by_quadrature(A, B, c0, c1, r.branch_used);
        CHECK(std::abs(r.value - q) < 1e-6 * (1.0 + std::abs(q)));
    }
}

TEST_CASE("explicit class hints are honored") {
    const cplx A(0.3, 0.0), B(1.7, 0.4), c0(0.8, -0.1), c1(0.2, 0.5);
    for (AiryBranch br : {AiryBranch::principal, AiryBranch::rot_plus, AiryBranch::rot_minus}) {
        CubicIntegralResult r = cubic_oscillatory_integral(A, B, c0, c1, br);
        const cplx q = cubic_by_quadrature(A, B, c0, c1, br);
        CHECK(r.branch_used == br);
        CHECK(std::abs(r.value - q) < 1e-6 * (1.0 + std::abs(q)));
    }
}

TEST_CASE("sector boundaries are flagged") {
    // arg(-B) = pi/3 exactly: on the selection boundary
    const cplx B = -std::polar(1.0, pi / 3);
    CubicIntegralResult r = cubic_oscillatory_integral(0.0, B, 1.0, 0.0);
    CHECK(r.on_boundary);
    CHECK(r.branch_used == AiryBranch::principal);
    // real positive B sits on the anti-Stokes line arg(-B) = pi: flagged,
    // evaluated with the real-line (principal) contour
    CubicIntegralResult fold = cubic_oscillatory_integral(0.0, cplx(2.0, 0.0), 1.0, 0.0);
    CHECK(fold.on_boundary);
    CHECK(fold.branch_used == AiryBranch::principal);
    // forbidden-side B (arg(-B) = 0) is cleanly principal
    CubicIntegralResult ok = cubic_oscillatory_integral(0.0, cplx(-2.0, 0.0), 1.0, 0.0);
    CHECK_FALSE(ok.on_boundary);
    CHECK(ok.branch_used == AiryBranch::principal);
}
