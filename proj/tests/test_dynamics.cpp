#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csp/dynamics.hpp"

using namespace csp;

namespace {

const StateParams kSp;
std::mt19937 rng(31);

cplx rand_c(double r) {
    std::uniform_real_distribution<double> d(-r, r);
    return {d(rng), d(rng)};
}

// Caustic-bearing quartic family used across the suite: u' = 1/(2 sqrt 2)
// and target v'' chosen so the fold sits at T = 1.
const double kUp = 0.35355339059327373;
const cplx kVppCaustic{-0.47307116568439755, -0.21650459272549094};

}  // namespace

TEST_CASE("T = 0 is the identity record") {
    auto q = make_model("quartic-number");
    cplx u0(0.4, -0.2), v0(0.9, 0.1);
    TrajectoryRecord r = integrate(*q, kSp, u0, v0, 0.0, 1e-11);
    CHECK(r.uT == u0);
    CHECK(r.vT == v0);
    CHECK(std::abs(r.M.m_uu - 1.0) == 0.0);
    CHECK(std::abs(r.M.m_uv) == 0.0);
    CHECK(std::abs(r.S - (-cplx(0, 1) * kSp.hbar * u0 * v0)) < 1e-15);
    CHECK(r.sigma_vv == 0.0);
}

TEST_CASE("integrator preconditions") {
    auto q = make_model("quartic-number");
    CHECK_THROWS_AS(integrate(*q, kSp, 0.1, 0.1, 1.0, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(integrate(*q, kSp, 0.1, 0.1, 1.0, 1e-14), std::invalid_argument);
    CHECK_THROWS_AS(integrate(*q, kSp, 0.1, 0.1, -1.0, 1e-11), std::invalid_argument);
}

TEST_CASE("tangent matrix is symplectic") {
    auto q = make_model("quartic-number");
    auto ho = make_model("ho", 1.3);
    for (int i = 0; i < 12; ++i) {
        cplx u0 = rand_c(1.1), v0 = rand_c(1.1);
        for (const ModelSymbol* m : {q.get(), ho.get()}) {
            TrajectoryRecord r = integrate(*m, kSp, u0, v0, 1.7, 1e-12);
            REQUIRE(r.status == DynStatus::ok);
            CHECK(std::abs(r.M.det() - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("tangent matrix matches finite differences") {
    auto q = make_model("quartic-number");
    const double eps = 1e-6;
    for (int i = 0; i < 6; ++i) {
        cplx u0 = rand_c(1.0), v0 = rand_c(1.0);
        TrajectoryRecord r = integrate(*q, kSp, u0, v0, 1.3, 1e-12);
        auto at = [&](cplx du, cplx dv) {
            return integrate(*q, kSp, u0 + du, v0 + dv, 1.3, 1e-12);
        };
        TrajectoryRecord up = at(eps, 0), um = at(-eps, 0);
        TrajectoryRecord vp = at(0, eps), vm = at(0, -eps);
        const double scale = 1.0 + std::abs(r.M.m_vv) + std::abs(r.M.m_uv);
        CHECK(std::abs((up.uT - um.uT) / (2 * eps) - r.M.m_uu) < 1e-5 * scale);
        CHECK(std::abs((vp.uT - vm.uT) / (2 * eps) - r.M.m_uv) < 1e-5 * scale);
        CHECK(std::abs((up.vT - um.vT) / (2 * eps) - r.M.m_vu) < 1e-5 * scale);
        CHECK(std::abs((vp.vT - vm.vT) / (2 * eps) - r.M.m_vv) < 1e-5 * scale);
    }
}

TEST_CASE("energy is conserved along trajectories") {
    auto q = make_model("quartic-number");
    for (int i = 0; i < 8; ++i) {
        cplx u0 = rand_c(1.1), v0 = rand_c(1.1);
        TrajectoryRecord r = integrate(*q, kSp, u0, v0, 2.0, 1e-12);
        cplx h0 = q->jet(u0, v0, kSp).h;
        cplx hT = q->jet(r.uT, r.vT, kSp).h;
        CHECK(std::abs(hT - h0) < 1e-9 * (1.0 + std::abs(h0)));
    }
}

TEST_CASE("action derivatives recover the boundary momenta") {
    // dS/dv'' picks out u(T), dS/du' picks out v(0), and for the swapped
    // generating function dStilde/du'' picks out -v''/(i/hbar) terms.
    auto q = make_model("quartic-number");
    const double d = 1e-5;
    BvpProblem p{BvpKind::VV, cplx(0.45, 0.1), cplx(0.6, -0.35), 1.1, q.get(), kSp};
    TrajectoryRecord base = solve_bvp(p, p.target, 1e-12);
    REQUIRE(base.status == DynStatus::ok);
    const cplx ih = cplx(0, 1) / kSp.hbar;

    auto S_of = [&](cplx u0, cplx target) {
        BvpProblem pp = p;
        pp.u0 = u0;
        pp.target = target;
        TrajectoryRecord r = solve_bvp(pp, base.v0, 1e-12);
        REQUIRE(r.status == DynStatus::ok);
        return r.S;
    };
    cplx dSdv = (S_of(p.u0, p.target + d) - S_of(p.u0, p.target - d)) / (2.0 * d);
    CHECK(std::abs(ih * dSdv - base.uT) < 1e-4 * (1.0 + std::abs(base.uT)));
    cplx dSdu = (S_of(p.u0 + d, p.target) - S_of(p.u0 - d, p.target)) / (2.0 * d);
    CHECK(std::abs(ih * dSdu - base.v0) < 1e-4 * (1.0 + std::abs(base.v0)));

    // UU form: Stilde = S + i hbar u'' v'' as a function of (u', u'')
    BvpProblem pu{BvpKind::UU, p.u0, base.uT, 1.1, q.get(), kSp};
    auto St_of = [&](cplx target) {
        BvpProblem pp = pu;
        pp.target = target;
        TrajectoryRecord r = solve_bvp(pp, base.v0, 1e-12);
        REQUIRE(r.status == DynStatus::ok);
        return r.S + cplx(0, 1) * kSp.hbar * r.uT * r.vT;
    };
    cplx dStdu = (St_of(base.uT + d) - St_of(base.uT - d)) / (2.0 * d);
    CHECK(std::abs(-ih * dStdu - base.vT) < 1e-4 * (1.0 + std::abs(base.vT)));
}

TEST_CASE("harmonic oscillator flow is a rotation") {
    const double w = 1.3;
    auto ho = make_model("ho", w);
    cplx u0(0.7, 0.2), v0(-0.4, 0.5);
    for (double T : {0.9, 3.0, 6.5}) {  // last one pushes omega T past 2 pi
        TrajectoryRecord r = integrate(*ho, kSp, u0, v0, T, 1e-12);
        const cplx rot = std::exp(cplx(0, -w * T));
        CHECK(std::abs(r.uT - u0 * rot) < 1e-10);
        CHECK(std::abs(r.vT - v0 / rot) < 1e-10);
        CHECK(std::abs(r.M.m_uu - rot) < 1e-10);
        CHECK(std::abs(r.M.m_vv - 1.0 / rot) < 1e-10);
        CHECK(std::abs(r.M.m_uv) < 1e-12);
        CHECK(std::abs(r.M.m_vu) < 1e-12);
        // unwound phase keeps growing, no wrap at pi
        CHECK(r.sigma_vv == doctest::Approx(w * T).epsilon(1e-9));
        CHECK(std::abs(r.G - 0.5 * kSp.hbar * w * T) < 1e-10);
    }
}

TEST_CASE("quartic flow against the closed form") {
    auto q = make_model("quartic-number");
    cplx u0(0.5, -0.15), v0(0.8, 0.3);
    const cplx n = u0 * v0;
    for (double T : {0.7, 2.3}) {
        TrajectoryRecord r = integrate(*q, kSp, u0, v0, T, 1e-12);
        const cplx rot = std::exp(cplx(0, 1) * (2.0 * n + 2.0) * T);
        CHECK(std::abs(r.uT * r.vT - n) < 1e-10);
        CHECK(std::abs(r.vT - v0 * rot) < 1e-9);
        CHECK(std::abs(r.uT - u0 / rot) < 1e-9);
        CHECK(std::abs(r.M.m_vv - rot * (1.0 + 2.0 * cplx(0, 1) * n * T)) < 1e-8);
        CHECK(std::abs(r.M.m_uv - (-2.0 * cplx(0, 1) * T * u0 * u0 / rot)) < 1e-8);
        CHECK(std::abs(r.S - ((n * n - 0.25) * T - cplx(0, 1) * kSp.hbar * n)) < 1e-9);
        CHECK(std::abs(r.G - (2.0 * n + 1.0) * T) < 1e-9);
    }
}

TEST_CASE("unwound phases are resolution independent") {
    auto q = make_model("quartic-number");
    cplx u0(0.6, 0.1), v0(0.7, -0.2);
    TrajectoryRecord coarse = integrate(*q, kSp, u0, v0, 2.5, 1e-9);
    TrajectoryRecord fine = integrate(*q, kSp, u0, v0, 2.5, 1e-12);
    CHECK(std::abs(coarse.sigma_vv - fine.sigma_vv) < 1e-6);
    CHECK(std::abs(coarse.sigma_uv - fine.sigma_uv) < 1e-6);
}

TEST_CASE("bvp solver hits the target") {
    auto q = make_model("quartic-number");
    BvpProblem p{BvpKind::VV, cplx(0.5, 0.0), cplx(-0.3, 0.6), 0.9, q.get(), kSp};
    TrajectoryRecord r = solve_bvp(p, cplx(0.0, 0.0), 1e-12);
    REQUIRE(r.status == DynStatus::ok);
    CHECK(std::abs(r.vT - p.target) < 1e-12);
    CHECK(r.u0 == p.u0);

    BvpProblem pu{BvpKind::UU, cplx(0.5, 0.0), cplx(0.2, 0.1), 0.9, q.get(), kSp};
    TrajectoryRecord ru = solve_bvp(pu, cplx(0.4, 0.2), 1e-12);
    REQUIRE(ru.status == DynStatus::ok);
    CHECK(std::abs(ru.uT - pu.target) < 1e-12);
}

TEST_CASE("harmonic oscillator bvp is linear with a unique root") {
    const double w = 0.8;
    auto ho = make_model("ho", w);
    BvpProblem p{BvpKind::VV, cplx(0.3, 0.3), cplx(0.9, -0.4), 1.7, ho.get(), kSp};
    const cplx expect = p.target * std::exp(cplx(0, -w * 1.7));
    auto roots = find_all_roots(p, {-3, 3, -3, 3}, 6, 1e-12);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0].v0 - expect) < 1e-10);
    // degenerate UU problem: u(T) does not depend on v0 at all
    BvpProblem pu{BvpKind::UU, cplx(0.3, 0.3), cplx(0.9, -0.4), 1.7, ho.get(), kSp};
    TrajectoryRecord ru = solve_bvp(pu, cplx(0.1, 0.1), 1e-12);
    CHECK(ru.status == DynStatus::caustic_adjacent);
}

TEST_CASE("targets beyond the attainable precision report no root") {
    // |v(T)| ~ 1e4 leaves an integration-error floor far above the Newton
    // tolerance, so convergence to 1e-12 is impossible.
    auto q = make_model("quartic-number");
    BvpProblem p{BvpKind::VV, cplx(0.3, 0.0), cplx(1e4, 1e4), 1.0, q.get(), kSp};
    TrajectoryRecord r = solve_bvp(p, cplx(0.2, 0.1), 1e-12);
    CHECK(r.status == DynStatus::no_root);
}

TEST_CASE("multistart dedupes and sorts") {
    auto q = make_model("quartic-number");
    BvpProblem p{BvpKind::VV, cplx(kUp, 0.0), kVppCaustic, 1.35, q.get(), kSp};
    auto roots = find_all_roots(p, {-3, 3, -3, 3}, 10, 1e-12);
    REQUIRE(roots.size() >= 2);
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        CHECK(std::abs(roots[i].v0 - roots[i + 1].v0) > 1e-7);
        const bool ordered =
            roots[i].v0.real() < roots[i + 1].v0.real() ||
            (roots[i].v0.real() == roots[i + 1].v0.real() &&
             roots[i].v0.imag() <= roots[i + 1].v0.imag());
        CHECK(ordered);
    }
    for (const auto& r : roots) CHECK(std::abs(r.vT - kVppCaustic) < 1e-11);
}

TEST_CASE("fold of the quartic family is located") {
    auto q = make_model("quartic-number");
    BvpProblem p{BvpKind::VV, cplx(kUp, 0.0), kVppCaustic, 1.0, q.get(), kSp};
    // seed with the T -> 0 family branch: root near v'' itself
    CausticResult c = locate_caustic(p, kVppCaustic, 0.5, 1.5, 1e-12);
    REQUIRE(c.status == DynStatus::ok);
    CHECK(std::abs(c.T_c - 1.0) < 1e-4);
    CHECK(std::abs(c.traj.M.m_vv) < 1e-6);
    // fold condition for the quartic closed form
    const cplx cond = 1.0 + 2.0 * cplx(0, 1) * (c.traj.u0 * c.traj.v0) * c.T_c;
    CHECK(std::abs(cond) < 1e-5);
}

TEST_CASE("harmonic oscillator never folds") {
    auto ho = make_model("ho", 1.1);
    BvpProblem p{BvpKind::VV, cplx(0.4, 0.0), cplx(0.8, 0.1), 1.0, ho.get(), kSp};
    CausticResult c = locate_caustic(p, cplx(0.5, 0.0), 0.3, 3.0, 1e-12);
    CHECK(c.status == DynStatus::not_found);
}
