#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "csp/oracle.hpp"
#include "csp/propagators.hpp"
#include "csp/transforms.hpp"

using namespace csp;

namespace {

constexpr cplx kI{0.0, 1.0};

// Diagonal quartic configuration used throughout: z0 = zf with u' = 1/(2 sqrt 2).
Label diag_label(const StateParams& sp) { return Label(0.5, 0.0, sp); }

// Bra label whose target v'' puts the fold of the quartic family exactly at
// T = 1 (root of 1 + 2i u'v' T with u'v' = i/2).
Label fold_label(const StateParams& sp) {
    return Label::from_z(cplx(-0.47307116568439755, 0.21650459272549094), sp);
}

double abs2(cplx z) { return std::norm(z); }

double abs2_err(cplx approx, cplx ref) {
    return std::abs(abs2(approx) - abs2(ref)) / abs2(ref);
}

cplx rand_disk(std::mt19937& rng, double r) {
    std::uniform_real_distribution<double> mag(0.05, r), ang(0.0, 2.0 * pi);
    return std::polar(mag(rng), ang(rng));
}

// Closed flow for the number-quartic family at hbar = 1: the conserved
// n = u(t)v(t) solves n = u0 v'' e^{-i(2n+2)T} (Newton, continued in T), and
// action, correction and tangent element all follow from it. Cheap enough to
// sit inside a double quadrature where the walked propagator is not.
std::optional<cplx> closed_quartic_bare(cplx u0, cplx vpp, double T) {
    cplx n = u0 * vpp;
    for (int k = 1; k <= 24; ++k) {
        const double t = T * k / 24;
        bool converged = false;
        for (int it = 0; it < 40; ++it) {
            const cplx e = std::exp(-kI * (2.0 * n + 2.0) * t);
            const cplx g = n - u0 * vpp * e;
            const cplx gp = 1.0 + 2.0 * kI * t * u0 * vpp * e;
            if (std::abs(gp) < 1e-14) return std::nullopt;
            const cplx dn = g / gp;
            n -= dn;
            if (std::abs(dn) < 1e-13) { converged = true; break; }
        }
        if (!converged) return std::nullopt;
    }
    const cplx lead = 1.0 + 2.0 * kI * n * T;
    const cplx mvv = std::exp(2.0 * kI * (n + 1.0) * T) * lead;
    if (std::abs(mvv) < 1e-12) return std::nullopt;
    const cplx S = (n * n - 0.25) * T - kI * n;
    const cplx G = (2.0 * n + 1.0) * T;
    // arg m_vv unwound along the straight segment 1 -> 1 + 2inT.
    double sigma = 2.0 * T * (n.real() + 1.0);
    cplx prev(1.0, 0.0);
    for (int j = 1; j <= 16; ++j) {
        const cplx cur = 1.0 + 2.0 * kI * n * (T * j / 16.0);
        sigma += std::arg(cur / prev);
        prev = cur;
    }
    return std::exp(kI * (S + G) - kI * 0.5 * sigma) / std::sqrt(std::abs(mvv));
}

}  // namespace

TEST_CASE("oscillator family reproduces the closed propagator") {
    std::mt19937 rng(511);
    StateParams sp;
    for (double omega : {1.0, 1.7}) {
        auto ho = make_model("ho", omega);
        // T = 4.0 pushes omega*T past pi, so the phase unwinding matters.
        for (double T : {0.3, 1.1, 2.6, 4.0}) {
            const Label z0 = Label::from_z(rand_disk(rng, 1.1), sp);
            const Label zf = Label::from_z(rand_disk(rng, 1.1), sp);
            const auto got = bare_propagator(*ho, sp, z0, zf, T);
            const cplx want = ho_closed_propagator(sp, z0, zf, T, omega);
            REQUIRE(got.status == DynStatus::ok);
            CHECK(got.n_traj == 1);
            CHECK(std::abs(got.value - want) <= 1e-9 * std::abs(want));
        }
    }
}

TEST_CASE("trajectory terms match their hand-assembled exponents") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const TrajectoryRecord t =
        integrate(*quartic, sp, cplx(0.3, 0.1), cplx(0.2, -0.4), 1.1, 1e-13);
    REQUIRE(t.status == DynStatus::ok);

    const cplx bare_want = std::exp(kI * (t.S + t.G) / sp.hbar - kI * t.sigma_vv / 2.0) /
                           std::sqrt(std::abs(t.M.m_vv));
    CHECK(std::abs(bare_term(t, sp) - bare_want) <= 1e-14 * std::abs(bare_want));

    const cplx conj_want = std::polar(1.0 / std::sqrt(std::abs(t.M.m_uv)), pi / 4) *
                           std::exp(kI * (t.S + kI * sp.hbar * t.uT * t.vT + t.G) / sp.hbar -
                                    kI * t.sigma_uv / 2.0);
    CHECK(std::abs(conjugate_term(t, sp) - conj_want) <= 1e-14 * std::abs(conj_want));
}

TEST_CASE("assembly is invariant under swapping the stationary pair") {
    std::mt19937 rng(512);
    std::uniform_real_distribution<double> re(-1.5, 1.5);
    for (int rep = 0; rep < 12; ++rep) {
        const cplx A(re(rng), re(rng)), B(re(rng), re(rng));
        const cplx s = std::sqrt(B);
        const cplx fp(re(rng), re(rng)), fm(re(rng), re(rng));
        for (AiryBranch br :
             {AiryBranch::principal, AiryBranch::rot_plus, AiryBranch::rot_minus}) {
            const cplx a = airy_assembly(A, B, s, fp, fm, br);
            const cplx b = airy_assembly(A, B, -s, fm, fp, br);
            CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("quartic family is accurate early and spurious past the fold") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const Label z = diag_label(sp);

    const auto early = bare_propagator(*quartic, sp, z, z, 0.5);
    REQUIRE(early.status == DynStatus::ok);
    CHECK(abs2_err(early.value, exact_propagator(*quartic, sp, z, z, 0.5)) < 0.02);

    double worst = 0.0;
    for (double T : {2.4, 2.5, 2.55, 2.6}) {
        const auto late = bare_propagator(*quartic, sp, z, z, T);
        REQUIRE(late.status == DynStatus::ok);
        worst = std::max(worst, abs2_err(late.value, exact_propagator(*quartic, sp, z, z, T)));
    }
    CHECK(worst > 0.5);
}

TEST_CASE("extra multistart roots are reported or summed on request") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const Label z = diag_label(sp);
    PropagatorOptions opt;
    opt.grid_n = 6;  // the T=3 box holds three well-separated roots

    opt.extra_roots = ExtraRoots::report;
    const auto rep = bare_propagator(*quartic, sp, z, z, 3.0, opt);
    REQUIRE(rep.status == DynStatus::ok);
    CHECK(rep.n_traj == 1);
    CHECK(rep.trajectories.size() == 3);
    CHECK(std::abs(rep.value - bare_term(rep.trajectories.front(), sp)) <=
          1e-12 * std::abs(rep.value));

    opt.extra_roots = ExtraRoots::include;
    const auto inc = bare_propagator(*quartic, sp, z, z, 3.0, opt);
    REQUIRE(inc.status == DynStatus::ok);
    CHECK(inc.n_traj == 3);
    cplx sum = 0.0;
    for (const auto& t : inc.trajectories) sum += bare_term(t, sp);
    CHECK(std::abs(inc.value - sum) <= 1e-12 * std::abs(sum));
}

TEST_CASE("stationary pair exponents land on the cubic at its critical points") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const auto val =
        uniform_propagator(*quartic, sp, diag_label(sp), fold_label(sp), 0.9);
    REQUIRE(val.status == DynStatus::ok);
    REQUIRE(!val.used_fallback);
    REQUIRE(!val.confluent);
    REQUIRE(val.pair.separation > 1e-4);

    // Critical values of A - B X + X^3/3 at X = +-sqrt(B) are A -+ (2/3)B^{3/2},
    // which the construction equates with the two trajectory exponents.
    const cplx A = val.pair.A, W = val.pair.W;
    const cplx up = val.pair.plus.S / sp.hbar;
    const cplx dn = val.pair.minus.S / sp.hbar;
    CHECK(std::abs(A - 2.0 * W / 3.0 - up) <= 1e-8 * std::max(1.0, std::abs(up)));
    CHECK(std::abs(A + 2.0 * W / 3.0 - dn) <= 1e-8 * std::max(1.0, std::abs(dn)));
    CHECK(std::abs(val.pair.B * val.pair.B * val.pair.B - W * W) <=
          1e-10 * std::max(1.0, std::abs(W * W)));
    CHECK(std::abs(val.b_coeff - val.pair.B) == 0.0);
}

TEST_CASE("uniform sweep tracks the oracle where the bare sum fails") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const Label z = diag_label(sp);
    UniformWalker walker(*quartic, sp, z, z, {});

    double bare_early_worst = 0.0, bare_late_worst = 0.0;
    for (int k = 1; k <= 30; ++k) {
        const double T = 0.1 * k;
        const auto val = walker.eval(T);
        REQUIRE(val.status == DynStatus::ok);
        REQUIRE(val.n_traj >= 1);
        REQUIRE(std::isfinite(std::abs(val.value)));
        const cplx ex = exact_propagator(*quartic, sp, z, z, T);
        CHECK(abs2_err(val.value, ex) < 0.12);

        const double be = abs2_err(bare_term(val.trajectories.front(), sp), ex);
        if (T <= 1.5) bare_early_worst = std::max(bare_early_worst, be);
        if (T >= 2.0) bare_late_worst = std::max(bare_late_worst, be);
    }
    CHECK(bare_early_worst < 0.06);
    CHECK(bare_late_worst > 0.5);
}

TEST_CASE("uniform value far from any fold is the bare value") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const Label z = diag_label(sp);
    const auto uni = uniform_propagator(*quartic, sp, z, z, 0.5);
    const auto bare = bare_propagator(*quartic, sp, z, z, 0.5);
    REQUIRE(uni.status == DynStatus::ok);
    CHECK(uni.used_fallback);
    CHECK(std::abs(uni.value - bare.value) <= 1e-12 * std::abs(bare.value));
}

TEST_CASE("uniform value stays finite, accurate and continuous through the fold") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const Label z0 = diag_label(sp), zf = fold_label(sp);
    UniformWalker walker(*quartic, sp, z0, zf, {});

    std::vector<double> mods;
    for (int k = -10; k <= 10; ++k) {
        const double T = 1.0 + 1e-3 * k;
        const auto val = walker.eval(T);
        REQUIRE(val.status == DynStatus::ok);
        REQUIRE(std::isfinite(std::abs(val.value)));
        CHECK(!val.used_fallback);
        mods.push_back(abs2(val.value));

        if (k == 0) {
            const cplx ex = exact_propagator(*quartic, sp, z0, zf, T);
            CHECK(abs2_err(val.value, ex) < 0.05);
            CHECK(std::abs(std::abs(val.value) - std::abs(ex)) < 0.05 * std::abs(ex));
            CHECK(std::abs(val.b_coeff) < 0.05);
            // The bare prefactor blows up on the same trajectory.
            const double bare_ratio = abs2(bare_term(val.trajectories.front(), sp)) / abs2(ex);
            CHECK(bare_ratio > 1e3);
        }
    }
    for (std::size_t k = 1; k < mods.size(); ++k)
        CHECK(std::abs(mods[k] - mods[k - 1]) <= 2e-2 * std::max(mods[k], mods[k - 1]));
}

TEST_CASE("transformed sum agrees with the integral transform of the bare sum") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const Label z0 = diag_label(sp);
    const double T = 0.9;
    const cplx w(2.2, 0.9);

    PropagatorOptions fast;
    fast.walk_step = 0.25;
    fast.tol = 1e-9;  // targets of size ~40 sit above the integrator noise floor
    auto bare_f = [&](cplx zs) -> cplx {
        // The walked branch is reliable out to |z*| ~ 10; past that the kernel
        // has already decayed by e^{-20} against the bare growth.
        if (std::abs(zs) > 10.0) return 0.0;
        const auto val =
            bare_propagator(*quartic, sp, z0, Label::from_z(std::conj(zs), sp), T, fast);
        REQUIRE(val.status == DynStatus::ok);
        return val.value;
    };
    ContourSpec contour;
    contour.n_points = 900;
    const cplx via_transform = conjugate_apply(bare_f, w, contour);
    const cplx ex = exact_conjugate(*quartic, sp, w, z0, T);
    CHECK(std::abs(via_transform - ex) <= 0.02 * std::abs(ex));

    const auto sc = conjugate_propagator(*quartic, sp, w, z0, T);
    REQUIRE(sc.status == DynStatus::ok);
    REQUIRE(sc.n_traj >= 1);
    CHECK(std::isfinite(std::abs(sc.value)));
    // The ray integral keeps a boundary contribution from z* = 0 whose share
    // of the total is bounded below by 1 - |z0|/|w| for this family, so the
    // stationary sum alone tracks the transform in magnitude rather than to
    // quadrature accuracy anywhere the ray converges.
    const double ratio = std::abs(sc.value) / std::abs(via_transform);
    CHECK(ratio > 0.1);
    CHECK(ratio < 10.0);
    WARN(std::abs(sc.value - via_transform) <= 1e-3 * std::abs(via_transform));
}

TEST_CASE("oscillator transformed route degenerates to the pole form") {
    StateParams sp;
    auto ho = make_model("ho");
    const Label z0 = Label::from_z(cplx(0.4, 0.2), sp);
    const double T = 0.8;
    const cplx w(2.0, 0.8);

    // Linear flow: u(T) never depends on v0, so no stationary point exists.
    const auto sc = conjugate_propagator(*ho, sp, w, z0, T);
    CHECK(sc.n_traj == 0);
    CHECK(sc.status == DynStatus::no_root);

    // The pole structure survives in the transform of the bare propagator.
    PropagatorOptions fast;
    fast.walk_step = T;
    fast.tol = 1e-9;  // targets of size ~40 sit above the integrator noise floor
    auto bare_f = [&](cplx zs) -> cplx {
        if (std::abs(zs) > 40.0) return 0.0;
        const auto val = bare_propagator(*ho, sp, z0, Label::from_z(std::conj(zs), sp), T, fast);
        REQUIRE(val.status == DynStatus::ok);
        return val.value;
    };
    const cplx got = conjugate_apply(bare_f, w, {});
    const cplx want = exact_conjugate(*ho, sp, w, z0, T);
    CHECK(std::abs(got - want) <= 1e-4 * std::abs(want));
}

TEST_CASE("transformed propagator grows like the emerging pole as T drops to zero") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const Label z0 = diag_label(sp);
    const double T = 0.01;
    // At T = 0 the transform of the overlap is a pure pole at w = z0; at small
    // T it sits at the drifted endpoint z0 e^{-2iT} and is smoothed only at
    // separations below ~sqrt(T).
    const cplx zeff = z0.z0 * std::exp(cplx(0.0, -2.0 * T));

    PropagatorOptions fast;
    fast.walk_step = T;
    fast.tol = 1e-9;
    auto bare_f = [&](cplx zs) -> cplx {
        if (std::abs(zs) > 40.0) return 0.0;
        const auto val =
            bare_propagator(*quartic, sp, z0, Label::from_z(std::conj(zs), sp), T, fast);
        REQUIRE(val.status == DynStatus::ok);
        return val.value;
    };
    auto on_ray = [&](double delta) { return zeff * (1.0 + delta); };

    // Transform of the bare sum, on the ray where the kernel still decays.
    const cplx far = conjugate_apply(bare_f, on_ray(2.4), {});
    const cplx mid = conjugate_apply(bare_f, on_ray(1.2), {});
    CHECK(std::abs(mid) / std::abs(far) > 1.9);
    CHECK(std::abs(mid) / std::abs(far) < 2.1);
    const cplx mid_ex = exact_conjugate(*quartic, sp, on_ray(1.2), z0, T);
    CHECK(std::abs(mid - mid_ex) <= 1e-3 * std::abs(mid_ex));

    // Closer in, the reference route continues the doubling.
    double prev = std::abs(mid_ex);
    for (double d : {0.6, 0.3}) {
        const double cur = std::abs(exact_conjugate(*quartic, sp, on_ray(d), z0, T));
        CHECK(cur / prev > 1.8);
        CHECK(cur / prev < 2.1);
        prev = cur;
    }
}

TEST_CASE("steepest-descent inverse undoes the transform of the bare sum") {
    StateParams sp;
    auto quartic = make_model("quartic-number");
    const Label z0 = diag_label(sp);
    const cplx u0 = z0.z0;
    const double T = 0.7;
    // Wedge geometry: with arg z* = -0.88 every node of the inverse contour
    // calls the forward transform along a ray clear of the fold directions of
    // the continued family (args between pi/2 and ~2.97 at this T).
    const cplx zs = 0.65 * std::exp(cplx(0.0, -0.88));

    int dropped = 0;
    auto f_bare = [&](cplx vpp) -> cplx {
        const auto val = closed_quartic_bare(u0, vpp, T);
        if (!val) { ++dropped; return cplx(0.0); }
        return *val;
    };
    // The closed flow must agree with the walked propagator before it feeds
    // the double quadrature.
    PropagatorOptions opt;
    for (cplx probe : {zs, cplx(0.65, 0.5), cplx(1.2, 0.3)}) {
        const auto ref =
            bare_propagator(*quartic, sp, z0, Label::from_z(std::conj(probe), sp), T, opt);
        REQUIRE(ref.status == DynStatus::ok);
        REQUIRE(std::abs(f_bare(probe) - ref.value) <= 1e-10 * std::abs(ref.value));
    }

    ContourSpec inner;
    inner.n_points = 600;
    auto ftil = [&](cplx w) { return conjugate_apply(f_bare, w, inner); };
    ContourSpec outer;
    outer.kind = ContourSpec::Kind::shifted_line;
    outer.n_points = 240;
    const cplx got = conjugate_invert(ftil, zs, outer);

    const auto bare = bare_propagator(*quartic, sp, z0, Label::from_z(std::conj(zs), sp), T);
    REQUIRE(bare.status == DynStatus::ok);
    CHECK(std::abs(got - bare.value) <= 1e-3 * std::abs(bare.value));
    CHECK(dropped == 0);
}
