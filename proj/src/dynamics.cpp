#include "csp/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace csp {

const char* to_string(DynStatus s) {
    switch (s) {
        case DynStatus::ok: return "ok";
        case DynStatus::step_underflow: return "step_underflow";
        case DynStatus::no_root: return "no_root";
        case DynStatus::caustic_adjacent: return "caustic_adjacent";
        case DynStatus::not_found: return "not_found";
    }
    return "unknown";
}

namespace {

// State layout: u, v, m_uu, m_uv, m_vu, m_vv, S_int, G.
// S_int accumulates (1/2)(u h_u + v h_v) - h; the boundary term is added at
// the end so that S(0) = -i hbar u0 v0.
using State = std::array<cplx, 8>;

State rhs(const ModelSymbol& model, const StateParams& sp, const State& y) {
    const SymbolJet j = symbol_jet(model, y[0], y[1], sp);
    const cplx ih = cplx(0, 1) / sp.hbar;
    State d;
    d[0] = -ih * j.h_v;
    d[1] = ih * j.h_u;
    d[2] = -ih * (j.h_uv * y[2] + j.h_vv * y[4]);
    d[3] = -ih * (j.h_uv * y[3] + j.h_vv * y[5]);
    d[4] = ih * (j.h_uu * y[2] + j.h_uv * y[4]);
    d[5] = ih * (j.h_uu * y[3] + j.h_uv * y[5]);
    d[6] = 0.5 * (y[0] * j.h_u + y[1] * j.h_v) - j.h;
    d[7] = 0.5 * j.h_uv;
    return d;
}

// Dormand-Prince 5(4) tableau.
constexpr double A2[] = {1.0 / 5};
constexpr double A3[] = {3.0 / 40, 9.0 / 40};
constexpr double A4[] = {44.0 / 45, -56.0 / 15, 32.0 / 9};
constexpr double A5[] = {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729};
constexpr double A6[] = {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
                         -5103.0 / 18656};
constexpr double B5[] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784,
                         11.0 / 84, 0.0};
constexpr double ERR[] = {71.0 / 57600, 0.0, -71.0 / 16695, 71.0 / 1920,
                          -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

struct StepResult {
    State y;
    double err;
};

StepResult dp5_step(const ModelSymbol& model, const StateParams& sp, const State& y,
                    double h, double tol) {
    std::array<State, 7> k;
    k[0] = rhs(model, sp, y);
    auto stage = [&](const double* a, int n) {
        State yt = y;
        for (int i = 0; i < 8; ++i)
            for (int s = 0; s < n; ++s) yt[i] += h * a[s] * k[s][i];
        return yt;
    };
    k[1] = rhs(model, sp, stage(A2, 1));
    k[2] = rhs(model, sp, stage(A3, 2));
    k[3] = rhs(model, sp, stage(A4, 3));
    k[4] = rhs(model, sp, stage(A5, 4));
    k[5] = rhs(model, sp, stage(A6, 5));
    State ynew = stage(B5, 6);
    k[6] = rhs(model, sp, ynew);

    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
        cplx e = 0.0;
        for (int s = 0; s < 7; ++s) e += h * ERR[s] * k[s][i];
        const double sc = tol + tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        const double r = std::abs(e) / sc;
        acc += r * r;
    }
    return {ynew, std::sqrt(acc / 8.0)};
}

}  // namespace

TrajectoryRecord integrate(const ModelSymbol& model, const StateParams& sp,
                           cplx u0, cplx v0, double T, double tol) {
    if (!(tol >= 1e-13 && tol <= 1e-6))
        throw std::invalid_argument("integrate: tol outside [1e-13, 1e-6]");
    if (!(T >= 0.0)) throw std::invalid_argument("integrate: T must be >= 0");

    TrajectoryRecord rec;
    rec.u0 = u0;
    rec.v0 = v0;
    rec.T = T;

    State y{u0, v0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0};
    double t = 0.0;
    double h = std::min(T > 0 ? T : 1.0, 1e-3);
    const double h_floor = 1e-14 * std::max(T, 1.0);
    double sigma_vv = 0.0, sigma_uv = 0.0;
    bool sigma_uv_seeded = false;
    StepDiagnostics diag;
    diag.min_step = T;

    while (t < T) {
        h = std::min(h, T - t);
        if (h < h_floor) {
            rec.status = DynStatus::step_underflow;
            break;
        }
        StepResult sr = dp5_step(model, sp, y, h, tol);
        bool accept = sr.err <= 1.0;
        double dvv = 0.0, duv = 0.0;
        if (accept) {
            // Phase unwinding is only trustworthy if neither tracked arg
            // moved by pi/2 or more within the step.
            dvv = std::arg(sr.y[5] / y[5]);
            if (std::abs(dvv) >= pi / 2) accept = false;
            if (accept && std::abs(y[3]) > 0.0 && std::abs(sr.y[3]) > 0.0) {
                duv = std::arg(sr.y[3] / y[3]);
                if (std::abs(duv) >= pi / 2) accept = false;
            }
        }
        if (accept) {
            sigma_vv += dvv;
            if (!sigma_uv_seeded) {
                if (std::abs(sr.y[3]) > 0.0) {
                    sigma_uv = std::arg(sr.y[3]);
                    sigma_uv_seeded = true;
                }
            } else {
                sigma_uv += duv;
            }
            y = sr.y;
            t += h;
            ++diag.n_steps;
            diag.min_step = std::min(diag.min_step, h);
            const double grow =
                sr.err > 0.0 ? 0.9 * std::pow(sr.err, -0.2) : 5.0;
            h *= std::clamp(grow, 0.2, 5.0);
        } else {
            ++diag.n_rejected;
            h *= 0.5;
        }
    }

    rec.uT = y[0];
    rec.vT = y[1];
    rec.M = {y[2], y[3], y[4], y[5]};
    rec.S = y[6] - cplx(0, 0.5) * sp.hbar * (y[0] * y[1] + u0 * v0);
    rec.G = y[7];
    rec.sigma_vv = sigma_vv;
    rec.sigma_uv = sigma_uv;
    rec.diag = diag;
    return rec;
}

TrajectoryRecord solve_bvp(const BvpProblem& problem, cplx guess_v0, double tol) {
    if (problem.model == nullptr)
        throw std::invalid_argument("solve_bvp: problem.model is null");
    const double itol = 1e-13;
    const ModelSymbol& model = *problem.model;
    auto shoot = [&](cplx v0) {
        return integrate(model, problem.params, problem.u0, v0, problem.T, itol);
    };
    auto residual = [&](const TrajectoryRecord& r) {
        return (problem.kind == BvpKind::VV ? r.vT : r.uT) - problem.target;
    };
    auto jacobian = [&](const TrajectoryRecord& r) {
        return problem.kind == BvpKind::VV ? r.M.m_vv : r.M.m_uv;
    };

    cplx v0 = guess_v0;
    TrajectoryRecord rec = shoot(v0);
    if (rec.status != DynStatus::ok) return rec;
    cplx res = residual(rec);

    for (int it = 0; it < 50; ++it) {
        if (std::abs(res) < tol) return rec;
        const cplx J = jacobian(rec);
        if (std::abs(J) < 1e-12) {
            rec.status = DynStatus::caustic_adjacent;
            return rec;
        }
        cplx step = res / J;
        bool improved = false;
        for (int halving = 0; halving < 8; ++halving) {
            TrajectoryRecord trial;
            try {
                trial = shoot(v0 - step);
            } catch (const std::domain_error&) {
                step *= 0.5;  // flow left the symbol's domain; pull back
                continue;
            }
            if (trial.status != DynStatus::ok) { step *= 0.5; continue; }
            const cplx trial_res = residual(trial);
            if (std::abs(trial_res) < std::abs(res) || halving == 7) {
                v0 -= step;
                rec = trial;
                res = trial_res;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    if (std::abs(res) >= tol) rec.status = DynStatus::no_root;
    return rec;
}

std::vector<TrajectoryRecord> find_all_roots(const BvpProblem& problem,
                                             const SearchBox& box, int grid_n,
                                             double tol, std::uint64_t seed) {
    if (grid_n < 2) throw std::invalid_argument("find_all_roots: grid_n must be >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);
    const double dre = (box.re_max - box.re_min) / (grid_n - 1);
    const double dim = (box.im_max - box.im_min) / (grid_n - 1);

    std::vector<TrajectoryRecord> roots;
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            double re = box.re_min + i * dre;
            double im = box.im_min + j * dim;
            if (seed != 0) {
                re += jitter(rng) * dre;
                im += jitter(rng) * dim;
            }
            TrajectoryRecord r;
            try {
                r = solve_bvp(problem, cplx(re, im), tol);
            } catch (const std::domain_error&) {
                continue;
            }
            if (r.status != DynStatus::ok) continue;
            if (r.v0.real() < box.re_min - 0.5 || r.v0.real() > box.re_max + 0.5 ||
                r.v0.imag() < box.im_min - 0.5 || r.v0.imag() > box.im_max + 0.5)
                continue;
            bool dup = false;
            for (const auto& known : roots)
                if (std::abs(known.v0 - r.v0) < 1e-7) { dup = true; break; }
            if (!dup) roots.push_back(r);
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const TrajectoryRecord& a, const TrajectoryRecord& b) {
                  if (a.v0.real() != b.v0.real()) return a.v0.real() < b.v0.real();
                  return a.v0.imag() < b.v0.imag();
              });
    return roots;
}

CausticResult locate_caustic(const BvpProblem& base, cplx guess_v0,
                             double T_lo, double T_hi, double tol) {
    CausticResult out;
    if (!(T_lo > 0.0 && T_hi > T_lo))
        throw std::invalid_argument("locate_caustic: need 0 < T_lo < T_hi");

    auto at = [&](double T, cplx seed) {
        BvpProblem p = base;
        p.T = T;
        return solve_bvp(p, seed, tol);
    };

    // Continue the family across [T_lo, T_hi] on a coarse grid first.
    const int n = 61;
    std::vector<double> Ts(n), mvv(n);
    std::vector<cplx> v0s(n);
    cplx seed = guess_v0;
    for (int i = 0; i < n; ++i) {
        const double T = T_lo + (T_hi - T_lo) * i / (n - 1);
        TrajectoryRecord r = at(T, seed);
        if (r.status == DynStatus::no_root || r.status == DynStatus::step_underflow)
            return out;
        Ts[i] = T;
        mvv[i] = std::abs(r.M.m_vv);
        v0s[i] = r.v0;
        seed = r.v0;
    }
    int imin = 1;
    for (int i = 1; i + 1 < n; ++i)
        if (mvv[i] < mvv[imin]) imin = i;
    if (!(mvv[imin] < mvv[0] && mvv[imin] < mvv[n - 1])) return out;

    // Golden-section refinement of |m_vv(T)| on the bracketing interval.
    double a = Ts[imin - 1], b = Ts[imin + 1];
    cplx sa = v0s[imin - 1];
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    auto value = [&](double T) {
        TrajectoryRecord r = at(T, sa);
        sa = r.v0;
        return std::make_pair(std::abs(r.M.m_vv), r);
    };
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    auto [f1, r1] = value(x1);
    auto [f2, r2] = value(x2);
    for (int it = 0; it < 80 && (b - a) > 1e-12; ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1; r2 = r1;
            x1 = b - gr * (b - a);
            std::tie(f1, r1) = value(x1);
        } else {
            a = x1; x1 = x2; f1 = f2; r1 = r2;
            x2 = a + gr * (b - a);
            std::tie(f2, r2) = value(x2);
        }
    }
    const bool pick1 = f1 < f2;
    const double fbest = pick1 ? f1 : f2;
    if (fbest >= 1e-6) return out;
    out.status = DynStatus::ok;
    out.T_c = pick1 ? x1 : x2;
    out.traj = pick1 ? r1 : r2;
    return out;
}

}  // namespace csp
