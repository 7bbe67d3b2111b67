#include "csp/propagators.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace csp {

namespace {

constexpr cplx kI(0.0, 1.0);
// Integrator tolerance behind every trajectory record; matches solve_bvp.
constexpr double kInnerTol = 1e-13;

// Contour-class labels name the pair of descent rays joined by the contour:
// L = upper-left, R = right, D = down. LR is the principal class.
AiryBranch class_of(const std::string& label) {
    if (label.rfind("DR", 0) == 0) return AiryBranch::rot_minus;
    if (label.rfind("LD", 0) == 0) return AiryBranch::rot_plus;
    return AiryBranch::principal;
}

cplx lookup(const std::vector<std::pair<std::string, cplx>>& items,
            const std::string& label) {
    for (const auto& it : items)
        if (it.first == label) return it.second;
    throw std::logic_error("uniform walker: candidate label vanished");
}

// Slowly varying part of the transformed exponent:
//   R = G + (i hbar/2) ln|m_uv| - (hbar/2) sigma_uv,
// so that e^{iR/hbar} = e^{iG/hbar} e^{-i sigma_uv/2} / sqrt|m_uv|.
cplx slow_part(const TrajectoryRecord& r, double hbar) {
    return r.G + cplx(0.0, 0.5 * hbar) * std::log(std::abs(r.M.m_uv)) -
           0.5 * hbar * r.sigma_uv;
}

bool inside(const SearchBox& box, cplx v) {
    return v.real() >= box.re_min && v.real() <= box.re_max &&
           v.imag() >= box.im_min && v.imag() <= box.im_max;
}

// Budgeted Newton triage for one lattice start. Runs at a coarser integrator
// tolerance with a short leash, extends the leash only for starts that are
// clearly heading somewhere, and bails as soon as the iterate walks into an
// already known root. Survivors are polished by solve_bvp at full precision.
struct ScanOutcome {
    bool promising = false;
    bool duplicate = false;
    cplx v0{};
};

ScanOutcome scan_start(const BvpProblem& prob, cplx v0,
                       const std::vector<TrajectoryRecord>& known) {
    constexpr double kScanIntegTol = 1e-11;
    constexpr int kLeash = 10, kExtended = 30;
    ScanOutcome out;
    double resid = std::numeric_limits<double>::infinity();
    int budget = kLeash;
    for (int it = 0; it < budget; ++it) {
        for (const auto& q : known) {
            if (std::abs(v0 - q.v0) <= 1e-7) {
                out.duplicate = true;
                return out;
            }
        }
        TrajectoryRecord r;
        try {
            r = integrate(*prob.model, prob.params, prob.u0, v0, prob.T, kScanIntegTol);
        } catch (const std::domain_error&) {
            return out;
        }
        if (r.status != DynStatus::ok) return out;
        const cplx end = prob.kind == BvpKind::VV ? r.vT : r.uT;
        const cplx deriv = prob.kind == BvpKind::VV ? r.M.m_vv : r.M.m_uv;
        resid = std::abs(end - prob.target);
        if (resid < 1e-8) {
            out.promising = true;
            out.v0 = v0;
            return out;
        }
        if (it == kLeash - 1 && budget == kLeash && resid < 1e-2) budget = kExtended;
        if (std::abs(deriv) < 1e-12) return out;
        cplx step = (end - prob.target) / deriv;
        // crude damping: never jump farther than a box diagonal
        const double cap = 10.0;
        if (std::abs(step) > cap) step *= cap / std::abs(step);
        v0 -= step;
    }
    return out;
}

}  // namespace

const char* to_string(Method m) {
    switch (m) {
        case Method::bare: return "bare";
        case Method::conjugate: return "conjugate";
        case Method::uniform: return "uniform";
        case Method::exact: return "exact";
    }
    return "?";
}

cplx bare_term(const TrajectoryRecord& t, const StateParams& sp) {
    return std::exp(kI * (t.S + t.G) / sp.hbar - kI * 0.5 * t.sigma_vv) /
           std::sqrt(std::abs(t.M.m_vv));
}

cplx conjugate_term(const TrajectoryRecord& t, const StateParams& sp) {
    const cplx S_t = t.S + kI * sp.hbar * t.uT * t.vT;
    return std::sqrt(kI / std::abs(t.M.m_uv)) *
           std::exp(kI * (S_t + t.G) / sp.hbar - kI * 0.5 * t.sigma_uv);
}

cplx airy_assembly(cplx A, cplx B, cplx sqrt_b, cplx f_plus, cplx f_minus,
                   AiryBranch branch) {
    const cplx c0 = 0.5 * (f_plus + f_minus);
    const cplx c1 = (f_plus - f_minus) / (2.0 * sqrt_b);
    return cubic_oscillatory_integral(A, B, c0, c1, branch).value;
}

UniformWalker::UniformWalker(const ModelSymbol& model, const StateParams& sp,
                             const Label& z0, const Label& zf,
                             const PropagatorOptions& opt)
    : model_(&model), sp_(sp), opt_(opt), u0_(z0.z0), vpp_(std::conj(zf.z0)) {}

std::vector<TrajectoryRecord> UniformWalker::step_to(double T) {
    BvpProblem prob;
    prob.kind = BvpKind::VV;
    prob.u0 = u0_;
    prob.target = vpp_;
    prob.T = T;
    prob.model = model_;
    prob.params = sp_;

    std::vector<TrajectoryRecord> roots;
    auto keep = [&](const TrajectoryRecord& r) {
        if (r.status != DynStatus::ok) return;
        if (!inside(opt_.box, r.v0)) return;
        for (const auto& q : roots)
            if (std::abs(r.v0 - q.v0) <= 1e-7) return;
        roots.push_back(r);
    };
    auto polish = [&](cplx guess) {
        try {
            keep(solve_bvp(prob, guess, opt_.tol));
        } catch (const std::domain_error&) {
        }
    };

    // Warm seeds first: the family, then every root carried from the last
    // stop. The fresh lattice below only has to discover entrants.
    if (have_family_) polish(family_);
    for (const cplx v : carried_) polish(v);

    std::mt19937_64 rng(opt_.seed);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);
    const double dre = (opt_.box.re_max - opt_.box.re_min) / (opt_.grid_n - 1);
    const double dim = (opt_.box.im_max - opt_.box.im_min) / (opt_.grid_n - 1);
    for (int i = 0; i < opt_.grid_n; ++i) {
        for (int j = 0; j < opt_.grid_n; ++j) {
            double re = opt_.box.re_min + i * dre;
            double im = opt_.box.im_min + j * dim;
            if (opt_.seed != 0) {
                re += jitter(rng) * dre;
                im += jitter(rng) * dim;
            }
            const ScanOutcome sc = scan_start(prob, cplx(re, im), roots);
            if (sc.promising) polish(sc.v0);
        }
    }
    carried_.clear();
    for (const auto& r : roots) carried_.push_back(r.v0);
    if (roots.empty()) return roots;

    const cplx ref = have_family_ ? family_ : vpp_;
    const TrajectoryRecord* best = &roots.front();
    for (const auto& r : roots)
        if (std::abs(r.v0 - ref) < std::abs(best->v0 - ref)) best = &r;
    family_ = best->v0;
    have_family_ = true;
    return roots;
}

cplx UniformWalker::third_derivative(const TrajectoryRecord& r) const {
    const double h = 1e-5;
    const TrajectoryRecord p = integrate(*model_, sp_, u0_, r.v0 + h, r.T, kInnerTol);
    const TrajectoryRecord m = integrate(*model_, sp_, u0_, r.v0 - h, r.T, kInnerTol);
    const cplx chi_p = kI * p.M.m_vv / p.M.m_uv;
    const cplx chi_m = kI * m.M.m_vv / m.M.m_uv;
    return (chi_p - chi_m) / (2.0 * h) / r.M.m_uv;
}

UniformWalker::CandSet UniformWalker::pair_candidates(const TrajectoryRecord& ra,
                                                      const TrajectoryRecord& rb) const {
    const double hb = sp_.hbar;
    const cplx dS = ra.S - rb.S;
    const double sep = std::abs(ra.uT - rb.uT);

    // The cubic half-spread: from the action difference when the pair is
    // resolved, from the local third derivative when it is nearly merged and
    // the difference would be all cancellation.
    cplx W;
    if (std::abs(dS) > 1e-12 * hb && sep >= 1e-4) {
        W = -0.75 * dS / hb;
    } else {
        const cplx chi3 = 0.5 * (third_derivative(ra) + third_derivative(rb));
        const cplx d = 0.5 * (ra.uT - rb.uT);
        W = 0.5 * chi3 * d * d * d;
    }
    const cplx A = 0.5 * (ra.S + rb.S) / hb;
    const cplx B = std::pow(W, 2.0 / 3.0);
    const cplx s = std::sqrt(B);

    // Square-root branch of each prefactor: referee against the bare term of
    // its own trajectory, which the far-from-caustic limit must reproduce.
    cplx f[2];
    const TrajectoryRecord* recs[2] = {&ra, &rb};
    for (int k = 0; k < 2; ++k) {
        const double sgn = (k == 0) ? 1.0 : -1.0;
        const TrajectoryRecord& r = *recs[k];
        cplx fi = std::exp(kI * slow_part(r, hb) / hb) *
                  std::sqrt(sgn * 2.0 * s * r.M.m_uv / (kI * r.M.m_vv));
        const cplx c = fi * std::exp(kI * (A - sgn * (2.0 / 3.0) * W)) /
                       std::sqrt(-sgn * 2.0 * kI * s);
        if (std::real(c / bare_term(r, sp_)) < 0.0) fi = -fi;
        f[k] = fi;
    }
    cplx fp = f[0], fm = f[1];

    // Close to the caustic the referee phases are unreliable; there the sum
    // must dominate the difference, which fixes the relative sign instead.
    const bool small_w = std::abs(W) < 0.05;
    if (small_w && std::abs(fp + fm) < std::abs(fp - fm)) fm = -fm;

    const cplx c0 = 0.5 * (fp + fm);
    const cplx c1 = (fp - fm) / (2.0 * s);

    CandSet cs;
    cs.A = A;
    cs.W = W;
    cs.B = B;
    cs.s = s;
    cs.f_plus = fp;
    cs.f_minus = fm;
    for (const char* cls : {"LR", "DR", "LD"}) {
        const cplx v = cubic_oscillatory_integral(A, B, c0, c1, class_of(cls)).value;
        cs.items.emplace_back(cls, v);
        if (small_w) cs.items.emplace_back(std::string(cls) + "-", -v);
    }
    return cs;
}

UniformWalker::CandSet UniformWalker::confluent_candidates(const TrajectoryRecord& rc) const {
    const double hb = sp_.hbar;
    const double h = 1e-4;
    const TrajectoryRecord rp = integrate(*model_, sp_, u0_, rc.v0 + h, rc.T, kInnerTol);
    const TrajectoryRecord rm = integrate(*model_, sp_, u0_, rc.v0 - h, rc.T, kInnerTol);
    const cplx muv = rc.M.m_uv;

    auto chi2 = [](const TrajectoryRecord& r) { return kI * r.M.m_vv / r.M.m_uv; };
    const cplx slow_rate =
        (slow_part(rp, hb) - slow_part(rm, hb)) / (2.0 * h) / muv;
    const cplx d1 = (chi2(rp) - chi2(rm)) / (2.0 * h);
    const cplx d2 = (chi2(rp) - 2.0 * chi2(rc) + chi2(rm)) / (h * h);
    const cplx dmuv = (rp.M.m_uv - rm.M.m_uv) / (2.0 * h);
    const cplx chi3 = d1 / muv;
    const cplx chi4 = d2 / (muv * muv) - dmuv / (muv * muv * muv) * d1;

    const cplx F = std::exp(kI * slow_part(rc, hb) / hb);
    const cplx A = rc.S / hb;

    CandSet cs;
    cs.A = A;
    // Exactly at a merged pair the cubic is pure X^3: B = 0 and the map
    // w(X) is expanded to second order around the stationary point, with a
    // free cube-root orientation resolved by continuity like the class.
    cplx rot = 1.0;
    const cplx omega = std::polar(1.0, 2.0 * pi / 3.0);
    for (int k = 0; k < 3; ++k) {
        const cplx Xp = std::pow(0.5 * chi3, 1.0 / 3.0) * rot;
        const cplx wp = 1.0 / Xp;
        const cplx Xpp = chi4 / (12.0 * Xp * Xp);
        const cplx wpp = -Xpp / (Xp * Xp * Xp);
        const cplx c0 = F * wp;
        const cplx c1 = F * (kI * slow_rate / hb) * wp * wp + F * wpp;
        for (const char* cls : {"LR", "DR", "LD"}) {
            const cplx v =
                cubic_oscillatory_integral(A, cplx(0.0), c0, c1, class_of(cls)).value;
            cs.items.emplace_back(std::string(cls) + std::to_string(k), v);
        }
        rot *= omega;
    }
    return cs;
}

std::string UniformWalker::pick(const CandSet& cs, const cplx* anchor) const {
    if (anchor != nullptr) {
        const auto* best = &cs.items.front();
        for (const auto& it : cs.items)
            if (std::abs(it.second - *anchor) < std::abs(best->second - *anchor))
                best = &it;
        return best->first;
    }
    if (!have_prev_val_) {
        for (const auto& it : cs.items)
            if (it.first == "LR") return "LR";
        return "LR0";
    }
    const auto* best = &cs.items.front();
    double best_d = std::abs(best->second - prev_val_);
    double prev_d = -1.0;
    for (const auto& it : cs.items) {
        const double d = std::abs(it.second - prev_val_);
        if (d < best_d) {
            best = &it;
            best_d = d;
        }
        if (it.first == prev_cls_) prev_d = d;
    }
    // Hysteresis: leave the previous class only for a clearly closer value.
    if (prev_d >= 0.0 && best_d >= prev_d / 3.0) return prev_cls_;
    return best->first;
}

PropagatorValue UniformWalker::eval_at(const std::vector<TrajectoryRecord>& roots) {
    PropagatorValue out;
    out.method = Method::uniform;
    out.trajectories = roots;

    // Family record first; tests and sweeps read the bare companion there.
    std::size_t fi = 0;
    for (std::size_t k = 1; k < out.trajectories.size(); ++k)
        if (std::abs(out.trajectories[k].v0 - family_) <
            std::abs(out.trajectories[fi].v0 - family_))
            fi = k;
    if (fi != 0) std::swap(out.trajectories[0], out.trajectories[fi]);
    const TrajectoryRecord* rf = &out.trajectories.front();

    // Roots closer to the family than the Newton noise floor are the same
    // root seen twice, not a partner.
    const double mvv_f = std::abs(rf->M.m_vv);
    const double noise = std::max(1e-6, 100.0 * opt_.tol / std::max(mvv_f, 1e-12));
    std::vector<const TrajectoryRecord*> others;
    for (const auto& r : out.trajectories)
        if (std::abs(r.v0 - family_) > noise) others.push_back(&r);

    if (others.empty()) {
        if (mvv_f < 1e-2) {
            const CandSet cs = confluent_candidates(*rf);
            const std::string label = pick(cs, nullptr);
            out.value = lookup(cs.items, label);
            out.confluent = true;
            out.selected = "confl-" + label;
            out.n_traj = 1;
            out.pair.plus = *rf;
            out.pair.minus = *rf;
            out.pair.A = cs.A;
            out.pair.airy_class = class_of(label);
            prev_val_ = out.value;
            have_prev_val_ = true;
            prev_cls_ = label;
            return out;
        }
        out.value = bare_term(*rf, sp_);
        out.used_fallback = true;
        out.selected = "fallback";
        out.n_traj = 1;
        prev_val_ = out.value;
        have_prev_val_ = true;
        prev_cls_.clear();
        return out;
    }

    const TrajectoryRecord* rp = others.front();
    for (const auto* r : others)
        if (std::abs(r->uT - rf->uT) < std::abs(rp->uT - rf->uT)) rp = r;

    const CandSet cs = pair_candidates(*rf, *rp);
    std::string label;
    if (prev_cls_.empty()) {
        if (std::abs(cs.W) >= 0.5) {
            const cplx anchor = bare_term(*rf, sp_) + bare_term(*rp, sp_);
            label = pick(cs, &anchor);
        } else {
            label = "LR";
        }
    } else {
        label = pick(cs, nullptr);
    }
    out.value = lookup(cs.items, label);
    out.selected = label;
    out.n_traj = 2;
    out.b_coeff = cs.B;
    out.pair.plus = *rf;
    out.pair.minus = *rp;
    out.pair.A = cs.A;
    out.pair.B = cs.B;
    out.pair.W = cs.W;
    out.pair.sqrt_b = cs.s;
    out.pair.f_plus = cs.f_plus;
    out.pair.f_minus = cs.f_minus;
    out.pair.airy_class = class_of(label);
    out.pair.separation = std::abs(rf->uT - rp->uT);
    prev_val_ = out.value;
    have_prev_val_ = true;
    prev_cls_ = label;
    return out;
}

PropagatorValue UniformWalker::eval(double T) {
    if (T < t_cur_ - 1e-12)
        throw std::invalid_argument("UniformWalker::eval: T must not decrease");
    while (t_cur_ + opt_.walk_step < T - 1e-12) {
        t_cur_ += opt_.walk_step;
        const auto roots = step_to(t_cur_);
        if (!roots.empty()) eval_at(roots);
    }
    const auto roots = step_to(T);
    t_cur_ = T;
    if (roots.empty()) {
        PropagatorValue out;
        out.method = Method::uniform;
        out.status = DynStatus::no_root;
        return out;
    }
    return eval_at(roots);
}

PropagatorValue uniform_propagator(const ModelSymbol& model, const StateParams& sp,
                                   const Label& z0, const Label& zf, double T,
                                   const PropagatorOptions& opt) {
    UniformWalker walker(model, sp, z0, zf, opt);
    return walker.eval(T);
}

PropagatorValue bare_propagator(const ModelSymbol& model, const StateParams& sp,
                                const Label& z0, const Label& zf, double T,
                                const PropagatorOptions& opt) {
    PropagatorValue out;
    out.method = Method::bare;
    const cplx u0 = z0.z0;
    const cplx vpp = std::conj(zf.z0);

    TrajectoryRecord rec;
    BvpProblem prob;
    prob.kind = BvpKind::VV;
    prob.u0 = u0;
    prob.target = vpp;
    prob.model = &model;
    prob.params = sp;
    if (T == 0.0) {
        rec = integrate(model, sp, u0, vpp, 0.0, kInnerTol);
    } else {
        // Follow the family root from T = 0, where v0 equals the target.
        cplx fam = vpp;
        double t = 0.0;
        std::vector<double> stops;
        while (t + opt.walk_step < T - 1e-12) {
            t += opt.walk_step;
            stops.push_back(t);
        }
        stops.push_back(T);
        for (double tk : stops) {
            prob.T = tk;
            rec = solve_bvp(prob, fam, opt.tol);
            if (rec.status != DynStatus::ok) {
                out.status = rec.status;
                return out;
            }
            fam = rec.v0;
        }
    }
    out.trajectories.push_back(rec);
    out.n_traj = 1;
    out.value = bare_term(rec, sp);
    if (std::abs(rec.M.m_vv) < 1e-10) {
        out.caustic_flag = true;
        out.value = cplx(std::numeric_limits<double>::infinity(), 0.0);
    }
    if (opt.extra_roots != ExtraRoots::none && T > 0.0) {
        prob.T = T;
        for (const auto& r : find_all_roots(prob, opt.box, opt.grid_n, opt.tol, opt.seed)) {
            if (std::abs(r.v0 - rec.v0) <= 1e-7) continue;
            out.trajectories.push_back(r);
            if (opt.extra_roots == ExtraRoots::include) {
                out.value += bare_term(r, sp);
                out.n_traj += 1;
            }
        }
    }
    return out;
}

PropagatorValue conjugate_propagator(const ModelSymbol& model, const StateParams& sp,
                                     cplx u_final, const Label& z0, double T,
                                     const PropagatorOptions& opt) {
    PropagatorValue out;
    out.method = Method::conjugate;
    BvpProblem prob;
    prob.kind = BvpKind::UU;
    prob.u0 = z0.z0;
    prob.target = u_final;
    prob.T = T;
    prob.model = &model;
    prob.params = sp;

    const auto roots = find_all_roots(prob, opt.box, opt.grid_n, opt.tol, opt.seed);
    out.trajectories = roots;
    out.n_traj = static_cast<int>(roots.size());
    if (roots.empty()) {
        out.status = DynStatus::no_root;
        return out;
    }
    cplx sum = 0.0;
    for (const auto& r : roots) {
        if (std::abs(r.M.m_uv) < 1e-10) {
            out.caustic_flag = true;
            sum = cplx(std::numeric_limits<double>::infinity(), 0.0);
            break;
        }
        sum += conjugate_term(r, sp);
    }
    out.value = sum;
    return out;
}

}  // namespace csp
