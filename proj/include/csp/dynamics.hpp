#pragma once

#include <cstdint>
#include <vector>

#include "csp/core.hpp"
#include "csp/model.hpp"

namespace csp {

// Linearization of the flow: (du(T), dv(T))^T = M (du0, dv0)^T. det M = 1.
struct TangentMatrix {
    cplx m_uu{1.0}, m_uv{}, m_vu{}, m_vv{1.0};
    cplx det() const { return m_uu * m_vv - m_uv * m_vu; }
};

struct StepDiagnostics {
    int n_steps = 0;
    int n_rejected = 0;
    double min_step = 0.0;
};

enum class DynStatus : std::uint8_t {
    ok,
    step_underflow,
    no_root,
    caustic_adjacent,
    not_found,
};

const char* to_string(DynStatus s);

// One complex trajectory with its action, phase corrections and stability data.
//   S includes the boundary term -(i hbar/2)(u(T)v(T) + u0 v0); S(0) = -i hbar u0 v0.
//   G = (1/2) int h_uv dt.
//   sigma_vv / sigma_uv: continuously unwound arg(m_vv), arg(m_uv).
struct TrajectoryRecord {
    cplx u0{}, v0{};
    cplx uT{}, vT{};
    cplx S{}, G{};
    TangentMatrix M{};
    double sigma_vv = 0.0;
    double sigma_uv = 0.0;
    double T = 0.0;
    StepDiagnostics diag{};
    DynStatus status = DynStatus::ok;
};

enum class BvpKind : std::uint8_t { VV, UU };

// Two-point problem at fixed u0 and duration T. VV targets v(T), UU targets
// u(T); in both cases the unknown is v0.
struct BvpProblem {
    BvpKind kind = BvpKind::VV;
    cplx u0{};
    cplx target{};
    double T = 0.0;
    const ModelSymbol* model = nullptr;
    StateParams params{};
};

struct SearchBox {
    double re_min = -3.0, re_max = 3.0;
    double im_min = -3.0, im_max = 3.0;
};

TrajectoryRecord integrate(const ModelSymbol& model, const StateParams& sp,
                           cplx u0, cplx v0, double T, double tol);

// Newton in v0 with residual v(T)-target (derivative m_vv) or u(T)-target
// (derivative m_uv). Damped by up to 8 halvings, at most 50 iterations.
// |derivative| < 1e-12 reports caustic_adjacent.
TrajectoryRecord solve_bvp(const BvpProblem& problem, cplx guess_v0, double tol);

// grid_n x grid_n multistart over the box. Roots deduplicated at 1e-7 in v0
// and sorted by (Re v0, Im v0). seed != 0 jitters the lattice.
std::vector<TrajectoryRecord> find_all_roots(const BvpProblem& problem,
                                             const SearchBox& box, int grid_n,
                                             double tol, std::uint64_t seed = 0);

struct CausticResult {
    DynStatus status = DynStatus::not_found;
    double T_c = 0.0;
    TrajectoryRecord traj{};
};

// Follows the VV root family from (T_lo, root near guess_v0) to T_hi and
// refines the interior minimum of |m_vv(T)| down to |m_vv| < 1e-6.
CausticResult locate_caustic(const BvpProblem& base, cplx guess_v0,
                             double T_lo, double T_hi, double tol);

}  // namespace csp
