#pragma once

#include <string>
#include <vector>

#include "csp/dynamics.hpp"
#include "csp/specfun.hpp"

namespace csp {

enum class Method : std::uint8_t { bare, conjugate, uniform, exact };
const char* to_string(Method m);

// How bare_propagator treats multistart roots beyond the continued family:
// ignore them, list them in trajectories, or also add them to the sum.
enum class ExtraRoots : std::uint8_t { none, report, include };

struct PropagatorOptions {
    double tol = 1e-12;       // newton residual target
    SearchBox box{};          // v0 multistart region
    int grid_n = 12;
    double walk_step = 0.05;  // T stride of the family continuation
    ExtraRoots extra_roots = ExtraRoots::none;
    std::uint64_t seed = 0;   // multistart lattice jitter; 0 keeps the plain grid
};

// One Airy assembly: the stationary pair, the cubic coefficients and the
// mapped prefactors. Kept verbatim for diagnostics and invariant tests.
struct UniformPair {
    TrajectoryRecord plus{}, minus{};
    cplx A{}, B{};
    cplx W{};        // signed cubic combination; B is its principal 2/3 power
    cplx sqrt_b{};   // branch of B^(1/2) used by the assembly
    cplx f_plus{}, f_minus{};
    AiryBranch airy_class = AiryBranch::principal;
    double separation = 0.0;  // |u''_plus - u''_minus|
};

struct PropagatorValue {
    cplx value{};
    Method method = Method::bare;
    int n_traj = 0;
    bool caustic_flag = false;
    cplx b_coeff{};              // uniform only
    bool used_fallback = false;  // uniform only: no partner, bare value returned
    bool confluent = false;      // uniform only: merged-pair expansion
    std::string selected{};      // contour-class label kept by continuity
    DynStatus status = DynStatus::ok;
    std::vector<TrajectoryRecord> trajectories;
    UniformPair pair{};
};

// exp{(i/hbar)(S + G - hbar sigma_vv/2)} / sqrt|m_vv|: the contribution of a
// single trajectory to the bare sum.
cplx bare_term(const TrajectoryRecord& t, const StateParams& sp);

// sqrt(i/|m_uv|) exp{(i/hbar)(S + i hbar u'' v'' + G) - i sigma_uv/2}: the
// contribution of a single trajectory to the transformed sum.
cplx conjugate_term(const TrajectoryRecord& t, const StateParams& sp);

// sqrt(2 pi) e^{iA} [c0 Ai_b(-B) - i c1 Ai_b'(-B)] with c0 = (f_plus+f_minus)/2
// and c1 = (f_plus-f_minus)/(2 sqrt_b). Symmetric under swapping the pair
// labels together with sqrt_b -> -sqrt_b.
cplx airy_assembly(cplx A, cplx B, cplx sqrt_b, cplx f_plus, cplx f_minus,
                   AiryBranch branch);

PropagatorValue bare_propagator(const ModelSymbol& model, const StateParams& sp,
                                const Label& z0, const Label& zf, double T,
                                const PropagatorOptions& opt = {});

PropagatorValue conjugate_propagator(const ModelSymbol& model, const StateParams& sp,
                                     cplx u_final, const Label& z0, double T,
                                     const PropagatorOptions& opt = {});

PropagatorValue uniform_propagator(const ModelSymbol& model, const StateParams& sp,
                                   const Label& z0, const Label& zf, double T,
                                   const PropagatorOptions& opt = {});

// Caustic-safe sweeps. The walker carries the root family, the previous value
// and the contour-class label from one T stop to the next, so the Airy class
// is chosen by continuity of the value rather than by per-point geography.
class UniformWalker {
  public:
    UniformWalker(const ModelSymbol& model, const StateParams& sp, const Label& z0,
                  const Label& zf, const PropagatorOptions& opt = {});

    // Walks T upward in walk_step stops, evaluating at each one, then
    // evaluates at T itself. Calls must use nondecreasing T.
    PropagatorValue eval(double T);

  private:
    struct CandSet {
        std::vector<std::pair<std::string, cplx>> items;
        cplx A{}, W{}, B{}, s{}, f_plus{}, f_minus{};
    };

    std::vector<TrajectoryRecord> step_to(double T);
    PropagatorValue eval_at(const std::vector<TrajectoryRecord>& roots);
    CandSet pair_candidates(const TrajectoryRecord& ra, const TrajectoryRecord& rb) const;
    CandSet confluent_candidates(const TrajectoryRecord& rc) const;
    cplx third_derivative(const TrajectoryRecord& r) const;
    std::string pick(const CandSet& cs, const cplx* anchor) const;

    const ModelSymbol* model_;
    StateParams sp_;
    PropagatorOptions opt_;
    cplx u0_{}, vpp_{};
    double t_cur_ = 0.0;
    bool have_family_ = false;
    cplx family_{};
    std::vector<cplx> carried_;
    bool have_prev_val_ = false;
    cplx prev_val_{};
    std::string prev_cls_{};
};

}  // namespace csp
