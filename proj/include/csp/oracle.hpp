#pragma once

#include "csp/core.hpp"
#include "csp/model.hpp"

namespace csp {

// Reference propagator <zf| e^{-i H T/hbar} |z0> by direct spectral sum over
// the Fock ladder. Truncation: the first N with |x|^N/N! below 1e-14 of the
// partial sum (phases are unimodular), hard cap 512. force_terms > 0 pins the
// term count instead, for convergence studies.
cplx exact_propagator(const ModelSymbol& model, const StateParams& sp,
                      const Label& z0, const Label& zf, double T,
                      int force_terms = 0);

// Reference transformed propagator. HO uses the closed form
//   (1/sqrt(2 pi i)) e^{-i omega T/2} / (w - z0 e^{-i omega T})
// with a pole guard; other number-diagonal models use the Laurent sum
//   (1/sqrt(2 pi i)) sum_m z0^m e^{-i E_m T/hbar} / w^{m+1},   |w| > |z0|.
cplx exact_conjugate(const ModelSymbol& model, const StateParams& sp, cplx w,
                     const Label& z0, double T);

// Generic route through a truncated N x N Fock-basis matrix exponential
// (dense scaling-and-squaring; deliberately unoptimized). Exists to
// cross-check the spectral sums through independent machinery.
cplx matrix_exp_propagator(const ModelSymbol& model, const StateParams& sp,
                           const Label& z0, const Label& zf, double T, int N);

cplx ho_closed_propagator(const StateParams& sp, const Label& z0, const Label& zf,
                          double T, double omega);

}  // namespace csp
