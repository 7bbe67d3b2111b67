#pragma once

#include <cstdint>

#include "csp/core.hpp"

namespace csp {

// Three solutions of y'' = z y used as endpoint classes for the cubic-phase
// integral: principal Ai, and the two rotated solutions
//   rot_plus  : -w  Ai(w z),  w = e^{+2 pi i/3}
//   rot_minus : -w* Ai(w* z)
// normalized so that principal = rot_plus + rot_minus.
enum class AiryBranch : std::uint8_t { principal, rot_plus, rot_minus };

const char* to_string(AiryBranch b);

// When |log_scale| is large the pair (ai, ai_prime) is a mantissa and the
// true values are ai * exp(log_scale), ai_prime * exp(log_scale). For all
// moderate arguments log_scale == 0 and the fields are the plain values.
struct AiryValue {
    cplx ai{};
    cplx ai_prime{};
    AiryBranch branch = AiryBranch::principal;
    double log_scale = 0.0;
};

// Complex Airy function, principal solution. Requires |z| < 1e4.
// Relative accuracy 1e-10 or better for |z| <= 50.
AiryValue airy(cplx z);

AiryValue airy_solution(cplx z, AiryBranch branch);

struct CubicIntegralResult {
    cplx value{};
    AiryBranch branch_used = AiryBranch::principal;
    bool on_boundary = false;  // arg(-B) fell on a sector boundary; principal used
};

// (1/sqrt(2 pi)) Int (c0 + c1 X) exp{i(A - B X + X^3/3)} dX over the contour
// class sigma, evaluated in closed form as
//   sqrt(2 pi) e^{iA} [ c0 Ai_sigma(-B) - i c1 Ai'_sigma(-B) ].
// With hint = auto the class is the solution that decays in the sector of
// arg(-B): |arg| < pi/3 principal, upper third rot_minus, lower third rot_plus.
CubicIntegralResult cubic_oscillatory_integral(cplx A, cplx B, cplx c0, cplx c1);
CubicIntegralResult cubic_oscillatory_integral(cplx A, cplx B, cplx c0, cplx c1,
                                               AiryBranch hint);

}  // namespace csp
