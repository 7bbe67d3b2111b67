#pragma once

#include <functional>
#include <stdexcept>

#include "csp/core.hpp"

namespace csp {

// Raised when a transform integral fails its decay checks (divergent tail,
// zero target, contour through a singular region).
struct TransformUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContourSpec {
    enum class Kind { ray, shifted_line };
    Kind kind = Kind::ray;
    double alpha = 1.0;    // base offset of the shifted line, in units of |z*|-direction
    double r_max = 60.0;   // ray truncation
    double t_max = 60.0;   // arm truncation for the shifted line
    int n_points = 2000;   // quadrature resolution per branch
    double tilt = pi / 4;  // arm tilt past the perpendicular, gives e^{-|s| sin(tilt)} decay
};

// (1/sqrt(2 pi i)) Int_0^inf f(z*) e^{-z* w} dz* along the ray z* = r e^{-i arg w},
// on which the kernel is exactly e^{-r |w|}. The tail beyond r_max must
// contribute less than 1e-10 of the result or the transform is rejected.
cplx conjugate_apply(const std::function<cplx(cplx)>& f, cplx w, const ContourSpec& contour);

// Inverse: (1/sqrt(2 pi i)) Int_gamma ftil(w) e^{+z* w} dw over a wedge through
// alpha e^{i phi0}, phi0 = -arg z*, with arms tilted so Re(z* w) decreases
// along both.
cplx conjugate_invert(const std::function<cplx(cplx)>& ftil, cplx z_star,
                      const ContourSpec& contour);

}  // namespace csp
