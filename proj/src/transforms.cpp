#include "csp/transforms.hpp"

#include <cmath>

namespace csp {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1], positive half.
constexpr double kGlX[8] = {0.0950125098376374, 0.2816035507792589,
                            0.4580167776572274, 0.6178762444026438,
                            0.7554044083550030, 0.8656312023878318,
                            0.9445750230732326, 0.9894009349916499};
constexpr double kGlW[8] = {0.1894506104550685, 0.1826034150449236,
                            0.1691565193950025, 0.1495959888165767,
                            0.1246289712555339, 0.0951585116824928,
                            0.0622535239386479, 0.0271524594117541};

// Integrates g over [a, b] in panels of 16-point Gauss-Legendre.
cplx panel_integrate(const std::function<cplx(double)>& g, double a, double b,
                     int n_panels) {
    const double h = (b - a) / n_panels;
    cplx acc = 0.0;
    for (int p = 0; p < n_panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (int k = 0; k < 8; ++k) {
            acc += kGlW[k] * (g(mid + 0.5 * h * kGlX[k]) + g(mid - 0.5 * h * kGlX[k]));
        }
    }
    return acc * (0.5 * h);
}

const cplx kInvSqrt2PiI = 1.0 / (std::sqrt(2.0 * pi) * cplx(std::sqrt(0.5), std::sqrt(0.5)));

}  // namespace

cplx conjugate_apply(const std::function<cplx(cplx)>& f, cplx w,
                     const ContourSpec& contour) {
    if (std::abs(w) == 0.0)
        throw TransformUndefined("conjugate_apply: kernel does not decay for w = 0");
    const double aw = std::abs(w);
    const cplx dir = std::polar(1.0, -std::arg(w));
    auto g = [&](double r) { return f(r * dir) * std::exp(-r * aw) * dir; };

    const int panels = std::max(16, contour.n_points / 16);
    const cplx main = panel_integrate(g, 0.0, contour.r_max, panels);
    const cplx tail = panel_integrate(g, contour.r_max, 2.0 * contour.r_max, panels);
    if (!std::isfinite(std::abs(main)) || !std::isfinite(std::abs(tail)) ||
        std::abs(tail) > 1e-10 * std::max(std::abs(main), 1e-30))
        throw TransformUndefined("conjugate_apply: integrand tail does not vanish");
    return kInvSqrt2PiI * main;
}

cplx conjugate_invert(const std::function<cplx(cplx)>& ftil, cplx z_star,
                      const ContourSpec& contour) {
    if (std::abs(z_star) == 0.0)
        throw TransformUndefined("conjugate_invert: kernel does not decay for z* = 0");
    const cplx base_dir = std::polar(1.0, -std::arg(z_star));
    const cplx base = contour.alpha * base_dir;
    const int panels = std::max(16, contour.n_points / 16);

    // Along each arm Re(z* w) = |z*|(alpha - s sin(tilt)), so both halves
    // decay like e^{-s |z*| sin(tilt)}.
    auto arm = [&](double sign) {
        const cplx dir = base_dir * std::polar(1.0, sign * (pi / 2 + contour.tilt));
        auto g = [&](double s) { return ftil(base + s * dir) * std::exp(z_star * (base + s * dir)) * dir; };
        const cplx main = panel_integrate(g, 0.0, contour.t_max, panels);
        const cplx tail = panel_integrate(g, contour.t_max, 2.0 * contour.t_max, panels);
        if (!std::isfinite(std::abs(main)) || !std::isfinite(std::abs(tail)) ||
            std::abs(tail) > 1e-10 * std::max(std::abs(main), 1e-30))
            throw TransformUndefined("conjugate_invert: integrand tail does not vanish");
        return main;
    };
    // lower arm runs inward, upper arm runs outward
    return kInvSqrt2PiI * (arm(+1.0) - arm(-1.0));
}

}  // namespace csp
