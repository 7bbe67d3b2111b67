#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace csp {

using cplx = std::complex<double>;
using namespace std::complex_literals;

inline constexpr double pi = std::numbers::pi;

// Width/units bundle for the coherent-state family. b*c = hbar is enforced
// at construction; everything downstream assumes it.
struct StateParams {
    double hbar = 1.0;
    double b = 1.0;
    double c = 1.0;
    double omega = 1.0;  // informational: hbar/(m b^2) with unit mass

    StateParams() = default;
    StateParams(double hbar_, double b_, double c_) : hbar(hbar_), b(b_), c(c_) {
        if (!(hbar > 0.0) || !(b > 0.0) || !(c > 0.0))
            throw std::invalid_argument("StateParams: hbar, b, c must be positive");
        if (std::abs(b * c - hbar) > 8e-16 * hbar)
            throw std::invalid_argument("StateParams: b*c must equal hbar");
        omega = hbar / (b * b);
    }
};

struct PhasePoint {
    cplx u{};
    cplx v{};

    // v = conj(u) characterizes real (q,p)
    bool is_real_phase(double tol) const { return std::abs(v - std::conj(u)) <= tol; }
};

// Coherent-state label. z0 = (q0/b + i p0/c)/sqrt(2) is kept redundantly with
// the real pair it came from.
struct Label {
    double q0 = 0.0;
    double p0 = 0.0;
    cplx z0{};

    Label() = default;
    Label(double q0_, double p0_, const StateParams& sp)
        : q0(q0_), p0(p0_),
          z0((q0_ / sp.b + cplx(0, 1) * (p0_ / sp.c)) / std::sqrt(2.0)) {}

    static Label from_z(cplx z, const StateParams& sp) {
        Label l;
        l.q0 = std::sqrt(2.0) * sp.b * z.real();
        l.p0 = std::sqrt(2.0) * sp.c * z.imag();
        l.z0 = z;
        return l;
    }
};

inline PhasePoint uv_from_qp(cplx q, cplx p, const StateParams& sp) {
    const double rt2 = std::sqrt(2.0);
    return {(q / sp.b + cplx(0, 1) * (p / sp.c)) / rt2,
            (q / sp.b - cplx(0, 1) * (p / sp.c)) / rt2};
}

inline std::pair<cplx, cplx> qp_from_uv(const PhasePoint& pt, const StateParams& sp) {
    const double rt2 = std::sqrt(2.0);
    return {sp.b * (pt.u + pt.v) / rt2, sp.c * (pt.u - pt.v) / (rt2 * cplx(0, 1))};
}

// Non-normalized overlap <zf|z0> = exp(zf* z0).
inline cplx overlap(const Label& zf, const Label& z0) {
    return std::exp(std::conj(zf.z0) * z0.z0);
}

}  // namespace csp
