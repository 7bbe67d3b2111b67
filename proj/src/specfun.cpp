#include "csp/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace csp {

const char* to_string(AiryBranch b) {
    switch (b) {
        case AiryBranch::principal: return "principal";
        case AiryBranch::rot_plus: return "rot_plus";
        case AiryBranch::rot_minus: return "rot_minus";
    }
    return "unknown";
}

namespace {

// Quad-precision complex arithmetic for the Maclaurin region. The power
// series suffers ~1e-10 relative cancellation near |z| = 9, so double
// accumulation would leave only six digits.
struct Q {
    __float128 re, im;
};

inline Q qmake(cplx z) { return {static_cast<__float128>(z.real()), static_cast<__float128>(z.imag())}; }
inline cplx qget(const Q& a) { return {static_cast<double>(a.re), static_cast<double>(a.im)}; }
inline Q operator+(const Q& a, const Q& b) { return {a.re + b.re, a.im + b.im}; }
inline Q operator*(const Q& a, const Q& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Q qdiv(const Q& a, double s) {
    const __float128 d = static_cast<__float128>(s);
    return {a.re / d, a.im / d};
}
inline double qabs2(const Q& a) {
    return static_cast<double>(a.re * a.re + a.im * a.im);
}

constexpr double kSeriesRadius = 9.0;
// Ai(0) and -Ai'(0) as hi+lo double pairs; the series cancels ~10 digits
// near |z| = 9 so the constants must be better than double.
const __float128 kC1 = static_cast<__float128>(0.3550280538878172) + static_cast<__float128>(2.05233632436212e-17);
const __float128 kC2 = static_cast<__float128>(0.2588194037928068) + static_cast<__float128>(-2.522243111610832e-17);

const cplx kOmega{-0.5, 0.8660254037844386468};  // e^{2 pi i/3}

struct ScaledAiry {
    cplx ai, aip;
    double log_scale;
};

// Maclaurin solution of y'' = z y: Ai = c1 f - c2 g with
//   f = sum a_k z^{3k},  a_{k+1} = a_k /((3k+2)(3k+3))
//   g = sum b_k z^{3k+1}, b_{k+1} = b_k /((3k+3)(3k+4))
// run in quad precision until the terms fall below the round-off floor.
ScaledAiry airy_series(cplx z) {
    const Q zq = qmake(z);
    const Q z3 = zq * zq * zq;
    Q tf{1, 0}, tg = zq, tfp = qdiv(zq * zq, 2.0), tgp{1, 0};
    Q f = tf, g = tg, fp = tfp, gp = tgp;
    for (int k = 0; k < 160; ++k) {
        tf = qdiv(tf * z3, double(3 * k + 2) * (3 * k + 3));
        tg = qdiv(tg * z3, double(3 * k + 3) * (3 * k + 4));
        tfp = qdiv(tfp * z3, double(3 * k + 3) * (3 * k + 5));
        tgp = qdiv(tgp * z3, double(3 * k + 1) * (3 * k + 3));
        f = f + tf;
        g = g + tg;
        fp = fp + tfp;
        gp = gp + tgp;
        const double mag = qabs2(tf) + qabs2(tg) + qabs2(tfp) + qabs2(tgp);
        const double ref = qabs2(f) + qabs2(g) + qabs2(fp) + qabs2(gp);
        if (mag < 1e-72 * ref && k > 3) break;
    }
    ScaledAiry out;
    const Q ai{kC1 * f.re - kC2 * g.re, kC1 * f.im - kC2 * g.im};
    const Q aip{kC1 * fp.re - kC2 * gp.re, kC1 * fp.im - kC2 * gp.im};
    out.ai = qget(ai);
    out.aip = qget(aip);
    out.log_scale = 0.0;
    return out;
}

// One-exponential asymptotic form, valid away from the negative real axis
// (|arg z| below ~2.35 keeps the dropped subdominant exponential under 1e-14
// at |z| >= 9). Returns mantissas with the e^{-xi} magnitude split off.
ScaledAiry airy_asymptotic(cplx z) {
    const cplx lz = std::log(z);
    const cplx xi = (2.0 / 3.0) * std::exp(1.5 * lz);
    const cplx z14 = std::exp(0.25 * lz);
    const cplx inv_xi = 1.0 / xi;

    cplx su = 1.0, sv = 1.0;
    double uk = 1.0;
    cplx pw = 1.0;
    double prev = 1.0;
    for (int k = 1; k < 48; ++k) {
        uk *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
              ((2.0 * k - 1.0) * 216.0 * k);
        const double vk = uk * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        pw *= -inv_xi;
        const double tmag = uk * std::abs(pw);
        if (tmag > prev) break;  // divergent tail reached
        su += uk * pw;
        sv += vk * pw;
        prev = tmag;
        if (tmag < 1e-18) break;
    }
    const double spi2 = 2.0 * std::sqrt(pi);
    ScaledAiry out;
    const cplx phase = std::exp(cplx(0.0, -xi.imag()));
    out.ai = su / (spi2 * z14) * phase;
    out.aip = -z14 * sv / spi2 * phase;
    out.log_scale = -xi.real();
    return out;
}

ScaledAiry airy_scaled(cplx z);

// Connection route for the sector near the negative real axis where both
// exponentials contribute: Ai(z) = -w Ai(wz) - w* Ai(w*z).
ScaledAiry airy_connected(cplx z) {
    const cplx w = kOmega, wb = std::conj(kOmega);
    ScaledAiry a = airy_scaled(w * z);
    ScaledAiry b = airy_scaled(wb * z);
    const double s = std::max(a.log_scale, b.log_scale);
    const double ea = std::exp(a.log_scale - s), eb = std::exp(b.log_scale - s);
    ScaledAiry out;
    out.ai = -w * a.ai * ea - wb * b.ai * eb;
    out.aip = -w * w * a.aip * ea - wb * wb * b.aip * eb;
    out.log_scale = s;
    return out;
}

ScaledAiry airy_scaled(cplx z) {
    if (std::abs(z) <= kSeriesRadius) return airy_series(z);
    if (std::abs(std::arg(z)) <= 2.35) return airy_asymptotic(z);
    return airy_connected(z);
}

AiryValue finalize(ScaledAiry s) {
    AiryValue v;
    if (std::abs(s.log_scale) <= 600.0) {
        const double e = std::exp(s.log_scale);
        v.ai = s.ai * e;
        v.ai_prime = s.aip * e;
        v.log_scale = 0.0;
    } else {
        v.ai = s.ai;
        v.ai_prime = s.aip;
        v.log_scale = s.log_scale;
    }
    return v;
}

}  // namespace

AiryValue airy(cplx z) {
    if (!(std::abs(z) < 1e4))
        throw std::invalid_argument("airy: |z| must be < 1e4");
    AiryValue v = finalize(airy_scaled(z));
    v.branch = AiryBranch::principal;
    return v;
}

AiryValue airy_solution(cplx z, AiryBranch branch) {
    if (branch == AiryBranch::principal) return airy(z);
    const cplx w = branch == AiryBranch::rot_plus ? kOmega : std::conj(kOmega);
    AiryValue rot = airy(w * z);
    AiryValue v;
    v.ai = -w * rot.ai;
    v.ai_prime = -w * w * rot.ai_prime;
    v.branch = branch;
    v.log_scale = rot.log_scale;
    return v;
}

CubicIntegralResult cubic_oscillatory_integral(cplx A, cplx B, cplx c0, cplx c1,
                                               AiryBranch hint) {
    const cplx zeta = -B;
    AiryValue sol = airy_solution(zeta, hint);
    if (sol.log_scale != 0.0)
        throw std::domain_error("cubic_oscillatory_integral: argument out of the supported range");
    CubicIntegralResult out;
    out.branch_used = hint;
    out.value = std::sqrt(2.0 * pi) * std::exp(cplx(0, 1) * A) *
                (c0 * sol.ai - cplx(0, 1) * c1 * sol.ai_prime);
    return out;
}

CubicIntegralResult cubic_oscillatory_integral(cplx A, cplx B, cplx c0, cplx c1) {
    // Class selection by thirds of arg(-B): the chosen solution decays along
    // the contour's endpoint directions. Boundary hits fall back to principal.
    const cplx zeta = -B;
    const double th = std::arg(zeta);
    const double btol = 1e-9;
    AiryBranch branch = AiryBranch::principal;
    bool boundary = false;
    if (std::abs(std::abs(th) - pi / 3) < btol || std::abs(std::abs(th) - pi) < btol) {
        boundary = true;
    } else if (th > pi / 3) {
        branch = AiryBranch::rot_minus;
    } else if (th < -pi / 3) {
        branch = AiryBranch::rot_plus;
    }
    CubicIntegralResult out = cubic_oscillatory_integral(A, B, c0, c1, branch);
    out.on_boundary = boundary;
    return out;
}

}  // namespace csp
