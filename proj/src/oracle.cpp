#include "csp/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace csp {

cplx exact_propagator(const ModelSymbol& model, const StateParams& sp,
                      const Label& z0, const Label& zf, double T, int force_terms) {
    if (!model.number_diagonal())
        throw std::domain_error("exact_propagator: model has no ladder spectrum");
    const cplx x = std::conj(zf.z0) * z0.z0;
    cplx sum = 0.0;
    cplx pw = 1.0;  // x^m / m!
    const int cap = force_terms > 0 ? force_terms : 512;
    for (int m = 0; m < cap; ++m) {
        sum += pw * std::exp(cplx(0, -model.eigenvalue(m, sp) * T / sp.hbar));
        pw *= x / double(m + 1);
        if (force_terms == 0 && std::abs(pw) < 1e-14 * std::abs(sum) && m > 8)
            return sum;
    }
    if (force_terms > 0) return sum;
    // Estimate how deep the sum would have to go before the tail bound holds.
    const double ax = std::abs(x);
    double log_term = 512.0 * std::log(ax) - std::lgamma(513.0);
    int need = 512;
    const double log_goal = std::log(1e-14 * std::abs(sum));
    while (log_term >= log_goal && need < 100000) {
        ++need;
        log_term += std::log(ax) - std::log(double(need));
    }
    throw std::runtime_error("exact_propagator: spectral sum not converged at 512 terms, needs about " +
                             std::to_string(need));
}

cplx exact_conjugate(const ModelSymbol& model, const StateParams& sp, cplx w,
                     const Label& z0, double T) {
    const cplx i1(0, 1);
    const cplx inv_sqrt_2pii = 1.0 / (std::sqrt(2.0 * pi) * std::polar(1.0, pi / 4));
    if (!(std::abs(w) > std::abs(z0.z0)))
        throw std::domain_error("exact_conjugate: needs |w| > |z0|");
    if (model.id() == "ho") {
        const double omega = model.eigenvalue(1, sp) / sp.hbar - model.eigenvalue(0, sp) / sp.hbar;
        const cplx pole = z0.z0 * std::exp(-i1 * omega * T);
        if (std::abs(w - pole) < 1e-8)
            throw std::domain_error("exact_conjugate: w sits on the propagator pole");
        return inv_sqrt_2pii * std::exp(-i1 * omega * T / 2.0) / (w - pole);
    }
    if (!model.number_diagonal())
        throw std::domain_error("exact_conjugate: model has no ladder spectrum");
    cplx sum = 0.0;
    cplx pw = 1.0 / w;  // z0^m / w^{m+1}
    for (int m = 0; m < 512; ++m) {
        sum += pw * std::exp(-i1 * model.eigenvalue(m, sp) * T / sp.hbar);
        pw *= z0.z0 / w;
        if (std::abs(pw) < 1e-14 * std::abs(sum) && m > 8)
            return inv_sqrt_2pii * sum;
    }
    throw std::runtime_error("exact_conjugate: Laurent sum needs more than 512 terms");
}

cplx matrix_exp_propagator(const ModelSymbol& model, const StateParams& sp,
                           const Label& z0, const Label& zf, double T, int N) {
    if (N < 1 || N > 2048) throw std::invalid_argument("matrix_exp_propagator: bad N");
    if (!model.number_diagonal())
        throw std::domain_error("matrix_exp_propagator: model has no ladder recipe");
    using Mat = Eigen::MatrixXcd;
    using Vec = Eigen::VectorXcd;
    Mat A = Mat::Zero(N, N);
    for (int m = 0; m < N; ++m)
        A(m, m) = cplx(0, -model.eigenvalue(m, sp) * T / sp.hbar);

    // exp(A) by scaling and squaring around a plain Taylor core.
    const double norm = A.cwiseAbs().rowwise().sum().maxCoeff();
    int s = 0;
    while (norm / std::pow(2.0, s) > 0.5) ++s;
    Mat B = A / std::pow(2.0, s);
    Mat U = Mat::Identity(N, N);
    Mat term = Mat::Identity(N, N);
    for (int k = 1; k <= 24; ++k) {
        term = (term * B) / double(k);
        U += term;
    }
    for (int k = 0; k < s; ++k) U = U * U;

    Vec c0(N), cf(N);
    double lf = 0.0;  // log m! accumulator
    for (int m = 0; m < N; ++m) {
        if (m > 0) lf += std::log(double(m));
        const double inv_sqrt_fact = std::exp(-0.5 * lf);
        c0(m) = std::pow(z0.z0, m) * inv_sqrt_fact;
        cf(m) = std::pow(std::conj(zf.z0), m) * inv_sqrt_fact;
    }
    return cf.transpose() * (U * c0);
}

cplx ho_closed_propagator(const StateParams& sp, const Label& z0, const Label& zf,
                          double T, double omega) {
    (void)sp;
    const cplx i1(0, 1);
    return std::exp(std::conj(zf.z0) * z0.z0 * std::exp(-i1 * omega * T) -
                    i1 * omega * T / 2.0);
}

}  // namespace csp
