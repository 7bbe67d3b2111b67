#pragma once

#include <cmath>
#include <memory>
#include <string>

#include "csp/core.hpp"

namespace csp {

// Value and derivatives of the normalized symbol H(u,v) = <v|H|u>/<v|u>
// at one phase-space point.
struct SymbolJet {
    cplx h{}, h_u{}, h_v{}, h_uu{}, h_uv{}, h_vv{};

    bool finite() const {
        auto ok = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
        return ok(h) && ok(h_u) && ok(h_v) && ok(h_uu) && ok(h_uv) && ok(h_vv);
    }
};

class ModelSymbol {
public:
    virtual ~ModelSymbol() = default;

    virtual std::string id() const = 0;

    // Closed-form jet. Throws std::domain_error on non-finite output.
    virtual SymbolJet jet(cplx u, cplx v, const StateParams& sp) const = 0;

    // True when H is a function of the number operator alone, so the
    // spectrum is E_m = eigenvalue(m) on the Fock ladder.
    virtual bool number_diagonal() const = 0;
    virtual double eigenvalue(int m, const StateParams& sp) const = 0;

    // Symbol value by direct Fock summation: sum_m E_m (uv)^m/m! / exp(uv).
    // Truncation: stop once |uv|^N/N! < 1e-16 * |partial sum|, N capped at 512.
    // This is the slow reference route; jet() must agree with it.
    cplx fock_symbol(cplx u, cplx v, const StateParams& sp) const;
};

SymbolJet symbol_jet(const ModelSymbol& model, cplx u, cplx v, const StateParams& sp);

// ids: "ho" (harmonic oscillator, frequency param), "quartic-number"
std::unique_ptr<ModelSymbol> make_model(const std::string& id, double omega = 1.0);

}  // namespace csp
