#include "csp/model.hpp"

#include <stdexcept>

namespace csp {

cplx ModelSymbol::fock_symbol(cplx u, cplx v, const StateParams& sp) const {
    if (!number_diagonal())
        throw std::domain_error("fock_symbol: model is not number-diagonal");
    const cplx x = u * v;
    cplx term = 1.0;          // x^m / m!
    cplx num = eigenvalue(0, sp);
    cplx den = 1.0;
    for (int m = 1; m < 512; ++m) {
        term *= x / double(m);
        num += eigenvalue(m, sp) * term;
        den += term;
        if (std::abs(term) < 1e-16 * std::abs(den) && m > 4) break;
    }
    return num / den;
}

SymbolJet symbol_jet(const ModelSymbol& model, cplx u, cplx v, const StateParams& sp) {
    SymbolJet j = model.jet(u, v, sp);
    if (!j.finite())
        throw std::domain_error("symbol_jet: non-finite jet for model " + model.id());
    return j;
}

namespace {

class HoModel final : public ModelSymbol {
public:
    explicit HoModel(double omega) : omega_(omega) {}

    std::string id() const override { return "ho"; }

    SymbolJet jet(cplx u, cplx v, const StateParams& sp) const override {
        SymbolJet j;
        const double hw = sp.hbar * omega_;
        j.h = hw * (u * v + 0.5);
        j.h_u = hw * v;
        j.h_v = hw * u;
        j.h_uu = 0.0;
        j.h_uv = hw;
        j.h_vv = 0.0;
        return j;
    }

    bool number_diagonal() const override { return true; }

    double eigenvalue(int m, const StateParams& sp) const override {
        return sp.hbar * omega_ * (m + 0.5);
    }

private:
    double omega_;
};

// H = (a^dag a + 1/2)^2, E_m = (m+1/2)^2. Normalized symbol is
// n^2 + 2n + 1/4 with n = uv, independent of hbar.
class QuarticNumberModel final : public ModelSymbol {
public:
    std::string id() const override { return "quartic-number"; }

    SymbolJet jet(cplx u, cplx v, const StateParams&) const override {
        SymbolJet j;
        const cplx n = u * v;
        j.h = n * n + 2.0 * n + 0.25;
        j.h_u = v * (2.0 * n + 2.0);
        j.h_v = u * (2.0 * n + 2.0);
        j.h_uu = 2.0 * v * v;
        j.h_uv = 4.0 * n + 2.0;
        j.h_vv = 2.0 * u * u;
        return j;
    }

    bool number_diagonal() const override { return true; }

    double eigenvalue(int m, const StateParams&) const override {
        const double x = m + 0.5;
        return x * x;
    }
};

}  // namespace

std::unique_ptr<ModelSymbol> make_model(const std::string& id, double omega) {
    if (id == "ho") return std::make_unique<HoModel>(omega);
    if (id == "quartic-number") return std::make_unique<QuarticNumberModel>();
    throw std::invalid_argument("make_model: unknown model id '" + id + "'");
}

}  // namespace csp
