#include "fermiphase/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "fermiphase/verification.hpp"

namespace fermiphase {

namespace {

std::string num15(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

std::string order_label(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", r);
    return buf;
}

} // namespace

std::string sweep_csv(const SweepOptions& options) {
    if (!(options.from >= 0.0 && options.from < options.to && options.to <= 1.0))
        throw domain_error("sweep: need 0 <= from < to <= 1");
    if (!(options.step > 0.0)) throw domain_error("sweep: step must be positive");
    for (double r : options.orders)
        if (!(r > 0.0)) throw domain_error("sweep: entropic orders must be positive");

    std::string out = "nbar,det_gamma_W,det_gamma_Q";
    for (double r : options.orders) {
        out += ",S_W_" + order_label(r);
        out += ",S_Q_" + order_label(r);
    }
    out += ",purity,wigner_sign\n";

    auto symbols = SymbolTable::create({"nbar"}, {});
    auto ctx = AlgebraContext::create(symbols, {{"alpha", "alphas"}, {"beta", "betas"}});
    GrassmannPair alpha = ctx->grassmann_pair(0);
    GrassmannPair beta = ctx->grassmann_pair(1);

    long steps = (long)std::floor((options.to - options.from) / options.step + 1e-9);
    for (long i = 0; i <= steps; ++i) {
        double nbar = options.from + (double)i * options.step;
        if (nbar > options.to) nbar = options.to;
        auto rho = make_state(ctx, Scalar::real(nbar), Scalar::real(0.0));
        auto w = wigner(rho, alpha, beta);
        auto q = husimi(rho, alpha);
        double det_w = covariance(w).det().as_complex().real();
        double det_q = covariance(q).det().as_complex().real();
        double pur = purity(rho).as_complex().real();
        double wbody = w.body_value.as_complex().real();
        const char* sign = wbody > 0.0 ? "positive" : (wbody < 0.0 ? "negative" : "zero");

        out += num15(nbar) + "," + num15(det_w) + "," + num15(det_q);
        for (double r : options.orders) {
            out += "," + num15(renyi_entropy(w, r).value);
            out += "," + num15(renyi_entropy(q, r).value);
        }
        out += "," + num15(pur) + "," + sign + "\n";
    }
    return out;
}

std::string fermi_dirac_csv(double ratio_from, double ratio_to, double step) {
    if (!(ratio_from < ratio_to)) throw domain_error("fermi-dirac: need from < to");
    if (!(step > 0.0)) throw domain_error("fermi-dirac: step must be positive");

    std::string out = "eps_over_T,nbar\n";
    long steps = (long)std::floor((ratio_to - ratio_from) / step + 1e-9);
    for (long i = 0; i <= steps; ++i) {
        double ratio = ratio_from + (double)i * step;
        double nbar = thermal_from_nu(-ratio).nbar;
        out += num15(ratio) + "," + num15(nbar) + "\n";
    }
    return out;
}

} // namespace fermiphase
