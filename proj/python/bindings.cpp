#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fermiphase/expr/eval.hpp"
#include "fermiphase/sweep.hpp"
#include "fermiphase/verification.hpp"

namespace py = pybind11;
using namespace fermiphase;

namespace {

struct Workspace {
    AlgebraContextPtr ctx;
    GrassmannPair alpha;
    GrassmannPair beta;

    Workspace() {
        auto symbols = SymbolTable::create({"nbar"}, {});
        ctx = AlgebraContext::create(symbols, {{"alpha", "alphas"}, {"beta", "betas"}});
        alpha = ctx->grassmann_pair(0);
        beta = ctx->grassmann_pair(1);
    }

    PhaseSpaceDistribution distribution(const std::string& kind, double nbar) const {
        auto rho = make_state(ctx, Scalar::real(nbar), Scalar::real(0.0));
        if (kind == "wigner") return wigner(rho, alpha, beta);
        if (kind == "husimi") return husimi(rho, alpha);
        if (kind == "characteristic") return characteristic(rho, alpha);
        throw domain_error("unknown distribution kind '" + kind + "'");
    }
};

const Workspace& workspace() {
    static const Workspace ws;
    return ws;
}

double py_purity(double nbar) {
    const auto& ws = workspace();
    return purity(make_state(ws.ctx, Scalar::real(nbar), Scalar::real(0.0)))
        .as_complex()
        .real();
}

double py_body(const std::string& kind, double nbar) {
    return workspace().distribution(kind, nbar).body_value.as_complex().real();
}

double py_det_gamma(const std::string& kind, double nbar) {
    return covariance(workspace().distribution(kind, nbar)).det().as_complex().real();
}

double py_renyi_entropy(const std::string& kind, double nbar, double r) {
    return renyi_entropy(workspace().distribution(kind, nbar), r).value;
}

std::string py_majorization_relation(const std::string& kind, double nbar1, double nbar2) {
    const auto& ws = workspace();
    auto family = default_concave_family();
    MajorizationVerdict v = majorizes(ws.distribution(kind, nbar1),
                                      ws.distribution(kind, nbar2), family);
    return relation_name(v.relation);
}

py::list py_verify(int grid_points, std::vector<double> orders, double tol, bool exact,
                   bool numeric) {
    VerifyOptions opts;
    opts.grid_points = grid_points;
    opts.orders = std::move(orders);
    opts.tol = tol;
    opts.exact_identities = exact;
    opts.numeric_checks = numeric;
    VerificationReport report = run_full_verification(opts);
    py::list out;
    for (const auto& c : report.checks) {
        py::dict d;
        d["check"] = c.name;
        d["parameters"] = c.params;
        d["lhs"] = c.lhs;
        d["rhs"] = c.rhs;
        d["pass"] = c.pass;
        d["tolerance"] = c.tolerance;
        out.append(d);
    }
    return out;
}

std::string py_sweep_csv(double from, double to, double step, std::vector<double> orders) {
    SweepOptions opts;
    opts.from = from;
    opts.to = to;
    opts.step = step;
    opts.orders = std::move(orders);
    return sweep_csv(opts);
}

} // namespace

PYBIND11_MODULE(_fermiphase, m) {
    m.doc() = "Exact computer algebra for fermionic phase-space distributions";

    m.def("eval", &expr::eval_to_string, py::arg("expression"),
          "Evaluate a Grassmann/operator expression to canonical text form");
    m.def("purity", &py_purity, py::arg("nbar"), "tr(rho^2) = 1 - 2 nbar (1 - nbar)");
    m.def("distribution_body", &py_body, py::arg("kind"), py::arg("nbar"),
          "Body z_B of the wigner/husimi/characteristic distribution");
    m.def("det_gamma", &py_det_gamma, py::arg("kind"), py::arg("nbar"),
          "Determinant of the covariance matrix, -z_B^2");
    m.def("renyi_entropy", &py_renyi_entropy, py::arg("kind"), py::arg("nbar"), py::arg("r"),
          "S_r of the distribution; +inf when the body vanishes");
    m.def("find_wq_crossing", &find_wq_crossing, py::arg("r"),
          "nbar where S_r(W) = S_r(Q); 3/4 for every order");
    m.def("fermi_dirac_nbar",
          [](double eps_over_t) { return thermal_from_nu(-eps_over_t).nbar; },
          py::arg("eps_over_t"), "nbar = 1/(1 + exp(eps/T))");
    m.def("majorization_relation", &py_majorization_relation, py::arg("kind"),
          py::arg("nbar1"), py::arg("nbar2"),
          "Majorization verdict between two distributions of one family");
    m.def("verify", &py_verify, py::arg("grid_points") = 513,
          py::arg("orders") = std::vector<double>{0.25, 0.5, 1.0, 2.0, 4.0},
          py::arg("tol") = 1e-12, py::arg("exact") = true, py::arg("numeric") = true,
          "Run the verification suite; returns a list of check dicts");
    m.def("sweep_csv", &py_sweep_csv, py::arg("from_") = 0.0, py::arg("to") = 1.0,
          py::arg("step") = 1.0 / 512.0,
          py::arg("orders") = std::vector<double>{0.25, 0.5, 1.0, 2.0, 4.0},
          "Disorder-measure grid as CSV text");
    m.def("fermi_dirac_csv", &fermi_dirac_csv, py::arg("ratio_from"), py::arg("ratio_to"),
          py::arg("step"), "(eps/T, nbar) pairs as CSV text");

    py::register_exception<algebra_error>(m, "AlgebraError");
}
