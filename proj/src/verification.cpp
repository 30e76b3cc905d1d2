#include "fermiphase/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "json.hpp"

namespace fermiphase {

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerificationCheck& c) { return c.pass; });
}

size_t VerificationReport::failure_count() const {
    return (size_t)std::count_if(checks.begin(), checks.end(),
                                 [](const VerificationCheck& c) { return !c.pass; });
}

void VerificationReport::add_exact(const std::string& name, bool holds,
                                   std::map<std::string, double> params) {
    add({name, std::move(params), holds ? 1.0 : 0.0, 1.0, holds, 0.0});
}

void VerificationReport::merge(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

nlohmann::json number_or_null(nlohmann::json& obj, const std::string& key, double v) {
    if (std::isinf(v)) {
        obj[key] = nullptr;
        obj[key + "_infinite"] = true;
    } else {
        obj[key] = v;
    }
    return obj;
}

} // namespace

std::string VerificationReport::to_json_string() const {
    nlohmann::json root;
    root["all_pass"] = all_pass();
    root["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["check"] = c.name;
        jc["parameters"] = c.params;
        number_or_null(jc, "lhs", c.lhs);
        number_or_null(jc, "rhs", c.rhs);
        jc["pass"] = c.pass;
        jc["tolerance"] = c.tolerance;
        root["checks"].push_back(jc);
    }
    return root.dump(2) + "\n";
}

std::string VerificationReport::summary() const {
    std::string out;
    for (const auto& c : checks) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += c.name;
        char buf[128];
        std::snprintf(buf, sizeof(buf), "  (lhs=%.12g, rhs=%.12g, tol=%.3g)", c.lhs, c.rhs,
                      c.tolerance);
        out += buf;
        out += "\n";
    }
    return out;
}

namespace {

struct NumericWorkspace {
    AlgebraContextPtr ctx;
    GrassmannPair alpha;
    GrassmannPair beta;

    NumericWorkspace() {
        auto symbols = SymbolTable::create({"nbar"}, {});
        ctx = AlgebraContext::create(symbols, {{"alpha", "alphas"}, {"beta", "betas"}});
        alpha = ctx->grassmann_pair(0);
        beta = ctx->grassmann_pair(1);
    }

    DensityOperator state(double nbar) const {
        return make_state(ctx, Scalar::real(nbar), Scalar::real(0.0));
    }
    PhaseSpaceDistribution w(double nbar) const { return wigner(state(nbar), alpha, beta); }
    PhaseSpaceDistribution q(double nbar) const { return husimi(state(nbar), alpha); }
};

double entropy_of(const PhaseSpaceDistribution& z, double r) {
    EntropyValue e = renyi_entropy(z, r);
    return e.value;
}

} // namespace

std::vector<double> nbar_grid(int points) {
    if (points < 2) throw domain_error("nbar_grid: need at least two points");
    std::vector<double> grid((size_t)points);
    for (int i = 0; i < points; ++i) grid[(size_t)i] = (double)i / (double)(points - 1);
    return grid;
}

double find_wq_crossing(double r) {
    if (!(r > 0.0)) throw domain_error("find_wq_crossing: order must be positive");
    NumericWorkspace ws;
    auto gap = [&](double n) {
        return entropy_of(ws.w(n), r) - entropy_of(ws.q(n), r);
    };
    double lo = 0.5 + 1e-9, hi = 1.0 - 1e-9;
    double flo = gap(lo);
    for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
        double mid = 0.5 * (lo + hi);
        double fm = gap(mid);
        if ((flo > 0) == (fm > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

VerificationReport verify_uncertainty_relations(const std::vector<double>& grid,
                                                const std::vector<double>& orders,
                                                double tol) {
    for (double n : grid)
        if (!(n >= 0.0 && n <= 1.0))
            throw domain_error("verify_uncertainty_relations: grid point outside [0, 1]");
    NumericWorkspace ws;

    struct PointData {
        double nbar, det_w, det_q;
    };
    std::vector<PointData> data;
    data.reserve(grid.size());
    std::vector<PhaseSpaceDistribution> ws_cache, qs_cache;
    ws_cache.reserve(grid.size());
    qs_cache.reserve(grid.size());
    for (double n : grid) {
        auto wd = ws.w(n);
        auto qd = ws.q(n);
        double dw = covariance(wd).det().as_complex().real();
        double dq = covariance(qd).det().as_complex().real();
        data.push_back({n, dw, dq});
        ws_cache.push_back(std::move(wd));
        qs_cache.push_back(std::move(qd));
    }

    VerificationReport report;
    auto value_at = [&](double n) -> const PointData* {
        for (const auto& p : data)
            if (p.nbar == n) return &p;
        return nullptr;
    };

    // Second-moment bounds: -1/4 <= det(W) <= 0 and -1 <= det(Q) <= 0.
    double min_dw = 1e300, max_dw = -1e300, min_dq = 1e300, max_dq = -1e300;
    for (const auto& p : data) {
        min_dw = std::min(min_dw, p.det_w);
        max_dw = std::max(max_dw, p.det_w);
        min_dq = std::min(min_dq, p.det_q);
        max_dq = std::max(max_dq, p.det_q);
    }
    report.add({"det_gamma_W_lower_bound", {}, min_dw, -0.25, min_dw >= -0.25 - tol, tol});
    report.add({"det_gamma_W_upper_bound", {}, max_dw, 0.0, max_dw <= tol, tol});
    report.add({"det_gamma_Q_lower_bound", {}, min_dq, -1.0, min_dq >= -1.0 - tol, tol});
    report.add({"det_gamma_Q_upper_bound", {}, max_dq, 0.0, max_dq <= tol, tol});
    if (const auto* p0 = value_at(0.0)) {
        report.add({"det_gamma_W_attained_at_vacuum", {{"nbar", 0.0}}, p0->det_w, -0.25,
                    std::abs(p0->det_w + 0.25) <= tol, tol});
        report.add({"det_gamma_Q_attained_at_vacuum", {{"nbar", 0.0}}, p0->det_q, -1.0,
                    std::abs(p0->det_q + 1.0) <= tol, tol});
    }
    if (const auto* p1 = value_at(1.0)) {
        report.add({"det_gamma_W_attained_at_excited", {{"nbar", 1.0}}, p1->det_w, -0.25,
                    std::abs(p1->det_w + 0.25) <= tol, tol});
        report.add({"det_gamma_Q_vanishes_at_excited", {{"nbar", 1.0}}, p1->det_q, 0.0,
                    std::abs(p1->det_q) <= tol, tol});
    }
    if (const auto* ph = value_at(0.5))
        report.add({"det_gamma_W_vanishes_at_half", {{"nbar", 0.5}}, ph->det_w, 0.0,
                    std::abs(ph->det_w) <= tol, tol});

    // Entropic bounds and the equivalence with det gamma.
    for (double r : orders) {
        double c = renyi_constant(r);
        double worst_w_margin = 1e300, worst_q_margin = 1e300;
        double max_equiv_err = 0.0;
        for (size_t i = 0; i < data.size(); ++i) {
            EntropyValue sw = renyi_entropy(ws_cache[i], r);
            EntropyValue sq = renyi_entropy(qs_cache[i], r);
            if (!sw.infinite) {
                worst_w_margin = std::min(worst_w_margin, sw.value - (c + std::log(2.0)));
                double via_det = c - 0.5 * std::log(-data[i].det_w);
                max_equiv_err = std::max(max_equiv_err, std::abs(sw.value - via_det));
            }
            if (!sq.infinite && data[i].det_q != 0.0) {
                worst_q_margin = std::min(worst_q_margin, sq.value - c);
                double via_det = c - 0.5 * std::log(-data[i].det_q);
                max_equiv_err = std::max(max_equiv_err, std::abs(sq.value - via_det));
            }
        }
        std::map<std::string, double> params = {{"r", r}};
        report.add({"entropy_W_lower_bound", params, worst_w_margin, 0.0,
                    worst_w_margin >= -tol, tol});
        report.add({"entropy_Q_lower_bound", params, worst_q_margin, 0.0,
                    worst_q_margin >= -tol, tol});
        report.add({"entropy_det_gamma_equivalence", params, max_equiv_err, 0.0,
                    max_equiv_err <= tol, tol});
        report.add({"entropy_W_bound_attained_at_vacuum", params,
                    entropy_of(ws.w(0.0), r), c + std::log(2.0),
                    std::abs(entropy_of(ws.w(0.0), r) - c - std::log(2.0)) <= tol, tol});
        report.add({"entropy_W_bound_attained_at_excited", params,
                    entropy_of(ws.w(1.0), r), c + std::log(2.0),
                    std::abs(entropy_of(ws.w(1.0), r) - c - std::log(2.0)) <= tol, tol});
        report.add({"entropy_Q_bound_attained_at_vacuum", params,
                    entropy_of(ws.q(0.0), r), c,
                    std::abs(entropy_of(ws.q(0.0), r) - c) <= tol, tol});
    }

    // Shannon special values S(W_0) = -1 + ln 2, S(Q_0) = -1.
    report.add({"shannon_W_vacuum", {{"r", 1.0}}, entropy_of(ws.w(0.0), 1.0),
                -1.0 + std::log(2.0),
                std::abs(entropy_of(ws.w(0.0), 1.0) + 1.0 - std::log(2.0)) <= tol, tol});
    report.add({"shannon_Q_vacuum", {{"r", 1.0}}, entropy_of(ws.q(0.0), 1.0), -1.0,
                std::abs(entropy_of(ws.q(0.0), 1.0) + 1.0) <= tol, tol});

    return report;
}

namespace {

void exact_identity_checks(VerificationReport& report) {
    auto symbols = SymbolTable::create({"nbar"}, {});
    auto ctx = AlgebraContext::create(symbols, {{"alpha", "alphas"}, {"beta", "betas"}});
    GrassmannPair alpha = ctx->grassmann_pair(0);
    GrassmannPair beta = ctx->grassmann_pair(1);
    Scalar n = Scalar::symbol(symbols, "nbar");
    Scalar half = Scalar::rational(Rational(1, 2));
    SuperElement one = SuperElement::unit(ctx);
    SuperElement aa = SuperElement::generator(ctx, alpha.var) *
                      SuperElement::generator(ctx, alpha.conj);
    auto rho = make_state(ctx, n, Scalar::zero());

    report.add_exact("purity_equals_1_minus_2n_1_minus_n",
                     purity(rho) == Scalar::one() - Scalar::integer(2) * n *
                                        (Scalar::one() - n));

    auto chi = characteristic(rho, alpha);
    report.add_exact("characteristic_closed_form",
                     chi.element == one + (half - n) * aa);

    auto w = wigner(rho, alpha, beta);
    report.add_exact("wigner_fourier_pipeline_closed_form",
                     w.element == SuperElement::from_scalar(ctx, half - n) + aa);
    report.add_exact("wigner_normalized", berezin_integrate(w.element, alpha) == one);
    report.add_exact("wigner_real", adjoint(w.element) == w.element);

    auto q = husimi(rho, alpha);
    SuperElement q_closed = SuperElement::from_scalar(ctx, Scalar::one() - n) + aa;
    report.add_exact("husimi_projector_route_closed_form", q.element == q_closed);
    report.add_exact("husimi_bracket_route_closed_form",
                     coherent_matrix_element(rho.element, alpha) == q_closed);
    report.add_exact("husimi_normalized", berezin_integrate(q.element, alpha) == one);
    report.add_exact("husimi_real", adjoint(q.element) == q.element);

    SuperElement d = displacement(ctx, alpha);
    report.add_exact("displacement_unitary",
                     d * adjoint(d) == one && adjoint(d) * d == one);
    report.add_exact("displacement_adjoint_is_negation",
                     adjoint(d) == negate_pair(d, alpha));

    report.add_exact("coherent_identity_resolution",
                     berezin_integrate(coherent_projector(ctx, alpha), alpha) == one);

    report.add_exact("trace_coherent_density_is_one",
                     trace_coherent(rho.element, alpha) == Scalar::one());
    SuperElement wrong = coherent_matrix_element(rho.element, alpha, /*negate_ket=*/false);
    report.add_exact("trace_coherent_sign_regression",
                     body(berezin_integrate(wrong, alpha)) ==
                         Scalar::one() - Scalar::integer(2) * n);

    Scalar det_w = covariance(w).det();
    Scalar det_q = covariance(q).det();
    report.add_exact("covariance_det_W_closed_form",
                     det_w == -((half - n) * (half - n)));
    report.add_exact("covariance_det_Q_closed_form",
                     det_q == -((Scalar::one() - n) * (Scalar::one() - n)));
}

void majorization_chain_checks(VerificationReport& report, double tol) {
    NumericWorkspace ws;
    auto family = default_concave_family();

    auto link = [&](const char* name, const PhaseSpaceDistribution& z1,
                    const PhaseSpaceDistribution& z2) {
        MajorizationVerdict v = majorizes(z1, z2, family, tol);
        bool pass = v.relation == MajorizationRelation::first_majorized_by_second;
        report.add({name,
                    {{"body1", v.body1}, {"body2", v.body2},
                     {"witnesses", (double)v.witnesses.size()}},
                    v.body1, v.body2, pass, tol});
    };

    link("majorization_W1_below_Wminus", ws.w(1.0), ws.w(0.8));
    link("majorization_Wminus_below_Whalf", ws.w(0.8), ws.w(0.5));
    link("majorization_Whalf_below_Wplus", ws.w(0.5), ws.w(0.2));
    link("majorization_Wplus_below_W0", ws.w(0.2), ws.w(0.0));
    link("majorization_W1_below_W0_transitive", ws.w(1.0), ws.w(0.0));
    link("majorization_Q1_below_Qmid", ws.q(1.0), ws.q(0.5));
    link("majorization_Qmid_below_Q0", ws.q(0.5), ws.q(0.0));
    link("majorization_Q1_below_Q0_transitive", ws.q(1.0), ws.q(0.0));

    MajorizationVerdict self = majorizes(ws.w(0.3), ws.w(0.3), family, tol);
    report.add({"majorization_reflexive_equivalence", {{"nbar", 0.3}},
                (double)(self.relation == MajorizationRelation::equivalent), 1.0,
                self.relation == MajorizationRelation::equivalent, 0.0});
}

void figure_checks(VerificationReport& report, const std::vector<double>& orders,
                   double tol) {
    NumericWorkspace ws;

    for (double r : orders) {
        double crossing = find_wq_crossing(r);
        report.add({"wq_crossing_at_three_quarters", {{"r", r}}, crossing, 0.75,
                    std::abs(crossing - 0.75) <= 1e-10, 1e-10});
    }

    // Symmetry S_r(W_n) = S_r(W_{1-n}).
    for (double r : orders) {
        double max_err = 0.0;
        for (int i = 0; i <= 128; ++i) {
            double nv = i / 256.0; // stays below 1/2, mirror above
            if (nv == 0.5) continue;
            double s1 = entropy_of(ws.w(nv), r);
            double s2 = entropy_of(ws.w(1.0 - nv), r);
            max_err = std::max(max_err, std::abs(s1 - s2));
        }
        report.add({"entropy_W_symmetric_about_half", {{"r", r}}, max_err, 0.0,
                    max_err <= tol, tol});
    }

    // Monotonicity of r -> S_r(z) at 20 reproducible random nbar values.
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> dist(0.01, 0.99);
    std::vector<double> r_grid = {0.25, 0.5, 1.0, 2.0, 4.0};
    bool monotone = true;
    double worst_step = 1e300;
    for (int k = 0; k < 20; ++k) {
        double nv = dist(rng);
        if (std::abs(nv - 0.5) < 1e-6) nv += 0.01;
        for (auto z : {ws.w(nv), ws.q(nv)}) {
            double prev = -1e300;
            for (double r : r_grid) {
                double s = entropy_of(z, r);
                worst_step = std::min(worst_step, s - prev);
                if (s < prev - tol) monotone = false;
                prev = s;
            }
        }
    }
    report.add({"entropy_monotone_in_order", {{"points", 20.0}}, worst_step, 0.0, monotone,
                tol});

    // S_r(W) vs S_r(Q): larger below nbar = 3/4, smaller above.
    bool ordering = true;
    for (double r : {0.5, 1.0, 2.0}) {
        for (int i = 1; i < 64; ++i) {
            double nv = i / 64.0;
            if (nv == 0.5) continue;
            double sw = entropy_of(ws.w(nv), r);
            double sq = entropy_of(ws.q(nv), r);
            if (nv < 0.75 && !(sw > sq - tol)) ordering = false;
            if (nv > 0.75 && !(sq > sw - tol)) ordering = false;
            if (nv == 0.75 && std::abs(sw - sq) > tol) ordering = false;
        }
    }
    report.add({"entropy_WQ_ordering_switches_at_three_quarters", {},
                (double)ordering, 1.0, ordering, tol});

    // Fermi-Dirac parametrization: nbar(0) = 1/2, monotone decreasing in eps/T.
    double at_zero = thermal_from_nu(-0.0).nbar;
    report.add({"fermi_dirac_half_at_zero_ratio", {}, at_zero, 0.5,
                std::abs(at_zero - 0.5) <= tol, tol});
    bool decreasing = true;
    double prev = 2.0;
    for (int i = -100; i <= 100; ++i) {
        double ratio = 0.1 * i;
        double nv = thermal_from_nu(-ratio).nbar;
        if (nv > prev + tol) decreasing = false;
        prev = nv;
    }
    report.add({"fermi_dirac_monotone_in_ratio", {}, (double)decreasing, 1.0, decreasing,
                tol});
}

void kernel_cross_checks(VerificationReport& report, const std::vector<double>& orders,
                         double tol) {
    NumericWorkspace ws;

    // Renyi integral identity Int |z|^r = r |z_B|^(r-1) against the
    // superfunction route, including the sign-flipped negative-body branch.
    double max_err = 0.0;
    for (double r : orders) {
        for (int i = 0; i <= 32; ++i) {
            double nv = i / 32.0;
            if (nv == 0.5) continue;
            for (auto z : {ws.w(nv), ws.q(nv)}) {
                double zb = z.body_value.as_complex().real();
                if (zb == 0.0) continue;
                double direct = r * std::pow(std::abs(zb), r - 1.0);
                double via_kernel = renyi_integral_via_kernel(z, r);
                max_err = std::max(max_err, std::abs(direct - via_kernel));
            }
        }
    }
    report.add({"renyi_integral_kernel_crosscheck", {}, max_err, 0.0, max_err <= 1e-9,
                1e-9});

    // Concave-average oracle: analytic f'(z_B) equals the kernel route.
    auto family = default_concave_family();
    double max_oracle_err = 0.0;
    for (int i = 0; i <= 64; ++i) {
        double nv = i / 64.0;
        for (auto z : {ws.w(nv), ws.q(nv)}) {
            double zb = z.body_value.as_complex().real();
            for (const auto& f : family) {
                ConcaveTestFunction fn = f;
                bool collides =
                    std::find(fn.nondifferentiable.begin(), fn.nondifferentiable.end(), zb) !=
                    fn.nondifferentiable.end();
                if (collides) fn = fn.with_param(fn.param + 1e-6);
                double analytic = concave_average(fn, z);
                double via_kernel = concave_average_via_kernel(fn, z);
                max_oracle_err = std::max(max_oracle_err, std::abs(analytic - via_kernel));
            }
        }
    }
    report.add({"concave_average_kernel_crosscheck", {}, max_oracle_err, 0.0,
                max_oracle_err <= tol, tol});
}

} // namespace

VerificationReport run_full_verification(const VerifyOptions& options) {
    VerificationReport report;
    if (options.exact_identities) exact_identity_checks(report);
    if (options.numeric_checks) {
        report.merge(verify_uncertainty_relations(nbar_grid(options.grid_points),
                                                  options.orders, options.tol));
        majorization_chain_checks(report, options.tol);
        figure_checks(report, options.orders, options.tol);
        kernel_cross_checks(report, options.orders, options.tol);
    }
    return report;
}

} // namespace fermiphase
