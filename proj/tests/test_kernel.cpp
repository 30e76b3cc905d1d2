#include "doctest.h"

#include <cmath>

#include "test_support.hpp"

using namespace fermiphase;
using namespace fermiphase::testing;

namespace {

struct KernelFixture {
    AlgebraContextPtr ctx = standard_context();
    int alpha = ctx->find("alpha");
    int alphas = ctx->find("alphas");
    int cr = ctx->creation_index();
    int an = ctx->annihilation_index();
    GrassmannPair pair = ctx->grassmann_pair(0);

    SuperElement gen(int g) const { return SuperElement::generator(ctx, g); }
    SuperElement unit() const { return SuperElement::unit(ctx); }
    SuperElement scalar(Scalar s) const { return SuperElement::from_scalar(ctx, std::move(s)); }
    Scalar nbar() const { return Scalar::symbol(ctx->symbols(), "nbar"); }
};

} // namespace

TEST_CASE("multiply rewrites to normal form") {
    KernelFixture k;
    SuperElement a = k.gen(k.an), ad = k.gen(k.cr), alpha = k.gen(k.alpha);

    CHECK((a * ad).to_string() == "1 - ad*a");
    CHECK((a * ad) == (k.unit() - ad * a));
    CHECK((alpha * alpha).is_zero());
    CHECK((a * alpha) == -(alpha * a));
    CHECK((a * a).is_zero());
    CHECK((ad * ad).is_zero());

    // Repeated CAR rewriting: a ad a = (1 - ad a) a = a.
    CHECK((a * ad * a) == a);
    CHECK((ad * a * ad) == ad);
}

TEST_CASE("multiply requires one context") {
    KernelFixture k;
    auto other = standard_context();
    CHECK_THROWS_AS((void)(k.gen(k.alpha) * SuperElement::generator(other, 0)), context_error);
}

TEST_CASE("adjoint is an involutive antiautomorphism") {
    KernelFixture k;
    SuperElement a = k.gen(k.an), ad = k.gen(k.cr);
    SuperElement alpha = k.gen(k.alpha), alphas = k.gen(k.alphas);

    CHECK(adjoint(alpha) == alphas);
    CHECK(adjoint(alpha * a) == -(alphas * ad));
    CHECK(adjoint(alpha * a).to_string() == "-alphas*ad");
    CHECK(adjoint(k.scalar(Scalar::imaginary_unit())) ==
          k.scalar(-Scalar::imaginary_unit()));
    CHECK(adjoint(a) == ad);
}

TEST_CASE("body, soul and parity") {
    KernelFixture k;
    Scalar half = Scalar::rational(Rational(1, 2));
    SuperElement z = k.scalar(half - k.nbar());
    z.add_product_term({k.alpha, k.alphas}, Scalar::one());

    CHECK(body(z) == half - k.nbar());
    CHECK(soul(k.scalar(Scalar::integer(7))).is_zero());
    CHECK((k.scalar(body(z)) + soul(z)) == z);

    SuperElement mixed = k.gen(k.alpha);
    mixed.add_product_term({k.alpha, k.alphas}, Scalar::one());
    CHECK(parity(mixed) == Parity::mixed);
    CHECK(parity(z) == Parity::even);
    CHECK(parity(k.gen(k.alpha)) == Parity::odd);
}

TEST_CASE("berezin integral follows the pair convention") {
    KernelFixture k;
    SuperElement aa = k.gen(k.alpha) * k.gen(k.alphas);

    CHECK(berezin_integrate(aa, k.pair) == k.unit());
    CHECK(berezin_integrate(k.unit(), k.pair).is_zero());

    // Int Dalpha (c + alpha alphas y) = y for operator-only y.
    SuperElement y = k.gen(k.cr) * k.gen(k.an) + k.scalar(Scalar::integer(2));
    SuperElement arg = k.scalar(Scalar::integer(5)) + aa * y;
    CHECK(berezin_integrate(arg, k.pair) == y);

    // Reversed order carries the anticommutation sign.
    CHECK(berezin_integrate(k.gen(k.alphas) * k.gen(k.alpha), k.pair) == -k.unit());

    CHECK_THROWS_AS((void)berezin_integrate(aa, GrassmannPair{k.cr, k.an}),
                    invalid_measure_error);
}

TEST_CASE("linear substitution and the inverse-Jacobian property") {
    KernelFixture k;
    SuperElement aa = k.gen(k.alpha) * k.gen(k.alphas);
    Scalar two = Scalar::integer(2);

    SuperElement scaled = substitute_linear(
        aa, {{k.alpha, two, k.alpha}, {k.alphas, two, k.alphas}});
    CHECK(scaled == Scalar::integer(4) * aa);
    CHECK(berezin_integrate(scaled, k.pair) == k.scalar(Scalar::integer(4)));

    CHECK(substitute_linear(aa, {{k.alpha, Scalar::one(), k.alpha}}) == aa);

    CHECK_THROWS_AS(
        (void)substitute_linear(aa, {{k.alpha, two, k.cr}}),
        invalid_substitution_error);
    CHECK_THROWS_AS(
        (void)substitute_linear(aa, {{k.alpha, two, k.alphas}, {k.alphas, two, k.alphas}}),
        invalid_substitution_error);
}

TEST_CASE("superfunction application") {
    KernelFixture k;
    Scalar half = Scalar::rational(Rational(1, 2));
    SuperElement aa = k.gen(k.alpha) * k.gen(k.alphas);

    SUBCASE("scaled exponential reproduces the Gaussian closed form") {
        // f(t) = (1/2 - nbar) exp(t / (1/2 - nbar)); only values at t = 0 occur.
        Scalar c = half - k.nbar();
        SuperFunction f("scaled_exp",
                        {[c](const Scalar& at) {
                             REQUIRE(at.is_zero());
                             return c;
                         },
                         [](const Scalar& at) {
                             REQUIRE(at.is_zero());
                             return Scalar::one();
                         }});
        SuperElement w = apply_superfunction(f, aa);
        SuperElement expected = k.scalar(c) + aa;
        CHECK(w == expected);
    }

    SUBCASE("square of a symbolic-body supernumber") {
        SuperFunction square("square", {[](const Scalar& t) { return t * t; },
                                        [](const Scalar& t) { return Scalar::integer(2) * t; },
                                        [](const Scalar&) { return Scalar::integer(2); }});
        SuperElement z = k.scalar(k.nbar()) + aa;
        SuperElement expected = k.scalar(k.nbar() * k.nbar()) +
                                (Scalar::integer(2) * k.nbar()) * aa;
        CHECK(apply_superfunction(square, z) == expected);
        // Int Dalpha f(z) = f'(z_B).
        CHECK(berezin_integrate(apply_superfunction(square, z), k.pair) ==
              k.scalar(Scalar::integer(2) * k.nbar()));
    }

    SUBCASE("identity and constant functions") {
        SuperFunction ident("id", {[](const Scalar& t) { return t; },
                                   [](const Scalar&) { return Scalar::one(); }});
        SuperElement z = k.scalar(half) + aa;
        CHECK(apply_superfunction(ident, z) == z);
        SuperFunction constant("const",
                               {[](const Scalar&) { return Scalar::integer(3); },
                                [](const Scalar&) { return Scalar::zero(); }});
        CHECK(apply_superfunction(constant, z) == k.scalar(Scalar::integer(3)));
    }

    SUBCASE("errors") {
        SuperFunction ident("id", {[](const Scalar& t) { return t; }});
        CHECK_THROWS_AS((void)apply_superfunction(ident, k.gen(k.alpha)), parity_error);
        CHECK_THROWS_AS((void)apply_superfunction(ident, aa), algebra_error);
    }
}

TEST_CASE("operator exponentials") {
    KernelFixture k;
    SuperElement number_op = k.gen(k.cr) * k.gen(k.an);

    SUBCASE("exp(nu ad a) at nu = ln 3 is 1 + 2 ad a") {
        SuperElement x = Scalar::real(std::log(3.0)) * number_op;
        SuperElement e = exp_fock(x);
        CHECK(body(e).as_complex().real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(e.coefficient({k.cr, k.an}).as_complex().real() ==
              doctest::Approx(2.0).epsilon(1e-12));
        CHECK(e.coefficient({k.cr}).is_zero());
        CHECK(e.coefficient({k.an}).is_zero());
    }

    SUBCASE("exp(0) = 1") {
        CHECK(exp_element(SuperElement::zero(k.ctx)) == k.unit());
    }

    SUBCASE("normalized thermal exponential has unit trace") {
        for (double nu : {-3.0, -0.5, 0.0, 1.0, 2.5}) {
            SuperElement e = exp_fock(Scalar::real(nu) * number_op);
            double traced = body(fock_trace(e)).as_complex().real();
            CHECK(traced == doctest::Approx(1.0 + std::exp(nu)).epsilon(1e-12));
            // The idempotency of ad a makes the series geometric:
            // exp(nu ad a) = 1 + (e^nu - 1) ad a.
            CHECK(body(e).as_complex().real() == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(e.coefficient({k.cr, k.an}).as_complex().real() ==
                  doctest::Approx(std::exp(nu) - 1.0).epsilon(1e-12));
        }
    }

    SUBCASE("grassmann content is refused in the Fock route") {
        SuperElement x = k.gen(k.alpha) * k.gen(k.alphas);
        CHECK_THROWS_AS((void)exp_fock(x), unsupported_operand_error);
    }

    SUBCASE("one-pair exponential with a numeric body") {
        SuperElement aa = k.gen(k.alpha) * k.gen(k.alphas);
        SuperElement x = k.scalar(Scalar::real(std::log(2.0))) + aa;
        SuperElement e = exp_nilpotent(x);
        CHECK(body(e).as_complex().real() == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(e.coefficient({k.alpha, k.alphas}).as_complex().real() ==
              doctest::Approx(2.0).epsilon(1e-14));
    }

    SUBCASE("symbolic body has no exact exponential") {
        SuperElement x = k.scalar(k.nbar()) + k.gen(k.alpha) * k.gen(k.alphas);
        CHECK_THROWS_AS((void)exp_nilpotent(x), unsupported_operand_error);
    }

    SUBCASE("non-nilpotent mixed exponent is refused") {
        SuperElement x = number_op + k.gen(k.alpha) * k.gen(k.alphas);
        CHECK_THROWS_AS((void)exp_element(x), unsupported_operand_error);
    }
}

TEST_CASE("fock trace") {
    KernelFixture k;
    SuperElement a = k.gen(k.an), ad = k.gen(k.cr);

    CHECK(fock_trace(ad * a) == k.unit());
    CHECK(fock_trace(k.unit()) == k.scalar(Scalar::integer(2)));
    CHECK(fock_trace(a).is_zero());
    CHECK(fock_trace(ad).is_zero());

    // tr((1-nbar) a ad + nbar ad a) = 1 exactly as a polynomial.
    SuperElement rho = (Scalar::one() - k.nbar()) * (a * ad) + k.nbar() * (ad * a);
    CHECK(fock_trace(rho) == k.unit());

    // tr(rho^2) = 1 - 2 nbar (1 - nbar).
    Scalar expected = Scalar::one() -
                      Scalar::integer(2) * k.nbar() * (Scalar::one() - k.nbar());
    CHECK(body(fock_trace(rho * rho)) == expected);

    // Grassmann variables pass through as spectators.
    SuperElement mixed = k.gen(k.alpha) * k.gen(k.alphas) * (ad * a);
    CHECK(fock_trace(mixed) == k.gen(k.alpha) * k.gen(k.alphas));
}

TEST_CASE("fock matrix representation") {
    KernelFixture k;
    SuperElement a = k.gen(k.an), ad = k.gen(k.cr);

    FockMatrix nmat = to_fock_matrix(ad * a);
    CHECK(nmat.at(0, 0).is_zero());
    CHECK(nmat.at(1, 1).is_one());
    CHECK(nmat.at(0, 1).is_zero());
    CHECK(nmat.at(1, 0).is_zero());

    FockMatrix vac = to_fock_matrix(a * ad);
    CHECK(vac.at(0, 0).is_one());
    CHECK(vac.at(1, 1).is_zero());

    auto rho = make_state(k.ctx, Scalar::rational(Rational(1, 4)), Scalar::zero());
    FockMatrix rmat = to_fock_matrix(rho.element);
    CHECK(rmat.at(0, 0) == Scalar::rational(Rational(3, 4)));
    CHECK(rmat.at(1, 1) == Scalar::rational(Rational(1, 4)));

    CHECK_THROWS_AS((void)to_fock_matrix(k.gen(k.alpha)), unsupported_operand_error);

    // Round trip.
    SuperElement op = Scalar::integer(3) * (ad * a) + Scalar::imaginary_unit() * a - ad;
    CHECK(from_fock_matrix(k.ctx, to_fock_matrix(op)) == op);
}
