#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "coeffbounds/functionals.hpp"
#include "coeffbounds/walpha.hpp"

using namespace coeffbounds;

namespace {

// polynomial arithmetic to order z^4 (index = power), for the independent
// series oracles
using Poly = std::array<Complex, 5>;

Poly mul(const Poly& a, const Poly& b) {
    Poly r{};
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; i + j < 5; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// f(z) = z + a2 z^2 + a3 z^3 + a4 z^4
Poly series_of(const TaylorPrefix& a) {
    return {0.0, 1.0, a.a2, a.a3, a.a4};
}

// g(f(z)) truncated at z^4, g given as coefficients of w..w^4
Poly compose(const Poly& g, const Poly& f) {
    Poly r{};
    r[0] = g[0];
    Poly fp{1.0};  // f^k
    for (int k = 1; k < 5; ++k) {
        fp = mul(fp, f);
        for (int i = 0; i < 5; ++i) r[i] += g[k] * fp[i];
    }
    return r;
}

// log(1 + u) with u = a2 z + a3 z^2 + a4 z^3, truncated at z^3; returns the
// coefficients of z, z^2, z^3
std::array<Complex, 3> log_series(const TaylorPrefix& a) {
    Poly u{0.0, a.a2, a.a3, a.a4};
    const Poly u2 = mul(u, u);
    const Poly u3 = mul(u2, u);
    std::array<Complex, 3> out;
    for (int i = 1; i <= 3; ++i) out[i - 1] = u[i] - u2[i] / 2.0 + u3[i] / 3.0;
    return out;
}

TaylorPrefix random_prefix(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
}

} // namespace

TEST_CASE("log_coeffs examples") {
    const LogCoeffs k = log_coeffs({2, 3, 4});
    CHECK(std::abs(k.g1 - 1.0) < 1e-12);
    CHECK(std::abs(k.g2 - 0.5) < 1e-12);
    CHECK(std::abs(k.g3 - 1.0 / 3.0) < 1e-12);

    const LogCoeffs f2 = log_coeffs({0.0, 2.0 / 9.0, 0.0});
    CHECK(std::abs(f2.g1) < 1e-12);
    CHECK(std::abs(f2.g2 - 1.0 / 9.0) < 1e-12);
    CHECK(std::abs(f2.g3) < 1e-12);

    const LogCoeffs z = log_coeffs({0, 0, 0});
    CHECK(std::abs(z.g1) + std::abs(z.g2) + std::abs(z.g3) == 0.0);
}

TEST_CASE("inverse_coeffs examples") {
    const InvCoeffs k = inverse_coeffs({2, 3, 4});
    CHECK(std::abs(k.A2 + 2.0) < 1e-12);
    CHECK(std::abs(k.A3 - 5.0) < 1e-12);
    CHECK(std::abs(k.A4 + 14.0) < 1e-12);
}

TEST_CASE("inverse series composes back to the identity") {
    std::mt19937_64 rng(314);
    for (int i = 0; i < 2000; ++i) {
        const TaylorPrefix a = random_prefix(rng);
        const InvCoeffs A = inverse_coeffs(a);
        const Poly comp =
            compose(series_of(a), series_of({A.A2, A.A3, A.A4}));
        CHECK(std::abs(comp[1] - 1.0) < 1e-10);
        CHECK(std::abs(comp[2]) < 1e-10);
        CHECK(std::abs(comp[3]) < 1e-10);
        CHECK(std::abs(comp[4]) < 1e-10);
    }
}

TEST_CASE("log_inverse_coeffs examples") {
    const LogInvCoeffs k = log_inverse_coeffs({2, 3, 4});
    CHECK(std::abs(k.G1 + 1.0) < 1e-12);
    CHECK(std::abs(k.G2 - 1.5) < 1e-12);
    CHECK(std::abs(k.G3 + 10.0 / 3.0) < 1e-12);

    // F1 at alpha = 0
    const LogInvCoeffs f1 = log_inverse_coeffs({1.0, 2.0 / 3.0, 0.5});
    CHECK(std::abs(f1.G1 + 0.5) < 1e-12);
    CHECK(std::abs(f1.G2 - 5.0 / 12.0) < 1e-12);
    CHECK(std::abs(f1.G3 + 7.0 / 12.0) < 1e-12);
}

TEST_CASE("Gamma equals gamma of the inverse prefix") {
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 100000; ++i) {
        const TaylorPrefix a = random_prefix(rng);
        const InvCoeffs A = inverse_coeffs(a);
        const LogCoeffs g = log_coeffs({A.A2, A.A3, A.A4});
        const LogInvCoeffs G = log_inverse_coeffs(a);
        CHECK(std::abs(G.G1 - g.g1) < 1e-12);
        CHECK(std::abs(G.G2 - g.g2) < 1e-12);
        CHECK(std::abs(G.G3 - g.g3) < 1e-12);
    }
}

TEST_CASE("gamma via brute-force series log") {
    std::mt19937_64 rng(555);
    for (int i = 0; i < 2000; ++i) {
        const TaylorPrefix a = random_prefix(rng);
        const LogCoeffs g = log_coeffs(a);
        const auto ls = log_series(a);
        CHECK(std::abs(g.g1 - ls[0] / 2.0) < 1e-12);
        CHECK(std::abs(g.g2 - ls[1] / 2.0) < 1e-12);
        CHECK(std::abs(g.g3 - ls[2] / 2.0) < 1e-12);
    }
}

TEST_CASE("moduli differences") {
    CHECK(gamma_diff({0, 0, 0}) == 0.0);
    CHECK(gamma_diff({0.0, 2.0 / 3.0, 0.0}) == doctest::Approx(1.0 / 3.0));
    CHECK(gamma_diff({2, 3, 4}) == doctest::Approx(-0.5));
    CHECK(Gamma_diff({0.0, 2.0 / 9.0, 0.0}) == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("hankel determinants") {
    CHECK(std::abs(hankel_log({2, 3, 4}) - Complex(1.0 / 12.0)) < 1e-12);
    CHECK(std::abs(hankel_log({0, 0, 0})) == 0.0);
    const Complex h6 = hankel_log({0.0, 2.0 / 9.0, 0.0});
    CHECK(std::abs(h6 + Complex(1.0 / 81.0)) < 1e-15);
    const Complex h6i = hankel_log_inverse({0.0, 2.0 / 9.0, 0.0});
    CHECK(std::abs(h6i + Complex(1.0 / 81.0)) < 1e-15);
}

TEST_CASE("hankel dual-formula agreement") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100000; ++i) {
        const TaylorPrefix a = random_prefix(rng);
        const Complex poly =
            (a.a2 * a.a4 - a.a3 * a.a3 + a.a2 * a.a2 * a.a2 * a.a2 / 12.0) / 4.0;
        CHECK(std::abs(hankel_log(a) - poly) < 1e-12);
        const Complex a2sq = a.a2 * a.a2;
        const Complex poly_inv =
            (13.0 * a2sq * a2sq / 12.0 + a.a2 * a.a4 - a2sq * a.a3 - a.a3 * a.a3) / 4.0;
        CHECK(std::abs(hankel_log_inverse(a) - poly_inv) < 1e-12);
    }
}

TEST_CASE("rotation invariance") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> u(0.0, 6.28);
    for (int i = 0; i < 100000; ++i) {
        const TaylorPrefix a = random_prefix(rng);
        const double th = u(rng);
        const Complex w = std::polar(1.0, th);
        const TaylorPrefix r{a.a2 * w, a.a3 * w * w, a.a4 * w * w * w};
        const LogCoeffs ga = log_coeffs(a), gr = log_coeffs(r);
        CHECK(std::abs(std::abs(gr.g1) - std::abs(ga.g1)) < 1e-12);
        CHECK(std::abs(std::abs(gr.g2) - std::abs(ga.g2)) < 1e-12);
        CHECK(std::abs(std::abs(gr.g3) - std::abs(ga.g3)) < 1e-12);
        CHECK(std::abs(gamma_diff(r) - gamma_diff(a)) < 1e-12);
        CHECK(std::abs(Gamma_diff(r) - Gamma_diff(a)) < 1e-12);
        CHECK(std::abs(std::abs(hankel_log(r)) - std::abs(hankel_log(a))) < 1e-12);
        CHECK(std::abs(std::abs(hankel_log_inverse(r)) -
                       std::abs(hankel_log_inverse(a))) < 1e-12);
    }
}
