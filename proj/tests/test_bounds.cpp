#include <doctest.h>

#include <cmath>

#include "coeffbounds/bounds.hpp"
#include "coeffbounds/lemma_engine.hpp"

using namespace coeffbounds;

TEST_CASE("bound_gamma closed forms") {
    CHECK(bound_gamma(1, 0.0) == 0.5);
    CHECK(bound_gamma(2, 1.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(bound_gamma(3, 0.0) == 0.25);
    CHECK(bound_gamma(1, 1.0) == 0.25);
    CHECK(bound_gamma(2, 0.5) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(bound_gamma(3, 1.0) == 0.0625);
    CHECK(bound_gamma(1, 3.0) == 0.125);
    CHECK_THROWS(bound_gamma(4, 0.0));
    CHECK_THROWS(bound_gamma(1, -1.0));
}

TEST_CASE("bound_Gamma examples") {
    CHECK(bound_Gamma(2, 0.0) == doctest::Approx(5.0 / 12.0).epsilon(1e-15));
    CHECK(bound_Gamma(3, 0.0) == doctest::Approx(7.0 / 12.0).epsilon(1e-15));
    CHECK(bound_Gamma(1, 1.0) == 0.25);
    // both pieces meet at the recomputed alpha = 1/2 boundary
    const auto& pw2 = piecewise_Gamma2();
    const double b2 = breakpoint("Gamma2_case").alpha;
    CHECK(std::abs(pw2.pieces[0].eval(b2) - pw2.pieces[1].eval(b2)) < 1e-9);
    CHECK(bound_Gamma(2, 0.5) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("bound_gamma_diff examples") {
    const DiffBound d0 = bound_gamma_diff(0.0);
    CHECK(d0.upper == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(d0.lower == doctest::Approx(-1.0 / std::sqrt(5.0)).epsilon(1e-15));
    const DiffBound d1 = bound_gamma_diff(1.0);
    CHECK(d1.upper == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(d1.lower == doctest::Approx(-1.0 / std::sqrt(23.0)).epsilon(1e-15));
}

TEST_CASE("bound_Gamma_diff examples") {
    const DiffBound d3 = bound_Gamma_diff(3.0);
    CHECK(d3.upper == doctest::Approx(1.0 / 21.0).epsilon(1e-15));
    CHECK(d3.lower ==
          doctest::Approx(-0.125 + std::abs(3.0 / 64.0 - 1.0 / 21.0)).epsilon(1e-12));
    // first piece evaluates the lemma's middle branch, -1/(3 sqrt(1+2a))
    CHECK(bound_Gamma_diff(0.0).lower == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("diff lower bounds equal the lemma evaluation") {
    for (double a = 0.0; a <= 10.0; a += 0.01) {
        CHECK(bound_gamma_diff(a).lower ==
              doctest::Approx(-psi_minus_bound(gamma_diff_psi_inputs(a)))
                  .epsilon(1e-12));
        CHECK(bound_gamma_diff(a).upper ==
              doctest::Approx(psi_plus_bound(gamma_diff_psi_inputs(a))).epsilon(1e-12));
        CHECK(bound_Gamma_diff(a).lower ==
              doctest::Approx(-psi_minus_bound(gamma_inv_diff_psi_inputs(a)))
                  .epsilon(1e-12));
        CHECK(bound_Gamma_diff(a).upper ==
              doctest::Approx(psi_plus_bound(gamma_inv_diff_psi_inputs(a)))
                  .epsilon(1e-12));
    }
}

TEST_CASE("piecewise bounds are continuous at interior breakpoints") {
    const PiecewiseBound* bounds[] = {&piecewise_Gamma2(), &piecewise_Gamma3(),
                                      &piecewise_gamma_diff_lower(),
                                      &piecewise_Gamma_diff_lower()};
    for (const PiecewiseBound* pb : bounds) {
        for (std::size_t i = 0; i + 1 < pb->pieces.size(); ++i) {
            const double a = pb->pieces[i].hi;
            CHECK(std::abs(pb->pieces[i].eval(a) - pb->pieces[i + 1].eval(a)) < 1e-9);
        }
    }
}

TEST_CASE("breakpoints match their exact closed forms") {
    auto near = [](const char* name, double exact) {
        CHECK(breakpoint(name).alpha == doctest::Approx(exact).epsilon(1e-9));
    };
    near("Gamma2_case", 0.5);
    near("Gamma3_case", (1.0 + std::sqrt(5.0)) / 4.0);
    near("D5_D6_boundary", (3.0 + std::sqrt(33.0)) / 12.0);
    near("gamma_diff_switch", (1.0 + 2.0 * std::sqrt(3.0)) / 2.0);
    near("B4_sign", (5.0 + 3.0 * std::sqrt(5.0)) / 4.0);
    near("Gamma_diff_first", 1.5);
    near("Gamma_diff_mid_lo", 2.0);
    near("Gamma_diff_mid_hi", (11.0 + std::sqrt(153.0)) / 4.0);
    near("D2_entry", (51.0 + std::sqrt(4641.0)) / 60.0);
    near("D1_exit", (69.0 + std::sqrt(6417.0)) / 36.0);
    CHECK_THROWS(breakpoint("nonexistent"));
}

TEST_CASE("breakpoints against the rounded reference decimals") {
    for (const auto& b : compute_breakpoints()) {
        if (b.warn) continue; // documented discrepancy, reported as WARN
        CHECK(std::abs(b.alpha - b.reference_value) < 5e-3);
    }
    CHECK(breakpoint("D5_D6_boundary").warn);
}

TEST_CASE("bounds decrease in alpha") {
    for (int n = 1; n <= 3; ++n) {
        for (double a = 0.0; a < 10.0; a += 0.05) {
            CHECK(bound_gamma(n, a + 0.05) < bound_gamma(n, a));
            CHECK(bound_Gamma(n, a + 0.05) < bound_Gamma(n, a));
        }
    }
}

TEST_CASE("Gamma2 dominates gamma2 below 1/2, equals beyond") {
    for (double a = 0.0; a < 0.5; a += 0.01) {
        CHECK(bound_Gamma(2, a) > bound_gamma(2, a));
    }
    for (double a = 0.5; a <= 10.0; a += 0.1) {
        CHECK(bound_Gamma(2, a) == doctest::Approx(bound_gamma(2, a)).epsilon(1e-15));
    }
}

TEST_CASE("mu_nu examples") {
    const MuNuPoint a = mu_nu(MuNuSource::Gamma3, 1.0);
    CHECK(a.mu == doctest::Approx(10.0 / 9.0).epsilon(1e-15));
    CHECK(a.nu == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
    const MuNuPoint b = mu_nu(MuNuSource::Gamma3, 0.0);
    CHECK(b.mu == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(b.nu == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    const MuNuPoint c = mu_nu(MuNuSource::Gamma3Inverse, 0.0);
    CHECK(c.mu == doctest::Approx(-10.0 / 3.0).epsilon(1e-15));
    CHECK(c.nu == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("nu curve of the inverse case") {
    const double b3 = breakpoint("Gamma3_case").alpha;
    auto nu = [](double a) { return mu_nu(MuNuSource::Gamma3Inverse, a).nu; };
    // decreasing up to the nu' root, and still close to 1 at the case boundary
    const double stop = breakpoint("nu_prime_root").alpha;
    for (double a = 0.0; a + 0.01 <= stop; a += 0.01) {
        CHECK(nu(a + 0.01) < nu(a) + 1e-12);
    }
    CHECK(nu(b3) == doctest::Approx(1.0).epsilon(1e-9));
    for (double a = 0.0; a <= b3; a += 0.005) CHECK(nu(a) > 0.0);
}

TEST_CASE("gamma3 mu_nu stays in D2 and matches the gamma3 bound") {
    for (double a = 0.0; a <= 10.0; a += 0.02) {
        const MuNuPoint p = mu_nu(MuNuSource::Gamma3, a);
        const RegionLabel lab = ps_region_classify(p.mu, p.nu);
        CHECK(lab.members.count(Region::D2) == 1);
        CHECK(bound_gamma(3, a) * 4.0 * (1.0 + 3.0 * a) == doctest::Approx(1.0));
    }
}

TEST_CASE("bound_hankel") {
    CHECK(bound_hankel(HankelKind::Log, 1.0) ==
          doctest::Approx(1.0 / 81.0).epsilon(1e-15));
    CHECK(bound_hankel(HankelKind::LogInverse, 1.0) ==
          doctest::Approx(1.0 / 81.0).epsilon(1e-15));
    CHECK_THROWS(bound_hankel(HankelKind::Log, 0.0));
}

TEST_CASE("psi input tables") {
    const PsiInputs g0 = gamma_diff_psi_inputs(0.0);
    CHECK(g0.B1 == 0.25);
    CHECK(g0.B2.real() == doctest::Approx(-1.0 / 16.0).epsilon(1e-15));
    CHECK(g0.B3 == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(g0.B4() == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
    const PsiInputs i0 = gamma_inv_diff_psi_inputs(0.0);
    CHECK(i0.B2.real() == doctest::Approx(3.0 / 16.0).epsilon(1e-15));
    CHECK(i0.B3 == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
}
