#include "coeffbounds/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coeffbounds/rootfind.hpp"

namespace coeffbounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_alpha(double alpha) {
    if (!(alpha >= 0.0)) {
        throw std::invalid_argument("alpha must be nonnegative");
    }
}

double M_lower(double alpha) {
    const double q = 1.0 + 2.0 * alpha;
    return -1.0 / (3.0 * q) -
           3.0 * q / (4.0 * std::abs(4.0 * alpha * alpha - 10.0 * alpha - 5.0) +
                      16.0 * (1.0 + alpha) * (1.0 + alpha));
}

std::vector<Breakpoint> build_breakpoints() {
    struct Spec {
        const char* name;
        std::function<double(double)> f;
        const char* equation;
        double ref;
        Provenance prov;
        bool warn;
    };
    // Every defining function is a polynomial in alpha with exactly one
    // root in the scan range [0, 20].
    const std::vector<Spec> specs = {
        {"Gamma2_case", [](double a) { return 8 * a * a - 2 * a - 1; },
         "9(1+2a) = 8(1+a)^2  <=>  8a^2 - 2a - 1 = 0", 0.5, Provenance::Exact, false},
        {"Gamma3_case", [](double a) { return 4 * a * a - 2 * a - 1; },
         "nu(a) = 1  <=>  4a^2 - 2a - 1 = 0", 0.809, Provenance::RoundedReference, false},
        {"D5_D6_boundary", [](double a) { return 6 * a * a - 3 * a - 1; },
         "|mu(a)| = 2  <=>  6a^2 - 3a - 1 = 0", 0.7207, Provenance::RoundedReference, true},
        {"D2_entry", [](double a) { return 30 * a * a - 51 * a - 17; },
         "mu(a) = -1/2  <=>  30a^2 - 51a - 17 = 0", 1.9854, Provenance::RoundedReference,
         false},
        {"D1_exit", [](double a) { return 18 * a * a - 69 * a - 23; },
         "mu(a) = 1/2  <=>  18a^2 - 69a - 23 = 0", 4.14184, Provenance::RoundedReference,
         false},
        {"gamma_diff_switch", [](double a) { return 4 * a * a - 4 * a - 11; },
         "B1^2 = 2|B3|(B4 + 2|B3|)  <=>  4a^2 - 4a - 11 = 0", 2.232,
         Provenance::RoundedReference, false},
        {"B4_sign", [](double a) { return 4 * a * a - 10 * a - 5; },
         "4B2 + 2B3 = 0  <=>  4a^2 - 10a - 5 = 0", 2.927, Provenance::RoundedReference,
         false},
        {"nu_prime_root",
         [](double a) { return 12 * a * a * a - 28 * a * a - 32 * a - 7; },
         "12a^3 - 28a^2 - 32a - 7 = 0", 3.21836, Provenance::RoundedReference, false},
        {"Gamma_diff_first", [](double a) { return 2 * a - 3; },
         "B1^2 = 2|B3|(B4 + 2|B3|)  <=>  1 + 2a = 4", 1.5, Provenance::Exact, false},
        {"Gamma_diff_mid_lo", [](double a) { return 2 * a * a - 3 * a - 2; },
         "B1 = B4 + 2|B3|  <=>  2a^2 - 3a - 2 = 0", 2.0, Provenance::Exact, false},
        {"Gamma_diff_mid_hi", [](double a) { return 2 * a * a - 11 * a - 4; },
         "B1 = B4 + 2|B3|  <=>  2a^2 - 11a - 4 = 0", 5.84, Provenance::RoundedReference,
         false},
    };
    std::vector<Breakpoint> out;
    out.reserve(specs.size());
    for (const auto& s : specs) {
        out.push_back({s.name, first_root(s.f, 0.0, 20.0, 0.01, 1e-10), s.equation,
                       s.ref, s.prov, s.warn});
    }
    return out;
}

PiecewiseBound build_Gamma2() {
    const double b = breakpoint("Gamma2_case").alpha;
    PiecewiseBound pb;
    pb.pieces = {
        {0.0, b, "(5 + 10a - 4a^2) / (12(1+2a)(1+a)^2)",
         [](double a) {
             return (5.0 + 10.0 * a - 4.0 * a * a) /
                    (12.0 * (1.0 + 2.0 * a) * (1.0 + a) * (1.0 + a));
         }},
        {b, kInf, "1 / (3(1+2a))", [](double a) { return 1.0 / (3.0 * (1.0 + 2.0 * a)); }},
    };
    pb.interior_breakpoints = {breakpoint("Gamma2_case")};
    return pb;
}

PiecewiseBound build_Gamma3() {
    const double b = breakpoint("Gamma3_case").alpha;
    PiecewiseBound pb;
    pb.pieces = {
        {0.0, b, "1/(4(1+3a)) - 4/(3(1+a)(1+2a)) + 5/(3(1+a)^3)",
         [](double a) {
             return 1.0 / (4.0 * (1.0 + 3.0 * a)) -
                    4.0 / (3.0 * (1.0 + a) * (1.0 + 2.0 * a)) +
                    5.0 / (3.0 * std::pow(1.0 + a, 3));
         }},
        {b, kInf, "1 / (4(1+3a))", [](double a) { return 1.0 / (4.0 * (1.0 + 3.0 * a)); }},
    };
    pb.interior_breakpoints = {breakpoint("Gamma3_case")};
    return pb;
}

PiecewiseBound build_gamma_diff_lower() {
    const double b = breakpoint("gamma_diff_switch").alpha;
    PiecewiseBound pb;
    pb.pieces = {
        {0.0, b, "-1 / sqrt(8a^2 + 10a + 5)",
         [](double a) { return -1.0 / std::sqrt(8.0 * a * a + 10.0 * a + 5.0); }},
        {b, kInf, "-1/(3(1+2a)) - 3(1+2a)/(4(8a^2+10a+5))",
         [](double a) {
             const double q = 1.0 + 2.0 * a;
             return -1.0 / (3.0 * q) - 3.0 * q / (4.0 * (8.0 * a * a + 10.0 * a + 5.0));
         }},
    };
    pb.interior_breakpoints = {breakpoint("gamma_diff_switch")};
    return pb;
}

PiecewiseBound build_Gamma_diff_lower() {
    const double b1 = breakpoint("Gamma_diff_first").alpha;
    const double b2 = breakpoint("Gamma_diff_mid_lo").alpha;
    const double b3 = breakpoint("Gamma_diff_mid_hi").alpha;
    // The first piece is -1/(3 sqrt(1+2a)), the value the lemma's middle
    // branch evaluates to with these B-inputs; continuity with M(a) at
    // a = 3/2 (both equal -1/6 there) pins this form.
    PiecewiseBound pb;
    pb.pieces = {
        {0.0, b1, "-1 / (3 sqrt(1+2a))",
         [](double a) { return -1.0 / (3.0 * std::sqrt(1.0 + 2.0 * a)); }},
        {b1, b2, "M(a)", M_lower},
        {b2, b3, "-1/(2(1+a)) + |3/(4(1+a)^2) - 1/(3(1+2a))|",
         [](double a) {
             return -1.0 / (2.0 * (1.0 + a)) +
                    std::abs(3.0 / (4.0 * (1.0 + a) * (1.0 + a)) -
                             1.0 / (3.0 * (1.0 + 2.0 * a)));
         }},
        {b3, kInf, "M(a)", M_lower},
    };
    pb.interior_breakpoints = {breakpoint("Gamma_diff_first"),
                               breakpoint("Gamma_diff_mid_lo"),
                               breakpoint("Gamma_diff_mid_hi")};
    return pb;
}

} // namespace

double PiecewiseBound::operator()(double alpha) const {
    require_alpha(alpha);
    for (const auto& p : pieces) {
        if (alpha >= p.lo && (alpha <= p.hi || p.hi == kInf)) {
            return p.eval(alpha);
        }
    }
    return pieces.back().eval(alpha);
}

const std::vector<Breakpoint>& compute_breakpoints() {
    static const std::vector<Breakpoint> table = build_breakpoints();
    return table;
}

const Breakpoint& breakpoint(const std::string& name) {
    for (const auto& b : compute_breakpoints()) {
        if (b.name == name) return b;
    }
    throw std::invalid_argument("unknown breakpoint: " + name);
}

const PiecewiseBound& piecewise_Gamma2() {
    static const PiecewiseBound pb = build_Gamma2();
    return pb;
}

const PiecewiseBound& piecewise_Gamma3() {
    static const PiecewiseBound pb = build_Gamma3();
    return pb;
}

const PiecewiseBound& piecewise_gamma_diff_lower() {
    static const PiecewiseBound pb = build_gamma_diff_lower();
    return pb;
}

const PiecewiseBound& piecewise_Gamma_diff_lower() {
    static const PiecewiseBound pb = build_Gamma_diff_lower();
    return pb;
}

double bound_gamma(int n, double alpha) {
    require_alpha(alpha);
    switch (n) {
        case 1: return 1.0 / (2.0 * (1.0 + alpha));
        case 2: return 1.0 / (3.0 * (1.0 + 2.0 * alpha));
        case 3: return 1.0 / (4.0 * (1.0 + 3.0 * alpha));
    }
    throw std::invalid_argument("bound_gamma: n must be 1, 2 or 3");
}

double bound_Gamma(int n, double alpha) {
    require_alpha(alpha);
    switch (n) {
        case 1: return 1.0 / (2.0 * (1.0 + alpha));
        case 2: return piecewise_Gamma2()(alpha);
        case 3: return piecewise_Gamma3()(alpha);
    }
    throw std::invalid_argument("bound_Gamma: n must be 1, 2 or 3");
}

DiffBound bound_gamma_diff(double alpha) {
    require_alpha(alpha);
    return {1.0 / (3.0 * (1.0 + 2.0 * alpha)), piecewise_gamma_diff_lower()(alpha)};
}

DiffBound bound_Gamma_diff(double alpha) {
    require_alpha(alpha);
    return {1.0 / (3.0 * (1.0 + 2.0 * alpha)), piecewise_Gamma_diff_lower()(alpha)};
}

double bound_hankel(HankelKind, double alpha) {
    if (std::abs(alpha - 1.0) > 1e-12) {
        throw std::domain_error("bound_hankel: proved only for alpha = 1");
    }
    return 1.0 / 81.0;
}

MuNuPoint mu_nu(MuNuSource source, double alpha) {
    require_alpha(alpha);
    const double s = 1.0 + 3.0 * alpha;
    const double prod = 3.0 * (1.0 + alpha) * (1.0 + 2.0 * alpha);
    const double cube = 3.0 * std::pow(1.0 + alpha, 3);
    if (source == MuNuSource::Gamma3) {
        return {2.0 - 4.0 * s / prod, 1.0 - 4.0 * s / prod + 2.0 * s / cube, source,
                alpha};
    }
    return {2.0 - 16.0 * s / prod, 1.0 - 16.0 * s / prod + 20.0 * s / cube, source,
            alpha};
}

PsiInputs gamma_diff_psi_inputs(double alpha) {
    require_alpha(alpha);
    return {1.0 / (4.0 * (1.0 + alpha)),
            Complex(-1.0 / (16.0 * (1.0 + alpha) * (1.0 + alpha))),
            1.0 / (6.0 * (1.0 + 2.0 * alpha))};
}

PsiInputs gamma_inv_diff_psi_inputs(double alpha) {
    require_alpha(alpha);
    return {1.0 / (4.0 * (1.0 + alpha)),
            Complex(3.0 / (16.0 * (1.0 + alpha) * (1.0 + alpha))),
            -1.0 / (6.0 * (1.0 + 2.0 * alpha))};
}

} // namespace coeffbounds
