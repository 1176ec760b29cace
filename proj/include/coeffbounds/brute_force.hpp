#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "coeffbounds/caratheodory.hpp"
#include "coeffbounds/nelder_mead.hpp"

namespace coeffbounds {

/// Independent brute-force maximizers used to cross-check the closed-form
/// lemma bounds.  They search the exact coefficient bodies through the Schur
/// parameterization with multi-start simplex ascent; nothing here shares
/// code with the closed forms under test.

namespace brute {

inline Complex disk_point(double re, double im) {
    Complex t(re, im);
    const double r = std::abs(t);
    return r > 1.0 ? t / r : t;
}

/// Maximize a function of n unconstrained reals (each mapped into [-1,1]^n
/// by the caller through disk_point) with seeded multi-start Nelder-Mead
/// plus a coarse random sweep.
inline double maximize(const std::function<double(const std::vector<double>&)>& f,
                       std::size_t dim, std::uint64_t seed, int starts = 48,
                       int sweep = 20000) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double best = -1e300;
    std::vector<double> x(dim);
    for (int i = 0; i < sweep; ++i) {
        for (auto& v : x) v = uni(rng);
        best = std::max(best, f(x));
    }
    NelderMeadOptions opt;
    opt.max_iterations = 300;
    auto neg = [&](const std::vector<double>& p) { return -f(p); };
    for (int s = 0; s < starts; ++s) {
        for (auto& v : x) v = uni(rng);
        best = std::max(best, -nelder_mead(neg, x, opt).value);
    }
    return best;
}

/// (p1, p2) over the Caratheodory class from two complex Schur parameters.
inline CarCoeffs caratheodory_pair(const std::vector<double>& q) {
    const Complex t1 = disk_point(q[0], q[1]);
    const Complex t2 = disk_point(q[2], q[3]);
    const Complex c1 = t1;
    const Complex c2 = (1.0 - std::norm(t1)) * t2;
    return {2.0 * c1, 2.0 * (c2 + c1 * c1), 0.0};
}

/// max |p2 - v p1^2| over the Caratheodory class.
inline double max_fekete_szego(double v, std::uint64_t seed = 11) {
    return maximize(
        [v](const std::vector<double>& q) {
            const CarCoeffs p = caratheodory_pair(q);
            return std::abs(p.p2 - v * p.p1 * p.p1);
        },
        4, seed);
}

/// max (|B2 p1^2 + B3 p2| - B1 |p1|) over the Caratheodory class.
inline double max_psi_plus(double B1, Complex B2, double B3, std::uint64_t seed = 12) {
    return maximize(
        [=](const std::vector<double>& q) {
            const CarCoeffs p = caratheodory_pair(q);
            return std::abs(B2 * p.p1 * p.p1 + B3 * p.p2) - B1 * std::abs(p.p1);
        },
        4, seed);
}

/// max (B1 |p1| - |B2 p1^2 + B3 p2|) over the Caratheodory class.
inline double max_psi_minus(double B1, Complex B2, double B3, std::uint64_t seed = 13) {
    return maximize(
        [=](const std::vector<double>& q) {
            const CarCoeffs p = caratheodory_pair(q);
            return B1 * std::abs(p.p1) - std::abs(B2 * p.p1 * p.p1 + B3 * p.p2);
        },
        4, seed);
}

/// max |c3 + mu c1 c2 + nu c1^3| over the Schwarz class.
inline double max_schwarz_cubic(double mu, double nu, std::uint64_t seed = 14) {
    return maximize(
        [=](const std::vector<double>& q) {
            const SchurParams s{disk_point(q[0], q[1]), disk_point(q[2], q[3]),
                                disk_point(q[4], q[5])};
            const SchwarzCoeffs c = schur_to_schwarz(s);
            return std::abs(c.c3 + mu * c.c1 * c.c2 + nu * c.c1 * c.c1 * c.c1);
        },
        6, seed);
}

} // namespace brute
} // namespace coeffbounds
