#include "coeffbounds/caratheodory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coeffbounds {

namespace {
constexpr double kFeasTol = 1e-12;
constexpr double kWeightSumTol = 1e-9;
} // namespace

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) {
        throw std::invalid_argument("AtomicMeasure: needs at least one atom");
    }
    double sum = 0.0;
    for (auto& a : atoms_) {
        if (a.weight < 0.0) {
            throw std::invalid_argument("AtomicMeasure: negative weight");
        }
        const double two_pi = 2.0 * std::numbers::pi;
        a.angle = std::fmod(a.angle, two_pi);
        if (a.angle < 0.0) a.angle += two_pi;
        sum += a.weight;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol) {
        throw std::invalid_argument("AtomicMeasure: weights must sum to 1");
    }
    for (auto& a : atoms_) a.weight /= sum;
}

CarCoeffs coeffs_from_measure(const AtomicMeasure& m) {
    CarCoeffs p{0.0, 0.0, 0.0};
    for (const auto& a : m.atoms()) {
        p.p1 += 2.0 * a.weight * std::polar(1.0, -a.angle);
        p.p2 += 2.0 * a.weight * std::polar(1.0, -2.0 * a.angle);
        p.p3 += 2.0 * a.weight * std::polar(1.0, -3.0 * a.angle);
    }
    return p;
}

CarCoeffs schwarz_to_caratheodory(const SchwarzCoeffs& c) {
    return {
        2.0 * c.c1,
        2.0 * (c.c2 + c.c1 * c.c1),
        2.0 * (c.c3 + 2.0 * c.c1 * c.c2 + c.c1 * c.c1 * c.c1),
    };
}

SchwarzCoeffs caratheodory_to_schwarz(const CarCoeffs& p) {
    const Complex c1 = p.p1 / 2.0;
    const Complex c2 = p.p2 / 2.0 - c1 * c1;
    const Complex c3 = p.p3 / 2.0 - 2.0 * c1 * c2 - c1 * c1 * c1;
    return {c1, c2, c3};
}

SchwarzCoeffs schur_to_schwarz(const SchurParams& s) {
    if (std::abs(s.t1) > 1.0 + kFeasTol || std::abs(s.t2) > 1.0 + kFeasTol ||
        std::abs(s.t3) > 1.0 + kFeasTol) {
        throw std::invalid_argument("schur_to_schwarz: |t| > 1");
    }
    const double r1 = 1.0 - std::norm(s.t1);
    const double r2 = 1.0 - std::norm(s.t2);
    const Complex c1 = s.t1;
    const Complex c2 = r1 * s.t2;
    const Complex c3 = r1 * (r2 * s.t3 - std::conj(s.t1) * s.t2 * s.t2);
    return {c1, c2, c3};
}

bool carlson_feasible(const SchwarzCoeffs& c) {
    const double x1 = std::abs(c.c1);
    const double x2 = std::abs(c.c2);
    const double x3 = std::abs(c.c3);
    if (x1 > 1.0 + kFeasTol) return false;
    if (x2 > 1.0 - x1 * x1 + kFeasTol) return false;
    return x3 <= 1.0 - x1 * x1 - x2 * x2 / (1.0 + x1) + kFeasTol;
}

} // namespace coeffbounds
