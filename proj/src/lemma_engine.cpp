#include "coeffbounds/lemma_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace coeffbounds {

namespace {
constexpr double kTol = 1e-12;
} // namespace

double fekete_szego_bound(double v) {
    if (v <= 0.0) return -4.0 * v + 2.0;
    if (v <= 1.0) return 2.0;
    return 4.0 * v - 2.0;
}

double psi_plus_bound(const PsiInputs& b) {
    if (b.B1 < 0.0) {
        throw std::invalid_argument("psi_plus_bound: B1 must be nonnegative");
    }
    const double lhs = std::abs(2.0 * b.B2 + Complex(b.B3));
    if (lhs >= std::abs(b.B3) + b.B1) {
        return b.B4() - 2.0 * b.B1;
    }
    return 2.0 * std::abs(b.B3);
}

double psi_minus_bound(const PsiInputs& b) {
    if (b.B1 < 0.0) {
        throw std::invalid_argument("psi_minus_bound: B1 must be nonnegative");
    }
    const double B4 = b.B4();
    const double absB3 = std::abs(b.B3);
    const double denom = B4 + 2.0 * absB3;
    if (denom <= 0.0) {
        if (b.B1 > 0.0) {
            throw std::invalid_argument("psi_minus_bound: degenerate B4 + 2|B3| = 0");
        }
        return 0.0;
    }
    if (b.B1 >= denom) {
        return 2.0 * b.B1 - B4;
    }
    if (b.B1 * b.B1 <= 2.0 * absB3 * denom) {
        return 2.0 * b.B1 * std::sqrt(2.0 * absB3) / std::sqrt(denom);
    }
    return 2.0 * absB3 + b.B1 * b.B1 / denom;
}

RegionLabel ps_region_classify(double mu, double nu) {
    const double am = std::abs(mu);
    const double an = std::abs(nu);
    RegionLabel out;

    // D1, D2 and the isolated point (2, 1) carry bound 1.
    if (am <= 0.5 + kTol && an <= 1.0 + kTol) {
        out.members.insert(Region::D1);
    }
    // The D2/D5/D6/D7 conditions constrain nu itself, not |nu|; and the D6
    // threshold is (mu^2+8)/12, which meets D5 at |mu| = 2 (value 1) and D7
    // at |mu| = 4 (value 2).  The looser variants admit counterexamples,
    // which the brute-force tests catch.
    if (am >= 0.5 - kTol && am <= 2.0 + kTol &&
        (4.0 / 27.0) * std::pow(am + 1.0, 3) - (am + 1.0) <= nu + kTol &&
        nu <= 1.0 + kTol) {
        out.members.insert(Region::D2);
    }
    if (std::abs(mu - 2.0) <= kTol && std::abs(nu - 1.0) <= kTol) {
        out.members.insert(Region::Point21);
    }

    // D3..D7 carry bound |nu|.
    if (am <= 0.5 + kTol && nu <= -1.0 + kTol) {
        out.members.insert(Region::D3);
    }
    if (am >= 0.5 - kTol && nu <= -(2.0 / 3.0) * (am + 1.0) + kTol) {
        out.members.insert(Region::D4);
    }
    if (am <= 2.0 + kTol && nu >= 1.0 - kTol) {
        out.members.insert(Region::D5);
    }
    if (am >= 2.0 - kTol && am <= 4.0 + kTol &&
        nu >= (mu * mu + 8.0) / 12.0 - kTol) {
        out.members.insert(Region::D6);
    }
    if (am >= 4.0 - kTol && nu >= (2.0 / 3.0) * (am - 1.0) - kTol) {
        out.members.insert(Region::D7);
    }

    bool unit = false;
    bool abs_nu = false;
    for (Region r : out.members) {
        if (r == Region::D1 || r == Region::D2 || r == Region::Point21) {
            unit = true;
        } else {
            abs_nu = true;
        }
    }
    if (unit && abs_nu) {
        out.bound_value = std::min(1.0, an);
    } else if (unit) {
        out.bound_value = 1.0;
    } else if (abs_nu) {
        out.bound_value = an;
    }
    return out;
}

std::optional<double> ps_bound(double mu, double nu) {
    return ps_region_classify(mu, nu).bound_value;
}

const char* region_name(Region r) {
    switch (r) {
        case Region::D1: return "D1";
        case Region::D2: return "D2";
        case Region::D3: return "D3";
        case Region::D4: return "D4";
        case Region::D5: return "D5";
        case Region::D6: return "D6";
        case Region::D7: return "D7";
        case Region::Point21: return "POINT_2_1";
    }
    return "?";
}

} // namespace coeffbounds
