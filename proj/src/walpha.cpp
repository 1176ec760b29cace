#include "coeffbounds/walpha.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coeffbounds/bounds.hpp"

namespace coeffbounds {

namespace {

void require_alpha(double alpha) {
    if (!(alpha >= 0.0)) {
        throw std::invalid_argument("alpha must be nonnegative");
    }
}

double check_zeta(double zeta) {
    if (std::abs(zeta) > 1.0 + 1e-12) {
        throw std::logic_error("kernel parameter outside [-1, 1]");
    }
    return std::clamp(zeta, -1.0, 1.0);
}

} // namespace

TaylorPrefix taylor_from_caratheodory(double alpha, const CarCoeffs& p) {
    require_alpha(alpha);
    return {
        p.p1 / (2.0 * (1.0 + alpha)),
        p.p2 / (3.0 * (1.0 + 2.0 * alpha)),
        p.p3 / (4.0 * (1.0 + 3.0 * alpha)),
    };
}

double coefficient_bound(double alpha, int n) {
    require_alpha(alpha);
    if (n < 1) {
        throw std::invalid_argument("coefficient_bound: n must be >= 1");
    }
    return 2.0 / ((n + 1.0) * (1.0 + n * alpha));
}

CarCoeffs symmetric_kernel_coeffs(double zeta) {
    const double z = check_zeta(zeta);
    return {Complex(2.0 * z), Complex(2.0 * (2.0 * z * z - 1.0)),
            Complex(2.0 * z * (4.0 * z * z - 3.0))};
}

CarCoeffs two_point_kernel_coeffs(double zeta) {
    const double z = check_zeta(zeta);
    return {Complex(2.0 * z), Complex(2.0), Complex(2.0 * z)};
}

double kernel_parameter_gamma_lower(double alpha) {
    require_alpha(alpha);
    const double q = 8.0 * alpha * alpha + 10.0 * alpha + 5.0;
    double zeta;
    if (alpha <= breakpoint("gamma_diff_switch").alpha) {
        zeta = 2.0 * (1.0 + alpha) / std::sqrt(q);
    } else {
        zeta = 3.0 * (1.0 + 2.0 * alpha) * (1.0 + alpha) / q;
    }
    return check_zeta(zeta);
}

double kernel_parameter_gamma_inv_lower(double alpha) {
    require_alpha(alpha);
    if (alpha <= breakpoint("Gamma_diff_first").alpha) {
        return check_zeta(2.0 * (1.0 + alpha) / (3.0 * std::sqrt(1.0 + 2.0 * alpha)));
    }
    if (alpha >= breakpoint("Gamma_diff_mid_lo").alpha &&
        alpha <= breakpoint("Gamma_diff_mid_hi").alpha) {
        return 1.0; // kernel degenerates to (1+z)/(1-z)
    }
    const PsiInputs b = gamma_inv_diff_psi_inputs(alpha);
    return check_zeta(b.B1 / (b.B4() + 2.0 * std::abs(b.B3)));
}

ExtremalFamily make_kernel_gamma_lower(double alpha) {
    return {FamilyTag::KernelGammaLower, alpha, kernel_parameter_gamma_lower(alpha)};
}

ExtremalFamily make_kernel_gamma_inv_lower(double alpha) {
    return {FamilyTag::KernelGammaInvLower, alpha,
            kernel_parameter_gamma_inv_lower(alpha)};
}

TaylorPrefix extremal_taylor(const ExtremalFamily& fam) {
    const double a = fam.alpha;
    require_alpha(a);
    switch (fam.tag) {
        case FamilyTag::F1: {
            TaylorPrefix t;
            t.a2 = 2.0 / (2.0 * (1.0 + a));
            t.a3 = 2.0 / (3.0 * (1.0 + 2.0 * a));
            t.a4 = 2.0 / (4.0 * (1.0 + 3.0 * a));
            return t;
        }
        case FamilyTag::F2:
            return {0.0, 2.0 / (3.0 * (1.0 + 2.0 * a)), 0.0};
        case FamilyTag::F3:
            return {0.0, 0.0, 2.0 / (4.0 * (1.0 + 3.0 * a))};
        case FamilyTag::F6:
            if (std::abs(a - 1.0) > 1e-12) {
                throw std::invalid_argument("family F6 is defined only at alpha = 1");
            }
            return {0.0, 2.0 / 9.0, 0.0};
        case FamilyTag::KernelGammaLower: {
            if (!fam.kernel_parameter) {
                throw std::invalid_argument("kernel family needs a parameter");
            }
            return taylor_from_caratheodory(a,
                                            symmetric_kernel_coeffs(*fam.kernel_parameter));
        }
        case FamilyTag::KernelGammaInvLower: {
            if (!fam.kernel_parameter) {
                throw std::invalid_argument("kernel family needs a parameter");
            }
            // Which kernel shape attains depends on the sign of 4B2 + 2B3:
            // while it is positive (alpha below the B4 sign change) the
            // extremal measure sits on {0, pi}; past it the symmetric
            // +-arccos(zeta) kernel takes over.  Both degenerate to
            // (1+z)/(1-z) at zeta = 1, so the middle case is covered too.
            const CarCoeffs p = (a <= breakpoint("B4_sign").alpha)
                                    ? two_point_kernel_coeffs(*fam.kernel_parameter)
                                    : symmetric_kernel_coeffs(*fam.kernel_parameter);
            return taylor_from_caratheodory(a, p);
        }
    }
    throw std::invalid_argument("extremal_taylor: bad family tag");
}

} // namespace coeffbounds
