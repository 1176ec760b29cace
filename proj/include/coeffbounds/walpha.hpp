#pragma once

#include <optional>

#include "coeffbounds/caratheodory.hpp"

namespace coeffbounds {

/// (a2, a3, a4) of a function f(z) = z + a2 z^2 + ... in W(alpha).
struct TaylorPrefix {
    Complex a2, a3, a4;
};

/// Named extremal families of W(alpha).  The kernel variants carry the
/// parameter zeta of the Caratheodory kernels used in the lower-bound
/// sharpness constructions.
enum class FamilyTag {
    F1,                    // a_n = 2 / (n (1 + (n-1) alpha))
    F2,                    // odd series, a3 = 2 / (3 (1 + 2 alpha))
    F3,                    // a4 = 2 / (4 (1 + 3 alpha)), a2 = a3 = 0
    F6,                    // alpha = 1 only, a3 = 2/9
    KernelGammaLower,      // extremal of the |gamma2| - |gamma1| lower bound
    KernelGammaInvLower,   // extremal of the |Gamma2| - |Gamma1| lower bound
};

struct ExtremalFamily {
    FamilyTag tag;
    double alpha;
    std::optional<double> kernel_parameter; // zeta, kernel variants only
};

/// a_{n+1} = p_n / ((n+1)(1 + n alpha)), n = 1, 2, 3.
TaylorPrefix taylor_from_caratheodory(double alpha, const CarCoeffs& p);

/// The sharp coefficient bound 2 / ((n+1)(1 + n alpha)), n >= 1.
double coefficient_bound(double alpha, int n);

/// Taylor prefix of the named extremal function.
TaylorPrefix extremal_taylor(const ExtremalFamily& fam);

/// Kernel parameter zeta of the extremal for the lower bound of
/// |gamma2| - |gamma1| at the given alpha (case resolved internally from
/// the recomputed breakpoint).
double kernel_parameter_gamma_lower(double alpha);

/// Kernel parameter zeta of the extremal for the lower bound of
/// |Gamma2| - |Gamma1| at the given alpha.
double kernel_parameter_gamma_inv_lower(double alpha);

/// Convenience builders that fill in the kernel parameter.
ExtremalFamily make_kernel_gamma_lower(double alpha);
ExtremalFamily make_kernel_gamma_inv_lower(double alpha);

/// Caratheodory coefficients of (1 - z^2) / (1 - 2 zeta z + z^2):
/// p_n = 2 T_n(zeta) (two atoms of weight 1/2 at +-arccos zeta).
CarCoeffs symmetric_kernel_coeffs(double zeta);

/// Caratheodory coefficients of the two-atom measure at angles {0, pi}
/// with weights ((1+zeta)/2, (1-zeta)/2): p1 = 2 zeta, p2 = 2, p3 = 2 zeta.
CarCoeffs two_point_kernel_coeffs(double zeta);

} // namespace coeffbounds
