#pragma once

#include "coeffbounds/walpha.hpp"

namespace coeffbounds {

/// Logarithmic coefficients gamma_1..gamma_3 of log(f(z)/z) = 2 sum gamma_n z^n.
struct LogCoeffs {
    Complex g1, g2, g3;
};

/// Logarithmic coefficients Gamma_1..Gamma_3 of the inverse function.
struct LogInvCoeffs {
    Complex G1, G2, G3;
};

/// Taylor coefficients A_2..A_4 of the inverse function F = f^{-1}.
struct InvCoeffs {
    Complex A2, A3, A4;
};

/// gamma1 = a2/2, gamma2 = (a3 - a2^2/2)/2, gamma3 = (a4 - a2 a3 + a2^3/3)/2.
LogCoeffs log_coeffs(const TaylorPrefix& a);

/// A2 = -a2, A3 = -a3 + 2 a2^2, A4 = -a4 + 5 a2 a3 - 5 a2^3.
InvCoeffs inverse_coeffs(const TaylorPrefix& a);

/// Gamma1 = -a2/2, Gamma2 = -(a3 - 3 a2^2/2)/2,
/// Gamma3 = -(a4 - 4 a2 a3 + 10 a2^3/3)/2.
LogInvCoeffs log_inverse_coeffs(const TaylorPrefix& a);

/// |gamma2| - |gamma1|.
double gamma_diff(const TaylorPrefix& a);

/// |Gamma2| - |Gamma1|.
double Gamma_diff(const TaylorPrefix& a);

/// gamma1 gamma3 - gamma2^2; equals (a2 a4 - a3^2 + a2^4/12)/4.
Complex hankel_log(const TaylorPrefix& a);

/// Gamma1 Gamma3 - Gamma2^2; equals (13 a2^4/12 + a2 a4 - a2^2 a3 - a3^2)/4.
Complex hankel_log_inverse(const TaylorPrefix& a);

} // namespace coeffbounds
