#include "coeffbounds/functionals.hpp"

namespace coeffbounds {

LogCoeffs log_coeffs(const TaylorPrefix& a) {
    const Complex a2 = a.a2, a3 = a.a3, a4 = a.a4;
    return {
        a2 / 2.0,
        (a3 - a2 * a2 / 2.0) / 2.0,
        (a4 - a2 * a3 + a2 * a2 * a2 / 3.0) / 2.0,
    };
}

InvCoeffs inverse_coeffs(const TaylorPrefix& a) {
    const Complex a2 = a.a2, a3 = a.a3, a4 = a.a4;
    return {
        -a2,
        -a3 + 2.0 * a2 * a2,
        -a4 + 5.0 * a2 * a3 - 5.0 * a2 * a2 * a2,
    };
}

LogInvCoeffs log_inverse_coeffs(const TaylorPrefix& a) {
    const Complex a2 = a.a2, a3 = a.a3, a4 = a.a4;
    return {
        -a2 / 2.0,
        -(a3 - 1.5 * a2 * a2) / 2.0,
        -(a4 - 4.0 * a2 * a3 + (10.0 / 3.0) * a2 * a2 * a2) / 2.0,
    };
}

double gamma_diff(const TaylorPrefix& a) {
    const LogCoeffs g = log_coeffs(a);
    return std::abs(g.g2) - std::abs(g.g1);
}

double Gamma_diff(const TaylorPrefix& a) {
    const LogInvCoeffs G = log_inverse_coeffs(a);
    return std::abs(G.G2) - std::abs(G.G1);
}

Complex hankel_log(const TaylorPrefix& a) {
    const LogCoeffs g = log_coeffs(a);
    return g.g1 * g.g3 - g.g2 * g.g2;
}

Complex hankel_log_inverse(const TaylorPrefix& a) {
    const LogInvCoeffs G = log_inverse_coeffs(a);
    return G.G1 * G.G3 - G.G2 * G.G2;
}

} // namespace coeffbounds
