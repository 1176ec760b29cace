#pragma once

#include <optional>
#include <set>

#include "coeffbounds/caratheodory.hpp"

namespace coeffbounds {

/// Coefficient data (B1, B2, B3) of the functional
/// Psi(p1, p2) = |B2 p1^2 + B3 p2| - |B1 p1| over the Caratheodory class.
/// B1 >= 0, B3 real; B4 = |4 B2 + 2 B3| is derived, never stored.
struct PsiInputs {
    double B1;
    Complex B2;
    double B3;

    double B4() const { return std::abs(4.0 * B2 + Complex(2.0 * B3)); }
};

/// Sharp bound for |p2 - v p1^2| over the Caratheodory class, v real:
///   -4v + 2  (v <= 0),   2  (0 <= v <= 1),   4v - 2  (v >= 1).
double fekete_szego_bound(double v);

/// Sharp upper bound for Psi_+ = |B2 p1^2 + B3 p2| - |B1 p1|:
///   |4 B2 + 2 B3| - 2 B1   when |2 B2 + B3| >= |B3| + B1,
///   2 |B3|                 otherwise.
double psi_plus_bound(const PsiInputs& b);

/// Sharp upper bound for Psi_- = -Psi_+:
///   2 B1 - B4                              when B1 >= B4 + 2|B3|,
///   2 B1 sqrt(2|B3|) / sqrt(B4 + 2|B3|)    when B1^2 <= 2|B3|(B4 + 2|B3|),
///   2|B3| + B1^2 / (B4 + 2|B3|)            otherwise.
double psi_minus_bound(const PsiInputs& b);

/// The Prokhorov-Szynal parameter regions for |c3 + mu c1 c2 + nu c1^3|.
enum class Region { D1, D2, D3, D4, D5, D6, D7, Point21 };

/// Membership verdict: all regions containing (mu, nu) (regions are closed,
/// so boundary points may belong to several), with the minimum applicable
/// bound.  bound_value is 1 for D1/D2/(2,1), |nu| for D3..D7, the minimum
/// when both kinds apply, and absent when (mu, nu) lies in none.
struct RegionLabel {
    std::set<Region> members;
    std::optional<double> bound_value;
};

RegionLabel ps_region_classify(double mu, double nu);

/// Convenience wrapper: the sharp bound for |c3 + mu c1 c2 + nu c1^3| over
/// Schwarz functions, or absent if (mu, nu) lies outside all listed regions.
std::optional<double> ps_bound(double mu, double nu);

const char* region_name(Region r);

} // namespace coeffbounds
