#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coeffbounds/lemma_engine.hpp"

namespace coeffbounds {

enum class Provenance { RoundedReference, Exact };

/// A case boundary of one of the piecewise-in-alpha theorem bounds.
/// alpha is always recomputed from the defining equation by bisection;
/// reference_value keeps the rounded reference decimal as a regression
/// checkpoint only.
struct Breakpoint {
    std::string name;
    double alpha;
    std::string defining_equation;
    double reference_value;
    Provenance provenance;
    bool warn; // known discrepancy against the reference decimal
};

/// A bound as a function of alpha: ordered pieces with closed-form
/// evaluators, plus the interior breakpoints separating them.
struct PiecewiseBound {
    struct Piece {
        double lo, hi; // hi = +inf for the last piece
        std::string formula;
        std::function<double(double)> eval;
    };
    std::vector<Piece> pieces;
    std::vector<Breakpoint> interior_breakpoints;

    double operator()(double alpha) const;
};

/// The (mu, nu) point fed to the Prokhorov-Szynal lemma for the third
/// logarithmic (GAMMA3) or logarithmic inverse (GAMMA3_INVERSE) coefficient.
enum class MuNuSource { Gamma3, Gamma3Inverse };

struct MuNuPoint {
    double mu, nu;
    MuNuSource source;
    double alpha;
};

enum class HankelKind { Log, LogInverse };

/// All recomputed breakpoints (cached after the first call).
const std::vector<Breakpoint>& compute_breakpoints();

/// Lookup by name; throws if unknown.
const Breakpoint& breakpoint(const std::string& name);

/// Sharp bound of |gamma_n|: 1/(2(1+a)), 1/(3(1+2a)), 1/(4(1+3a)).
double bound_gamma(int n, double alpha);

/// Sharp bound of |Gamma_n| (piecewise for n = 2, 3).
double bound_Gamma(int n, double alpha);

struct DiffBound {
    double upper, lower;
};

/// Sharp bounds of |gamma2| - |gamma1|.
DiffBound bound_gamma_diff(double alpha);

/// Sharp bounds of |Gamma2| - |Gamma1|.
DiffBound bound_Gamma_diff(double alpha);

/// Sharp bound 1/81 of the second Hankel determinant of F_f/2 resp.
/// F_{f^-1}/2; proved only at alpha = 1, errors elsewhere.
double bound_hankel(HankelKind which, double alpha);

MuNuPoint mu_nu(MuNuSource source, double alpha);

/// Piecewise forms exposed for the continuity checks.
const PiecewiseBound& piecewise_Gamma2();
const PiecewiseBound& piecewise_Gamma3();
const PiecewiseBound& piecewise_gamma_diff_lower();
const PiecewiseBound& piecewise_Gamma_diff_lower();

/// The Psi coefficients of the moduli-difference proofs, exposed so the
/// piecewise closed forms can be cross-checked against the lemma directly.
PsiInputs gamma_diff_psi_inputs(double alpha);
PsiInputs gamma_inv_diff_psi_inputs(double alpha);

} // namespace coeffbounds
