#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coeffbounds/bounds.hpp"
#include "coeffbounds/functionals.hpp"

namespace coeffbounds {

/// The coefficient functionals the oracle can drive, each paired with the
/// theorem bound it is checked against.
enum class Functional {
    AbsG1, AbsG2, AbsG3,          // |gamma_n|
    AbsGG1, AbsGG2, AbsGG3,       // |Gamma_n|
    GammaDiffMax, GammaDiffMin,   // |gamma2| - |gamma1|, upper / lower
    GGDiffMax, GGDiffMin,         // |Gamma2| - |Gamma1|, upper / lower
    AbsHLog, AbsHLogInv,          // |H_{2,1}|, alpha = 1 only
};

const char* functional_name(Functional f);
Functional functional_from_name(const std::string& name);
const std::vector<Functional>& all_functionals();
bool is_min_functional(Functional f);
bool functional_supported(Functional f, double alpha);

/// Theorem bound the functional is certified against (lower bound for the
/// MIN functionals).
double functional_bound(Functional f, double alpha);

/// Value of the functional on a coefficient prefix.
double functional_value(Functional f, const TaylorPrefix& a);

struct SearchConfig {
    int starts = 64;
    int grid_resolution = 51; // per axis, real Schur grid
    int probes = 100000;      // random complex Schur triples
    int max_iterations = 200; // simplex iterations per restart
    double tolerance = 1e-9;  // violation tolerance
    std::uint64_t seed = 42;
    bool real_only = false;   // restrict the search to real Schur parameters
};

struct Violation {
    double value;
    std::array<double, 6> params; // (Re t1, Im t1, Re t2, Im t2, Re t3, Im t3)
};

struct SearchReport {
    double best_value = 0.0;
    std::array<double, 6> best_params{};
    double bound = 0.0;
    /// bound - best_value for MAX functionals, best_value - bound for MIN;
    /// >= -tolerance on a correct theorem either way.
    double gap = 0.0;
    std::vector<Violation> violations;
    std::vector<double> best_trace; // best-so-far after each start
    std::uint64_t seed = 0;
};

/// Multi-start simplex search for the extremal value of the functional over
/// the Schur polydisk.  Deterministic given cfg.seed.
SearchReport maximize_functional(Functional f, double alpha, const SearchConfig& cfg);

/// Exhaustive real-Schur grid plus random complex probes; records every
/// sample whose value passes the theorem bound by more than cfg.tolerance.
SearchReport certify_no_violation(Functional f, double alpha, const SearchConfig& cfg);

/// Same sweep shared across several functionals (one prefix evaluation per
/// sample point).
std::vector<SearchReport> certify_batch(const std::vector<Functional>& fs, double alpha,
                                        const SearchConfig& cfg);

/// The two-variable bounding surface of the Hankel proofs, maximized over
/// Omega = {0 <= x <= 1, 0 <= y <= 1 - x^2}.
struct FxyReport {
    enum class Endpoint { Y0, Y1MinusX2, Interior };
    double max_value;
    double x, y;
    Endpoint endpoint_case;
    double y0_max;       // max of F(x, 0)
    double boundary_max; // max of F(x, 1 - x^2)
    double min_cy_coeff; // min over [0,1] of the y^2 coefficient C(x)
};

FxyReport maximize_F_xy(HankelKind which);

/// Sharpness certificates: evaluate the named extremal family of each
/// theorem and compare against the bound.
enum class Theorem {
    Gamma1Bound, Gamma2Bound, Gamma3Bound,
    GammaInv1Bound, GammaInv2Bound, GammaInv3Bound,
    GammaDiffUpper, GammaDiffLower,
    GammaInvDiffUpper, GammaInvDiffLower,
    HankelLog, HankelLogInv,
};

const char* theorem_name(Theorem t);
Theorem theorem_from_name(const std::string& name);
const std::vector<Theorem>& all_theorems();

struct SharpnessRow {
    Theorem theorem;
    double alpha;
    double bound;
    double attained;
    double gap; // bound - attained
};

SharpnessRow sharpness_report(Theorem t, double alpha);

/// The alpha sample set used by the verification suites (theorem breakpoints
/// and interior points).
const std::vector<double>& standard_alpha_samples();

} // namespace coeffbounds
