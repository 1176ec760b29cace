#include "coeffbounds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "coeffbounds/caratheodory.hpp"
#include "coeffbounds/nelder_mead.hpp"
#include "coeffbounds/walpha.hpp"

namespace coeffbounds {

namespace {

constexpr int kFunctionalCount = 12;
constexpr std::size_t kMaxStoredViolations = 32;

const char* const kFunctionalNames[kFunctionalCount] = {
    "ABS_G1",  "ABS_G2",  "ABS_G3",  "ABS_GG1",       "ABS_GG2",       "ABS_GG3",
    "GAMMA_DIFF_MAX", "GAMMA_DIFF_MIN", "GG_DIFF_MAX", "GG_DIFF_MIN",
    "ABS_H_LOG", "ABS_H_LOG_INV",
};

Complex clamp_disk(double re, double im) {
    Complex t(re, im);
    const double r = std::abs(t);
    return r > 1.0 ? t / r : t;
}

TaylorPrefix prefix_from_params(const std::array<double, 6>& q, double alpha) {
    const SchurParams s{clamp_disk(q[0], q[1]), clamp_disk(q[2], q[3]),
                        clamp_disk(q[4], q[5])};
    return taylor_from_caratheodory(alpha, schwarz_to_caratheodory(schur_to_schwarz(s)));
}

/// All twelve functional values from one coefficient prefix.
std::array<double, kFunctionalCount> all_values(const TaylorPrefix& a) {
    const LogCoeffs g = log_coeffs(a);
    const LogInvCoeffs G = log_inverse_coeffs(a);
    const double gd = std::abs(g.g2) - std::abs(g.g1);
    const double Gd = std::abs(G.G2) - std::abs(G.G1);
    return {std::abs(g.g1), std::abs(g.g2), std::abs(g.g3),
            std::abs(G.G1), std::abs(G.G2), std::abs(G.G3),
            gd, gd, Gd, Gd,
            std::abs(hankel_log(a)), std::abs(hankel_log_inverse(a))};
}

double sample_in_range(std::mt19937_64& rng, std::uniform_real_distribution<double>& u) {
    return u(rng);
}

double max_1d(const std::function<double(double)>& f, double lo, double hi, double& argmax) {
    const int n = 4096;
    double best = f(lo);
    argmax = lo;
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double v = f(x);
        if (v > best) {
            best = v;
            argmax = x;
        }
    }
    // golden-section refinement around the grid incumbent
    const double h = (hi - lo) / n;
    double a = std::max(lo, argmax - h), b = std::min(hi, argmax + h);
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    argmax = 0.5 * (a + b);
    best = std::max(best, f(argmax));
    return best;
}

} // namespace

const char* functional_name(Functional f) {
    return kFunctionalNames[static_cast<int>(f)];
}

Functional functional_from_name(const std::string& name) {
    for (int i = 0; i < kFunctionalCount; ++i) {
        if (name == kFunctionalNames[i]) return static_cast<Functional>(i);
    }
    throw std::invalid_argument("unknown functional: " + name);
}

const std::vector<Functional>& all_functionals() {
    static const std::vector<Functional> fs = [] {
        std::vector<Functional> v;
        for (int i = 0; i < kFunctionalCount; ++i) v.push_back(static_cast<Functional>(i));
        return v;
    }();
    return fs;
}

bool is_min_functional(Functional f) {
    return f == Functional::GammaDiffMin || f == Functional::GGDiffMin;
}

bool functional_supported(Functional f, double alpha) {
    if (f == Functional::AbsHLog || f == Functional::AbsHLogInv) {
        return std::abs(alpha - 1.0) <= 1e-12;
    }
    return alpha >= 0.0;
}

double functional_bound(Functional f, double alpha) {
    switch (f) {
        case Functional::AbsG1: return bound_gamma(1, alpha);
        case Functional::AbsG2: return bound_gamma(2, alpha);
        case Functional::AbsG3: return bound_gamma(3, alpha);
        case Functional::AbsGG1: return bound_Gamma(1, alpha);
        case Functional::AbsGG2: return bound_Gamma(2, alpha);
        case Functional::AbsGG3: return bound_Gamma(3, alpha);
        case Functional::GammaDiffMax: return bound_gamma_diff(alpha).upper;
        case Functional::GammaDiffMin: return bound_gamma_diff(alpha).lower;
        case Functional::GGDiffMax: return bound_Gamma_diff(alpha).upper;
        case Functional::GGDiffMin: return bound_Gamma_diff(alpha).lower;
        case Functional::AbsHLog: return bound_hankel(HankelKind::Log, alpha);
        case Functional::AbsHLogInv: return bound_hankel(HankelKind::LogInverse, alpha);
    }
    throw std::invalid_argument("functional_bound: bad functional");
}

double functional_value(Functional f, const TaylorPrefix& a) {
    return all_values(a)[static_cast<int>(f)];
}

SearchReport maximize_functional(Functional f, double alpha, const SearchConfig& cfg) {
    const bool minimize = is_min_functional(f);
    const double sign = minimize ? 1.0 : -1.0; // the simplex always minimizes
    const int idx = static_cast<int>(f);
    const std::size_t dim = cfg.real_only ? 3 : 6;

    auto to_params = [&](const std::vector<double>& x) {
        std::array<double, 6> q{};
        if (cfg.real_only) {
            q = {x[0], 0.0, x[1], 0.0, x[2], 0.0};
        } else {
            std::copy(x.begin(), x.end(), q.begin());
        }
        return q;
    };
    auto objective = [&](const std::vector<double>& x) {
        return sign * all_values(prefix_from_params(to_params(x), alpha))[idx];
    };

    SearchReport rep;
    rep.bound = functional_bound(f, alpha);
    rep.seed = cfg.seed;
    rep.best_value = minimize ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    NelderMeadOptions opt;
    opt.max_iterations = cfg.max_iterations;

    // deterministic corner starts on the real cube first, then seeded
    // random starts
    const double corner_vals[3] = {-0.9, 0.0, 0.9};
    for (int start = 0; start < cfg.starts; ++start) {
        std::vector<double> x0(dim, 0.0);
        if (start < 27) {
            const int stride = cfg.real_only ? 1 : 2;
            x0[0] = corner_vals[start % 3];
            x0[stride] = corner_vals[(start / 3) % 3];
            x0[2 * stride] = corner_vals[(start / 9) % 3];
        } else {
            for (auto& v : x0) v = sample_in_range(rng, uni);
        }
        const NelderMeadResult r = nelder_mead(objective, x0, opt);
        const double val = sign * r.value;
        const bool better = minimize ? val < rep.best_value : val > rep.best_value;
        if (better) {
            rep.best_value = val;
            rep.best_params = to_params(r.x);
        }
        rep.best_trace.push_back(rep.best_value);
    }

    rep.gap = minimize ? rep.best_value - rep.bound : rep.bound - rep.best_value;
    if (rep.gap < -cfg.tolerance) {
        rep.violations.push_back({rep.best_value, rep.best_params});
    }
    return rep;
}

std::vector<SearchReport> certify_batch(const std::vector<Functional>& fs, double alpha,
                                        const SearchConfig& cfg) {
    std::vector<SearchReport> reps(fs.size());
    std::vector<int> idx(fs.size());
    std::vector<bool> mins(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        reps[i].bound = functional_bound(fs[i], alpha);
        reps[i].seed = cfg.seed;
        mins[i] = is_min_functional(fs[i]);
        reps[i].best_value = mins[i] ? std::numeric_limits<double>::infinity()
                                     : -std::numeric_limits<double>::infinity();
        idx[i] = static_cast<int>(fs[i]);
    }

    auto visit = [&](const std::array<double, 6>& q) {
        const auto vals = all_values(prefix_from_params(q, alpha));
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const double v = vals[idx[i]];
            auto& rep = reps[i];
            const bool better = mins[i] ? v < rep.best_value : v > rep.best_value;
            if (better) {
                rep.best_value = v;
                rep.best_params = q;
            }
            const double excess = mins[i] ? rep.bound - v : v - rep.bound;
            if (excess > cfg.tolerance && rep.violations.size() < kMaxStoredViolations) {
                rep.violations.push_back({v, q});
            }
        }
    };

    // real Schur grid
    const int n = std::max(2, cfg.grid_resolution);
    for (int i = 0; i < n; ++i) {
        const double t1 = -1.0 + 2.0 * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double t2 = -1.0 + 2.0 * j / (n - 1);
            for (int k = 0; k < n; ++k) {
                const double t3 = -1.0 + 2.0 * k / (n - 1);
                visit({t1, 0.0, t2, 0.0, t3, 0.0});
            }
        }
    }

    // random complex probes, uniform over each disk
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double two_pi = 8.0 * std::atan(1.0);
    for (int p = 0; p < cfg.probes; ++p) {
        std::array<double, 6> q;
        for (int d = 0; d < 3; ++d) {
            const double r = std::sqrt(u01(rng));
            const double th = two_pi * u01(rng);
            q[2 * d] = r * std::cos(th);
            q[2 * d + 1] = r * std::sin(th);
        }
        visit(q);
    }

    for (std::size_t i = 0; i < fs.size(); ++i) {
        reps[i].gap = mins[i] ? reps[i].best_value - reps[i].bound
                              : reps[i].bound - reps[i].best_value;
    }
    return reps;
}

SearchReport certify_no_violation(Functional f, double alpha, const SearchConfig& cfg) {
    return certify_batch({f}, alpha, cfg)[0];
}

FxyReport maximize_F_xy(HankelKind which) {
    const double A = (which == HankelKind::Log) ? 95.0 / 20736.0 : 131.0 / 20736.0;
    const double B = (which == HankelKind::Log) ? 17.0 / 2592.0 : 19.0 / 2592.0;
    auto F = [&](double x, double y) {
        return A * x * x * x * x + B * x * x * y +
               x / 64.0 * (1.0 - x * x - y * y / (1.0 + x)) + y * y / 81.0;
    };

    FxyReport rep{};
    double x0;
    rep.y0_max = max_1d([&](double x) { return F(x, 0.0); }, 0.0, 1.0, x0);
    double xb;
    rep.boundary_max =
        max_1d([&](double x) { return F(x, 1.0 - x * x); }, 0.0, 1.0, xb);

    if (rep.boundary_max >= rep.y0_max) {
        rep.endpoint_case = FxyReport::Endpoint::Y1MinusX2;
        rep.max_value = rep.boundary_max;
        rep.x = xb;
        rep.y = 1.0 - xb * xb;
    } else {
        rep.endpoint_case = FxyReport::Endpoint::Y0;
        rep.max_value = rep.y0_max;
        rep.x = x0;
        rep.y = 0.0;
    }

    // interior sweep; F is convex and increasing in y for y >= 0 so this
    // should never beat the boundary, but check rather than assume
    const int m = 400;
    for (int i = 1; i < m; ++i) {
        const double x = static_cast<double>(i) / m;
        const double ymax = 1.0 - x * x;
        for (int j = 1; j < m; ++j) {
            const double y = ymax * j / m;
            const double v = F(x, y);
            if (v > rep.max_value) {
                rep.max_value = v;
                rep.x = x;
                rep.y = y;
                rep.endpoint_case = FxyReport::Endpoint::Interior;
            }
        }
    }

    double xc;
    rep.min_cy_coeff =
        -max_1d([](double x) { return -(1.0 / 81.0 - x / (64.0 * (1.0 + x))); }, 0.0,
                1.0, xc);
    return rep;
}

namespace {

const char* const kTheoremNames[kFunctionalCount] = {
    "GAMMA1_BOUND", "GAMMA2_BOUND", "GAMMA3_BOUND",
    "GAMMA_INV1_BOUND", "GAMMA_INV2_BOUND", "GAMMA_INV3_BOUND",
    "GAMMA_DIFF_UPPER", "GAMMA_DIFF_LOWER",
    "GAMMA_INV_DIFF_UPPER", "GAMMA_INV_DIFF_LOWER",
    "HANKEL_LOG", "HANKEL_LOG_INV",
};

} // namespace

const char* theorem_name(Theorem t) { return kTheoremNames[static_cast<int>(t)]; }

Theorem theorem_from_name(const std::string& name) {
    for (int i = 0; i < kFunctionalCount; ++i) {
        if (name == kTheoremNames[i]) return static_cast<Theorem>(i);
    }
    throw std::invalid_argument("unknown theorem: " + name);
}

const std::vector<Theorem>& all_theorems() {
    static const std::vector<Theorem> ts = [] {
        std::vector<Theorem> v;
        for (int i = 0; i < kFunctionalCount; ++i) v.push_back(static_cast<Theorem>(i));
        return v;
    }();
    return ts;
}

SharpnessRow sharpness_report(Theorem t, double alpha) {
    SharpnessRow row{t, alpha, 0.0, 0.0, 0.0};
    bool lower = false;
    ExtremalFamily fam{FamilyTag::F1, alpha, std::nullopt};
    Functional f = Functional::AbsG1;
    switch (t) {
        case Theorem::Gamma1Bound:
            f = Functional::AbsG1;
            fam.tag = FamilyTag::F1;
            break;
        case Theorem::Gamma2Bound:
            f = Functional::AbsG2;
            fam.tag = FamilyTag::F2;
            break;
        case Theorem::Gamma3Bound:
            f = Functional::AbsG3;
            fam.tag = FamilyTag::F3;
            break;
        case Theorem::GammaInv1Bound:
            f = Functional::AbsGG1;
            fam.tag = FamilyTag::F1;
            break;
        case Theorem::GammaInv2Bound:
            f = Functional::AbsGG2;
            fam.tag = alpha <= breakpoint("Gamma2_case").alpha ? FamilyTag::F1
                                                              : FamilyTag::F2;
            break;
        case Theorem::GammaInv3Bound:
            f = Functional::AbsGG3;
            fam.tag = alpha <= breakpoint("Gamma3_case").alpha ? FamilyTag::F1
                                                              : FamilyTag::F3;
            break;
        case Theorem::GammaDiffUpper:
            f = Functional::GammaDiffMax;
            fam.tag = FamilyTag::F2;
            break;
        case Theorem::GammaDiffLower:
            f = Functional::GammaDiffMin;
            fam = make_kernel_gamma_lower(alpha);
            lower = true;
            break;
        case Theorem::GammaInvDiffUpper:
            f = Functional::GGDiffMax;
            fam.tag = FamilyTag::F2;
            break;
        case Theorem::GammaInvDiffLower:
            f = Functional::GGDiffMin;
            fam = make_kernel_gamma_inv_lower(alpha);
            lower = true;
            break;
        case Theorem::HankelLog:
            f = Functional::AbsHLog;
            fam.tag = FamilyTag::F6;
            break;
        case Theorem::HankelLogInv:
            f = Functional::AbsHLogInv;
            fam.tag = FamilyTag::F6;
            break;
    }
    row.bound = functional_bound(f, alpha);
    row.attained = functional_value(f, extremal_taylor(fam));
    row.gap = lower ? row.attained - row.bound : row.bound - row.attained;
    return row;
}

const std::vector<double>& standard_alpha_samples() {
    static const std::vector<double> samples = [] {
        return std::vector<double>{0.0,
                                   0.25,
                                   breakpoint("Gamma2_case").alpha,
                                   breakpoint("Gamma3_case").alpha,
                                   1.0,
                                   breakpoint("Gamma_diff_first").alpha,
                                   breakpoint("Gamma_diff_mid_lo").alpha,
                                   breakpoint("gamma_diff_switch").alpha,
                                   breakpoint("B4_sign").alpha,
                                   breakpoint("nu_prime_root").alpha,
                                   5.0,
                                   breakpoint("Gamma_diff_mid_hi").alpha,
                                   8.0};
    }();
    return samples;
}

} // namespace coeffbounds
