#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace coeffbounds {

struct NelderMeadOptions {
    int max_iterations = 200; // per restart
    int restarts = 3;         // rebuilds the simplex around the incumbent
    double initial_step = 0.3;
    double tolerance = 1e-12; // simplex value spread for convergence
};

struct NelderMeadResult {
    std::vector<double> x;
    double value;
    long evaluations;
};

/// Derivative-free simplex descent (reflection / expansion / contraction /
/// shrink) minimizing f.  Restarts with a shrunken simplex around the best
/// vertex when the value spread stagnates below tolerance.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    std::vector<double> start,
                                    const NelderMeadOptions& opt = {}) {
    const std::size_t n = start.size();
    long evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };

    std::vector<std::vector<double>> pts;
    std::vector<double> vals;
    double step = opt.initial_step;

    auto build_simplex = [&](const std::vector<double>& center) {
        pts.assign(1, center);
        for (std::size_t i = 0; i < n; ++i) {
            auto v = center;
            v[i] += step;
            pts.push_back(v);
        }
        vals.clear();
        for (const auto& p : pts) vals.push_back(eval(p));
    };

    build_simplex(start);
    for (int restart = 0; restart <= opt.restarts; ++restart) {
        if (restart > 0) {
            std::size_t best = static_cast<std::size_t>(
                std::min_element(vals.begin(), vals.end()) - vals.begin());
            step *= 0.25;
            build_simplex(pts[best]);
        }
        for (int iter = 0; iter < opt.max_iterations; ++iter) {
            // order: lo = best, hi = worst, nh = next worst
            std::size_t lo = 0, hi = 0;
            for (std::size_t i = 1; i <= n; ++i) {
                if (vals[i] < vals[lo]) lo = i;
                if (vals[i] > vals[hi]) hi = i;
            }
            std::size_t nh = lo;
            for (std::size_t i = 0; i <= n; ++i) {
                if (i != hi && vals[i] > vals[nh]) nh = i;
            }
            if (vals[hi] - vals[lo] < opt.tolerance) break;

            std::vector<double> centroid(n, 0.0);
            for (std::size_t i = 0; i <= n; ++i) {
                if (i == hi) continue;
                for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
            }
            for (auto& c : centroid) c /= static_cast<double>(n);

            auto blend = [&](double t) {
                std::vector<double> x(n);
                for (std::size_t j = 0; j < n; ++j) {
                    x[j] = centroid[j] + t * (pts[hi][j] - centroid[j]);
                }
                return x;
            };

            auto refl = blend(-1.0);
            double frefl = eval(refl);
            if (frefl < vals[lo]) {
                auto expa = blend(-2.0);
                double fexpa = eval(expa);
                if (fexpa < frefl) {
                    pts[hi] = std::move(expa);
                    vals[hi] = fexpa;
                } else {
                    pts[hi] = std::move(refl);
                    vals[hi] = frefl;
                }
            } else if (frefl < vals[nh]) {
                pts[hi] = std::move(refl);
                vals[hi] = frefl;
            } else {
                auto contr = blend(frefl < vals[hi] ? -0.5 : 0.5);
                double fcontr = eval(contr);
                if (fcontr < std::min(vals[hi], frefl)) {
                    pts[hi] = std::move(contr);
                    vals[hi] = fcontr;
                } else {
                    // shrink toward the best vertex
                    for (std::size_t i = 0; i <= n; ++i) {
                        if (i == lo) continue;
                        for (std::size_t j = 0; j < n; ++j) {
                            pts[i][j] = 0.5 * (pts[i][j] + pts[lo][j]);
                        }
                        vals[i] = eval(pts[i]);
                    }
                }
            }
        }
    }

    std::size_t best = static_cast<std::size_t>(
        std::min_element(vals.begin(), vals.end()) - vals.begin());
    return {pts[best], vals[best], evals};
}

} // namespace coeffbounds
