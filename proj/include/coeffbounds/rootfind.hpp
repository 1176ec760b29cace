#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace coeffbounds {

/// Bisection on a bracketing interval [lo, hi] with f(lo) * f(hi) <= 0.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-10) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::runtime_error("bisect: interval does not bracket a root");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Sign-scan over [lo, hi] at the given step; every sign change is refined
/// by bisection.  Returns the roots in increasing order.
inline std::vector<double> scan_roots(const std::function<double(double)>& f, double lo,
                                      double hi, double step = 0.01, double tol = 1e-10) {
    std::vector<double> roots;
    double x0 = lo;
    double f0 = f(x0);
    for (double x1 = lo + step; x0 < hi; x1 += step) {
        if (x1 > hi) x1 = hi;
        const double f1 = f(x1);
        if (f0 == 0.0) {
            roots.push_back(x0);
        } else if ((f0 > 0.0) != (f1 > 0.0)) {
            roots.push_back(bisect(f, x0, x1, tol));
        }
        x0 = x1;
        f0 = f1;
        if (x1 >= hi) break;
    }
    return roots;
}

/// First root in [lo, hi]; throws if the scan finds none.
inline double first_root(const std::function<double(double)>& f, double lo, double hi,
                         double step = 0.01, double tol = 1e-10) {
    const auto roots = scan_roots(f, lo, hi, step, tol);
    if (roots.empty()) {
        throw std::runtime_error("first_root: no sign change in scan range");
    }
    return roots.front();
}

} // namespace coeffbounds
