#pragma once

// One-dimensional search primitives shared by the geometry modules.

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <cstdint>
#include <utility>

namespace msine::detail {

struct Minimum {
    double arg;
    double value;
};

/// Minimizes a unimodal f on [lo, hi] (Brent: golden-section steps with parabolic acceleration).
template <class F>
Minimum minimize_unimodal(F&& f, double lo, double hi) {
    std::uintmax_t max_iter = 500;
    const auto r = boost::math::tools::brent_find_minima(f, lo, hi, 52, max_iter);
    return {r.first, r.second};
}

/// Root of a continuous f on [lo, hi] with f(lo) and f(hi) of opposite sign (or zero),
/// by bisection down to adjacent doubles or max_iter halvings.
template <class F>
double bisect_root(F&& f, double lo, double hi, int max_iter = 200) {
    double flo = f(lo);
    if (flo == 0.0) return lo;
    const double fhi = f(hi);
    if (fhi == 0.0) return hi;
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace msine::detail
