#include <cmath>
#include <limits>
#include <vector>

#include "msine/reproduce.hpp"
#include "msine/sine.hpp"

namespace msine {

GridDOracle d_grid_oracle(const NormSpec& spec, int n, double filter) {
    std::vector<Vec2> u(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) u[k] = unit_point(spec, 2.0 * M_PI * k / n);
    GridDOracle out{std::numeric_limits<double>::infinity(), 0};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i || (n % 2 == 0 && j == (i + n / 2) % n)) continue;
            if (std::abs(spec.gauge(u[i] + u[j]) - spec.gauge(u[i] - u[j])) > filter) continue;
            ++out.admissible_pairs;
            out.value = std::min(out.value, sine_direct(spec, u[i], u[j]).value);
        }
    }
    return out;
}

}  // namespace msine
