#include "msine/sine.hpp"

#include <algorithm>
#include <cmath>

#include "msine/errors.hpp"
#include "numeric.hpp"

namespace msine {

namespace {

constexpr double kParallelEps = 1e-12;

}  // namespace

SineValue sine_direct(const NormSpec& spec, Vec2 x, Vec2 y) {
    if (is_zero(x) || is_zero(y)) throw ZeroVectorError("sine_direct");
    const auto d = birkhoff_defect(spec, normalize(spec, x), normalize(spec, y));
    return {std::clamp(d.min_value, 0.0, 1.0), d.t_star, SineMethod::direct};
}

SineValue sine(const NormSpec& spec, Vec2 x, Vec2 y) {
    if (is_zero(x) || is_zero(y)) throw ZeroVectorError("sine");
    const Vec2 ux = normalize(spec, x);
    const Vec2 uy = normalize(spec, y);
    const double cross = symplectic(ux, uy);
    if (std::abs(cross) <= kParallelEps) {
        return {0.0, -dot(ux, uy) / dot(uy, uy), SineMethod::antinorm_formula};
    }
    const auto a = antinorm(spec, uy);
    // The minimizing point x̂ + t ŷ lies on the ray through the witness.
    const double t_star = -symplectic(ux, a.witness) / symplectic(uy, a.witness);
    return {std::min(1.0, std::abs(cross) / a.value), t_star, SineMethod::antinorm_formula};
}

SineValue sine_antinorm(const NormSpec& spec, Vec2 x, Vec2 y) { return sine(spec, y, x); }

PolarCoords polar_coords(const NormSpec& spec, const ConjugatePair& pair, Vec2 z) {
    if (is_zero(z)) throw ZeroVectorError("polar_coords");
    const double det = symplectic(pair.x, pair.y);
    if (std::abs(euclidean_cross(pair.x, pair.y)) <= kParallelEps) {
        throw PreconditionError("polar_coords: pair directions are dependent");
    }
    const PolarCoords c{symplectic(z, pair.y) / det, symplectic(pair.x, z) / det};
    const double g = spec.gauge(z);
    const double slack = 1e-8 * std::max(1.0, g);
    if (std::abs(std::abs(c.alpha) - g * sine_value(spec, z, pair.y)) > slack ||
        std::abs(std::abs(c.beta) - g * sine_value(spec, z, pair.x)) > slack) {
        throw PreconditionError("polar_coords: pair is not conjugate");
    }
    return c;
}

double conjugate_range(const NormSpec& spec, const ConjugatePair& pair, Vec2 z) {
    const double a = sine_value(spec, z, pair.x);
    const double b = sine_value(spec, z, pair.y);
    return a * a + b * b;
}

SinePair find_pair_with_sine(const NormSpec& spec, double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw PreconditionError("find_pair_with_sine: eps must lie in [0, 1]");
    const ConjugatePair pair = conjugate_pairs(spec).front();
    if (eps == 0.0) return {pair.y, pair.y};
    // gauge(eps*x + s*y) - 1 is <= 0 at s = 0 and >= 1 - eps at s = 2.
    const Vec2 base = eps * pair.x;
    const double s = detail::bisect_root([&](double t) { return spec.gauge(base + t * pair.y) - 1.0; }, 0.0, 2.0);
    return {base + s * pair.y, pair.y};
}

}  // namespace msine
