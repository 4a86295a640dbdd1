#include "msine/trig.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "msine/errors.hpp"
#include "msine/orthogonality.hpp"
#include "msine/sine.hpp"
#include "numeric.hpp"

namespace msine {

namespace {

void require_angle(Vec2 x, Vec2 y, const char* where) {
    if (is_zero(x) || is_zero(y)) throw ZeroVectorError(where);
    if (std::abs(euclidean_cross(x, y)) <= 1e-12) {
        throw PreconditionError(std::string(where) + ": x and y must not be parallel");
    }
}

void require_triangle(const Triangle& t, const char* where) {
    if (std::abs(symplectic(t.b - t.a, t.c - t.a)) <= 1e-12) {
        throw PreconditionError(std::string(where) + ": degenerate triangle");
    }
}

double ratio(const NormSpec& spec, Vec2 side, Vec2 u, Vec2 v) { return spec.gauge(side) / sine_value(spec, u, v); }

}  // namespace

Vec2 busemann_bisector(const NormSpec& spec, Vec2 x, Vec2 y) {
    require_angle(x, y, "busemann_bisector");
    return normalize(spec, x / spec.gauge(x) + y / spec.gauge(y));
}

Vec2 glogovskii_bisector(const NormSpec& spec, Vec2 x, Vec2 y) {
    require_angle(x, y, "glogovskii_bisector");
    return normalize(spec, x / antinorm_value(spec, x) + y / antinorm_value(spec, y));
}

double distance_to_ray(const NormSpec& spec, Vec2 p, Vec2 u) {
    if (is_zero(u)) throw ZeroVectorError("distance_to_ray");
    auto f = [&](double t) { return spec.gauge(p - t * u); };
    // Beyond t = 2 gauge(p) / gauge(u) the value exceeds gauge(p) = f(0).
    const double reach = 2.0 * spec.gauge(p) / spec.gauge(u);
    if (reach == 0.0) return 0.0;
    double best = f(0.0);
    if (spec.is_polyhedral()) {
        for (const Vec2& v : spec.vertices()) {
            const double den = symplectic(u, v);
            if (den == 0.0) continue;
            const double t = symplectic(p, v) / den;
            if (t > 0.0) best = std::min(best, f(t));
        }
        return best;
    }
    return std::min(best, detail::minimize_unimodal(f, 0.0, reach).value);
}

LawOfSinesReport law_of_sines(const NormSpec& spec, const Triangle& tri) {
    require_triangle(tri, "law_of_sines");
    const Vec2 x = tri.a, y = tri.b, z = tri.c;
    LawOfSinesReport r;
    r.r1 = ratio(spec, x - y, x - z, y - z);
    r.r2 = ratio(spec, y - z, x - y, x - z);
    r.r3 = ratio(spec, x - z, y - z, x - y);
    r.max_spread = std::max({r.r1, r.r2, r.r3}) - std::min({r.r1, r.r2, r.r3});
    const std::array<Triangle, 3> orders{Triangle{tri.a, tri.b, tri.c}, Triangle{tri.b, tri.c, tri.a},
                                         Triangle{tri.c, tri.a, tri.b}};
    for (std::size_t k = 0; k < 3; ++k) {
        const auto& [a, b, c] = orders[k];
        r.weak_spread[k] = std::abs(ratio(spec, c - a, b - a, c - b) - ratio(spec, b - a, c - a, c - b));
    }
    return r;
}

EqualSinesSides equal_sines_equal_sides(const NormSpec& spec, const Triangle& tri, double tol) {
    require_triangle(tri, "equal_sines_equal_sides");
    const auto& [a, b, c] = tri;
    return {std::abs(sine_value(spec, b - a, c - b) - sine_value(spec, c - a, c - b)) <= tol,
            std::abs(spec.gauge(b - a) - spec.gauge(c - a)) <= tol};
}

Triangle counterexample_triangle(const NormSpec& spec, int n_samples) {
    if (is_radon(spec).is_radon) throw PreconditionError("counterexample_triangle: the plane is Radon");
    Vec2 lo_pt, hi_pt;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double theta : sample_angles(spec, n_samples, M_PI)) {
        const Vec2 p = unit_point(spec, theta);
        const double a = antinorm_value(spec, p);
        if (a < lo) {
            lo = a;
            lo_pt = p;
        }
        if (a > hi) {
            hi = a;
            hi_pt = p;
        }
    }
    return {{0.0, 0.0}, lo_pt, hi_pt};
}

IsoscelesSines isosceles_sine_characterization(const NormSpec& spec, Vec2 x, Vec2 y, double tol) {
    require_angle(x, y, "isosceles_sine_characterization");
    return {is_isosceles(spec, x, y, tol),
            std::abs(sine_value(spec, x + y, y) - sine_value(spec, x - y, y)) <= tol,
            std::abs(sine_value(spec, x + y, x) - sine_value(spec, x - y, x)) <= tol};
}

ParallelogramArea parallelogram_area_check(const NormSpec& spec, Vec2 a, Vec2 b, Vec2 d) {
    const Vec2 v = b - a;
    const Vec2 w = d - a;
    if (std::abs(symplectic(v, w)) <= 1e-12) throw PreconditionError("parallelogram_area_check: degenerate parallelogram");
    ParallelogramArea r;
    r.area = std::abs(symplectic(v, w));
    r.product = spec.gauge(v) * spec.gauge(w) * sine_value(spec, v, w);
    r.ratio = r.area / r.product;
    return r;
}

double sine_conformal_defect(const NormSpec& spec, const LinearMap2& f, int n_samples, std::uint64_t seed) {
    if (std::abs(f.det()) <= 1e-12) throw PreconditionError("is_sine_conformal: the map is singular");
    if (n_samples < 100) throw PreconditionError("is_sine_conformal: n_samples must be >= 100");
    auto defect = [&](Vec2 x, Vec2 y) { return std::abs(sine_value(spec, f(x), f(y)) - sine_value(spec, x, y)); };
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    double worst = 0.0;
    for (int k = 0; k < n_samples; ++k) {
        const double s = angle(rng);
        const double t = angle(rng);
        worst = std::max(worst, defect({std::cos(s), std::sin(s)}, {std::cos(t), std::sin(t)}));
    }
    for (const Vec2& u : spec.vertices()) {
        for (const Vec2& v : spec.vertices()) worst = std::max(worst, defect(u, v));
    }
    return worst;
}

bool is_sine_conformal(const NormSpec& spec, const LinearMap2& f, int n_samples, double tol, std::uint64_t seed) {
    return sine_conformal_defect(spec, f, n_samples, seed) <= tol;
}

LinearMap2 reflection(Vec2 x, Vec2 y) {
    const double det = symplectic(x, y);
    if (std::abs(euclidean_cross(x, y)) <= 1e-12) throw PreconditionError("reflection: x and y must be independent");
    // (x | -y) times the inverse of (x | y).
    const double i11 = y.x2 / det, i12 = -y.x1 / det, i21 = -x.x2 / det, i22 = x.x1 / det;
    return {x.x1 * i11 - y.x1 * i21, x.x1 * i12 - y.x1 * i22, x.x2 * i11 - y.x2 * i21, x.x2 * i12 - y.x2 * i22};
}

ReflectionCheck reflection_roberts_check(const NormSpec& spec, Vec2 x, Vec2 y, int n_samples, double tol,
                                         std::uint64_t seed) {
    require_angle(x, y, "reflection_roberts_check");
    return {is_sine_conformal(spec, reflection(x, y), n_samples, tol, seed), is_roberts(spec, x, y, tol)};
}

}  // namespace msine
