#pragma once

#include <array>
#include <cstdint>

#include "msine/norm.hpp"

namespace msine {

/// Triangle with vertices a, b, c. Operations require |[b-a, c-a]| > 1e-12.
struct Triangle {
    Vec2 a;
    Vec2 b;
    Vec2 c;
};

/// 2x2 matrix, row-major: (a b; c d).
struct LinearMap2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double det() const { return a * d - b * c; }
    Vec2 operator()(Vec2 v) const { return {a * v.x1 + b * v.x2, c * v.x1 + d * v.x2}; }
};

/// Unit vector along x/‖x‖ + y/‖y‖. Throws for zero or parallel input.
Vec2 busemann_bisector(const NormSpec& spec, Vec2 x, Vec2 y);

/// Unit vector along x/‖x‖_a + y/‖y‖_a: the direction equidistant from the rays of x and y.
Vec2 glogovskii_bisector(const NormSpec& spec, Vec2 x, Vec2 y);

/// min over t >= 0 of gauge(p - t*u).
double distance_to_ray(const NormSpec& spec, Vec2 p, Vec2 u);

/// Ratios of a triangle xyz (x = a, y = b, z = c):
/// r1 = ‖x-y‖/s(x-z, y-z), r2 = ‖y-z‖/s(x-y, x-z), r3 = ‖x-z‖/s(y-z, x-y).
struct LawOfSinesReport {
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;
    /// Largest pairwise difference of r1, r2, r3; zero on Radon planes.
    double max_spread = 0.0;
    /// |‖c-a‖/s(b-a, c-b) - ‖b-a‖/s(c-a, c-b)| for the vertex orders abc, bca, cab.
    /// These identities hold in every normed plane.
    std::array<double, 3> weak_spread{};
};

LawOfSinesReport law_of_sines(const NormSpec& spec, const Triangle& tri);

struct EqualSinesSides {
    /// s(b-a, c-b) = s(c-a, c-b) within tol.
    bool equal_sines = false;
    /// ‖b-a‖ = ‖c-a‖ within tol.
    bool equal_sides = false;
};

EqualSinesSides equal_sines_equal_sides(const NormSpec& spec, const Triangle& tri, double tol = kDefaultTol);

/// The triangle o, x, y with x, y unit vectors of smallest and largest antinorm among
/// n_samples directions: ‖x‖ = ‖y‖ although s(y-x, x) != s(y-x, y).
/// Throws PreconditionError on a Radon plane.
Triangle counterexample_triangle(const NormSpec& spec, int n_samples = 1024);

struct IsoscelesSines {
    bool isosceles = false;
    /// s(x+y, y) = s(x-y, y).
    bool sines_at_y = false;
    /// s(x+y, x) = s(x-y, x).
    bool sines_at_x = false;
};

/// Throws PreconditionError for collinear x, y.
IsoscelesSines isosceles_sine_characterization(const NormSpec& spec, Vec2 x, Vec2 y, double tol = kDefaultTol);

struct ParallelogramArea {
    /// |[b-a, d-a]|.
    double area = 0.0;
    /// ‖b-a‖ ‖d-a‖ s(b-a, d-a).
    double product = 0.0;
    /// area / product: the constant lambda of a Radon plane.
    double ratio = 0.0;
};

/// Parallelogram spanned at a by b - a and d - a. Throws PreconditionError if degenerate.
ParallelogramArea parallelogram_area_check(const NormSpec& spec, Vec2 a, Vec2 b, Vec2 d);

/// Largest |sine(f x, f y) - sine(x, y)| over n_samples random direction pairs drawn
/// from a seeded generator, plus all vertex pairs of a polyhedral ball.
/// Throws PreconditionError for singular f or n_samples < 100.
double sine_conformal_defect(const NormSpec& spec, const LinearMap2& f, int n_samples = 1000,
                             std::uint64_t seed = 0);

bool is_sine_conformal(const NormSpec& spec, const LinearMap2& f, int n_samples = 1000, double tol = kDefaultTol,
                       std::uint64_t seed = 0);

/// The linear map fixing x and negating y.
LinearMap2 reflection(Vec2 x, Vec2 y);

struct ReflectionCheck {
    bool conformal = false;
    bool roberts = false;
};

/// Conformality of the reflection fixing x and negating y, next to x ⊣_R y.
ReflectionCheck reflection_roberts_check(const NormSpec& spec, Vec2 x, Vec2 y, int n_samples = 1000,
                                         double tol = kDefaultTol, std::uint64_t seed = 0);

}  // namespace msine
