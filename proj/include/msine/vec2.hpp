#pragma once

#include <cmath>

namespace msine {

/// A point or direction of the plane.
struct Vec2 {
    double x1 = 0.0;
    double x2 = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x1 + o.x1, x2 + o.x2}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x1 - o.x1, x2 - o.x2}; }
    constexpr Vec2 operator-() const { return {-x1, -x2}; }
    constexpr Vec2 operator*(double s) const { return {x1 * s, x2 * s}; }
    constexpr Vec2 operator/(double s) const { return {x1 / s, x2 / s}; }
    constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

/// The fixed symplectic form: the 2x2 determinant [x, y] = x1*y2 - x2*y1.
constexpr double symplectic(Vec2 x, Vec2 y) { return x.x1 * y.x2 - x.x2 * y.x1; }

constexpr double dot(Vec2 x, Vec2 y) { return x.x1 * y.x1 + x.x2 * y.x2; }

/// Counterclockwise quarter turn, so that symplectic(x, y) == dot(quarter_turn(x), y).
constexpr Vec2 quarter_turn(Vec2 x) { return {-x.x2, x.x1}; }

inline double euclidean_length(Vec2 x) { return std::hypot(x.x1, x.x2); }

inline bool is_finite(Vec2 x) { return std::isfinite(x.x1) && std::isfinite(x.x2); }

constexpr bool is_zero(Vec2 x) { return x.x1 == 0.0 && x.x2 == 0.0; }

/// Angle of x in [0, 2*pi).
inline double polar_angle(Vec2 x) {
    double a = std::atan2(x.x2, x.x1);
    if (a < 0.0) a += 2.0 * M_PI;
    return a;
}

/// Sine of the Euclidean angle between x and y; a scale-free parallelism measure.
inline double euclidean_cross(Vec2 x, Vec2 y) {
    return symplectic(x, y) / (euclidean_length(x) * euclidean_length(y));
}

}  // namespace msine
