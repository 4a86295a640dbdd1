#pragma once

#include <span>
#include <string>
#include <vector>

#include "msine/vec2.hpp"

namespace msine {

/// Default absolute tolerance for boolean geometric predicates.
inline constexpr double kDefaultTol = 1e-9;

enum class NormKind { euclidean, lp, polygon };

/**
 * A norm on the plane, given by its unit ball.
 *
 * Three families are supported: the Euclidean norm, the p-norms (p = infinity
 * is the max norm) and norms whose unit ball is a centrally symmetric convex
 * polygon. A polygon is described by half of its vertices; the other half is
 * obtained by reflection through the origin, so central symmetry holds by
 * construction. Collinear and repeated vertices are merged.
 *
 * Balls with finitely many vertices (polygons, p = 1 and p = infinity) expose
 * their full counterclockwise vertex cycle through vertices(), which lets the
 * rest of the library take exact piecewise-linear paths.
 *
 * Instances are immutable.
 */
class NormSpec {
public:
    static NormSpec euclidean();
    /// Throws InvalidNormError unless 1 <= p (p may be +infinity).
    static NormSpec lp(double p);
    /// Throws InvalidNormError for fewer than two distinct half-vertices,
    /// non-finite input, zero area or a non-convex outline.
    static NormSpec polygon(std::span<const Vec2> half_vertices);

    NormKind kind() const { return kind_; }
    /// Exponent of a p-norm (2 for the Euclidean norm, unused for polygons).
    double p() const { return p_; }

    bool is_polyhedral() const { return !vertices_.empty(); }
    /// Full counterclockwise vertex cycle; the first half has polar angle in [0, pi).
    std::span<const Vec2> vertices() const { return vertices_; }
    /// First half of vertices(): the canonical polygon description.
    std::span<const Vec2> half_vertices() const {
        return std::span<const Vec2>(vertices_).first(vertices_.size() / 2);
    }
    /// Edge functionals: gauge(x) = max_i dot(edge_functionals()[i], x) for polyhedral balls.
    std::span<const Vec2> edge_functionals() const { return functionals_; }

    /// Minkowski functional of the unit ball.
    double gauge(Vec2 x) const;

    /// Human-readable description such as "lp(p=3)" or "polygon(6 vertices)".
    std::string describe() const;

private:
    NormSpec() = default;
    void set_vertices(std::vector<Vec2> full_cycle);

    NormKind kind_ = NormKind::euclidean;
    double p_ = 2.0;
    std::vector<Vec2> vertices_;
    std::vector<Vec2> functionals_;
};

inline double gauge(const NormSpec& spec, Vec2 x) { return spec.gauge(x); }

/// Regular n-gon with circumradius 1 and a vertex at (1, 0). Requires even n >= 4.
NormSpec regular_polygon(int n);

/// x scaled to unit gauge. Throws ZeroVectorError for x == 0.
Vec2 normalize(const NormSpec& spec, Vec2 x);

/// Point of the unit circle in direction (cos theta, sin theta).
Vec2 unit_point(const NormSpec& spec, double theta);

struct AntinormValue {
    double value = 0.0;
    /// A unit vector maximizing |[x, z]|, oriented so that [x, witness] > 0.
    /// It satisfies witness ⊣_B x.
    Vec2 witness;
};

/// sup over the unit circle of |[x, z]|. Throws ZeroVectorError for x == 0.
AntinormValue antinorm(const NormSpec& spec, Vec2 x);

/// Antinorm value only; zero at the origin.
double antinorm_value(const NormSpec& spec, Vec2 x);

/// The antinorm as a norm in its own right: lp(p) maps to lp(q) with 1/p + 1/q = 1
/// and polygons map to the polygon with vertices at the rotated edge functionals.
NormSpec antinorm_spec(const NormSpec& spec);

struct RadonReport {
    bool is_radon = false;
    /// Midpoint of the observed range of antinorm / gauge.
    double lambda = 0.0;
    /// Width of the observed range.
    double spread = 0.0;
};

/// Samples antinorm / gauge on n_samples directions (plus vertices and edge
/// midpoints for polyhedral balls). Requires n_samples >= 8.
RadonReport is_radon(const NormSpec& spec, int n_samples = 1024, double tol = kDefaultTol);

enum class CircleKind { unit, anticircle };

/// n points of the unit circle or anticircle, counterclockwise from angle 0.
std::vector<Vec2> emit_circle(const NormSpec& spec, CircleKind which, int n);

/// Sorted angles in [0, period) made of a uniform grid of `grid` angles plus the
/// angles of vertices and edge midpoints of a polyhedral ball (reduced mod period).
std::vector<double> sample_angles(const NormSpec& spec, int grid, double period);

}  // namespace msine
