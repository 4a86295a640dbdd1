#pragma once

#include <vector>

#include "msine/norm.hpp"

namespace msine {

/// Minimum of the convex map t -> gauge(x + t*y).
struct BirkhoffDefect {
    double t_star = 0.0;
    double min_value = 0.0;
};

/// Exact over breakpoints for polyhedral balls, Brent search otherwise.
/// Parallel x, y give min_value 0 at the cancelling t. Throws ZeroVectorError.
BirkhoffDefect birkhoff_defect(const NormSpec& spec, Vec2 x, Vec2 y);

/// x ⊣_B y, decided on unit representatives: min_value >= 1 - tol.
bool is_birkhoff(const NormSpec& spec, Vec2 x, Vec2 y, double tol = kDefaultTol);

/// One-sided derivatives at t = 0 of t -> gauge(u + t*v). u must be nonzero.
/// u ⊣_B v exactly when left <= 0 <= right.
struct OneSidedSlopes {
    double left = 0.0;
    double right = 0.0;
};
OneSidedSlopes gauge_slopes(const NormSpec& spec, Vec2 u, Vec2 v);

/// |gauge(x+y) - gauge(x-y)| <= tol.
bool is_isosceles(const NormSpec& spec, Vec2 x, Vec2 y, double tol = kDefaultTol);

/// Roberts orthogonality on unit representatives: |gauge(x+ty) - gauge(x-ty)| <= tol*max(1,t)
/// on 64 log-spaced t in [1e-3, 1e3] plus t = 1, and, for polyhedral balls, at every
/// breakpoint of either side (which makes the polyhedral check exact).
bool is_roberts(const NormSpec& spec, Vec2 x, Vec2 y, double tol = kDefaultTol);

/// Unit x, y with x ⊣_B y and y ⊣_B x, oriented so that [x, y] > 0 and x has polar angle in [0, pi).
struct ConjugatePair {
    Vec2 x;
    Vec2 y;
    /// A polygon vertex is involved, or the pair bounds a continuum of conjugate pairs.
    bool degenerate = false;
};

/// A continuum of conjugate pairs on a polygon: one member stays fixed while the other
/// slides along a segment of the unit circle. at(0) and at(1) are the extreme rays.
struct ConjugateCone {
    Vec2 x_from, x_to;
    Vec2 y_from, y_to;

    ConjugatePair at(double s) const {
        return {x_from + s * (x_to - x_from), y_from + s * (y_to - y_from), true};
    }
};

struct ConjugateStructure {
    std::vector<ConjugatePair> pairs;
    std::vector<ConjugateCone> cones;
};

/// Polyhedral balls: exact enumeration over vertex/edge combinations, returning isolated
/// pairs and cones (whose extreme rays also appear in pairs). Other balls: a scan of
/// n_scan directions over [0, pi) with bisection on the reverse-orthogonality defect.
/// Pairs are deduplicated as unordered pairs of lines at 1e-6 angular resolution.
/// Requires n_scan >= 64. Throws AccuracyError if nothing is found.
ConjugateStructure conjugate_structure(const NormSpec& spec, int n_scan = 256);

std::vector<ConjugatePair> conjugate_pairs(const NormSpec& spec, int n_scan = 256);

/// The unique alpha > 0 with (x + alpha*y) ⊣_B (x - alpha*y), by log-scale bisection.
/// Throws PreconditionError for collinear x, y.
double benitez_alpha(const NormSpec& spec, Vec2 x, Vec2 y);

/// alpha of the normalized blends ((1-l)v + l w, (1-l)w - l v); continuous in l.
double diagonal_homotopy(const NormSpec& spec, Vec2 v, Vec2 w, double lambda);

struct OrthogonalDiagonals {
    Vec2 x;
    Vec2 y;
    /// Homotopy parameter where the blend hit alpha = 1.
    double lambda = 0.0;
    /// alpha(x, y) at the returned pair (1 up to the bisection resolution).
    double alpha = 1.0;
};

/// Unit x != ±y with (x+y) ⊣_B (x-y), found by bisection on log diagonal_homotopy
/// between the seeds v and w. Throws PreconditionError unless the plane is Radon.
OrthogonalDiagonals find_orthogonal_diagonals(const NormSpec& spec, Vec2 v, Vec2 w);
/// Seeds v = unit_point(0), w = unit_point(pi/2).
OrthogonalDiagonals find_orthogonal_diagonals(const NormSpec& spec);

}  // namespace msine
