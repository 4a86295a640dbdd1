#pragma once

#include "msine/norm.hpp"
#include "msine/orthogonality.hpp"

namespace msine {

enum class SineMethod { direct, antinorm_formula };

/// s(x, y): the distance from the origin to the line through x̂ in direction ŷ,
/// where x̂, ŷ are the unit representatives of x and y.
struct SineValue {
    double value = 0.0;
    /// Minimizer of t -> gauge(x̂ + t ŷ).
    double t_star = 0.0;
    SineMethod method = SineMethod::antinorm_formula;
};

/// Minimizes gauge(x̂ + t ŷ) over t. Exact for polyhedral balls.
SineValue sine_direct(const NormSpec& spec, Vec2 x, Vec2 y);

/// |[x̂, ŷ]| / antinorm(ŷ). Pairs with |[x̂, ŷ]| <= 1e-12 count as parallel (value 0).
/// Throws ZeroVectorError.
SineValue sine(const NormSpec& spec, Vec2 x, Vec2 y);

/// Sine of the antinorm plane: sine(y, x).
SineValue sine_antinorm(const NormSpec& spec, Vec2 x, Vec2 y);

inline double sine_value(const NormSpec& spec, Vec2 x, Vec2 y) { return sine(spec, x, y).value; }

/// Coefficients of z in the basis of a conjugate pair: z = alpha*x + beta*y.
struct PolarCoords {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Solves z = alpha*x + beta*y and checks |alpha| = ‖z‖ s(z,y) and |beta| = ‖z‖ s(z,x)
/// to 1e-8 (relative to max(1, ‖z‖)). Throws PreconditionError if the basis is
/// dependent or the check fails, ZeroVectorError for z = 0.
PolarCoords polar_coords(const NormSpec& spec, const ConjugatePair& pair, Vec2 z);

/// s(z,x)^2 + s(z,y)^2, which lies in [1/2, 2] for a conjugate pair.
double conjugate_range(const NormSpec& spec, const ConjugatePair& pair, Vec2 z);

struct SinePair {
    Vec2 z;
    Vec2 y;
};

/// Unit z, y with sine(z, y) = eps: z is where the line through eps*x parallel to y
/// meets the unit circle, (x, y) being the first conjugate pair. Throws
/// PreconditionError unless 0 <= eps <= 1.
SinePair find_pair_with_sine(const NormSpec& spec, double eps);

}  // namespace msine
