#pragma once

#include <string_view>
#include <vector>

#include "msine/norm.hpp"
#include "msine/orthogonality.hpp"

namespace msine {

enum class ConstantName { c_e_pair, c_e, c_r, d };

std::string_view to_string(ConstantName name);

/// A sup/inf constant of the plane with its extremal witnesses.
struct ConstantReport {
    ConstantName name = ConstantName::c_e;
    double value = 0.0;
    /// Best value on the coarse grid, before refinement.
    double coarse_value = 0.0;
    /// c_E_pair: the z attaining the sup and the inf. c_E: the conjugate pair.
    /// c_R: x, y with the largest |s(x,y) - s(y,x)|. D: isosceles x, y with the smallest sine.
    std::vector<Vec2> witness;
    int grid = 0;
    bool refined = false;
};

/// sup_z - inf_z of s(z,x)^2 + s(z,y)^2 for a conjugate pair. Requires grid >= 256.
ConstantReport c_e_pair(const NormSpec& spec, const ConjugatePair& pair, int grid = 1024);

/// Largest c_e_pair over all conjugate pairs, with 17 rays sampled across each
/// continuum of conjugate pairs. Requires grid >= 256.
ConstantReport c_e(const NormSpec& spec, int grid = 1024);

/// sup over unit x, y of |s(x,y) - s(y,x)| on a grid x grid scan followed by pattern
/// search. Requires grid >= 256.
ConstantReport c_r(const NormSpec& spec, int grid = 512);

/// inf of s(x, y) over isosceles orthogonal unit pairs. Requires grid >= 256.
ConstantReport d_constant(const NormSpec& spec, int grid = 1024);

}  // namespace msine
