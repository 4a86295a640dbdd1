#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "msine/norm.hpp"

namespace msine {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    /// Measured quantities behind the verdict, one "name value" fragment per check.
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kCriterionCount = 12;

/// The named norms the acceptance suite sweeps: euclidean, lp with p in {1, 1.5, 3, inf},
/// the regular hexagon and the regular octagon.
std::vector<std::pair<std::string, NormSpec>> standard_specs();

/// Runs acceptance criterion id (1..kCriterionCount). Throws std::out_of_range otherwise.
CriterionResult run_criterion(int id);

/// Runs every criterion in order, reporting each result as soon as it is known.
std::vector<CriterionResult> run_all_criteria(const std::function<void(const CriterionResult&)>& on_result = {});

/// "criterion  5  PASS  <title>  (<detail>, 1.2 s)".
std::string format_result(const CriterionResult& r);

struct GridDOracle {
    double value = 0.0;
    std::size_t admissible_pairs = 0;
};

/// Brute-force D: smallest sine_direct(u_i, u_j) over the n x n grid of unit directions
/// u_k = unit_point(2 pi k / n) whose isosceles gap |‖u_i+u_j‖ - ‖u_i-u_j‖| is <= filter.
GridDOracle d_grid_oracle(const NormSpec& spec, int n = 2048, double filter = 1e-6);

}  // namespace msine
