#pragma once

#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "msine/norm.hpp"
#include "oracles.hpp"

#define CHECK_NEAR(actual, expected, tol)                                                  \
    do {                                                                                   \
        const double check_near_a_ = (actual);                                             \
        const double check_near_e_ = (expected);                                           \
        INFO(#actual " = " << check_near_a_ << ", expected " << check_near_e_);           \
        CHECK(std::abs(check_near_a_ - check_near_e_) <= (tol));                           \
    } while (0)

namespace testing {

using msine::NormSpec;
using msine::Vec2;

inline const double kSqrt3 = std::sqrt(3.0);

inline NormSpec hexagon() { return msine::regular_polygon(6); }
inline NormSpec octagon() { return msine::regular_polygon(8); }
inline NormSpec max_norm() { return NormSpec::lp(INFINITY); }

struct NamedSpec {
    std::string name;
    NormSpec spec;
    oracle::Gauge gauge;  // independent gauge for oracles
};

inline std::vector<NamedSpec> all_specs() {
    const auto hex = oracle::regular_ngon(6);
    const auto oct = oracle::regular_ngon(8);
    return {
        {"euclidean", NormSpec::euclidean(), [](Vec2 x) { return std::hypot(x.x1, x.x2); }},
        {"p=1", NormSpec::lp(1.0), [](Vec2 x) { return oracle::lp_gauge(1.0, x); }},
        {"p=1.5", NormSpec::lp(1.5), [](Vec2 x) { return oracle::lp_gauge(1.5, x); }},
        {"p=3", NormSpec::lp(3.0), [](Vec2 x) { return oracle::lp_gauge(3.0, x); }},
        {"p=inf", max_norm(), [](Vec2 x) { return oracle::lp_gauge(INFINITY, x); }},
        {"hexagon", hexagon(), [hex](Vec2 x) { return oracle::ray_cast_gauge(hex, x); }},
        {"octagon", octagon(), [oct](Vec2 x) { return oracle::ray_cast_gauge(oct, x); }},
    };
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    double angle() { return uniform(0.0, 2.0 * M_PI); }
    Vec2 direction() {
        const double a = angle();
        return {std::cos(a), std::sin(a)};
    }
    Vec2 vector() { return direction() * std::pow(10.0, uniform(-1.0, 1.0)); }

private:
    std::mt19937_64 gen_;
};

}  // namespace testing
