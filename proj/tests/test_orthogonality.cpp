#include <cmath>

#include "msine/errors.hpp"
#include "msine/orthogonality.hpp"
#include "support.hpp"

using namespace msine;
using namespace testing;

namespace {

bool has_pair(const std::vector<ConjugatePair>& pairs, Vec2 x, Vec2 y, double tol = 1e-9) {
    auto same_line = [&](Vec2 a, Vec2 b) { return std::abs(euclidean_cross(a, b)) <= tol; };
    for (const auto& p : pairs) {
        if ((same_line(p.x, x) && same_line(p.y, y)) || (same_line(p.x, y) && same_line(p.y, x))) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("birkhoff_defect examples") {
    const NormSpec eu = NormSpec::euclidean();
    auto d = birkhoff_defect(eu, {1, 0}, {0, 1});
    CHECK_NEAR(d.t_star, 0.0, 1e-7);
    CHECK_NEAR(d.min_value, 1.0, 1e-15);

    // Grid oracle: min_t |(1,0) + t (r,r)| with r = sqrt(2)/2.
    const double r = std::sqrt(0.5);
    const auto [t_oracle, m_oracle] =
        oracle::grid_minimize([&](double t) { return std::hypot(1 + t * r, t * r); }, -3, 3);
    const double frozen_min = 0.70710678118654757;
    CHECK_NEAR(m_oracle, frozen_min, 1e-12);
    CHECK_NEAR(t_oracle, -frozen_min, 1e-6);
    d = birkhoff_defect(eu, {1, 0}, {r, r});
    CHECK_NEAR(d.min_value, frozen_min, 1e-12);
    CHECK_NEAR(d.t_star, -frozen_min, 1e-7);

    // Grid oracle: min_t max(|1+t|, |t|) is 1/2 at t = -1/2.
    const auto sq_oracle =
        oracle::grid_minimize([](double t) { return std::max(std::abs(1 + t), std::abs(t)); }, -3, 3);
    CHECK_NEAR(sq_oracle.second, 0.5, 1e-12);
    d = birkhoff_defect(max_norm(), {1, 0}, {1, 1});
    CHECK_NEAR(d.min_value, 0.5, 1e-15);
    CHECK_NEAR(d.t_star, -0.5, 1e-15);
    CHECK_FALSE(is_birkhoff(max_norm(), {1, 0}, {1, 1}));
}

TEST_CASE("birkhoff_defect on parallel and zero input") {
    const auto d = birkhoff_defect(hexagon(), {1, 0}, {2, 0});
    CHECK_NEAR(d.min_value, 0.0, 1e-15);
    CHECK_NEAR(d.t_star, -0.5, 1e-15);
    CHECK_THROWS_AS(birkhoff_defect(hexagon(), {0, 0}, {1, 0}), ZeroVectorError);
    CHECK_THROWS_AS(is_birkhoff(hexagon(), {1, 0}, {0, 0}), ZeroVectorError);
}

TEST_CASE("birkhoff_defect matches the grid oracle") {
    Rng rng(11);
    for (const auto& [name, spec, g] : all_specs()) {
        CAPTURE(name);
        for (int k = 0; k < 20; ++k) {
            const Vec2 x = rng.vector();
            const Vec2 y = rng.vector();
            const auto d = birkhoff_defect(spec, x, y);
            const double reach = 4 * g(x) / g(y);
            const auto o = oracle::grid_minimize([&](double t) { return g(x + t * y); }, -reach, reach);
            CHECK_NEAR(d.min_value, o.second, 1e-9 * g(x));
            CHECK(d.min_value <= g(x) * (1 + 1e-15));
            CHECK_NEAR(spec.gauge(x + d.t_star * y), d.min_value, 1e-12 * g(x));
        }
    }
}

TEST_CASE("gauge_slopes at a vertex of the square") {
    const auto s = gauge_slopes(max_norm(), {1, 1}, {1, 0});
    CHECK(s.left == 0.0);
    CHECK(s.right == 1.0);
    const auto e = gauge_slopes(NormSpec::euclidean(), {3, 4}, {1, 0});
    CHECK_NEAR(e.left, 0.6, 1e-15);
    CHECK_NEAR(e.right, 0.6, 1e-15);
}

TEST_CASE("is_isosceles examples") {
    CHECK(is_isosceles(NormSpec::euclidean(), {1, 0}, {0, 1}));
    CHECK(is_isosceles(max_norm(), {1, 0}, {0, 1}));
    CHECK_FALSE(is_isosceles(NormSpec::euclidean(), {1, 0}, {1, 1}));
    CHECK_THROWS_AS(is_isosceles(max_norm(), {0, 0}, {0, 1}), ZeroVectorError);
}

TEST_CASE("is_roberts examples") {
    CHECK(is_roberts(max_norm(), {1, 0}, {0, 1}));
    CHECK_FALSE(is_roberts(NormSpec::euclidean(), {1, 0}, {1, 1}));
    for (const auto& [name, spec, g] : all_specs()) {
        CAPTURE(name);
        CHECK_FALSE(is_roberts(spec, {0.3, 0.7}, {0.3, 0.7}));
    }
    CHECK(is_roberts(NormSpec::euclidean(), {2, 1}, {-1, 2}));
    // The octagon is symmetric under the reflection in the x-axis.
    CHECK(is_roberts(octagon(), {1, 0}, {0, 1}));
    CHECK_FALSE(is_roberts(hexagon(), {1, 0}, {1, 2}));
}

TEST_CASE("conjugate_pairs examples") {
    CHECK(has_pair(conjugate_pairs(NormSpec::euclidean()), {1, 0}, {0, 1}));

    const auto sq = conjugate_pairs(max_norm());
    REQUIRE(sq.size() == 2);
    CHECK(has_pair(sq, {1, 0}, {0, 1}));
    CHECK(has_pair(sq, {1, 1}, {-1, 1}));
    for (const auto& p : sq) {
        // Only the diagonal pair sits on vertices; the axis pair joins two edge midpoints.
        CHECK(p.degenerate == (std::abs(p.x.x1) == std::abs(p.x.x2)));
    }

    const auto hex = conjugate_pairs(hexagon());
    CHECK(has_pair(hex, {1, 0}, {-0.5, kSqrt3 / 2}));
    const Vec2 s = Vec2{1, 0} + Vec2{-0.5, kSqrt3 / 2};
    CHECK_NEAR(hexagon().gauge(s), 1.0, 1e-12);
    CHECK_NEAR(euclidean_cross(s, hexagon().vertices()[1]), 0.0, 1e-12);
}

TEST_CASE("conjugate pairs are mutually Birkhoff orthogonal by the grid oracle") {
    for (const auto& [name, spec, g] : all_specs()) {
        CAPTURE(name);
        const auto pairs = conjugate_pairs(spec, 64);
        CHECK(!pairs.empty());
        for (std::size_t k = 0; k < pairs.size(); k += std::max<std::size_t>(1, pairs.size() / 8)) {
            const auto& p = pairs[k];
            CHECK_NEAR(g(p.x), 1.0, 1e-9);
            CHECK_NEAR(g(p.y), 1.0, 1e-9);
            CHECK(symplectic(p.x, p.y) > 0.0);
            CHECK(polar_angle(p.x) < M_PI);
            CHECK(oracle::birkhoff(g, p.x, p.y, 1e-9));
            CHECK(oracle::birkhoff(g, p.y, p.x, 1e-9));
        }
    }
}

TEST_CASE("hexagon conjugate cones: every interior ray is conjugate") {
    const auto s = conjugate_structure(hexagon());
    CHECK(s.cones.size() == 3);
    const auto g = all_specs()[5].gauge;
    for (const auto& cone : s.cones) {
        for (double t : {0.0, 0.25, 0.5, 0.9, 1.0}) {
            const auto p = cone.at(t);
            CHECK_NEAR(g(p.x), 1.0, 1e-12);
            CHECK_NEAR(g(p.y), 1.0, 1e-12);
            CHECK(oracle::birkhoff(g, p.x, p.y, 1e-9));
            CHECK(oracle::birkhoff(g, p.y, p.x, 1e-9));
        }
    }
    CHECK_THROWS_AS(conjugate_pairs(hexagon(), 63), PreconditionError);
}

TEST_CASE("benitez_alpha examples") {
    const NormSpec eu = NormSpec::euclidean();
    CHECK_NEAR(benitez_alpha(eu, {2, 0}, {0, 1}), 2.0, 1e-9);
    CHECK_NEAR(benitez_alpha(eu, {0.6, 0.8}, {-0.8, 0.6}), 1.0, 1e-9);
    CHECK_NEAR(benitez_alpha(max_norm(), {1, 0}, {0, 1}), 1.0, 1e-9);
    CHECK(is_birkhoff(max_norm(), {1, 1}, {1, -1}));

    const NormSpec hex = hexagon();
    CHECK_NEAR(benitez_alpha(hex, {1, 0}, {0, 1}), kSqrt3, 1e-9);
    CHECK_NEAR(benitez_alpha(hex, {0, 1}, {-1, 0}), 1 / kSqrt3, 1e-9);
    CHECK_NEAR(benitez_alpha(hex, {1, 0}, {0, kSqrt3 / 2}), 2.0, 1e-9);
    CHECK_NEAR(benitez_alpha(hex, {0, kSqrt3 / 2}, {-1, 0}), 0.5, 1e-9);

    CHECK_THROWS_AS(benitez_alpha(hex, {1, 1}, {-2, -2}), PreconditionError);
    CHECK_THROWS_AS(benitez_alpha(hex, {0, 0}, {1, 0}), ZeroVectorError);
}

TEST_CASE("benitez_alpha satisfies its defining relation by the grid oracle") {
    Rng rng(12);
    for (const auto& [name, spec, g] : all_specs()) {
        CAPTURE(name);
        for (int k = 0; k < 10; ++k) {
            const Vec2 x = rng.vector();
            const Vec2 y = rng.vector();
            if (std::abs(euclidean_cross(x, y)) < 1e-3) continue;
            const double a = benitez_alpha(spec, x, y);
            CHECK(a > 0.0);
            CHECK(oracle::birkhoff(g, x + a * y, x - a * y, 1e-8));
        }
    }
}

TEST_CASE("find_orthogonal_diagonals") {
    const auto eu = find_orthogonal_diagonals(NormSpec::euclidean());
    CHECK_NEAR(dot(eu.x + eu.y, eu.x - eu.y), 0.0, 1e-12);

    const NormSpec hex = hexagon();
    const auto d = find_orthogonal_diagonals(hex);
    CHECK_NEAR(birkhoff_defect(hex, d.x + d.y, d.x - d.y).min_value, hex.gauge(d.x + d.y), 1e-8);
    CHECK(std::abs(euclidean_cross(d.x, d.y)) > 1e-6);
    CHECK_NEAR(d.alpha, 1.0, 1e-9);

    const auto seeded = find_orthogonal_diagonals(hex, {1, 0}, {0, kSqrt3 / 2});
    CHECK(seeded.lambda >= 0.0);
    CHECK(seeded.lambda <= 1.0);
    CHECK_NEAR(diagonal_homotopy(hex, {1, 0}, {0, kSqrt3 / 2}, seeded.lambda), 1.0, 1e-9);
    // f(0) = alpha(v, w) and f(1) = alpha(w, -v) are reciprocal on a Radon plane.
    CHECK_NEAR(diagonal_homotopy(hex, {1, 0}, {0, kSqrt3 / 2}, 0.0) *
                   diagonal_homotopy(hex, {1, 0}, {0, kSqrt3 / 2}, 1.0),
               1.0, 1e-9);

    CHECK_THROWS_AS(find_orthogonal_diagonals(max_norm()), PreconditionError);
}
