#include <cmath>

#include "msine/errors.hpp"
#include "msine/orthogonality.hpp"
#include "msine/sine.hpp"
#include "msine/trig.hpp"
#include "support.hpp"

using namespace msine;
using namespace testing;

namespace {

void check_direction(Vec2 actual, Vec2 expected, double tol) {
    const double len = std::hypot(expected.x1, expected.x2);
    const double alen = std::hypot(actual.x1, actual.x2);
    CHECK_NEAR(actual.x1 / alen, expected.x1 / len, tol);
    CHECK_NEAR(actual.x2 / alen, expected.x2 / len, tol);
}

}  // namespace

TEST_CASE("busemann_bisector examples") {
    const Vec2 e = busemann_bisector(NormSpec::euclidean(), {1, 0}, {0, 1});
    CHECK_NEAR(e.x1, std::sqrt(0.5), 1e-15);
    CHECK_NEAR(e.x2, std::sqrt(0.5), 1e-15);

    const Vec2 s = busemann_bisector(max_norm(), {1, 0}, {1, 1});
    CHECK_NEAR(s.x1, 1.0, 1e-15);
    CHECK_NEAR(s.x2, 0.5, 1e-15);
    CHECK_NEAR(sine_value(max_norm(), {1, 0}, s), sine_value(max_norm(), {1, 1}, s), 1e-9);

    CHECK_THROWS_AS(busemann_bisector(max_norm(), {1, 0}, {2, 0}), PreconditionError);
    CHECK_THROWS_AS(busemann_bisector(max_norm(), {1, 0}, {0, 0}), ZeroVectorError);
}

TEST_CASE("glogovskii_bisector examples") {
    const Vec2 e = glogovskii_bisector(NormSpec::euclidean(), {1, 0}, {0, 1});
    CHECK_NEAR(e.x1, std::sqrt(0.5), 1e-15);
    CHECK_NEAR(e.x2, std::sqrt(0.5), 1e-15);

    const Vec2 z = glogovskii_bisector(max_norm(), {1, 0}, {1, 1});
    check_direction(z, {3, 1}, 1e-15);
    CHECK_NEAR(max_norm().gauge(z), 1.0, 1e-15);
    CHECK_NEAR(sine_value(max_norm(), z, {1, 0}), sine_value(max_norm(), z, {1, 1}), 1e-9);
    for (double t : {0.5, 1.0, 3.0}) {
        CHECK_NEAR(distance_to_ray(max_norm(), t * z, {1, 0}), distance_to_ray(max_norm(), t * z, {1, 1}), 1e-9);
    }
    CHECK_THROWS_AS(glogovskii_bisector(hexagon(), {1, 1}, {-3, -3}), PreconditionError);
}

TEST_CASE("distance_to_ray") {
    CHECK_NEAR(distance_to_ray(NormSpec::euclidean(), {1, 1}, {1, 0}), 1.0, 1e-12);
    CHECK_NEAR(distance_to_ray(NormSpec::euclidean(), {-3, 4}, {1, 0}), 5.0, 1e-12);
    CHECK_NEAR(distance_to_ray(max_norm(), {3, 1}, {1, 1}), 1.0, 1e-12);
}

TEST_CASE("bisectors coincide on the hexagon and are dual in general") {
    Rng rng(31);
    for (int k = 0; k < 200; ++k) {
        const Vec2 x = rng.vector();
        const Vec2 y = rng.vector();
        if (std::abs(euclidean_cross(x / std::hypot(x.x1, x.x2), y / std::hypot(y.x1, y.x2))) < 1e-3) continue;
        const Vec2 b = busemann_bisector(hexagon(), x, y);
        const Vec2 g = glogovskii_bisector(hexagon(), x, y);
        CHECK_NEAR(b.x1, g.x1, 1e-8);
        CHECK_NEAR(b.x2, g.x2, 1e-8);
    }
    for (const auto& [name, spec, gauge] : all_specs()) {
        CAPTURE(name);
        const NormSpec dual = antinorm_spec(spec);
        for (int k = 0; k < 40; ++k) {
            const Vec2 x = rng.vector();
            const Vec2 y = rng.vector();
            if (std::abs(euclidean_cross(x / std::hypot(x.x1, x.x2), y / std::hypot(y.x1, y.x2))) < 1e-3) continue;
            const Vec2 b = busemann_bisector(spec, x, y);
            check_direction(glogovskii_bisector(dual, x, y), b, 1e-8);
            const Vec2 z = glogovskii_bisector(spec, x, y);
            CHECK_NEAR(sine_value(spec, z, x), sine_value(spec, z, y), 1e-9);
            CHECK_NEAR(sine_value(spec, x, b), sine_value(spec, y, b), 1e-9);
        }
    }
}

TEST_CASE("law_of_sines examples") {
    const auto e = law_of_sines(NormSpec::euclidean(), {{1, 0}, {0, 1}, {-1, 0}});
    CHECK_NEAR(e.r1, 2.0, 1e-12);
    CHECK_NEAR(e.r2, 2.0, 1e-12);
    CHECK_NEAR(e.r3, 2.0, 1e-12);
    CHECK_NEAR(e.max_spread, 0.0, 1e-12);

    const auto sq = law_of_sines(max_norm(), {{0, 0}, {1, 0}, {1, 1}});
    for (double w : sq.weak_spread) CHECK(w <= 1e-9);
    CHECK(sq.max_spread > 0.1);

    Rng rng(32);
    for (int k = 0; k < 50; ++k) {
        const Triangle t{unit_point(hexagon(), rng.angle()), unit_point(hexagon(), rng.angle()),
                         unit_point(hexagon(), rng.angle())};
        if (std::abs(symplectic(t.b - t.a, t.c - t.a)) < 1e-3) continue;
        const auto r = law_of_sines(hexagon(), t);
        CHECK(r.max_spread <= 1e-8);
        for (double w : r.weak_spread) CHECK(w <= 1e-9);
    }

    CHECK_THROWS_AS(law_of_sines(hexagon(), {{0, 0}, {1, 1}, {2, 2}}), PreconditionError);
}

TEST_CASE("diameter triangles have ratio 2") {
    Rng rng(33);
    for (int k = 0; k < 50; ++k) {
        const Vec2 x = rng.direction();
        const Vec2 y = rng.direction();
        if (std::abs(euclidean_cross(x, y)) < 1e-3) continue;
        const auto r = law_of_sines(NormSpec::euclidean(), {x, y, -x});
        CHECK_NEAR(r.r1, 2.0, 1e-9);
        CHECK_NEAR(r.r2, 2.0, 1e-9);
        CHECK_NEAR(r.r3, 2.0, 1e-9);
    }
    const auto d = find_orthogonal_diagonals(hexagon());
    const auto r = law_of_sines(hexagon(), {d.x, d.y, -d.x});
    CHECK_NEAR(r.r3, 2.0, 1e-7);
    CHECK_NEAR(r.r1, 2.0, 1e-7);
    CHECK_NEAR(r.r2, 2.0, 1e-7);
}

TEST_CASE("equal_sines_equal_sides examples") {
    auto r = equal_sines_equal_sides(max_norm(), {{0, 0}, {1, 0}, {0, 1}});
    CHECK(r.equal_sines);
    CHECK(r.equal_sides);
    CHECK_NEAR(sine_value(max_norm(), {1, 0}, {-1, 1}), 0.5, 1e-15);
    CHECK_NEAR(sine_value(max_norm(), {0, 1}, {-1, 1}), 0.5, 1e-15);

    r = equal_sines_equal_sides(NormSpec::euclidean(), {{0, 0}, {2, 0}, {0, 1}});
    CHECK_FALSE(r.equal_sines);
    CHECK_FALSE(r.equal_sides);

    // Reversed orientation: equal sides, unequal sines.
    CHECK_NEAR(sine_value(max_norm(), {0, 1}, {1, 0}), 1.0, 1e-15);
    CHECK_NEAR(sine_value(max_norm(), {0, 1}, {1, 1}), 0.5, 1e-15);
}

TEST_CASE("counterexample_triangle") {
    for (const auto& [name, spec, g] : all_specs()) {
        CAPTURE(name);
        if (is_radon(spec).is_radon) {
            CHECK_THROWS_AS(counterexample_triangle(spec), PreconditionError);
            continue;
        }
        const Triangle t = counterexample_triangle(spec);
        const Vec2 x = t.b - t.a, y = t.c - t.a;
        CHECK_NEAR(g(x), g(y), 1e-12);
        CHECK(std::abs(sine_value(spec, y - x, x) - sine_value(spec, y - x, y)) > 1e-3);
    }
}

TEST_CASE("isosceles_sine_characterization examples") {
    auto r = isosceles_sine_characterization(NormSpec::euclidean(), {1, 0}, {0, 1});
    CHECK((r.isosceles && r.sines_at_y && r.sines_at_x));
    r = isosceles_sine_characterization(max_norm(), {1, 0}, {0, 1});
    CHECK((r.isosceles && r.sines_at_y && r.sines_at_x));
    CHECK_NEAR(sine_value(max_norm(), {1, 1}, {0, 1}), 1.0, 1e-15);
    CHECK_NEAR(sine_value(max_norm(), {1, -1}, {0, 1}), 1.0, 1e-15);
    r = isosceles_sine_characterization(NormSpec::euclidean(), {1, 0}, {1, 1});
    CHECK_FALSE((r.isosceles || r.sines_at_y || r.sines_at_x));
    CHECK_THROWS_AS(isosceles_sine_characterization(max_norm(), {1, 0}, {-2, 0}), PreconditionError);
}

TEST_CASE("parallelogram_area_check examples") {
    auto p = parallelogram_area_check(NormSpec::euclidean(), {0, 0}, {1, 0}, {0, 1});
    CHECK_NEAR(p.area, 1.0, 1e-15);
    CHECK_NEAR(p.product, 1.0, 1e-15);
    CHECK_NEAR(p.ratio, 1.0, 1e-15);

    p = parallelogram_area_check(hexagon(), {0, 0}, {1, 0}, {0, kSqrt3 / 2});
    CHECK_NEAR(p.area, kSqrt3 / 2, 1e-12);
    CHECK_NEAR(p.product, 1.0, 1e-12);
    CHECK_NEAR(p.ratio, kSqrt3 / 2, 1e-12);

    const auto a = parallelogram_area_check(max_norm(), {0, 0}, {1, 0}, {0, 1});
    const auto b = parallelogram_area_check(max_norm(), {0, 0}, {1, 1}, {-1, 1});
    CHECK(std::abs(a.ratio - b.ratio) > 0.1);

    Rng rng(34);
    const double lambda = is_radon(hexagon()).lambda;
    for (int k = 0; k < 100; ++k) {
        const Vec2 o = rng.vector(), u = rng.vector(), v = rng.vector();
        if (std::abs(euclidean_cross(u / std::hypot(u.x1, u.x2), v / std::hypot(v.x1, v.x2))) < 1e-3) continue;
        CHECK_NEAR(parallelogram_area_check(hexagon(), o, o + u, o + v).ratio, lambda, 1e-8);
    }
    CHECK_THROWS_AS(parallelogram_area_check(hexagon(), {0, 0}, {1, 0}, {2, 0}), PreconditionError);
}

TEST_CASE("is_sine_conformal examples") {
    for (const auto& [name, spec, g] : all_specs()) {
        CAPTURE(name);
        CHECK(is_sine_conformal(spec, LinearMap2{}, 200));
        CHECK(is_sine_conformal(spec, LinearMap2{3, 0, 0, 3}, 200));
    }
    const double c = 0.5, s = kSqrt3 / 2;
    CHECK(is_sine_conformal(hexagon(), LinearMap2{c, -s, s, c}, 500));
    CHECK_FALSE(is_sine_conformal(NormSpec::euclidean(), LinearMap2{2, 0, 0, 1}, 200));
    CHECK_NEAR(sine_value(NormSpec::euclidean(), {2, 0}, {2, 1}), 1 / std::sqrt(5.0), 1e-15);
    CHECK_THROWS_AS(sine_conformal_defect(hexagon(), LinearMap2{1, 2, 2, 4}), PreconditionError);
    CHECK_THROWS_AS(sine_conformal_defect(hexagon(), LinearMap2{}, 99), PreconditionError);
    CHECK(sine_conformal_defect(hexagon(), LinearMap2{2, 1, 0, 1}, 300, 7) ==
          sine_conformal_defect(hexagon(), LinearMap2{2, 1, 0, 1}, 300, 7));
}

TEST_CASE("reflection_roberts_check examples") {
    const LinearMap2 r = reflection({1, 0}, {0, 1});
    CHECK(r.a == 1.0);
    CHECK(r.d == -1.0);
    CHECK_NEAR(r.b, 0.0, 1e-15);
    CHECK_NEAR(r.c, 0.0, 1e-15);
    const LinearMap2 q = reflection({1, 1}, {2, -1});
    const Vec2 fx = q({1, 1}), fy = q({2, -1});
    CHECK_NEAR(fx.x1, 1.0, 1e-15);
    CHECK_NEAR(fx.x2, 1.0, 1e-15);
    CHECK_NEAR(fy.x1, -2.0, 1e-15);
    CHECK_NEAR(fy.x2, 1.0, 1e-15);

    auto c = reflection_roberts_check(NormSpec::euclidean(), {1, 0}, {0, 1});
    CHECK((c.conformal && c.roberts));
    c = reflection_roberts_check(max_norm(), {1, 0}, {0, 1});
    CHECK((c.conformal && c.roberts));
    c = reflection_roberts_check(NormSpec::euclidean(), {1, 0}, {1, 1});
    CHECK_FALSE((c.conformal || c.roberts));
    CHECK_THROWS_AS(reflection_roberts_check(max_norm(), {1, 0}, {3, 0}), PreconditionError);
}
