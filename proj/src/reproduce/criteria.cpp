#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "msine/constants.hpp"
#include "msine/orthogonality.hpp"
#include "msine/reproduce.hpp"
#include "msine/sine.hpp"
#include "msine/trig.hpp"
#include "numeric.hpp"

namespace msine {

namespace {

class Verdict {
public:
    void check(bool ok, const std::string& fragment) {
        passed_ = passed_ && ok;
        if (!detail_.empty()) detail_ += "; ";
        detail_ += fragment;
        if (!ok) detail_ += " [FAILED]";
    }
    bool passed() const { return passed_; }
    const std::string& detail() const { return detail_; }

private:
    bool passed_ = true;
    std::string detail_;
};

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double angle() { return angle_(rng_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    Vec2 direction() {
        const double a = angle();
        return {std::cos(a), std::sin(a)};
    }
    /// Direction with a log-uniform length in [0.1, 10].
    Vec2 vector() { return direction() * std::pow(10.0, uniform(-1.0, 1.0)); }
    Vec2 unit(const NormSpec& spec) { return unit_point(spec, angle()); }
    Vec2 point(double r) { return {uniform(-r, r), uniform(-r, r)}; }
    /// Two directions at Euclidean angle at least 1e-3 apart (as lines).
    std::pair<Vec2, Vec2> independent_pair() {
        while (true) {
            const Vec2 x = vector();
            const Vec2 y = vector();
            if (std::abs(euclidean_cross(x, y)) > 1e-3) return {x, y};
        }
    }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> angle_{0.0, 2.0 * M_PI};
};

const NormSpec& spec_named(const std::vector<std::pair<std::string, NormSpec>>& specs, const std::string& name) {
    for (const auto& [n, s] : specs) {
        if (n == name) return s;
    }
    throw std::logic_error("unknown spec " + name);
}

std::string sci(double v) { return fmt::format("{:.3g}", v); }

// Partner y of length r with gauge(x + y) = gauge(x - y), searched on the half-turn
// starting at the direction of x.
Vec2 isosceles_partner(const NormSpec& spec, Vec2 x, double r) {
    const double theta = polar_angle(x);
    auto h = [&](double phi) {
        const Vec2 y{r * std::cos(phi), r * std::sin(phi)};
        return spec.gauge(x + y) - spec.gauge(x - y);
    };
    const double phi = detail::bisect_root(h, theta + 1e-9, theta + M_PI - 1e-9);
    return {r * std::cos(phi), r * std::sin(phi)};
}

bool is_degenerate(const Triangle& t) {
    const double scale = std::max({euclidean_length(t.b - t.a), euclidean_length(t.c - t.a), 1e-300});
    return std::abs(symplectic(t.b - t.a, t.c - t.a)) <= 1e-6 * scale * scale;
}

// ---------------------------------------------------------------------------

void euclidean_consistency(Verdict& v) {
    const NormSpec eu = NormSpec::euclidean();
    Sampler rng(101);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const Vec2 x = rng.direction();
        const Vec2 y = rng.direction();
        const double d = dot(x, y);
        worst = std::max(worst, std::abs(sine_value(eu, x, y) - std::sqrt(std::max(0.0, 1.0 - d * d))));
    }
    v.check(worst <= 1e-10, "10000 unit pairs, max |s - sqrt(1 - <x,y>^2)| = " + sci(worst));
}

void oracle_equivalence(Verdict& v) {
    const auto specs = standard_specs();
    Sampler rng(202);
    double worst = 0.0;
    std::string worst_spec;
    for (int k = 0; k < 10000; ++k) {
        const auto& [name, spec] = specs[static_cast<std::size_t>(k) % specs.size()];
        const Vec2 x = rng.vector();
        const Vec2 y = rng.vector();
        const double e = std::abs(sine(spec, x, y).value - sine_direct(spec, x, y).value);
        if (e > worst) {
            worst = e;
            worst_spec = name;
        }
    }
    v.check(worst <= 1e-8, fmt::format("10000 triples over {} specs, max |formula - direct| = {} ({})", specs.size(),
                                       sci(worst), worst_spec));
}

void range_and_degeneracy(Verdict& v) {
    Sampler rng(303);
    for (const auto& [name, spec] : standard_specs()) {
        int range_bad = 0, birkhoff_bad = 0, parallel_bad = 0;
        for (int k = 0; k < 5000; ++k) {
            Vec2 x = rng.vector();
            Vec2 y = rng.vector();
            if (k % 3 == 1) x = antinorm(spec, y).witness * rng.uniform(0.1, 10.0);
            if (k % 3 == 2) y = x * (rng.uniform(0.0, 1.0) < 0.5 ? -rng.uniform(0.1, 10.0) : rng.uniform(0.1, 10.0));
            const double s = sine(spec, x, y).value;
            if (!(s >= 0.0 && s <= 1.0)) ++range_bad;
            if ((s >= 1.0 - 1e-8) != is_birkhoff(spec, x, y, 1e-8)) ++birkhoff_bad;
            const bool parallel = std::abs(euclidean_cross(x, y)) <= 1e-12;
            if ((s <= 1e-8) != parallel) ++parallel_bad;
        }
        v.check(range_bad + birkhoff_bad + parallel_bad == 0,
                fmt::format("{}: out of range {}, s=1 vs Birkhoff mismatches {}, s=0 vs parallel mismatches {}", name,
                            range_bad, birkhoff_bad, parallel_bad));
    }
}

void radon_symmetry(Verdict& v) {
    const NormSpec hex = regular_polygon(6);
    Sampler rng(404);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const Vec2 x = rng.vector();
        const Vec2 y = rng.vector();
        worst = std::max(worst, std::abs(sine_value(hex, x, y) - sine_value(hex, y, x)));
    }
    v.check(worst <= 1e-9, "hexagon 1000 pairs max |s(x,y) - s(y,x)| = " + sci(worst));

    const NormSpec sq = NormSpec::lp(INFINITY);
    const auto angles = sample_angles(sq, 64, M_PI);
    double best = 0.0;
    for (double a : angles) {
        for (double b : angles) {
            const Vec2 x{std::cos(a), std::sin(a)};
            const Vec2 y{std::cos(b), std::sin(b)};
            best = std::max(best, std::abs(sine_value(sq, x, y) - sine_value(sq, y, x)));
        }
    }
    v.check(best >= 0.499, fmt::format("p=inf largest sampled |s(x,y) - s(y,x)| = {:.12g}", best));
}

void four_n_gon_table(Verdict& v) {
    for (int n = 1; n <= 6; ++n) {
        const double expected = std::pow(std::sin(M_PI / (4 * n)), 2);
        const double got = c_r(regular_polygon(4 * n)).value;
        v.check(std::abs(got - expected) <= 1e-6, fmt::format("n={} c_R {:.9f} vs {:.9f}", n, got, expected));
    }
}

void c_e_extremes(Verdict& v) {
    double euclid = 0.0, hex = 0.0;
    for (const auto& [name, spec] : standard_specs()) {
        const double value = c_e(spec).value;
        v.check(value >= -1e-9 && value <= 1.5 + 1e-9, fmt::format("{} c_E {:.9g}", name, value));
        if (name == "euclidean") euclid = value;
        if (name == "hexagon") hex = value;
    }
    v.check(euclid <= 1e-8, "euclidean c_E <= 1e-8: " + sci(euclid));
    v.check(std::abs(hex - 1.5) <= 1e-6, "hexagon |c_E - 1.5| = " + sci(std::abs(hex - 1.5)));
}

void conjugate_range_bounds(Verdict& v) {
    Sampler rng(707);
    for (const auto& [name, spec] : standard_specs()) {
        double lo = INFINITY, hi = -INFINITY;
        const auto pairs = conjugate_pairs(spec);
        for (const auto& p : pairs) {
            for (int k = 0; k < 2000; ++k) {
                const double r = conjugate_range(spec, p, rng.vector());
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
        }
        v.check(lo >= 0.5 - 1e-9 && hi <= 2.0 + 1e-9,
                fmt::format("{} {} pairs range [{:.9f}, {:.9f}]", name, pairs.size(), lo, hi));
    }
    const NormSpec hex = regular_polygon(6);
    const ConjugatePair pair{hex.vertices()[0], hex.vertices()[2], true};
    const double top = conjugate_range(hex, pair, pair.x + pair.y);
    const double bottom = conjugate_range(hex, pair, 0.5 * (pair.y - pair.x));
    v.check(std::abs(top - 2.0) <= 1e-7 && std::abs(bottom - 0.5) <= 1e-7,
            fmt::format("hexagon x+y -> {:.12g}, (y-x)/2 -> {:.12g}", top, bottom));
}

void law_of_sines_suite(Verdict& v) {
    const NormSpec hex = regular_polygon(6);
    const NormSpec eu = NormSpec::euclidean();
    const NormSpec sq = NormSpec::lp(INFINITY);
    Sampler rng(808);

    double spread = 0.0;
    for (int k = 0; k < 200;) {
        const Triangle t{rng.unit(hex), rng.unit(hex), rng.unit(hex)};
        if (is_degenerate(t)) continue;
        spread = std::max(spread, law_of_sines(hex, t).max_spread);
        ++k;
    }
    v.check(spread <= 1e-8, "hexagon 200 inscribed triangles max spread " + sci(spread));

    double eu_err = 0.0;
    for (int k = 0; k < 200;) {
        const Vec2 x = rng.direction();
        const Vec2 y = rng.direction();
        const Triangle t{x, y, -x};
        if (is_degenerate(t)) continue;
        const auto r = law_of_sines(eu, t);
        eu_err = std::max({eu_err, std::abs(r.r1 - 2.0), std::abs(r.r2 - 2.0), std::abs(r.r3 - 2.0)});
        ++k;
    }
    v.check(eu_err <= 1e-9, "euclidean diameter triangles max |ratio - 2| " + sci(eu_err));

    const auto diag = find_orthogonal_diagonals(hex);
    const auto r = law_of_sines(hex, {diag.x, diag.y, -diag.x});
    const double hex_err = std::max({std::abs(r.r1 - 2.0), std::abs(r.r2 - 2.0), std::abs(r.r3 - 2.0)});
    v.check(hex_err <= 1e-7, fmt::format("hexagon diameter triangle ratio {:.12g}", r.r1));

    double weak = 0.0;
    for (int k = 0; k < 200;) {
        const Triangle t{rng.point(1.0), rng.point(1.0), rng.point(1.0)};
        if (is_degenerate(t)) continue;
        const auto w = law_of_sines(sq, t).weak_spread;
        weak = std::max({weak, w[0], w[1], w[2]});
        ++k;
    }
    v.check(weak <= 1e-9, "p=inf 200 triangles max weak-identity gap " + sci(weak));
}

void bisector_coincidence(Verdict& v) {
    const NormSpec hex = regular_polygon(6);
    Sampler rng(909);
    double worst = 0.0;
    for (int k = 0; k < 500;) {
        const auto [x, y] = rng.independent_pair();
        worst = std::max(worst, euclidean_length(busemann_bisector(hex, x, y) - glogovskii_bisector(hex, x, y)));
        ++k;
    }
    v.check(worst <= 1e-8, "hexagon 500 angles max bisector distance " + sci(worst));

    const NormSpec sq = NormSpec::lp(INFINITY);
    const Vec2 x{1, 0}, y{1, 1};
    const Vec2 b = busemann_bisector(sq, x, y);
    const Vec2 g = glogovskii_bisector(sq, x, y);
    const bool directions = std::abs(euclidean_cross(b, {2, 1})) <= 1e-12 && std::abs(euclidean_cross(g, {3, 1})) <= 1e-12;
    const double b_char = std::abs(sine_value(sq, x, b) - sine_value(sq, y, b));
    const double g_char = std::abs(sine_value(sq, g, x) - sine_value(sq, g, y));
    v.check(directions && euclidean_length(b - g) > 1e-3,
            fmt::format("p=inf Busemann ({:.12g},{:.12g}), Glogovskii ({:.12g},{:.12g})", b.x1, b.x2, g.x1, g.x2));
    v.check(b_char <= 1e-9 && g_char <= 1e-9,
            fmt::format("p=inf |s(x,z)-s(y,z)| = {}, |s(z,x)-s(z,y)| = {}", sci(b_char), sci(g_char)));
}

void equivalence_suites(Verdict& v) {
    Sampler rng(1010);
    for (const auto& [name, spec] : standard_specs()) {
        int tri_bad = 0, tri_equal = 0;
        for (int k = 0; k < 1000;) {
            Triangle t{rng.point(2.0), rng.point(2.0), rng.point(2.0)};
            if (k % 2 == 1) {
                const double r = rng.uniform(0.1, 3.0);
                t.b = t.a + r * rng.unit(spec);
                t.c = t.a + r * rng.unit(spec);
            }
            if (is_degenerate(t)) continue;
            const auto e = equal_sines_equal_sides(spec, t);
            if (e.equal_sines != e.equal_sides) ++tri_bad;
            if (e.equal_sides) ++tri_equal;
            ++k;
        }
        int iso_bad = 0, iso_true = 0;
        for (int k = 0; k < 1000;) {
            const Vec2 x = rng.vector();
            const Vec2 y = k % 2 == 1 ? isosceles_partner(spec, x, std::pow(10.0, rng.uniform(-1.0, 1.0))) : rng.vector();
            if (std::abs(euclidean_cross(x, y)) <= 1e-6) continue;
            const auto c = isosceles_sine_characterization(spec, x, y);
            if (c.isosceles != c.sines_at_y || c.isosceles != c.sines_at_x) ++iso_bad;
            if (c.isosceles) ++iso_true;
            ++k;
        }
        const auto conjugates = conjugate_pairs(spec);
        int refl_bad = 0, refl_true = 0;
        for (int k = 0; k < 500; ++k) {
            Vec2 x, y;
            if (k % 2 == 1) {
                const auto& p = conjugates[static_cast<std::size_t>(k / 2) % conjugates.size()];
                x = p.x;
                y = p.y;
            } else {
                std::tie(x, y) = rng.independent_pair();
            }
            const auto r = reflection_roberts_check(spec, x, y, 1000, kDefaultTol, static_cast<std::uint64_t>(k));
            if (r.conformal != r.roberts) ++refl_bad;
            if (r.roberts) ++refl_true;
        }
        v.check(tri_bad + iso_bad + refl_bad == 0,
                fmt::format("{}: disagreements triangles {} (equal {}), isosceles {} (true {}), reflections {} (Roberts {})",
                            name, tri_bad, tri_equal, iso_bad, iso_true, refl_bad, refl_true));
    }
}

void benitez_suite(Verdict& v) {
    Sampler rng(1111);
    for (const auto& [name, spec] : standard_specs()) {
        int bad = 0;
        for (int k = 0; k < 1000; ++k) {
            const auto [x, y] = rng.independent_pair();
            const double a = benitez_alpha(spec, x, y);
            if (!is_birkhoff(spec, x + a * y, x - a * y, 1e-8)) ++bad;
        }
        std::string fragment = fmt::format("{}: {} of 1000 pairs violate the defining relation", name, bad);
        bool ok = bad == 0;
        if (is_radon(spec).is_radon) {
            double worst = 0.0;
            for (int k = 0; k < 1000; ++k) {
                const Vec2 p = rng.unit(spec);
                const Vec2 q = rng.unit(spec);
                if (std::abs(euclidean_cross(p, q)) <= 1e-3) continue;
                worst = std::max(worst, std::abs(benitez_alpha(spec, p, q) * benitez_alpha(spec, q, -p) - 1.0));
            }
            ok = ok && worst <= 1e-7;
            fragment += ", max |alpha(v,w) alpha(w,-v) - 1| = " + sci(worst);
        }
        v.check(ok, fragment);
    }
}

void d_constant_suite(Verdict& v) {
    const auto specs = standard_specs();
    for (const char* name : {"euclidean", "p=inf", "hexagon"}) {
        const NormSpec& spec = spec_named(specs, name);
        const auto report = d_constant(spec);
        const auto oracle = d_grid_oracle(spec);
        const double gap = std::abs(report.value - oracle.value);
        v.check(gap <= 2e-3, fmt::format("{} D {:.9f} vs grid oracle {:.9f} ({} admissible pairs), gap {}", name,
                                         report.value, oracle.value, oracle.admissible_pairs, sci(gap)));
        if (std::string(name) == "euclidean") {
            v.check(std::abs(report.value - 1.0) <= 1e-9, "euclidean |D - 1| = " + sci(std::abs(report.value - 1.0)));
        }
    }
}

struct Criterion {
    const char* title;
    void (*body)(Verdict&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"Euclidean consistency", euclidean_consistency},
    {"antinorm formula vs direct minimization", oracle_equivalence},
    {"sine range and degeneracy", range_and_degeneracy},
    {"Radon symmetry dichotomy", radon_symmetry},
    {"c_R of regular 4n-gons", four_n_gon_table},
    {"c_E extremes", c_e_extremes},
    {"conjugate-range bounds", conjugate_range_bounds},
    {"Law of Sines", law_of_sines_suite},
    {"bisector coincidence", bisector_coincidence},
    {"equivalence suites", equivalence_suites},
    {"Benitez alpha", benitez_suite},
    {"D(X) against the grid oracle", d_constant_suite},
};

}  // namespace

std::vector<std::pair<std::string, NormSpec>> standard_specs() {
    return {
        {"euclidean", NormSpec::euclidean()},
        {"p=1", NormSpec::lp(1.0)},
        {"p=1.5", NormSpec::lp(1.5)},
        {"p=3", NormSpec::lp(3.0)},
        {"p=inf", NormSpec::lp(INFINITY)},
        {"hexagon", regular_polygon(6)},
        {"octagon", regular_polygon(8)},
    };
}

CriterionResult run_criterion(int id) {
    if (id < 1 || id > kCriterionCount) throw std::out_of_range(fmt::format("no acceptance criterion {}", id));
    const Criterion& c = kCriteria[id - 1];
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        c.body(v);
    } catch (const std::exception& e) {
        v.check(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return {id, c.title, v.passed(), v.detail(), elapsed.count()};
}

std::vector<CriterionResult> run_all_criteria(const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    return fmt::format("criterion {:2d}  {}  {}  ({}; {:.1f} s)", r.id, r.passed ? "PASS" : "FAIL", r.title, r.detail,
                       r.seconds);
}

}  // namespace msine
