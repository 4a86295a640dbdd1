#include "msine/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "msine/errors.hpp"
#include "msine/sine.hpp"
#include "numeric.hpp"

namespace msine {

namespace {

constexpr int kConeRays = 17;
constexpr int kPatternShrinks = 60;

void require_grid(int grid, const char* where) {
    if (grid < 256) throw PreconditionError(std::string(where) + ": grid must be >= 256");
}

// Neighbouring sample angles of index k on a sorted periodic grid.
std::pair<double, double> neighbours(const std::vector<double>& angles, std::size_t k, double period) {
    const double lo = k == 0 ? angles.back() - period : angles[k - 1];
    const double hi = k + 1 == angles.size() ? angles.front() + period : angles[k + 1];
    return {lo, hi};
}

struct Extremum {
    double arg;
    double value;
};

// Scans f over the angles and polishes the maximum (sign = +1) or minimum (sign = -1)
// with Brent's method between the neighbouring samples. Returns {coarse, refined}.
template <class F>
std::pair<Extremum, Extremum> scan_extremum(F&& f, const std::vector<double>& angles, double period, double sign) {
    std::size_t best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < angles.size(); ++k) {
        const double v = sign * f(angles[k]);
        if (v > best_value) {
            best_value = v;
            best = k;
        }
    }
    const Extremum coarse{angles[best], sign * best_value};
    const auto [lo, hi] = neighbours(angles, best, period);
    const auto m = detail::minimize_unimodal([&](double t) { return -sign * f(t); }, lo, hi);
    if (-m.value > best_value) return {coarse, {m.arg, sign * -m.value}};
    return {coarse, coarse};
}

ConjugatePair unit_pair(const NormSpec& spec, const ConjugatePair& p) {
    return {normalize(spec, p.x), normalize(spec, p.y), p.degenerate};
}

}  // namespace

std::string_view to_string(ConstantName name) {
    switch (name) {
        case ConstantName::c_e_pair:
            return "c_E_pair";
        case ConstantName::c_e:
            return "c_E";
        case ConstantName::c_r:
            return "c_R";
        case ConstantName::d:
            return "D";
    }
    return "";
}

ConstantReport c_e_pair(const NormSpec& spec, const ConjugatePair& pair, int grid) {
    require_grid(grid, "c_e_pair");
    if (!is_birkhoff(spec, pair.x, pair.y, 1e-8) || !is_birkhoff(spec, pair.y, pair.x, 1e-8)) {
        throw PreconditionError("c_e_pair: x and y are not conjugate");
    }
    // z and -z give the same sines, so half a turn suffices.
    const auto angles = sample_angles(spec, grid, M_PI);
    auto range = [&](double theta) { return conjugate_range(spec, pair, unit_point(spec, theta)); };
    const auto [sup_coarse, sup] = scan_extremum(range, angles, M_PI, 1.0);
    const auto [inf_coarse, inf] = scan_extremum(range, angles, M_PI, -1.0);

    ConstantReport r;
    r.name = ConstantName::c_e_pair;
    r.value = sup.value - inf.value;
    r.coarse_value = sup_coarse.value - inf_coarse.value;
    r.witness = {unit_point(spec, sup.arg), unit_point(spec, inf.arg)};
    r.grid = grid;
    r.refined = true;
    return r;
}

ConstantReport c_e(const NormSpec& spec, int grid) {
    require_grid(grid, "c_e");
    const auto structure = conjugate_structure(spec);
    std::vector<ConjugatePair> candidates = structure.pairs;
    for (const auto& cone : structure.cones) {
        for (int k = 0; k < kConeRays; ++k) {
            candidates.push_back(unit_pair(spec, cone.at(static_cast<double>(k) / (kConeRays - 1))));
        }
    }
    ConstantReport best;
    best.name = ConstantName::c_e;
    best.value = -1.0;
    best.coarse_value = -1.0;
    for (const auto& p : candidates) {
        const auto r = c_e_pair(spec, p, grid);
        best.coarse_value = std::max(best.coarse_value, r.coarse_value);
        if (r.value > best.value) {
            best.value = r.value;
            best.witness = {p.x, p.y};
        }
    }
    best.grid = grid;
    best.refined = true;
    return best;
}

ConstantReport c_r(const NormSpec& spec, int grid) {
    require_grid(grid, "c_r");
    const auto angles = sample_angles(spec, grid, M_PI);
    const std::size_t n = angles.size();
    std::vector<Vec2> pts(n);
    std::vector<double> inv_anti(n);
    for (std::size_t k = 0; k < n; ++k) {
        pts[k] = unit_point(spec, angles[k]);
        inv_anti[k] = 1.0 / antinorm_value(spec, pts[k]);
    }
    // For unit x, y: |s(x,y) - s(y,x)| = |[x,y]| * |1/‖y‖_a - 1/‖x‖_a|.
    std::size_t bi = 0, bj = 0;
    double coarse = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = std::abs(symplectic(pts[i], pts[j])) * std::abs(inv_anti[j] - inv_anti[i]);
            if (v > coarse) {
                coarse = v;
                bi = i;
                bj = j;
            }
        }
    }
    auto objective = [&](double a, double b) {
        const Vec2 x = unit_point(spec, a);
        const Vec2 y = unit_point(spec, b);
        return std::abs(symplectic(x, y)) * std::abs(1.0 / antinorm_value(spec, y) - 1.0 / antinorm_value(spec, x));
    };

    double a = angles[bi], b = angles[bj];
    double best = coarse;
    double step = M_PI / grid;
    constexpr double kMoves[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (int shrinks = 0; shrinks < kPatternShrinks;) {
        bool moved = false;
        for (const auto& mv : kMoves) {
            const double v = objective(a + mv[0] * step, b + mv[1] * step);
            if (v > best) {
                best = v;
                a += mv[0] * step;
                b += mv[1] * step;
                moved = true;
                break;
            }
        }
        if (!moved) {
            step *= 0.5;
            ++shrinks;
        }
    }

    ConstantReport r;
    r.name = ConstantName::c_r;
    r.value = best;
    r.coarse_value = coarse;
    r.witness = {unit_point(spec, a), unit_point(spec, b)};
    r.grid = grid;
    r.refined = true;
    return r;
}

ConstantReport d_constant(const NormSpec& spec, int grid) {
    require_grid(grid, "d_constant");
    const auto angles = sample_angles(spec, grid, M_PI);
    const int n_phi = std::max(64, grid / 2);
    std::vector<double> vertex_angles;
    for (const Vec2& v : spec.vertices()) vertex_angles.push_back(std::fmod(polar_angle(v), M_PI));

    struct Partner {
        double sine;
        Vec2 y;
    };
    // Isosceles partners y of x(theta) on the half-turn (theta, theta + pi), where
    // gauge(x+y) - gauge(x-y) runs from 2 down to -2; returns the one with the smallest sine.
    auto best_partner = [&](double theta) {
        const Vec2 x = unit_point(spec, theta);
        auto h = [&](double phi) {
            const Vec2 y = unit_point(spec, phi);
            return spec.gauge(x + y) - spec.gauge(x - y);
        };
        std::vector<double> phis;
        phis.reserve(static_cast<std::size_t>(n_phi) + vertex_angles.size());
        for (int k = 1; k < n_phi; ++k) phis.push_back(theta + M_PI * k / n_phi);
        for (double va : vertex_angles) {
            double off = std::fmod(va - theta, M_PI);
            if (off < 0.0) off += M_PI;
            if (off > 1e-12 && off < M_PI - 1e-12) phis.push_back(theta + off);
        }
        std::sort(phis.begin(), phis.end());

        Partner best{std::numeric_limits<double>::infinity(), {}};
        auto consider = [&](double phi) {
            const Vec2 y = unit_point(spec, phi);
            const double s = sine_value(spec, x, y);
            if (s < best.sine) best = {s, y};
        };
        double prev_phi = theta;
        double prev_h = 2.0;
        for (std::size_t k = 0; k <= phis.size(); ++k) {
            const double phi = k < phis.size() ? phis[k] : theta + M_PI;
            const double hv = k < phis.size() ? h(phi) : -2.0;
            if (hv == 0.0) {
                consider(phi);
            } else if (prev_h != 0.0 && (hv < 0.0) != (prev_h < 0.0)) {
                consider(detail::bisect_root(h, prev_phi, phi));
            }
            prev_phi = phi;
            prev_h = hv;
        }
        return best;
    };

    std::size_t best_k = 0;
    Partner best{std::numeric_limits<double>::infinity(), {}};
    for (std::size_t k = 0; k < angles.size(); ++k) {
        const Partner p = best_partner(angles[k]);
        if (p.sine < best.sine) {
            best = p;
            best_k = k;
        }
    }
    const double coarse = best.sine;
    double best_theta = angles[best_k];

    const auto [lo, hi] = neighbours(angles, best_k, M_PI);
    const auto m = detail::minimize_unimodal([&](double t) { return best_partner(t).sine; }, lo, hi);
    if (m.value < best.sine) {
        best_theta = m.arg;
        best = best_partner(m.arg);
    }

    ConstantReport r;
    r.name = ConstantName::d;
    r.value = best.sine;
    r.coarse_value = coarse;
    r.witness = {unit_point(spec, best_theta), best.y};
    r.grid = grid;
    r.refined = true;
    return r;
}

}  // namespace msine
