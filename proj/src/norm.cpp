#include "msine/norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "msine/errors.hpp"

namespace msine {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Relative threshold for "same direction" and "collinear" during canonicalization.
constexpr double kShapeEps = 1e-12;

double sign_or_one(double v) { return v < 0.0 ? -1.0 : 1.0; }

// (|a|^p + |b|^p)^(1/p), scaled against overflow and underflow.
double power_mean_norm(double a, double b, double p) {
    a = std::abs(a);
    b = std::abs(b);
    const double m = std::max(a, b);
    if (m == 0.0) return 0.0;
    if (std::isinf(p)) return m;
    if (p == 1.0) return a + b;
    if (p == 2.0) return std::hypot(a, b);
    return m * std::pow(std::pow(a / m, p) + std::pow(b / m, p), 1.0 / p);
}

double dual_exponent(double p) {
    if (p == 1.0) return kInf;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

std::vector<Vec2> canonical_cycle(std::span<const Vec2> half) {
    std::vector<Vec2> pts;
    pts.reserve(2 * half.size());
    for (const Vec2& v : half) {
        if (!is_finite(v)) throw InvalidNormError("polygon vertex is not finite");
        if (is_zero(v)) throw InvalidNormError("polygon vertex at the origin: the origin must be interior");
        pts.push_back(v);
        pts.push_back(-v);
    }
    std::sort(pts.begin(), pts.end(),
              [](Vec2 a, Vec2 b) { return polar_angle(a) < polar_angle(b); });

    // Points on a common ray: identical ones merge, otherwise the inner one is not extreme.
    std::vector<Vec2> cycle;
    for (const Vec2& v : pts) {
        if (!cycle.empty()) {
            const Vec2 last = cycle.back();
            if (std::abs(euclidean_cross(last, v)) <= kShapeEps && dot(last, v) > 0.0) {
                const double la = euclidean_length(last);
                const double lb = euclidean_length(v);
                if (std::abs(la - lb) <= kShapeEps * std::max(la, lb)) continue;
                throw InvalidNormError("polygon is not convex: two vertices lie on one ray from the origin");
            }
        }
        cycle.push_back(v);
    }
    if (cycle.size() > 1 && std::abs(euclidean_cross(cycle.back(), cycle.front())) <= kShapeEps &&
        dot(cycle.back(), cycle.front()) > 0.0) {
        cycle.pop_back();
    }
    if (cycle.size() < 4) throw InvalidNormError("polygon needs at least two distinct non-antipodal half-vertices");

    // Drop collinear middle vertices; reject reflex turns.
    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t m = cycle.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Vec2 a = cycle[(i + m - 1) % m];
            const Vec2 b = cycle[i];
            const Vec2 c = cycle[(i + 1) % m];
            const Vec2 ab = b - a;
            const Vec2 bc = c - b;
            const double turn = symplectic(ab, bc);
            const double scale = euclidean_length(ab) * euclidean_length(bc);
            if (std::abs(turn) <= kShapeEps * scale) {
                cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            if (turn < 0.0) throw InvalidNormError("polygon is not convex");
        }
        if (cycle.size() < 4) throw InvalidNormError("polygon has zero area");
    }
    return cycle;
}

}  // namespace

NormSpec NormSpec::euclidean() {
    NormSpec s;
    s.kind_ = NormKind::euclidean;
    s.p_ = 2.0;
    return s;
}

NormSpec NormSpec::lp(double p) {
    if (std::isnan(p) || p < 1.0) throw InvalidNormError("p must be >= 1");
    NormSpec s;
    s.kind_ = NormKind::lp;
    s.p_ = p;
    if (p == 1.0) {
        s.set_vertices({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    } else if (std::isinf(p)) {
        s.set_vertices({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    }
    return s;
}

NormSpec NormSpec::polygon(std::span<const Vec2> half_vertices) {
    NormSpec s;
    s.kind_ = NormKind::polygon;
    s.p_ = 0.0;
    s.set_vertices(canonical_cycle(half_vertices));
    return s;
}

NormSpec regular_polygon(int n) {
    if (n < 4 || n % 2 != 0) throw InvalidNormError("regular_polygon: n must be even and >= 4");
    std::vector<Vec2> half;
    for (int k = 0; k < n / 2; ++k) {
        const double a = 2.0 * M_PI * k / n;
        half.push_back({std::cos(a), std::sin(a)});
    }
    return NormSpec::polygon(half);
}

void NormSpec::set_vertices(std::vector<Vec2> full_cycle) {
    vertices_ = std::move(full_cycle);
    functionals_.clear();
    const std::size_t m = vertices_.size();
    functionals_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2 a = vertices_[i];
        const Vec2 b = vertices_[(i + 1) % m];
        const double det = symplectic(a, b);
        functionals_.push_back(Vec2{b.x2 - a.x2, a.x1 - b.x1} / det);
    }
}

double NormSpec::gauge(Vec2 x) const {
    switch (kind_) {
        case NormKind::euclidean:
            return std::hypot(x.x1, x.x2);
        case NormKind::lp:
            return power_mean_norm(x.x1, x.x2, p_);
        case NormKind::polygon: {
            double g = 0.0;
            for (const Vec2& n : functionals_) g = std::max(g, dot(n, x));
            return g;
        }
    }
    return 0.0;
}

std::string NormSpec::describe() const {
    switch (kind_) {
        case NormKind::euclidean:
            return "euclidean";
        case NormKind::lp:
            return std::isinf(p_) ? std::string("lp(p=inf)") : "lp(p=" + std::to_string(p_) + ")";
        case NormKind::polygon:
            return "polygon(" + std::to_string(vertices_.size()) + " vertices)";
    }
    return {};
}

Vec2 normalize(const NormSpec& spec, Vec2 x) {
    if (is_zero(x)) throw ZeroVectorError("normalize");
    return x / spec.gauge(x);
}

Vec2 unit_point(const NormSpec& spec, double theta) {
    const Vec2 d{std::cos(theta), std::sin(theta)};
    return d / spec.gauge(d);
}

AntinormValue antinorm(const NormSpec& spec, Vec2 x) {
    if (is_zero(x)) throw ZeroVectorError("antinorm");
    if (spec.is_polyhedral()) {
        AntinormValue best;
        for (const Vec2& v : spec.vertices()) {
            const double c = symplectic(x, v);
            if (std::abs(c) > best.value) {
                best.value = std::abs(c);
                best.witness = c > 0.0 ? v : -v;
            }
        }
        return best;
    }
    const Vec2 u = quarter_turn(x);
    if (spec.kind() == NormKind::euclidean) {
        const double len = euclidean_length(u);
        return {len, u / len};
    }
    // Dual norm of the quarter turn, attained at the Hoelder equality case.
    const double q = dual_exponent(spec.p());
    const double value = power_mean_norm(u.x1, u.x2, q);
    auto component = [&](double ui) {
        return sign_or_one(ui) * std::pow(std::abs(ui) / value, q - 1.0);
    };
    const Vec2 w{component(u.x1), component(u.x2)};
    return {value, w / spec.gauge(w)};
}

double antinorm_value(const NormSpec& spec, Vec2 x) {
    if (is_zero(x)) return 0.0;
    if (spec.is_polyhedral()) {
        double best = 0.0;
        for (const Vec2& v : spec.vertices()) best = std::max(best, std::abs(symplectic(x, v)));
        return best;
    }
    const Vec2 u = quarter_turn(x);
    if (spec.kind() == NormKind::euclidean) return euclidean_length(u);
    return power_mean_norm(u.x1, u.x2, dual_exponent(spec.p()));
}

NormSpec antinorm_spec(const NormSpec& spec) {
    switch (spec.kind()) {
        case NormKind::euclidean:
            return NormSpec::euclidean();
        case NormKind::lp:
            return NormSpec::lp(dual_exponent(spec.p()));
        case NormKind::polygon: {
            std::vector<Vec2> rotated;
            for (const Vec2& n : spec.edge_functionals()) rotated.push_back(quarter_turn(n));
            return NormSpec::polygon(rotated);
        }
    }
    return spec;
}

RadonReport is_radon(const NormSpec& spec, int n_samples, double tol) {
    if (n_samples < 8) throw PreconditionError("is_radon: n_samples must be >= 8");
    double lo = kInf;
    double hi = 0.0;
    for (double theta : sample_angles(spec, n_samples, 2.0 * M_PI)) {
        const Vec2 d{std::cos(theta), std::sin(theta)};
        const double ratio = antinorm_value(spec, d) / spec.gauge(d);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    RadonReport r;
    r.lambda = 0.5 * (lo + hi);
    r.spread = hi - lo;
    r.is_radon = r.spread <= tol;
    return r;
}

std::vector<Vec2> emit_circle(const NormSpec& spec, CircleKind which, int n) {
    if (n < 3) throw PreconditionError("emit_circle: n must be >= 3");
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * M_PI * k / n;
        const Vec2 d{std::cos(theta), std::sin(theta)};
        const double scale = which == CircleKind::unit ? spec.gauge(d) : antinorm_value(spec, d);
        out.push_back(d / scale);
    }
    return out;
}

std::vector<double> sample_angles(const NormSpec& spec, int grid, double period) {
    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(grid) + 2 * spec.vertices().size());
    for (int k = 0; k < grid; ++k) angles.push_back(period * k / grid);
    const auto vs = spec.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vec2 mid = 0.5 * (vs[i] + vs[(i + 1) % vs.size()]);
        angles.push_back(std::fmod(polar_angle(vs[i]), period));
        angles.push_back(std::fmod(polar_angle(mid), period));
    }
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(),
                             [](double a, double b) { return std::abs(a - b) <= 1e-15; }),
                 angles.end());
    return angles;
}

}  // namespace msine
