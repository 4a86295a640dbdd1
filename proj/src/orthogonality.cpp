#include "msine/orthogonality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include "msine/errors.hpp"
#include "numeric.hpp"

namespace msine {

namespace {

constexpr double kParallelEps = 1e-12;
constexpr double kDedupAngle = 1e-6;

bool parallel(Vec2 a, Vec2 b) { return std::abs(euclidean_cross(a, b)) <= kParallelEps; }

void require_nonzero(Vec2 v, const char* where) {
    if (is_zero(v)) throw ZeroVectorError(where);
}

// ---- polygon combinatorics ------------------------------------------------

class Polygon {
public:
    explicit Polygon(std::span<const Vec2> v) : v_(v), m_(v.size()) {}

    std::size_t size() const { return m_; }
    Vec2 vertex(std::size_t i) const { return v_[i % m_]; }
    Vec2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

    // Is the line spanned by u one of the supporting lines at vertex i?
    bool in_vertex_cone(std::size_t i, Vec2 u) const {
        const Vec2 lo = edge(i + m_ - 1);
        const Vec2 hi = edge(i);
        for (const Vec2 s : {u, -u}) {
            if (euclidean_cross(lo, s) >= -kParallelEps && euclidean_cross(s, hi) >= -kParallelEps) return true;
        }
        return false;
    }

    struct Feature {
        bool is_vertex;
        std::size_t index;
        bool operator==(const Feature&) const = default;
    };

    // Vertex or open edge hit by the ray from the origin in direction dir.
    Feature locate(Vec2 dir) const {
        for (std::size_t i = 0; i < m_; ++i) {
            if (parallel(v_[i], dir) && dot(v_[i], dir) > 0.0) return {true, i};
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (symplectic(vertex(i), dir) > 0.0 && symplectic(dir, vertex(i + 1)) > 0.0) return {false, i};
        }
        return {true, 0};  // unreachable for a valid cycle
    }

    // Parameter range s in [0, 1] where the line through the origin and a + s*d is a
    // supporting line at vertex k. The edge direction d is never inside that cone, so the
    // preimage of the cone under the monotone sweep s -> direction(a + s*d) is one interval.
    std::optional<std::array<double, 2>> segment_in_cone(Vec2 a, Vec2 d, std::size_t k) const {
        double bounds[2];
        int n = 0;
        for (const Vec2 c : {edge(k + m_ - 1), edge(k)}) {
            const double den = symplectic(d, c);
            if (den == 0.0) return std::nullopt;
            bounds[n++] = -symplectic(a, c) / den;
        }
        const double lo = std::max(0.0, std::min(bounds[0], bounds[1]));
        const double hi = std::min(1.0, std::max(bounds[0], bounds[1]));
        if (lo > hi + 1e-12) return std::nullopt;
        if (!in_vertex_cone(k, a + (0.5 * (lo + hi)) * d)) return std::nullopt;
        return std::array<double, 2>{lo, std::max(lo, hi)};
    }

private:
    std::span<const Vec2> v_;
    std::size_t m_;
};

// ---- canonical form and deduplication ---------------------------------------

ConjugatePair canonical(ConjugatePair p) {
    const double scale = euclidean_length(p.x);
    const bool lower = p.x.x2 < -kParallelEps * scale || (std::abs(p.x.x2) <= kParallelEps * scale && p.x.x1 < 0.0);
    if (lower) {
        p.x = -p.x;
        p.y = -p.y;
    }
    return p;
}

double line_angle(Vec2 v) { return std::fmod(polar_angle(v), M_PI); }

double line_distance(double a, double b) {
    const double d = std::abs(a - b);
    return std::min(d, M_PI - d);
}

bool same_lines(const ConjugatePair& a, const ConjugatePair& b) {
    const double ax = line_angle(a.x), ay = line_angle(a.y);
    const double bx = line_angle(b.x), by = line_angle(b.y);
    return (line_distance(ax, bx) <= kDedupAngle && line_distance(ay, by) <= kDedupAngle) ||
           (line_distance(ax, by) <= kDedupAngle && line_distance(ay, bx) <= kDedupAngle);
}

std::vector<ConjugatePair> dedup(std::vector<ConjugatePair> raw) {
    for (auto& p : raw) p = canonical(p);
    std::stable_sort(raw.begin(), raw.end(), [](const ConjugatePair& a, const ConjugatePair& b) {
        return polar_angle(a.x) < polar_angle(b.x);
    });
    std::vector<ConjugatePair> out;
    for (const auto& p : raw) {
        auto it = std::find_if(out.begin(), out.end(), [&](const ConjugatePair& q) { return same_lines(p, q); });
        if (it == out.end()) {
            out.push_back(p);
        } else {
            it->degenerate = it->degenerate || p.degenerate;
        }
    }
    return out;
}

ConjugateStructure polygon_conjugates(const NormSpec& spec) {
    const Polygon poly(spec.vertices());
    const std::size_t m = poly.size();
    std::vector<ConjugatePair> raw;
    std::vector<ConjugateCone> cones;

    auto add_cone = [&](Vec2 xa, Vec2 xb, Vec2 ya, Vec2 yb) {
        raw.push_back({xa, ya, true});
        raw.push_back({xb, yb, true});
        cones.push_back({xa, xb, ya, yb});
    };

    for (std::size_t i = 0; i < m / 2; ++i) {
        const Vec2 vi = poly.vertex(i);

        // x at vertex i, y at a vertex.
        for (std::size_t j = 0; j < m; ++j) {
            const Vec2 vj = poly.vertex(j);
            if (euclidean_cross(vi, vj) > kParallelEps && poly.in_vertex_cone(i, vj) && poly.in_vertex_cone(j, vi)) {
                raw.push_back({vi, vj, true});
            }
        }
        // x at vertex i, y sliding along an edge parallel to x.
        for (std::size_t j = 0; j < m; ++j) {
            const Vec2 dj = poly.edge(j);
            if (!parallel(dj, vi) || euclidean_cross(vi, poly.vertex(j)) <= 0.0) continue;
            if (auto seg = poly.segment_in_cone(poly.vertex(j), dj, i)) {
                const Vec2 ya = poly.vertex(j) + (*seg)[0] * dj;
                const Vec2 yb = poly.vertex(j) + (*seg)[1] * dj;
                if ((*seg)[1] - (*seg)[0] > 1e-12) {
                    add_cone(vi, vi, ya, yb);
                } else {
                    raw.push_back({vi, ya, true});
                }
            }
        }

        // x inside edge i: y must point along the edge.
        const Vec2 di = poly.edge(i);
        const auto hit = poly.locate(di);
        if (!hit.is_vertex) {
            const Vec2 y = normalize(spec, di);
            const Vec2 dj = poly.edge(hit.index);
            for (const Vec2 c : {dj, -dj}) {
                const auto back = poly.locate(c);
                if (!back.is_vertex && back.index == i) raw.push_back({normalize(spec, c), y, false});
            }
        } else {
            const Vec2 y = poly.vertex(hit.index);
            if (auto seg = poly.segment_in_cone(vi, di, hit.index)) {
                const Vec2 xa = vi + (*seg)[0] * di;
                const Vec2 xb = vi + (*seg)[1] * di;
                if ((*seg)[1] - (*seg)[0] > 1e-12) {
                    add_cone(xa, xb, y, y);
                } else {
                    raw.push_back({xa, y, true});
                }
            }
        }
    }

    ConjugateStructure out;
    out.pairs = dedup(std::move(raw));
    for (const auto& c : cones) {
        const bool seen = std::any_of(out.cones.begin(), out.cones.end(), [&](const ConjugateCone& d) {
            const auto c0 = canonical(c.at(0)), c1 = canonical(c.at(1));
            const auto d0 = canonical(d.at(0)), d1 = canonical(d.at(1));
            return (same_lines(c0, d0) && same_lines(c1, d1)) || (same_lines(c0, d1) && same_lines(c1, d0));
        });
        if (!seen) out.cones.push_back(c);
    }
    return out;
}

// Signed reverse defect: zero exactly when x ⊣_B w(x) for the antinorm witness w(x) ⊣_B x.
double reverse_defect(const NormSpec& spec, double theta) {
    const Vec2 x = unit_point(spec, theta);
    const Vec2 w = antinorm(spec, x).witness;
    const Vec2 ww = antinorm(spec, w).witness;
    return euclidean_cross(x, ww);
}

ConjugateStructure scanned_conjugates(const NormSpec& spec, int n_scan) {
    constexpr double kZero = 1e-13;
    std::vector<double> roots;
    std::vector<double> r(static_cast<std::size_t>(n_scan) + 1);
    for (int k = 0; k <= n_scan; ++k) r[k] = reverse_defect(spec, M_PI * k / n_scan);
    for (int k = 0; k <= n_scan; ++k) {
        const double tk = M_PI * k / n_scan;
        if (std::abs(r[k]) <= kZero) {
            roots.push_back(tk);
        } else if (k < n_scan && std::abs(r[k + 1]) > kZero && (r[k] < 0.0) != (r[k + 1] < 0.0)) {
            roots.push_back(detail::bisect_root([&](double t) { return reverse_defect(spec, t); }, tk,
                                                M_PI * (k + 1) / n_scan));
        }
    }
    std::vector<ConjugatePair> raw;
    for (double t : roots) {
        const Vec2 x = unit_point(spec, t);
        const Vec2 y = antinorm(spec, x).witness;
        if (is_birkhoff(spec, x, y, 1e-8) && is_birkhoff(spec, y, x, 1e-8)) raw.push_back({x, y, false});
    }
    return {dedup(std::move(raw)), {}};
}

}  // namespace

BirkhoffDefect birkhoff_defect(const NormSpec& spec, Vec2 x, Vec2 y) {
    require_nonzero(x, "birkhoff_defect");
    require_nonzero(y, "birkhoff_defect");
    auto f = [&](double t) { return spec.gauge(x + t * y); };
    if (parallel(x, y)) {
        const double t = -dot(x, y) / dot(y, y);
        return {t, f(t)};
    }
    BirkhoffDefect best{0.0, f(0.0)};
    auto consider = [&](double t) {
        const double v = f(t);
        if (v < best.min_value || (v == best.min_value && std::abs(t) < std::abs(best.t_star))) best = {t, v};
    };
    if (spec.is_polyhedral()) {
        // Piecewise linear and coercive: the minimum sits where x + t*y crosses a vertex ray.
        for (const Vec2& v : spec.vertices()) {
            const double den = symplectic(y, v);
            if (den != 0.0) consider(-symplectic(x, v) / den);
        }
        return best;
    }
    // gauge(x + t*y) > gauge(x) once |t| > 2 gauge(x) / gauge(y).
    const double reach = 2.0 * spec.gauge(x) / spec.gauge(y);
    const auto m = detail::minimize_unimodal(f, -reach, reach);
    consider(m.arg);
    return best;
}

bool is_birkhoff(const NormSpec& spec, Vec2 x, Vec2 y, double tol) {
    require_nonzero(x, "is_birkhoff");
    require_nonzero(y, "is_birkhoff");
    return birkhoff_defect(spec, normalize(spec, x), normalize(spec, y)).min_value >= 1.0 - tol;
}

OneSidedSlopes gauge_slopes(const NormSpec& spec, Vec2 u, Vec2 v) {
    require_nonzero(u, "gauge_slopes");
    if (spec.is_polyhedral()) {
        const double g = spec.gauge(u);
        OneSidedSlopes s{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
        for (const Vec2& n : spec.edge_functionals()) {
            if (dot(n, u) >= g * (1.0 - 1e-12)) {
                s.left = std::min(s.left, dot(n, v));
                s.right = std::max(s.right, dot(n, v));
            }
        }
        return s;
    }
    if (spec.kind() == NormKind::euclidean) {
        const double d = dot(u, v) / euclidean_length(u);
        return {d, d};
    }
    const double p = spec.p();
    const double g = spec.gauge(u);
    auto grad = [&](double ui) { return (ui < 0.0 ? -1.0 : 1.0) * std::pow(std::abs(ui) / g, p - 1.0); };
    const double d = grad(u.x1) * v.x1 + grad(u.x2) * v.x2;
    return {d, d};
}

bool is_isosceles(const NormSpec& spec, Vec2 x, Vec2 y, double tol) {
    require_nonzero(x, "is_isosceles");
    require_nonzero(y, "is_isosceles");
    return std::abs(spec.gauge(x + y) - spec.gauge(x - y)) <= tol;
}

bool is_roberts(const NormSpec& spec, Vec2 x, Vec2 y, double tol) {
    require_nonzero(x, "is_roberts");
    require_nonzero(y, "is_roberts");
    const Vec2 ux = normalize(spec, x);
    const Vec2 uy = normalize(spec, y);
    auto holds = [&](double t) {
        return std::abs(spec.gauge(ux + t * uy) - spec.gauge(ux - t * uy)) <= tol * std::max(1.0, t);
    };
    if (!holds(1.0)) return false;
    for (int k = 0; k < 64; ++k) {
        if (!holds(std::pow(10.0, -3.0 + 6.0 * k / 63.0))) return false;
    }
    if (spec.is_polyhedral()) {
        for (const Vec2& v : spec.vertices()) {
            const double den = symplectic(uy, v);
            if (den == 0.0) continue;
            const double t = std::abs(symplectic(ux, v) / den);
            if (t > 0.0 && std::isfinite(t) && !holds(t)) return false;
        }
    }
    return true;
}

ConjugateStructure conjugate_structure(const NormSpec& spec, int n_scan) {
    if (n_scan < 64) throw PreconditionError("conjugate_pairs: n_scan must be >= 64");
    ConjugateStructure s = spec.is_polyhedral() ? polygon_conjugates(spec) : scanned_conjugates(spec, n_scan);
    if (s.pairs.empty()) throw AccuracyError("conjugate_pairs: no conjugate pair located");
    return s;
}

std::vector<ConjugatePair> conjugate_pairs(const NormSpec& spec, int n_scan) {
    return conjugate_structure(spec, n_scan).pairs;
}

double benitez_alpha(const NormSpec& spec, Vec2 x, Vec2 y) {
    require_nonzero(x, "benitez_alpha");
    require_nonzero(y, "benitez_alpha");
    if (parallel(x, y)) throw PreconditionError("benitez_alpha: x and y must be linearly independent");

    // Positive while (x + a y) is not yet Birkhoff orthogonal to (x - a y) from below, negative after.
    auto signed_defect = [&](double a) {
        const auto s = gauge_slopes(spec, x + a * y, x - a * y);
        if (s.right < 0.0) return s.right;
        if (s.left > 0.0) return s.left;
        return 0.0;
    };
    double lo = 1e-9;
    double hi = 1e9;
    for (int i = 0; i < 20 && signed_defect(lo) < 0.0; ++i) lo *= 1e-3;
    for (int i = 0; i < 20 && signed_defect(hi) > 0.0; ++i) hi *= 1e3;
    if (signed_defect(lo) < 0.0 || signed_defect(hi) > 0.0) {
        throw AccuracyError("benitez_alpha: failed to bracket the root");
    }
    const double log_root = detail::bisect_root(
        [&](double la) { return signed_defect(std::exp(la)); }, std::log(lo), std::log(hi));
    return std::exp(log_root);
}

double diagonal_homotopy(const NormSpec& spec, Vec2 v, Vec2 w, double lambda) {
    const Vec2 a = (1.0 - lambda) * v + lambda * w;
    const Vec2 b = (1.0 - lambda) * w - lambda * v;
    return benitez_alpha(spec, normalize(spec, a), normalize(spec, b));
}

OrthogonalDiagonals find_orthogonal_diagonals(const NormSpec& spec, Vec2 v, Vec2 w) {
    if (!is_radon(spec).is_radon) throw PreconditionError("find_orthogonal_diagonals: the plane is not Radon");
    require_nonzero(v, "find_orthogonal_diagonals");
    require_nonzero(w, "find_orthogonal_diagonals");
    if (parallel(v, w)) throw PreconditionError("find_orthogonal_diagonals: seeds must have different directions");
    v = normalize(spec, v);
    w = normalize(spec, w);

    // log f(0) = -log f(1) on a Radon plane, so log f changes sign on [0, 1].
    auto log_f = [&](double l) { return std::log(diagonal_homotopy(spec, v, w, l)); };
    const double lambda = detail::bisect_root(log_f, 0.0, 1.0, 80);

    OrthogonalDiagonals out;
    out.lambda = lambda;
    out.x = normalize(spec, (1.0 - lambda) * v + lambda * w);
    out.y = normalize(spec, (1.0 - lambda) * w - lambda * v);
    out.alpha = benitez_alpha(spec, out.x, out.y);
    return out;
}

OrthogonalDiagonals find_orthogonal_diagonals(const NormSpec& spec) {
    return find_orthogonal_diagonals(spec, unit_point(spec, 0.0), unit_point(spec, 0.5 * M_PI));
}

}  // namespace msine
