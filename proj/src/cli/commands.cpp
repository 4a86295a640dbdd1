#include <fmt/format.h>

#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "msine/constants.hpp"
#include "msine/orthogonality.hpp"
#include "msine/reproduce.hpp"
#include "msine/run.hpp"
#include "msine/sine.hpp"
#include "msine/trig.hpp"

namespace msine {

namespace {

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // prints -0 as 0
    return fmt::format("{:.12g}", v);
}

std::string vec(Vec2 v) { return num(v.x1) + "," + num(v.x2); }

std::string boolean(bool b) { return b ? "true" : "false"; }

std::string_view method_name(SineMethod m) { return m == SineMethod::direct ? "direct" : "antinorm-formula"; }

int int_param(const RunConfig& c, const std::string& key, int fallback) {
    const long long v = param_int(c, key, fallback);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw ConfigError(fmt::format("parameter {} is out of range", key));
    }
    return static_cast<int>(v);
}

void write_constant(std::ostream& out, const ConstantReport& r) {
    std::string row = fmt::format("{},{}", to_string(r.name), num(r.value));
    for (std::size_t k = 0; k < 3; ++k) row += k < r.witness.size() ? "," + vec(r.witness[k]) : ",,";
    row += fmt::format(",{},{}", r.grid, boolean(r.refined));
    out << row << '\n';
}

void emit_circle_command(const RunConfig& c, std::ostream& out) {
    const std::string which = param_text(c, "which", "unit");
    CircleKind kind;
    if (which == "unit") {
        kind = CircleKind::unit;
    } else if (which == "anticircle" || which == "anti") {
        kind = CircleKind::anticircle;
    } else {
        throw ConfigError("parameter which must be unit or anticircle");
    }
    const auto pts = emit_circle(c.norm, kind, int_param(c, "n", 256));
    if (param_bool(c, "svg", false)) {
        std::string points;
        for (const Vec2& p : pts) points += vec(p) + " ";
        points += vec(pts.front());
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-2 -2 4 4\">\n"
            << "<polyline points=\"" << points
            << "\" transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\"0.01\"/>\n"
            << "</svg>\n";
        return;
    }
    out << "x,y\n";
    for (const Vec2& p : pts) out << vec(p) << '\n';
}

void constants_command(const RunConfig& c, std::ostream& out) {
    const std::string which = param_text(c, "which", "all");
    const bool all = which == "all";
    if (!all && which != "c_e" && which != "c_r" && which != "d" && which != "c_e_pair") {
        throw ConfigError("parameter which must be all, c_e, c_e_pair, c_r or d");
    }
    auto grid = [&](int fallback) { return int_param(c, "grid", fallback); };
    out << "name,value,w1x,w1y,w2x,w2y,w3x,w3y,grid,refined\n";
    if (which == "c_e_pair") {
        const ConjugatePair pair{normalize(c.norm, param_vec(c, "x")), normalize(c.norm, param_vec(c, "y")), false};
        write_constant(out, c_e_pair(c.norm, pair, grid(1024)));
        return;
    }
    if (all || which == "c_e") write_constant(out, c_e(c.norm, grid(1024)));
    if (all || which == "c_r") write_constant(out, c_r(c.norm, grid(512)));
    if (all || which == "d") write_constant(out, d_constant(c.norm, grid(1024)));
}

int reproduce_command(std::ostream& out) {
    bool ok = true;
    run_all_criteria([&](const CriterionResult& r) {
        out << format_result(r) << '\n' << std::flush;
        ok = ok && r.passed;
    });
    return ok ? kExitOk : kExitReproductionFailure;
}

int dispatch(const RunConfig& c, std::ostream& out) {
    const NormSpec& n = c.norm;
    const double tol = param_real(c, "tol", kDefaultTol);
    switch (c.command) {
        case Command::sine: {
            const Vec2 x = param_vec(c, "x"), y = param_vec(c, "y");
            const std::string method = param_text(c, "method", "formula");
            SineValue s;
            if (method == "formula") {
                s = sine(n, x, y);
            } else if (method == "direct") {
                s = sine_direct(n, x, y);
            } else if (method == "antinorm") {
                s = sine_antinorm(n, x, y);
            } else {
                throw ConfigError("parameter method must be formula, direct or antinorm");
            }
            out << "value,t_star,method\n" << num(s.value) << ',' << num(s.t_star) << ',' << method_name(s.method) << '\n';
            return kExitOk;
        }
        case Command::antinorm: {
            const auto a = antinorm(n, param_vec(c, "x"));
            out << "value,witness_x,witness_y\n" << num(a.value) << ',' << vec(a.witness) << '\n';
            return kExitOk;
        }
        case Command::birkhoff: {
            const Vec2 x = param_vec(c, "x"), y = param_vec(c, "y");
            const auto d = birkhoff_defect(n, x, y);
            out << "t_star,min_value,gauge_x,birkhoff\n"
                << num(d.t_star) << ',' << num(d.min_value) << ',' << num(n.gauge(x)) << ','
                << boolean(is_birkhoff(n, x, y, tol)) << '\n';
            return kExitOk;
        }
        case Command::isosceles: {
            const Vec2 x = param_vec(c, "x"), y = param_vec(c, "y");
            out << "gauge_sum,gauge_difference,isosceles\n"
                << num(n.gauge(x + y)) << ',' << num(n.gauge(x - y)) << ',' << boolean(is_isosceles(n, x, y, tol)) << '\n';
            return kExitOk;
        }
        case Command::roberts:
            out << "roberts\n" << boolean(is_roberts(n, param_vec(c, "x"), param_vec(c, "y"), tol)) << '\n';
            return kExitOk;
        case Command::conjugates:
            out << "x1,x2,y1,y2,degenerate\n";
            for (const auto& p : conjugate_pairs(n, int_param(c, "n", 256))) {
                out << vec(p.x) << ',' << vec(p.y) << ',' << boolean(p.degenerate) << '\n';
            }
            return kExitOk;
        case Command::alpha:
            out << "alpha\n" << num(benitez_alpha(n, param_vec(c, "x"), param_vec(c, "y"))) << '\n';
            return kExitOk;
        case Command::radon: {
            const auto r = is_radon(n, int_param(c, "n", 1024), tol);
            out << "name,is_radon,lambda,spread\n"
                << "radon," << boolean(r.is_radon) << ',' << num(r.lambda) << ',' << num(r.spread) << '\n';
            return kExitOk;
        }
        case Command::constants:
            constants_command(c, out);
            return kExitOk;
        case Command::bisect: {
            const Vec2 x = param_vec(c, "x"), y = param_vec(c, "y");
            out << "kind,x,y\n"
                << "busemann," << vec(busemann_bisector(n, x, y)) << '\n'
                << "glogovskii," << vec(glogovskii_bisector(n, x, y)) << '\n';
            return kExitOk;
        }
        case Command::lawsines: {
            const auto r = law_of_sines(n, {param_vec(c, "a"), param_vec(c, "b"), param_vec(c, "c")});
            out << "r1,r2,r3,max_spread,weak_abc,weak_bca,weak_cab\n"
                << num(r.r1) << ',' << num(r.r2) << ',' << num(r.r3) << ',' << num(r.max_spread) << ','
                << num(r.weak_spread[0]) << ',' << num(r.weak_spread[1]) << ',' << num(r.weak_spread[2]) << '\n';
            return kExitOk;
        }
        case Command::conformal: {
            const int samples = int_param(c, "n", 1000);
            const auto seed = static_cast<std::uint64_t>(param_int(c, "seed", 0));
            if (const auto m = param_matrix(c, "map")) {
                const LinearMap2 f{(*m)[0], (*m)[1], (*m)[2], (*m)[3]};
                const double defect = sine_conformal_defect(n, f, samples, seed);
                out << "conformal,max_defect\n" << boolean(defect <= tol) << ',' << num(defect) << '\n';
                return kExitOk;
            }
            const auto r = reflection_roberts_check(n, param_vec(c, "x"), param_vec(c, "y"), samples, tol, seed);
            out << "conformal,roberts\n" << boolean(r.conformal) << ',' << boolean(r.roberts) << '\n';
            return kExitOk;
        }
        case Command::emit_circle:
            emit_circle_command(c, out);
            return kExitOk;
        case Command::reproduce:
            return reproduce_command(out);
    }
    return kExitInputError;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.output.empty()) return dispatch(config, out);
        std::ofstream file(config.output);
        if (!file) {
            err << "error: cannot open " << config.output << " for writing\n";
            return kExitInputError;
        }
        return dispatch(config, file);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace msine
