#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "msine/norm.hpp"

namespace msine {

enum class Command {
    sine,
    antinorm,
    birkhoff,
    isosceles,
    roberts,
    conjugates,
    alpha,
    radon,
    constants,
    bisect,
    lawsines,
    conformal,
    emit_circle,
    reproduce,
};

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view name);

/// Malformed config text. what() starts with "line N: " when a line is to blame.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    NormSpec norm = NormSpec::euclidean();
    Command command = Command::sine;
    /// Command parameters keyed by lower-case name (x, y, grid, tol, seed, ...), raw text values.
    std::map<std::string, std::string> params;
    /// Output path; empty means standard output.
    std::string output;
};

/**
 * Parses the line-oriented config format:
 *
 *     [norm]
 *     kind = polygon            # euclidean | lp | polygon
 *     vertices = 1,0; 0.5,0.8660254; -0.5,0.8660254
 *     [run]
 *     command = sine
 *     x = 1,0
 *     y = 1,1
 *
 * Keys and the values of kind and command are case-insensitive; `#` starts a comment;
 * a repeated key overrides the earlier one. p accepts inf, infinity or ∞.
 */
RunConfig parse_config(std::string_view text);

/// Config text that parse_config turns back into an equivalent RunConfig.
std::string serialize(const RunConfig& config);

/// Parameter accessors; each throws ConfigError naming the key on malformed input.
Vec2 param_vec(const RunConfig& c, const std::string& key);
std::optional<Vec2> param_vec_opt(const RunConfig& c, const std::string& key);
double param_real(const RunConfig& c, const std::string& key, double fallback);
long long param_int(const RunConfig& c, const std::string& key, long long fallback);
bool param_bool(const RunConfig& c, const std::string& key, bool fallback);
/// Lower-cased text value.
std::string param_text(const RunConfig& c, const std::string& key, const std::string& fallback);
/// Four reals "a,b,c,d".
std::optional<std::array<double, 4>> param_matrix(const RunConfig& c, const std::string& key);

}  // namespace msine
