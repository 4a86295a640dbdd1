#include "msine/config.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <vector>

#include "msine/errors.hpp"

namespace msine {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 14> kCommands{{
    {Command::sine, "sine"},
    {Command::antinorm, "antinorm"},
    {Command::birkhoff, "birkhoff"},
    {Command::isosceles, "isosceles"},
    {Command::roberts, "roberts"},
    {Command::conjugates, "conjugates"},
    {Command::alpha, "alpha"},
    {Command::radon, "radon"},
    {Command::constants, "constants"},
    {Command::bisect, "bisect"},
    {Command::lawsines, "lawsines"},
    {Command::conformal, "conformal"},
    {Command::emit_circle, "emit-circle"},
    {Command::reproduce, "reproduce"},
}};

enum class ValueType { vec, integer, real, boolean, text, matrix };

const std::map<std::string, ValueType, std::less<>> kParamTypes{
    {"x", ValueType::vec},        {"y", ValueType::vec},       {"z", ValueType::vec},
    {"a", ValueType::vec},        {"b", ValueType::vec},       {"c", ValueType::vec},
    {"d", ValueType::vec},        {"grid", ValueType::integer}, {"n", ValueType::integer},
    {"seed", ValueType::integer}, {"tol", ValueType::real},    {"eps", ValueType::real},
    {"svg", ValueType::boolean},  {"which", ValueType::text},  {"method", ValueType::text},
    {"map", ValueType::matrix},
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::optional<double> parse_real(std::string_view raw) {
    const std::string s = lower(trim(raw));
    if (s == "inf" || s == "+inf" || s == "infinity" || s == "+infinity" || s == "∞") {
        return std::numeric_limits<double>::infinity();
    }
    if (s == "-inf" || s == "-infinity" || s == "-∞") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    if (!s.empty() && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || s.empty() || std::isnan(v)) return std::nullopt;
    return v;
}

std::optional<long long> parse_integer(std::string_view raw) {
    const std::string s = trim(raw);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::optional<bool> parse_bool(std::string_view raw) {
    const std::string s = lower(trim(raw));
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    return std::nullopt;
}

std::optional<std::vector<double>> parse_reals(std::string_view raw, std::size_t count) {
    const auto parts = split(raw, ',');
    if (parts.size() != count) return std::nullopt;
    std::vector<double> out;
    for (const auto& p : parts) {
        const auto v = parse_real(p);
        if (!v || !std::isfinite(*v)) return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

std::optional<Vec2> parse_vec(std::string_view raw) {
    const auto v = parse_reals(raw, 2);
    if (!v) return std::nullopt;
    return Vec2{(*v)[0], (*v)[1]};
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError(line > 0 ? fmt::format("line {}: {}", line, msg) : msg);
}

bool valid_value(ValueType type, std::string_view value) {
    switch (type) {
        case ValueType::vec:
            return parse_vec(value).has_value();
        case ValueType::integer:
            return parse_integer(value).has_value();
        case ValueType::real:
            return parse_real(value).has_value();
        case ValueType::boolean:
            return parse_bool(value).has_value();
        case ValueType::matrix:
            return parse_reals(value, 4).has_value();
        case ValueType::text:
            return !value.empty();
    }
    return false;
}

std::string_view type_name(ValueType type) {
    switch (type) {
        case ValueType::vec:
            return "a vector \"x,y\"";
        case ValueType::integer:
            return "an integer";
        case ValueType::real:
            return "a real number";
        case ValueType::boolean:
            return "true or false";
        case ValueType::matrix:
            return "four reals \"a,b,c,d\"";
        case ValueType::text:
            return "a non-empty value";
    }
    return "";
}

struct Entry {
    std::string value;
    int line = 0;
};

NormSpec build_norm(const std::map<std::string, Entry>& norm) {
    auto find = [&](const char* key) -> const Entry* {
        const auto it = norm.find(key);
        return it == norm.end() ? nullptr : &it->second;
    };
    const Entry* kind = find("kind");
    const Entry* p = find("p");
    const Entry* vertices = find("vertices");
    std::string k = kind ? lower(kind->value) : (p ? "lp" : (vertices ? "polygon" : "euclidean"));
    const int kind_line = kind ? kind->line : 0;

    if (k == "euclidean") {
        if (p) fail(p->line, "p applies only to kind = lp");
        if (vertices) fail(vertices->line, "vertices apply only to kind = polygon");
        return NormSpec::euclidean();
    }
    if (k == "lp") {
        if (!p) fail(kind_line, "kind = lp requires p");
        if (vertices) fail(vertices->line, "vertices apply only to kind = polygon");
        const auto v = parse_real(p->value);
        if (!v) fail(p->line, fmt::format("malformed number '{}' for p", p->value));
        try {
            return NormSpec::lp(*v);
        } catch (const InvalidNormError& e) {
            fail(p->line, e.what());
        }
    }
    if (k == "polygon") {
        if (!vertices) fail(kind_line, "kind = polygon requires vertices");
        if (p) fail(p->line, "p applies only to kind = lp");
        std::vector<Vec2> half;
        for (const auto& item : split(vertices->value, ';')) {
            if (item.empty()) continue;
            const auto v = parse_vec(item);
            if (!v) fail(vertices->line, fmt::format("malformed vertex '{}'", item));
            half.push_back(*v);
        }
        try {
            return NormSpec::polygon(half);
        } catch (const InvalidNormError& e) {
            fail(vertices->line, e.what());
        }
    }
    fail(kind_line, fmt::format("unknown norm kind '{}'", kind ? kind->value : k));
}

std::string real_text(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return fmt::format("{:.17g}", v);
}

const std::string* find_param(const RunConfig& c, const std::string& key) {
    const auto it = c.params.find(key);
    return it == c.params.end() ? nullptr : &it->second;
}

[[noreturn]] void bad_param(const std::string& key, const std::string& value, ValueType type) {
    throw ConfigError(fmt::format("parameter {} = '{}' is not {}", key, value, type_name(type)));
}

}  // namespace

std::string_view to_string(Command c) {
    for (const auto& [cmd, name] : kCommands) {
        if (cmd == c) return name;
    }
    return "";
}

std::optional<Command> parse_command(std::string_view name) {
    const std::string n = lower(trim(name));
    for (const auto& [cmd, text] : kCommands) {
        if (text == n) return cmd;
    }
    return std::nullopt;
}

RunConfig parse_config(std::string_view text) {
    enum class Section { none, norm, run };
    Section section = Section::none;
    std::map<std::string, Entry> norm;
    std::optional<Entry> command;
    RunConfig config;

    int line_no = 0;
    for (const auto& raw : split(text, '\n')) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, fmt::format("malformed section header '{}'", line));
            const std::string name = lower(trim(line.substr(1, line.size() - 2)));
            if (name == "norm") {
                section = Section::norm;
            } else if (name == "run") {
                section = Section::run;
            } else {
                fail(line_no, fmt::format("unknown section [{}]", name));
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, fmt::format("expected 'key = value', got '{}'", line));
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, "missing key before '='");

        if (section == Section::norm) {
            if (key != "kind" && key != "p" && key != "vertices") fail(line_no, fmt::format("unknown key '{}' in [norm]", key));
            norm[key] = {value, line_no};
        } else if (section == Section::run) {
            if (key == "command") {
                command = Entry{value, line_no};
            } else if (key == "output") {
                config.output = value;
            } else if (const auto it = kParamTypes.find(key); it != kParamTypes.end()) {
                if (!valid_value(it->second, value)) {
                    fail(line_no, fmt::format("malformed value '{}' for {}: expected {}", value, key, type_name(it->second)));
                }
                config.params[key] = value;
            } else {
                fail(line_no, fmt::format("unknown key '{}' in [run]", key));
            }
        } else {
            fail(line_no, fmt::format("key '{}' outside of a [norm] or [run] section", key));
        }
    }

    config.norm = build_norm(norm);
    if (!command) throw ConfigError("missing command in [run]");
    const auto cmd = parse_command(command->value);
    if (!cmd) fail(command->line, fmt::format("unknown command '{}'", command->value));
    config.command = *cmd;
    return config;
}

std::string serialize(const RunConfig& config) {
    std::string out = "[norm]\n";
    const NormSpec& n = config.norm;
    switch (n.kind()) {
        case NormKind::euclidean:
            out += "kind = euclidean\n";
            break;
        case NormKind::lp:
            out += "kind = lp\np = " + real_text(n.p()) + "\n";
            break;
        case NormKind::polygon: {
            out += "kind = polygon\nvertices = ";
            bool first = true;
            for (const Vec2& v : n.half_vertices()) {
                out += fmt::format("{}{},{}", first ? "" : "; ", real_text(v.x1), real_text(v.x2));
                first = false;
            }
            out += "\n";
            break;
        }
    }
    out += "[run]\ncommand = ";
    out += to_string(config.command);
    out += "\n";
    if (!config.output.empty()) out += "output = " + config.output + "\n";
    for (const auto& [key, value] : config.params) out += key + " = " + value + "\n";
    return out;
}

Vec2 param_vec(const RunConfig& c, const std::string& key) {
    const auto v = param_vec_opt(c, key);
    if (!v) throw ConfigError(fmt::format("missing parameter {}", key));
    return *v;
}

std::optional<Vec2> param_vec_opt(const RunConfig& c, const std::string& key) {
    const std::string* raw = find_param(c, key);
    if (!raw) return std::nullopt;
    const auto v = parse_vec(*raw);
    if (!v) bad_param(key, *raw, ValueType::vec);
    return v;
}

double param_real(const RunConfig& c, const std::string& key, double fallback) {
    const std::string* raw = find_param(c, key);
    if (!raw) return fallback;
    const auto v = parse_real(*raw);
    if (!v) bad_param(key, *raw, ValueType::real);
    return *v;
}

long long param_int(const RunConfig& c, const std::string& key, long long fallback) {
    const std::string* raw = find_param(c, key);
    if (!raw) return fallback;
    const auto v = parse_integer(*raw);
    if (!v) bad_param(key, *raw, ValueType::integer);
    return *v;
}

bool param_bool(const RunConfig& c, const std::string& key, bool fallback) {
    const std::string* raw = find_param(c, key);
    if (!raw) return fallback;
    const auto v = parse_bool(*raw);
    if (!v) bad_param(key, *raw, ValueType::boolean);
    return *v;
}

std::string param_text(const RunConfig& c, const std::string& key, const std::string& fallback) {
    const std::string* raw = find_param(c, key);
    return raw ? lower(*raw) : fallback;
}

std::optional<std::array<double, 4>> param_matrix(const RunConfig& c, const std::string& key) {
    const std::string* raw = find_param(c, key);
    if (!raw) return std::nullopt;
    const auto v = parse_reals(*raw, 4);
    if (!v) bad_param(key, *raw, ValueType::matrix);
    return std::array<double, 4>{(*v)[0], (*v)[1], (*v)[2], (*v)[3]};
}

}  // namespace msine
