// Command-line front end: msine [options] <command> [key=value ...]
//
//   msine --kind lp --p inf sine x=1,0 y=1,1
//   msine --config hexagon.cfg constants which=c_r
//   msine --kind polygon --vertices "1,0; 0,1" emit-circle which=anticircle --svg -o circle.svg

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "msine/config.hpp"
#include "msine/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generalized sine, orthogonality and plane constants for normed planes"};
    app.set_version_flag("--version", "msine 1.0");

    std::string config_path, kind, p, vertices, output, command;
    std::vector<std::string> params;
    bool svg = false;
    app.add_option("-c,--config", config_path, "Config file with [norm] and [run] sections")->check(CLI::ExistingFile);
    app.add_option("--kind", kind, "Norm kind: euclidean, lp or polygon");
    app.add_option("--p", p, "Exponent for kind = lp (inf for the max norm)");
    app.add_option("--vertices", vertices, "Half vertex list for kind = polygon: \"x,y; x,y; ...\"");
    app.add_option("-o,--output", output, "Write the result here instead of standard output");
    app.add_flag("--svg", svg, "emit-circle: write SVG instead of CSV");
    app.add_option("command", command, "sine, antinorm, birkhoff, isosceles, roberts, conjugates, alpha, radon, "
                                       "constants, bisect, lawsines, conformal, emit-circle or reproduce");
    app.add_option("params", params, "Command parameters as key=value, e.g. x=1,0 grid=512");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? msine::kExitOk : msine::kExitInputError;
    }

    // Flags are appended after the file so that they override its keys.
    std::ostringstream text;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        text << in.rdbuf() << '\n';
    }
    text << "[norm]\n";
    if (!kind.empty()) text << "kind = " << kind << '\n';
    if (!p.empty()) text << "p = " << p << '\n';
    if (!vertices.empty()) text << "vertices = " << vertices << '\n';
    text << "[run]\n";
    if (!command.empty()) text << "command = " << command << '\n';
    if (!output.empty()) text << "output = " << output << '\n';
    if (svg) text << "svg = true\n";
    for (const auto& kv : params) {
        if (kv.find('=') == std::string::npos) {
            std::cerr << "error: parameter '" << kv << "' is not of the form key=value\n";
            return msine::kExitInputError;
        }
        text << kv << '\n';
    }

    msine::RunConfig config;
    try {
        config = msine::parse_config(text.str());
    } catch (const msine::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return msine::kExitInputError;
    }
    return msine::run(config, std::cout, std::cerr);
}
