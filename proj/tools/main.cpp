#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace cubicdet;
using namespace cubicdet::cli;

namespace {

int emit(const json& report, const std::string& output) {
    const std::string text = report::dump(report) + "\n";
    if (output.empty() || output == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output);
    if (!out) {
        std::cerr << "cannot write " << output << "\n";
        return 2;
    }
    out << text;
    return 0;
}

std::string read_all(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Determinantal representations of smooth cubic surfaces"};
    app.require_subcommand(1);

    std::string surface, input, output, mode = "auto";
    Options opts;
    std::size_t jobs = 1;

    for (const char* name : kCommands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("surface", surface, "builtin surface: fermat, f5paper, clebsch");
        sub->add_option("--input", input, "JSON surface spec file, or - for stdin");
        sub->add_option("--seed", opts.seed, "random seed");
        sub->add_option("--tol", opts.tol, "numerical tolerance");
        sub->add_option("--mode", mode, "exact, float or auto")->check(CLI::IsMember({"exact", "float", "auto"}));
        sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--output", output, "output file, or - for stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        opts.mode = parse_mode(mode);
        opts.jobs = jobs;
        if (surface.empty() == input.empty())
            throw InputError("give either a builtin surface name or --input");
        SurfaceSpec spec;
        if (!surface.empty()) {
            spec = spec_from_builtin(surface);
        } else {
            json j;
            try {
                j = json::parse(read_all(input));
            } catch (const json::parse_error& e) {
                throw InputError(std::string("input is not valid JSON: ") + e.what());
            }
            spec = spec_from_json(j);
        }
        return emit(run_command(command, spec, opts), output);
    } catch (const VerificationFailure& e) {
        json out = e.report();
        out["error"] = {{"kind", "VerificationFailure"}, {"message", e.what()}};
        emit(out, output);
        return 3;
    } catch (const InputError& e) {
        emit(error_record(command, "InputError", e.what()), output);
        return 2;
    } catch (const json::exception& e) {
        emit(error_record(command, "InputError", e.what()), output);
        return 2;
    } catch (const std::exception& e) {
        emit(error_record(command, "ComputationFailure", e.what()), output);
        return 3;
    }
}
