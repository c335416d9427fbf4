#pragma once

#include <string>

#include "klab/structure.hpp"

namespace klab {

// Validated CLI input: a field, an ambient dimension, and exactly one of a
// component list or a homogeneous ideal, with polynomials kept as grammar
// strings until the scheme is built.
struct InputDocument {
    FieldSpec field;
    int n = 1;
    std::vector<ComponentInput> components;
    std::vector<std::string> ideal_gens;
    bool from_components = false;
    std::string raw_text;
};

InputDocument parse_input_text(const std::string& text);
InputDocument parse_input_file(const std::string& path);

enum class Command { Hilbert, Kaehler, Noether, Conductor, Classify, Report };
Command command_from_name(const std::string& name);

struct RunOptions {
    bool json = true;
    int max_degree = -1;
    bool cross_check = false;
    int threads = 1;
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 2 when consistency failures were reported
    std::string output;
};

// Builds the scheme, runs the minimal dependency closure of the command and
// renders the (deterministic) report.
RunResult run_command(Command cmd, const InputDocument& doc, const RunOptions& opts);

Scheme build_scheme(const InputDocument& doc, const BuildOptions& options);

std::string fnv1a_hex(const std::string& bytes);

} // namespace klab
