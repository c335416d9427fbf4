// Temporary development smoke run; superseded by the doctest suites.
#include <iostream>

#include "klab/io.hpp"

int main() {
    using namespace klab;
    try {
        InputDocument doc = parse_input_text(R"({"field":"Q","n":2,"ideal":["X1^2","X2^3"]})");
        RunOptions opts;
        opts.cross_check = true;
        RunResult r = run_command(Command::Report, doc, opts);
        std::cout << r.output << "\nexit=" << r.exit_code << "\n";
    } catch (const Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
