// Temporary development driver for the remaining paper examples.
#include <chrono>
#include <iostream>

#include "klab/io.hpp"

using namespace klab;

static void run(const std::string& name, const std::string& text, Command cmd = Command::Report) {
    auto t0 = std::chrono::steady_clock::now();
    try {
        InputDocument doc = parse_input_text(text);
        RunResult r = run_command(cmd, doc, RunOptions{});
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << "==== " << name << " (" << ms << " ms, exit " << r.exit_code << ")\n"
                  << r.output << "\n";
    } catch (const Error& e) {
        std::cout << "==== " << name << " error[" << e.code() << "]: " << e.what() << "\n";
    }
}

int main(int argc, char** argv) {
    std::string which = argc > 1 ? argv[1] : "all";
    if (which == "cubics" || which == "all")
        run("two cubics", R"({"field":"Q","n":2,"ideal":["X0*X1^2 + X1^3","X0^2*X2 - 2*X0*X2^2 + X2^3"]})");
    if (which == "exa" || which == "all")
        run("example (a)", R"({"field":"Q","n":2,"ideal":["X2^2","X0*X2 - X1*X2","X0^4 - 2*X0^3*X1 + 2*X0^2*X1^2 - 2*X0*X1^3 + X1^4"]})");
    if (which == "exa_comp" || which == "all")
        run("example (a) components", R"({"field":"Q","n":2,"components":[
            {"primary":["(X1 - X0)^2","(X1 - X0)*X2","X2^2"]},
            {"primary":["X1^2 + X0^2","X2"]}]})");
    if (which == "exb" || which == "all")
        run("example (b)", R"({"field":"Q","n":3,"components":[
            {"primary":["X1","X2","X3 - X0"]},
            {"primary":["X1 - X0","(X2 - X0)^2","X3 - X0"]},
            {"primary":["X1^2","X2","X3"]}]})");
    if (which == "agsx" || which == "all")
        run("ags X", R"({"field":"Q","n":3,"components":[
            {"point":["1","0","0","0"]},
            {"point":["1","1","0","0"]},
            {"point":["1","0","1","0"]},
            {"primary":["X1 - X0","X2 - X0","(X3 - X0)^2"]}]})");
    if (which == "agsy" || which == "all")
        run("ags Y", R"({"field":"Q","n":3,"components":[
            {"point":["1","0","0","0"]},
            {"point":["1","1","0","0"]},
            {"point":["1","0","1","0"]},
            {"primary":["(X1 - X0)^2","X2 - X0","X3 - X0"]}]})");
    if (which == "twocubics" || which == "all")
        run("twocubics components (X2-X0)^2", R"({"field":"Q","n":2,"components":[
            {"point":["1","0","0"]},
            {"primary":["X1 - 4*X2","X2 - 2*X0"]},
            {"primary":["X1 - 3*X2 - 2*X0","(X2 + X0)^2"]},
            {"primary":["X0^2*X1 - X2^3","X1^2 - X0*X2 - X2^2","X0^3 + X0^2*X2 - X1*X2^2"]}]})");
    return 0;
}
