#include <doctest.h>

#include "test_helpers.hpp"

using namespace klab;
using namespace klab::testing;

TEST_CASE("input validation") {
    CHECK_NOTHROW(parse_input_text(R"({"field":"Q","n":2,"ideal":["X1^2","X2^3"]})"));

    CHECK_THROWS_WITH_AS(parse_input_text(R"({"field":{"Fp":4},"n":2,"ideal":["X1"]})"),
                         doctest::Contains("not prime"), Error);
    CHECK_THROWS_AS(parse_input_text(R"({"field":"Q","n":0,"ideal":["X1"]})"), Error);
    CHECK_THROWS_AS(parse_input_text(R"({"field":"Q","n":2})"), Error);
    CHECK_THROWS_AS(
        parse_input_text(R"({"field":"Q","n":2,"ideal":["X1"],"components":[{"point":["1","0","0"]}]})"),
        Error);
    CHECK_THROWS_AS(parse_input_text(R"({"field":"Q","n":2,"ideal":["X1 +"]})"), Error);
    CHECK_THROWS_AS(parse_input_text("{"), Error);

    // grammar diagnostics carry a column
    try {
        parse_input_text(R"({"field":"Q","n":2,"ideal":["X1 ^"]})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == "parse_error");
        CHECK(std::string(e.what()).find("column") != std::string::npos);
    }

    InputDocument doc =
        parse_input_file(std::string(KLAB_FIXTURE_DIR) + "/four_component_ci_p2.json");
    CHECK(doc.from_components);
    CHECK(doc.components.size() == 4);
}

TEST_CASE("reports are byte-identical across runs") {
    InputDocument doc = parse_input_text(R"({"field":"Q","n":2,"ideal":["X1^2","X2^3"]})");
    RunOptions opts;
    RunResult a = run_command(Command::Report, doc, opts);
    RunResult b = run_command(Command::Report, doc, opts);
    auto strip_timings = [](const std::string& text) {
        std::size_t pos = text.find("\"timings_ms\"");
        return text.substr(0, pos);
    };
    CHECK(strip_timings(a.output) == strip_timings(b.output));
    CHECK(a.exit_code == 0);
}

TEST_CASE("single-point hilbert run") {
    InputDocument doc =
        parse_input_text(R"({"field":"Q","n":2,"components":[{"point":["1","0","0"]}]})");
    RunResult r = run_command(Command::Hilbert, doc, RunOptions{});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"r_x\": 0") != std::string::npos);
    CHECK(r.output.find("\"values\": [\n      1,\n      1\n    ]") != std::string::npos);
}

TEST_CASE("per-command dependency closure") {
    InputDocument doc = parse_input_text(R"({"field":"Q","n":2,"ideal":["X1^2","X2^3"]})");
    RunResult hilbert = run_command(Command::Hilbert, doc, RunOptions{});
    CHECK(hilbert.output.find("\"kaehler\"") == std::string::npos);
    RunResult kaehler = run_command(Command::Kaehler, doc, RunOptions{});
    CHECK(kaehler.output.find("\"kaehler\"") != std::string::npos);
    CHECK(kaehler.output.find("\"classification\"") == std::string::npos);
    RunResult report = run_command(Command::Report, doc, RunOptions{});
    CHECK(report.output.find("\"classification\"") != std::string::npos);
}

TEST_CASE("text rendering and prime fields") {
    InputDocument doc = parse_input_text(R"({"field":{"Fp":32003},"n":2,"ideal":["X1^2","X2^3"]})");
    RunOptions opts;
    opts.json = false;
    RunResult r = run_command(Command::Classify, doc, opts);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("field: \"Fp(32003)\"") != std::string::npos);
    CHECK(r.output.find("is_ci: true") != std::string::npos);
}

TEST_CASE("deterministic input hashing") {
    CHECK(fnv1a_hex("abc") == fnv1a_hex("abc"));
    CHECK(fnv1a_hex("abc") != fnv1a_hex("abd"));
}
