#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <ttplon/instance_io.hpp>

#include "toy_instances.hpp"

using namespace ttplon;

namespace {

std::string to_text(const Instance& inst) {
    std::ostringstream out;
    format_instance(inst, out);
    return out.str();
}

Instance from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

std::string without_line(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::string out;
    for (std::string line; std::getline(in, line);) {
        if (line.rfind(prefix, 0) != 0) {
            out += line + '\n';
        }
    }
    return out;
}

} // namespace

TEST_CASE("write then read is the identity") {
    for (std::uint64_t seed : {1, 2, 3}) {
        const Instance inst = ttplon::testing::standard_instance(seed, Model::TTPC, Correlation::BSC, 5, 0.95);
        CHECK(from_text(to_text(inst)) == inst);
    }
    Instance odd = ttplon::testing::toy_rectangle(0.1 + 0.2, 0.98);
    odd.drop_interval = 7.5;
    odd.capacity = 1.0 / 3.0;
    odd.weights = {0.1, 0.2, 0.3};
    CHECK(from_text(to_text(odd)) == odd);
}

TEST_CASE("file round trip") {
    const Instance inst = ttplon::testing::standard_instance(5, Model::TTPA);
    const auto path = std::filesystem::temp_directory_path() / "ttplon_io_test.ttp";
    write_instance(inst, path);
    CHECK(read_instance(path) == inst);
    std::filesystem::remove(path);
    CHECK_THROWS(read_instance(path));
}

TEST_CASE("format layout") {
    const std::string text = to_text(ttplon::testing::toy_rectangle(1.5, 0.9));
    CHECK(text.rfind("PROBLEM NAME: toy_rectangle\nKNAPSACK DATA TYPE: u\nDIMENSION: 4\nNUMBER OF ITEMS: 3\n", 0) == 0);
    CHECK(text.find("RENTING RATIO: 1.5\n") != std::string::npos);
    CHECK(text.find("DROPPING RATE: 0.9\n") != std::string::npos);
    CHECK(text.find("EDGE_WEIGHT_TYPE: CEIL_2D\nNODE_COORD_SECTION (INDEX, X, Y):\n1 0 0\n") != std::string::npos);
    CHECK(text.find("ITEMS SECTION (INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):\n1 50 20 2\n") != std::string::npos);
}

TEST_CASE("optional lines default to no drop") {
    const std::string text = to_text(ttplon::testing::toy_rectangle(1.0, 0.9));
    const Instance inst = from_text(without_line(text, "DROPPING RATE"));
    CHECK(inst.drop_rate == 1.0);
    CHECK(inst.drop_interval == 10.0);
}

TEST_CASE("parse errors name the line") {
    const std::string text = to_text(ttplon::testing::toy_rectangle());

    SUBCASE("missing items section") {
        const auto cut = text.substr(0, text.find("ITEMS SECTION"));
        CHECK_THROWS_AS(from_text(cut), ParseError);
    }
    SUBCASE("item count mismatch") {
        const auto cut = text.substr(0, text.rfind("3 30 10 4"));
        CHECK_THROWS_WITH_AS(from_text(cut), doctest::Contains("item count mismatch"), ParseError);
    }
    SUBCASE("non-numeric field") {
        std::string bad = text;
        bad.replace(bad.find("CAPACITY OF KNAPSACK: 40"), 24, "CAPACITY OF KNAPSACK: lots");
        try {
            from_text(bad);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 5);
        }
    }
    SUBCASE("malformed header") {
        CHECK_THROWS_AS(from_text("PROBLEM NAME x\n"), ParseError);
    }
    SUBCASE("missing required header") {
        CHECK_THROWS_WITH_AS(from_text(without_line(text, "MAX SPEED")), doctest::Contains("MAX SPEED"), ParseError);
    }
    SUBCASE("item on the start city") {
        std::string bad = text;
        bad.replace(bad.find("1 50 20 2"), 9, "1 50 20 1");
        CHECK_THROWS_AS(from_text(bad), ParseError);
    }
}

TEST_CASE("only CEIL_2D matrices are written") {
    Instance inst = ttplon::testing::toy_rectangle();
    inst.dist.assign(16, 1.0);
    for (int i = 0; i < 4; ++i) {
        inst.dist[static_cast<std::size_t>(i * 5)] = 0.0;
    }
    std::ostringstream out;
    CHECK_THROWS_AS(format_instance(inst, out), DomainError);
}

TEST_CASE("shortest round-trip reals") {
    CHECK(format_real(0.1) == "0.1");
    CHECK(format_real(1.0) == "1");
    CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}
