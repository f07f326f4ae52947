#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace ririg;

namespace {

const std::string data_dir = RIRIG_DATA_DIR;

std::string alg_path(const std::string& name) { return data_dir + "/algebras/" + name + ".alg"; }

ParseError parse_error_of(const std::string& text) {
    try {
        parse_algebra(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no ParseError for: " << text;
    return ParseError("none");
}

const char* const b2_text = R"({"size": 2, "zero": 0, "one": 1, "join": [[0, 1], [1, 1]], "prod": [[0, 0], [0, 1]], "imp": [[1, 1], [0, 1]]})";

}  // namespace

TEST(AlgebraFiles, DataFilesMatchFixtures) {
    EXPECT_TRUE(load_algebra(alg_path("b2")) == ModalRirig(fx::b2()));
    EXPECT_TRUE(load_algebra(alg_path("g3")) == ModalRirig(fx::g3()));
    EXPECT_TRUE(load_algebra(alg_path("g3delta")) == fx::g3delta());
    EXPECT_TRUE(load_algebra(alg_path("g3id")) == fx::g3id());
    EXPECT_TRUE(load_algebra(alg_path("l3")) == ModalRirig(fx::lukasiewicz_chain(3)));
    EXPECT_TRUE(load_algebra(alg_path("b2xb2")).base == fx::b2xb2_bare());
    const auto g4 = load_algebra(alg_path("g4-up"));
    EXPECT_EQ(g4.sig.names(), std::vector<std::string>{"m1"});
    EXPECT_TRUE(validate_ririg(g4.base).passed());
}

TEST(AlgebraFiles, EveryWellFormedFileValidates) {
    for (const char* name : {"b2", "g3", "g3delta", "g3id", "l3", "b2xb2", "g4-up"})
        EXPECT_TRUE(validate_ririg(load_algebra(alg_path(name)).base).passed()) << name;
    const auto bad = validate_ririg(load_algebra(alg_path("bad-comm")).base);
    EXPECT_FALSE(bad.passed());
}

TEST(AlgebraFiles, RoundTrip) {
    for (const auto& a : fx::mixed_catalog(4)) {
        EXPECT_TRUE(parse_algebra(format_algebra(a)) == a);
        EXPECT_TRUE(parse_algebra(algebra_to_json(a).dump()) == a);
    }
    const auto d = fx::g3delta();
    EXPECT_EQ(parse_algebra(format_algebra(d)).base.labels, d.base.labels);
    EXPECT_EQ(format_algebra(d), read_file(alg_path("g3delta")));
}

TEST(AlgebraFiles, MissingImpIsSynthesized) {
    const auto a = parse_algebra(R"({"size": 2, "zero": 0, "one": 1, "join": [[0, 1], [1, 1]], "prod": [[0, 0], [0, 1]]})");
    EXPECT_TRUE(a.base == fx::b2());
}

TEST(AlgebraFiles, Diagnostics) {
    EXPECT_NO_THROW(parse_algebra(b2_text));
    const auto bad_json = parse_error_of("{\n  \"size\": 2,\n  \"zero\" 0\n}");
    EXPECT_EQ(bad_json.line(), 3u);
    EXPECT_NE(std::string(bad_json.what()).find("malformed JSON"), std::string::npos);

    const auto out_of_range = parse_error_of(
        "{\n  \"size\": 2,\n  \"zero\": 0,\n  \"one\": 1,\n  \"join\": [[0, 1], [1, 5]],\n  \"prod\": [[0, 0], [0, 1]]\n}");
    EXPECT_EQ(out_of_range.line(), 5u);
    EXPECT_NE(std::string(out_of_range.what()).find("field 'join'"), std::string::npos);
    EXPECT_NE(std::string(out_of_range.what()).find("entry [1][1]"), std::string::npos);

    const auto missing = parse_error_of(R"({"size": 2, "zero": 0, "one": 1, "join": [[0, 1], [1, 1]]})");
    EXPECT_NE(std::string(missing.what()).find("missing field 'prod'"), std::string::npos);

    parse_error_of(R"({"size": 0, "zero": 0, "one": 0, "join": [], "prod": []})");
    parse_error_of(R"({"size": 2, "zero": 0, "one": 1, "join": [[0, 1]], "prod": [[0, 0], [0, 1]]})");
    parse_error_of(R"({"size": 2, "zero": 0, "one": 1, "join": [[0, 1], [1, 1]], "prod": [[0, 0], [0, 1]], "labels": ["x", "x"]})");
    parse_error_of(R"({"size": 2, "zero": 0, "one": 1, "join": [[0, 1], [1, 1]], "prod": [[0, 0], [0, 1]], "modals": {"eps": [0, 1]}})");
    parse_error_of(R"({"size": 2, "zero": 0, "one": 1, "join": [[0, 1], [1, 1]], "prod": [[0, 0], [0, 1]], "modals": {"m": [0]}})");
    parse_error_of(R"({"size": 2, "zero": -1, "one": 1, "join": [[0, 1], [1, 1]], "prod": [[0, 0], [0, 1]]})");
    parse_error_of("[1, 2]");
    EXPECT_THROW(load_algebra(data_dir + "/algebras/no-such-file.alg"), Error);
}

TEST(FunctionFiles, DataFiles) {
    const auto swap = load_function(data_dir + "/functions/g3-swap.fn", 3);
    EXPECT_EQ(swap.arity, 1u);
    EXPECT_EQ(swap.table, (std::vector<Elem>{2, 1, 0}));
    const auto join = load_function(data_dir + "/functions/g3-join.fn", 3);
    const auto g = fx::g3();
    for (Elem x = 0; x < 3; ++x)
        for (Elem y = 0; y < 3; ++y) EXPECT_EQ(join({x, y}), g.join(x, y));
    for (const char* name : {"g3-neg", "g3-const-a", "g3-proj-swap"})
        EXPECT_NO_THROW(load_function(data_dir + "/functions/" + name + ".fn", 3)) << name;
}

TEST(FunctionFiles, RoundTripAndErrors) {
    const auto f = FiniteFunction(3, 2, {0, 1, 2, 2, 1, 0, 1, 1, 1});
    const auto g = parse_function(format_function(f), 3);
    EXPECT_EQ(g.arity, f.arity);
    EXPECT_EQ(g.table, f.table);
    EXPECT_THROW(parse_function(R"({"arity": 1, "table": [0, 1]})", 3), ParseError);
    EXPECT_THROW(parse_function(R"({"arity": 1, "table": [0, 1, 3]})", 3), ParseError);
    EXPECT_THROW(parse_function(R"({"arity": 0, "table": [0]})", 3), ParseError);
    EXPECT_THROW(parse_function(R"({"table": [0, 1, 2]})", 3), ParseError);
    EXPECT_THROW(parse_function("{", 3), ParseError);
    EXPECT_THROW(load_function(data_dir + "/functions/g3-swap.fn", 2), ParseError);
}
