#include <gtest/gtest.h>

#include "deltader/catalog.hpp"
#include "deltader/constructions.hpp"
#include "deltader/errors.hpp"
#include "deltader/io.hpp"
#include "deltader/solver.hpp"
#include "oracle.hpp"

using namespace deltader;
using oracle::q;

namespace {

const FieldConfig Q = FieldConfig::rational();

std::vector<Algebra> catalog_algebras() {
    std::vector<Algebra> out;
    for (const auto& name : catalog::names()) out.push_back(*catalog::by_name(name));
    out.push_back(catalog::witt_modular(7));
    out.push_back(catalog::with_primary_as_bracket(catalog::sl2()));
    out.push_back(catalog::abelian(0));
    return out;
}

TEST(Io, RoundTripIsByteIdentical) {
    for (const auto& a : catalog_algebras()) {
        const std::string first = io::emit_algebra(a);
        const auto loaded = io::load_algebra(first);
        EXPECT_EQ(loaded.algebra, a);
        EXPECT_EQ(io::emit_algebra(loaded), first);
    }
}

TEST(Io, DoubleFileRoundTrip) {
    const auto d = lie_double(catalog::sl2());
    const auto file = io::double_file(d);
    ASSERT_TRUE(file.provenance);
    EXPECT_EQ((*file.provenance)["construction"], "lie-double");
    EXPECT_EQ((*file.provenance)["base_dim"], 3);
    const std::string text = io::emit_algebra(file);
    const auto back = io::load_algebra(text);
    EXPECT_EQ(back.algebra, d.double_algebra);
    EXPECT_EQ(io::emit_algebra(back), text);
}

TEST(Io, CanonicalLayout) {
    const std::string text = io::emit_algebra(catalog::abelian(1));
    EXPECT_EQ(text, "{\n  \"version\": 1,\n  \"field\": {\"type\":\"rational\"},\n  \"dim\": 1,\n"
                    "  \"names\": [\"a0\"],\n  \"table\": [\n    [[\"0\"]]\n  ]\n}\n");
}

TEST(Io, IntegerShorthandAndFractions) {
    const auto f = io::load_algebra(R"({"version":1,"field":{"type":"rational"},"dim":1,"table":[[[ "1/2" ]]]})");
    EXPECT_EQ(f.algebra.table()(0, 0, 0), q(1, 2));
    EXPECT_EQ(f.algebra.names(), (std::vector<std::string>{"b0"}));
    const auto g = io::load_algebra(R"({"version":1,"field":{"type":"prime","p":5},"dim":1,"table":[[[7]]]})");
    EXPECT_EQ(g.algebra.table()(0, 0, 0).residue(), 2u);
}

TEST(Io, Errors) {
    EXPECT_THROW(io::load_algebra("{"), ParseError);
    EXPECT_THROW(io::load_algebra(R"({"version":2,"field":{"type":"rational"},"dim":1,"table":[[["0"]]]})"),
                 ParseError);
    EXPECT_THROW(io::load_algebra(R"({"version":1,"field":{"type":"rational"},"dim":2,"table":[[["0"]]]})"),
                 ShapeError);
    EXPECT_THROW(io::load_algebra(R"({"version":1,"field":{"type":"prime","p":4},"dim":1,"table":[[["0"]]]})"),
                 ConfigError);
    EXPECT_THROW(io::load_algebra(R"({"version":1,"field":{"type":"rational"},"dim":1,"table":[[["x"]]]})"),
                 ParseError);
    EXPECT_THROW(io::load_algebra(
                     R"({"version":1,"field":{"type":"rational"},"dim":2,"grading":[0,1],"table":[[["0","1"],["0","0"]],[["0","0"],["0","0"]]]})"),
                 GradingError);
}

TEST(Io, SolutionSpaceJson) {
    const auto a = catalog::sl2();
    const auto space = delta_derivations(a, q(-1));
    const auto j = io::solution_space_to_json(space, classify_all(space, a));
    EXPECT_EQ(j["dim"], 5);
    EXPECT_EQ(j["delta"], "-1");
    const auto reparsed = io::Json::parse(j.dump());
    const auto maps = io::maps_from_json(reparsed, Q);
    ASSERT_EQ(maps.size(), 5u);
    for (const auto& m : maps) EXPECT_TRUE(is_delta_derivation(m, a, q(-1)));

    const auto pairs = generalized_delta_derivations(a, q(1));
    const auto pj = io::Json::parse(io::solution_space_to_json(pairs, classify_all(pairs, a)).dump());
    for (const auto& p : io::pairs_from_json(pj, Q)) EXPECT_TRUE(is_generalized_pair(p, a, q(1)));
}

TEST(Io, MatrixJson) {
    const auto m = Matrix::from_rows(Q, {{1, -2}, {0, 3}});
    EXPECT_EQ(io::matrix_from_json(io::matrix_to_json(m), Q), m);
}

TEST(Io, Digest) {
    EXPECT_EQ(io::digest(""), "cbf29ce484222325");
    EXPECT_EQ(io::digest("a"), "af63dc4c8601ec8c");
}

} // namespace
