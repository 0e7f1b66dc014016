#include <doctest.h>

#include <string>

#include "altsum/errors.hpp"
#include "altsum/instance.hpp"

using namespace altsum;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const char* tuple_json = R"({
  "kind": "matrix-tuple",
  "shape": [2, 2],
  "matrices": [
    [["1/2", "0"], ["0", "2"]],
    [["1", "-3/4"], ["5", "7"]]
  ]
})";

const char* spinor_json = R"({
  "kind": "spinor", "n": 3,
  "edges": [
    {"i": 2, "j": 3, "p1": ["1", "1"], "p2": ["0", "1"]},
    {"i": 1, "j": 2, "p1": ["1", "0"], "p2": ["0", "1"]},
    {"i": 1, "j": 3, "p1": ["2", "1/3"], "p2": ["-1", "1"]}
  ]
})";

} // namespace

TEST_SUITE("instance") {

TEST_CASE("matrix tuple files") {
    const Instance inst = parse_instance(tuple_json);
    REQUIRE(kind_of(inst) == InstanceKind::matrix_tuple);
    const auto& t = std::get<MatrixTupleInstance>(inst);
    CHECK(t.matrices.shape() == Shape({2, 2}));
    CHECK(t.matrices[0](0, 0) == Rational(1, 2));
    CHECK(t.matrices[1](0, 1) == Rational(-3, 4));
    CHECK(!t.form.has_value());
}

TEST_CASE("matrix tuple with a dense form") {
    std::string text = R"({"kind": "matrix-tuple", "shape": [1, 2], "matrices": [[["3"]], [["1","2"],["3","4"]]],
                           "form": {"type": "dense", "coeffs": ["1","0","-1","5"]}})";
    const Instance inst = parse_instance(text);
    const auto& t = std::get<MatrixTupleInstance>(inst);
    REQUIRE(t.form.has_value());
    CHECK(t.form->coeffs()[3] == Rational(5));
    CHECK(contains(error_of(R"({"kind": "matrix-tuple", "shape": [1], "matrices": [[["3"]]],
                               "form": {"type": "dense", "coeffs": ["1", "2"]}})"),
                   "$.form.coeffs"));
    CHECK(contains(error_of(R"({"kind": "matrix-tuple", "shape": [1], "matrices": [[["3"]]],
                               "form": {"type": "sparse", "coeffs": []}})"),
                   "$.form.type"));
}

TEST_CASE("spinor files accept any edge order") {
    const Instance inst = parse_instance(spinor_json);
    REQUIRE(kind_of(inst) == InstanceKind::spinor);
    const auto& s = std::get<SpinorInstance>(inst);
    CHECK(s.n() == 3);
    CHECK(s.edge(0, 1).p1 == Polynomial::linear(1, 0));
    CHECK(s.edge(1, 2).p1 == Polynomial::linear(1, 1));
    CHECK(s.edge(0, 2).p1 == Polynomial::linear(2, Rational(1, 3)));
}

TEST_CASE("colorful files") {
    const Instance inst = parse_instance(R"({"kind": "colorful", "n": 2,
        "matrices": [[["1","0"],["0","1"]], [["2","1"],["1","1"]]]})");
    REQUIRE(kind_of(inst) == InstanceKind::colorful);
    CHECK(std::get<ColorfulInstance>(inst).n() == 2);
}

TEST_CASE("errors carry location") {
    const std::string syntax = error_of("{\n  \"kind\": \"colorful\",\n  \"n\": 2,,\n}");
    CHECK(contains(syntax, "line 3"));
    CHECK(contains(syntax, "column"));

    CHECK(contains(error_of(R"({"n": 2})"), "kind"));
    CHECK(contains(error_of(R"({"kind": "cube"})"), "cube"));
    CHECK(contains(error_of(R"({"kind": "colorful", "n": 2, "matrices": [[["1","0"],["0","1"]], [["1","x"],["0","1"]]]})"),
                   "$.matrices[1][0][1]"));
    CHECK(contains(error_of(R"({"kind": "colorful", "n": 2, "matrices": [[["1","0"],["0","1"]], [["1","1/0"],["0","1"]]]})"),
                   "$.matrices[1][0][1]"));
    CHECK(contains(error_of(R"({"kind": "colorful", "n": 2, "matrices": [[["1","0"],["0","1"]], [["1",2],["0","1"]]]})"),
                   "rational string"));
    CHECK(contains(error_of(R"({"kind": "colorful", "n": 2, "matrices": [[["1","0"],["0","1"]]]})"), "$.matrices"));
    CHECK(contains(error_of(R"({"kind": "colorful", "n": 2, "matrices": [[["1","0"]], [["1","0"],["0","1"]]]})"),
                   "$.matrices[0]"));
    CHECK(contains(error_of(R"({"kind": "colorful", "n": 0, "matrices": []})"), "$.n"));
    CHECK(contains(error_of(R"({"kind": "matrix-tuple", "shape": [2, 0], "matrices": []})"), "$.shape[1]"));
    CHECK(contains(error_of(R"({"kind": "spinor", "n": 3, "edges": []})"), "C(n,2) = 3"));
    CHECK(contains(error_of(R"({"kind": "spinor", "n": 2, "edges": [{"i": 2, "j": 1, "p1": ["1","0"], "p2": ["0","1"]}]})"),
                   "i < j"));
    CHECK(contains(error_of(R"({"kind": "spinor", "n": 2, "edges": [{"i": 1, "j": 2, "p1": ["1"], "p2": ["0","1"]}]})"),
                   "$.edges[0].p1"));
    CHECK(contains(error_of(R"({"kind": "spinor", "n": 3, "edges": [
        {"i": 1, "j": 2, "p1": ["1","0"], "p2": ["0","1"]},
        {"i": 1, "j": 2, "p1": ["1","0"], "p2": ["0","1"]},
        {"i": 2, "j": 3, "p1": ["1","0"], "p2": ["0","1"]}]})"),
                   "duplicate"));
    CHECK(contains(error_of(R"({"kind": "spinor", "n": 12, "edges": []})"), "11"));
    CHECK(contains(error_of(R"([1, 2])"), "expected an object"));
}

TEST_CASE("canonical JSON round-trips") {
    for (const char* text : {tuple_json, spinor_json}) {
        const std::string once = instance_to_json(parse_instance(text));
        CHECK(instance_to_json(parse_instance(once)) == once);
    }
    const std::string colorful = instance_to_json(random_colorful(3, 9));
    CHECK(instance_to_json(parse_instance(colorful)) == colorful);
    const std::string tuple = instance_to_json(random_matrix_tuple(Shape({2, 3}), 9));
    CHECK(instance_to_json(parse_instance(tuple)) == tuple);
    CHECK(contains(instance_to_json(parse_instance(tuple_json)), "\"1/2\""));
}

TEST_CASE("seeded generation is deterministic") {
    CHECK(instance_to_json(random_colorful(4, 123)) == instance_to_json(random_colorful(4, 123)));
    CHECK(instance_to_json(random_colorful(4, 123)) != instance_to_json(random_colorful(4, 124)));
    CHECK(instance_to_json(random_spinor(5, 7)) == instance_to_json(random_spinor(5, 7)));
    CHECK(instance_to_json(random_matrix_tuple(Shape({2, 2}), 1)) ==
          instance_to_json(random_matrix_tuple(Shape({2, 2}), 1)));
    InstanceRng rng(0);
    std::vector<std::int64_t> draws;
    for (int i = 0; i < 5; ++i) draws.push_back(rng.uniform(-9, 9));
    std::mt19937_64 reference(0);
    std::vector<std::int64_t> expected;
    for (int i = 0; i < 5; ++i) expected.push_back(-9 + static_cast<std::int64_t>(reference() % 19));
    CHECK(draws == expected);
}

TEST_CASE("generated instances honour their contracts") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const ColorfulInstance c = random_colorful(2 + seed % 4, seed);
        CHECK(c.matrices().nonsingular());
        const SpinorInstance s = random_spinor(5, seed);
        CHECK(s.edge_count() == 10);
        for (const auto& e : s.edges()) CHECK(!e.det().is_zero());
        const MatrixTupleInstance t = random_matrix_tuple(Shape({3, 2}), seed);
        CHECK(t.matrices.nonsingular());
        CHECK(t.form.has_value());
        for (const auto& m : c.matrices().matrices())
            for (const auto& x : m.entries()) {
                CHECK(x.is_integer());
                CHECK(x >= Rational(-9));
                CHECK(x <= Rational(9));
            }
    }
    InstanceRng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const auto v = rng.uniform(-2, 2);
        CHECK(v >= -2);
        CHECK(v <= 2);
    }
    CHECK_THROWS_AS(random_colorful(0, 1), InputError);
    CHECK_THROWS_AS(random_spinor(12, 1), InputError);
}

TEST_CASE("digests") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("kind names") {
    for (auto k : {InstanceKind::matrix_tuple, InstanceKind::colorful, InstanceKind::spinor})
        CHECK(parse_kind(kind_name(k)) == k);
    CHECK_THROWS_AS(parse_kind("graph"), InputError);
}

}
