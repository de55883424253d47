#include "djp/module_json.hpp"

#include "doctest.h"

#include <cstdio>
#include <filesystem>

using namespace djp;

namespace {

bool same_module(const FdModule& a, const FdModule& b) {
    return a.dim == b.dim && a.x == b.x && a.y == b.y && a.g == b.g && a.xi == b.xi &&
           a.u == b.u && a.v == b.v && a.labels == b.labels && a.provenance == b.provenance &&
           a.partial_xy == b.partial_xy && a.depth == b.depth &&
           a.window_degree == b.window_degree;
}

std::string field_of(const std::string& text) {
    try {
        module_from_json(text);
    } catch (const SchemaError& e) {
        return e.field;
    }
    return "(no error)";
}

} // namespace

TEST_CASE("serialization round trip") {
    for (const FdModule& m : {build_simple(3), build_T(2, 1), build_S(2, Rational(1, 3)),
                              dual(build_T(1, 1)), tensor(build_simple(1), build_simple(1))}) {
        FdModule back = module_from_json(module_to_json(m));
        CAPTURE(m.provenance);
        CHECK(same_module(m, back));
    }
}

TEST_CASE("truncated modules keep their window metadata") {
    FdModule m = build_verma_trunc(2, 3);
    FdModule back = module_from_json(module_to_json(m));
    CHECK(back.partial_xy);
    CHECK(back.depth == 3);
    CHECK(back.window_degree == m.window_degree);
    CHECK(same_module(m, back));

    FdModule w = build_verma2_trunc(1, Rational(1), Rational(0), 2);
    CHECK(same_module(w, module_from_json(module_to_json(w))));
}

TEST_CASE("schema errors name the offending field") {
    CHECK(field_of("not json at all") == "(document)");
    CHECK(field_of("[1,2]") == "(document)");
    CHECK(field_of("{}") == "dim");
    CHECK(field_of(R"({"dim": "three"})") == "dim");
    CHECK(field_of(R"({"dim": -1})") == "dim");
    CHECK(field_of(R"({"dim": 1})") == "generators");
    CHECK(field_of(R"({"dim": 1, "generators": {}})") == "generators.x");

    std::string gens = R"("x": [["0"]], "y": [["0"]], "g": [["1"]], "xi": [["0"]], "u": [["0"]])";
    CHECK(field_of(R"({"dim": 1, "generators": {)" + gens + "}}") == "generators.v");
    CHECK(field_of(R"({"dim": 1, "generators": {)" + gens + R"(, "v": [[]]}})") ==
          "generators.v[0]");
    CHECK(field_of(R"({"dim": 1, "generators": {)" + gens + R"(, "v": [["1/x"]]}})") ==
          "generators.v[0][0]");
    CHECK(field_of(R"({"dim": 1, "generators": {)" + gens + R"(, "v": [[5]]}})") ==
          "generators.v[0][0]");
    CHECK(field_of(R"({"dim": 2, "generators": {)" + gens + R"(, "v": [["0"]]}})") ==
          "generators.x");

    std::string ok = R"({"dim": 1, "generators": {)" + gens + R"(, "v": [["0"]]})";
    CHECK(field_of(ok + R"(, "labels": ["a", "b"]})") == "labels");
    CHECK(field_of(ok + R"(, "labels": [3]})") == "labels");
    CHECK(field_of(ok + R"(, "provenance": 9})") == "provenance");
    CHECK(field_of(ok + R"(, "partial": true})") == "depth");
    CHECK(field_of(ok + R"(, "partial": true, "depth": 1})") == "window_degree");
    CHECK(field_of(ok + R"(, "partial": true, "depth": 1, "window_degree": [0, 0]})") ==
          "window_degree");
}

TEST_CASE("defaults for optional fields") {
    FdModule m = module_from_json(
        R"({"dim": 1, "generators": {"x": [["0"]], "y": [["0"]], "g": [["1"]],
            "xi": [["0"]], "u": [["0"]], "v": [["0"]]}})");
    CHECK(m.labels == std::vector<std::string>{"e0"});
    CHECK(m.provenance.empty());
    CHECK(!m.partial_xy);
    CHECK(verify_module(m).ok);
}

TEST_CASE("file save and load") {
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / "djp_test_module.json";
    FdModule m = build_T(1, 1);
    save_module(m, p.string());
    FdModule back = load_module(p.string());
    CHECK(same_module(m, back));
    std::remove(p.string().c_str());
    CHECK_THROWS_AS(load_module(p.string()), std::runtime_error);
}
