#include <cstdio>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "princ/corpus.hpp"
#include "princ/errors.hpp"
#include "princ/io.hpp"

using namespace princ;

namespace {

std::string data_file(const std::string& name) {
    return std::string(PRINC_SOURCE_DIR) + "/data/" + name;
}

}  // namespace

TEST_CASE("poset documents round-trip through their canonical form", "[io][poset]") {
    BoundedOrder n5 = order_from_json(json_from_file(data_file("n5.json")));
    REQUIRE(n5 == n5_order());

    Json dumped = to_json(n5);
    BoundedOrder again = order_from_json(dumped);
    REQUIRE(again == n5);
    REQUIRE(to_json(again) == dumped);
}

TEST_CASE("poset documents may list any generating relation", "[io][poset]") {
    // full relation instead of covers parses to the same order
    Json j;
    j["schema"] = 1;
    j["elements"] = {"0", "m", "1"};
    j["leq"] = Json::array({{"0", "m"}, {"m", "1"}, {"0", "1"}});
    BoundedOrder o = order_from_json(j);
    REQUIRE(o == chain_order({"0", "m", "1"}));
    // the canonical dump keeps only the covers
    REQUIRE(to_json(o)["leq"].size() == 2);
}

TEST_CASE("malformed poset documents fail with diagnostics", "[io][poset]") {
    REQUIRE_THROWS_AS(json_from_string("{ not json"), ParseError);
    REQUIRE_THROWS_AS(order_from_json(Json::array()), ParseError);

    Json no_schema;
    no_schema["elements"] = {"0", "1"};
    no_schema["leq"] = Json::array({{"0", "1"}});
    REQUIRE_THROWS_AS(order_from_json(no_schema), ParseError);

    Json bad_version = no_schema;
    bad_version["schema"] = 99;
    REQUIRE_THROWS_AS(order_from_json(bad_version), ParseError);

    Json unknown;
    unknown["schema"] = 1;
    unknown["elements"] = {"0", "1"};
    unknown["leq"] = Json::array({{"0", "x"}});
    REQUIRE_THROWS_AS(order_from_json(unknown), ParseError);

    Json cyclic;
    cyclic["schema"] = 1;
    cyclic["elements"] = {"0", "1"};
    cyclic["leq"] = Json::array({{"0", "1"}, {"1", "0"}});
    REQUIRE_THROWS_AS(order_from_json(cyclic), ParseError);
}

TEST_CASE("triple documents round-trip", "[io][triple]") {
    OrderTriple t = triple_from_json(json_from_file(data_file("triple.json")));
    REQUIRE(t.p.size() == 4);
    REQUIRE(t.q.size() == 3);
    REQUIRE(t.psi.apply("p0") == "0");
    REQUIRE(t.psi.apply("p1") == "u");

    Json dumped = to_json(t);
    OrderTriple again = triple_from_json(dumped);
    REQUIRE(to_json(again) == dumped);
    REQUIRE(triple_isomorphism(t, again).has_value());
}

TEST_CASE("triple documents validate their map", "[io][triple]") {
    Json j = json_from_file(data_file("triple.json"));

    Json partial = j;
    partial["psi"] = Json::array({{"0", "0"}, {"1", "1"}});
    REQUIRE_THROWS_AS(triple_from_json(partial), ParseError);

    Json reversed = j;
    reversed["psi"] = Json::array({{"0", "0"}, {"p0", "u"}, {"p1", "0"}, {"1", "1"}});
    REQUIRE_THROWS_AS(triple_from_json(reversed), ParseError);

    Json missing = j;
    missing.erase("q");
    REQUIRE_THROWS_AS(triple_from_json(missing), ParseError);
}

TEST_CASE("dot output is the transitive reduction, stably ordered", "[io][dot]") {
    BoundedOrder n5 = n5_order();
    std::string dot = to_dot(n5, "n5");
    REQUIRE(dot == to_dot(n5, "n5"));
    REQUIRE(dot.find("rankdir=BT") != std::string::npos);
    // 5 covers of the pentagon, one edge line each
    size_t edges = 0;
    for (size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1))
        ++edges;
    REQUIRE(edges == 5);
    // no edge for the composite o < b
    int o = n5.index("o"), b = n5.index("b");
    REQUIRE(dot.find("n" + std::to_string(o) + " -> n" + std::to_string(b)) ==
            std::string::npos);
}

TEST_CASE("the shipped catalog file matches the built-in catalog", "[io][catalog]") {
    GadgetCatalog shipped = load_catalog(data_file("gadgets.json"));
    GadgetCatalog builtin = GadgetCatalog::builtin();
    REQUIRE(shipped.canonical_text() == builtin.canonical_text());
    REQUIRE(shipped.hash() == builtin.hash());
}

TEST_CASE("catalogs round-trip and validate", "[io][catalog]") {
    GadgetCatalog builtin = GadgetCatalog::builtin();
    GadgetCatalog again = catalog_from_json(to_json(builtin));
    REQUIRE(again.canonical_text() == builtin.canonical_text());

    Json bad = to_json(builtin);
    bad["kinds"]["G"]["internals"].push_back("no-dollar");
    REQUIRE_THROWS_AS(catalog_from_json(bad), ParseError);

    Json hollow;
    hollow["schema"] = 1;
    REQUIRE_THROWS_AS(catalog_from_json(hollow), ParseError);
}

TEST_CASE("representation reports serialize their verdicts", "[io][report]") {
    OrderTriple t = triple_from_json(json_from_file(data_file("triple.json")));
    RepresentationReport r = verify_representation(t, Variant::reduced);
    Json j = to_json(r);
    REQUIRE(j["schema"] == 1);
    REQUIRE(j["pass"] == true);
    REQUIRE(j["catalog_hash"] == GadgetCatalog::builtin().hash());
    REQUIRE(j["sizes"]["k"].get<int>() > 0);
    REQUIRE(j["clauses"].is_array());
    REQUIRE_FALSE(j["clauses"].empty());
    REQUIRE(j["construction"]["added"] == j["construction"]["catalog_expected"]);
}

TEST_CASE("file helpers report unusable paths", "[io]") {
    REQUIRE_THROWS_AS(read_file("/nonexistent/princ-test-file"), ParseError);
    REQUIRE_THROWS_AS(write_file("/nonexistent/princ-test-file", "x"), ParseError);
}
