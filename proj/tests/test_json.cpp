#include <doctest.h>

#include "cubelike/json.hpp"

using namespace cubelike;

TEST_CASE("coloring and matrix schemas") {
    const auto c = sokolova_coloring(2);
    CHECK(to_json(c) == Json::parse(R"({"k": 4, "colors": [0, 2, 1, 3]})"));
    CHECK(coloring_from_json(to_json(c)) == c);

    const auto m = heuberger_matrix(ConnectionSet(2, {1, 2, 3}));
    CHECK(to_json(m) == Json::parse(R"({"m": 3, "a_columns": [[1, 1, 1]], "two_identity": true})"));
    auto back = heuberger_from_json(to_json(m));
    CHECK(back.a_columns == m.a_columns);
    CHECK_THROWS_AS(heuberger_from_json(Json::parse(R"({"m": 2, "a_columns": [[1]], "two_identity": true})")),
                    SchemaError);
}

TEST_CASE("witness schema uses 1-based support") {
    const ConnectionSet s(2, {1, 2, 3});
    const auto w = build_witness(s, {0, 1, 2});
    const auto j = to_json(w, true);
    CHECK(j == Json::parse(R"({"z": 3, "support": [1, 2, 3], "images": [1, 2, 3], "verified": true})"));
    const auto back = witness_from_json(j, s);
    CHECK(back.support == w.support);
    CHECK(back.images == w.images);
    CHECK_THROWS_AS(witness_from_json(Json::parse(R"({"z": 3, "support": [0, 1, 2], "images": [1, 2, 3]})"), s),
                    SchemaError);
}

TEST_CASE("certificate round trip") {
    for (auto s : {ConnectionSet(2, {1, 2, 3}), ConnectionSet(3, {1, 2, 4, 7}), ConnectionSet(1, {0}),
                   ConnectionSet(4, {1, 2, 4, 8, 15}), ConnectionSet(4, {3, 5, 6, 9})}) {
        const auto cert = classify(s, true);
        const auto text = to_json(cert).dump();
        const auto back = certificate_from_json(text);
        CHECK(verify_certificate(back));
        CHECK_FALSE(back.witness_verified);
        CHECK(to_json(certificate_from_json(Json::parse(text), true)).dump() == text);
    }
    const auto j = to_json(classify(ConnectionSet(2, {1, 2, 3})));
    CHECK(j["classification"] == "NonBipartite");
    CHECK(j["z"] == 3);
    CHECK(j["support"] == Json::parse("[1, 2, 3]"));
    CHECK(j["chi_lower_bound"] == 4);
}

TEST_CASE("malformed certificates") {
    CHECK_THROWS_AS(certificate_from_json(std::string("{not json")), SchemaError);
    CHECK_THROWS_AS(certificate_from_json(std::string(R"({"n": 2})")), SchemaError);
    CHECK_THROWS_AS(certificate_from_json(std::string(R"({"n": 2, "set": [9], "classification": "Bipartite"})")),
                    SchemaError);
    CHECK_THROWS_AS(certificate_from_json(std::string(R"({"n": 2, "set": [1], "classification": "Tripartite"})")),
                    SchemaError);
    CHECK_THROWS_AS(certificate_from_json(std::string(R"({"n": "two", "set": [1], "classification": "Bipartite"})")),
                    SchemaError);
}
