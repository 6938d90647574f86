#include "doctest.h"

#include "derlie/serialize.hpp"
#include "derlie/witness.hpp"
#include "support/printing.hpp"

using namespace derlie;
using derlie::testing::D;
using derlie::testing::S;
using nlohmann::json;

TEST_SUITE("cli") {

TEST_CASE("certificates round-trip through JSON") {
    for (const Certificate& cert : {maximality_certificate(2, 1, D("x2*d1", 2), D("x1*x2*d1", 2)),
                                    maximality_certificate(3, 1, D("x2^2*x3*d1 + x1*d1 + d2", 3), D("x3^2*d1", 3)),
                                    minimal_ideal_certificate(3, 1, D("x1*x2^2*d3", 3), D("x1^2*d2", 3))}) {
        const json j = certificate_to_json(cert);
        const Certificate back = certificate_from_json(json::parse(j.dump()));
        CHECK(back.target == cert.target);
        CHECK(back.context == cert.context);
        CHECK(back.given == cert.given);
        CHECK(back.discipline == cert.discipline);
        CHECK(same_expr(*back.expr, *cert.expr));
        CHECK(certificate_to_json(back) == j);
        CHECK(verify_certificate(back).valid);
    }
}

TEST_CASE("certificate JSON layout") {
    const json j = certificate_to_json(minimal_ideal_certificate(2, 1, D("d2", 2), D("x1*d2", 2)));
    CHECK(j["kind"] == "certificate");
    CHECK(j["discipline"] == "ideal");
    CHECK(j["n"] == 2);
    CHECK(j["context"] == "ms(2,1)");
    CHECK(j["given"] == "d2");
    CHECK(j["target"] == "x1*d2");
    CHECK(j["expr"]["kind"] == "bracket");
    CHECK(j["expr"]["left"] == json{{"kind", "leaf"}, {"claim", "in_spec"}, {"spec", "ms(2,1)"}, {"derivation", "-x1*x2*d2"}});
    CHECK(j["expr"]["right"] == json{{"kind", "leaf"}, {"claim", "given"}, {"derivation", "d2"}});

    const json single = certificate_to_json(maximality_certificate(2, 1, D("x2*d1", 2), D("d1", 2)));
    CHECK(single["expr"]["kind"] == "leaf");
}

TEST_CASE("derived witnesses round-trip through JSON") {
    const auto result = derived_lower_bound_witness(S("sn(2)"), 3, 2);
    REQUIRE(result.witness);
    const json j = witness_to_json(*result.witness);
    CHECK(j["value"] == "-d2");
    CHECK(j["depth"] == 3);
    const DerivedWitness back = witness_from_json(json::parse(j.dump()));
    CHECK(back.spec == result.witness->spec);
    CHECK(same_expr(*back.tree, *result.witness->tree));
    CHECK(verify_derived_witness(back));
}

TEST_CASE("malformed documents are rejected") {
    json j = certificate_to_json(maximality_certificate(2, 1, D("x2*d1", 2), D("x1*x2*d1", 2)));
    {
        json bad = j;
        bad.erase("target");
        CHECK_THROWS_AS(certificate_from_json(bad), FormatError);
    }
    {
        json bad = j;
        bad["discipline"] = "group";
        CHECK_THROWS_AS(certificate_from_json(bad), FormatError);
    }
    {
        json bad = j;
        bad["n"] = 3;
        CHECK_THROWS_AS(certificate_from_json(bad), FormatError);
    }
    {
        json bad = j;
        bad["expr"] = {{"kind", "lincomb"}, {"terms", json::array()}};
        CHECK_THROWS_AS(certificate_from_json(bad), FormatError);
    }
    {
        json bad = j;
        bad["expr"] = {{"kind", "leaf"}, {"claim", "trust me"}, {"derivation", "d1"}};
        CHECK_THROWS_AS(certificate_from_json(bad), FormatError);
    }
    {
        json bad = j;
        bad["target"] = "x3*d1";
        CHECK_THROWS_AS(certificate_from_json(bad), ParseError);
    }
    CHECK_THROWS_AS(witness_from_json(j), FormatError);
    CHECK_THROWS_AS(certificate_from_json(json::array()), FormatError);
}

TEST_CASE("rank reports use 1-based pivots") {
    const std::vector<Derivation> gens{D("x2*d2", 2), D("x1*d1", 2)};
    const json j = rank_report_to_json(rank(gens));
    CHECK(j["rank"] == 2);
    CHECK(j["pivot_rows"].size() == 2);
    for (const auto& i : j["pivot_rows"]) CHECK((i >= 1 && i <= 2));
    CHECK(j["final_pivot"].is_string());
}

}  // TEST_SUITE
