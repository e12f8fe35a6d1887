#include <string>

#include "doctest.h"
#include "netforge/serialization.hpp"

using namespace netforge;
using namespace netforge::serialization;
using algebra::Rational;
using combinat::LatinSquare;
using combinat::OlsPair;
using combinat::Permutation;

namespace {

OlsPair pair3() {
    return OlsPair(combinat::cyclic_square(Permutation::from_cycles("(123)", 3)),
                   combinat::cyclic_square(Permutation::from_cycles("(132)", 3)));
}

}  // namespace

TEST_CASE("square JSON round trip") {
    LatinSquare L = combinat::cyclic_square(Permutation::from_cycles("(1234)", 4));
    json j = square_to_json(L);
    CHECK(j["order"] == 4);
    CHECK(j["grid"].size() == 4);
    CHECK(square_from_json(j) == L);
    // and through a serialized string
    CHECK(square_from_json(json::parse(j.dump())) == L);
}

TEST_CASE("square JSON rejects malformed grids") {
    json j = {{"order", 3}, {"grid", {{1, 2, 3}, {2, 3, 1}}}};
    CHECK_THROWS_AS(square_from_json(j), std::invalid_argument);
    json bad = {{"order", 2}, {"grid", {{1, 1}, {2, 2}}}};
    CHECK_THROWS_AS(square_from_json(bad), std::invalid_argument);  // not Latin
}

TEST_CASE("pair JSON round trip preserves orthogonality check") {
    OlsPair p = pair3();
    json j = pair_to_json(p);
    CHECK(pair_from_json(j) == p);
    j["second"] = j["first"];  // a square is not orthogonal to itself for k>1
    CHECK_THROWS(pair_from_json(j));
}

TEST_CASE("incidence JSON and text round trips") {
    net::NetIncidence n = net::ols_to_incidence(pair3());
    CHECK(incidence_from_json(incidence_to_json(n)) == n);
    CHECK(incidence_from_text(incidence_to_text(n)) == n);
    CHECK(incidence_to_json(n)["points"].size() == 9);
}

TEST_CASE("classification report JSON shape") {
    equivalence::Classification c = equivalence::classify_ols(3, equivalence::default_budget());
    json j = classification_to_json(c);
    CHECK(j["k"] == 3);
    REQUIRE(j["classes"].size() == 1);
    const json& cl = j["classes"][0];
    CHECK(cl.contains("class_id"));
    CHECK(cl.contains("orbit_size"));
    CHECK(cl.contains("rejected_moves"));
    CHECK(square_from_json(cl["representative"]["first"]).order() == 3);
    std::string csv = classification_to_csv(c);
    CHECK(csv.rfind("class_id,orbit_size\n", 0) == 0);
}

TEST_CASE("certificate JSON round trip verifies") {
    realization::CertificateMatrix cert = realization::hessian_certificate();
    json j = certificate_to_json(cert);
    CHECK(j["modulus"] == "x^2 + x + 1");
    realization::CertificateMatrix back = certificate_from_json(json::parse(j.dump()));
    CHECK(back.modulus == cert.modulus);
    REQUIRE(back.rows.size() == cert.rows.size());
    std::string witness;
    CHECK(realization::verify_certificate(back, net::ols_to_incidence(pair3()), &witness));
}

TEST_CASE("verdict JSON") {
    realization::RealizationVerdict v = realization::decide_realizability(pair3());
    json j = verdict_to_json(3, "c3", v);
    CHECK(j["outcome"] == "Realizable");
    CHECK(j["class_id"] == "c3");
    CHECK(j.contains("certificate"));
    CHECK(!j["trace"].empty());
}

TEST_CASE("ideal JSON round trip") {
    algebra::Ring ring = algebra::make_ring({"r", "t"});
    algebra::Ideal ideal(ring, {algebra::parse_poly(ring, "t^2 + 4*t - 1"),
                                algebra::parse_poly(ring, "3/2*t^2*r - 1")});
    json j = ideal_to_json(ideal);
    CHECK(j["variables"] == json::array({"r", "t"}));
    algebra::Ideal back = ideal_from_json(j);
    CHECK(back.generators == ideal.generators);
}

TEST_CASE("univariate text parsing") {
    CHECK(unipoly_from_text("x^2 + x + 1", "x") ==
          algebra::UniPoly({Rational(1), Rational(1), Rational(1)}));
    CHECK(unipoly_from_text("0", "x").is_zero());
    CHECK(unipoly_from_text("-3/2", "w") == algebra::UniPoly::constant(Rational(-3, 2)));
    CHECK_THROWS(unipoly_from_text("x + y", "x"));
}
