#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "netforge/equivalence.hpp"
#include "netforge/net.hpp"
#include "netforge/realization.hpp"

using namespace netforge;
using namespace netforge::realization;
using algebra::AlgebraicElement;
using algebra::MultiPoly;
using algebra::Rational;
using algebra::UniPoly;
using combinat::LatinSquare;
using combinat::OlsPair;
using combinat::Permutation;

namespace {

LatinSquare cyc(const std::string& cycles, int k) {
    return combinat::cyclic_square(Permutation::from_cycles(cycles, k));
}

OlsPair pair3() { return OlsPair(cyc("(123)", 3), cyc("(132)", 3)); }

OlsPair pair4() {
    auto L1 = LatinSquare::from_grid(4, {1, 2, 3, 4, 2, 1, 4, 3, 3, 4, 1, 2, 4, 3, 2, 1});
    auto L2 = LatinSquare::from_grid(4, {1, 2, 3, 4, 4, 3, 2, 1, 2, 1, 4, 3, 3, 4, 1, 2});
    return OlsPair(L1, L2);
}

bool trace_has(const std::vector<std::string>& trace, const std::string& needle) {
    return std::any_of(trace.begin(), trace.end(), [&](const std::string& line) {
        return line.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("minor system: shape and fixed rows") {
    auto chi = net::ols_to_incidence(pair3());
    MinorSystem sys = build_minor_system(chi);
    CHECK(sys.matrix.k == 3);
    REQUIRE(sys.matrix.rows.size() == 12);
    // rows 1-3 and k+1 carry the fixed normalization B
    auto is_const_row = [&](int r, int a, int b, int c) {
        Rational va, vb, vc;
        return sys.matrix.rows[r][0].is_constant(&va) && va == a &&
               sys.matrix.rows[r][1].is_constant(&vb) && vb == b &&
               sys.matrix.rows[r][2].is_constant(&vc) && vc == c;
    };
    CHECK(is_const_row(0, 1, 0, 0));
    CHECK(is_const_row(1, 0, 1, 0));
    CHECK(is_const_row(2, 0, 0, 1));
    CHECK(is_const_row(3, 1, 1, 1));
    // every other row is a fresh variable triple
    for (int r = 4; r < 12; ++r)
        for (int j = 0; j < 3; ++j) CHECK(sys.matrix.rows[r][j].total_degree() == 1);
    // 9 points x 4 minors, minus duplicates and identically-zero minors
    CHECK(!sys.minors.empty());
    CHECK(sys.minors.size() <= 36);
    std::set<MultiPoly> dedup(sys.minors.begin(), sys.minors.end());
    CHECK(dedup.size() == sys.minors.size());
    // each minor is multilinear in the row variables
    for (const MultiPoly& m : sys.minors)
        for (size_t v = 0; v < m.n_vars(); ++v) CHECK(m.degree_in(v) <= 1);
}

TEST_CASE("minor system vanishes at the Hessian certificate") {
    auto chi = net::ols_to_incidence(pair3());
    MinorSystem sys = build_minor_system(chi);
    CertificateMatrix cert = hessian_certificate();
    REQUIRE(cert.rows.size() == 12);
    std::vector<AlgebraicElement> vals(sys.matrix.ring->size(),
                                       AlgebraicElement::from_rational(0, cert.modulus));
    for (int r = 0; r < 12; ++r)
        for (int j = 0; j < 3; ++j) vals[3 * r + j] = cert.rows[r][j];
    for (const MultiPoly& m : sys.minors) CHECK(algebra::evaluate(m, vals).is_zero());
}

TEST_CASE("minor system for k=4 covers all 16 points") {
    auto chi = net::ols_to_incidence(pair4());
    REQUIRE(chi.points.size() == 16);
    MinorSystem sys = build_minor_system(chi);
    CHECK(sys.matrix.rows.size() == 16);
    CHECK(!sys.minors.empty());
    CHECK(sys.minors.size() <= 64);
}

TEST_CASE("propagation: k=4 branch tree") {
    auto chi = net::ols_to_incidence(pair4());
    PropagationResult prop = propagate_lines(chi);
    REQUIRE(!prop.branches.empty());
    // labels are depth-first and unique
    std::vector<std::string> labels;
    for (const auto& br : prop.branches) labels.push_back(br.label);
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::set<std::string>(labels.begin(), labels.end()).size() == labels.size());
    CHECK(labels == sorted);
    bool any_open = false;
    for (const auto& br : prop.branches) {
        CHECK(trace_has(br.trace, "rows of B fixed"));
        if (br.closed) {
            CHECK(!br.closed_reason.empty());
            CHECK(br.residual.empty());
        } else {
            any_open = true;
            // all 16 lines determined, residual reported in the trace
            CHECK(br.lines.rows.size() == 16);
            CHECK(!br.residual.empty());
            CHECK(trace_has(br.trace, "residual system:"));
        }
    }
    CHECK(any_open);
}

TEST_CASE("propagation records degenerations instead of failing") {
    auto chi = net::ols_to_incidence(pair4());
    PropagationResult prop = propagate_lines(chi);
    bool any_closed = false;
    for (const auto& br : prop.branches)
        if (br.closed) {
            any_closed = true;
            CHECK(trace_has(br.trace, "branch closed"));
        }
    CHECK(any_closed);
}

TEST_CASE("k=3 is realizable with a verified quadratic-extension certificate") {
    RealizationVerdict v = decide_realizability(pair3());
    CHECK(v.outcome == Outcome::Realizable);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->modulus.degree() == 2);
    CHECK(algebra::is_irreducible(v.certificate->modulus));
    std::string witness;
    CHECK(verify_certificate(*v.certificate, net::ols_to_incidence(pair3()), &witness));
    CHECK(trace_has(v.trace, "certificate verified"));
}

TEST_CASE("k=4 realization space is empty, closed by a trivial univariate gcd") {
    RealizationVerdict v = decide_realizability(pair4());
    CHECK(v.outcome == Outcome::Empty);
    CHECK(!v.certificate.has_value());
    CHECK(trace_has(v.trace, "residual system:"));
    // a pair (in fact a family) of univariate conditions with gcd 1
    CHECK(trace_has(v.trace, ") = 1"));
    CHECK(trace_has(v.trace, "no common root in any extension"));
}

TEST_CASE("k=5 candidate (12345,15432): empty via degenerate t in {0,1}") {
    RealizationVerdict v =
        decide_realizability(OlsPair(cyc("(12345)", 5), cyc("(15432)", 5)));
    CHECK(v.outcome == Outcome::Empty);
    CHECK(trace_has(v.trace, "t11 = 0"));
    CHECK(trace_has(v.trace, "t11 = 1"));
    CHECK(trace_has(v.trace, "rational point rejected"));
}

TEST_CASE("k=5 candidate (12345,14253): empty via gcd = t-1 and degeneracy at 1") {
    RealizationVerdict v =
        decide_realizability(OlsPair(cyc("(12345)", 5), cyc("(14253)", 5)));
    CHECK(v.outcome == Outcome::Empty);
    CHECK(trace_has(v.trace, "= t16 - 1"));
    CHECK(trace_has(v.trace, "t16 = 1"));
    CHECK(trace_has(v.trace, "rational point rejected"));
}

TEST_CASE("orders above 5 are rejected") {
    OlsPair p7(cyc("(1234567)", 7), cyc("(1357246)", 7));
    CHECK_THROWS_AS(decide_realizability(p7), std::invalid_argument);
}

TEST_CASE("hessian certificate") {
    CertificateMatrix cert = hessian_certificate();
    CHECK(cert.k == 3);
    REQUIRE(cert.rows.size() == 12);
    // modulus x^2 + x + 1 (primitive cube root of unity)
    CHECK(cert.modulus == UniPoly({Rational(1), Rational(1), Rational(1)}));
    std::string witness;
    CHECK(verify_certificate(cert, net::ols_to_incidence(pair3()), &witness));
}

TEST_CASE("verify_certificate rejects corrupted matrices") {
    auto chi = net::ols_to_incidence(pair3());
    SUBCASE("perturbed entry breaks a minor") {
        CertificateMatrix cert = hessian_certificate();
        cert.rows[7][1] = cert.rows[7][1] + AlgebraicElement::from_rational(1, cert.modulus);
        std::string witness;
        CHECK(!verify_certificate(cert, chi, &witness));
        CHECK(!witness.empty());
    }
    SUBCASE("duplicated row is rejected") {
        CertificateMatrix cert = hessian_certificate();
        cert.rows[5] = cert.rows[4];
        std::string witness;
        CHECK(!verify_certificate(cert, chi, &witness));
        CHECK(!witness.empty());
    }
    SUBCASE("coincident lines are a distinctness witness") {
        // rank-1 matrix: every minor vanishes, but all lines coincide
        UniPoly modulus({algebra::Rational(0), algebra::Rational(1)});  // x, models Q
        auto one = AlgebraicElement::from_rational(1, modulus);
        CertificateMatrix cert{3, modulus, std::vector<FieldVec>(12, FieldVec{one, one, one})};
        std::string witness;
        CHECK(!verify_certificate(cert, chi, &witness));
        CHECK(witness.find("coincident lines") != std::string::npos);
    }
    SUBCASE("zero row") {
        CertificateMatrix cert = hessian_certificate();
        auto zero = AlgebraicElement::from_rational(0, cert.modulus);
        cert.rows[9] = {zero, zero, zero};
        std::string witness;
        CHECK(!verify_certificate(cert, chi, &witness));
        CHECK(witness.find("zero vector") != std::string::npos);
    }
    SUBCASE("reducible modulus throws") {
        CertificateMatrix cert = hessian_certificate();
        cert.modulus = UniPoly({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
        CHECK_THROWS_AS(verify_certificate(cert, chi, nullptr), std::invalid_argument);
    }
}

TEST_CASE("verdict is invariant under net-equivalence moves") {
    using equivalence::PairMove;
    auto moved = [](const OlsPair& p, const std::vector<PairMove>& ms) {
        OlsPair q = p;
        for (const PairMove& m : ms) {
            auto r = equivalence::apply_pair_move(q, m);
            REQUIRE(std::holds_alternative<OlsPair>(r));
            q = std::get<OlsPair>(r);
        }
        return q;
    };
    std::vector<PairMove> ms{{PairMove::Kind::SwapSquares},
                             {PairMove::Kind::SwapRows, 1, 2},
                             {PairMove::Kind::SwapSymbolsFirst, 2, 3}};
    CHECK(decide_realizability(moved(pair3(), ms)).outcome == Outcome::Realizable);
    CHECK(decide_realizability(moved(pair4(), ms)).outcome == Outcome::Empty);
}
