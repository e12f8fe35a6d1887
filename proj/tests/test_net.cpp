#include "doctest.h"

#include <random>

#include "netforge/combinat.hpp"
#include "netforge/equivalence.hpp"
#include "netforge/net.hpp"

using namespace netforge::combinat;
using namespace netforge::net;

namespace {

Permutation cyc(const std::string& s, int k) { return Permutation::from_cycles(s, k); }

OlsPair pair3() {
    return OlsPair(cyclic_square(cyc("(123)", 3)), cyclic_square(cyc("(132)", 3)));
}

OlsPair pair4() {
    std::vector<Permutation> a{cyc("(12)(34)", 4), cyc("(14)(23)", 4), cyc("(12)(34)", 4)};
    std::vector<Permutation> b{cyc("(14)(23)", 4), cyc("(13)(24)", 4), cyc("(14)(23)", 4)};
    return OlsPair(from_permutations(a), from_permutations(b));
}

}  // namespace

TEST_CASE("ols_to_incidence basics") {
    auto n = ols_to_incidence(pair3());
    CHECK(n.k == 3);
    CHECK(n.points.size() == 9);
    CHECK(std::is_sorted(n.points.begin(), n.points.end()));
    CHECK(n.points.front() == ChiPoint{{1, 1, 1, 1}});
    // direct table lookup: chi point (2,3,.,.) carries L1[2][3]=1, L2[2][3]=2
    CHECK(std::count(n.points.begin(), n.points.end(), ChiPoint{{2, 3, 1, 2}}) == 1);

    CHECK(ols_to_incidence(pair4()).points.size() == 16);
}

TEST_CASE("axiom validation") {
    auto n = ols_to_incidence(pair3());
    CHECK(validate_net_axioms(n).pass);

    auto missing = n;
    missing.points.pop_back();
    auto r1 = validate_net_axioms(missing);
    CHECK_FALSE(r1.pass);
    CHECK(r1.failures.front().axiom == "point count");

    auto duplicated = n;
    duplicated.points.back() = duplicated.points.front();
    auto r2 = validate_net_axioms(duplicated);
    CHECK_FALSE(r2.pass);
    bool saw_exactly_one = false;
    for (const auto& f : r2.failures)
        if (f.axiom == "exactly one line (axiom 2)") saw_exactly_one = true;
    CHECK(saw_exactly_one);

    CHECK_THROWS_AS(incidence_to_ols(duplicated), std::invalid_argument);
}

TEST_CASE("round trip on random pairs") {
    // random members of the order-4 class via random accepted moves
    std::mt19937 rng(777);
    auto cur = pair4();
    for (int trial = 0; trial < 50; ++trial) {
        netforge::equivalence::PairMove m;
        m.kind = static_cast<netforge::equivalence::PairMove::Kind>(rng() % 7);
        m.a = static_cast<int>(rng() % 4) + 1;
        m.b = m.a % 4 + 1;
        auto r = netforge::equivalence::apply_pair_move(cur, m);
        if (std::holds_alternative<OlsPair>(r)) cur = std::get<OlsPair>(r);
        CHECK(incidence_to_ols(ols_to_incidence(cur)) == cur);
    }
}

TEST_CASE("relabeling one class maps to an R-move composite") {
    // permuting line labels inside class 3 of chi relabels the first
    // square's symbols: the pairs must be ~'-equivalent
    auto budget = netforge::equivalence::default_budget();
    auto base = pair4();
    auto canon = netforge::equivalence::pair_canonical_form(base, budget);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> relabel{1, 2, 3, 4};
        std::shuffle(relabel.begin(), relabel.end(), rng);
        auto n = ols_to_incidence(base);
        for (auto& x : n.points) x.lines[2] = relabel[x.lines[2] - 1];
        std::sort(n.points.begin(), n.points.end());
        auto back = incidence_to_ols(n);
        CHECK(netforge::equivalence::pair_canonical_form(back, budget) == canon);
    }
}
