#include "doctest.h"

#include <algorithm>
#include <set>

#include "netforge/combinat.hpp"

using namespace netforge::combinat;

namespace {

Permutation cyc(const std::string& s, int k) { return Permutation::from_cycles(s, k); }

LatinSquare square_L1() {
    std::vector<Permutation> s{cyc("(12)(34)", 4), cyc("(14)(23)", 4), cyc("(12)(34)", 4)};
    return from_permutations(s);
}
LatinSquare square_L2() {
    std::vector<Permutation> s{cyc("(14)(23)", 4), cyc("(13)(24)", 4), cyc("(14)(23)", 4)};
    return from_permutations(s);
}
LatinSquare square_L3() {
    std::vector<Permutation> s{cyc("(13)(24)", 4), cyc("(12)(34)", 4), cyc("(13)(24)", 4)};
    return from_permutations(s);
}

std::vector<LatinSquare> all_squares(int k) {
    std::vector<LatinSquare> v;
    enumerate_latin(k, false, [&](const LatinSquare& L) { v.push_back(L); });
    return v;
}

}  // namespace

TEST_CASE("permutation basics") {
    auto p = cyc("(1 2 3)", 5);
    CHECK(p.image(1) == 2);
    CHECK(p.image(3) == 1);
    CHECK(p.image(4) == 4);
    CHECK(p.compose(p.inverse()).is_identity());
    CHECK(cyc("(123)", 3) == cyc("(1 2 3)", 3));
    CHECK(p.cycle_string() == "(1 2 3)");

    // group axioms on a few fixed triples
    auto a = cyc("(12345)", 5), b = cyc("(12)(345)", 5), c = cyc("(254)", 5);
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    CHECK(a.compose(Permutation(5)) == a);
}

TEST_CASE("cycle_type") {
    CHECK(cycle_type(cyc("(15)(236)(49)", 9)).parts == std::vector<int>{2, 2, 3});
    CHECK(cycle_type(Permutation(4)).parts.empty());
    CHECK(cycle_type(cyc("(12345)", 5)).parts == std::vector<int>{5});
}

TEST_CASE("cyclic_square and row_permutation") {
    auto L = cyclic_square(cyc("(123)", 3));
    CHECK(L.flat() == std::vector<int>{1, 2, 3, 2, 3, 1, 3, 1, 2});
    CHECK(row_permutation(L, 1, 2) == cyc("(123)", 3));

    auto L1 = square_L1();
    CHECK(L1.flat() == std::vector<int>{1, 2, 3, 4, 2, 1, 4, 3, 3, 4, 1, 2, 4, 3, 2, 1});
    CHECK(row_permutation(L1, 1, 2) == cyc("(12)(34)", 4));
    CHECK(row_permutation(L1, 2, 1) == row_permutation(L1, 1, 2).inverse());
    CHECK_THROWS(row_permutation(L1, 2, 2));

    // main diagonal of L_(12345) reads 1,3,5,2,4
    auto C5 = cyclic_square(cyc("(12345)", 5));
    std::vector<int> diag;
    for (int i = 1; i <= 5; ++i) diag.push_back(C5.at(i, i));
    CHECK(diag == std::vector<int>{1, 3, 5, 2, 4});

    // even k: the diagonal repeats odd symbols
    auto C4 = cyclic_square(cyc("(1234)", 4));
    for (int i = 1; i <= 4; ++i) CHECK(C4.at(i, i) % 2 == 1);

    CHECK_THROWS(cyclic_square(cyc("(12)(34)", 4)));
}

TEST_CASE("from_permutations") {
    std::vector<Permutation> rep(4, cyc("(12345)", 5));
    CHECK(from_permutations(rep) == cyclic_square(cyc("(12345)", 5)));

    std::vector<Permutation> one{cyc("(12)(345)", 5)};
    // only the first step of an order-5 square: row 2 under (12)(345)
    auto partial = cyc("(12)(345)", 5);
    std::vector<int> row2;
    for (int c = 1; c <= 5; ++c) row2.push_back(partial.image(c));
    CHECK(row2 == std::vector<int>{2, 1, 4, 5, 3});

    // inconsistent sequence is rejected
    std::vector<Permutation> bad(4, cyc("(12)(345)", 5));
    CHECK_THROWS_WITH_AS(from_permutations(bad), "inconsistent permutation sequence",
                         std::invalid_argument);
}

TEST_CASE("orthogonality") {
    auto A = cyclic_square(cyc("(123)", 3));
    auto B = cyclic_square(cyc("(132)", 3));
    CHECK(are_orthogonal(A, B));
    CHECK(are_orthogonal(B, A));
    CHECK_FALSE(are_orthogonal(A, A));
    CHECK(are_orthogonal(cyclic_square(cyc("(12345)", 5)), cyclic_square(cyc("(14253)", 5))));
    CHECK(are_orthogonal(square_L1(), square_L2()));
    CHECK(are_orthogonal(square_L2(), square_L3()));
    CHECK(are_orthogonal(square_L1(), square_L3()));
}

TEST_CASE("transversals") {
    CHECK(find_transversals(cyclic_square(cyc("(1234)", 4))).empty());
    CHECK(find_transversals(cyclic_square(cyc("(123)", 3))).size() == 3);
    CHECK(find_transversals(cyclic_square(cyc("(123456)", 6))).empty());

    auto ts = find_transversals(cyclic_square(cyc("(12345)", 5)));
    CHECK(std::is_sorted(ts.begin(), ts.end()));
}

TEST_CASE("disjoint decompositions") {
    CHECK(disjoint_decomposition(cyclic_square(cyc("(12345)", 5))).has_value());
    CHECK_FALSE(disjoint_decomposition(cyclic_square(cyc("(1234)", 4))).has_value());

    // any order-5 square with sigma_12 = (12)(345) has no decomposition
    auto target = cyc("(12)(345)", 5);
    int found = 0;
    enumerate_latin(5, true, [&](const LatinSquare& L) {
        if (row_permutation(L, 1, 2) == target) {
            ++found;
            CHECK_FALSE(disjoint_decomposition(L).has_value());
        }
    });
    CHECK(found > 0);
}

TEST_CASE("orthogonal mates") {
    auto C5 = cyclic_square(cyc("(12345)", 5));
    auto mates = orthogonal_mates(C5, true);
    std::set<LatinSquare> expected{cyclic_square(cyc("(15432)", 5)),
                                   cyclic_square(cyc("(14253)", 5)),
                                   cyclic_square(cyc("(13524)", 5))};
    CHECK(std::set<LatinSquare>(mates.begin(), mates.end()) == expected);

    CHECK(orthogonal_mates(cyclic_square(cyc("(123456)", 6)), false).empty());

    auto full = orthogonal_mates(square_L1(), false);
    CHECK(std::count(full.begin(), full.end(), square_L2()) == 1);
    CHECK(std::count(full.begin(), full.end(), square_L3()) == 1);
    for (const auto& m : full) CHECK(are_orthogonal(square_L1(), m));
}

TEST_CASE("enumeration counts") {
    CHECK(count_latin(3, false) == 12);
    CHECK(count_latin(4, false) == 576);
    CHECK(count_latin(6, true) == 9408);
}

TEST_CASE("enumeration order and validity") {
    auto sq = all_squares(3);
    CHECK(sq.size() == 12);
    CHECK(std::is_sorted(sq.begin(), sq.end(),
                         [](const LatinSquare& a, const LatinSquare& b) { return a.flat() < b.flat(); }));
}

TEST_CASE("cocycle identity and fixed-point freeness") {
    for (const auto& L : all_squares(4)) {
        auto s12 = row_permutation(L, 1, 2);
        auto s23 = row_permutation(L, 2, 3);
        auto s13 = row_permutation(L, 1, 3);
        CHECK(s23.compose(s12) == s13);
        CHECK(s12.is_fixed_point_free());
    }
}

TEST_CASE("mate existence matches decompositions (order 4, exhaustive)") {
    for (const auto& L : all_squares(4)) {
        bool by_cover = disjoint_decomposition(L).has_value();
        bool by_mates = !orthogonal_mates(L, true).empty();
        CHECK(by_cover == by_mates);
    }
}

TEST_CASE("cyclic transversal law (Lemma, assertion 2)") {
    for (int k : {3, 5, 7}) {
        std::vector<int> images(k);
        for (int i = 0; i < k; ++i) images[i] = (i + 1) % k + 1;
        auto L = cyclic_square(Permutation::from_images(images));
        bool has_one = !find_transversals(L).empty();
        bool has_all = disjoint_decomposition(L).has_value();
        CHECK(has_one == has_all);
        CHECK(has_one);
    }
}

TEST_CASE("text round trip") {
    auto L = square_L1();
    CHECK(LatinSquare::from_text(L.to_text()) == L);
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS(enumerate_latin(7, false, [](const LatinSquare&) {}));
    CHECK_THROWS(enumerate_latin(7, true, [](const LatinSquare&) {}));
}
