// Bridge between orthogonal Latin square pairs and (4,k)-net incidence
// structures: the point set chi, net-axiom validation, and the inverse map.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "netforge/combinat.hpp"

namespace netforge::net {

using combinat::LatinSquare;
using combinat::OlsPair;

// One point of chi: the line chosen from each of the 4 classes.
// Class roles: 1 = rows, 2 = columns, 3 = symbols of the first square,
// 4 = symbols of the second square.
struct ChiPoint {
    std::array<int, 4> lines;  // 1-based line indices
    auto operator<=>(const ChiPoint&) const = default;
};

struct NetIncidence {
    int k = 0;
    std::vector<ChiPoint> points;  // sorted lexicographically, |points| = k^2
    bool operator==(const NetIncidence&) const = default;
};

struct AxiomFailure {
    std::string axiom;     // which condition failed
    int class_a = 0, class_b = 0;
    int line_a = 0, line_b = 0;  // witness (a, b) for pairwise conditions
    std::string detail;
};

struct AxiomReport {
    bool pass = true;
    std::vector<AxiomFailure> failures;
};

// points = {(i, j, L1[i][j], L2[i][j])}, sorted lexicographically.
NetIncidence ols_to_incidence(const OlsPair& p);

// Inverse of ols_to_incidence; throws std::invalid_argument with the
// offending class pair when the net axioms fail.
OlsPair incidence_to_ols(const NetIncidence& n);

AxiomReport validate_net_axioms(const NetIncidence& n);

}  // namespace netforge::net
