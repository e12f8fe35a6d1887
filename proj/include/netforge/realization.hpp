// Realizability of a (4,k)-net incidence as lines in CP^2: symbolic line
// matrices normalized by B, point-by-point propagation, exact solving of
// the residual minor system, and certificate verification over Q[x]/(m).
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "netforge/combinat.hpp"
#include "netforge/groebner.hpp"
#include "netforge/multipoly.hpp"
#include "netforge/net.hpp"

namespace netforge::realization {

using SymVec = std::array<algebra::MultiPoly, 3>;
using FieldVec = std::array<algebra::AlgebraicElement, 3>;

// 4k x 3 symbolic line matrix in 4 blocks of k rows (classes in order:
// rows, columns, symbols of the first square, symbols of the second).
// Rows 1-3 and k+1 are fixed to B = [(1,0,0),(0,1,0),(0,0,1),(1,1,1)].
struct SymLineMatrix {
    int k = 0;
    algebra::Ring ring;
    std::vector<SymVec> rows;  // size 4k
};

struct MinorSystem {
    SymLineMatrix matrix;  // unknown rows carry fresh variables a_r, b_r, c_r
    // all four 3x3 minors of each chi point's row block, content-normalized
    // and deduplicated, in lexicographic point order
    std::vector<algebra::MultiPoly> minors;
};

MinorSystem build_minor_system(const net::NetIncidence& n);

// One leaf of the propagation branch tree.
struct PropagationBranch {
    std::string label;  // decision digits along the DFS path, "-" for none
    SymLineMatrix lines;
    std::vector<algebra::MultiPoly> residual;  // in the surviving parameters
    std::vector<std::string> trace;
    bool closed = false;  // degeneration during propagation
    std::string closed_reason;
};

struct PropagationResult {
    algebra::Ring ring;  // parameter ring shared by all branches
    std::vector<PropagationBranch> branches;  // depth-first, lex label order
};

PropagationResult propagate_lines(const net::NetIncidence& n);

// Concrete line matrix over Q[x]/(modulus); a degree-1 modulus models Q.
struct CertificateMatrix {
    int k = 0;
    algebra::UniPoly modulus;
    std::vector<FieldVec> rows;  // size 4k
};

enum class Outcome { Realizable, Empty, Unknown };

struct RealizationVerdict {
    Outcome outcome = Outcome::Unknown;
    std::optional<CertificateMatrix> certificate;  // set iff Realizable
    std::vector<std::string> trace;
    std::string reason;  // set iff Unknown
};

// Full decision for a pair of orthogonal Latin squares, k <= 5.
RealizationVerdict decide_realizability(const combinat::OlsPair& p);

// Order-level decision when no pair is available: sweeps all reduced
// squares of order k for orthogonal mates and returns Empty when none
// exists (the k = 6 case). Throws std::logic_error if a mate is found.
RealizationVerdict decide_realizability_empty_order(int k);

// true iff every chi minor vanishes, all 4k lines are pairwise
// projectively distinct, and the realized incidence equals chi exactly.
// Throws std::invalid_argument when the modulus is not irreducible.
bool verify_certificate(const CertificateMatrix& m, const net::NetIncidence& n,
                        std::string* witness = nullptr);

// The Hessian line matrix over Q[x]/(x^2+x+1): B followed by the lines
// (1, w^i, w^j), with the class assignment searched so the matrix passes
// verification against the OLS_3 representative's incidence.
CertificateMatrix hessian_certificate();

}  // namespace netforge::realization
