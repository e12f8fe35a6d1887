// The relations ~ (S1-S3 on squares) and ~' (R1-R6 on orthogonal pairs):
// move application, orbit BFS, canonical forms, classification of OLS_k/~'.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "netforge/combinat.hpp"

namespace netforge::equivalence {

using combinat::LatinSquare;
using combinat::OlsPair;

struct SquareMove {
    enum class Kind { SwapRows, SwapColumns, SwapSymbols };
    Kind kind;
    int a, b;  // 1-based indices or symbols, a != b
};

LatinSquare apply_square_move(const LatinSquare& L, const SquareMove& m);

struct PairMove {
    enum class Kind {
        SwapRows,          // R1, both squares
        SwapColumns,       // R2, both squares
        SwapSymbolsFirst,  // R3
        SwapSymbolsSecond, // R4
        TransposeFirst,    // R5
        TransposeSecond,   // R5
        SwapSquares        // R6
    };
    Kind kind;
    int a = 0, b = 0;  // unused for transposes and R6
};

std::string to_string(PairMove::Kind kind);

// Rejected moves carry a witness: the ordered symbol pair hit twice by the
// superposition of the would-be result.
struct MoveRejected {
    PairMove move;
    int symbol_first = 0, symbol_second = 0;
};

// Applies the move and re-verifies orthogonality. Only the two R5 variants
// can be rejected; R1-R4 and R6 provably preserve orthogonality.
std::variant<OlsPair, MoveRejected> apply_pair_move(const OlsPair& p, const PairMove& m);

// Lexicographic minimum of the ~-orbit (all row/column/symbol permutations).
// Guarded at k <= 6.
LatinSquare square_canonical_form(const LatinSquare& L);

// W ~ L with first row 1..k and sigma_12(W) = sigma_ij(L) up to cycle type.
LatinSquare conjugate_normalize(const LatinSquare& L, int i, int j);

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t visited)
        : std::runtime_error("orbit budget exceeded after " + std::to_string(visited) + " states"),
          states_visited(visited) {}
    std::uint64_t states_visited;
};

struct OrbitResult {
    std::vector<OlsPair> members;  // sorted
    std::map<std::string, std::uint64_t> rejected_moves;  // move kind -> count
};

// Full reachable set under accepted pair moves (BFS over the generator set:
// adjacent transpositions for R1-R4, both transposes, R6). Throws
// BudgetExceeded if more than `budget` states are visited.
OrbitResult pair_orbit(const OlsPair& p, std::uint64_t budget);

// Minimum of the ~'-orbit; equal outputs <=> same class.
OlsPair pair_canonical_form(const OlsPair& p, std::uint64_t budget);

struct EquivalenceClass {
    OlsPair representative;
    std::uint64_t orbit_size;
    std::string class_id;  // stable hash of the representative
    std::map<std::string, std::uint64_t> rejected_moves;
};

struct Classification {
    int k = 0;
    std::vector<EquivalenceClass> classes;
    std::uint64_t total_pairs = 0;  // |OLS_k|, from the exhaustive sweep
    // k = 5 only: whether (L_(12345), L_(15432)) and (L_(12345), L_(14253))
    // landed in the same class, resolving the 1-vs-2 bound.
    std::optional<bool> candidates_merge;
    std::optional<std::string> resolved_open_bound;
};

// Exhaustive classification of OLS_k/~' for k in {3,4,5}; k = 6 sweeps the
// reduced squares for disjoint decompositions and returns no classes.
Classification classify_ols(int k, std::uint64_t budget);

// 2e7 unless overridden by the NETFORGE_BUDGET environment variable.
std::uint64_t default_budget();

std::string stable_pair_hash(const OlsPair& p);

}  // namespace netforge::equivalence
